// Unit tests for the p-adic / combinatorial arithmetic layer and the
// coefficient-ring plumbing.  Everything here is exact; expected values are
// either tiny hand computations or cross-checked against a second method in
// the same test (e.g. Legendre's formula vs. direct factorial factoring).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "msym/arith.hpp"
#include "msym/ring.hpp"

using namespace msym;

TEST_CASE("digit polynomials: construction, arithmetic, rendering") {
    CHECK(DigitPoly().is_zero());
    CHECK(DigitPoly({0, 0}).is_zero());           // trailing zeros trimmed
    CHECK(DigitPoly({1, 1}).degree() == 1);       // t + 1
    CHECK(DigitPoly({1, 0, 2}).coeff(2) == 2);
    CHECK(DigitPoly({1, 0, 2}).coeff(5) == 0);

    const DigitPoly p({1, 2});   // 2t + 1
    const DigitPoly q({0, 0, 1}); // t^2
    CHECK((p + q) == DigitPoly({1, 2, 1}));
    CHECK(p.shifted(2) == DigitPoly({0, 0, 1, 2}));
    CHECK(p.eval(10) == 21);
    CHECK(q.eval(7) == 49);

    CHECK(DigitPoly({1, 2}).str() == "2t + 1");
    CHECK(DigitPoly({0, 0, 1}).str() == "t^2");
    CHECK(DigitPoly().str() == "0");

    CHECK_THROWS_AS(DigitPoly({-1}), std::invalid_argument);
}

TEST_CASE("primality by trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(4));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("multinomial coefficients ((nu))") {
    CHECK(multinomial(std::vector<long>{2}) == 1);
    CHECK(multinomial(std::vector<long>{1, 1}) == 2);
    CHECK(multinomial(std::vector<long>{2, 1}) == 3);
    CHECK(multinomial(std::vector<long>{2, 2}) == 6);
    CHECK(multinomial(std::vector<long>{3, 2}) == 10);
    CHECK(multinomial(std::vector<long>{1, 1, 1}) == 6);
    CHECK(multinomial(std::vector<long>{2, 0, 1}) == 3);  // zeros drop out
    CHECK(multinomial(ExpVec{1, 1, 1, 1}) == 24);
    // ((10,10,10)): big enough to need arbitrary precision.
    CHECK(multinomial(std::vector<long>{10, 10, 10}) ==
          mpz_class("5550996791340"));
    CHECK_THROWS_AS(multinomial(std::vector<long>{}), std::invalid_argument);
    CHECK_THROWS_AS(multinomial(std::vector<long>{-1, 2}),
                    std::invalid_argument);
}

TEST_CASE("p-adic valuations of integers and rationals") {
    CHECK(ord_p(mpz_class(8), 2) == 3);
    CHECK(ord_p(mpz_class(18), 3) == 2);
    CHECK(ord_p(mpz_class(-12), 2) == 2);
    CHECK(ord_p(mpz_class(7), 2) == 0);
    CHECK(ord_p(mpq_class(5, 8), 2) == -3);
    CHECK(ord_p(mpq_class(9, 2), 3) == 2);
    CHECK_THROWS_WITH_AS(ord_p(mpz_class(0), 2), "valuation of zero undefined",
                         std::domain_error);
    CHECK(valuate(mpz_class(24), 2).value == 3);
    CHECK(valuate(mpz_class(24), 2).p == 2);
}

TEST_CASE("Legendre's formula vs direct factorial factoring") {
    CHECK(legendre(4, 2) == 3);    // 4! = 24
    CHECK(legendre(10, 3) == 4);   // digits of 10 base 3 are 101
    CHECK(legendre(0, 5) == 0);
    for (long p : {2L, 3L, 5L, 7L}) {
        mpz_class factorial = 1;
        for (long n = 1; n <= 30; ++n) {
            factorial *= n;
            CHECK(legendre(n, p) == ord_p(factorial, p));
        }
    }
}

TEST_CASE("base-p digit expansions and vector digit sums") {
    CHECK(digits(0, 2).is_zero());
    CHECK(digits(6, 2) == DigitPoly({0, 1, 1}));    // 110
    CHECK(digits(10, 3) == DigitPoly({1, 0, 1}));   // 101
    CHECK(digits(49, 7) == DigitPoly({0, 0, 1}));   // t^2
    // Every digit below p, and eval(p) recovers n.
    for (long p : {2L, 3L, 5L}) {
        for (long n = 0; n <= 200; ++n) {
            const DigitPoly q = digits(n, p);
            for (long c : q.coeffs()) CHECK(c < p);
            CHECK(q.eval(p) == n);
        }
    }
    CHECK(digit_sum_vec({2, 2}, 2) == DigitPoly({0, 2}));      // 2t
    CHECK(digit_sum_vec({3, 2}, 2) == DigitPoly({1, 2}));      // 2t + 1
    CHECK(digit_sum_vec({1, 1, 1, 1}, 2) == DigitPoly({4}));   // 4
}

TEST_CASE("eventual-evaluation comparison of digit polynomials") {
    CHECK(poly_cmp(DigitPoly({4}), DigitPoly({1, 1})) == Ordering::Less);
    CHECK(poly_cmp(DigitPoly({0, 2}), DigitPoly({1, 1})) == Ordering::Greater);
    CHECK(poly_cmp(DigitPoly({0, 0, 1}), DigitPoly({0, 0, 1})) ==
          Ordering::Equal);
    CHECK(poly_cmp(DigitPoly(), DigitPoly()) == Ordering::Equal);

    // Agreement with actual evaluation at a point beyond any crossover:
    // for coefficients <= M and degree <= D the sign of P - Q at
    // n0 = M*(D+1)+1 equals the eventual sign.
    const long M = 9, D = 5;
    const mpz_class n0 = M * (D + 1) + 1;
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<long> coeff_dist(0, M);
    std::uniform_int_distribution<int> deg_dist(0, D);
    for (int trial = 0; trial < 500; ++trial) {
        auto draw = [&] {
            std::vector<long> cs(static_cast<size_t>(deg_dist(rng)) + 1);
            for (long& c : cs) c = coeff_dist(rng);
            return DigitPoly(cs);
        };
        const DigitPoly P = draw(), Q = draw();
        const mpz_class diff = P.eval(n0) - Q.eval(n0);
        const Ordering want = diff < 0    ? Ordering::Less
                              : diff == 0 ? Ordering::Equal
                                          : Ordering::Greater;
        CHECK(poly_cmp(P, Q) == want);
    }
}

TEST_CASE("carry-free addition detects vanishing multinomial valuation") {
    CHECK(carry_free({1, 2}, 2));        // 01 + 10 = 11, no carry
    CHECK_FALSE(carry_free({1, 1}, 2));  // 1 + 1 carries
    CHECK_FALSE(carry_free({3, 2}, 2));
    CHECK(ord_p(multinomial(ExpVec{3, 2}), 2) == 1);
}

// Kummer/Legendre consistency: ord_p((nu)) equals the carry count, i.e.
// (sum of digit sums of the parts minus digit sum of the total) / (p-1).
static void for_each_composition(int total, int r,
                                 const std::function<void(const ExpVec&)>& f) {
    ExpVec current(static_cast<size_t>(r), 0);
    const std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == r - 1) {
            current[static_cast<size_t>(pos)] = left;
            f(current);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            current[static_cast<size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

TEST_CASE("multinomial valuation via digit sums, exhaustively to |nu| = 12") {
    for (long p : {2L, 3L, 5L}) {
        for (int total = 1; total <= 12; ++total) {
            for (int r = 1; r <= 4; ++r) {
                for_each_composition(total, r, [&](const ExpVec& nu) {
                    const mpz_class base = multinomial(nu);
                    const mpz_class lhs = digit_sum_vec(nu, p).eval(1) -
                                          digits(total, p).eval(1);
                    CHECK(ord_p(base, p) * (p - 1) == lhs);

                    // Scaling all parts by p^s shifts every digit and
                    // preserves the carries: ord_p((p^s nu)) = ord_p((nu)).
                    for (int s = 1; s <= 2; ++s) {
                        ExpVec scaled = nu;
                        long factor = 1;
                        for (int i = 0; i < s; ++i) factor *= p;
                        for (int& v : scaled) v = static_cast<int>(v * factor);
                        CHECK(ord_p(multinomial(scaled), p) == ord_p(base, p));
                    }

                    // Vanishing valuation <=> digit polynomials agree
                    // <=> carry-free addition.
                    const bool zero_val = ord_p(base, p) == 0;
                    CHECK(zero_val == (poly_cmp(digit_sum_vec(nu, p),
                                                digits(total, p)) ==
                                       Ordering::Equal));
                    CHECK(zero_val == carry_free(nu, p));
                });
            }
        }
    }
}

TEST_CASE("exponent vector helpers") {
    CHECK(total_degree({2, 0, 3}) == 5);
    CHECK(total_degree({}) == 0);
    CHECK(gcd_vec({4, 6}) == 2);
    CHECK(gcd_vec({3, 5}) == 1);
    CHECK(gcd_vec({0, 7}) == 7);
    CHECK(is_zero_vec({0, 0}));
    CHECK_FALSE(is_zero_vec({0, 1}));
    CHECK(add_vec({1, 2}, {3, 0}) == ExpVec{4, 2});
    CHECK(leq_vec({1, 2}, {1, 3}));
    CHECK_FALSE(leq_vec({2, 0}, {1, 3}));
}

TEST_CASE("ring specs: parsing, normalization, inverses") {
    const RingSpec zz = RingSpec::integers();
    const RingSpec qq = RingSpec::rationals();
    const RingSpec f5 = RingSpec::prime_field(5);

    CHECK(RingSpec::parse("Z") == zz);
    CHECK(RingSpec::parse("Q") == qq);
    CHECK(RingSpec::parse("Fp:5") == f5);
    CHECK_THROWS_WITH_AS(RingSpec::parse("R"), "malformed ring spec: R",
                         std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::parse("Fp:6"), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::prime_field(1), std::invalid_argument);

    CHECK(zz.str() == "Z");
    CHECK(qq.str() == "Q");
    CHECK(f5.str() == "Fp:5");
    CHECK_FALSE(zz.is_field());
    CHECK(qq.is_field());
    CHECK(f5.is_field());

    // Normalization: integers reject true fractions, F_p folds into {0..p-1}.
    CHECK(zz.normalize(mpq_class(-7)) == -7);
    CHECK_THROWS_WITH_AS(zz.normalize(mpq_class(1, 2)),
                         "non-integral coefficient over the integers: 1/2",
                         std::domain_error);
    CHECK(qq.normalize(mpq_class(3, 6)) == mpq_class(1, 2));
    CHECK(f5.normalize(mpq_class(7)) == 2);
    CHECK(f5.normalize(mpq_class(-1)) == 4);
    CHECK(f5.normalize(mpq_class(1, 2)) == 3);  // 2^{-1} = 3 mod 5
    CHECK_THROWS_WITH_AS(f5.normalize(mpq_class(1, 10)),
                         "denominator divisible by the characteristic: 1/10",
                         std::domain_error);

    CHECK(qq.inverse(mpq_class(-2, 3)) == mpq_class(-3, 2));
    CHECK(f5.inverse(mpq_class(3)) == 2);
    CHECK_THROWS_WITH_AS(f5.inverse(mpq_class(0)), "inverse of zero",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(zz.inverse(mpq_class(2)), "inverse requires a field",
                         std::invalid_argument);

    CHECK(f5.add(mpq_class(3), mpq_class(4)) == 2);
    CHECK(f5.mul(mpq_class(2), mpq_class(4)) == 3);
    CHECK(f5.neg(mpq_class(2)) == 3);
    CHECK(zz.sub(mpq_class(1), mpq_class(4)) == -3);
    CHECK(RingSpec::is_zero(mpq_class(0)));
}

TEST_CASE("coefficient string round trip") {
    CHECK(coeff_str(mpq_class(-5)) == "-5");
    CHECK(coeff_str(mpq_class(22, 7)) == "22/7");
    CHECK(coeff_parse("22/7") == mpq_class(22, 7));
    CHECK(coeff_parse("-5") == mpq_class(-5));
    CHECK(coeff_parse("4/6") == mpq_class(2, 3));  // canonicalized
    CHECK_THROWS_WITH_AS(coeff_parse("x"), "malformed coefficient: x",
                         std::invalid_argument);
}
