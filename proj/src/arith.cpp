#include "msym/arith.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msym {

DigitPoly::DigitPoly(std::vector<long> coeffs) : coeffs_(std::move(coeffs)) {
    for (long c : coeffs_) {
        if (c < 0) throw std::invalid_argument("DigitPoly: negative coefficient");
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long DigitPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

mpz_class DigitPoly::eval(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

DigitPoly DigitPoly::operator+(const DigitPoly& other) const {
    std::vector<long> sum(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) sum[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) sum[i] += other.coeffs_[i];
    return DigitPoly(std::move(sum));
}

DigitPoly DigitPoly::shifted(int s) const {
    if (is_zero()) return DigitPoly();
    std::vector<long> out(coeffs_.size() + static_cast<size_t>(s), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i + s] = coeffs_[i];
    return DigitPoly(std::move(out));
}

std::string DigitPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        long c = coeff(i);
        if (c == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

mpz_class multinomial(const std::vector<long>& nu) {
    if (nu.empty()) throw std::invalid_argument("multinomial: empty entry list");
    // ((nu)) = prod_i binom(nu_1 + ... + nu_i, nu_i): each factor exact,
    // never larger than the final value.
    mpz_class result = 1;
    unsigned long partial = 0;
    for (long n : nu) {
        if (n < 0) throw std::invalid_argument("multinomial: negative entry");
        partial += static_cast<unsigned long>(n);
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), partial, static_cast<unsigned long>(n));
        result *= binom;
    }
    return result;
}

mpz_class multinomial(const ExpVec& alpha) {
    std::vector<long> entries(alpha.begin(), alpha.end());
    return multinomial(entries);
}

long ord_p(const mpz_class& n, long p) {
    if (n == 0) throw std::domain_error("valuation of zero undefined");
    mpz_class m = abs(n);
    long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        ++e;
    }
    return e;
}

long ord_p(const mpq_class& q, long p) {
    if (q == 0) throw std::domain_error("valuation of zero undefined");
    return ord_p(mpz_class(q.get_num()), p) - ord_p(mpz_class(q.get_den()), p);
}

Valuation valuate(const mpz_class& n, long p) { return Valuation{ord_p(n, p), p}; }

long legendre(long n, long p) {
    if (n < 0) throw std::invalid_argument("legendre: negative argument");
    // ord_p(n!) = (n - Q_p(n)(1)) / (p - 1); the digit sum makes this exact.
    long digit_sum = 0;
    for (long m = n; m > 0; m /= p) digit_sum += m % p;
    return (n - digit_sum) / (p - 1);
}

DigitPoly digits(long n, long p) {
    if (n < 0) throw std::invalid_argument("digits: negative argument");
    std::vector<long> cs;
    for (long m = n; m > 0; m /= p) cs.push_back(m % p);
    return DigitPoly(std::move(cs));
}

DigitPoly digit_sum_vec(const ExpVec& alpha, long p) {
    DigitPoly sum;
    for (int a : alpha) sum = sum + digits(a, p);
    return sum;
}

Ordering poly_cmp(const DigitPoly& P, const DigitPoly& Q) {
    int top = std::max(P.degree(), Q.degree());
    for (int i = top; i >= 0; --i) {
        long diff = P.coeff(i) - Q.coeff(i);
        if (diff > 0) return Ordering::Greater;
        if (diff < 0) return Ordering::Less;
    }
    return Ordering::Equal;
}

bool carry_free(const ExpVec& alpha, long p) {
    return poly_cmp(digit_sum_vec(alpha, p), digits(total_degree(alpha), p)) ==
           Ordering::Equal;
}

long total_degree(const ExpVec& alpha) {
    long t = 0;
    for (int a : alpha) t += a;
    return t;
}

long gcd_vec(const ExpVec& alpha) {
    long g = 0;
    for (int a : alpha) g = std::gcd(g, static_cast<long>(a));
    return g;
}

bool is_zero_vec(const ExpVec& alpha) {
    for (int a : alpha) {
        if (a != 0) return false;
    }
    return true;
}

ExpVec add_vec(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add_vec: length mismatch");
    ExpVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool leq_vec(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("leq_vec: length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

}  // namespace msym
