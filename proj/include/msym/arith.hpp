/**
 * @file arith.hpp
 * @brief Exact integer, valuation, multinomial and base-p digit-polynomial
 *        arithmetic.
 *
 * Everything here is pure and exact: arbitrary-precision integers via GMP,
 * no floating point.  DigitPoly represents polynomials in one indeterminate
 * with nonnegative integer coefficients; they arise as base-p digit
 * expansions Q_p(n) and coefficientwise sums of such expansions.  Two digit
 * polynomials are compared by "eventual evaluation": P > Q iff P(n) > Q(n)
 * for all sufficiently large n, which for integer-coefficient differences is
 * decided by the leading coefficient of P - Q.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace msym {

/// Exponent vector of a monomial x_1^{a_1} ... x_r^{a_r}; the all-zero
/// vector denotes the unit monomial 1.
using ExpVec = std::vector<int>;

/// Three-way result of the eventual-evaluation comparison.
enum class Ordering { Less, Equal, Greater };

/**
 * Polynomial with nonnegative integer coefficients, stored dense:
 * coeffs[i] is the coefficient of t^i, trailing zeros trimmed.
 *
 * Coefficients may exceed p-1: sums of digit expansions live here too.
 * Only the digits() constructor guarantees coefficients < p.
 */
class DigitPoly {
public:
    DigitPoly() = default;
    explicit DigitPoly(std::vector<long> coeffs);

    const std::vector<long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of t^i (zero beyond the stored degree).
    long coeff(int i) const;

    /// Evaluate at a nonnegative integer point, exactly.
    mpz_class eval(const mpz_class& t) const;

    /// Coefficientwise sum.
    DigitPoly operator+(const DigitPoly& other) const;

    /// Multiply by t^s (shift coefficients up).
    DigitPoly shifted(int s) const;

    bool operator==(const DigitPoly& other) const = default;

    /// Render as a human-readable polynomial, e.g. "2t + 1", "t^2", "0".
    std::string str() const;

private:
    std::vector<long> coeffs_;
};

/// Valuation of an integer at a prime: value = ord_p(n).
struct Valuation {
    long value = 0;
    long p = 0;
};

/// True iff n is a prime, by trial division.  Used to validate inputs that
/// are asserted prime (field characteristics, profile members).
bool is_prime(long n);

/// Multinomial coefficient (sum nu_i)! / prod(nu_i!), computed as a product
/// of exact binomials so no factorial is ever materialized.
/// Requires at least one entry; entries must be nonnegative.
mpz_class multinomial(const std::vector<long>& nu);

/// Multinomial coefficient of an exponent vector.
mpz_class multinomial(const ExpVec& alpha);

/// Largest e with p^e dividing n.  Throws std::domain_error for n = 0.
long ord_p(const mpz_class& n, long p);

/// Signed extension to rationals: ord_p(num) - ord_p(den).
long ord_p(const mpq_class& q, long p);

/// Valuation of n at p as a struct (same computation as ord_p).
Valuation valuate(const mpz_class& n, long p);

/// ord_p(n!) via the digit-sum formula (n - digit_sum_p(n)) / (p - 1).
long legendre(long n, long p);

/// Base-p digit expansion of n as a polynomial; eval at p recovers n.
DigitPoly digits(long n, long p);

/// Coefficientwise sum of the digit expansions of the entries of alpha.
DigitPoly digit_sum_vec(const ExpVec& alpha, long p);

/// Eventual-evaluation comparison: the sign of the leading coefficient of
/// P - Q decides; Equal iff identical coefficient vectors.
Ordering poly_cmp(const DigitPoly& P, const DigitPoly& Q);

/// True iff the sum of the entries of alpha can be computed in base p
/// without carrying, i.e. digit_sum_vec(alpha, p) == digits(|alpha|, p).
/// Equivalent to ord_p of the multinomial of alpha being zero.
bool carry_free(const ExpVec& alpha, long p);

// ---- small exponent-vector helpers shared across modules ----

/// Sum of entries |alpha|.
long total_degree(const ExpVec& alpha);

/// gcd of the entries (0 for the zero vector).
long gcd_vec(const ExpVec& alpha);

/// True iff all entries are zero.
bool is_zero_vec(const ExpVec& alpha);

/// Componentwise sum; vectors must have equal length.
ExpVec add_vec(const ExpVec& a, const ExpVec& b);

/// Componentwise a <= b.
bool leq_vec(const ExpVec& a, const ExpVec& b);

}  // namespace msym
