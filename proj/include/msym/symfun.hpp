/**
 * @file symfun.hpp
 * @brief Named multisymmetric families and their identities.
 *
 * The three families, all living in Γ^d(A[x₁,…,x_r]):
 *   - elementary   e_α     = γ^α(x) × ⋄^{d−|α|}   (zero when |α| > d),
 *   - power sums   p_α     = x^α × ⋄^{d−1}        (α ≠ 0; p₀ is the scalar d),
 *   - candidates   g_{k,α} = γ^k(x^α) × ⋄^{d−k}   (1 ≤ k ≤ d).
 *
 * Also implemented here: the multisymmetric Newton identity (whose left-hand
 * side must evaluate to zero), the generalized Newton relation residuals
 * (which must fall into the lower-multidegree subalgebra), and the contraction
 * coefficients relating a general divided-power product γ^ℓ(f) to g_{k,α}
 * modulo lower multidegrees.
 */
#pragma once

#include <vector>

#include "msym/element.hpp"

namespace msym {

/// Key (k, α) of the candidate generator g_{k,α} = γ^k(x^α) × ⋄^{d−k}.
struct GeneratorKey {
    int k = 1;
    ExpVec alpha;

    /// k·α, the ℕ^r-degree of g_{k,α}.
    ExpVec multidegree() const;

    /// k·|α|, the total degree.
    int total_deg() const;

    bool operator==(const GeneratorKey& other) const = default;
};

/// Enumeration order for generator keys: total degree, then multidegree
/// (lexicographic), then k.
bool key_less(const GeneratorKey& a, const GeneratorKey& b);

/// e_α: the basis element with index Σᵢ αᵢ·{xᵢ}; the zero element when
/// |α| > d; the unit for α = 0.
GammaElement elementary(const ExpVec& alpha, int d, RingSpec ring);

/// p_α = x^α × ⋄^{d−1} for α ≠ 0.  (p₀ equals the scalar d and is not an
/// element constructor.)
GammaElement power_sum(const ExpVec& alpha, int d, RingSpec ring);

/// g_{k,α} = γ^k(x^α) × ⋄^{d−k}; requires 1 ≤ k ≤ d and α ≠ 0.
GammaElement generator_element(const GeneratorKey& key, int d, RingSpec ring);

/**
 * Left-hand side of the multisymmetric Newton identity for δ ≠ 0:
 *
 *     Σ_{α+β=δ, α≠0} (−1)^{|β|} ((α)) p_α e_β  +  (−1)^{|δ|} |δ| e_δ
 *
 * where ((α)) is the multinomial coefficient |α|!/∏αᵢ!.  Must return the
 * zero element of Γ^d for every δ and d.
 */
GammaElement newton_identity_residual(const ExpVec& delta, int d,
                                      RingSpec ring);

/**
 * Generalized Newton relation residual for k ≤ d, m ≥ 1:
 *
 *     g_{k,mα} − (−1)^{km−k}·m·g_{km,α}   when km ≤ d,
 *     g_{k,mα}                            when km > d.
 *
 * The result must lie in the subalgebra generated by elements of multidegree
 * strictly below kmα (verified externally by the membership oracle).
 */
GammaElement generalized_newton_residual(int k, int m, const ExpVec& alpha,
                                         int d, RingSpec ring);

/**
 * Contraction data for a divided-power product γ^ℓ(f) = ∏ᵢ γ^{ℓᵢ}(fᵢ) whose
 * underlying monomial is ∏ fᵢ^{ℓᵢ} = x^{kα}.  The product is split
 * canonically as k = gcd(ℓ), α = (Σ ℓᵢ·deg fᵢ)/k, g = gcd(α); then
 *
 *     m = ((ℓ))·k·g/|ℓ|  (always an integer),   a = m/g,
 *
 * and γ^ℓ(f)×⋄^{n−|ℓ|} ≡ sign·a·g_{k,α} modulo the subalgebra generated in
 * multidegrees strictly below kα, with sign = (−1)^{|ℓ|−k}.
 */
struct ContractionCoefficient {
    int sign;       ///< (−1)^{|ℓ|−k}
    mpz_class m;    ///< ((ℓ))·k·g/|ℓ|
    long g;         ///< gcd(α)
    long k;         ///< gcd(ℓ)
    ExpVec alpha;   ///< the exponent with x^{kα} = ∏ fᵢ^{ℓᵢ}
};

/// Computes the contraction data; n_ambient must be ≥ k|α| so the identity
/// has room.  Integrality of m is rechecked and a failure raises the internal
/// error "paper invariant violated" (it must never fire).
ContractionCoefficient contraction_coefficient(
    const std::vector<int>& ell, const std::vector<ExpVec>& monomials,
    int n_ambient);

}  // namespace msym
