/**
 * @file element.hpp
 * @brief The graded algebra Γ^d(A[x₁,…,x_r]) in its divided-power monomial
 *        basis.
 *
 * A basis element is determined by a multiset ν of nontrivial monomials with
 * |ν| ≤ d; it denotes γ^ν(x) × ⋄^{d−|ν|}, where ⋄^k = γ^k(1) is the padding
 * unit.  Elements are finite linear combinations of such multisets with
 * coefficients in a RingSpec ring.  All operations are pure functions on
 * immutable values; arithmetic is exact.
 *
 * Multiplication follows the contingency-table formula: pad both index
 * multisets with the unit monomial up to total multiplicity d, sum over all
 * nonnegative integer matrices with those row/column sums, multiply monomials
 * cellwise, and merge equal products with divided-power binomial factors
 * γ^a(m)×γ^b(m) = ((a,b))·γ^{a+b}(m).
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msym/arith.hpp"
#include "msym/ring.hpp"

namespace msym {

/// Order on monomials: total degree first, then lexicographic on exponents.
struct MonoOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const int ta = total_degree(a), tb = total_degree(b);
        if (ta != tb) return ta < tb;
        return a < b;
    }
};

/**
 * A finite multiset of nontrivial monomials: the index ν of a basis element.
 *
 * Entries are kept sorted by MonoOrder with positive multiplicities and no
 * zero (unit-monomial) keys; the empty multiset indexes the unit ⋄^d.
 */
class MultiIndex {
public:
    MultiIndex() = default;

    /// The multiset {m : mult}; m must be nontrivial, mult ≥ 1.
    static MultiIndex single(const ExpVec& m, int mult = 1);

    /// Add `mult` copies of the monomial m (merging with existing entries).
    void insert(const ExpVec& m, int mult);

    const std::vector<std::pair<ExpVec, int>>& entries() const {
        return entries_;
    }
    bool empty() const { return entries_.empty(); }

    /// |ν| = Σ multiplicities.
    int length() const;

    /// Σ multiplicity·exponent, an ExpVec of length r (zero vector if empty).
    ExpVec multidegree(int r) const;

    /// Coordinate sum of the multidegree.
    int total_deg() const;

    /// Multiplicity of the monomial m (0 if absent).
    int mult_of(const ExpVec& m) const;

    /// "m{}", "m{(1,0)^2,(0,1)}": canonical, re-parseable by the expression
    /// grammar.
    std::string str() const;

    bool operator==(const MultiIndex& other) const = default;

private:
    std::vector<std::pair<ExpVec, int>> entries_;
};

/// Canonical total order on indices: total degree, then multidegree
/// (lexicographic), then the sorted entry lists.  Used for term maps and
/// deterministic output.
struct MultiIndexOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

using TermMap = std::map<MultiIndex, mpq_class, MultiIndexOrder>;

/**
 * An element of Γ^d(A[x₁,…,x_r]): finite sum Σ c_ν · γ^ν(x)×⋄^{d−|ν|}.
 *
 * Canonical form: no zero coefficients stored; coefficients normalized by the
 * ring (integral over Z, representatives in {1,…,p−1} over F_p).
 */
class GammaElement {
public:
    /// The zero element of Γ^d over r variables.
    GammaElement(int r, int d, RingSpec ring);

    int r() const { return r_; }
    int d() const { return d_; }
    const RingSpec& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Accumulate c onto the coefficient of ν, restoring canonical form.
    /// Throws if |ν| > d or a monomial has the wrong variable count.
    void add_term(const MultiIndex& nu, const mpq_class& c);

    /// Coefficient of ν (zero if absent).
    mpq_class coeff(const MultiIndex& nu) const;

    bool operator==(const GammaElement& other) const = default;

private:
    int r_;
    int d_;
    RingSpec ring_;
    TermMap terms_;
};

/// The basis element γ^ν(x)×⋄^{d−|ν|}; throws "length exceeds ambient
/// degree" when |ν| > d.
GammaElement basis_element(const MultiIndex& nu, int d, int r, RingSpec ring);

/// The unit ⋄^d (empty index, coefficient 1).
GammaElement unit_element(int d, int r, RingSpec ring);

GammaElement add(const GammaElement& f, const GammaElement& g);
GammaElement sub(const GammaElement& f, const GammaElement& g);
GammaElement scale(const mpq_class& c, const GammaElement& f);

/// Product inside Γ^d via contingency-table enumeration (see file header).
GammaElement mul(const GammaElement& f, const GammaElement& g);

/// External product Γ^a × Γ^b → Γ^{a+b}: indices merge with divided-power
/// binomial factors, including the ⋄ paddings.
GammaElement shuffle(const GammaElement& f, const GammaElement& g);

/// Truncation ρ^e_d: Γ^e → Γ^d for d ≤ e; terms of length > d vanish.
GammaElement rho(const GammaElement& f, int d_target);

/// Substitution homomorphism x_i ↦ images[i], a nontrivial monomial over
/// images[i].size() variables; keys colliding after mapping merge with
/// binomial factors.  Throws "degenerate substitution unsupported" when an
/// image is the unit monomial.
GammaElement substitute(const GammaElement& f,
                        const std::vector<ExpVec>& images);

/// Split into homogeneous parts keyed by multidegree.
std::map<ExpVec, GammaElement> multidegree_components(const GammaElement& f);

/// Max |ν| over the support (0 for the zero element and for scalars ⋄^d).
int support_length(const GammaElement& f);

/// Multidegree of a homogeneous element; throws on inhomogeneous or zero
/// input.
ExpVec homogeneous_multidegree(const GammaElement& f);

/// Canonical, re-parseable rendering: "m{(2)} - 3*m{(1)^2}", zero → "0".
std::string to_string(const GammaElement& f);

std::ostream& operator<<(std::ostream& os, const GammaElement& f);

}  // namespace msym
