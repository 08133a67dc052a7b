/**
 * @file oracle.hpp
 * @brief Independent brute-force ground truth for the main library.
 *
 * Three mechanisms, deliberately naive:
 *   - symmetric-tensor orbit sums with slotwise multiplication (the reference
 *     semantics for the contingency-table product),
 *   - exhaustive enumeration of factorizations of a monomial into more than d
 *     nontrivial factors (the search set behind the digit-polynomial
 *     dichotomy),
 *   - exact Gaussian elimination over ℚ or F_p deciding membership in the
 *     subalgebra generated below a given multidegree, with re-checkable
 *     certificates.
 *
 * The membership spanning set uses only pairwise products: any word of
 * length ≥ 2 in homogeneous elements of lower multidegree regroups as a
 * product of two homogeneous elements of lower multidegree, so the degree-β
 * component of the subalgebra equals the span of
 * {m_{ν₁}·m_{ν₂} : mdeg ν₁ + mdeg ν₂ = β, both nonzero}.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msym/element.hpp"
#include "msym/gensets.hpp"
#include "msym/symfun.hpp"

namespace msym {

/// A linear combination of orbit sums of d-slot monomial multisets (unit
/// slots included): the symmetric-tensor model of Γ^d.
class OrbitCombination {
public:
    OrbitCombination(int r, int d, RingSpec ring);

    int r() const { return r_; }
    int d() const { return d_; }
    const RingSpec& ring() const { return ring_; }
    const std::map<std::vector<ExpVec>, mpq_class>& coeffs() const {
        return coeffs_;
    }

    /// Accumulate c on the orbit of the given slots (sorted internally);
    /// the multiset must have exactly d slots of arity r.
    void add_orbit(std::vector<ExpVec> slots, const mpq_class& c);

    bool operator==(const OrbitCombination& other) const = default;

private:
    int r_;
    int d_;
    RingSpec ring_;
    std::map<std::vector<ExpVec>, mpq_class> coeffs_;
};

/// Basis translation γ^ν(x)×⋄^{d−|ν|} ↔ orbit of ν padded with unit slots.
OrbitCombination to_orbit(const GammaElement& f);
GammaElement from_orbit(const OrbitCombination& u);

/// Reference product: expand both orbits into their distinct d-tuples,
/// multiply slotwise, regroup tuples into orbits.  Each orbit's tuple count
/// must divide evenly by the orbit size; a remainder raises the internal
/// error "oracle inconsistency".
OrbitCombination orbit_mul(const OrbitCombination& u,
                           const OrbitCombination& v);

/// All factorizations of x^α into more than d nontrivial monomials
/// (multisets, canonically enumerated).  Requires d < |α|.
std::vector<MultiIndex> enumerate_factorizations(const ExpVec& alpha, int d);

/// Exhaustive minimum of ord_p(p^s·((ν))/|ν|) over the factorization set,
/// with s = ord_p(gcd α); min_order is empty when the set is empty.
struct LemmaSearchResult {
    std::optional<long> min_order;
    std::optional<MultiIndex> witness;
};
LemmaSearchResult main_lemma_bruteforce(const ExpVec& alpha, int d, long p);

/// All basis indices ν with multidegree β and |ν| ≤ d.
std::vector<MultiIndex> graded_basis(int d, int r, const ExpVec& beta);

/// One product m_{left}·m_{right} of a membership certificate.
struct CertificateTerm {
    mpq_class coeff;
    MultiIndex left;
    MultiIndex right;
};

struct DecompositionResult {
    bool in_subalgebra = false;
    std::vector<CertificateTerm> certificate;  ///< empty unless in_subalgebra
};

/// Does the homogeneous target lie in the subalgebra generated by elements
/// of strictly smaller multidegree?  The target's coefficient ring must be a
/// field (ℚ or F_p); certificates re-evaluate to the target exactly.
DecompositionResult membership(const GammaElement& target);

/// Σ coeff·m_left·m_right, for re-checking certificates.
GammaElement evaluate_certificate(const std::vector<CertificateTerm>& terms,
                                  int d, int r, RingSpec ring);

/// The deduplicated pair list spanning the degree-β component of the
/// lower-multidegree subalgebra.
std::vector<std::pair<MultiIndex, MultiIndex>> lower_product_pairs(
    int d, int r, const ExpVec& beta);

/// Coefficients of f on the given basis row list; throws if a term of f
/// falls outside the rows.
std::vector<mpq_class> coefficient_vector(const GammaElement& f,
                                          const std::vector<MultiIndex>& rows);

/// Particular solution x of columns·x = target over the field, or empty.
std::optional<std::vector<mpq_class>> solve_linear(
    const std::vector<std::vector<mpq_class>>& columns,
    const std::vector<mpq_class>& target, const RingSpec& field);

/// Rank of the column family over the field.
int column_rank(const std::vector<std::vector<mpq_class>>& columns,
                const RingSpec& field);

/// One key where the digit criterion and the membership oracle disagree.
struct TheoremDisagreement {
    GeneratorKey key;
    bool criterion_minimal = false;
    bool oracle_minimal = false;
};

/// Compare is_minimal_generator against membership over the given field for
/// every coprime key with total degree ≤ degree_cap (which must reach the
/// sharp bound).  The contract is an empty result.
std::vector<TheoremDisagreement> verify_theorem(int r, int d, RingSpec field,
                                                int degree_cap);

}  // namespace msym
