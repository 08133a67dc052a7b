/**
 * @file gensets.hpp
 * @brief Minimal generating sets of Γ^d(A[x₁,…,x_r]) and degree bounds.
 *
 * The base ring A enters only through its profile P(A): the set of primes
 * that are not invertible in A.  A candidate key (k, α) with gcd(α) = 1 names
 * a minimal generator exactly when
 *
 *     k|α| ≤ d,   or   Q_p(kα) ≤ Q_p(d) for some non-invertible prime p,
 *
 * where Q_p is the base-p digit polynomial and "≤" is the complement of the
 * eventual-evaluation "greater".  Only primes ≤ d are ever relevant.  This
 * module also provides the sharp total-degree bound, the coarser
 * max(d, r(d−1)) bound, the elementary-generation case analyses, and the
 * characteristic-p description of the same generating set.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "msym/symfun.hpp"

namespace msym {

enum class ProfileKind { Empty, AllPrimes, Explicit };

/// The set P(A) of primes not invertible in the base ring.
class PrimeProfile {
public:
    /// Every prime invertible (Q-algebras): P(A) = ∅.
    static PrimeProfile empty_profile();
    /// No prime invertible (e.g. the integers).
    static PrimeProfile all_primes();
    /// Exactly the listed primes non-invertible.
    static PrimeProfile explicit_primes(std::vector<long> primes);

    /// Parse "none", "all", or a comma-separated prime list "2,3".
    static PrimeProfile parse(const std::string& text);

    ProfileKind kind() const { return kind_; }
    const std::vector<long>& primes() const { return primes_; }

    /// Is p non-invertible?
    bool contains(long p) const;

    /// The non-invertible primes ≤ bound, ascending.  Minimality questions in
    /// Γ^d depend only on relevant(d).
    std::vector<long> relevant(int bound) const;

    std::string str() const;

    bool operator==(const PrimeProfile& other) const = default;

private:
    PrimeProfile(ProfileKind kind, std::vector<long> primes)
        : kind_(kind), primes_(std::move(primes)) {}

    ProfileKind kind_;
    std::vector<long> primes_;  // sorted, unique; used when kind == Explicit
};

/// The two candidate collections:
///   C1 — gcd(α)·1_A invertible and k a product (possibly empty) of
///        non-invertible primes;
///   C2 — gcd(α) = 1.
enum class GenCollection { C1, C2 };

enum class ReasonKind { LowDegree, DigitWitness };

/// Why a key names a minimal generator.
struct GeneratorReport {
    GeneratorKey key;
    int total_degree = 0;
    ExpVec multidegree;
    ReasonKind reason = ReasonKind::LowDegree;
    long witness_p = 0;  ///< smallest qualifying prime when reason is DigitWitness
};

/// Membership of a key in C1 or C2 (see GenCollection); requires 1 ≤ k ≤ d.
bool in_collection(const GeneratorKey& key, int d, const PrimeProfile& profile,
                   GenCollection which);

/// The minimality criterion for a C2 key: a report when (k, α) names a
/// minimal generator, std::nullopt when g_{k,α} is decomposable.  Throws
/// "key outside C₂" when gcd(α) ≠ 1.
std::optional<GeneratorReport> is_minimal_generator(const GeneratorKey& key,
                                                    int d,
                                                    const PrimeProfile& profile);

/// All minimal-generator reports for C2 keys with total degree up to the
/// sharp bound, sorted by (total degree, multidegree, k).
std::vector<GeneratorReport> enumerate_minimal_generators(
    int r, int d, const PrimeProfile& profile);

/// max{d, max_p ((a_p + r − 1)·p^{b_p} − r)} over relevant primes, where
/// d = a_p·p^{b_p} + c_p with 1 ≤ a_p ≤ p−1 and 0 ≤ c_p < p^{b_p}.
int sharp_degree_bound(int r, int d, const PrimeProfile& profile);

/// The coarser classical bound max(d, r(d−1)).
int fleischmann_bound(int r, int d);

/// Every report is either (d, eᵢ) or satisfies kα ≤ (d−1,…,d−1)
/// componentwise; additionally (for d ≥ 2) each (d−1)·eᵢ occurs as a
/// generator multidegree, witnessing sharpness.
bool multidegree_bound_check(const std::vector<GeneratorReport>& reports,
                             int r, int d, const PrimeProfile& profile);

/// Digit-polynomial side of the factorization dichotomy: for d < |α| there
/// is a factorization of x^α into more than d nontrivial monomials whose
/// normalized multinomial ((ν))·p^s/|ν| is a p-adic unit iff
/// Q_p(α) > Q_p(d).  Returns that comparison.
bool main_lemma_predicate(const ExpVec& alpha, int d, long p);

/// For a high-degree key (d < k|α|, gcd(α) invertible): is g_{k,α}
/// decomposable over every base ring with this profile, i.e. does
/// Q_p(kα) > Q_p(d) hold for every relevant prime?
bool sharp_relation_exists(const GeneratorKey& key, int d,
                           const PrimeProfile& profile);

/// Do the elementary functions e_α, |α| ≤ d, generate the whole algebra?
/// True iff r = 1, or d! invertible, or (r,d) = (2,2), or (r,d) = (2,3)
/// with 3 invertible.
bool elementary_generation(int r, int d, const PrimeProfile& profile);

/// Do the e_α generate the subalgebra of all total degrees ≤ d?  True iff
/// r = 1, or (r,d) = (2,3), or (r,d) = (2,4) with 3 invertible, or (d−1)!
/// invertible.
bool elementary_generation_low_degree(int r, int d,
                                      const PrimeProfile& profile);

/// Per-key form of the previous: for k|α| ≤ d with gcd(α) invertible,
/// g_{k,α} is covered by the e's iff ord_p((kα)) = ord_p(|α|) for every
/// relevant prime p.
bool elementary_covers(const GeneratorKey& key, int d,
                       const PrimeProfile& profile);

/// The generating set over a base of characteristic p in its intrinsic
/// shape: keys (p^s, α) with p ∤ gcd(α), p^s ≤ d and Q_p(p^s·α) ≤ Q_p(d).
/// Agrees with enumerate_minimal_generators(r, d, {p}) multidegree by
/// multidegree.
std::vector<GeneratorReport> char_p_generators(int r, int d, long p);

/// Visit every α ∈ ℕ^r with |α| = total, lexicographically.
void visit_compositions(int total, int r,
                        const std::function<void(const ExpVec&)>& visit);

}  // namespace msym
