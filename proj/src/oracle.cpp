#include "msym/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace msym {

// ---------------------------------------------------------------------------
// Orbit-sum model
// ---------------------------------------------------------------------------

OrbitCombination::OrbitCombination(int r, int d, RingSpec ring)
    : r_(r), d_(d), ring_(ring) {
    if (r < 1) throw std::invalid_argument("variable count must be positive");
    if (d < 0) throw std::invalid_argument("ambient degree must be nonnegative");
}

void OrbitCombination::add_orbit(std::vector<ExpVec> slots,
                                 const mpq_class& c) {
    if (slots.size() != static_cast<std::size_t>(d_)) {
        throw std::invalid_argument("orbit must have exactly d slots");
    }
    for (const ExpVec& slot : slots) {
        if (slot.size() != static_cast<std::size_t>(r_)) {
            throw std::invalid_argument("slot has wrong variable count");
        }
    }
    std::sort(slots.begin(), slots.end(), MonoOrder());
    auto it = coeffs_.find(slots);
    const mpq_class sum =
        ring_.normalize(it == coeffs_.end() ? c : it->second + c);
    if (RingSpec::is_zero(sum)) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(slots), sum);
    } else {
        it->second = sum;
    }
}

OrbitCombination to_orbit(const GammaElement& f) {
    OrbitCombination u(f.r(), f.d(), f.ring());
    for (const auto& [nu, c] : f.terms()) {
        std::vector<ExpVec> slots;
        for (const auto& [m, n] : nu.entries()) {
            slots.insert(slots.end(), n, m);
        }
        slots.resize(f.d(), ExpVec(f.r(), 0));  // pad with unit slots
        u.add_orbit(std::move(slots), c);
    }
    return u;
}

GammaElement from_orbit(const OrbitCombination& u) {
    GammaElement f(u.r(), u.d(), u.ring());
    for (const auto& [slots, c] : u.coeffs()) {
        MultiIndex nu;
        for (const ExpVec& slot : slots) {
            if (!is_zero_vec(slot)) nu.insert(slot, 1);
        }
        f.add_term(nu, c);
    }
    return f;
}

OrbitCombination orbit_mul(const OrbitCombination& u,
                           const OrbitCombination& v) {
    if (u.r() != v.r() || u.d() != v.d() || !(u.ring() == v.ring())) {
        throw std::invalid_argument("mismatched ambient data");
    }
    const int d = u.d();
    OrbitCombination out(u.r(), d, u.ring());
    for (const auto& [orbit1, c1] : u.coeffs()) {
        for (const auto& [orbit2, c2] : v.coeffs()) {
            // Count every slotwise product of distinct tuples from the two
            // orbits, keyed by the sorted result tuple.
            std::map<std::vector<ExpVec>, long> counts;
            std::vector<ExpVec> t1 = orbit1;
            do {
                std::vector<ExpVec> t2 = orbit2;
                do {
                    std::vector<ExpVec> prod(d);
                    for (int s = 0; s < d; ++s) {
                        prod[s] = add_vec(t1[s], t2[s]);
                    }
                    std::sort(prod.begin(), prod.end(), MonoOrder());
                    ++counts[prod];
                } while (std::next_permutation(t2.begin(), t2.end(),
                                               MonoOrder()));
            } while (std::next_permutation(t1.begin(), t1.end(), MonoOrder()));

            for (const auto& [orbit, count] : counts) {
                // The product tensor is symmetric, so each orbit is hit a
                // multiple of its size; anything else is a bug.
                std::vector<long> mults;
                std::size_t i = 0;
                while (i < orbit.size()) {
                    std::size_t j = i;
                    while (j < orbit.size() && orbit[j] == orbit[i]) ++j;
                    mults.push_back(static_cast<long>(j - i));
                    i = j;
                }
                const mpz_class orbit_size = multinomial(mults);
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(),
                            mpz_class(count).get_mpz_t(),
                            orbit_size.get_mpz_t());
                if (rem != 0) {
                    throw std::logic_error("oracle inconsistency");
                }
                out.add_orbit(orbit, c1 * c2 * mpq_class(q));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Monomial multiset enumeration
// ---------------------------------------------------------------------------

namespace {

/// Visit every nontrivial monomial m with m ≤ cap componentwise.
template <typename Visit>
void visit_divisors(const ExpVec& cap, Visit&& visit) {
    ExpVec m(cap.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < m.size() && m[i] == cap[i]) {
            m[i] = 0;
            ++i;
        }
        if (i == m.size()) return;
        ++m[i];
        visit(m);
    }
}

/// Multisets of nontrivial monomials summing to `beta`, canonically ordered
/// non-increasing, with min_parts ≤ |ν| (and |ν| ≤ max_parts if ≥ 0).
void partitions_rec(const ExpVec& remaining, const ExpVec* prev, int parts,
                    int min_parts, int max_parts,
                    std::vector<ExpVec>& stack, std::vector<MultiIndex>& out) {
    if (is_zero_vec(remaining)) {
        if (parts >= min_parts) {
            MultiIndex nu;
            for (const ExpVec& m : stack) nu.insert(m, 1);
            out.push_back(nu);
        }
        return;
    }
    if (max_parts >= 0 && parts >= max_parts) return;
    // Each further factor raises the count by one and the degree by at least
    // one, so the part count can reach at most parts + |remaining|.
    if (parts + total_degree(remaining) < min_parts) return;
    MonoOrder less;
    visit_divisors(remaining, [&](const ExpVec& m) {
        if (prev != nullptr && less(*prev, m)) return;  // keep non-increasing
        ExpVec rest(remaining.size());
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            rest[i] = remaining[i] - m[i];
        }
        const ExpVec chosen = m;  // stable address across the recursion
        stack.push_back(chosen);
        partitions_rec(rest, &chosen, parts + 1, min_parts, max_parts, stack,
                       out);
        stack.pop_back();
    });
}

std::vector<MultiIndex> monomial_partitions(const ExpVec& beta, int min_parts,
                                            int max_parts) {
    std::vector<MultiIndex> out;
    std::vector<ExpVec> stack;
    partitions_rec(beta, nullptr, 0, min_parts, max_parts, stack, out);
    return out;
}

}  // namespace

std::vector<MultiIndex> enumerate_factorizations(const ExpVec& alpha, int d) {
    if (is_zero_vec(alpha)) {
        throw std::invalid_argument("exponent must be nonzero");
    }
    if (d < 0 || d >= total_degree(alpha)) {
        throw std::invalid_argument("lemma hypothesis violated");
    }
    return monomial_partitions(alpha, d + 1, -1);
}

LemmaSearchResult main_lemma_bruteforce(const ExpVec& alpha, int d, long p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("p must be prime");
    }
    const std::vector<MultiIndex> search = enumerate_factorizations(alpha, d);
    const long s = ord_p(mpz_class(gcd_vec(alpha)), p);
    LemmaSearchResult result;
    for (const MultiIndex& nu : search) {
        std::vector<long> mults;
        for (const auto& [m, n] : nu.entries()) mults.push_back(n);
        const long order = s + ord_p(multinomial(mults), p) -
                           ord_p(mpz_class(nu.length()), p);
        if (!result.min_order || order < *result.min_order) {
            result.min_order = order;
            result.witness = nu;
        }
    }
    return result;
}

std::vector<MultiIndex> graded_basis(int d, int r, const ExpVec& beta) {
    if (beta.size() != static_cast<std::size_t>(r)) {
        throw std::invalid_argument("multidegree has wrong variable count");
    }
    return monomial_partitions(beta, 0, d);
}

// ---------------------------------------------------------------------------
// Exact linear algebra over a field
// ---------------------------------------------------------------------------

namespace {

void check_field(const RingSpec& ring) {
    if (!ring.is_field()) {
        throw std::invalid_argument("membership requires a field coefficient ring");
    }
}

/// Gauss–Jordan elimination on an augmented row-major matrix.  Returns the
/// pivot columns; afterwards rows beyond the pivot count are entirely zero
/// on the coefficient side.
std::vector<std::size_t> gauss_jordan(std::vector<std::vector<mpq_class>>& aug,
                                      std::size_t ncols,
                                      const RingSpec& field) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < aug.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < aug.size() && RingSpec::is_zero(aug[pivot][col])) {
            ++pivot;
        }
        if (pivot == aug.size()) continue;
        std::swap(aug[row], aug[pivot]);
        const mpq_class inv = field.inverse(aug[row][col]);
        for (std::size_t j = col; j < aug[row].size(); ++j) {
            aug[row][j] = field.mul(aug[row][j], inv);
        }
        for (std::size_t i = 0; i < aug.size(); ++i) {
            if (i == row || RingSpec::is_zero(aug[i][col])) continue;
            const mpq_class factor = aug[i][col];
            for (std::size_t j = col; j < aug[i].size(); ++j) {
                aug[i][j] =
                    field.sub(aug[i][j], field.mul(factor, aug[row][j]));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve_linear(
    const std::vector<std::vector<mpq_class>>& columns,
    const std::vector<mpq_class>& target, const RingSpec& field) {
    check_field(field);
    const std::size_t nrows = target.size(), ncols = columns.size();
    std::vector<std::vector<mpq_class>> aug(
        nrows, std::vector<mpq_class>(ncols + 1, 0));
    for (std::size_t j = 0; j < ncols; ++j) {
        if (columns[j].size() != nrows) {
            throw std::invalid_argument("column length mismatch");
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            aug[i][j] = field.normalize(columns[j][i]);
        }
    }
    for (std::size_t i = 0; i < nrows; ++i) {
        aug[i][ncols] = field.normalize(target[i]);
    }
    const std::vector<std::size_t> pivots = gauss_jordan(aug, ncols, field);
    for (std::size_t i = pivots.size(); i < nrows; ++i) {
        if (!RingSpec::is_zero(aug[i][ncols])) return std::nullopt;
    }
    std::vector<mpq_class> x(ncols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug[i][ncols];
    }
    return x;
}

int column_rank(const std::vector<std::vector<mpq_class>>& columns,
                const RingSpec& field) {
    check_field(field);
    if (columns.empty()) return 0;
    const std::size_t nrows = columns.front().size();
    std::vector<std::vector<mpq_class>> aug(
        nrows, std::vector<mpq_class>(columns.size(), 0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != nrows) {
            throw std::invalid_argument("column length mismatch");
        }
        for (std::size_t i = 0; i < nrows; ++i) {
            aug[i][j] = field.normalize(columns[j][i]);
        }
    }
    return static_cast<int>(gauss_jordan(aug, columns.size(), field).size());
}

std::vector<mpq_class> coefficient_vector(const GammaElement& f,
                                          const std::vector<MultiIndex>& rows) {
    std::map<MultiIndex, std::size_t, MultiIndexOrder> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
    std::vector<mpq_class> out(rows.size(), 0);
    for (const auto& [nu, c] : f.terms()) {
        auto it = index.find(nu);
        if (it == index.end()) {
            throw std::logic_error("element outside the graded basis");
        }
        out[it->second] = c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Membership in the lower-multidegree subalgebra
// ---------------------------------------------------------------------------

std::vector<std::pair<MultiIndex, MultiIndex>> lower_product_pairs(
    int d, int r, const ExpVec& beta) {
    std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
    // Walk β₁ over proper nonzero sub-vectors of β; keep β₁ ≤ β₂
    // lexicographically so each unordered splitting appears once.
    ExpVec beta1(beta.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < beta1.size() && beta1[i] == beta[i]) {
            beta1[i] = 0;
            ++i;
        }
        if (i == beta1.size()) break;
        ++beta1[i];
        ExpVec beta2(beta.size());
        for (std::size_t j = 0; j < beta.size(); ++j) {
            beta2[j] = beta[j] - beta1[j];
        }
        if (is_zero_vec(beta1) || is_zero_vec(beta2) || beta2 < beta1) {
            continue;
        }
        const std::vector<MultiIndex> left = graded_basis(d, r, beta1);
        const std::vector<MultiIndex> right = graded_basis(d, r, beta2);
        MultiIndexOrder less;
        for (const MultiIndex& nu1 : left) {
            for (const MultiIndex& nu2 : right) {
                if (beta1 == beta2 && less(nu2, nu1)) continue;
                pairs.emplace_back(nu1, nu2);
            }
        }
    }
    return pairs;
}

DecompositionResult membership(const GammaElement& target) {
    check_field(target.ring());
    DecompositionResult result;
    if (target.is_zero()) {
        result.in_subalgebra = true;
        return result;
    }
    const auto components = multidegree_components(target);
    if (components.size() != 1) {
        throw std::invalid_argument("inhomogeneous target");
    }
    const ExpVec beta = components.begin()->first;
    if (is_zero_vec(beta)) {
        // Scalars lie in every subalgebra; no product certificate needed.
        result.in_subalgebra = true;
        return result;
    }
    const int d = target.d(), r = target.r();
    const std::vector<MultiIndex> rows = graded_basis(d, r, beta);
    const auto pairs = lower_product_pairs(d, r, beta);
    std::vector<std::vector<mpq_class>> columns;
    columns.reserve(pairs.size());
    for (const auto& [nu1, nu2] : pairs) {
        columns.push_back(coefficient_vector(
            mul(basis_element(nu1, d, r, target.ring()),
                basis_element(nu2, d, r, target.ring())),
            rows));
    }
    const auto solution =
        solve_linear(columns, coefficient_vector(target, rows), target.ring());
    if (!solution) return result;
    result.in_subalgebra = true;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (!RingSpec::is_zero((*solution)[j])) {
            result.certificate.push_back(
                {(*solution)[j], pairs[j].first, pairs[j].second});
        }
    }
    return result;
}

GammaElement evaluate_certificate(const std::vector<CertificateTerm>& terms,
                                  int d, int r, RingSpec ring) {
    GammaElement acc(r, d, ring);
    for (const CertificateTerm& term : terms) {
        acc = add(acc, scale(term.coeff,
                             mul(basis_element(term.left, d, r, ring),
                                 basis_element(term.right, d, r, ring))));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Exhaustive theorem verification
// ---------------------------------------------------------------------------

std::vector<TheoremDisagreement> verify_theorem(int r, int d, RingSpec field,
                                                int degree_cap) {
    check_field(field);
    const PrimeProfile profile =
        field.kind() == RingKind::Rationals
            ? PrimeProfile::empty_profile()
            : PrimeProfile::explicit_primes({field.p()});
    if (degree_cap < sharp_degree_bound(r, d, profile)) {
        throw std::invalid_argument("degree cap below the sharp bound");
    }
    std::vector<TheoremDisagreement> disagreements;
    for (int k = 1; k <= d; ++k) {
        for (int t = 1; k * t <= degree_cap; ++t) {
            visit_compositions(t, r, [&](const ExpVec& alpha) {
                if (gcd_vec(alpha) != 1) return;
                const GeneratorKey key{k, alpha};
                const bool criterion =
                    is_minimal_generator(key, d, profile).has_value();
                const bool oracle =
                    !membership(generator_element(key, d, field)).in_subalgebra;
                if (criterion != oracle) {
                    disagreements.push_back({key, criterion, oracle});
                }
            });
        }
    }
    return disagreements;
}

}  // namespace msym
