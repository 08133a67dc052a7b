#include "msym/symfun.hpp"

#include <numeric>
#include <stdexcept>

namespace msym {

// ---------------------------------------------------------------------------
// GeneratorKey
// ---------------------------------------------------------------------------

ExpVec GeneratorKey::multidegree() const {
    ExpVec md(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) md[i] = k * alpha[i];
    return md;
}

int GeneratorKey::total_deg() const { return k * total_degree(alpha); }

bool key_less(const GeneratorKey& a, const GeneratorKey& b) {
    const int ta = a.total_deg(), tb = b.total_deg();
    if (ta != tb) return ta < tb;
    const ExpVec ma = a.multidegree(), mb = b.multidegree();
    if (ma != mb) return ma < mb;
    return a.k < b.k;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

GammaElement elementary(const ExpVec& alpha, int d, RingSpec ring) {
    const int r = static_cast<int>(alpha.size());
    if (total_degree(alpha) > d) return GammaElement(r, d, ring);
    MultiIndex nu;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > 0) {
            ExpVec var(alpha.size(), 0);
            var[i] = 1;
            nu.insert(var, alpha[i]);
        }
    }
    return basis_element(nu, d, r, ring);
}

GammaElement power_sum(const ExpVec& alpha, int d, RingSpec ring) {
    if (is_zero_vec(alpha)) {
        throw std::invalid_argument(
            "power sum index must be nonzero (p_0 is the scalar d)");
    }
    return basis_element(MultiIndex::single(alpha), d,
                         static_cast<int>(alpha.size()), ring);
}

GammaElement generator_element(const GeneratorKey& key, int d, RingSpec ring) {
    if (is_zero_vec(key.alpha)) {
        throw std::invalid_argument("generator exponent must be nonzero");
    }
    if (key.k < 1 || key.k > d) {
        throw std::invalid_argument("divided power exceeds ambient degree");
    }
    return basis_element(MultiIndex::single(key.alpha, key.k), d,
                         static_cast<int>(key.alpha.size()), ring);
}

// ---------------------------------------------------------------------------
// Newton identities
// ---------------------------------------------------------------------------

namespace {

/// Visit every β with 0 ≤ β ≤ delta componentwise.
template <typename Visit>
void visit_sub_vectors(const ExpVec& delta, Visit&& visit) {
    ExpVec beta(delta.size(), 0);
    while (true) {
        visit(beta);
        std::size_t i = 0;
        while (i < beta.size() && beta[i] == delta[i]) {
            beta[i] = 0;
            ++i;
        }
        if (i == beta.size()) return;
        ++beta[i];
    }
}

}  // namespace

GammaElement newton_identity_residual(const ExpVec& delta, int d,
                                      RingSpec ring) {
    if (is_zero_vec(delta)) {
        throw std::invalid_argument("identity index must be nonzero");
    }
    const int r = static_cast<int>(delta.size());
    GammaElement acc(r, d, ring);
    visit_sub_vectors(delta, [&](const ExpVec& alpha) {
        if (is_zero_vec(alpha)) return;
        ExpVec beta(delta.size());
        for (std::size_t i = 0; i < delta.size(); ++i) {
            beta[i] = delta[i] - alpha[i];
        }
        const int sign = total_degree(beta) % 2 == 0 ? 1 : -1;
        const mpq_class c = sign * mpq_class(multinomial(alpha));
        acc = add(acc, scale(c, mul(power_sum(alpha, d, ring),
                                    elementary(beta, d, ring))));
    });
    const int tail_sign = total_degree(delta) % 2 == 0 ? 1 : -1;
    const mpq_class tail = tail_sign * mpq_class(total_degree(delta));
    return add(acc, scale(tail, elementary(delta, d, ring)));
}

GammaElement generalized_newton_residual(int k, int m, const ExpVec& alpha,
                                         int d, RingSpec ring) {
    if (k < 1 || m < 1) {
        throw std::invalid_argument("relation orders must be positive");
    }
    if (k > d) {
        throw std::invalid_argument("divided power exceeds ambient degree");
    }
    if (is_zero_vec(alpha)) {
        throw std::invalid_argument("relation exponent must be nonzero");
    }
    ExpVec m_alpha(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) m_alpha[i] = m * alpha[i];
    const GammaElement head =
        generator_element({k, m_alpha}, d, ring);
    if (k * m > d) return head;
    const int sign = (k * m - k) % 2 == 0 ? 1 : -1;
    return sub(head, scale(sign * mpq_class(m),
                           generator_element({k * m, alpha}, d, ring)));
}

// ---------------------------------------------------------------------------
// Contraction coefficients
// ---------------------------------------------------------------------------

ContractionCoefficient contraction_coefficient(
    const std::vector<int>& ell, const std::vector<ExpVec>& monomials,
    int n_ambient) {
    if (ell.empty() || ell.size() != monomials.size()) {
        throw std::invalid_argument("orders and monomials must pair up");
    }
    const std::size_t r = monomials.front().size();
    long ell_total = 0, k = 0;
    ExpVec beta(r, 0);
    for (std::size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] < 1) {
            throw std::invalid_argument("divided power orders must be positive");
        }
        if (is_zero_vec(monomials[i]) || monomials[i].size() != r) {
            throw std::invalid_argument("factors must be nontrivial monomials");
        }
        ell_total += ell[i];
        k = std::gcd(k, static_cast<long>(ell[i]));
        for (std::size_t j = 0; j < r; ++j) beta[j] += ell[i] * monomials[i][j];
    }
    ExpVec alpha(r);
    for (std::size_t j = 0; j < r; ++j) alpha[j] = beta[j] / static_cast<int>(k);
    const long g = gcd_vec(alpha);
    if (n_ambient < total_degree(beta)) {
        throw std::invalid_argument("ambient degree below the key's total degree");
    }

    std::vector<long> parts(ell.begin(), ell.end());
    const mpz_class numerator = multinomial(parts) * k * g;
    mpz_class m_value, rem;
    mpz_tdiv_qr_ui(m_value.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(),
                   static_cast<unsigned long>(ell_total));
    if (rem != 0) {
        // ((ℓ))·k·g/|ℓ| is an integer combination of the ((ℓ−eᵢ)); a nonzero
        // remainder means the implementation, not the identity, is broken.
        throw std::logic_error("paper invariant violated");
    }
    ContractionCoefficient out;
    out.sign = (ell_total - k) % 2 == 0 ? 1 : -1;
    out.m = m_value;
    out.g = g;
    out.k = k;
    out.alpha = alpha;
    return out;
}

}  // namespace msym
