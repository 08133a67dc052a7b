#include "msym/element.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace msym {

namespace {

/// binom(a+b, b) as the two-part multinomial ((a, b)).
mpz_class binom2(long a, long b) { return multinomial(std::vector<long>{a, b}); }

}  // namespace

// ---------------------------------------------------------------------------
// MultiIndex
// ---------------------------------------------------------------------------

MultiIndex MultiIndex::single(const ExpVec& m, int mult) {
    MultiIndex nu;
    nu.insert(m, mult);
    return nu;
}

void MultiIndex::insert(const ExpVec& m, int mult) {
    if (mult <= 0) {
        throw std::invalid_argument("multiplicity must be positive");
    }
    if (is_zero_vec(m)) {
        throw std::invalid_argument("unit monomial not allowed in a multi-index");
    }
    if (!entries_.empty() && entries_.front().first.size() != m.size()) {
        throw std::invalid_argument("mixed variable counts in a multi-index");
    }
    MonoOrder less;
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), m,
        [&](const std::pair<ExpVec, int>& e, const ExpVec& key) {
            return less(e.first, key);
        });
    if (it != entries_.end() && it->first == m) {
        it->second += mult;
    } else {
        entries_.insert(it, {m, mult});
    }
}

int MultiIndex::length() const {
    int len = 0;
    for (const auto& [m, n] : entries_) len += n;
    return len;
}

ExpVec MultiIndex::multidegree(int r) const {
    ExpVec md(r, 0);
    for (const auto& [m, n] : entries_) {
        for (std::size_t i = 0; i < m.size(); ++i) md[i] += n * m[i];
    }
    return md;
}

int MultiIndex::total_deg() const {
    int t = 0;
    for (const auto& [m, n] : entries_) t += n * total_degree(m);
    return t;
}

int MultiIndex::mult_of(const ExpVec& m) const {
    for (const auto& [key, n] : entries_) {
        if (key == m) return n;
    }
    return 0;
}

std::string MultiIndex::str() const {
    std::string out = "m{";
    bool first = true;
    for (const auto& [m, n] : entries_) {
        if (!first) out += ",";
        first = false;
        out += "(";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(m[i]);
        }
        out += ")";
        if (n > 1) out += "^" + std::to_string(n);
    }
    out += "}";
    return out;
}

bool MultiIndexOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int ta = a.total_deg(), tb = b.total_deg();
    if (ta != tb) return ta < tb;
    // Same total degree; both empty only when it is zero.
    const std::size_t ra =
        a.empty() ? 0 : a.entries().front().first.size();
    const ExpVec ma = a.multidegree(static_cast<int>(ra));
    const ExpVec mb = b.multidegree(static_cast<int>(
        b.empty() ? 0 : b.entries().front().first.size()));
    if (ma != mb) return ma < mb;
    MonoOrder mono_less;
    const auto pair_less = [&](const std::pair<ExpVec, int>& x,
                               const std::pair<ExpVec, int>& y) {
        if (mono_less(x.first, y.first)) return true;
        if (mono_less(y.first, x.first)) return false;
        return x.second < y.second;
    };
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end(),
                                        pair_less);
}

// ---------------------------------------------------------------------------
// GammaElement
// ---------------------------------------------------------------------------

GammaElement::GammaElement(int r, int d, RingSpec ring)
    : r_(r), d_(d), ring_(ring) {
    if (r < 1) throw std::invalid_argument("variable count must be positive");
    if (d < 0) throw std::invalid_argument("ambient degree must be nonnegative");
}

void GammaElement::add_term(const MultiIndex& nu, const mpq_class& c) {
    if (nu.length() > d_) {
        throw std::invalid_argument("length exceeds ambient degree");
    }
    if (!nu.empty() &&
        nu.entries().front().first.size() != static_cast<std::size_t>(r_)) {
        throw std::invalid_argument("monomial has wrong variable count");
    }
    auto it = terms_.find(nu);
    const mpq_class sum =
        ring_.normalize(it == terms_.end() ? c : it->second + c);
    if (RingSpec::is_zero(sum)) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(nu, sum);
    } else {
        it->second = sum;
    }
}

mpq_class GammaElement::coeff(const MultiIndex& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

GammaElement basis_element(const MultiIndex& nu, int d, int r, RingSpec ring) {
    GammaElement f(r, d, ring);
    f.add_term(nu, 1);
    return f;
}

GammaElement unit_element(int d, int r, RingSpec ring) {
    return basis_element(MultiIndex(), d, r, ring);
}

// ---------------------------------------------------------------------------
// Linear structure
// ---------------------------------------------------------------------------

namespace {

void check_same_ambient(const GammaElement& f, const GammaElement& g) {
    if (f.r() != g.r() || f.d() != g.d() || !(f.ring() == g.ring())) {
        throw std::invalid_argument("mismatched ambient data");
    }
}

}  // namespace

GammaElement add(const GammaElement& f, const GammaElement& g) {
    check_same_ambient(f, g);
    GammaElement out = f;
    for (const auto& [nu, c] : g.terms()) out.add_term(nu, c);
    return out;
}

GammaElement sub(const GammaElement& f, const GammaElement& g) {
    check_same_ambient(f, g);
    GammaElement out = f;
    for (const auto& [nu, c] : g.terms()) out.add_term(nu, -c);
    return out;
}

GammaElement scale(const mpq_class& c, const GammaElement& f) {
    GammaElement out(f.r(), f.d(), f.ring());
    for (const auto& [nu, a] : f.terms()) out.add_term(nu, c * a);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication
// ---------------------------------------------------------------------------

namespace {

/// A multi-index padded with the unit monomial up to total multiplicity d.
struct PaddedIndex {
    std::vector<ExpVec> monos;
    std::vector<int> mults;
};

PaddedIndex pad_to_degree(const MultiIndex& nu, int d, int r) {
    PaddedIndex p;
    for (const auto& [m, n] : nu.entries()) {
        p.monos.push_back(m);
        p.mults.push_back(n);
    }
    const int pad = d - nu.length();
    if (pad > 0) {
        p.monos.push_back(ExpVec(r, 0));
        p.mults.push_back(pad);
    }
    return p;
}

/**
 * Enumerate nonnegative integer matrices with prescribed row and column sums
 * (contingency tables), row by row with remaining-capacity pruning.  Row and
 * column totals agree by construction, so every completed table is exact.
 */
class TableEnumerator {
public:
    TableEnumerator(const std::vector<int>& row_sums,
                    const std::vector<int>& col_sums)
        : row_sums_(row_sums),
          rem_cols_(col_sums),
          table_(row_sums.size(), std::vector<int>(col_sums.size(), 0)) {}

    template <typename Visit>
    void run(Visit&& visit) {
        recurse_row(0, visit);
    }

private:
    template <typename Visit>
    void recurse_row(std::size_t i, Visit& visit) {
        if (i == row_sums_.size()) {
            visit(table_);
            return;
        }
        recurse_cell(i, 0, row_sums_[i], visit);
    }

    template <typename Visit>
    void recurse_cell(std::size_t i, std::size_t j, int remaining,
                      Visit& visit) {
        if (j + 1 == rem_cols_.size()) {
            if (remaining <= rem_cols_[j]) {
                table_[i][j] = remaining;
                rem_cols_[j] -= remaining;
                recurse_row(i + 1, visit);
                rem_cols_[j] += remaining;
                table_[i][j] = 0;
            }
            return;
        }
        const int hi = std::min(remaining, rem_cols_[j]);
        for (int v = 0; v <= hi; ++v) {
            table_[i][j] = v;
            rem_cols_[j] -= v;
            recurse_cell(i, j + 1, remaining - v, visit);
            rem_cols_[j] += v;
        }
        table_[i][j] = 0;
    }

    std::vector<int> row_sums_;
    std::vector<int> rem_cols_;
    std::vector<std::vector<int>> table_;
};

}  // namespace

GammaElement mul(const GammaElement& f, const GammaElement& g) {
    check_same_ambient(f, g);
    const int r = f.r(), d = f.d();
    GammaElement out(r, d, f.ring());
    for (const auto& [mu, cf] : f.terms()) {
        const PaddedIndex rows = pad_to_degree(mu, d, r);
        for (const auto& [nv, cg] : g.terms()) {
            const PaddedIndex cols = pad_to_degree(nv, d, r);
            TableEnumerator tables(rows.mults, cols.mults);
            tables.run([&](const std::vector<std::vector<int>>& t) {
                // Collect cellwise monomial products, merging equal monomials
                // with divided-power binomials; the unit·unit cell (at most
                // one, from the paddings) contributes ⋄ padding only.
                std::map<ExpVec, int, MonoOrder> acc;
                mpz_class factor = 1;
                for (std::size_t i = 0; i < rows.monos.size(); ++i) {
                    for (std::size_t j = 0; j < cols.monos.size(); ++j) {
                        const int cell = t[i][j];
                        if (cell == 0) continue;
                        const ExpVec m = add_vec(rows.monos[i], cols.monos[j]);
                        if (is_zero_vec(m)) continue;
                        int& seen = acc[m];
                        factor *= binom2(seen, cell);
                        seen += cell;
                    }
                }
                MultiIndex prod;
                for (const auto& [m, n] : acc) prod.insert(m, n);
                out.add_term(prod, cf * cg * mpq_class(factor));
            });
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shuffle, truncation, substitution
// ---------------------------------------------------------------------------

GammaElement shuffle(const GammaElement& f, const GammaElement& g) {
    if (f.r() != g.r() || !(f.ring() == g.ring())) {
        throw std::invalid_argument("mismatched r/ring");
    }
    GammaElement out(f.r(), f.d() + g.d(), f.ring());
    for (const auto& [n1, c1] : f.terms()) {
        const long pad1 = f.d() - n1.length();
        for (const auto& [n2, c2] : g.terms()) {
            const long pad2 = g.d() - n2.length();
            mpz_class factor = binom2(pad1, pad2);
            MultiIndex merged = n1;
            for (const auto& [m, n] : n2.entries()) {
                factor *= binom2(n1.mult_of(m), n);
                merged.insert(m, n);
            }
            out.add_term(merged, c1 * c2 * mpq_class(factor));
        }
    }
    return out;
}

GammaElement rho(const GammaElement& f, int d_target) {
    if (d_target > f.d()) {
        throw std::invalid_argument("truncation target exceeds source degree");
    }
    GammaElement out(f.r(), d_target, f.ring());
    for (const auto& [nu, c] : f.terms()) {
        if (nu.length() <= d_target) out.add_term(nu, c);
    }
    return out;
}

GammaElement substitute(const GammaElement& f,
                        const std::vector<ExpVec>& images) {
    if (images.size() != static_cast<std::size_t>(f.r())) {
        throw std::invalid_argument("substitution must map every variable");
    }
    for (const ExpVec& img : images) {
        if (is_zero_vec(img)) {
            throw std::invalid_argument("degenerate substitution unsupported");
        }
        if (img.size() != images.front().size()) {
            throw std::invalid_argument("substitution images of unequal arity");
        }
    }
    const std::size_t s = images.front().size();
    GammaElement out(static_cast<int>(s), f.d(), f.ring());
    for (const auto& [nu, c] : f.terms()) {
        std::map<ExpVec, int, MonoOrder> acc;
        mpz_class factor = 1;
        for (const auto& [m, n] : nu.entries()) {
            ExpVec img(s, 0);
            for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::size_t j = 0; j < s; ++j) {
                    img[j] += m[i] * images[i][j];
                }
            }
            int& seen = acc[img];
            factor *= binom2(seen, n);
            seen += n;
        }
        MultiIndex mapped;
        for (const auto& [m, n] : acc) mapped.insert(m, n);
        out.add_term(mapped, c * mpq_class(factor));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure queries
// ---------------------------------------------------------------------------

std::map<ExpVec, GammaElement> multidegree_components(const GammaElement& f) {
    std::map<ExpVec, GammaElement> parts;
    for (const auto& [nu, c] : f.terms()) {
        const ExpVec md = nu.multidegree(f.r());
        auto it = parts.find(md);
        if (it == parts.end()) {
            it = parts.emplace(md, GammaElement(f.r(), f.d(), f.ring())).first;
        }
        it->second.add_term(nu, c);
    }
    return parts;
}

int support_length(const GammaElement& f) {
    int len = 0;
    for (const auto& [nu, c] : f.terms()) len = std::max(len, nu.length());
    return len;
}

ExpVec homogeneous_multidegree(const GammaElement& f) {
    if (f.is_zero()) {
        throw std::invalid_argument("multidegree undefined for zero element");
    }
    const ExpVec md = f.terms().begin()->first.multidegree(f.r());
    for (const auto& [nu, c] : f.terms()) {
        if (nu.multidegree(f.r()) != md) {
            throw std::invalid_argument("inhomogeneous element");
        }
    }
    return md;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string to_string(const GammaElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [nu, c] : f.terms()) {
        mpq_class a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (a != 1) out += coeff_str(a) + "*";
        out += nu.str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GammaElement& f) {
    return os << to_string(f);
}

}  // namespace msym
