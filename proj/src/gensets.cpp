#include "msym/gensets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msym {

// ---------------------------------------------------------------------------
// PrimeProfile
// ---------------------------------------------------------------------------

PrimeProfile PrimeProfile::empty_profile() {
    return PrimeProfile(ProfileKind::Empty, {});
}

PrimeProfile PrimeProfile::all_primes() {
    return PrimeProfile(ProfileKind::AllPrimes, {});
}

PrimeProfile PrimeProfile::explicit_primes(std::vector<long> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (long p : primes) {
        if (!is_prime(p)) {
            throw std::invalid_argument("profile entries must be prime: " +
                                        std::to_string(p));
        }
    }
    return PrimeProfile(ProfileKind::Explicit, std::move(primes));
}

PrimeProfile PrimeProfile::parse(const std::string& text) {
    if (text == "none") return empty_profile();
    if (text == "all") return all_primes();
    std::vector<long> primes;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty() ||
            item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed prime list: " + text);
        }
        primes.push_back(std::stol(item));
        pos = comma + 1;
    }
    return explicit_primes(std::move(primes));
}

bool PrimeProfile::contains(long p) const {
    switch (kind_) {
        case ProfileKind::Empty:
            return false;
        case ProfileKind::AllPrimes:
            return is_prime(p);
        case ProfileKind::Explicit:
            return std::binary_search(primes_.begin(), primes_.end(), p);
    }
    return false;
}

std::vector<long> PrimeProfile::relevant(int bound) const {
    std::vector<long> out;
    switch (kind_) {
        case ProfileKind::Empty:
            break;
        case ProfileKind::AllPrimes:
            for (long p = 2; p <= bound; ++p) {
                if (is_prime(p)) out.push_back(p);
            }
            break;
        case ProfileKind::Explicit:
            for (long p : primes_) {
                if (p <= bound) out.push_back(p);
            }
            break;
    }
    return out;
}

std::string PrimeProfile::str() const {
    switch (kind_) {
        case ProfileKind::Empty:
            return "none";
        case ProfileKind::AllPrimes:
            return "all";
        case ProfileKind::Explicit: {
            std::string out;
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(primes_[i]);
            }
            return out;
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// Collections and the minimality criterion
// ---------------------------------------------------------------------------

namespace {

void check_key_range(const GeneratorKey& key, int d) {
    if (key.k < 1 || key.k > d) {
        throw std::invalid_argument("divided power exceeds ambient degree");
    }
    if (is_zero_vec(key.alpha)) {
        throw std::invalid_argument("generator exponent must be nonzero");
    }
}

/// Is n·1_A invertible, i.e. free of non-invertible prime factors?
bool unit_in_profile(long n, const PrimeProfile& profile) {
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            if (profile.contains(p)) return false;
            while (n % p == 0) n /= p;
        }
    }
    return n <= 1 || !profile.contains(n);
}

/// Is k a (possibly empty) product of non-invertible primes?
bool product_of_profile_primes(long k, const PrimeProfile& profile) {
    for (long p = 2; p <= k; ++p) {
        while (k % p == 0) {
            if (!profile.contains(p)) return false;
            k /= p;
        }
    }
    return true;
}

GeneratorReport make_report(const GeneratorKey& key, ReasonKind reason,
                            long witness_p) {
    GeneratorReport report;
    report.key = key;
    report.total_degree = key.total_deg();
    report.multidegree = key.multidegree();
    report.reason = reason;
    report.witness_p = witness_p;
    return report;
}

}  // namespace

bool in_collection(const GeneratorKey& key, int d, const PrimeProfile& profile,
                   GenCollection which) {
    check_key_range(key, d);
    const long g = gcd_vec(key.alpha);
    if (which == GenCollection::C2) return g == 1;
    return unit_in_profile(g, profile) &&
           product_of_profile_primes(key.k, profile);
}

std::optional<GeneratorReport> is_minimal_generator(
    const GeneratorKey& key, int d, const PrimeProfile& profile) {
    check_key_range(key, d);
    if (gcd_vec(key.alpha) != 1) {
        throw std::invalid_argument("key outside C₂");
    }
    if (key.total_deg() <= d) {
        return make_report(key, ReasonKind::LowDegree, 0);
    }
    for (long p : profile.relevant(d)) {
        if (poly_cmp(digit_sum_vec(key.multidegree(), p), digits(d, p)) !=
            Ordering::Greater) {
            return make_report(key, ReasonKind::DigitWitness, p);
        }
    }
    return std::nullopt;
}

void visit_compositions(int total, int r,
                        const std::function<void(const ExpVec&)>& visit) {
    ExpVec alpha(r, 0);
    const std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == r - 1) {
            alpha[pos] = remaining;
            visit(alpha);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            alpha[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (r >= 1) rec(0, total);
}

std::vector<GeneratorReport> enumerate_minimal_generators(
    int r, int d, const PrimeProfile& profile) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("r and d must be positive");
    }
    const int bound = sharp_degree_bound(r, d, profile);
    std::vector<GeneratorReport> out;
    for (int k = 1; k <= d; ++k) {
        for (int t = 1; k * t <= bound; ++t) {
            visit_compositions(t, r, [&](const ExpVec& alpha) {
                if (gcd_vec(alpha) != 1) return;
                const GeneratorKey key{k, alpha};
                if (auto report = is_minimal_generator(key, d, profile)) {
                    out.push_back(*report);
                }
            });
        }
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorReport& a, const GeneratorReport& b) {
                  return key_less(a.key, b.key);
              });
    return out;
}

// ---------------------------------------------------------------------------
// Degree bounds
// ---------------------------------------------------------------------------

int sharp_degree_bound(int r, int d, const PrimeProfile& profile) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("r and d must be positive");
    }
    int best = d;
    for (long p : profile.relevant(d)) {
        long pb = 1;
        while (pb * p <= d) pb *= p;
        const long a = d / pb;  // 1 ≤ a ≤ p−1 because p·pb > d
        const long candidate = (a + r - 1) * pb - r;
        best = std::max<long>(best, candidate);
    }
    return best;
}

int fleischmann_bound(int r, int d) {
    return std::max(d, r * (d - 1));
}

bool multidegree_bound_check(const std::vector<GeneratorReport>& reports,
                             int r, int d, const PrimeProfile& profile) {
    (void)profile;
    for (const GeneratorReport& report : reports) {
        const ExpVec md = report.multidegree;
        const bool is_primitive_top =
            report.key.k == d && total_degree(report.key.alpha) == 1;
        if (is_primitive_top) continue;
        for (int entry : md) {
            if (entry > d - 1) return false;
        }
    }
    if (d >= 2) {
        // Sharpness: the corner multidegree (d−1)·eᵢ must occur for every i.
        for (int i = 0; i < r; ++i) {
            ExpVec corner(r, 0);
            corner[i] = d - 1;
            const bool found =
                std::any_of(reports.begin(), reports.end(),
                            [&](const GeneratorReport& report) {
                                return report.multidegree == corner;
                            });
            if (!found) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Main Lemma predicate and sharp relations
// ---------------------------------------------------------------------------

bool main_lemma_predicate(const ExpVec& alpha, int d, long p) {
    if (is_zero_vec(alpha)) {
        throw std::invalid_argument("exponent must be nonzero");
    }
    if (d >= total_degree(alpha)) {
        throw std::invalid_argument("lemma hypothesis violated");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("p must be prime");
    }
    return poly_cmp(digit_sum_vec(alpha, p), digits(d, p)) == Ordering::Greater;
}

bool sharp_relation_exists(const GeneratorKey& key, int d,
                           const PrimeProfile& profile) {
    check_key_range(key, d);
    if (d >= key.total_deg()) {
        throw std::invalid_argument(
            "key is low-degree; relations concern total degree above d");
    }
    if (!unit_in_profile(gcd_vec(key.alpha), profile)) {
        throw std::invalid_argument("exponent gcd must be invertible");
    }
    for (long p : profile.relevant(d)) {
        if (poly_cmp(digit_sum_vec(key.multidegree(), p), digits(d, p)) !=
            Ordering::Greater) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Elementary generation
// ---------------------------------------------------------------------------

bool elementary_generation(int r, int d, const PrimeProfile& profile) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("r and d must be positive");
    }
    if (r == 1) return true;
    if (profile.relevant(d).empty()) return true;  // d! invertible
    if (r == 2 && d == 2) return true;
    if (r == 2 && d == 3 && !profile.contains(3)) return true;
    return false;
}

bool elementary_generation_low_degree(int r, int d,
                                      const PrimeProfile& profile) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("r and d must be positive");
    }
    if (r == 1) return true;
    if (r == 2 && d == 3) return true;
    if (r == 2 && d == 4 && !profile.contains(3)) return true;
    return profile.relevant(d - 1).empty();  // (d−1)! invertible
}

bool elementary_covers(const GeneratorKey& key, int d,
                       const PrimeProfile& profile) {
    check_key_range(key, d);
    if (key.total_deg() > d) {
        throw std::invalid_argument("covering concerns low-degree keys only");
    }
    if (!unit_in_profile(gcd_vec(key.alpha), profile)) {
        throw std::invalid_argument("exponent gcd must be invertible");
    }
    const mpz_class kalpha_multinomial = multinomial(key.multidegree());
    const long total = total_degree(key.alpha);
    for (long p : profile.relevant(d)) {
        if (ord_p(kalpha_multinomial, p) != ord_p(mpz_class(total), p)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Characteristic-p generators
// ---------------------------------------------------------------------------

std::vector<GeneratorReport> char_p_generators(int r, int d, long p) {
    if (r < 1 || d < 1) {
        throw std::invalid_argument("r and d must be positive");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("p must be prime");
    }
    long pb = 1;
    while (pb * p <= d) pb *= p;  // p^{b} with b maximal, p^b ≤ d
    const DigitPoly qd = digits(d, p);
    std::vector<GeneratorReport> out;
    for (long ps = 1; ps <= d; ps *= p) {
        // Entries are bounded by p^{b+1}/p^s: any larger entry alone already
        // pushes Q_p(p^s·α) past Q_p(d).
        const long entry_bound = (pb * p) / ps;  // exclusive
        const int max_total = static_cast<int>((entry_bound - 1) * r);
        for (int t = 1; t <= max_total; ++t) {
            visit_compositions(t, r, [&](const ExpVec& alpha) {
                bool coprime = false;
                for (int e : alpha) {
                    if (e >= entry_bound) return;
                    if (e % p != 0) coprime = true;
                }
                if (!coprime) return;
                GeneratorKey key{static_cast<int>(ps), alpha};
                if (poly_cmp(digit_sum_vec(key.multidegree(), p), qd) ==
                    Ordering::Greater) {
                    return;
                }
                const ReasonKind reason = key.total_deg() <= d
                                              ? ReasonKind::LowDegree
                                              : ReasonKind::DigitWitness;
                out.push_back(make_report(
                    key, reason, reason == ReasonKind::DigitWitness ? p : 0));
            });
        }
    }
    std::sort(out.begin(), out.end(),
              [](const GeneratorReport& a, const GeneratorReport& b) {
                  return key_less(a.key, b.key);
              });
    return out;
}

}  // namespace msym
