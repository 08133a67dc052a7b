// Unit tests for the generating-set machinery: prime profiles, the
// minimal-generator criterion, degree bounds, elementary-generation case
// analysis, and the characteristic-p generator family.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "msym/gensets.hpp"

using namespace msym;

namespace {

const PrimeProfile NONE = PrimeProfile::empty_profile();
const PrimeProfile ALL = PrimeProfile::all_primes();
const PrimeProfile P2 = PrimeProfile::explicit_primes({2});
const PrimeProfile P3 = PrimeProfile::explicit_primes({3});

std::set<std::pair<int, ExpVec>> key_set(
    const std::vector<GeneratorReport>& reports) {
    std::set<std::pair<int, ExpVec>> out;
    for (const auto& rep : reports) out.insert({rep.key.k, rep.key.alpha});
    return out;
}

std::multiset<ExpVec> multidegree_multiset(
    const std::vector<GeneratorReport>& reports) {
    std::multiset<ExpVec> out;
    for (const auto& rep : reports) out.insert(rep.multidegree);
    return out;
}

bool is_prime_power_of(long d, long p) {
    while (d % p == 0) d /= p;
    return d == 1;
}

}  // namespace

TEST_CASE("prime profiles") {
    CHECK(PrimeProfile::parse("none") == NONE);
    CHECK(PrimeProfile::parse("all") == ALL);
    CHECK(PrimeProfile::parse("2,3") ==
          PrimeProfile::explicit_primes({3, 2}));  // order-insensitive
    CHECK_THROWS_WITH_AS(PrimeProfile::parse("2,x"),
                         "malformed prime list: 2,x", std::invalid_argument);
    CHECK_THROWS_WITH_AS(PrimeProfile::explicit_primes({4}),
                         "profile entries must be prime: 4",
                         std::invalid_argument);

    CHECK_FALSE(NONE.contains(2));
    CHECK(ALL.contains(7));
    CHECK_FALSE(ALL.contains(6));
    CHECK(P2.contains(2));
    CHECK_FALSE(P2.contains(3));

    CHECK(NONE.relevant(10).empty());
    CHECK(ALL.relevant(4) == std::vector<long>{2, 3});
    CHECK(PrimeProfile::explicit_primes({2, 7}).relevant(5) ==
          std::vector<long>{2});
    CHECK(ALL.relevant(1).empty());

    CHECK(NONE.str() == "none");
    CHECK(ALL.str() == "all");
    CHECK(PrimeProfile::explicit_primes({3, 2}).str() == "2,3");
}

TEST_CASE("collections C1 and C2") {
    // C1: gcd(alpha) invertible, k a product of profile primes.
    CHECK(in_collection({2, {1, 1}}, 4, P2, GenCollection::C1));
    CHECK_FALSE(in_collection({3, {1, 1}}, 4, P2, GenCollection::C1));
    CHECK(in_collection({4, {1, 1}}, 4, P2, GenCollection::C1));
    CHECK_FALSE(in_collection({2, {2, 4}}, 4, P2, GenCollection::C1));
    CHECK(in_collection({1, {2, 4}}, 4, P3, GenCollection::C1));
    CHECK_FALSE(in_collection({6, {1, 1}}, 6, P2, GenCollection::C1));
    // With an empty profile only k=1 qualifies.
    CHECK(in_collection({1, {2, 3}}, 4, NONE, GenCollection::C1));
    CHECK_FALSE(in_collection({2, {2, 3}}, 4, NONE, GenCollection::C1));

    // C2: gcd(alpha) = 1, independent of the profile.
    CHECK(in_collection({2, {1, 1}}, 4, NONE, GenCollection::C2));
    CHECK_FALSE(in_collection({2, {2, 4}}, 4, P2, GenCollection::C2));

    CHECK_THROWS_WITH_AS(
        in_collection({5, {1, 1}}, 4, P2, GenCollection::C1),
        "divided power exceeds ambient degree", std::invalid_argument);
}

TEST_CASE("minimal-generator criterion on documented keys") {
    // (2,(1,1)), d=3, P={3}: Q3(2,2) = 4 <= t = Q3(3).
    const auto with3 = is_minimal_generator({2, {1, 1}}, 3, P3);
    REQUIRE(with3.has_value());
    CHECK(with3->reason == ReasonKind::DigitWitness);
    CHECK(with3->witness_p == 3);
    CHECK(with3->total_degree == 4);
    CHECK(with3->multidegree == ExpVec{2, 2});

    // Same key over P={2}: Q2(2,2) = 2t > t+1 = Q2(3).
    CHECK_FALSE(is_minimal_generator({2, {1, 1}}, 3, P2).has_value());

    // Low-degree keys are minimal whatever the profile.
    for (const PrimeProfile& profile : {NONE, ALL, P2, P3}) {
        const auto low = is_minimal_generator({1, {1, 1}}, 2, profile);
        REQUIRE(low.has_value());
        CHECK(low->reason == ReasonKind::LowDegree);
    }

    CHECK_THROWS_WITH_AS(is_minimal_generator({1, {2, 2}}, 2, P2),
                         "key outside C₂", std::invalid_argument);
}

TEST_CASE("minimal generator enumeration: counts and specific keys") {
    // r = 1: exactly e_1 ... e_d for any profile.
    for (const PrimeProfile& profile : {NONE, P2, ALL}) {
        for (int d = 1; d <= 5; ++d) {
            const auto reports = enumerate_minimal_generators(1, d, profile);
            REQUIRE(static_cast<int>(reports.size()) == d);
            for (int k = 1; k <= d; ++k) {
                CHECK(reports[static_cast<size_t>(k - 1)].key.k == k);
                CHECK(reports[static_cast<size_t>(k - 1)].key.alpha ==
                      ExpVec{1});
            }
        }
    }

    // (r,d) = (2,2): the same five generators over {2} and over the empty
    // profile.
    const std::set<std::pair<int, ExpVec>> five = {
        {1, {1, 0}}, {1, {0, 1}}, {2, {1, 0}}, {2, {0, 1}}, {1, {1, 1}}};
    CHECK(key_set(enumerate_minimal_generators(2, 2, P2)) == five);
    CHECK(key_set(enumerate_minimal_generators(2, 2, NONE)) == five);

    // (2,(1,1)) appears for P={3} at d=3 but not for P={2}.
    const auto at3 = key_set(enumerate_minimal_generators(2, 3, P3));
    CHECK(at3.count({2, {1, 1}}) == 1);
    const auto at2 = key_set(enumerate_minimal_generators(2, 3, P2));
    CHECK(at2.count({2, {1, 1}}) == 0);

    // Reports come sorted by (total degree, multidegree, k).
    const auto reports = enumerate_minimal_generators(2, 4, P2);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const GeneratorReport& a,
                            const GeneratorReport& b) {
                             return key_less(a.key, b.key);
                         }));
    // The degree-6 generator (3,(1,1)) is present, via the prime 2.
    const auto it = std::find_if(reports.begin(), reports.end(),
                                 [](const GeneratorReport& rep) {
                                     return rep.key.k == 3 &&
                                            rep.key.alpha == ExpVec{1, 1};
                                 });
    REQUIRE(it != reports.end());
    CHECK(it->reason == ReasonKind::DigitWitness);
    CHECK(it->witness_p == 2);
    CHECK(it->total_degree == 6);
}

TEST_CASE("degree bounds") {
    CHECK(sharp_degree_bound(2, 4, P2) == 6);
    CHECK(sharp_degree_bound(2, 3, P2) == 3);
    CHECK(sharp_degree_bound(2, 3, P3) == 4);
    CHECK(sharp_degree_bound(3, 2, P2) == 3);
    CHECK(sharp_degree_bound(1, 7, ALL) == 7);
    CHECK(sharp_degree_bound(4, 8, NONE) == 8);

    CHECK(fleischmann_bound(2, 3) == 4);
    CHECK(fleischmann_bound(1, 9) == 9);
    CHECK(fleischmann_bound(3, 4) == 9);
    CHECK(fleischmann_bound(2, 4) == 6);

    // sharp(2,3,{2}) = 3 sits strictly below Fleischmann's 4.
    CHECK(sharp_degree_bound(2, 3, P2) < fleischmann_bound(2, 3));
}

TEST_CASE("sharp bound vs Fleischmann bound: comparison and equality cases") {
    for (int r = 1; r <= 4; ++r) {
        for (int d = 1; d <= 8; ++d) {
            for (long p = 2; p <= d; ++p) {
                if (!is_prime(p)) continue;
                const PrimeProfile profile = PrimeProfile::explicit_primes({p});
                const int sharp = sharp_degree_bound(r, d, profile);
                const int coarse = fleischmann_bound(r, d);
                CHECK(sharp <= coarse);
                const bool expect_equal =
                    r == 1 || (r == 2 && d == 2) || is_prime_power_of(d, p);
                CHECK((sharp == coarse) == expect_equal);
            }
        }
    }
}

TEST_CASE("max enumerated degree equals the sharp bound") {
    const std::vector<std::tuple<int, int, PrimeProfile>> cases = {
        {1, 4, P2}, {2, 2, P2}, {2, 3, P2}, {2, 3, P3},
        {2, 4, P2}, {3, 2, P2}, {2, 3, NONE}, {2, 4, NONE}};
    for (const auto& [r, d, profile] : cases) {
        const auto reports = enumerate_minimal_generators(r, d, profile);
        int max_degree = 0;
        for (const auto& rep : reports) {
            max_degree = std::max(max_degree, rep.total_degree);
        }
        CHECK(max_degree == sharp_degree_bound(r, d, profile));
    }
}

TEST_CASE("multidegree bound with attainment") {
    CHECK(multidegree_bound_check(enumerate_minimal_generators(2, 2, P2), 2, 2,
                                  P2));
    CHECK(multidegree_bound_check(enumerate_minimal_generators(2, 4, P2), 2, 4,
                                  P2));
    CHECK(multidegree_bound_check(enumerate_minimal_generators(1, 5, P2), 1, 5,
                                  P2));
    CHECK(multidegree_bound_check(enumerate_minimal_generators(3, 2, P2), 3, 2,
                                  P2));
}

TEST_CASE("monotone closure: componentwise-smaller keys stay minimal") {
    const std::vector<std::tuple<int, int, PrimeProfile>> cases = {
        {2, 3, P2}, {2, 3, P3}, {2, 4, P2}, {3, 2, P2}};
    for (const auto& [r, d, profile] : cases) {
        for (const auto& rep : enumerate_minimal_generators(r, d, profile)) {
            // Walk every positive multidegree below this generator's.
            ExpVec probe(static_cast<size_t>(r), 0);
            const std::function<void(std::size_t)> walk = [&](std::size_t i) {
                if (i == probe.size()) {
                    if (is_zero_vec(probe)) return;
                    const int k = static_cast<int>(gcd_vec(probe));
                    if (k > d) return;
                    ExpVec alpha = probe;
                    for (int& v : alpha) v /= k;
                    CHECK(is_minimal_generator({k, alpha}, d, profile)
                              .has_value());
                    return;
                }
                for (int v = 0; v <= rep.multidegree[i]; ++v) {
                    probe[i] = v;
                    walk(i + 1);
                }
            };
            walk(0);
        }
    }
}

TEST_CASE("main lemma digit predicate") {
    CHECK(main_lemma_predicate({2, 1}, 2, 2));
    CHECK_FALSE(main_lemma_predicate({1, 1, 1, 1}, 3, 2));
    CHECK(main_lemma_predicate({1, 1}, 1, 2));
    CHECK_FALSE(main_lemma_predicate({1, 1, 1}, 2, 2));

    CHECK_THROWS_WITH_AS(main_lemma_predicate({0, 0}, 0, 2),
                         "exponent must be nonzero", std::invalid_argument);
    CHECK_THROWS_WITH_AS(main_lemma_predicate({2, 1}, 3, 2),
                         "lemma hypothesis violated", std::invalid_argument);
    CHECK_THROWS_WITH_AS(main_lemma_predicate({2, 1}, 2, 6), "p must be prime",
                         std::invalid_argument);
}

TEST_CASE("sharp relation existence complements minimality above degree d") {
    CHECK(sharp_relation_exists({2, {1, 1}}, 3, P2));
    CHECK_FALSE(sharp_relation_exists({2, {1, 1}}, 3, P3));
    CHECK(sharp_relation_exists({2, {1, 1}}, 3, NONE));  // empty quantifier

    // Negation property across every high-degree key in range.
    for (const PrimeProfile& profile : {P2, P3}) {
        for (int d = 2; d <= 4; ++d) {
            const int cap = sharp_degree_bound(2, d, profile) + 1;
            for (int k = 1; k <= d; ++k) {
                for (int t = 1; k * t <= cap; ++t) {
                    if (k * t <= d) continue;
                    visit_compositions(t, 2, [&, k, d](const ExpVec& alpha) {
                        if (is_zero_vec(alpha) || gcd_vec(alpha) != 1) return;
                        const GeneratorKey key{k, alpha};
                        CHECK(sharp_relation_exists(key, d, profile) ==
                              !is_minimal_generator(key, d, profile)
                                   .has_value());
                    });
                }
            }
        }
    }

    CHECK_THROWS_WITH_AS(
        sharp_relation_exists({1, {1, 1}}, 3, P2),
        "key is low-degree; relations concern total degree above d",
        std::invalid_argument);
    CHECK_THROWS_WITH_AS(sharp_relation_exists({1, {2, 2}}, 3, P2),
                         "exponent gcd must be invertible",
                         std::invalid_argument);
}

TEST_CASE("when the elementary family generates everything") {
    CHECK(elementary_generation(1, 7, ALL));
    CHECK(elementary_generation(2, 3, P2));   // 3 invertible
    CHECK_FALSE(elementary_generation(2, 3, P3));
    CHECK(elementary_generation(2, 2, P2));
    CHECK(elementary_generation(2, 2, P3));
    CHECK(elementary_generation(2, 4, NONE));  // d! invertible
    CHECK_FALSE(elementary_generation(2, 4, P2));
    CHECK_FALSE(elementary_generation(2, 4, P3));
    CHECK_FALSE(elementary_generation(3, 2, P2));
    CHECK(elementary_generation(3, 2, P3));    // no profile prime <= 2
    CHECK(elementary_generation(3, 3, NONE));
}

TEST_CASE("when the elementary family covers low total degrees") {
    CHECK(elementary_generation_low_degree(1, 9, ALL));
    CHECK(elementary_generation_low_degree(2, 3, P3));  // unconditional (2,3)
    CHECK(elementary_generation_low_degree(2, 3, P2));
    CHECK(elementary_generation_low_degree(2, 4, P2));  // 3 invertible
    CHECK_FALSE(elementary_generation_low_degree(2, 4, P3));
    CHECK(elementary_generation_low_degree(3, 3, P3));  // (d-1)! invertible
    CHECK_FALSE(elementary_generation_low_degree(3, 3, P2));
    CHECK(elementary_generation_low_degree(4, 2, ALL));  // (d-1)! = 1
}

TEST_CASE("per-key elementary covering test") {
    // ord2(((3,2))) - ord2(5) = 1: not covered over P={2} ...
    CHECK_FALSE(elementary_covers({1, {3, 2}}, 5, P2));
    // ... but covered over P={3}.
    CHECK(elementary_covers({1, {3, 2}}, 5, P3));
    // ord2(((1,1,1))) - ord2(3) = 1.
    CHECK_FALSE(elementary_covers({1, {1, 1, 1}}, 3, P2));
    CHECK(elementary_covers({1, {1, 1, 1}}, 3, NONE));

    CHECK_THROWS_WITH_AS(elementary_covers({2, {1, 1}}, 3, P2),
                         "covering concerns low-degree keys only",
                         std::invalid_argument);
}

TEST_CASE("characteristic-p generator family") {
    // r=1, d=4, p=2: multidegrees {1,2,3,4} via {(1,(1)),(2,(1)),(1,(3)),
    // (4,(1))}.
    const auto char2 = char_p_generators(1, 4, 2);
    CHECK(key_set(char2) == std::set<std::pair<int, ExpVec>>{
                                {1, {1}}, {2, {1}}, {1, {3}}, {4, {1}}});

    // Multidegree multisets match the C2 enumeration for profile {p}.
    const std::vector<std::tuple<int, int, long>> cases = {
        {1, 4, 2}, {2, 2, 2}, {2, 3, 2}, {2, 3, 3}, {2, 4, 2}, {3, 2, 2}};
    for (const auto& [r, d, p] : cases) {
        CHECK(multidegree_multiset(char_p_generators(r, d, p)) ==
              multidegree_multiset(enumerate_minimal_generators(
                  r, d, PrimeProfile::explicit_primes({p}))));
    }

    // p > d: no divided power p^s > 1 fits and the digit condition is
    // vacuous, so the multidegrees match the empty-profile enumeration.
    CHECK(multidegree_multiset(char_p_generators(2, 3, 5)) ==
          multidegree_multiset(enumerate_minimal_generators(2, 3, NONE)));

    CHECK_THROWS_WITH_AS(char_p_generators(2, 3, 9), "p must be prime",
                         std::invalid_argument);
}

TEST_CASE("composition visitor") {
    int count = 0;
    visit_compositions(3, 2, [&](const ExpVec& v) {
        CHECK(total_degree(v) == 3);
        ++count;
    });
    CHECK(count == 4);
}
