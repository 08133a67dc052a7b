/**
 * @file msym_cli.cpp
 * @brief Command-line access to the multisymmetric-function library.
 *
 * Exit codes: 0 success, 1 domain error (bad mathematical input), 2 usage
 * error (malformed flags).  All results go to standard output; with --json
 * they are emitted as a single JSON document, otherwise as fixed-format text.
 * Output is deterministic: no timestamps, no hash ordering.
 */
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "msym/expr.hpp"
#include "msym/gensets.hpp"
#include "msym/json_io.hpp"
#include "msym/oracle.hpp"

namespace {

using namespace msym;

std::string exp_str(const ExpVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

ExpVec parse_exp_list(const std::string& text) {
    ExpVec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty() ||
            item.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed exponent list: " + text);
        }
        out.push_back(std::stoi(item));
        pos = comma + 1;
    }
    return out;
}

std::string reason_str(const GeneratorReport& report) {
    if (report.reason == ReasonKind::LowDegree) return "low_degree";
    return "digit_witness(p=" + std::to_string(report.witness_p) + ")";
}

void print_reports(const std::vector<GeneratorReport>& reports) {
    for (const GeneratorReport& report : reports) {
        std::cout << "k=" << report.key.k
                  << " alpha=" << exp_str(report.key.alpha)
                  << " degree=" << report.total_degree
                  << " multidegree=" << exp_str(report.multidegree)
                  << " reason=" << reason_str(report) << "\n";
    }
}

/// Which of the four conditions makes the elementary functions generate?
/// Index 1–4 in the order: r=1; d! invertible; r=2,d=2; r=2,d=3 with 3
/// invertible.  0 when none applies.
int elementary_condition(int r, int d, const PrimeProfile& profile) {
    int condition = 0;
    if (r == 1) {
        condition = 1;
    } else if (profile.relevant(d).empty()) {
        condition = 2;
    } else if (r == 2 && d == 2) {
        condition = 3;
    } else if (r == 2 && d == 3 && !profile.contains(3)) {
        condition = 4;
    }
    if ((condition != 0) != elementary_generation(r, d, profile)) {
        throw std::logic_error("paper invariant violated");
    }
    return condition;
}

// ---------------------------------------------------------------------------
// The `verify all` suites
// ---------------------------------------------------------------------------

struct SuiteTotals {
    long product_pairs = 0, product_mismatches = 0;
    long newton_cases = 0, newton_failures = 0;
    long lemma_cases = 0, lemma_disagreements = 0;
};

SuiteTotals run_all_suites(int n) {
    SuiteTotals totals;
    const RingSpec zz = RingSpec::integers();
    const int max_r = std::min(3, n);

    for (int r = 1; r <= max_r; ++r) {
        for (int d = 1; d <= n; ++d) {
            // Collect the basis indices of total degree ≤ n.
            std::vector<MultiIndex> basis;
            basis.emplace_back();
            for (int t = 1; t <= n; ++t) {
                visit_compositions(t, r, [&](const ExpVec& beta) {
                    for (MultiIndex& nu : graded_basis(d, r, beta)) {
                        basis.push_back(std::move(nu));
                    }
                });
            }
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const GammaElement f = basis_element(basis[i], d, r, zz);
                for (std::size_t j = i; j < basis.size(); ++j) {
                    const GammaElement g = basis_element(basis[j], d, r, zz);
                    ++totals.product_pairs;
                    if (to_orbit(mul(f, g)) !=
                        orbit_mul(to_orbit(f), to_orbit(g))) {
                        ++totals.product_mismatches;
                    }
                }
            }
            for (int t = 1; t <= n; ++t) {
                visit_compositions(t, r, [&](const ExpVec& delta) {
                    ++totals.newton_cases;
                    if (!newton_identity_residual(delta, d, zz).is_zero()) {
                        ++totals.newton_failures;
                    }
                });
            }
        }
    }

    for (int r = 1; r <= max_r; ++r) {
        for (int t = 1; t <= n; ++t) {
            visit_compositions(t, r, [&](const ExpVec& alpha) {
                for (int d = 0; d < t; ++d) {
                    for (long p : {2L, 3L, 5L}) {
                        ++totals.lemma_cases;
                        const bool predicted = main_lemma_predicate(alpha, d, p);
                        const auto found = main_lemma_bruteforce(alpha, d, p);
                        const bool attained =
                            found.min_order && *found.min_order == 0;
                        if (predicted != attained) ++totals.lemma_disagreements;
                    }
                }
            });
        }
    }
    return totals;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multisymmetric functions in divided powers"};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- generators ---------------------------------------------------------
    auto* cmd_gen = app.add_subcommand(
        "generators", "enumerate the minimal generating set");
    int gen_r = 1, gen_d = 1;
    std::string gen_primes = "none";
    bool gen_json = false;
    cmd_gen->add_option("--r", gen_r, "number of variables")->required();
    cmd_gen->add_option("--d", gen_d, "divided-power degree")->required();
    cmd_gen->add_option("--primes", gen_primes,
                        "non-invertible primes: none|all|p1,p2,…");
    cmd_gen->add_flag("--json", gen_json, "emit JSON");
    cmd_gen->callback([&] {
        const PrimeProfile profile = PrimeProfile::parse(gen_primes);
        const auto reports = enumerate_minimal_generators(gen_r, gen_d, profile);
        const int bound = sharp_degree_bound(gen_r, gen_d, profile);
        if (gen_json) {
            json out{{"r", gen_r},
                     {"d", gen_d},
                     {"primes", profile.str()},
                     {"sharp_degree_bound", bound},
                     {"generators", json::array()}};
            for (const auto& report : reports) {
                out["generators"].push_back(report_to_json(report));
            }
            std::cout << out.dump(2) << "\n";
        } else {
            print_reports(reports);
            std::cout << reports.size() << " generators, sharp degree bound "
                      << bound << "\n";
        }
    });

    // --- bound --------------------------------------------------------------
    auto* cmd_bound =
        app.add_subcommand("bound", "sharp and coarse total-degree bounds");
    int bound_r = 1, bound_d = 1;
    std::string bound_primes = "none";
    bool bound_json = false;
    cmd_bound->add_option("--r", bound_r, "number of variables")->required();
    cmd_bound->add_option("--d", bound_d, "divided-power degree")->required();
    cmd_bound->add_option("--primes", bound_primes,
                          "non-invertible primes: none|all|p1,p2,…");
    cmd_bound->add_flag("--json", bound_json, "emit JSON");
    cmd_bound->callback([&] {
        const PrimeProfile profile = PrimeProfile::parse(bound_primes);
        const int sharp = sharp_degree_bound(bound_r, bound_d, profile);
        const int coarse = fleischmann_bound(bound_r, bound_d);
        if (bound_json) {
            json out{{"r", bound_r},
                     {"d", bound_d},
                     {"primes", profile.str()},
                     {"sharp", sharp},
                     {"fleischmann", coarse}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "sharp: " << sharp << "\n"
                      << "fleischmann: " << coarse << "\n";
        }
    });

    // --- mul ----------------------------------------------------------------
    auto* cmd_mul = app.add_subcommand("mul", "multiply two expressions");
    int mul_r = 1, mul_d = 1;
    std::string mul_ring = "Z", mul_lhs, mul_rhs;
    bool mul_json = false;
    cmd_mul->add_option("--d", mul_d, "divided-power degree")->required();
    cmd_mul->add_option("--r", mul_r, "number of variables")->required();
    cmd_mul->add_option("--ring", mul_ring, "coefficient ring: Z|Q|Fp:P");
    cmd_mul->add_option("lhs", mul_lhs, "left factor")->required();
    cmd_mul->add_option("rhs", mul_rhs, "right factor")->required();
    cmd_mul->add_flag("--json", mul_json, "emit JSON");
    cmd_mul->callback([&] {
        const RingSpec ring = RingSpec::parse(mul_ring);
        const GammaElement product =
            mul(evaluate(parse_expression(mul_lhs), mul_d, mul_r, ring),
                evaluate(parse_expression(mul_rhs), mul_d, mul_r, ring));
        if (mul_json) {
            std::cout << element_to_json(product).dump(2) << "\n";
        } else {
            std::cout << to_string(product) << "\n";
        }
    });

    // --- newton -------------------------------------------------------------
    auto* cmd_newton = app.add_subcommand(
        "newton", "evaluate the Newton identity residual (expected 0)");
    std::string newton_delta;
    int newton_d = 1;
    bool newton_json = false;
    cmd_newton->add_option("--delta", newton_delta, "index a1,…,ar")->required();
    cmd_newton->add_option("--d", newton_d, "divided-power degree")->required();
    cmd_newton->add_flag("--json", newton_json, "emit JSON");
    cmd_newton->callback([&] {
        const ExpVec delta = parse_exp_list(newton_delta);
        const GammaElement residual =
            newton_identity_residual(delta, newton_d, RingSpec::integers());
        if (newton_json) {
            std::cout << element_to_json(residual).dump(2) << "\n";
        } else {
            std::cout << to_string(residual) << "\n";
        }
    });

    // --- decompose ----------------------------------------------------------
    auto* cmd_dec = app.add_subcommand(
        "decompose", "membership in the lower-multidegree subalgebra");
    int dec_d = 1;
    std::string dec_field = "Q", dec_expr;
    bool dec_json = false;
    cmd_dec->add_option("--d", dec_d, "divided-power degree")->required();
    cmd_dec->add_option("--field", dec_field, "coefficient field: Q|Fp:P");
    cmd_dec->add_option("expr", dec_expr, "target expression")->required();
    cmd_dec->add_flag("--json", dec_json, "emit JSON");
    cmd_dec->callback([&] {
        const RingSpec field = RingSpec::parse(dec_field);
        const ExprNode ast = parse_expression(dec_expr);
        const std::optional<int> arity = infer_arity(ast);
        if (!arity) {
            throw std::invalid_argument(
                "cannot infer variable count from expression");
        }
        const GammaElement target = evaluate(ast, dec_d, *arity, field);
        const DecompositionResult result = membership(target);
        if (dec_json) {
            std::cout << decomposition_to_json(result).dump(2) << "\n";
        } else {
            std::cout << "in subalgebra: " << (result.in_subalgebra ? "yes" : "no")
                      << "\n";
            if (result.in_subalgebra) {
                std::cout << "certificate:\n";
                for (const CertificateTerm& term : result.certificate) {
                    std::cout << "  " << coeff_str(term.coeff) << " * "
                              << term.left.str() << " * " << term.right.str()
                              << "\n";
                }
            }
        }
    });

    // --- verify -------------------------------------------------------------
    auto* cmd_verify =
        app.add_subcommand("verify", "run oracle cross-checks");
    cmd_verify->require_subcommand(1);

    auto* cmd_lemma = cmd_verify->add_subcommand(
        "mainlemma", "digit criterion vs exhaustive factorization search");
    std::string lemma_alpha;
    int lemma_d = 0;
    long lemma_p = 2;
    bool lemma_json = false;
    cmd_lemma->add_option("--alpha", lemma_alpha, "exponent a1,…,ar")->required();
    cmd_lemma->add_option("--d", lemma_d, "factor-count threshold")->required();
    cmd_lemma->add_option("--p", lemma_p, "prime")->required();
    cmd_lemma->add_flag("--json", lemma_json, "emit JSON");
    cmd_lemma->callback([&] {
        const ExpVec alpha = parse_exp_list(lemma_alpha);
        const bool predicted = main_lemma_predicate(alpha, lemma_d, lemma_p);
        const LemmaSearchResult found =
            main_lemma_bruteforce(alpha, lemma_d, lemma_p);
        const bool attained = found.min_order && *found.min_order == 0;
        const bool agree = predicted == attained;
        if (lemma_json) {
            json out{{"alpha", alpha},
                     {"d", lemma_d},
                     {"p", lemma_p},
                     {"digit_condition", predicted},
                     {"min_order", nullptr},
                     {"witness", nullptr},
                     {"agree", agree}};
            if (found.min_order) out["min_order"] = *found.min_order;
            if (found.witness) out["witness"] = index_to_json(*found.witness);
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "digit condition: " << (predicted ? "true" : "false")
                      << "\n";
            if (found.min_order) {
                std::cout << "brute-force min order: " << *found.min_order
                          << " (witness " << found.witness->str() << ")\n";
            } else {
                std::cout << "brute-force min order: none\n";
            }
            std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
        }
        if (!agree) exit_code = 1;
    });

    auto* cmd_thm = cmd_verify->add_subcommand(
        "theorem", "minimality criterion vs membership oracle");
    int thm_r = 1, thm_d = 1, thm_cap = -1;
    std::string thm_field = "Q";
    bool thm_json = false;
    cmd_thm->add_option("--r", thm_r, "number of variables")->required();
    cmd_thm->add_option("--d", thm_d, "divided-power degree")->required();
    cmd_thm->add_option("--field", thm_field, "coefficient field: Q|Fp:P");
    cmd_thm->add_option("--cap", thm_cap,
                        "total-degree cap (default: sharp bound + 1)");
    cmd_thm->add_flag("--json", thm_json, "emit JSON");
    cmd_thm->callback([&] {
        const RingSpec field = RingSpec::parse(thm_field);
        const PrimeProfile profile =
            field.kind() == RingKind::Rationals
                ? PrimeProfile::empty_profile()
                : PrimeProfile::explicit_primes({field.p()});
        const int cap = thm_cap >= 0
                            ? thm_cap
                            : sharp_degree_bound(thm_r, thm_d, profile) + 1;
        const auto disagreements = verify_theorem(thm_r, thm_d, field, cap);
        long keys = 0;
        for (int k = 1; k <= thm_d; ++k) {
            for (int t = 1; k * t <= cap; ++t) {
                visit_compositions(t, thm_r, [&](const ExpVec& alpha) {
                    if (gcd_vec(alpha) == 1) ++keys;
                });
            }
        }
        if (thm_json) {
            json out{{"r", thm_r},
                     {"d", thm_d},
                     {"field", field.str()},
                     {"degree_cap", cap},
                     {"keys_checked", keys},
                     {"disagreements", disagreements_to_json(disagreements)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "checked " << keys << " keys up to total degree "
                      << cap << "\n"
                      << "disagreements: " << disagreements.size() << "\n";
            for (const TheoremDisagreement& item : disagreements) {
                std::cout << "  k=" << item.key.k
                          << " alpha=" << exp_str(item.key.alpha)
                          << " criterion="
                          << (item.criterion_minimal ? "minimal" : "decomposable")
                          << " oracle="
                          << (item.oracle_minimal ? "minimal" : "decomposable")
                          << "\n";
            }
        }
        if (!disagreements.empty()) exit_code = 1;
    });

    auto* cmd_all = cmd_verify->add_subcommand(
        "all", "product, Newton, and factorization suites");
    int all_n = 3;
    bool all_json = false;
    cmd_all->add_option("--max-size", all_n, "size cap for all suites")
        ->required();
    cmd_all->add_flag("--json", all_json, "emit JSON");
    cmd_all->callback([&] {
        const SuiteTotals totals = run_all_suites(all_n);
        const bool passed = totals.product_mismatches == 0 &&
                            totals.newton_failures == 0 &&
                            totals.lemma_disagreements == 0;
        if (all_json) {
            json out{{"max_size", all_n},
                     {"product_pairs", totals.product_pairs},
                     {"product_mismatches", totals.product_mismatches},
                     {"newton_cases", totals.newton_cases},
                     {"newton_failures", totals.newton_failures},
                     {"factorization_cases", totals.lemma_cases},
                     {"factorization_disagreements", totals.lemma_disagreements},
                     {"passed", passed}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "product suite: " << totals.product_pairs
                      << " pairs, " << totals.product_mismatches
                      << " mismatches\n"
                      << "newton suite: " << totals.newton_cases
                      << " identities, " << totals.newton_failures
                      << " nonzero residuals\n"
                      << "factorization suite: " << totals.lemma_cases
                      << " cases, " << totals.lemma_disagreements
                      << " disagreements\n"
                      << (passed ? "all suites passed" : "FAILED") << "\n";
        }
        if (!passed) exit_code = 1;
    });

    // --- elementary ---------------------------------------------------------
    auto* cmd_elem = app.add_subcommand(
        "elementary", "do the elementary functions generate everything?");
    int elem_r = 1, elem_d = 1;
    std::string elem_primes = "none";
    bool elem_json = false;
    cmd_elem->add_option("--r", elem_r, "number of variables")->required();
    cmd_elem->add_option("--d", elem_d, "divided-power degree")->required();
    cmd_elem->add_option("--primes", elem_primes,
                         "non-invertible primes: none|all|p1,p2,…");
    cmd_elem->add_flag("--json", elem_json, "emit JSON");
    cmd_elem->callback([&] {
        const PrimeProfile profile = PrimeProfile::parse(elem_primes);
        const int condition = elementary_condition(elem_r, elem_d, profile);
        static const char* human[] = {"none", "r=1", "d! invertible",
                                      "r=2, d=2", "r=2, d=3, 3 invertible"};
        static const char* slug[] = {"", "r_eq_1", "d_factorial_invertible",
                                     "r2_d2", "r2_d3_3_invertible"};
        if (elem_json) {
            json out{{"r", elem_r},
                     {"d", elem_d},
                     {"primes", profile.str()},
                     {"generated", condition != 0},
                     {"condition", nullptr}};
            if (condition != 0) out["condition"] = slug[condition];
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "elementary generation: "
                      << (condition != 0 ? "yes" : "no") << "\n"
                      << "condition: " << human[condition] << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
