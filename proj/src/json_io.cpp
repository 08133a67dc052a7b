#include "msym/json_io.hpp"

namespace msym {

json index_to_json(const MultiIndex& nu) {
    json out = json::array();
    for (const auto& [m, n] : nu.entries()) {
        out.push_back(json{{"exp", m}, {"mult", n}});
    }
    return out;
}

json element_to_json(const GammaElement& f) {
    json terms = json::array();
    for (const auto& [nu, c] : f.terms()) {
        terms.push_back(json{{"coeff", coeff_str(c)}, {"index", index_to_json(nu)}});
    }
    return json{{"r", f.r()},
                {"d", f.d()},
                {"ring", f.ring().str()},
                {"terms", std::move(terms)}};
}

json report_to_json(const GeneratorReport& report) {
    json reason;
    if (report.reason == ReasonKind::LowDegree) {
        reason = json{{"kind", "low_degree"}};
    } else {
        reason = json{{"kind", "digit_witness"}, {"p", report.witness_p}};
    }
    return json{{"k", report.key.k},
                {"alpha", report.key.alpha},
                {"total_degree", report.total_degree},
                {"multidegree", report.multidegree},
                {"reason", std::move(reason)}};
}

json decomposition_to_json(const DecompositionResult& result) {
    json certificate = json::array();
    for (const CertificateTerm& term : result.certificate) {
        certificate.push_back(json{{"coeff", coeff_str(term.coeff)},
                                   {"left", index_to_json(term.left)},
                                   {"right", index_to_json(term.right)}});
    }
    return json{{"in_subalgebra", result.in_subalgebra},
                {"certificate", std::move(certificate)}};
}

json disagreements_to_json(const std::vector<TheoremDisagreement>& items) {
    json out = json::array();
    for (const TheoremDisagreement& item : items) {
        out.push_back(json{{"k", item.key.k},
                           {"alpha", item.key.alpha},
                           {"criterion_minimal", item.criterion_minimal},
                           {"oracle_minimal", item.oracle_minimal}});
    }
    return out;
}

}  // namespace msym
