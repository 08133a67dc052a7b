/**
 * @file json_io.hpp
 * @brief JSON views of the library's value types.
 *
 * Conventions: coefficients are decimal strings (arbitrary precision safe);
 * monomials are exponent arrays, never variable-name strings; object key
 * order is fixed, so equal values serialize byte-identically.
 */
#pragma once

#include <json.hpp>

#include "msym/gensets.hpp"
#include "msym/oracle.hpp"

namespace msym {

using json = nlohmann::ordered_json;

json index_to_json(const MultiIndex& nu);
json element_to_json(const GammaElement& f);
json report_to_json(const GeneratorReport& report);
json decomposition_to_json(const DecompositionResult& result);
json disagreements_to_json(const std::vector<TheoremDisagreement>& items);

}  // namespace msym
