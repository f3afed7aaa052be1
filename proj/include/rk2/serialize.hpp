#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "rk2/extremal.hpp"
#include "rk2/polyhedral.hpp"

namespace rk2 {

using json = nlohmann::ordered_json;

// numbers when they fit in 64 bits, decimal strings otherwise
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json entries_to_json(const Entries& e);
Entries entries_from_json(const json& j);

json vector_to_json(const LambdaVector& v);
// cartan / lambda default to the given values when the document omits them
LambdaVector vector_from_json(const json& j, const std::optional<CartanRank2>& cartan = std::nullopt,
                              const std::optional<Weight>& weight = std::nullopt);
std::string vector_to_text(const LambdaVector& v);

json graph_to_json(const CrystalGraph& g);
std::string graph_to_dot(const CrystalGraph& g);

json form_to_json(const LinearForm& f);
LinearForm form_from_json(const json& j);
json family_to_json(const FormFamily& f);

json classification_to_json(const WeightClassification& c);
json report_to_json(const ExtremalReport& r);

}  // namespace rk2
