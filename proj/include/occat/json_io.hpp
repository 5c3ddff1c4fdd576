#pragma once

#include <json.hpp>

#include "occat/classify.hpp"
#include "occat/textio.hpp"

namespace occat {

/// Every top-level JSON payload carries "format": kJsonFormat.
inline constexpr int kJsonFormat = 1;

nlohmann::json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BraneSet& branes, const GeneralObject& obj);
GeneralObject object_from_json(const nlohmann::json& j, const BraneSet& branes);

nlohmann::json to_json(const Cobordism& c);
Cobordism cobordism_from_json(const nlohmann::json& j, const BraneSet& branes);

nlohmann::json to_json(const Document& doc);
/// Throws PreconditionError (or nlohmann::json::exception) on bad input.
Document document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BraneSet& branes, const InvariantSummary& s);
nlohmann::json to_json(const BraneSet& branes, const std::vector<StrataRow>& rows);

}  // namespace occat
