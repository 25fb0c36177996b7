#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bullchrome/account.hpp"
#include "bullchrome/coloring.hpp"
#include "bullchrome/modular.hpp"
#include "bullchrome/recognition.hpp"

namespace bullchrome {

nlohmann::json to_json(const PropertyReport& report);
nlohmann::json to_json(const ModularTree& tree);
/// Array of colors indexed by vertex.
nlohmann::json to_json(const Coloring& coloring);
nlohmann::json to_json(const ColorAccount& account);
nlohmann::json to_json(const VertexSet& set);

/// Budgets can exceed 64 bits, so limits are decimal strings.
std::string to_decimal(const BigInt& value);

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

}  // namespace bullchrome
