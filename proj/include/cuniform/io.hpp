#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cuniform/tables.hpp"
#include "cuniform/theory.hpp"

namespace cuniform {

// Lowercase hex without prefix.
std::string hex(std::uint64_t v);
// Accepts an optional 0x prefix. Throws std::invalid_argument on bad input.
std::uint64_t parse_hex(std::string_view text);

// Header "a,b,count", rows sorted by (a, b). Sparse (nonzero counts) unless
// dense is set.
std::string table_to_csv(const UniformityTable& table, bool dense = false);
// Missing rows read as zero.
UniformityTable table_from_csv(std::string_view csv, TableKind kind, unsigned n, Element c);

// {kind, n, modulus, c, entries, delta_or_beta, argmax}.
nlohmann::json table_to_json(const UniformityTable& table, const Field& field, bool dense = false);
UniformityTable table_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const UniformityReport& report);
nlohmann::json witness_report_to_json(const WitnessReport& report);

}  // namespace cuniform
