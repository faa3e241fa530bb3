#pragma once

#include <string>
#include <vector>

#include "presto/model.hpp"
#include "presto/property.hpp"

namespace presto {

struct ParsedModel {
    Pdtmc model;
    std::vector<RewardStructure> rewards;

    const RewardStructure* reward_structure(const std::string& name) const;
};

/// Parses the .pdtmc model format (see docs/formats.md). Throws SyntaxError
/// (with line/column), DuplicateState, UnknownParameter or RowIncomplete.
ParsedModel parse_model(const std::string& text);

/// Parses the .pctl requirement format: one threshold-bounded PCTL query per
/// entry, optionally prefixed "id:". Requirements without an id are named
/// R1, R2, ... by position.
std::vector<Requirement> parse_properties(const std::string& text);

std::string serialize_model(const ParsedModel& pm);
std::string serialize_properties(const std::vector<Requirement>& reqs);

/// Shortest decimal string that round-trips to the same double.
std::string double_to_string(double v);

}  // namespace presto
