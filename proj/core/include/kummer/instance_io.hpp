#pragma once

// Instance documents:
//   {"p": 3, "n": 3, "l1": 5, "l2": 19, "pairs": [[1,0],[1,1],[2,3]]}

#include <string>
#include <string_view>

#include "kummer/invariants.hpp"

namespace kummer {

/// Parses and validates an instance document. Throws ParseError (with 1-based
/// line and column) for malformed text or fields, InvalidInstance when a
/// standing hypothesis fails.
TowerSpec parse_instance(std::string_view text);

/// Compact single-line document; parse_instance(emit_instance(s)) == s.
std::string emit_instance(const TowerSpec& spec);

}  // namespace kummer
