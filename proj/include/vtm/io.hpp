#pragma once

#include "vtm/alignment.hpp"
#include "vtm/context.hpp"
#include "vtm/holders.hpp"
#include "vtm/taxonomy.hpp"

#include <string>

namespace vtm {

/// Canonical number rendering: the shortest decimal with at most 12
/// significant digits that preserves the value at that precision. -0 becomes
/// "0".
std::string format_number(double v);

/// Parses a taxonomy document and validates the result; invariant violations
/// are reported as ParseError. Set check = false to skip validation (used by
/// the validate command, which wants the violation list instead).
Taxonomy parse_taxonomy(const std::string& text, bool check = true);
std::string serialize_taxonomy(const Taxonomy& t);

WorldState parse_world(const std::string& text);
std::string serialize_world(const WorldState& w);

ContextSpec parse_context(const std::string& text);
std::string serialize_context(const ContextSpec& c);

ValueSystem parse_value_system(const std::string& text);
std::string serialize_value_system(const ValueSystem& vs);

AlignmentReport parse_alignment_report(const std::string& text);
std::string serialize_alignment_report(const AlignmentReport& r);

/// GraphViz rendering: label nodes as ellipses, property nodes as boxes,
/// node text "id\n(importance)" with the importance omitted when undefined.
std::string export_dot(const Taxonomy& t);

} // namespace vtm
