#pragma once

#include <string>

#include "sisport/sis_analysis.hpp"

namespace sisport {

// Stable JSON schema: top-level keys params, steady_states, finite, infinite,
// invariant_lines, class, versions. Rationals are canonical "p/q" strings,
// polynomials graded-lex strings.
std::string serialize_report(const PortraitReport& rep);

// Inverse of serialize_report for the exact content (numeric eigendata is a
// rendering cache and is not serialized).
PortraitReport parse_report(const std::string& json_text);

// Parses the textual polynomial rendering produced by Poly2::to_string.
Poly2 parse_poly(const std::string& text);

// Equality on the exact serialized content.
bool reports_equal(const PortraitReport& a, const PortraitReport& b);

}  // namespace sisport
