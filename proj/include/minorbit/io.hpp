#pragma once

// Tableau files and report serialization.
//
// A tableau file holds one JSON object
//   {"outer": [6,6,6,6], "inner": [5,4,3], "rows": [[18], [16,20], ...]}
// where rows list the cells of outer/inner row by row and null marks an
// unfilled cell. "inner" may be omitted when empty.

#include <string>
#include <string_view>

#include "minorbit/tableaux.hpp"
#include "minorbit/verify.hpp"

namespace minorbit {

// Compact single-line JSON.
std::string tableau_to_json(const PartialTableau& t);
// Throws ParseError on malformed JSON or an inconsistent shape.
PartialTableau tableau_from_json(std::string_view text);
PartialTableau read_tableau_file(const std::string& path);

// Right-aligned grid, one row per line; inner cells blank, unfilled cells ".".
std::string tableau_to_grid(const PartialTableau& t);

std::string report_to_json(const Report& report);

}  // namespace minorbit
