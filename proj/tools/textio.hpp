#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/dyck.h"

namespace dycktool {

/// "x1,y1;x2,y2;..." with no whitespace. An empty list formats as "".
std::string format_points(const dyck_point* points, std::size_t count);

/// Codes joined with ';'.
std::string format_codes(const std::uint64_t* codes, std::size_t count);

/// Parses the point-set text format. Whitespace around numbers and
/// separators is ignored; empty input yields an empty list. Returns
/// false and fills err on malformed input.
bool parse_points(std::string_view text, std::vector<dyck_point>& out,
                  std::string& err);

}  // namespace dycktool
