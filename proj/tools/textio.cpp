#include "textio.hpp"

#include <charconv>

namespace dycktool {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view token, std::int64_t& out) {
  token = trim(token);
  if (token.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::string format_points(const dyck_point* points, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out += ';';
    out += std::to_string(points[i].x);
    out += ',';
    out += std::to_string(points[i].y);
  }
  return out;
}

std::string format_codes(const std::uint64_t* codes, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out += ';';
    out += std::to_string(codes[i]);
  }
  return out;
}

bool parse_points(std::string_view text, std::vector<dyck_point>& out,
                  std::string& err) {
  out.clear();
  text = trim(text);
  if (text.empty()) return true;

  std::size_t start = 0;
  std::size_t index = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view pair_text = text.substr(start, end - start);

    const std::size_t comma = pair_text.find(',');
    std::int64_t x = 0;
    std::int64_t y = 0;
    if (comma == std::string_view::npos ||
        pair_text.find(',', comma + 1) != std::string_view::npos ||
        !parse_int(pair_text.substr(0, comma), x) ||
        !parse_int(pair_text.substr(comma + 1), y)) {
      err = "malformed point at index " + std::to_string(index) +
            ": expected \"x,y\", got \"" + std::string(trim(pair_text)) + "\"";
      return false;
    }
    out.push_back({x, y});
    ++index;
    if (end == text.size()) break;
    start = end + 1;
  }
  return true;
}

}  // namespace dycktool
