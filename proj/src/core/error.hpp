#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dyck {

enum class Errc {
  invalid_symbol,
  prefix_underflow,
  unbalanced,
  not_a_path,
  empty_word,
  invalid_adjacency,
  invalid_point_set,
  parity_violation,
  overflow,
  bound_exceeded,
  invalid_argument,
};

const char* errc_name(Errc c) noexcept;

/// Domain error with a machine-readable code and, for scan errors, the
/// earliest offending position in the input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Error(Errc code, const std::string& message, std::int64_t position)
      : std::runtime_error(message), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::int64_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::int64_t> position_;
};

}  // namespace dyck
