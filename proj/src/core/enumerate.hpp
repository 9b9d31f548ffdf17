#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/word.hpp"

namespace dyck {

/// Streams every Dyck word of semilength n exactly once, in lexicographic
/// order of the canonical u/d rendering (ASCII, so 'd' sorts before 'u'):
/// "udud...ud" comes first and the pyramid "u^n d^n" last. The stream is
/// a single-consumer cursor; independent cursors never share state.
class Enumerator {
 public:
  /// C(16) is about 35M words; larger n is rejected rather than letting a
  /// stream run effectively forever.
  static constexpr std::int64_t max_semilength = 16;

  /// Throws Error(invalid_argument) for n < 0 and Error(bound_exceeded)
  /// for n > max_semilength.
  explicit Enumerator(std::int64_t n);

  /// Next word, or nullopt once the stream is exhausted.
  std::optional<Word> next();

  std::int64_t semilength() const noexcept { return n_; }

 private:
  void fill_smallest(std::size_t from, std::int64_t level);

  std::int64_t n_;
  std::vector<Step> steps_;
  bool started_ = false;
  bool done_ = false;
};

/// n-th Catalan number binom(2n, n)/(n + 1) as a decimal string, computed
/// exactly in arbitrary precision. Throws Error(invalid_argument) for
/// n < 0.
std::string catalan_decimal(std::int64_t n);

}  // namespace dyck
