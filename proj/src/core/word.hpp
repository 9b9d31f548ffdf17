#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace dyck {

enum class Step : unsigned char { up, down };

/// Node of the standard grid: x is the step index, y the level.
/// Reachable nodes satisfy 0 <= y <= x and x == y (mod 2).
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Input/output alphabet. The two characters must be distinct.
struct Alphabet {
  char up = 'u';
  char down = 'd';
};

/// A validated Dyck word: equally many up and down steps, and no prefix
/// with more downs than ups. The empty word (semilength 0) is valid.
class Word {
 public:
  Word() = default;

  /// Parses text symbol by symbol. Throws Error with code invalid_symbol,
  /// prefix_underflow or unbalanced; the position reported is always the
  /// earliest offending one.
  static Word parse(std::string_view text, Alphabet alphabet = {});

  /// Validates a raw step sequence under the same rules as parse.
  static Word from_steps(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::int64_t semilength() const noexcept {
    return static_cast<std::int64_t>(steps_.size() / 2);
  }
  bool empty() const noexcept { return steps_.empty(); }

  std::string text(Alphabet alphabet = {}) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

/// Levels y_0..y_2n visited along the word; y_0 = y_2n = 0.
std::vector<std::int64_t> level_profile(const Word& w);

/// Inner points of "ud" subwords, ascending in x.
std::vector<Point> peaks(const Word& w);

/// Inner points of "du" subwords, ascending in x. When include_terminal
/// is set and the word is nonempty, the end point (2n, 0) is appended.
/// The origin is never included.
std::vector<Point> valleys(const Word& w, bool include_terminal);

/// True iff w = up^n down^n, the single-peak pyramid. Throws
/// Error(empty_word) for semilength 0.
bool is_prime(const Word& w);

/// Draws the path with '/' and '\' characters, one text row per level
/// from the highest level down to 1. An up step from level y prints '/'
/// in the row of level y+1 at its step column; a down step from level y
/// prints '\' in the row of level y. Rows are stripped of trailing
/// spaces and each ends with '\n'. The empty word renders as "".
std::string render_ascii(const Word& w);

}  // namespace dyck
