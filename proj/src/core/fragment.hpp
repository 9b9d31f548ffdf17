#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/word.hpp"

namespace dyck {

/// One peak together with its full adjacent ascent and descent. The peak
/// keeps the coordinates of the word the fragment was cut from.
struct PrimeFragment {
  std::int64_t ascent_len = 0;
  std::int64_t descent_len = 0;
  Point peak;

  friend bool operator==(const PrimeFragment&, const PrimeFragment&) = default;

  /// Renders up^ascent_len down^descent_len.
  std::string text(Alphabet alphabet = {}) const;
};

/// Cuts the word immediately after each interior valley. Fragment k is
/// the maximal ascent ending at peak k followed by the maximal descent
/// after it; concatenating the fragments reproduces the word. The empty
/// word factorizes into an empty list.
std::vector<PrimeFragment> factorize(const Word& w);

/// Inverse of factorize. Throws Error(not_a_path) when the running level
/// would drop below zero or does not end at zero, and
/// Error(invalid_argument) when a fragment has a non-positive run length
/// or a peak field inconsistent with its position in the sequence.
Word concat_fragments(std::span<const PrimeFragment> fragments);

}  // namespace dyck
