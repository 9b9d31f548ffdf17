#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/word.hpp"

namespace dyck {

/// Node of the condensed grid in which every first-quadrant point inside
/// the triangle (0,0), (0,n), (n,0) is reachable: xm = (x - y) / 2, the
/// level is unchanged.
struct ModifiedPoint {
  std::int64_t xm = 0;
  std::int64_t y = 0;

  friend bool operator==(const ModifiedPoint&, const ModifiedPoint&) = default;
  friend auto operator<=>(const ModifiedPoint&, const ModifiedPoint&) = default;
};

/// ((x - y)/2, y). Throws Error(parity_violation) when x - y is odd and
/// Error(invalid_argument) for points outside the reachable grid.
ModifiedPoint to_modified(const Point& p);

/// (2*xm + y, y); exact inverse of to_modified.
Point from_modified(const ModifiedPoint& m);

/// to_modified applied to each peak, in path order.
std::vector<ModifiedPoint> peaks_modified(const Word& w);

/// Classical pairing bijection (k1 + k2)(k1 + k2 + 1)/2 + k2. Throws
/// Error(overflow) when the result exceeds 64 bits.
std::uint64_t cantor_pair(std::uint64_t k1, std::uint64_t k2);

/// Unique (k1, k2) with cantor_pair(k1, k2) == z. Uses an exact integer
/// square root, so the inverse is bit-exact over the whole 64-bit range.
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) noexcept;

/// cantor_pair over the modified peak coordinates (xm, y), in path order.
std::vector<std::uint64_t> encode_peak_set(const Word& w);

}  // namespace dyck
