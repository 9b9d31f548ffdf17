#include "core/grid.hpp"

#include <limits>

namespace dyck {

ModifiedPoint to_modified(const Point& p) {
  if (p.x < 0 || p.y < 0 || p.y > p.x) {
    throw Error(Errc::invalid_argument,
                "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                    ") is outside the reachable grid");
  }
  if ((p.x - p.y) % 2 != 0) {
    throw Error(Errc::parity_violation,
                "point (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                    "): x - y must be even");
  }
  return {(p.x - p.y) / 2, p.y};
}

Point from_modified(const ModifiedPoint& m) {
  if (m.xm < 0 || m.y < 0) {
    throw Error(Errc::invalid_argument,
                "modified point (" + std::to_string(m.xm) + "," +
                    std::to_string(m.y) + ") has negative coordinates");
  }
  return {2 * m.xm + m.y, m.y};
}

std::vector<ModifiedPoint> peaks_modified(const Word& w) {
  std::vector<ModifiedPoint> out;
  for (const Point& p : peaks(w)) {
    out.push_back(to_modified(p));
  }
  return out;
}

std::uint64_t cantor_pair(std::uint64_t k1, std::uint64_t k2) {
  using u128 = unsigned __int128;
  const u128 s = static_cast<u128>(k1) + k2;
  const u128 z = s * (s + 1) / 2 + k2;
  if (z > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::overflow, "cantor_pair result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(z);
}

namespace {

// Largest r with r*r <= v, for v < 2^68 (covers 8z + 1 over the whole
// 64-bit range of z). Binary search over 128-bit squares, so the result
// is exact; the bounded hi keeps the midpoint arithmetic overflow-free.
std::uint64_t isqrt(unsigned __int128 v) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << 34;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (static_cast<unsigned __int128>(mid) * mid <= v) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) noexcept {
  using u128 = unsigned __int128;
  const std::uint64_t w = (isqrt(static_cast<u128>(z) * 8 + 1) - 1) / 2;
  const std::uint64_t t =
      static_cast<std::uint64_t>(static_cast<u128>(w) * (w + 1) / 2);
  const std::uint64_t k2 = z - t;
  return {w - k2, k2};
}

std::vector<std::uint64_t> encode_peak_set(const Word& w) {
  std::vector<std::uint64_t> out;
  for (const ModifiedPoint& m : peaks_modified(w)) {
    out.push_back(cantor_pair(static_cast<std::uint64_t>(m.xm),
                              static_cast<std::uint64_t>(m.y)));
  }
  return out;
}

}  // namespace dyck
