// Test-only reference implementations, kept independent of the library:
// plain string scans, recursive generation, and the convolution recurrence
// for the Catalan numbers. Everything here is brute force on purpose.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using PointVec = std::vector<std::pair<std::int64_t, std::int64_t>>;

inline std::vector<std::int64_t> profile(const std::string& w) {
  std::vector<std::int64_t> y{0};
  for (char c : w) y.push_back(y.back() + (c == 'u' ? 1 : -1));
  return y;
}

inline bool valid(const std::string& w) {
  std::int64_t y = 0;
  for (char c : w) {
    if (c == 'u') {
      ++y;
    } else if (c == 'd') {
      --y;
      if (y < 0) return false;
    } else {
      return false;
    }
  }
  return y == 0;
}

inline PointVec peaks(const std::string& w) {
  const auto y = profile(w);
  PointVec out;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] == 'u' && w[i] == 'd') {
      out.emplace_back(static_cast<std::int64_t>(i), y[i]);
    }
  }
  return out;
}

inline PointVec valleys(const std::string& w, bool terminal) {
  const auto y = profile(w);
  PointVec out;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] == 'd' && w[i] == 'u') {
      out.emplace_back(static_cast<std::int64_t>(i), y[i]);
    }
  }
  if (terminal && !w.empty()) {
    out.emplace_back(static_cast<std::int64_t>(w.size()), 0);
  }
  return out;
}

// Fragments by literally cutting the word after each interior valley.
inline std::vector<std::string> fragments(const std::string& w) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (const auto& [x, y] : valleys(w, false)) {
    out.push_back(w.substr(start, static_cast<std::size_t>(x) - start));
    start = static_cast<std::size_t>(x);
  }
  if (!w.empty()) out.push_back(w.substr(start));
  return out;
}

// All words of semilength n, sorted in plain ASCII order ('d' < 'u').
inline std::vector<std::string> enumerate(int n) {
  std::vector<std::string> out;
  std::string cur;
  const auto rec = [&](auto&& self, int ups, int downs, int level) -> void {
    if (static_cast<int>(cur.size()) == 2 * n) {
      out.push_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back('u');
      self(self, ups + 1, downs, level + 1);
      cur.pop_back();
    }
    if (level > 0) {
      cur.push_back('d');
      self(self, ups, downs + 1, level - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Segner's recurrence C(n+1) = sum C(i) C(n-i); exact in 64 bits for the
// sizes used in tests.
inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t sum = 0;
    for (int i = 0; i < m; ++i) {
      sum += c[static_cast<std::size_t>(i)] *
             c[static_cast<std::size_t>(m - 1 - i)];
    }
    c[static_cast<std::size_t>(m)] = sum;
  }
  return c[static_cast<std::size_t>(n)];
}

}  // namespace oracle
