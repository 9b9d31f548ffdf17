#include "core/reconstruct.hpp"

#include <cassert>

namespace dyck {

namespace {

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

bool parity_ok(const Point& p) { return ((p.x - p.y) % 2) == 0; }

void check_common(std::span<const Point> points, std::int64_t min_level,
                  const char* what, SetValidation& v) {
  if (points.empty()) {
    v.violations.push_back({0, "empty", std::string(what) + " set is empty"});
    return;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.x < 0 || p.y < 0) {
      v.violations.push_back({i, "negative",
                              "point " + std::to_string(i) + " " +
                                  point_str(p) + ": coordinates must be "
                                  "non-negative"});
    }
    if (p.y < min_level) {
      v.violations.push_back({i, "level",
                              "point " + std::to_string(i) + " " +
                                  point_str(p) + ": level must be at least " +
                                  std::to_string(min_level)});
    }
    if (p.y > p.x) {
      v.violations.push_back({i, "above-diagonal",
                              "point " + std::to_string(i) + " " +
                                  point_str(p) + ": lies above the main "
                                  "diagonal y = x"});
    }
    if (!parity_ok(p)) {
      v.violations.push_back({i, "parity",
                              "point " + std::to_string(i) + " " +
                                  point_str(p) + ": x and y must have equal "
                                  "parity"});
    }
    if (i > 0 && points[i - 1].x >= p.x) {
      v.violations.push_back({i - 1, "not-increasing",
                              "points " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) +
                                  ": x must be strictly increasing"});
    }
  }
}

}  // namespace

std::string SetValidation::report() const {
  if (violations.empty()) return "valid";
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) out += '\n';
    out += violations[i].message;
  }
  return out;
}

SetValidation check_peak_set(std::span<const Point> points) {
  SetValidation v;
  check_common(points, 1, "peak", v);
  if (points.empty()) return v;

  if (points.front().x != points.front().y) {
    v.violations.push_back({0, "first-not-diagonal",
                            "first peak " + point_str(points.front()) +
                                " must lie on the diagonal x = y"});
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const Point& l = points[i];
    const Point& r = points[i + 1];
    const std::int64_t a = l.x + l.y;
    const std::int64_t b = r.x - r.y;
    if (a < b) {
      v.violations.push_back(
          {i, "valley-below-axis",
           "pair (" + std::to_string(i) + "," + std::to_string(i + 1) +
               "): valley below the x-axis, a = " + std::to_string(a) +
               " < b = " + std::to_string(b) + " (requires a >= b)"});
    }
    if (r.x - r.y <= l.x - l.y || r.x + r.y <= l.x + l.y) {
      v.violations.push_back(
          {i, "valley-not-between",
           "pair (" + std::to_string(i) + "," + std::to_string(i + 1) +
               "): no valley strictly between " + point_str(l) + " and " +
               point_str(r) + " (requires x_r - y_r > x_l - y_l and "
               "x_r + y_r > x_l + y_l)"});
    }
  }
  return v;
}

SetValidation check_valley_set(std::span<const Point> points) {
  SetValidation v;
  check_common(points, 0, "valley", v);
  if (points.empty()) return v;

  if (points.back().y != 0) {
    v.violations.push_back({points.size() - 1, "terminal-level",
                            "last valley " + point_str(points.back()) +
                                " must lie on the x-axis (the terminal "
                                "point carries 2n)"});
  }
  // Adjacency is checked with the implicit origin prepended; pair index i
  // names the pair ending at user point i.
  Point prev{0, 0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& r = points[i];
    if (r.x + r.y <= prev.x + prev.y || r.x - r.y <= prev.x - prev.y) {
      const std::string left =
          i == 0 ? std::string("the origin") : point_str(prev);
      v.violations.push_back(
          {i, "peak-not-above",
           "pair ending at point " + std::to_string(i) + ": no peak strictly "
               "above " + left + " and " + point_str(r) +
               " (requires x_r + y_r > x_l + y_l and x_r - y_r > x_l - y_l)"});
    }
    prev = r;
  }
  return v;
}

namespace {

void require_adjacency(bool ok, const Point& l, const Point& r,
                       const char* detail) {
  if (!ok) {
    throw Error(Errc::invalid_adjacency, "points " + point_str(l) + ", " +
                                             point_str(r) + ": " + detail);
  }
}

}  // namespace

Point valley_between(const Point& left, const Point& right) {
  require_adjacency(left.x >= 0 && left.y >= 0 && right.x >= 0 && right.y >= 0,
                    left, right, "coordinates must be non-negative");
  require_adjacency(parity_ok(left) && parity_ok(right), left, right,
                    "x and y must have equal parity");
  const std::int64_t a = left.x + left.y;
  const std::int64_t b = right.x - right.y;
  require_adjacency(right.x - right.y > left.x - left.y &&
                        right.x + right.y > left.x + left.y,
                    left, right, "no valley strictly between the peaks");
  require_adjacency(a >= b, left, right,
                    "valley below the x-axis (requires a >= b)");
  // Parity of a - b: a - b = (x_l - y_l) - (x_r - y_r) + 2 y_l, both
  // bracketed terms even, so the halves below are exact.
  assert((a + b) % 2 == 0);
  return {(a + b) / 2, (a - b) / 2};
}

Point peak_between(const Point& left, const Point& right) {
  require_adjacency(left.x >= 0 && left.y >= 0 && right.x >= 0 && right.y >= 0,
                    left, right, "coordinates must be non-negative");
  require_adjacency(parity_ok(left) && parity_ok(right), left, right,
                    "x and y must have equal parity");
  const std::int64_t s = left.x - left.y;
  const std::int64_t t = right.x + right.y;
  require_adjacency(right.x + right.y > left.x + left.y &&
                        right.x - right.y > left.x - left.y,
                    left, right, "no peak strictly above the valleys");
  assert((s + t) % 2 == 0);
  return {(s + t) / 2, (t - s) / 2};
}

PeakSet PeakSet::validated(std::vector<Point> points) {
  const SetValidation v = check_peak_set(points);
  if (!v.ok()) {
    throw Error(Errc::invalid_point_set, "invalid peak set:\n" + v.report());
  }
  return PeakSet(std::move(points));
}

ValleySet ValleySet::validated(std::vector<Point> points) {
  const SetValidation v = check_valley_set(points);
  if (!v.ok()) {
    throw Error(Errc::invalid_point_set, "invalid valley set:\n" + v.report());
  }
  return ValleySet(std::move(points));
}

ValleySet valleys_from_peaks(const PeakSet& ps) {
  const auto& pk = ps.points();
  std::vector<Point> out;
  out.reserve(pk.size());
  for (std::size_t i = 0; i + 1 < pk.size(); ++i) {
    out.push_back(valley_between(pk[i], pk[i + 1]));
  }
  // After the last peak the path descends straight to the axis.
  out.push_back({pk.back().x + pk.back().y, 0});
  assert(check_valley_set(out).ok());
  return ValleySet(std::move(out));
}

PeakSet peaks_from_valleys(const ValleySet& vs) {
  const auto& vl = vs.points();
  std::vector<Point> out;
  out.reserve(vl.size());
  Point prev{0, 0};
  for (const Point& v : vl) {
    out.push_back(peak_between(prev, v));
    prev = v;
  }
  assert(check_peak_set(out).ok());
  return PeakSet(std::move(out));
}

Word word_from_peaks(const PeakSet& ps) {
  const auto& pk = ps.points();
  const ValleySet low = valleys_from_peaks(ps);
  const auto& lows = low.points();

  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(lows.back().x));
  Point floor{0, 0};
  for (std::size_t i = 0; i < pk.size(); ++i) {
    steps.insert(steps.end(), static_cast<std::size_t>(pk[i].y - floor.y),
                 Step::up);
    steps.insert(steps.end(), static_cast<std::size_t>(pk[i].y - lows[i].y),
                 Step::down);
    floor = lows[i];
  }
  return Word::from_steps(std::move(steps));
}

Word word_from_valleys(const ValleySet& vs) {
  return word_from_peaks(peaks_from_valleys(vs));
}

}  // namespace dyck
