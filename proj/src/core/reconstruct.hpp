#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "core/word.hpp"

namespace dyck {

class PeakSet;
class ValleySet;

/// One rule violation found while checking a point set.
struct SetViolation {
  /// Point index, or the left index of the offending adjacent pair.
  std::size_t index = 0;
  /// Stable tag: "empty", "negative", "level", "parity", "above-diagonal",
  /// "not-increasing", "first-not-diagonal", "terminal-level",
  /// "valley-below-axis", "valley-not-between", "peak-not-above".
  std::string rule;
  std::string message;
};

struct SetValidation {
  std::vector<SetViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// "valid", or one line per violation.
  std::string report() const;
};

/// Checks every PeakSet rule and reports all violations.
SetValidation check_peak_set(std::span<const Point> points);

/// Checks every canonical ValleySet rule (terminal point included,
/// origin excluded) and reports all violations. Adjacency rules are
/// checked against the implicit origin as well.
SetValidation check_valley_set(std::span<const Point> points);

/// The valley flanked by two adjacent peaks. With a = x_l + y_l and
/// b = x_r - y_r the valley is ((a+b)/2, (a-b)/2); valid adjacency
/// requires a >= b (the level stays non-negative), x_r - y_r > x_l - y_l
/// and x_r + y_r > x_l + y_l. Throws Error(invalid_adjacency).
Point valley_between(const Point& left, const Point& right);

/// The peak flanked by two adjacent valleys. With s = x_l - y_l and
/// t = x_r + y_r the peak is ((s+t)/2, (t-s)/2); valid adjacency requires
/// x_r + y_r > x_l + y_l and x_r - y_r > x_l - y_l. Throws
/// Error(invalid_adjacency).
Point peak_between(const Point& left, const Point& right);

/// Nonempty, strictly x-increasing peak list: every point at level
/// y >= 1 with even x - y, the first on the diagonal x = y, and each
/// adjacent pair flanking a valley at a non-negative level.
class PeakSet {
 public:
  /// Throws Error(invalid_point_set) carrying the full report.
  static PeakSet validated(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  explicit PeakSet(std::vector<Point> points) : points_(std::move(points)) {}
  friend PeakSet peaks_from_valleys(const ValleySet& vs);

  std::vector<Point> points_;
};

/// Nonempty canonical valley list: strictly x-increasing, levels y >= 0
/// with even x - y, last point on the axis at x = 2n.
class ValleySet {
 public:
  static ValleySet validated(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  explicit ValleySet(std::vector<Point> points) : points_(std::move(points)) {}
  friend ValleySet valleys_from_peaks(const PeakSet& ps);

  std::vector<Point> points_;
};

/// All valleys of the path with these peaks: one between each adjacent
/// pair plus the terminal valley (x_k + y_k, 0) after the last peak.
ValleySet valleys_from_peaks(const PeakSet& ps);

/// All peaks of the path with these valleys: one between each adjacent
/// pair of the sequence with the implicit origin prepended.
PeakSet peaks_from_valleys(const ValleySet& vs);

/// The unique word whose peak set is ps.
Word word_from_peaks(const PeakSet& ps);

/// The unique word whose canonical valley set is vs.
Word word_from_valleys(const ValleySet& vs);

}  // namespace dyck
