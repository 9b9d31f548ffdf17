#include "core/enumerate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

Enumerator::Enumerator(std::int64_t n) : n_(n) {
  if (n < 0) {
    throw Error(Errc::invalid_argument, "semilength must be non-negative");
  }
  if (n > max_semilength) {
    throw Error(Errc::bound_exceeded,
                "semilength " + std::to_string(n) + " exceeds the practical "
                    "enumeration bound " + std::to_string(max_semilength));
  }
  steps_.resize(static_cast<std::size_t>(2 * n));
}

// Lexicographically smallest completion from `from` at `level`: take a
// down step whenever the level allows it, i.e. down^level (ud)^rest.
void Enumerator::fill_smallest(std::size_t from, std::int64_t level) {
  for (std::size_t i = from; i < steps_.size(); ++i) {
    if (level > 0) {
      steps_[i] = Step::down;
      --level;
    } else {
      steps_[i] = Step::up;
      ++level;
    }
  }
}

std::optional<Word> Enumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    fill_smallest(0, 0);
    return Word::from_steps(steps_);
  }

  const std::int64_t len = static_cast<std::int64_t>(steps_.size());
  std::vector<std::int64_t> before(steps_.size());  // level before step i
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    before[i] = level;
    level += steps_[i] == Step::up ? 1 : -1;
  }
  // Successor: flip the rightmost down step that can become an up step
  // while the suffix remains completable, then append the smallest
  // completion.
  for (std::int64_t i = len - 1; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    if (steps_[idx] == Step::down && before[idx] + 1 <= len - i - 1) {
      steps_[idx] = Step::up;
      fill_smallest(idx + 1, before[idx] + 1);
      return Word::from_steps(steps_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::string catalan_decimal(std::int64_t n) {
  if (n < 0) {
    throw Error(Errc::invalid_argument, "catalan is undefined for n < 0");
  }
  namespace mp = boost::multiprecision;
  // binom(2n, n) by the multiplicative formula; every division is exact
  // because the running value is binom(n + i, i).
  mp::cpp_int c = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    c *= n + i;
    c /= i;
  }
  c /= n + 1;
  return c.str();
}

}  // namespace dyck
