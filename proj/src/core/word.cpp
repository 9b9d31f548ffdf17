#include "core/word.hpp"

#include <algorithm>

namespace dyck {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::invalid_symbol: return "invalid symbol";
    case Errc::prefix_underflow: return "prefix underflow";
    case Errc::unbalanced: return "unbalanced";
    case Errc::not_a_path: return "not a path";
    case Errc::empty_word: return "empty word";
    case Errc::invalid_adjacency: return "invalid adjacency";
    case Errc::invalid_point_set: return "invalid point set";
    case Errc::parity_violation: return "parity violation";
    case Errc::overflow: return "overflow";
    case Errc::bound_exceeded: return "bound exceeded";
    case Errc::invalid_argument: return "invalid argument";
  }
  return "unknown";
}

namespace {

// Coordinates stay exact for any input with 2n <= 2^62.
constexpr std::size_t kMaxLength = std::size_t{1} << 62;

}  // namespace

Word Word::parse(std::string_view text, Alphabet alphabet) {
  if (alphabet.up == alphabet.down) {
    throw Error(Errc::invalid_argument,
                "alphabet must map two distinct characters");
  }
  if (text.size() > kMaxLength) {
    throw Error(Errc::overflow, "input longer than 2^62 steps");
  }
  std::vector<Step> steps;
  steps.reserve(text.size());
  std::int64_t level = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == alphabet.up) {
      ++level;
      steps.push_back(Step::up);
    } else if (c == alphabet.down) {
      --level;
      if (level < 0) {
        throw Error(Errc::prefix_underflow,
                    "prefix underflow at position " + std::to_string(i),
                    static_cast<std::int64_t>(i));
      }
      steps.push_back(Step::down);
    } else {
      throw Error(Errc::invalid_symbol,
                  std::string("invalid symbol '") + c + "' at position " +
                      std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  if (level != 0) {
    throw Error(Errc::unbalanced, "unbalanced word: final level is " +
                                      std::to_string(level));
  }
  return Word(std::move(steps));
}

Word Word::from_steps(std::vector<Step> steps) {
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    level += steps[i] == Step::up ? 1 : -1;
    if (level < 0) {
      throw Error(Errc::prefix_underflow,
                  "prefix underflow at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  if (level != 0) {
    throw Error(Errc::unbalanced, "unbalanced word: final level is " +
                                      std::to_string(level));
  }
  return Word(std::move(steps));
}

std::string Word::text(Alphabet alphabet) const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) {
    out.push_back(s == Step::up ? alphabet.up : alphabet.down);
  }
  return out;
}

std::vector<std::int64_t> level_profile(const Word& w) {
  std::vector<std::int64_t> levels;
  levels.reserve(w.steps().size() + 1);
  levels.push_back(0);
  for (Step s : w.steps()) {
    levels.push_back(levels.back() + (s == Step::up ? 1 : -1));
  }
  return levels;
}

std::vector<Point> peaks(const Word& w) {
  std::vector<Point> out;
  const auto steps = w.steps();
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::up) {
      ++level;
    } else {
      if (i > 0 && steps[i - 1] == Step::up) {
        out.push_back({static_cast<std::int64_t>(i), level});
      }
      --level;
    }
  }
  return out;
}

std::vector<Point> valleys(const Word& w, bool include_terminal) {
  std::vector<Point> out;
  const auto steps = w.steps();
  std::int64_t level = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::up) {
      if (i > 0 && steps[i - 1] == Step::down) {
        out.push_back({static_cast<std::int64_t>(i), level});
      }
      ++level;
    } else {
      --level;
    }
  }
  if (include_terminal && !w.empty()) {
    out.push_back({static_cast<std::int64_t>(steps.size()), 0});
  }
  return out;
}

bool is_prime(const Word& w) {
  if (w.empty()) {
    throw Error(Errc::empty_word, "primality is undefined for the empty word");
  }
  const auto steps = w.steps();
  const auto n = static_cast<std::size_t>(w.semilength());
  // up^n down^n: once the first n steps are all rises, balance forces
  // the remaining n to be falls.
  for (std::size_t i = 0; i < n; ++i) {
    if (steps[i] != Step::up) return false;
  }
  return true;
}

std::string render_ascii(const Word& w) {
  const auto levels = level_profile(w);
  const std::int64_t max_level = *std::max_element(levels.begin(), levels.end());
  if (max_level == 0) return "";

  const std::size_t columns = w.steps().size();
  std::vector<std::string> rows(static_cast<std::size_t>(max_level),
                                std::string(columns, ' '));
  const auto steps = w.steps();
  for (std::size_t i = 0; i < columns; ++i) {
    // row index 0 is the highest level
    const std::int64_t stroke_level =
        steps[i] == Step::up ? levels[i] + 1 : levels[i];
    rows[static_cast<std::size_t>(max_level - stroke_level)][i] =
        steps[i] == Step::up ? '/' : '\\';
  }

  std::string out;
  for (auto& row : rows) {
    const auto end = row.find_last_not_of(' ');
    row.erase(end + 1);
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace dyck
