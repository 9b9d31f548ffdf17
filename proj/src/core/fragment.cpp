#include "core/fragment.hpp"

namespace dyck {

std::string PrimeFragment::text(Alphabet alphabet) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(ascent_len + descent_len));
  out.append(static_cast<std::size_t>(ascent_len), alphabet.up);
  out.append(static_cast<std::size_t>(descent_len), alphabet.down);
  return out;
}

std::vector<PrimeFragment> factorize(const Word& w) {
  std::vector<PrimeFragment> out;
  const auto steps = w.steps();
  std::size_t i = 0;
  std::int64_t level = 0;
  // A valid word is an alternation of ascents and descents, so scanning
  // run by run lands exactly on the interior valleys.
  while (i < steps.size()) {
    std::int64_t ascent = 0;
    while (i < steps.size() && steps[i] == Step::up) {
      ++ascent;
      ++i;
    }
    const Point peak{static_cast<std::int64_t>(i), level + ascent};
    std::int64_t descent = 0;
    while (i < steps.size() && steps[i] == Step::down) {
      ++descent;
      ++i;
    }
    out.push_back({ascent, descent, peak});
    level += ascent - descent;
  }
  return out;
}

Word concat_fragments(std::span<const PrimeFragment> fragments) {
  std::vector<Step> steps;
  std::int64_t level = 0;
  std::int64_t x = 0;
  for (std::size_t k = 0; k < fragments.size(); ++k) {
    const auto& f = fragments[k];
    if (f.ascent_len < 1 || f.descent_len < 1) {
      throw Error(Errc::invalid_argument,
                  "fragment " + std::to_string(k) +
                      ": ascent and descent must be positive");
    }
    const Point peak{x + f.ascent_len, level + f.ascent_len};
    if (f.peak != peak) {
      throw Error(Errc::invalid_argument,
                  "fragment " + std::to_string(k) + ": peak (" +
                      std::to_string(f.peak.x) + "," +
                      std::to_string(f.peak.y) +
                      ") does not match its position in the sequence");
    }
    level += f.ascent_len - f.descent_len;
    x += f.ascent_len + f.descent_len;
    if (level < 0) {
      throw Error(Errc::not_a_path, "fragment " + std::to_string(k) +
                                        " drops the level below zero");
    }
    steps.insert(steps.end(), static_cast<std::size_t>(f.ascent_len),
                 Step::up);
    steps.insert(steps.end(), static_cast<std::size_t>(f.descent_len),
                 Step::down);
  }
  if (level != 0) {
    throw Error(Errc::not_a_path, "fragment sequence ends at level " +
                                      std::to_string(level));
  }
  return Word::from_steps(std::move(steps));
}

}  // namespace dyck
