#include "dyck/dyck.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "core/enumerate.hpp"
#include "core/fragment.hpp"
#include "core/grid.hpp"
#include "core/reconstruct.hpp"
#include "core/word.hpp"

struct dyck_word {
  dyck::Word value;
};

struct dyck_enum {
  dyck::Enumerator cursor;
};

namespace {

dyck_status map_errc(dyck::Errc c) {
  switch (c) {
    case dyck::Errc::invalid_symbol: return DYCK_ERR_INVALID_SYMBOL;
    case dyck::Errc::prefix_underflow: return DYCK_ERR_PREFIX_UNDERFLOW;
    case dyck::Errc::unbalanced: return DYCK_ERR_UNBALANCED;
    case dyck::Errc::not_a_path: return DYCK_ERR_NOT_A_PATH;
    case dyck::Errc::empty_word: return DYCK_ERR_EMPTY_WORD;
    case dyck::Errc::invalid_adjacency: return DYCK_ERR_INVALID_ADJACENCY;
    case dyck::Errc::invalid_point_set: return DYCK_ERR_INVALID_POINT_SET;
    case dyck::Errc::parity_violation: return DYCK_ERR_PARITY;
    case dyck::Errc::overflow: return DYCK_ERR_OVERFLOW;
    case dyck::Errc::bound_exceeded: return DYCK_ERR_BOUND_EXCEEDED;
    case dyck::Errc::invalid_argument: return DYCK_ERR_INVALID_ARGUMENT;
  }
  return DYCK_ERR_INVALID_ARGUMENT;
}

template <typename F>
dyck_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const dyck::Error& e) {
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    return DYCK_ERR_NOMEM;
  } catch (...) {
    return DYCK_ERR_INVALID_ARGUMENT;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
T* dup_array(const T* data, std::size_t count) {
  // malloc even when empty so callers can free unconditionally
  T* out = static_cast<T*>(std::malloc(count * sizeof(T) + 1));
  if (!out) throw std::bad_alloc();
  if (count > 0) std::memcpy(out, data, count * sizeof(T));
  return out;
}

dyck_point c_point(const dyck::Point& p) { return {p.x, p.y}; }

dyck_point* dup_points(const std::vector<dyck::Point>& pts) {
  std::vector<dyck_point> raw;
  raw.reserve(pts.size());
  for (const auto& p : pts) raw.push_back(c_point(p));
  return dup_array(raw.data(), raw.size());
}

std::vector<dyck::Point> to_core_points(const dyck_point* points,
                                        std::size_t count) {
  std::vector<dyck::Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({points[i].x, points[i].y});
  }
  return out;
}

}  // namespace

extern "C" {

const char* dyck_version(void) { return "0.1.0"; }

const char* dyck_status_str(dyck_status status) {
  switch (status) {
    case DYCK_OK: return "ok";
    case DYCK_ERR_INVALID_SYMBOL: return "invalid symbol";
    case DYCK_ERR_PREFIX_UNDERFLOW: return "prefix underflow";
    case DYCK_ERR_UNBALANCED: return "unbalanced";
    case DYCK_ERR_NOT_A_PATH: return "not a path";
    case DYCK_ERR_EMPTY_WORD: return "empty word";
    case DYCK_ERR_INVALID_ADJACENCY: return "invalid adjacency";
    case DYCK_ERR_INVALID_POINT_SET: return "invalid point set";
    case DYCK_ERR_PARITY: return "parity violation";
    case DYCK_ERR_OVERFLOW: return "overflow";
    case DYCK_ERR_BOUND_EXCEEDED: return "bound exceeded";
    case DYCK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DYCK_ERR_NOMEM: return "out of memory";
  }
  return "unknown";
}

void dyck_free(void* buffer) { std::free(buffer); }

dyck_status dyck_word_parse(const char* text, char up, char down,
                            dyck_word** out, int64_t* error_pos) {
  if (!text || !out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    try {
      auto word = dyck::Word::parse(text, {up, down});
      *out = new dyck_word{std::move(word)};
      return DYCK_OK;
    } catch (const dyck::Error& e) {
      if (error_pos) *error_pos = e.position().value_or(-1);
      throw;
    }
  });
}

void dyck_word_free(dyck_word* word) { delete word; }

int64_t dyck_word_semilength(const dyck_word* word) {
  return word ? word->value.semilength() : -1;
}

dyck_status dyck_word_text(const dyck_word* word, char up, char down,
                           char** out) {
  if (!word || !out) return DYCK_ERR_INVALID_ARGUMENT;
  if (up == down) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(word->value.text({up, down}));
    return DYCK_OK;
  });
}

dyck_status dyck_word_levels(const dyck_word* word, int64_t** levels,
                             size_t* count) {
  if (!word || !levels || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto profile = dyck::level_profile(word->value);
    *levels = dup_array(profile.data(), profile.size());
    *count = profile.size();
    return DYCK_OK;
  });
}

dyck_status dyck_word_peaks(const dyck_word* word, dyck_point** points,
                            size_t* count) {
  if (!word || !points || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto pts = dyck::peaks(word->value);
    *points = dup_points(pts);
    *count = pts.size();
    return DYCK_OK;
  });
}

dyck_status dyck_word_valleys(const dyck_word* word, int include_terminal,
                              dyck_point** points, size_t* count) {
  if (!word || !points || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto pts = dyck::valleys(word->value, include_terminal != 0);
    *points = dup_points(pts);
    *count = pts.size();
    return DYCK_OK;
  });
}

dyck_status dyck_word_is_prime(const dyck_word* word, int* prime) {
  if (!word || !prime) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *prime = dyck::is_prime(word->value) ? 1 : 0;
    return DYCK_OK;
  });
}

dyck_status dyck_word_render_ascii(const dyck_word* word, char** out) {
  if (!word || !out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(dyck::render_ascii(word->value));
    return DYCK_OK;
  });
}

dyck_status dyck_word_factorize(const dyck_word* word,
                                dyck_fragment** fragments, size_t* count) {
  if (!word || !fragments || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto frags = dyck::factorize(word->value);
    std::vector<dyck_fragment> raw;
    raw.reserve(frags.size());
    for (const auto& f : frags) {
      raw.push_back({f.ascent_len, f.descent_len, c_point(f.peak)});
    }
    *fragments = dup_array(raw.data(), raw.size());
    *count = raw.size();
    return DYCK_OK;
  });
}

dyck_status dyck_word_from_fragments(const dyck_fragment* fragments,
                                     size_t count, dyck_word** out) {
  if ((!fragments && count > 0) || !out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<dyck::PrimeFragment> frags;
    frags.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      frags.push_back({fragments[i].ascent_len, fragments[i].descent_len,
                       {fragments[i].peak.x, fragments[i].peak.y}});
    }
    auto word = dyck::concat_fragments(frags);
    *out = new dyck_word{std::move(word)};
    return DYCK_OK;
  });
}

dyck_status dyck_validate_peak_set(const dyck_point* points, size_t count,
                                   int* valid, char** report) {
  if ((!points && count > 0) || !valid) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto pts = to_core_points(points, count);
    const auto v = dyck::check_peak_set(pts);
    *valid = v.ok() ? 1 : 0;
    if (report) *report = dup_string(v.report());
    return DYCK_OK;
  });
}

dyck_status dyck_validate_valley_set(const dyck_point* points, size_t count,
                                     int* valid, char** report) {
  if ((!points && count > 0) || !valid) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto pts = to_core_points(points, count);
    const auto v = dyck::check_valley_set(pts);
    *valid = v.ok() ? 1 : 0;
    if (report) *report = dup_string(v.report());
    return DYCK_OK;
  });
}

dyck_status dyck_valleys_from_peaks(const dyck_point* peaks, size_t count,
                                    dyck_point** valleys, size_t* out_count) {
  if ((!peaks && count > 0) || !valleys || !out_count) {
    return DYCK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto ps = dyck::PeakSet::validated(to_core_points(peaks, count));
    const auto vs = dyck::valleys_from_peaks(ps);
    *valleys = dup_points(vs.points());
    *out_count = vs.points().size();
    return DYCK_OK;
  });
}

dyck_status dyck_peaks_from_valleys(const dyck_point* valleys, size_t count,
                                    dyck_point** peaks, size_t* out_count) {
  if ((!valleys && count > 0) || !peaks || !out_count) {
    return DYCK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto vs = dyck::ValleySet::validated(to_core_points(valleys, count));
    const auto ps = dyck::peaks_from_valleys(vs);
    *peaks = dup_points(ps.points());
    *out_count = ps.points().size();
    return DYCK_OK;
  });
}

dyck_status dyck_word_from_peaks(const dyck_point* peaks, size_t count,
                                 dyck_word** out) {
  if ((!peaks && count > 0) || !out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto ps = dyck::PeakSet::validated(to_core_points(peaks, count));
    *out = new dyck_word{dyck::word_from_peaks(ps)};
    return DYCK_OK;
  });
}

dyck_status dyck_word_from_valleys(const dyck_point* valleys, size_t count,
                                   dyck_word** out) {
  if ((!valleys && count > 0) || !out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto vs = dyck::ValleySet::validated(to_core_points(valleys, count));
    *out = new dyck_word{dyck::word_from_valleys(vs)};
    return DYCK_OK;
  });
}

dyck_status dyck_point_to_modified(dyck_point p, dyck_point* out) {
  if (!out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto m = dyck::to_modified({p.x, p.y});
    *out = {m.xm, m.y};
    return DYCK_OK;
  });
}

dyck_status dyck_point_from_modified(dyck_point m, dyck_point* out) {
  if (!out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto p = dyck::from_modified({m.x, m.y});
    *out = {p.x, p.y};
    return DYCK_OK;
  });
}

dyck_status dyck_word_peaks_modified(const dyck_word* word,
                                     dyck_point** points, size_t* count) {
  if (!word || !points || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto pts = dyck::peaks_modified(word->value);
    std::vector<dyck_point> raw;
    raw.reserve(pts.size());
    for (const auto& m : pts) raw.push_back({m.xm, m.y});
    *points = dup_array(raw.data(), raw.size());
    *count = raw.size();
    return DYCK_OK;
  });
}

dyck_status dyck_cantor_pair(uint64_t k1, uint64_t k2, uint64_t* out) {
  if (!out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dyck::cantor_pair(k1, k2);
    return DYCK_OK;
  });
}

dyck_status dyck_cantor_unpair(uint64_t z, uint64_t* k1, uint64_t* k2) {
  if (!k1 || !k2) return DYCK_ERR_INVALID_ARGUMENT;
  const auto [a, b] = dyck::cantor_unpair(z);
  *k1 = a;
  *k2 = b;
  return DYCK_OK;
}

dyck_status dyck_word_encode_peaks(const dyck_word* word, uint64_t** codes,
                                   size_t* count) {
  if (!word || !codes || !count) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto values = dyck::encode_peak_set(word->value);
    *codes = dup_array(values.data(), values.size());
    *count = values.size();
    return DYCK_OK;
  });
}

dyck_status dyck_enum_create(int64_t semilength, dyck_enum** out) {
  if (!out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new dyck_enum{dyck::Enumerator(semilength)};
    return DYCK_OK;
  });
}

int dyck_enum_next(dyck_enum* cursor, dyck_word** out) {
  if (!cursor || !out) return 0;
  try {
    auto word = cursor->cursor.next();
    if (!word) return 0;
    *out = new dyck_word{std::move(*word)};
    return 1;
  } catch (...) {
    return 0;
  }
}

void dyck_enum_free(dyck_enum* cursor) { delete cursor; }

dyck_status dyck_catalan_decimal(int64_t n, char** out) {
  if (!out) return DYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(dyck::catalan_decimal(n));
    return DYCK_OK;
  });
}

}  // extern "C"
