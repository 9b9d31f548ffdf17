// Exercises the shared-library surface exactly as an external C client
// would: through dyck/dyck.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "dyck/dyck.h"

namespace {

struct Owned {
  void* p = nullptr;
  ~Owned() { dyck_free(p); }
};

dyck_word* must_parse(const char* text) {
  dyck_word* w = nullptr;
  REQUIRE(dyck_word_parse(text, 'u', 'd', &w, nullptr) == DYCK_OK);
  return w;
}

}  // namespace

TEST_CASE("parse, semilength, text") {
  dyck_word* w = must_parse("uduuudduuddd");
  CHECK(dyck_word_semilength(w) == 6);

  char* text = nullptr;
  REQUIRE(dyck_word_text(w, 'u', 'd', &text) == DYCK_OK);
  CHECK(std::string(text) == "uduuudduuddd");
  dyck_free(text);

  REQUIRE(dyck_word_text(w, '(', ')', &text) == DYCK_OK);
  CHECK(std::string(text) == "()((())(()))");
  dyck_free(text);
  dyck_word_free(w);
}

TEST_CASE("parse errors carry status and position") {
  dyck_word* w = nullptr;
  int64_t pos = -2;

  CHECK(dyck_word_parse("du", 'u', 'd', &w, &pos) ==
        DYCK_ERR_PREFIX_UNDERFLOW);
  CHECK(pos == 0);

  CHECK(dyck_word_parse("uxd", 'u', 'd', &w, &pos) ==
        DYCK_ERR_INVALID_SYMBOL);
  CHECK(pos == 1);

  CHECK(dyck_word_parse("uud", 'u', 'd', &w, &pos) == DYCK_ERR_UNBALANCED);
  CHECK(pos == -1);

  CHECK(dyck_word_parse("ud", 'x', 'x', &w, &pos) ==
        DYCK_ERR_INVALID_ARGUMENT);
  CHECK(dyck_word_parse(nullptr, 'u', 'd', &w, &pos) ==
        DYCK_ERR_INVALID_ARGUMENT);
  CHECK(w == nullptr);
}

TEST_CASE("peaks, valleys, levels") {
  dyck_word* w = must_parse("uduuudduuddd");

  dyck_point* pts = nullptr;
  size_t count = 0;
  REQUIRE(dyck_word_peaks(w, &pts, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK((pts[0].x == 1 && pts[0].y == 1));
  CHECK((pts[1].x == 5 && pts[1].y == 3));
  CHECK((pts[2].x == 9 && pts[2].y == 3));
  dyck_free(pts);

  REQUIRE(dyck_word_valleys(w, 1, &pts, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK((pts[2].x == 12 && pts[2].y == 0));
  dyck_free(pts);

  REQUIRE(dyck_word_valleys(w, 0, &pts, &count) == DYCK_OK);
  CHECK(count == 2);
  dyck_free(pts);

  int64_t* levels = nullptr;
  REQUIRE(dyck_word_levels(w, &levels, &count) == DYCK_OK);
  REQUIRE(count == 13);
  CHECK(levels[0] == 0);
  CHECK(levels[5] == 3);
  CHECK(levels[12] == 0);
  dyck_free(levels);

  dyck_word_free(w);
}

TEST_CASE("prime check") {
  dyck_word* pyramid = must_parse("uuuddd");
  int prime = 0;
  REQUIRE(dyck_word_is_prime(pyramid, &prime) == DYCK_OK);
  CHECK(prime == 1);
  dyck_word_free(pyramid);

  dyck_word* empty = must_parse("");
  CHECK(dyck_word_is_prime(empty, &prime) == DYCK_ERR_EMPTY_WORD);
  dyck_word_free(empty);
}

TEST_CASE("factorize and rebuild") {
  dyck_word* w = must_parse("uduuudduuddd");
  dyck_fragment* frags = nullptr;
  size_t count = 0;
  REQUIRE(dyck_word_factorize(w, &frags, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK(frags[1].ascent_len == 3);
  CHECK(frags[1].descent_len == 2);
  CHECK(frags[1].peak.x == 5);
  CHECK(frags[1].peak.y == 3);

  dyck_word* rebuilt = nullptr;
  REQUIRE(dyck_word_from_fragments(frags, count, &rebuilt) == DYCK_OK);
  char* text = nullptr;
  REQUIRE(dyck_word_text(rebuilt, 'u', 'd', &text) == DYCK_OK);
  CHECK(std::string(text) == "uduuudduuddd");
  dyck_free(text);
  dyck_word_free(rebuilt);

  // break the level contract
  frags[2].descent_len += 2;
  CHECK(dyck_word_from_fragments(frags, count, &rebuilt) ==
        DYCK_ERR_NOT_A_PATH);

  dyck_free(frags);
  dyck_word_free(w);
}

TEST_CASE("validation reports") {
  const dyck_point good[] = {{1, 1}, {5, 3}, {9, 3}};
  int valid = 0;
  char* report = nullptr;
  REQUIRE(dyck_validate_peak_set(good, 3, &valid, &report) == DYCK_OK);
  CHECK(valid == 1);
  CHECK(std::string(report) == "valid");
  dyck_free(report);

  const dyck_point bad[] = {{1, 1}, {9, 1}};
  REQUIRE(dyck_validate_peak_set(bad, 2, &valid, &report) == DYCK_OK);
  CHECK(valid == 0);
  CHECK(std::string(report).find("below the x-axis") != std::string::npos);
  dyck_free(report);

  const dyck_point valleys[] = {{2, 0}, {7, 1}};
  REQUIRE(dyck_validate_valley_set(valleys, 2, &valid, &report) == DYCK_OK);
  CHECK(valid == 0);
  CHECK(std::string(report).find("x-axis") != std::string::npos);
  dyck_free(report);
}

TEST_CASE("reconstruction") {
  const dyck_point peaks[] = {{1, 1}, {5, 3}, {9, 3}};
  dyck_word* w = nullptr;
  REQUIRE(dyck_word_from_peaks(peaks, 3, &w) == DYCK_OK);
  char* text = nullptr;
  REQUIRE(dyck_word_text(w, 'u', 'd', &text) == DYCK_OK);
  CHECK(std::string(text) == "uduuudduuddd");
  dyck_free(text);
  dyck_word_free(w);

  dyck_point* derived = nullptr;
  size_t count = 0;
  REQUIRE(dyck_valleys_from_peaks(peaks, 3, &derived, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK((derived[0].x == 2 && derived[0].y == 0));
  CHECK((derived[1].x == 7 && derived[1].y == 1));
  CHECK((derived[2].x == 12 && derived[2].y == 0));

  dyck_word* from_v = nullptr;
  REQUIRE(dyck_word_from_valleys(derived, count, &from_v) == DYCK_OK);
  REQUIRE(dyck_word_text(from_v, 'u', 'd', &text) == DYCK_OK);
  CHECK(std::string(text) == "uduuudduuddd");
  dyck_free(text);
  dyck_word_free(from_v);

  dyck_point* back = nullptr;
  size_t back_count = 0;
  REQUIRE(dyck_peaks_from_valleys(derived, count, &back, &back_count) ==
          DYCK_OK);
  REQUIRE(back_count == 3);
  CHECK((back[1].x == 5 && back[1].y == 3));
  dyck_free(back);
  dyck_free(derived);

  const dyck_point bad[] = {{1, 1}, {9, 1}};
  CHECK(dyck_word_from_peaks(bad, 2, &from_v) == DYCK_ERR_INVALID_POINT_SET);
}

TEST_CASE("modified grid and codes") {
  dyck_point m = {0, 0};
  REQUIRE(dyck_point_to_modified({12, 0}, &m) == DYCK_OK);
  CHECK((m.x == 6 && m.y == 0));
  CHECK(dyck_point_to_modified({3, 2}, &m) == DYCK_ERR_PARITY);

  dyck_point p = {0, 0};
  REQUIRE(dyck_point_from_modified({3, 1}, &p) == DYCK_OK);
  CHECK((p.x == 7 && p.y == 1));

  dyck_word* w = must_parse("uduuudduuddd");
  dyck_point* pts = nullptr;
  size_t count = 0;
  REQUIRE(dyck_word_peaks_modified(w, &pts, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK((pts[0].x == 0 && pts[0].y == 1));
  CHECK((pts[1].x == 1 && pts[1].y == 3));
  CHECK((pts[2].x == 3 && pts[2].y == 3));
  dyck_free(pts);

  uint64_t* codes = nullptr;
  REQUIRE(dyck_word_encode_peaks(w, &codes, &count) == DYCK_OK);
  REQUIRE(count == 3);
  CHECK(codes[0] == 2);
  CHECK(codes[1] == 13);
  CHECK(codes[2] == 24);
  dyck_free(codes);
  dyck_word_free(w);

  uint64_t z = 0;
  REQUIRE(dyck_cantor_pair(1, 2, &z) == DYCK_OK);
  CHECK(z == 8);
  uint64_t k1 = 0;
  uint64_t k2 = 0;
  REQUIRE(dyck_cantor_unpair(8, &k1, &k2) == DYCK_OK);
  CHECK((k1 == 1 && k2 == 2));
  CHECK(dyck_cantor_pair(UINT64_MAX, UINT64_MAX, &z) == DYCK_ERR_OVERFLOW);
}

TEST_CASE("enumeration cursor") {
  dyck_enum* cursor = nullptr;
  REQUIRE(dyck_enum_create(4, &cursor) == DYCK_OK);
  size_t count = 0;
  std::string first;
  std::string last;
  dyck_word* w = nullptr;
  while (dyck_enum_next(cursor, &w)) {
    char* text = nullptr;
    REQUIRE(dyck_word_text(w, 'u', 'd', &text) == DYCK_OK);
    if (count == 0) first = text;
    last = text;
    dyck_free(text);
    dyck_word_free(w);
    ++count;
  }
  dyck_enum_free(cursor);
  CHECK(count == 14);
  CHECK(first == "udududud");
  CHECK(last == "uuuudddd");

  CHECK(dyck_enum_create(17, &cursor) == DYCK_ERR_BOUND_EXCEEDED);
  CHECK(dyck_enum_create(-1, &cursor) == DYCK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("catalan decimal") {
  char* digits = nullptr;
  REQUIRE(dyck_catalan_decimal(12, &digits) == DYCK_OK);
  CHECK(std::string(digits) == "208012");
  dyck_free(digits);
  CHECK(dyck_catalan_decimal(-3, &digits) == DYCK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("render through the C surface") {
  dyck_word* w = must_parse("uudd");
  char* drawing = nullptr;
  REQUIRE(dyck_word_render_ascii(w, &drawing) == DYCK_OK);
  CHECK(std::string(drawing) == " /\\\n/  \\\n");
  dyck_free(drawing);
  dyck_word_free(w);
}

TEST_CASE("status strings") {
  CHECK(std::string(dyck_status_str(DYCK_OK)) == "ok");
  CHECK(std::string(dyck_status_str(DYCK_ERR_PREFIX_UNDERFLOW)) ==
        "prefix underflow");
  CHECK(std::string(dyck_version()).size() > 0);
}
