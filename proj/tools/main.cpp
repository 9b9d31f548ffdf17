// dyck: command-line front end over the libdyck C API.
//
// Exit codes: 0 success, 1 invalid word or point set, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dyck/dyck.h"
#include "textio.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct FreeDeleter {
  void operator()(void* p) const { dyck_free(p); }
};
struct WordDeleter {
  void operator()(dyck_word* w) const { dyck_word_free(w); }
};
struct EnumDeleter {
  void operator()(dyck_enum* e) const { dyck_enum_free(e); }
};

template <typename T>
using buffer_ptr = std::unique_ptr<T[], FreeDeleter>;
using string_ptr = std::unique_ptr<char[], FreeDeleter>;
using word_ptr = std::unique_ptr<dyck_word, WordDeleter>;
using enum_ptr = std::unique_ptr<dyck_enum, EnumDeleter>;

int fail(dyck_status status, std::int64_t position = -1) {
  std::cerr << "error: " << dyck_status_str(status);
  if (position >= 0) std::cerr << " at position " << position;
  std::cerr << "\n";
  return 1;
}

// A positional of "-" means: read the value from stdin.
std::string arg_or_stdin(const std::string& arg) {
  if (arg != "-") return arg;
  std::string data((std::istreambuf_iterator<char>(std::cin)),
                   std::istreambuf_iterator<char>());
  while (!data.empty() && (data.back() == '\n' || data.back() == '\r' ||
                           data.back() == ' ' || data.back() == '\t')) {
    data.pop_back();
  }
  std::size_t start = 0;
  while (start < data.size() && (data[start] == ' ' || data[start] == '\t' ||
                                 data[start] == '\n' || data[start] == '\r')) {
    ++start;
  }
  return data.substr(start);
}

struct Options {
  std::string input;
  std::string alphabet = "ud";
  bool json = false;
  bool terminal = true;
  std::string what = "peaks";
  std::int64_t n = 0;
  std::int64_t limit = -1;

  char up() const { return alphabet[0]; }
  char down() const { return alphabet[1]; }
};

// nullptr on failure, with the error already reported.
word_ptr parse_word(const Options& opt, int& rc) {
  const std::string text = arg_or_stdin(opt.input);
  dyck_word* raw = nullptr;
  std::int64_t pos = -1;
  const dyck_status st =
      dyck_word_parse(text.c_str(), opt.up(), opt.down(), &raw, &pos);
  if (st != DYCK_OK) {
    rc = fail(st, pos);
    return nullptr;
  }
  return word_ptr(raw);
}

ordered_json envelope(const Options& opt, const dyck_word* w) {
  string_ptr text;
  {
    char* raw = nullptr;
    dyck_word_text(w, opt.up(), opt.down(), &raw);
    text.reset(raw);
  }
  ordered_json j;
  j["word"] = text.get();
  j["semilength"] = dyck_word_semilength(w);
  return j;
}

ordered_json points_json(const dyck_point* points, std::size_t count) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < count; ++i) {
    arr.push_back({points[i].x, points[i].y});
  }
  return arr;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int run_validate(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  std::cout << "Ok! Semilength is " << dyck_word_semilength(w.get()) << "\n";
  return 0;
}

int run_peaks(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  dyck_point* raw = nullptr;
  std::size_t count = 0;
  dyck_word_peaks(w.get(), &raw, &count);
  const buffer_ptr<dyck_point> points(raw);
  if (opt.json) {
    ordered_json j = envelope(opt, w.get());
    j["peaks"] = points_json(points.get(), count);
    emit(j);
  } else {
    std::cout << dycktool::format_points(points.get(), count) << "\n";
  }
  return 0;
}

int run_valleys(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  dyck_point* raw = nullptr;
  std::size_t count = 0;
  dyck_word_valleys(w.get(), opt.terminal ? 1 : 0, &raw, &count);
  const buffer_ptr<dyck_point> points(raw);
  if (opt.json) {
    ordered_json j = envelope(opt, w.get());
    j["valleys"] = points_json(points.get(), count);
    emit(j);
  } else {
    std::cout << dycktool::format_points(points.get(), count) << "\n";
  }
  return 0;
}

int run_factorize(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  dyck_fragment* raw = nullptr;
  std::size_t count = 0;
  dyck_word_factorize(w.get(), &raw, &count);
  const buffer_ptr<dyck_fragment> fragments(raw);

  std::vector<std::string> texts;
  texts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string t;
    t.append(static_cast<std::size_t>(fragments[i].ascent_len), opt.up());
    t.append(static_cast<std::size_t>(fragments[i].descent_len), opt.down());
    texts.push_back(std::move(t));
  }
  if (opt.json) {
    ordered_json j = envelope(opt, w.get());
    j["fragments"] = texts;
    emit(j);
  } else {
    std::string line;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i > 0) line += '-';
      line += texts[i];
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_modify(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;

  dyck_point* raw = nullptr;
  std::size_t count = 0;
  if (opt.what == "peaks") {
    dyck_word_peaks_modified(w.get(), &raw, &count);
  } else {
    dyck_word_valleys(w.get(), opt.terminal ? 1 : 0, &raw, &count);
    for (std::size_t i = 0; i < count; ++i) {
      dyck_point_to_modified(raw[i], &raw[i]);
    }
  }
  const buffer_ptr<dyck_point> points(raw);
  if (opt.json) {
    ordered_json j = envelope(opt, w.get());
    j["modified"] = points_json(points.get(), count);
    emit(j);
  } else {
    std::cout << dycktool::format_points(points.get(), count) << "\n";
  }
  return 0;
}

int run_encode(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  std::uint64_t* raw = nullptr;
  std::size_t count = 0;
  const dyck_status st = dyck_word_encode_peaks(w.get(), &raw, &count);
  if (st != DYCK_OK) return fail(st);
  const buffer_ptr<std::uint64_t> codes(raw);
  if (opt.json) {
    ordered_json j = envelope(opt, w.get());
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i) arr.push_back(codes[i]);
    j["codes"] = arr;
    emit(j);
  } else {
    std::cout << dycktool::format_codes(codes.get(), count) << "\n";
  }
  return 0;
}

int print_word(const Options& opt, const dyck_word* w) {
  char* raw = nullptr;
  const dyck_status st = dyck_word_text(w, opt.up(), opt.down(), &raw);
  if (st != DYCK_OK) return fail(st);
  const string_ptr text(raw);
  std::cout << text.get() << "\n";
  return 0;
}

int run_from_points(const Options& opt, bool from_peaks) {
  const std::string text = arg_or_stdin(opt.input);
  std::vector<dyck_point> points;
  std::string err;
  if (!dycktool::parse_points(text, points, err)) {
    std::cerr << "error: " << err << "\n";
    return 1;
  }
  if (points.empty()) {
    // an empty set is the empty word's set; print the empty word
    std::cout << "\n";
    return 0;
  }

  int valid = 0;
  char* report_raw = nullptr;
  if (from_peaks) {
    dyck_validate_peak_set(points.data(), points.size(), &valid, &report_raw);
  } else {
    dyck_validate_valley_set(points.data(), points.size(), &valid,
                             &report_raw);
  }
  const string_ptr report(report_raw);
  if (!valid) {
    std::cerr << "error: invalid " << (from_peaks ? "peak" : "valley")
              << " set\n"
              << report.get() << "\n";
    return 1;
  }

  dyck_word* raw = nullptr;
  const dyck_status st =
      from_peaks
          ? dyck_word_from_peaks(points.data(), points.size(), &raw)
          : dyck_word_from_valleys(points.data(), points.size(), &raw);
  if (st != DYCK_OK) return fail(st);
  const word_ptr w(raw);
  return print_word(opt, w.get());
}

int run_enumerate(const Options& opt) {
  dyck_enum* raw = nullptr;
  const dyck_status st = dyck_enum_create(opt.n, &raw);
  if (st != DYCK_OK) return fail(st);
  const enum_ptr cursor(raw);

  std::int64_t emitted = 0;
  dyck_word* word_raw = nullptr;
  while ((opt.limit < 0 || emitted < opt.limit) &&
         dyck_enum_next(cursor.get(), &word_raw)) {
    const word_ptr w(word_raw);
    char* text_raw = nullptr;
    dyck_word_text(w.get(), opt.up(), opt.down(), &text_raw);
    const string_ptr text(text_raw);
    std::fputs(text.get(), stdout);
    std::fputc('\n', stdout);
    ++emitted;
  }
  return 0;
}

int run_count(const Options& opt) {
  char* raw = nullptr;
  const dyck_status st = dyck_catalan_decimal(opt.n, &raw);
  if (st != DYCK_OK) return fail(st);
  const string_ptr digits(raw);
  std::cout << digits.get() << "\n";
  return 0;
}

int run_render(const Options& opt) {
  int rc = 0;
  const word_ptr w = parse_word(opt, rc);
  if (!w) return rc;
  char* raw = nullptr;
  dyck_word_render_ascii(w.get(), &raw);
  const string_ptr drawing(raw);
  std::fputs(drawing.get(), stdout);
  return 0;
}

std::string check_alphabet(const std::string& value) {
  if (value.size() != 2 || value[0] == value[1]) {
    return "alphabet must be exactly two distinct characters";
  }
  return {};
}

void add_alphabet(CLI::App* cmd, Options& opt) {
  cmd->add_option("-a,--alphabet", opt.alphabet,
                  "Two characters mapped to up and down (default \"ud\")")
      ->check(CLI::Validator(check_alphabet, "ALPHABET"));
}

void add_word_arg(CLI::App* cmd, Options& opt) {
  cmd->add_option("word", opt.input, "Dyck word, or \"-\" to read stdin")
      ->required();
  add_alphabet(cmd, opt);
}

void add_json(CLI::App* cmd, Options& opt) {
  cmd->add_flag("-j,--json", opt.json, "Emit a JSON envelope");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dyck path toolkit: validate words, factorize into prime fragments, "
      "extract peak/valley sets, reconstruct the path from either set, "
      "apply grid transforms and integer codes, enumerate words."};
  app.require_subcommand(1);

  Options opt;
  int rc = 0;

  auto* validate =
      app.add_subcommand("validate", "Check a word and print its semilength");
  add_word_arg(validate, opt);
  validate->callback([&] { rc = run_validate(opt); });

  auto* peaks = app.add_subcommand("peaks", "Peak set of a word");
  add_word_arg(peaks, opt);
  add_json(peaks, opt);
  peaks->callback([&] { rc = run_peaks(opt); });

  auto* valleys = app.add_subcommand("valleys", "Valley set of a word");
  add_word_arg(valleys, opt);
  add_json(valleys, opt);
  valleys->add_flag("--terminal,!--no-terminal", opt.terminal,
                    "Include the terminal valley (2n,0) (default on)");
  valleys->callback([&] { rc = run_valleys(opt); });

  auto* factorize =
      app.add_subcommand("factorize", "Prime-fragment factorization");
  add_word_arg(factorize, opt);
  add_json(factorize, opt);
  factorize->callback([&] { rc = run_factorize(opt); });

  auto* modify = app.add_subcommand(
      "modify", "Peak or valley set in the condensed grid x' = (x-y)/2");
  add_word_arg(modify, opt);
  add_json(modify, opt);
  modify->add_option("-w,--what", opt.what, "Which set to transform")
      ->check(CLI::IsMember({"peaks", "valleys"}))
      ->default_str("peaks");
  modify->add_flag("--terminal,!--no-terminal", opt.terminal,
                   "Include the terminal valley (default on)");
  modify->callback([&] { rc = run_modify(opt); });

  auto* encode = app.add_subcommand(
      "encode",
      "Integer code of each modified peak: the Cantor pairing "
      "(k1+k2)(k1+k2+1)/2 + k2 applied to (x', y)");
  add_word_arg(encode, opt);
  add_json(encode, opt);
  encode->callback([&] { rc = run_encode(opt); });

  auto* from_peaks = app.add_subcommand(
      "from-peaks", "Rebuild the word from a peak set \"x1,y1;x2,y2;...\"");
  from_peaks->add_option("points", opt.input, "Point set, or \"-\" for stdin")
      ->required();
  add_alphabet(from_peaks, opt);
  from_peaks->callback([&] { rc = run_from_points(opt, true); });

  auto* from_valleys = app.add_subcommand(
      "from-valleys",
      "Rebuild the word from a valley set (terminal point included)");
  from_valleys->add_option("points", opt.input,
                           "Point set, or \"-\" for stdin")
      ->required();
  add_alphabet(from_valleys, opt);
  from_valleys->callback([&] { rc = run_from_points(opt, false); });

  auto* enumerate = app.add_subcommand(
      "enumerate", "Stream every word of a semilength, one per line");
  enumerate->add_option("n", opt.n, "Semilength (0..16)")->required();
  enumerate->add_option("-l,--limit", opt.limit,
                        "Stop after this many words");
  add_alphabet(enumerate, opt);
  enumerate->callback([&] { rc = run_enumerate(opt); });

  auto* count =
      app.add_subcommand("count", "Number of words of a semilength (Catalan)");
  count->add_option("n", opt.n, "Semilength")->required();
  count->callback([&] { rc = run_count(opt); });

  auto* render = app.add_subcommand("render", "ASCII drawing of the path");
  add_word_arg(render, opt);
  render->callback([&] { rc = run_render(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }
  return rc;
}
