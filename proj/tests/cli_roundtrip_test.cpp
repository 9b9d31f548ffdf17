// Shell-level round trip: for every word of semilength <= 8, piping the
// peaks subcommand into from-peaks must reproduce the word byte-exactly,
// and likewise for valleys. Spawns real pipelines, so this is the slow
// test of the suite.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <sys/wait.h>

#include "oracle.hpp"

namespace {

std::string g_cli;

bool pipeline(const std::string& word, const char* extract,
              const char* rebuild, std::string& out) {
  const std::string cmd = g_cli + " " + extract + " '" + word + "' | " +
                          g_cli + " " + rebuild + " -";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  char buf[256];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_roundtrip_tests <path-to-dyck-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  std::size_t failures = 0;
  std::size_t words = 0;
  for (int n = 0; n <= 8; ++n) {
    for (const auto& word : oracle::enumerate(n)) {
      ++words;
      const std::string expected = word + "\n";
      std::string out;
      if (!pipeline(word, "peaks", "from-peaks", out) || out != expected) {
        ++failures;
        std::cout << "FAIL peaks round trip: \"" << word << "\" -> \"" << out
                  << "\"\n";
      }
      if (!pipeline(word, "valleys", "from-valleys", out) ||
          out != expected) {
        ++failures;
        std::cout << "FAIL valleys round trip: \"" << word << "\" -> \""
                  << out << "\"\n";
      }
    }
  }

  std::cout << words << " words piped through both round trips, "
            << failures << " failure(s)\n";
  return failures == 0 ? 0 : 1;
}
