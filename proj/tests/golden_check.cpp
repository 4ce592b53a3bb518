// Compares CLI output against the golden corpus; --update rewrites it.

#include <cstring>
#include <iostream>

#include "support/golden.hpp"

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_check TORIC_EXE GOLDEN_DIR [--update]\n";
    return 64;
  }
  const std::string exe = argv[1];
  const std::filesystem::path dir = argv[2];
  const bool update = argc > 3 && std::strcmp(argv[3], "--update") == 0;

  if (update) {
    for (const auto& c : golden::load(dir)) {
      auto o = golden::execute(exe, dir, c);
      std::ofstream(dir / (c.name + ".out"), std::ios::binary) << o.out;
      if (o.code != c.expected_code) std::cerr << c.name << ": exit " << o.code << "\n";
    }
    return 0;
  }

  int failures = 0;
  const auto results = golden::check_all(exe, dir);
  for (const auto& o : results) {
    std::cout << (o.matches ? "ok   " : "FAIL ") << o.c.name;
    if (!o.matches) {
      std::cout << ": " << o.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  std::cout << results.size() - failures << "/" << results.size() << " golden cases match\n";
  return failures == 0 && !results.empty() ? 0 : 1;
}
