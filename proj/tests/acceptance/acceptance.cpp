// One line per acceptance criterion on stdout; failing cases go to stderr.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "fitkit/caps.hpp"
#include "fitkit_cli/corpus.hpp"
#include "fitkit_cli/suites.hpp"

using namespace fitkit::cli;

int main(int argc, char** argv) {
  fitkit::load_caps_from_env();
  const auto corpus = load_corpus(argc > 1 ? std::filesystem::path(argv[1]) : default_corpus_dir());
  const char* suites[] = {"theoremB", "oracleFstar", "centralProduct", "minimalNormal", "prop34", "sylowHall",
                          "tate",     "cor213",      "towerDegeneracy", "theoremD",     "supernatural"};
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 11; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    std::string error;
    try {
      r = run_suite(suites[k], corpus, SuiteOptions{});
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && r.all_passed();
    failed += !pass;
    char line[160];
    std::snprintf(line, sizeof line, "criterion %2d  %-16s %s  %zu/%zu cases  %.2f s", k + 1, suites[k],
                  pass ? "PASS" : "FAIL", r.passed(), r.cases.size(), s);
    std::cout << line << std::endl;
    if (!error.empty()) std::cerr << "  criterion " << k + 1 << " error: " << error << "\n";
    for (const auto& c : r.cases)
      if (!c.pass) std::cerr << "  criterion " << k + 1 << " failed case: " << c.name << "  " << c.detail << "\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 11 criteria pass, %.2f s total\n", 11 - failed, total);
  return failed == 0 ? 0 : 1;
}
