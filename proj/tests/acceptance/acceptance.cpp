// One line per acceptance criterion: PASS/FAIL, id, title, time against its limit.
// Exit status is 0 only if every criterion passes within its limit.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "suites.hpp"

int main(int argc, char** argv) {
  using namespace coxkit::cli;
  int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (const Criterion& c : criteria()) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      coxkit::Report r = run_criterion(c.id);
      pass = r.ok() && !r.checks().empty();
      if (!r.ok()) detail = r.failures().front();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && secs > c.limit_seconds) {
      pass = false;
      detail = "over the time limit";
    }
    failed += !pass;
    std::printf("%s  criterion %2d  %-90s %7.2fs / %3.0fs%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
