#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/report.hpp"
#include "fixture_io.hpp"

namespace coxkit::cli {

struct SuiteOptions {
  bool break_coefficient = false;  // associator with 1 in place of 1/24
  unsigned threads = 1;
};

// COXKIT_THREADS if set and positive, else the hardware concurrency.
unsigned default_threads();

// Runs fn(0..n-1) on up to `threads` workers; results keep index order.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

struct Criterion {
  int id;
  std::string title;
  std::string suite;  // the single suite that reports it
  double limit_seconds;
};
const std::vector<Criterion>& criteria();
// Checks of one acceptance criterion.
Report run_criterion(int id, const SuiteOptions& opt = {});

struct SuiteResult {
  std::string suite;
  Report report;
  double seconds = 0;
};
// Named suites in the order "all" runs them, followed by the fixture views.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// "all" expands to every owning suite. Throws std::invalid_argument for unknown names.
std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt = {});

// Fixtures the library can build itself (witnesses, Hopf algebras, bialgebras).
const std::vector<std::string>& builtin_fixture_names();
Json builtin_fixture(const std::string& name);

// Checks a loaded fixture according to its kind. Matrix fixtures with an
// "expected" block are compared against it; otherwise the verdict is reported.
Report check_fixture(const Json& j);

// Non-isomorphic graphs on n vertices, optionally connected only.
std::vector<Diagram> graphs_up_to_isomorphism(unsigned n, bool connected_only);

}  // namespace coxkit::cli
