#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "coxkit/chains.hpp"
#include "coxkit/diagrammatic.hpp"
#include "coxkit/errors.hpp"
#include "coxkit/nested_sets.hpp"
#include "coxkit/realization.hpp"
#include "fixture_io.hpp"
#include "suites.hpp"

namespace coxkit::cli {
namespace {

enum class Format { kText, kJson };

struct Common {
  Format format = Format::kText;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::kText}, {"json", Format::kJson}}));
  sub->add_flag("--timing", c.timing, "Report wall-clock seconds (makes output non-deterministic)");
}

// "0,2", "{0,2}", "{}" or "all".
VertexSet parse_set(const std::string& s, const Diagram& d) {
  if (s == "all") return d.all();
  std::string body = s;
  if (!body.empty() && body.front() == '{') body.erase(0, 1);
  if (!body.empty() && body.back() == '}') body.pop_back();
  VertexSet out;
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v >= d.size()) throw FixtureError("bad vertex '" + item + "' in set '" + s + "'");
    out = out | VertexSet::single(static_cast<unsigned>(v));
  }
  return out;
}

Json report_json(const std::string& name, const Report& r, std::optional<double> seconds) {
  Json checks = Json::array();
  for (const auto& c : r.checks())
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  Json j{{"suite", name}, {"status", r.ok() ? "pass" : "fail"}, {"checks", checks}};
  if (seconds) j["seconds"] = *seconds;
  return j;
}

void print_report(std::ostream& os, const std::string& name, const Report& r, std::optional<double> seconds) {
  std::size_t failed = 0;
  for (const auto& c : r.checks()) failed += !c.pass;
  os << "== " << name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.checks().size() - failed << "/"
     << r.checks().size() << ")";
  if (seconds) os << " " << std::fixed << std::setprecision(3) << *seconds << "s" << std::defaultfloat;
  os << "\n";
  for (const auto& c : r.checks()) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
}

// Emits reports and returns the exit code.
int emit(const Common& c, const std::vector<std::pair<std::string, Report>>& reports, const std::vector<double>& secs) {
  bool ok = true;
  Json all = Json::array();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    std::optional<double> s;
    if (c.timing && k < secs.size()) s = secs[k];
    ok = ok && reports[k].second.ok();
    if (c.format == Format::kJson)
      all.push_back(report_json(reports[k].first, reports[k].second, s));
    else
      print_report(std::cout, reports[k].first, reports[k].second, s);
  }
  if (c.format == Format::kJson) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return ok ? 0 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- enumerate ----------------------------------------------------------------

struct EnumerateArgs {
  std::string fixture, base = "all", lower = "{}";
  bool maximal = false, chains = false, count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& c) {
  auto t0 = std::chrono::steady_clock::now();
  Diagram d = diagram_from_json(load_fixture(a.fixture, "diagram")).diagram();
  VertexSet base = parse_set(a.base, d), lower = parse_set(a.lower, d);
  if ((lower - base) != VertexSet()) throw FixtureError("lower set must be contained in the base set");

  Json j{{"base", base.to_string()}, {"lower", lower.to_string()}, {"maximal", a.maximal}};
  std::vector<std::string> lines;
  if (a.chains) {
    ChainQuotient q = chain_quotient(d, base, lower);
    const std::size_t steps = (base - lower).vertices().size();
    std::set<std::size_t> components;
    for (std::size_t i = 0; i < q.chains.size(); ++i) {
      if (a.maximal && q.chains[i].length() != steps) continue;
      components.insert(q.component[i]);
      lines.push_back(q.chains[i].to_string() + " -> " + chain_to_nested_set(d, q.chains[i]).to_string() +
                      "  component " + std::to_string(q.component[i]));
    }
    j["chains"] = lines.size();
    j["components"] = components.size();
  } else {
    for (const auto& h : enumerate_nested_sets(d, base, lower, a.maximal)) lines.push_back(h.to_string());
    j["count"] = lines.size();
  }
  std::sort(lines.begin(), lines.end());
  if (!a.count_only) j["items"] = lines;
  if (c.timing) j["seconds"] = seconds_since(t0);

  if (c.format == Format::kJson) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!a.count_only)
    for (const auto& l : lines) std::cout << l << "\n";
  if (a.chains)
    std::cout << (a.count_only ? "" : "chains: ") << j["chains"].get<std::size_t>() << " chains, "
              << j["components"].get<std::size_t>() << " components\n";
  else if (a.count_only)
    std::cout << lines.size() << "\n";
  if (c.timing) std::cout << "time: " << j["seconds"].get<double>() << "s\n";
  return 0;
}

// ---- diagrammatic -------------------------------------------------------------

Json verdict_json(const DiagrammaticVerdict& v) {
  Json comps = Json::array();
  for (const auto& comp : v.components) {
    Json cj{{"vertices", comp.vertices.to_string()}, {"status", to_string(comp.status)}, {"reason", comp.reason}};
    if (comp.status == DiagrammaticStatus::Obstructed) {
      cj["witness"] = comp.witness.to_string();
      cj["bound_dim"] = comp.bound_dim;
      cj["required_dim"] = comp.required_dim;
    }
    comps.push_back(cj);
  }
  return Json{{"status", to_string(v.status)}, {"components", comps}};
}

// The verdict is the output; a well-formed run exits 0 whatever it is.
int cmd_diagrammatic(const std::string& fixture, const Common& c) {
  auto t0 = std::chrono::steady_clock::now();
  RMatrix a = matrix_fixture_from_json(load_fixture(fixture, "matrix"));
  if (!a.is_square()) throw FixtureError("matrix must be square");
  DiagrammaticVerdict v = cartan_diagrammatic_test(a);
  Json j = verdict_json(v);
  if (c.timing) j["seconds"] = seconds_since(t0);
  if (c.format == Format::kJson) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "verdict: " << to_string(v.status) << "\n";
  for (const auto& comp : v.components) {
    std::cout << "  component " << comp.vertices.to_string() << ": " << to_string(comp.status) << "\n";
    std::cout << "    " << comp.reason << "\n";
    if (comp.status == DiagrammaticStatus::Obstructed)
      std::cout << "    witness " << comp.witness.to_string() << ": bound " << comp.bound_dim << " < required "
                << comp.required_dim << "\n";
  }
  if (c.timing) std::cout << "time: " << j["seconds"].get<double>() << "s\n";
  return 0;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const std::string& suite, bool break_coefficient, const Common& c) {
  if (!is_suite(suite)) throw CLI::ValidationError("verify", "unknown suite '" + suite + "'");
  if (break_coefficient && suite != "associator" && suite != "all")
    throw CLI::ValidationError("--break-coefficient", "only applies to the associator suite");
  SuiteOptions opt{break_coefficient, default_threads()};
  std::vector<std::pair<std::string, Report>> reports;
  std::vector<double> secs;
  for (auto& r : run_suite(suite, opt)) {
    reports.emplace_back(r.suite, std::move(r.report));
    secs.push_back(r.seconds);
  }
  return emit(c, reports, secs);
}

// ---- export / check -------------------------------------------------------------

int cmd_export(const std::string& name, const std::string& out) {
  Json j = builtin_fixture(name);
  std::ofstream f(out);
  if (!f) throw FixtureError("cannot write " + out);
  f << j.dump(2) << "\n";
  return f ? 0 : 2;
}

int cmd_check(const std::string& file, const Common& c) {
  auto t0 = std::chrono::steady_clock::now();
  Json j = load_fixture(file);
  Report r = check_fixture(j);
  return emit(c, {{j.at("kind").get<std::string>() + " " + file, r}}, {seconds_since(t0)});
}

}  // namespace
}  // namespace coxkit::cli

int main(int argc, char** argv) {
  using namespace coxkit::cli;
  CLI::App app{"Exact verification of Coxeter-category data: nested sets, realizations, doubles, quantum Weyl operators"};
  app.require_subcommand(1);
  Common common;

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List nested sets (or chains) of a diagram fixture");
  en->add_option("fixture", ea.fixture, "Diagram fixture file or bundled name")->required();
  en->add_option("--base", ea.base, "Base vertex set, e.g. {0,1,2} or all")->capture_default_str();
  en->add_option("--lower", ea.lower, "Lower vertex set, contained in the base")->capture_default_str();
  en->add_flag("--maximal", ea.maximal, "Maximal nested sets (or maximal chains) only");
  en->add_flag("--chains", ea.chains, "List chains with their nested set and move-graph component");
  en->add_flag("--count-only", ea.count_only, "Print counts only");
  add_common(en, common);

  std::string matrix;
  auto* dg = app.add_subcommand("diagrammatic", "Cartan-diagrammatic verdict for a matrix fixture");
  dg->add_option("fixture", matrix, "Matrix fixture file or bundled name")->required();
  add_common(dg, common);

  std::string suite;
  bool broken = false;
  auto* vf = app.add_subcommand("verify", "Run a named verification suite");
  vf->add_option("suite", suite, "Suite name or all")->required();
  vf->add_flag("--break-coefficient", broken, "Associator with coefficient 1 in place of 1/24");
  add_common(vf, common);

  std::string export_name, export_out;
  auto* ex = app.add_subcommand("export", "Write a bundled fixture built by the library");
  ex->add_option("name", export_name, "Fixture name")->required()->check(CLI::IsMember(builtin_fixture_names()));
  ex->add_option("-o,--output", export_out, "Output file")->required();

  std::string check_file;
  auto* ck = app.add_subcommand("check", "Verify any fixture file according to its kind");
  ck->add_option("fixture", check_file, "Fixture file or bundled name")->required();
  add_common(ck, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*en) return cmd_enumerate(ea, common);
    if (*dg) return cmd_diagrammatic(matrix, common);
    if (*vf) return cmd_verify(suite, broken, common);
    if (*ex) return cmd_export(export_name, export_out);
    if (*ck) return cmd_check(check_file, common);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return 2;
  } catch (const coxkit::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
