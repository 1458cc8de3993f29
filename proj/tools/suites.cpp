#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "coxkit/chains.hpp"
#include "coxkit/coxeter.hpp"
#include "coxkit/diagrammatic.hpp"
#include "coxkit/dy_module.hpp"
#include "coxkit/hopf.hpp"
#include "coxkit/km_models.hpp"
#include "coxkit/lie_bialgebra.hpp"
#include "coxkit/nested_sets.hpp"
#include "coxkit/quantum.hpp"
#include "coxkit/realization.hpp"
#include "fixture_io.hpp"

namespace coxkit::cli {

namespace {

const RMatrix kA1 = integer_matrix({{2}});
const RMatrix kA2 = integer_matrix({{2, -1}, {-1, 2}});
const RMatrix kB2 = integer_matrix({{2, -2}, {-1, 2}});

std::string weight_name(const std::vector<long>& w) {
  std::string s = "V(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

struct NamedModule {
  std::string name;
  WeightModule module;
};

std::vector<NamedModule> quantum_family(const RMatrix& a, const std::vector<std::vector<long>>& weights) {
  std::vector<NamedModule> out;
  for (const auto& w : weights) {
    WeightModule v = build_rank2_module(a, w);
    out.push_back({weight_name(w) + " dim " + std::to_string(v.dim()), std::move(v)});
  }
  return out;
}

std::vector<NamedModule> sl2_family(long top) {
  std::vector<NamedModule> out;
  for (long m = 0; m <= top; ++m) out.push_back({"V(" + std::to_string(m) + ")", build_sl2_module(m)});
  return out;
}

const std::vector<std::vector<long>> kA2Weights{{1, 0}, {0, 1}, {2, 0}, {1, 1}};
const std::vector<std::vector<long>> kB2Weights{{1, 0}, {0, 1}};

CoxeterWitness witness_of(const std::vector<NamedModule>& family) {
  std::vector<WeightModule> mods;
  std::vector<std::string> names;
  for (const auto& m : family) {
    mods.push_back(m.module);
    names.push_back(m.name);
  }
  return quantum_witness(mods, names);
}

// Complete bracketings of letters lo..hi, generated as strings.
std::set<std::string> bracketings(int lo, int hi) {
  if (lo == hi) return {std::string(1, static_cast<char>('a' + lo))};
  std::set<std::string> out;
  for (int k = lo; k < hi; ++k)
    for (const auto& l : bracketings(lo, k))
      for (const auto& r : bracketings(k + 1, hi)) out.insert("(" + l + r + ")");
  return out;
}

std::vector<VertexSet> subsets_of(VertexSet s) {
  std::vector<VertexSet> out;
  for (std::uint64_t x = s.bits();; x = (x - 1) & s.bits()) {
    out.push_back(VertexSet(x));
    if (x == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// ---- criteria -------------------------------------------------------------

Report c1_mns_cardinality() {
  Report r;
  for (unsigned n = 1; n <= 6; ++n) {
    std::size_t graphs = 0, sets = 0;
    std::string bad;
    for (const Diagram& d : graphs_up_to_isomorphism(n, true)) {
      ++graphs;
      auto all = enumerate_nested_sets(d, d.all(), VertexSet(), true);
      sets += all.size();
      if (all.empty() && bad.empty()) bad = "no maximal nested set";
      for (const auto& h : all)
        if (h.members.size() != n + 1 && bad.empty()) bad = h.to_string() + " has " + std::to_string(h.members.size());
    }
    r.add("maximal nested sets have |D|+1 members, n = " + std::to_string(n), bad.empty(),
          bad.empty() ? std::to_string(graphs) + " connected diagrams, " + std::to_string(sets) + " sets" : bad);
  }
  return r;
}

Report c2_bracketings() {
  Report r;
  for (int n = 3; n <= 7; ++n) {
    Diagram d = path_diagram(static_cast<unsigned>(n - 1));
    std::size_t got = count_nested_sets(d, d.all(), VertexSet(), true);
    std::size_t want = bracketings(0, n - 1).size();
    r.add("bracketings of " + std::to_string(n) + " letters", got == want,
          std::to_string(got) + " nested sets, " + std::to_string(want) + " bracketings");
  }
  return r;
}

Report c3_chain_quotient() {
  Report r;
  for (unsigned n = 1; n <= 5; ++n) {
    std::size_t pairs = 0;
    std::string bad;
    for (const Diagram& d : graphs_up_to_isomorphism(n, false)) {
      for (VertexSet b : subsets_of(d.all()))
        for (VertexSet bp : subsets_of(b)) {
          ++pairs;
          if (!check_chain_bijection(d, b, bp).ok() && bad.empty()) bad = b.to_string() + " over " + bp.to_string();
        }
    }
    r.add("chains modulo moves biject onto nested sets, n = " + std::to_string(n), bad.empty(),
          bad.empty() ? std::to_string(pairs) + " pairs" : bad);
  }
  return r;
}

// Finite or affine GCMs of rank n with off-diagonal products at most 4.
// Both types pass to principal submatrices, so each list extends the
// previous one by a last vertex, checking the submatrices through it.
std::vector<RMatrix> finite_affine_gcms(unsigned n) {
  static const std::vector<std::pair<long, long>> kPairs{{0, 0},  {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3},
                                                         {-3, -1}, {-1, -4}, {-4, -1}, {-2, -2}};
  auto ok_type = [](const RMatrix& a) {
    CartanType t = cartan_type(a);
    return t == CartanType::Finite || t == CartanType::Affine;
  };
  if (n == 0) return {RMatrix(0, 0)};
  std::vector<RMatrix> out;
  const unsigned last = n - 1;
  for (const RMatrix& m : finite_affine_gcms(n - 1)) {
    std::vector<std::size_t> choice(last, 0);
    while (true) {
      RMatrix a(n, n);
      for (const auto& [k, v] : m.entries()) a.set(k.first, k.second, v);
      a.set(last, last, Rational(2));
      for (unsigned i = 0; i < last; ++i) {
        a.set(i, last, Rational(kPairs[choice[i]].first));
        a.set(last, i, Rational(kPairs[choice[i]].second));
      }
      bool keep = true;
      for (std::uint64_t sub = 0; sub + 1 < (std::uint64_t{1} << last) && keep; ++sub)
        if (std::popcount(sub) >= 2) keep = ok_type(principal_submatrix(a, VertexSet(sub) | VertexSet::single(last)));
      if (keep && ok_type(a)) out.push_back(a);
      std::size_t s = 0;
      while (s < choice.size() && ++choice[s] == kPairs.size()) choice[s++] = 0;
      if (s == choice.size()) break;
    }
  }
  return out;
}

Report c4_diagrammatic() {
  Report r;
  for (int k = 1; k <= 3; ++k) {
    const std::string name = "counterexample-" + std::to_string(k);
    Json j = load_fixture(name, "matrix");
    DiagrammaticVerdict v = cartan_diagrammatic_test(matrix_fixture_from_json(j));
    const Json& want = j.at("expected");
    VertexSet witness;
    for (const auto& x : want.at("witness")) witness = witness | VertexSet::single(x.get<unsigned>());
    bool ok = v.status == DiagrammaticStatus::Obstructed && v.components.size() == 1 &&
              v.components[0].witness == witness && v.components[0].bound_dim == want.at("bound").get<std::size_t>() &&
              v.components[0].required_dim == want.at("required").get<std::size_t>();
    r.add(name + " is obstructed", ok, v.components.empty() ? to_string(v.status) : v.components[0].reason);
  }
  for (unsigned n = 1; n <= 4; ++n) {
    std::size_t count = 0;
    std::string bad;
    for (const RMatrix& a : finite_affine_gcms(n)) {
      ++count;
      DiagrammaticVerdict v = cartan_diagrammatic_test(a);
      bool ok = v.status == DiagrammaticStatus::Diagrammatic;
      for (const auto& c : v.components) ok = ok && c.reason.rfind("det(A_B)", 0) == 0;
      if (!ok && bad.empty()) bad = a.to_string();
    }
    r.add("finite and affine GCMs of rank " + std::to_string(n) + " pass the sufficient condition", bad.empty(),
          bad.empty() ? std::to_string(count) + " matrices" : bad);
  }
  return r;
}

Report c5_torsor() {
  Report r;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = t % 2 ? 3 : 2;
    RMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.set(i, j, make_rational(num(rng), den(rng)));
    Realization v1 = random_realization(a, extra(rng), rng);
    Realization v2 = random_realization(a, extra(rng), rng);
    MorphismSpace ms = morphism_space(v1, v2);
    // dim(V1 / span of coroots) * dim(annihilator of the roots in V2)
    std::size_t want = (v1.dim() - rank(v1.coroots)) * (v2.dim() - rank(v2.roots));
    bool ok = ms.nonempty && ms.dimension() == want;
    r.add("random pair " + std::to_string(t + 1) + " (" + std::to_string(n) + "x" + std::to_string(n) + ")", ok,
          "dim " + std::to_string(ms.dimension()) + ", expected " + std::to_string(want));
  }
  return r;
}

Report c6_manin() {
  Report r;
  for (const auto& [name, a] : {std::pair{"sl2", kA1}, std::pair{"sl3", kA2}}) {
    KMModel model = build_km_model(a, true);
    r.merge(std::string(name) + " extended: ", manin_triple_check(manin_triple_of_model(model)));
  }
  return r;
}

struct DYFamily {
  std::string name;
  std::vector<std::string> names;
  std::vector<DYModule> modules;
};

std::vector<DYFamily> dy_families() {
  std::vector<DYFamily> out;
  {
    KMModel model = build_km_model(kA1, false);
    ManinTriple t = manin_triple_of_model(model);
    ChevalleyModule v1 = defining_module(kA1);
    ChevalleyModule v2 = highest_weight_submodule(tensor_module(v1, v1), {2});
    out.push_back({"sl2", {"V(1)", "V(2)", "trivial"},
                   {dy_module_of(model, t, v1), dy_module_of(model, t, v2), dy_module_of(model, t, trivial_module(kA1))}});
  }
  {
    KMModel model = build_km_model(kA2, false);
    ManinTriple t = manin_triple_of_model(model);
    ChevalleyModule v = defining_module(kA2);
    out.push_back({"sl3", {"V", "V*"}, {dy_module_of(model, t, v), dy_module_of(model, t, dual_module(v))}});
  }
  {
    LieBialgebra b = bialgebra_from_json(load_fixture("sl2-borel", "bialgebra"));
    out.push_back({"sl2 Borel double", {"adjoint"}, {dy_adjoint_of_double(b)}});
  }
  return out;
}

Report c7_dy_suite() {
  Report r;
  for (const auto& fam : dy_families()) {
    const std::size_t k = fam.modules.size();
    std::string bad;
    for (std::size_t a = 0; a < k && bad.empty(); ++a) {
      if (!verify_dy(fam.modules[a]).ok()) bad = fam.names[a];
      for (std::size_t b = 0; b < k && bad.empty(); ++b)
        if (!verify_dy(dy_tensor(fam.modules[a], fam.modules[b])).ok()) bad = fam.names[a] + " (x) " + fam.names[b];
    }
    r.add(fam.name + ": action-coaction compatibility", bad.empty(), bad);

    bad.clear();
    for (std::size_t a = 0; a < k && bad.empty(); ++a)
      for (std::size_t b = 0; b < k && bad.empty(); ++b)
        for (std::size_t c = 0; c < k && bad.empty(); ++c)
          if (!cybe_defect(fam.modules[a], fam.modules[b], fam.modules[c]).is_zero())
            bad = fam.names[a] + ", " + fam.names[b] + ", " + fam.names[c];
    r.add(fam.name + ": classical Yang-Baxter for r", bad.empty(), bad);

    bad.clear();
    for (std::size_t a = 0; a < k && bad.empty(); ++a)
      for (std::size_t b = 0; b < k && bad.empty(); ++b) {
        Report o = omega_morphism_check(fam.modules[a], fam.modules[b]);
        if (!o.ok()) bad = fam.names[a] + " (x) " + fam.names[b] + ": " + o.failures().front();
      }
    r.add(fam.name + ": Omega is a DY morphism", bad.empty(), bad);
  }
  return r;
}

Report c8_quantum_double() {
  Report r;
  for (const char* name : {"z2", "sweedler"}) {
    HopfAlgebra h = hopf_from_json(load_fixture(name, "hopf"));
    Report hopf = verify_hopf(h);
    r.add(std::string(name) + ": Hopf algebra", hopf.ok(), hopf.ok() ? "" : hopf.failures().front());
    if (!hopf.ok()) continue;
    QuantumDouble d = quantum_double(h);
    r.merge(std::string(name) + " double: ", quasitriangular_check(d));
    HopfDYModule reg = hopf_dy_regular(h);
    Report b = hopf_braiding_check(reg, reg, reg);
    const CheckResult* ybe = b.find("yang-baxter");
    r.add(std::string(name) + ": Yang-Baxter for beta on the regular module", ybe && ybe->pass,
          ybe ? ybe->detail : "missing");
  }
  return r;
}

Report c9_braid() {
  Report r;
  for (const auto& [label, a, weights] :
       {std::tuple{"A2", kA2, kA2Weights}, std::tuple{"B2", kB2, kB2Weights}}) {
    for (const auto& m : quantum_family(a, weights)) {
      QMatrix s0 = quantum_weyl_operator(m.module, 0), s1 = quantum_weyl_operator(m.module, 1);
      const unsigned len = coxeter_label(a, 0, 1).value();
      MatrixBraidRep<QScalar> rho(coxeter_labels_from_gcm(a), {s0, s1});
      auto check = rho.check_relation(0, 1, len);
      r.add(std::string(label) + " " + m.name + ": braid relation of length " + std::to_string(len), check.holds,
            check.holds ? "" : std::to_string(check.difference.nnz()) + " nonzero entries in the difference");
    }
  }
  return r;
}

Report c10_coproduct() {
  Report r;
  WeightModule v1 = build_sl2_module(1), v2 = build_sl2_module(2);
  const std::string orient = to_string(recorded_orientation());
  for (const auto& [name, v, w] : {std::tuple{"V(1) (x) V(1)", v1, v1}, std::tuple{"V(1) (x) V(2)", v1, v2},
                                    std::tuple{"V(2) (x) V(2)", v2, v2}})
    r.add(std::string(name) + ": " + orient, coproduct_identity_holds(v, w, 0));
  return r;
}

Report c11_classical_limit() {
  Report r;
  std::vector<NamedModule> mods = sl2_family(3);
  for (auto& m : quantum_family(kA2, kA2Weights)) mods.push_back({"A2 " + m.name, std::move(m.module)});
  for (const auto& m : mods) {
    bool ok = true;
    ChevalleyModule c = classical_limit(m.module);
    for (std::size_t i = 0; i < m.module.data.rank(); ++i)
      ok = ok && specialize_at_one(quantum_weyl_operator(m.module, i)) == tits_operator(c, i);
    r.add(m.name + ": S_i at q = 1 equals exp(e) exp(-f) exp(e)", ok, ok ? "sign matrix is the identity" : "");
  }
  return r;
}

Report c12_associator(const SuiteOptions& opt) {
  auto mods = dy_families().front().modules;
  std::vector<DYModule> four(4, mods[0]);
  std::vector<DYModule> mixed{mods[0], mods[1], mods[0], mods[2]};
  Report r;
  if (opt.break_coefficient) {
    r.merge("coefficient 1, V(1)^4: ", check_associator_axioms_truncated(four, 2, Rational(1)));
    return r;
  }
  r.merge("V(1)^4: ", check_associator_axioms_truncated(four, 2));
  r.merge("V(1), V(2), V(1), trivial: ", check_associator_axioms_truncated(mixed, 2));
  Report broken = check_associator_axioms_truncated(four, 2, Rational(1));
  bool control = broken.find("pentagon")->pass && broken.find("duality")->pass &&
                 broken.find("hexagon 1")->detail == "differs at hbar^2" &&
                 broken.find("hexagon 2")->detail == "differs at hbar^2";
  r.add("negative control: coefficient 1 fails both hexagons at hbar^2", control);
  return r;
}

std::vector<std::pair<std::string, CoxeterWitness>> balance_witnesses() {
  WeightModule v1 = build_sl2_module(1);
  std::vector<NamedModule> sl2{{"V(1)", v1}, {"V(2)", build_sl2_module(2)}, {"V(1) (x) V(1)", coproduct_action(v1, v1)}};
  return {{"sl2", witness_of(sl2)},
          {"A2", witness_of(quantum_family(kA2, {{1, 0}, {0, 1}, {1, 1}}))},
          {"B2", witness_of(quantum_family(kB2, kB2Weights))}};
}

Report c13_naturality() {
  Report r;
  for (const auto& [name, w] : balance_witnesses()) r.merge(name + ": ", half_balance_check(w));
  return r;
}

// ---- non-criterion suite content --------------------------------------------

Report classical_extras() {
  Report r;
  for (const auto& [name, a] : {std::pair{"A2", kA2}, std::pair{"B2", kB2}}) {
    ChevalleyModule v = defining_module(a);
    CoxeterWitness w = classical_witness({v, dual_module(v)}, {"V", "V*"});
    r.merge(std::string(name) + " Tits operators: ", verify_witness(w));
    bool group_like = true;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) group_like = group_like && verify_coproduct_axiom(w, i, x, y).ok();
    r.add(std::string(name) + " Tits operators: group-like on tensor products", group_like);
  }
  return r;
}

Report coxeter_extras() {
  Report r;
  r.merge("constant lax D-algebra on A3: ", verify_lax_d_algebra(constant_lax_d_algebra(path_diagram(3))));
  for (const auto& [name, a, weight] : {std::tuple{"A2", kA2, std::vector<long>{1, 0}},
                                        std::tuple{"B2", kB2, std::vector<long>{1, 0}}}) {
    WeightModule v = build_rank2_module(a, weight);
    CoxeterWitness w = quantum_witness({v});
    r.merge(std::string(name) + " braid algebras: ",
            verify_lax_d_algebra(lax_d_algebra_from_operators(path_diagram(2), v.dim(), w.s[0])));
  }
  {
    QMatrix x = QMatrix::identity(2), y = QMatrix::identity(2);
    x.set(0, 1, QScalar(1));
    y.set(1, 0, QScalar(1));
    Report bad = verify_lax_d_algebra(lax_d_algebra_from_operators(Diagram(2), 2, {x, y}));
    const CheckResult* c = bad.find("orthogonal product");
    r.add("negative control: non-commuting orthogonal images fail", c && !c->pass, c ? c->detail : "");
  }

  CoxeterWitness a2 = witness_of(quantum_family(kA2, {{1, 0}, {0, 1}}));
  r.merge("A2 witness: ", verify_witness(a2));
  for (std::size_t m = 0; m < a2.module_count(); ++m)
    r.merge("A2 " + a2.names[m] + " rho_F: ", braid_reps_from_witness(a2, VertexSet::range(2), m).report);

  for (const auto& [name, w] : balance_witnesses()) {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < w.diagram.size(); ++i)
      for (std::size_t a = 0; a < w.module_count(); ++a)
        for (std::size_t b = 0; b < w.module_count(); ++b) {
          Report c = verify_coproduct_axiom(w, i, a, b);
          if (!c.ok() && ok) {
            ok = false;
            detail = c.failures().front();
          }
        }
    r.add(name + ": coproduct axiom square on every pair", ok, detail);
  }
  CoxeterWitness sl2 = balance_witnesses().front().second;
  sl2.s[0][0] = sl2.s[0][0] * QScalar(2);
  r.add("negative control: rescaled S_i breaks the coproduct axiom", !verify_coproduct_axiom(sl2, 0, 0, 1).ok());
  return r;
}

Report quantum_view(const std::vector<NamedModule>& family) {
  Report r;
  std::vector<WeightModule> mods;
  for (const auto& m : family) {
    r.merge(m.name + ": ", weight_module_check(m.module));
    mods.push_back(m.module);
  }
  r.merge("", verify_coxeter_identities(mods));
  return r;
}

Report quantum_sl2_view() {
  Report r = quantum_view(sl2_family(3));
  WeightModule v1 = build_sl2_module(1), v2 = build_sl2_module(2);
  for (const auto& [name, v, w] : {std::tuple{"V(1) (x) V(1)", v1, v1}, std::tuple{"V(1) (x) V(2)", v1, v2},
                                    std::tuple{"V(2) (x) V(2)", v2, v2}})
    r.merge(std::string("R on ") + name + ": ", rank1_r_matrix_check(v, w, 0));
  std::string held;
  for (auto o : holding_orientations(v1, v1, 0)) held += (held.empty() ? "" : "; ") + to_string(o);
  auto h = holding_orientations(v1, v1, 0);
  r.add("recorded orientation holds on V(1) (x) V(1)",
        std::find(h.begin(), h.end(), recorded_orientation()) != h.end(), held);
  r.merge("naturality: ", half_balance_check(balance_witnesses()[0].second));
  return r;
}

Report quantum_a2_view() {
  Report r = quantum_view(quantum_family(kA2, kA2Weights));
  r.merge("naturality: ", half_balance_check(balance_witnesses()[1].second));
  return r;
}
Report quantum_b2_view() {
  Report r = quantum_view(quantum_family(kB2, kB2Weights));
  r.merge("naturality: ", half_balance_check(balance_witnesses()[2].second));
  return r;
}

std::string tag(int id) { return "[c" + std::to_string(id) + "] "; }

Report owned(const std::vector<int>& ids, const SuiteOptions& opt) {
  Report r;
  for (int id : ids) r.merge(tag(id), run_criterion(id, opt));
  return r;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("COXKIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kCriteria{
      {1, "maximal nested sets on connected diagrams with at most 6 vertices have |D|+1 members", "nested-sets", 10},
      {2, "maximal nested sets of A_{n-1} match complete bracketings, n = 3..7", "nested-sets", 30},
      {3, "chains modulo moves biject onto nested sets, diagrams with at most 5 vertices", "nested-sets", 60},
      {4, "Cartan-diagrammatic verdicts: counterexamples obstructed, finite and affine pass", "realizations", 5},
      {5, "realization morphism torsor dimension on 10 random pairs", "realizations", 5},
      {6, "Manin triple for the extended sl2 and sl3 models", "classical", 5},
      {7, "Drinfeld-Yetter compatibility, CYBE and Omega on classical fixtures", "classical", 30},
      {8, "quantum doubles of Z/2 and the Sweedler algebra, Yang-Baxter on regular modules", "hopf", 30},
      {9, "quantum braid relations on A2 (dim <= 8) and B2 (dim <= 5) modules", "quantum", 120},
      {10, "coproduct identity on sl2 V(1)(x)V(1), V(1)(x)V(2), V(2)(x)V(2)", "quantum", 30},
      {11, "classical limit of S_i on sl2 and A2 modules", "quantum", 10},
      {12, "associator axioms mod hbar^3 with a failing negative control", "associator", 60},
      {13, "S_i^2 commutes with generators and module maps, balance", "coxeter", 10},
  };
  return kCriteria;
}

Report run_criterion(int id, const SuiteOptions& opt) {
  switch (id) {
    case 1: return c1_mns_cardinality();
    case 2: return c2_bracketings();
    case 3: return c3_chain_quotient();
    case 4: return c4_diagrammatic();
    case 5: return c5_torsor();
    case 6: return c6_manin();
    case 7: return c7_dy_suite();
    case 8: return c8_quantum_double();
    case 9: return c9_braid();
    case 10: return c10_coproduct();
    case 11: return c11_classical_limit();
    case 12: return c12_associator(opt);
    case 13: return c13_naturality();
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames{"nested-sets", "realizations", "classical", "associator",
                                               "hopf",        "quantum",      "coxeter",   "quantum-sl2",
                                               "quantum-a2",  "quantum-b2"};
  return kNames;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<SuiteResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<std::string> names{name};
  if (name == "all") names = {"nested-sets", "realizations", "classical", "associator", "hopf", "quantum", "coxeter"};

  std::vector<SuiteResult> out(names.size());
  parallel_for(names.size(), opt.threads, [&](std::size_t k) {
    const std::string& s = names[k];
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    std::vector<int> ids;
    for (const auto& c : criteria())
      if (c.suite == s) ids.push_back(c.id);
    r = owned(ids, opt);
    if (s == "classical") r.merge("", classical_extras());
    if (s == "coxeter") r.merge("", coxeter_extras());
    if (s == "quantum-sl2") r = quantum_sl2_view();
    if (s == "quantum-a2") r = quantum_a2_view();
    if (s == "quantum-b2") r = quantum_b2_view();
    out[k] = {s, std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
  });
  return out;
}

std::vector<Diagram> graphs_up_to_isomorphism(unsigned n, bool connected_only) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::map<std::pair<unsigned, unsigned>, std::size_t> slot;
  for (std::size_t k = 0; k < pairs.size(); ++k) slot[pairs[k]] = k;

  std::vector<std::vector<std::size_t>> perm_maps;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    std::vector<std::size_t> m(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      unsigned a = p[pairs[k].first], b = p[pairs[k].second];
      m[k] = slot.at({std::min(a, b), std::max(a, b)});
    }
    perm_maps.push_back(std::move(m));
  } while (std::next_permutation(p.begin(), p.end()));

  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<bool> seen(total, false);
  std::vector<Diagram> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (seen[mask]) continue;
    for (const auto& m : perm_maps) {
      std::uint64_t img = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1u) img |= std::uint64_t{1} << m[k];
      seen[img] = true;
    }
    Diagram d(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1u) d.add_edge(pairs[k].first, pairs[k].second);
    if (!connected_only || d.connected(d.all())) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace coxkit::cli

namespace coxkit::cli {

namespace {

Json builtin_witness(const std::string& name) {
  if (name == "witness-a2-classical") {
    ChevalleyModule v = defining_module(kA2);
    return witness_to_json(classical_witness({v, dual_module(v)}, {"V", "V*"}));
  }
  for (const auto& [label, w] : balance_witnesses())
    if (name == "witness-" + std::string(label == "sl2" ? "sl2" : label == "A2" ? "a2" : "b2")) return witness_to_json(w);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

LieBialgebra sl2_borel() {
  LieAlgebra g(2);
  g.c(0, 1, 1) = 2;
  g.c(1, 0, 1) = -2;
  LieBialgebra b(g);
  b.d(1, 0, 1) = 1;
  b.d(1, 1, 0) = -1;
  return b;
}

Report check_diagram(const Json& j) {
  Report r;
  Diagram d = diagram_from_json(j).diagram();
  auto all = enumerate_nested_sets(d, d.all(), VertexSet(), true);
  bool ok = !all.empty();
  for (const auto& h : all) ok = ok && is_maximal_nested_set(d, h);
  r.add("maximal nested sets", ok, std::to_string(all.size()) + " found");
  auto b = check_chain_bijection(d, d.all(), VertexSet());
  r.add("chains modulo moves biject onto nested sets", b.ok(),
        std::to_string(b.components) + " components, " + std::to_string(b.nested_sets) + " nested sets");
  return r;
}

Report check_matrix(const Json& j) {
  Report r;
  RMatrix a = matrix_fixture_from_json(j);
  r.add("square", a.is_square());
  if (!a.is_square()) return r;
  DiagrammaticVerdict v = cartan_diagrammatic_test(a);
  if (!j.contains("expected")) {
    r.add("verdict " + to_string(v.status), true);
    return r;
  }
  const Json& want = j.at("expected");
  const std::string status = want.value("status", to_string(v.status));
  r.add("verdict is " + status, to_string(v.status) == status, to_string(v.status));
  if (want.contains("witness")) {
    VertexSet witness;
    for (const auto& x : want.at("witness")) witness = witness | VertexSet::single(x.get<unsigned>());
    const ComponentVerdict* c = nullptr;
    for (const auto& comp : v.components)
      if (comp.status == DiagrammaticStatus::Obstructed) c = &comp;
    r.add("obstruction witness", c && c->witness == witness && c->bound_dim == want.value("bound", c->bound_dim) &&
                                     c->required_dim == want.value("required", c->required_dim),
          c ? c->reason : "no obstructed component");
  }
  return r;
}

Report check_hopf(const Json& j) {
  Report r;
  HopfAlgebra h = hopf_from_json(j);
  r.merge("hopf: ", verify_hopf(h));
  if (!r.ok()) return r;
  r.merge("double: ", quasitriangular_check(quantum_double(h)));
  HopfDYModule reg = hopf_dy_regular(h);
  r.merge("regular module: ", hopf_braiding_check(reg, reg, reg));
  return r;
}

Report check_bialgebra(const Json& j) {
  Report r;
  LieBialgebra b = bialgebra_from_json(j);
  r.merge("bialgebra: ", verify_bialgebra(b));
  if (!r.ok()) return r;
  r.merge("double: ", manin_triple_check(manin_triple_of_double(drinfeld_double(b))));
  DYModule adj = dy_adjoint_of_double(b);
  r.merge("adjoint of the double: ", verify_dy(adj));
  r.add("adjoint of the double: classical Yang-Baxter", cybe_defect(adj, adj, adj).is_zero());
  return r;
}

Report check_witness(const Json& j) {
  Report r;
  CoxeterWitness w = witness_from_json(j);
  const bool quantum = w.kind == CoxeterWitness::Kind::kQuantum;
  const std::string want = quantum ? to_string(recorded_orientation()) : "flip";
  const std::string got = j.value("orientation", "");
  r.add("orientation", got == want, got == want ? got : "expected '" + want + "', found '" + got + "'");
  for (std::size_t m = 0; m < w.module_count(); ++m)
    r.merge(w.names[m] + ": ", quantum ? weight_module_check(w.quantum[m]) : chevalley_check(w.classical[m]));
  if (!r.ok()) return r;
  r.merge("", verify_witness(w));
  if (!r.ok()) return r;
  const std::size_t n = w.diagram.size();
  for (std::size_t m = 0; m < w.module_count(); ++m) {
    r.merge(w.names[m] + " rho_F: ", braid_reps_from_witness(w, VertexSet::range(n), m).report);
    r.merge(w.names[m] + " braid algebras: ",
            verify_lax_d_algebra(lax_d_algebra_from_operators(w.diagram.diagram(), w.module_dim(m), w.s[m])));
  }
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < w.module_count(); ++a)
      for (std::size_t b = 0; b < w.module_count(); ++b) {
        Report c = verify_coproduct_axiom(w, i, a, b);
        if (!c.ok() && ok) {
          ok = false;
          detail = "vertex " + std::to_string(i) + ", " + w.names[a] + " (x) " + w.names[b] + ": " + c.failures().front();
        }
      }
  r.add("coproduct axiom", ok, detail);
  r.merge("", half_balance_check(w));
  return r;
}

}  // namespace

const std::vector<std::string>& builtin_fixture_names() {
  static const std::vector<std::string> kNames{"witness-sl2", "witness-a2", "witness-b2", "witness-a2-classical",
                                               "z2",          "sweedler",   "sl2-borel"};
  return kNames;
}

Json builtin_fixture(const std::string& name) {
  if (name == "z2") return hopf_to_json(cyclic_group_algebra(2));
  if (name == "sweedler") return hopf_to_json(sweedler_algebra());
  if (name == "sl2-borel") return bialgebra_to_json(sl2_borel());
  return builtin_witness(name);
}

Report check_fixture(const Json& j) {
  const std::string kind = j.at("kind");
  if (kind == "diagram") return check_diagram(j);
  if (kind == "matrix") return check_matrix(j);
  if (kind == "hopf") return check_hopf(j);
  if (kind == "bialgebra") return check_bialgebra(j);
  if (kind == "witness") return check_witness(j);
  throw FixtureError("unknown fixture kind '" + kind + "'");
}

}  // namespace coxkit::cli
