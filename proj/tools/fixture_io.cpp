#include "fixture_io.hpp"

#include <cstdlib>
#include <fstream>

#include "coxkit/braid.hpp"

#ifndef COXKIT_DEFAULT_FIXTURE_DIR
#define COXKIT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace coxkit::cli {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw FixtureError(what);
}

std::size_t index_from_json(const Json& j, const std::string& what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), what + ": expected an index");
  return j.get<std::size_t>();
}

Json terms_to_json(const std::vector<std::pair<Rational, Rational>>& terms) {
  Json out = Json::object();
  for (const auto& [e, c] : terms) out[to_string(e)] = to_string(c);
  return out;
}

std::vector<std::pair<Rational, Rational>> terms_from_json(const Json& j) {
  require(j.is_object(), "q-scalar: expected an object of exponent -> coefficient");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [k, v] : j.items()) {
    try {
      out.emplace_back(parse_rational(k), rational_from_json(v));
    } catch (const Error& e) {
      throw FixtureError(std::string("q-scalar exponent: ") + e.what());
    }
  }
  return out;
}

RMatrix named_matrix(const Json& j, const char* key) {
  require(j.contains(key), std::string("missing field '") + key + "'");
  return matrix_from_json(j.at(key));
}

std::vector<QMatrix> qmatrix_list(const Json& j, const char* key) {
  require(j.contains(key) && j.at(key).is_array(), std::string("missing array '") + key + "'");
  std::vector<QMatrix> out;
  for (const auto& m : j.at(key)) out.push_back(qmatrix_from_json(m));
  return out;
}

std::vector<RMatrix> matrix_list(const Json& j, const char* key) {
  require(j.contains(key) && j.at(key).is_array(), std::string("missing array '") + key + "'");
  std::vector<RMatrix> out;
  for (const auto& m : j.at(key)) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational: expected a string such as \"-1/3\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw FixtureError(std::string("rational: ") + e.what());
  }
}

Json qscalar_to_json(const QScalar& x) {
  if (x.is_laurent()) return terms_to_json(x.numerator_terms());
  return Json{{"num", terms_to_json(x.numerator_terms())}, {"den", terms_to_json(x.denominator_terms())}};
}

QScalar qscalar_from_json(const Json& j) {
  require(j.is_object(), "q-scalar: expected an object");
  if (j.contains("num") || j.contains("den")) {
    require(j.contains("num") && j.contains("den") && j.size() == 2, "q-scalar: ratio needs exactly num and den");
    auto den = terms_from_json(j.at("den"));
    require(!den.empty(), "q-scalar: zero denominator");
    return QScalar::from_ratio(terms_from_json(j.at("num")), den);
  }
  return QScalar::from_terms(terms_from_json(j));
}

Json matrix_to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_dense()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_json(x));
    rows.push_back(r);
  }
  return rows;
}

RMatrix matrix_from_json(const Json& j) {
  require(j.is_array(), "matrix: expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    require(row.is_array(), "matrix: each row must be an array");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    require(rows.empty() || r.size() == rows[0].size(), "matrix: ragged rows");
    rows.push_back(std::move(r));
  }
  return RMatrix::from_dense(rows);
}

Json qmatrix_to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_dense()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(qscalar_to_json(x));
    rows.push_back(r);
  }
  return rows;
}

QMatrix qmatrix_from_json(const Json& j) {
  require(j.is_array(), "q-matrix: expected an array of rows");
  std::vector<std::vector<QScalar>> rows;
  for (const auto& row : j) {
    require(row.is_array(), "q-matrix: each row must be an array");
    std::vector<QScalar> r;
    for (const auto& x : row) r.push_back(qscalar_from_json(x));
    require(rows.empty() || r.size() == rows[0].size(), "q-matrix: ragged rows");
    rows.push_back(std::move(r));
  }
  return QMatrix::from_dense(rows);
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("COXKIT_FIXTURE_DIR")) return env;
  return COXKIT_DEFAULT_FIXTURE_DIR;
}

Json load_fixture(const std::string& path_or_name, const std::string& kind) {
  std::filesystem::path p(path_or_name);
  if (!std::filesystem::exists(p) && p.extension().empty() && p.parent_path().empty())
    p = fixture_dir() / (path_or_name + ".json");
  std::ifstream in(p);
  require(in.good(), "cannot read fixture '" + path_or_name + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FixtureError(p.string() + ": " + e.what());
  }
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(), p.string() + ": missing 'kind'");
  if (!kind.empty())
    require(j.at("kind") == kind, p.string() + ": expected kind '" + kind + "', found '" +
                                      j.at("kind").get<std::string>() + "'");
  return j;
}

LabelledDiagram diagram_from_json(const Json& j) {
  require(j.contains("vertices"), "diagram: missing 'vertices'");
  std::size_t n = index_from_json(j.at("vertices"), "diagram vertices");
  require(n <= 64, "diagram: at most 64 vertices");
  Diagram d(static_cast<unsigned>(n));
  if (j.contains("edges")) {
    require(j.at("edges").is_array(), "diagram: 'edges' must be an array");
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, "diagram: each edge is a pair");
      std::size_t a = index_from_json(e[0], "edge"), b = index_from_json(e[1], "edge");
      require(a < n && b < n && a != b, "diagram: edge endpoints out of range");
      d.add_edge(static_cast<unsigned>(a), static_cast<unsigned>(b));
    }
  }
  LabelledDiagram out(d);
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      require(l.is_array() && l.size() == 3, "diagram: each label is [i, j, m]");
      std::size_t a = index_from_json(l[0], "label"), b = index_from_json(l[1], "label");
      require(a < n && b < n && d.adjacent(static_cast<unsigned>(a), static_cast<unsigned>(b)),
              "diagram: labels only on edges");
      CoxeterLabel m = l[2].is_string() && l[2] == "inf"
                           ? CoxeterLabel::infinity()
                           : CoxeterLabel::finite(static_cast<unsigned>(index_from_json(l[2], "label")));
      out.set_label(static_cast<unsigned>(a), static_cast<unsigned>(b), m);
    }
  }
  return out;
}

RMatrix matrix_fixture_from_json(const Json& j) {
  RMatrix a = named_matrix(j, "rows");
  require(a.is_square(), "matrix fixture must be square");
  return a;
}

HopfAlgebra hopf_from_json(const Json& j) {
  HopfAlgebra h;
  require(j.contains("dim"), "hopf: missing 'dim'");
  h.dim = index_from_json(j.at("dim"), "hopf dim");
  h.mult = named_matrix(j, "mult");
  h.unit = named_matrix(j, "unit");
  h.comult = named_matrix(j, "comult");
  h.counit = named_matrix(j, "counit");
  h.antipode = named_matrix(j, "antipode");
  h.antipode_inv = named_matrix(j, "antipode_inv");
  const std::size_t d = h.dim;
  require(h.mult.rows() == d && h.mult.cols() == d * d && h.unit.rows() == d && h.unit.cols() == 1 &&
              h.comult.rows() == d * d && h.comult.cols() == d && h.counit.rows() == 1 && h.counit.cols() == d &&
              h.antipode.rows() == d && h.antipode.cols() == d && h.antipode_inv.rows() == d &&
              h.antipode_inv.cols() == d,
          "hopf: structure tensors have the wrong shapes");
  return h;
}

Json hopf_to_json(const HopfAlgebra& h) {
  return Json{{"kind", "hopf"},
              {"dim", h.dim},
              {"mult", matrix_to_json(h.mult)},
              {"unit", matrix_to_json(h.unit)},
              {"comult", matrix_to_json(h.comult)},
              {"counit", matrix_to_json(h.counit)},
              {"antipode", matrix_to_json(h.antipode)},
              {"antipode_inv", matrix_to_json(h.antipode_inv)}};
}

LieBialgebra bialgebra_from_json(const Json& j) {
  require(j.contains("dim"), "bialgebra: missing 'dim'");
  const std::size_t n = index_from_json(j.at("dim"), "bialgebra dim");
  LieBialgebra b{LieAlgebra(n)};
  auto read = [&](const char* key, auto&& slot) {
    if (!j.contains(key)) return;
    require(j.at(key).is_array(), std::string("bialgebra: '") + key + "' must be an array");
    for (const auto& t : j.at(key)) {
      require(t.is_array() && t.size() == 4, "bialgebra: entries are [i, j, k, \"c\"]");
      std::size_t a = index_from_json(t[0], key), c = index_from_json(t[1], key), e = index_from_json(t[2], key);
      require(a < n && c < n && e < n, "bialgebra: index out of range");
      slot(a, c, e) = rational_from_json(t[3]);
    }
  };
  read("bracket", [&](std::size_t a, std::size_t c, std::size_t e) -> Rational& { return b.lie().c(a, c, e); });
  read("cobracket", [&](std::size_t a, std::size_t c, std::size_t e) -> Rational& { return b.d(a, c, e); });
  return b;
}

Json bialgebra_to_json(const LieBialgebra& b) {
  Json bracket = Json::array(), cobracket = Json::array();
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (b.lie().c(i, j, k) != 0) bracket.push_back({i, j, k, rational_to_json(b.lie().c(i, j, k))});
        if (b.d(i, j, k) != 0) cobracket.push_back({i, j, k, rational_to_json(b.d(i, j, k))});
      }
  return Json{{"kind", "bialgebra"}, {"dim", n}, {"bracket", bracket}, {"cobracket", cobracket}};
}

CoxeterWitness witness_from_json(const Json& j) {
  require(j.contains("flavor") && j.at("flavor").is_string(), "witness: missing 'flavor'");
  const std::string flavor = j.at("flavor");
  require(flavor == "quantum" || flavor == "classical", "witness: flavor is quantum or classical");
  RMatrix cartan = named_matrix(j, "cartan");
  require(j.contains("modules") && j.at("modules").is_array() && !j.at("modules").empty(),
          "witness: needs a nonempty 'modules' array");
  require(j.contains("operators") && j.at("operators").is_array() &&
              j.at("operators").size() == j.at("modules").size(),
          "witness: one operator list per module");

  CoxeterWitness w;
  try {
    w.diagram = coxeter_labels_from_gcm(cartan);
    if (flavor == "quantum") {
      w.kind = CoxeterWitness::Kind::kQuantum;
      QuantumGroupData data = quantum_group_data(cartan);
      for (const auto& m : j.at("modules")) {
        WeightModule v;
        v.data = data;
        require(m.contains("weights") && m.at("weights").is_array(), "witness module: missing 'weights'");
        for (const auto& wt : m.at("weights")) {
          require(wt.is_array() && wt.size() == data.rank(), "witness module: weight length");
          v.weights.push_back(wt.get<std::vector<long>>());
        }
        v.e = qmatrix_list(m, "e");
        v.f = qmatrix_list(m, "f");
        require(v.e.size() == data.rank() && v.f.size() == data.rank(), "witness module: one E and F per vertex");
        for (const auto& x : v.e) require(x.rows() == v.dim() && x.cols() == v.dim(), "witness module: E shape");
        for (const auto& x : v.f) require(x.rows() == v.dim() && x.cols() == v.dim(), "witness module: F shape");
        w.quantum.push_back(std::move(v));
        w.names.push_back(m.value("name", "V" + std::to_string(w.names.size())));
      }
    } else {
      w.kind = CoxeterWitness::Kind::kClassical;
      for (const auto& m : j.at("modules")) {
        ChevalleyModule v;
        v.cartan = cartan;
        v.e = matrix_list(m, "e");
        v.f = matrix_list(m, "f");
        v.h = matrix_list(m, "h");
        require(v.e.size() == cartan.rows() && v.f.size() == cartan.rows() && v.h.size() == cartan.rows(),
                "witness module: one e, f, h per vertex");
        w.classical.push_back(std::move(v));
        w.names.push_back(m.value("name", "V" + std::to_string(w.names.size())));
      }
    }
  } catch (const Error& e) {
    throw FixtureError(std::string("witness: ") + e.what());
  }
  for (const auto& ops : j.at("operators")) w.s.push_back(qmatrix_list(Json{{"s", ops}}, "s"));
  return w;
}

Json witness_to_json(const CoxeterWitness& w) {
  const bool quantum = w.kind == CoxeterWitness::Kind::kQuantum;
  Json j{{"kind", "witness"}, {"flavor", quantum ? "quantum" : "classical"}};
  j["cartan"] = matrix_to_json(quantum ? w.quantum.at(0).data.cartan : w.classical.at(0).cartan);
  j["orientation"] = quantum ? to_string(recorded_orientation()) : "flip";
  Json modules = Json::array(), ops = Json::array();
  for (std::size_t m = 0; m < w.module_count(); ++m) {
    Json mod{{"name", w.names[m]}};
    if (quantum) {
      mod["weights"] = w.quantum[m].weights;
      Json e = Json::array(), f = Json::array();
      for (const auto& x : w.quantum[m].e) e.push_back(qmatrix_to_json(x));
      for (const auto& x : w.quantum[m].f) f.push_back(qmatrix_to_json(x));
      mod["e"] = e;
      mod["f"] = f;
    } else {
      for (const char* key : {"e", "f", "h"}) {
        const auto& list = key[0] == 'e' ? w.classical[m].e : key[0] == 'f' ? w.classical[m].f : w.classical[m].h;
        Json arr = Json::array();
        for (const auto& x : list) arr.push_back(matrix_to_json(x));
        mod[key] = arr;
      }
    }
    modules.push_back(mod);
    Json s = Json::array();
    for (const auto& x : w.s[m]) s.push_back(qmatrix_to_json(x));
    ops.push_back(s);
  }
  j["modules"] = modules;
  j["operators"] = ops;
  return j;
}

}  // namespace coxkit::cli
