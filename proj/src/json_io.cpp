#include "bourbakikit/json_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace bbk {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const json& need(const json& j, const char* key, const char* where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

int need_int(const json& j, const char* key, const char* where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) bad(where, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

json label_to_json(const Label& l) {
  if (l.is_wedge) return json(l.wedge);
  return json(l.name);
}

Label label_from_json(const json& j, const char* where) {
  if (j.is_string()) return Label::of_name(j.get<std::string>());
  if (j.is_array()) {
    std::vector<int> w;
    for (const auto& v : j) {
      if (!v.is_number_integer()) bad(where, "wedge label entries must be integers");
      w.push_back(v.get<int>());
    }
    return Label::of_wedge(std::move(w));
  }
  bad(where, "labels must be index arrays or name strings");
}

json vectors_to_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(v);
  return a;
}

}  // namespace

json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const Term& t : f.terms()) {
    json jt;
    jt["c"] = rational_to_string(t.c);
    jt["e"] = t.e;
    terms.push_back(std::move(jt));
  }
  json j;
  j["n"] = f.nvars();
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const json& j) {
  const char* where = "polynomial";
  const int n = need_int(j, "n", where);
  if (n < 0) bad(where, "'n' must be nonnegative");
  const json& terms = need(j, "terms", where);
  if (!terms.is_array()) bad(where, "'terms' must be an array");
  Polynomial f = Polynomial::zero(n);
  for (const json& jt : terms) {
    const json& c = need(jt, "c", where);
    if (!c.is_string()) bad(where, "'c' must be a \"num/den\" string");
    const json& e = need(jt, "e", where);
    if (!e.is_array() || static_cast<int>(e.size()) != n)
      bad(where, "'e' must be an exponent array of length n");
    ExponentVector ev(n);
    for (int k = 0; k < n; ++k) {
      if (!e[k].is_number_integer() || e[k].get<int>() < 0)
        bad(where, "exponents must be nonnegative integers");
      ev[k] = e[k].get<int>();
    }
    f.add_term(ev, rational_from_string(c.get<std::string>()));
  }
  return f;
}

json to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  json rl = json::array();
  for (const Label& l : m.row_labels) rl.push_back(label_to_json(l));
  json cl = json::array();
  for (const Label& l : m.col_labels) cl.push_back(label_to_json(l));
  json j;
  j["n"] = m.nvars();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(entries);
  j["row_labels"] = std::move(rl);
  j["col_labels"] = std::move(cl);
  return j;
}

PolyMatrix matrix_from_json(const json& j) {
  const char* where = "matrix";
  const int rows = need_int(j, "rows", where);
  const int cols = need_int(j, "cols", where);
  if (rows < 0 || cols < 0) bad(where, "'rows' and 'cols' must be nonnegative");
  const json& entries = need(j, "entries", where);
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    bad(where, "'entries' must have one array per row");

  int n = -1;
  if (j.contains("n")) n = need_int(j, "n", where);
  std::vector<std::vector<Polynomial>> parsed(rows);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad(where, "'entries' rows must have 'cols' polynomials");
    for (int c = 0; c < cols; ++c) {
      Polynomial f = polynomial_from_json(row[c]);
      if (n < 0) n = f.nvars();
      if (f.nvars() != n) bad(where, "entries disagree on the variable count");
      parsed[i].push_back(std::move(f));
    }
  }
  if (n < 0) n = 0;

  PolyMatrix m(n, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = std::move(parsed[i][c]);
  if (j.contains("row_labels") && !j["row_labels"].empty()) {
    const json& rl = j["row_labels"];
    if (!rl.is_array() || static_cast<int>(rl.size()) != rows)
      bad(where, "'row_labels' must be empty or one per row");
    for (const auto& l : rl) m.row_labels.push_back(label_from_json(l, where));
  }
  if (j.contains("col_labels") && !j["col_labels"].empty()) {
    const json& cl = j["col_labels"];
    if (!cl.is_array() || static_cast<int>(cl.size()) != cols)
      bad(where, "'col_labels' must be empty or one per column");
    for (const auto& l : cl) m.col_labels.push_back(label_from_json(l, where));
  }
  return m;
}

json to_json(const IdealGens& g) {
  json gens = json::array();
  for (const Polynomial& f : g.gens) gens.push_back(to_json(f));
  json j;
  j["n"] = g.n;
  j["gens"] = std::move(gens);
  j["twist"] = g.twist;
  j["generated_degree"] = g.generated_degree;
  return j;
}

IdealGens ideal_from_json(const json& j) {
  const char* where = "ideal";
  const int n = need_int(j, "n", where);
  const json& gens = need(j, "gens", where);
  if (!gens.is_array()) bad(where, "'gens' must be an array");
  std::vector<Polynomial> fs;
  for (const json& jf : gens) {
    Polynomial f = polynomial_from_json(jf);
    if (f.nvars() != n) bad(where, "generators disagree with 'n'");
    fs.push_back(std::move(f));
  }
  int twist = j.contains("twist") ? need_int(j, "twist", where) : 0;
  return make_ideal_gens(n, std::move(fs), twist);
}

std::string dump_canonical(const json& j) { return j.dump(2); }

std::string fingerprint(const PolyMatrix& m) {
  const std::string bytes = dump_canonical(to_json(m));
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xf]);
  return out;
}

json to_json(const BourbakiCertificate& c) {
  json j;
  j["matrix_fingerprint"] = fingerprint(c.matrix_used);
  j["minor_size"] = c.minor_size;
  j["gcd_witness"] = to_json(c.gcd_witness);
  j["verdict"] = c.verdict;
  j["note"] = c.note;
  return j;
}

json to_json(const ExtractionResult& r) {
  json j;
  j["ideal"] = to_json(r.ideal);
  j["divisor"] = to_json(r.divisor);
  j["c"] = to_json(r.c);
  return j;
}

json to_json(const KoszulMap& d) {
  json j;
  j["n"] = d.n;
  j["k"] = d.k;
  j["matrix"] = to_json(d.matrix);
  return j;
}

json to_json(const LabelCombo& c) {
  json terms = json::array();
  for (const auto& [coeff, wedge] : c.terms) {
    json t;
    t["coeff"] = rational_to_string(coeff);
    t["wedge"] = wedge;
    terms.push_back(std::move(t));
  }
  json j;
  j["terms"] = std::move(terms);
  return j;
}

json to_json(const CatalogBundle& b) {
  json j;
  j["n"] = b.n;
  j["i"] = b.i;
  json combos = json::array();
  for (const LabelCombo& c : b.f_generators) combos.push_back(to_json(c));
  j["f_generators"] = std::move(combos);
  j["map_matrix"] = to_json(b.map_matrix);
  j["presentation"] = to_json(b.presentation);
  j["c"] = to_json(b.c);
  j["certificate"] = to_json(b.certificate);
  j["ideal"] = to_json(b.ideal);
  j["divisor"] = to_json(b.divisor);
  j["has_expected"] = b.has_expected;
  if (b.has_expected) {
    j["expected_ideal"] = to_json(b.expected_ideal);
    j["matches_expected"] = b.matches_expected;
  }
  j["has_witness"] = b.has_witness;
  if (b.has_witness) {
    j["witness_submatrix"] = to_json(b.witness_submatrix);
    j["witness_value"] = to_json(b.witness_value);
    j["witness_expected"] = to_json(b.witness_expected);
    j["witness_matches"] = b.witness_matches;
    j["witness_avoids_last_variable"] = b.witness_avoids_last_variable;
  }
  return j;
}

json to_json(const MultigradedSearchReport& r) {
  json j;
  j["n"] = r.n;
  j["i"] = r.i;
  j["rank"] = r.rank;
  j["total"] = r.total;
  j["evaluated"] = r.evaluated;
  j["passing"] = r.passing;
  j["failing"] = r.failing;
  j["pruned"] = r.pruned;
  j["unexplored"] = r.unexplored;
  j["complete"] = r.complete;
  j["budget"] = r.budget;
  j["passing_subsets"] = r.passing_subsets;
  return j;
}

json to_json(const GenericSearchResult& r) {
  json j;
  j["found"] = r.found;
  j["attempts_used"] = r.attempts_used;
  j["lambda"] = r.lambda;
  j["map"] = to_json(r.map);
  j["certificate"] = to_json(r.certificate);
  j["log"] = r.log;
  return j;
}

json to_json(const HilbertBurchResult& r) {
  json j;
  j["m"] = r.m;
  j["resolution"] = r.resolution;
  return j;
}

json to_json(const SemigroupDecomposition& d) {
  json j;
  j["r"] = d.r;
  j["s"] = d.s;
  return j;
}

json to_json(const NormalityReport& r) {
  json j;
  j["n"] = r.n;
  j["t_max"] = r.t_max;
  j["box"] = r.box;
  j["lattice_points"] = r.lattice_points;
  j["cone_points"] = r.cone_points;
  j["decomposable"] = r.decomposable;
  j["counterexamples"] = vectors_to_json(r.counterexamples);
  j["passed"] = r.passed;
  return j;
}

json to_json(const CanonicalModuleResult& r) {
  json j;
  j["n"] = r.n;
  j["t_max"] = r.t_max;
  j["box"] = r.box;
  j["generators"] = vectors_to_json(r.generators);
  switch (r.classification) {
    case CanonicalClass::gorenstein:
      j["classification"] = "gorenstein";
      break;
    case CanonicalClass::type_two:
      j["classification"] = "type_two";
      break;
    case CanonicalClass::inconclusive:
      j["classification"] = "inconclusive";
      break;
  }
  return j;
}

json to_json(const ReductionReport& r) {
  json j;
  j["n"] = r.n;
  j["t_max"] = r.t_max;
  j["box"] = r.box;
  j["interior_points"] = r.interior_points;
  j["reduced_by_f1"] = r.reduced_by_f1;
  j["reduced_by_f2"] = r.reduced_by_f2;
  j["violations"] = vectors_to_json(r.violations);
  j["passed"] = r.passed;
  return j;
}

}  // namespace bbk
