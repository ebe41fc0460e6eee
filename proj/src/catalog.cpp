#include "bourbakikit/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "bourbakikit/poly_gcd.hpp"

namespace bbk {

namespace {

LabelCombo hat_combo(const std::vector<int>& s, int n) {
  auto [comp, sign] = hat_index(s, n);
  LabelCombo c;
  c.terms.push_back({Rational(sign), std::move(comp)});
  return c;
}

bool same_generators(const IdealGens& a, const IdealGens& b) {
  if (a.n != b.n || a.gens.size() != b.gens.size()) return false;
  for (std::size_t k = 0; k < a.gens.size(); ++k)
    if (!(a.gens[k] == b.gens[k])) return false;
  return true;
}

// Presentation of K_{k-1} modulo the span of the pairwise differences of the
// merged wedges: one row for the merged class, labelled by its
// lexicographically least member, then the remaining (k-1)-subsets in
// ascending lexicographic order. Columns are the requested k-subsets.
PolyMatrix quotient_presentation(const KoszulMap& d,
                                 const std::vector<std::vector<int>>& merged,
                                 const std::vector<std::vector<int>>& columns) {
  if (merged.empty()) throw std::invalid_argument("nothing to merge");
  const int n = d.n;
  std::vector<std::vector<int>> rest = wedge_basis(n, d.k - 1);
  std::sort(rest.begin(), rest.end());
  for (const auto& w : merged)
    rest.erase(std::remove(rest.begin(), rest.end(), w), rest.end());
  const std::vector<int> rep = *std::min_element(merged.begin(), merged.end());

  PolyMatrix q(n, 1 + static_cast<int>(rest.size()), static_cast<int>(columns.size()));
  q.row_labels.push_back(Label::of_wedge(rep));
  for (const auto& w : rest) q.row_labels.push_back(Label::of_wedge(w));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const int cp = wedge_position(columns[j], n);
    q.col_labels.push_back(Label::of_wedge(columns[j]));
    Polynomial cls = Polynomial::zero(n);
    for (const auto& w : merged) cls += d.matrix.at(wedge_position(w, n), cp);
    q.at(0, static_cast<int>(j)) = std::move(cls);
    for (std::size_t i = 0; i < rest.size(); ++i)
      q.at(1 + static_cast<int>(i), static_cast<int>(j)) =
          d.matrix.at(wedge_position(rest[i], n), cp);
  }
  return q;
}

BourbakiCertificate rank_one_certificate(PolyMatrix map) {
  BourbakiCertificate cert;
  cert.minor_size = 0;
  cert.gcd_witness = Polynomial::constant(map.nvars(), 1);
  cert.verdict = true;
  cert.note = "rank one, empty coefficient matrix";
  cert.matrix_used = std::move(map);
  return cert;
}

void finish_extraction(CatalogBundle& b, const PolyMatrix& fed, int twist) {
  ExtractionResult ex = extract_bourbaki_ideal(fed);
  b.c = std::move(ex.c);
  b.divisor = std::move(ex.divisor);
  b.ideal = std::move(ex.ideal);
  b.ideal.twist = twist;
}

}  // namespace

CatalogBundle z_top(int n, int i, int j) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("indices must satisfy 1 <= i < j <= n");

  CatalogBundle b;
  b.n = n;
  b.i = n - 1;
  KoszulMap d = differential(n, n - 1);
  std::vector<Label> labels;
  for (int k = 1; k <= n; ++k) {
    if (k == i || k == j) continue;
    b.f_generators.push_back(hat_combo({k}, n));
    labels.push_back(Label::of_wedge(b.f_generators.back().terms[0].second));
  }
  b.map_matrix = restrict_map(d, b.f_generators, labels);
  b.certificate = check_bourbaki_map(b.map_matrix, n - 2);

  // The two surviving hat duals satisfy the single relation x_i e^_i + x_j e^_j.
  PolyMatrix p(n, 2, 1);
  p.at(0, 0) = Polynomial::variable(n, i);
  p.at(1, 0) = Polynomial::variable(n, j);
  p.row_labels = {Label::of_wedge({i}), Label::of_wedge({j})};
  p.col_labels = {Label::of_name("r1")};
  b.presentation = p;

  const int twist = static_cast<int>(koszul_bourbaki_number(n, n - 1));
  finish_extraction(b, p, twist);
  b.has_expected = true;
  b.expected_ideal = make_ideal_gens(
      n, {Polynomial::variable(n, i), Polynomial::variable(n, j)}, twist);
  b.matches_expected = same_generators(b.ideal, b.expected_ideal);
  return b;
}

CatalogBundle z_nminus2(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");

  std::vector<std::vector<int>> apairs;
  for (int k = 1; k < n; ++k) apairs.push_back({k, k + 1});
  apairs.push_back({1, n});
  auto adjacent = [n](int a, int c) { return c - a == 1 || (a == 1 && c == n); };

  CatalogBundle b;
  b.n = n;
  b.i = n - 2;
  KoszulMap d = differential(n, n - 2);
  std::vector<Label> labels;
  for (int a = 1; a <= n; ++a)
    for (int c = a + 1; c <= n; ++c) {
      if (adjacent(a, c)) continue;
      b.f_generators.push_back(hat_combo({a, c}, n));
      labels.push_back(Label::of_wedge(b.f_generators.back().terms[0].second));
    }
  b.map_matrix = restrict_map(d, b.f_generators, labels);

  const int s = static_cast<int>(cycle_rank(n, n - 2)) - 1;
  b.certificate =
      s == 0 ? rank_one_certificate(b.map_matrix) : check_bourbaki_map(b.map_matrix, s);

  // Full differential in hat coordinates: entry (p, k) is the coefficient of
  // the hat dual of p in the image of the hat dual of k. Rows follow the
  // cyclically adjacent pairs, ending with (1, n).
  KoszulMap dtop = differential(n, n - 1);
  PolyMatrix h(n, n, n);
  for (int row = 0; row < n; ++row) {
    auto [rcomp, rsign] = hat_index(apairs[row], n);
    const int rpos = wedge_position(rcomp, n);
    h.row_labels.push_back(Label::of_wedge(apairs[row]));
    for (int k = 1; k <= n; ++k) {
      auto [ccomp, csign] = hat_index({k}, n);
      h.at(row, k - 1) = Rational(rsign * csign) * dtop.matrix.at(rpos, wedge_position(ccomp, n));
    }
  }
  for (int k = 1; k <= n; ++k) h.col_labels.push_back(Label::of_wedge({k}));
  b.presentation = h;

  const int twist = static_cast<int>(koszul_bourbaki_number(n, n - 2));
  finish_extraction(b, h, twist);
  std::vector<Polynomial> circ;
  for (const auto& p : apairs) {
    ExponentVector e(n, 1);
    e[p[0] - 1] = 0;
    e[p[1] - 1] = 0;
    circ.push_back(Polynomial::monomial(n, e, 1));
  }
  b.has_expected = true;
  b.expected_ideal = make_ideal_gens(n, std::move(circ), twist);
  b.matches_expected = same_generators(b.ideal, b.expected_ideal);

  // Square block of the restricted map on the hat duals of the triples
  // {1, t, t+1} and then {1, a, c} with (a, c) skew: its determinant is
  // x_1^C(n-2,2) x_2 ... x_{n-2}, clear of the last variable.
  std::vector<int> wrows;
  for (int t = 2; t <= n - 2; ++t)
    wrows.push_back(wedge_position(hat_index({1, t, t + 1}, n).first, n));
  for (int a = 2; a <= n; ++a)
    for (int c = a + 2; c <= n; ++c)
      wrows.push_back(wedge_position(hat_index({1, a, c}, n).first, n));
  std::vector<int> all_cols(b.map_matrix.cols());
  std::iota(all_cols.begin(), all_cols.end(), 0);
  b.has_witness = true;
  b.witness_submatrix = b.map_matrix.submatrix(wrows, all_cols);
  b.witness_value = normalize_primitive(det(b.witness_submatrix));
  ExponentVector we(n, 0);
  we[0] = static_cast<int>(binomial(n - 2, 2));
  for (int k = 2; k <= n - 2; ++k) we[k - 1] = 1;
  b.witness_expected = Polynomial::monomial(n, we, 1);
  b.witness_matches = b.witness_value == b.witness_expected;
  b.witness_avoids_last_variable =
      !b.witness_value.is_zero() && b.witness_value.leading_term().e[n - 1] == 0;
  return b;
}

CatalogBundle z2(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");

  CatalogBundle b;
  b.n = n;
  b.i = 2;
  std::vector<Label> labels;
  for (int t = 1; t <= n - 2; ++t) {
    LabelCombo c;
    c.terms.push_back({Rational(1), {t, t + 1}});
    c.terms.push_back({Rational(-1), {t + 1, t + 2}});
    b.f_generators.push_back(std::move(c));
    labels.push_back(Label::of_name("f" + std::to_string(t)));
  }
  b.map_matrix = restrict_map(differential(n, 2), b.f_generators, labels);
  b.certificate = check_bourbaki_map(b.map_matrix, n - 2);

  // Merging the adjacent pairs identifies all e_{k,k+1} with one class.
  std::vector<std::vector<int>> merged;
  for (int k = 1; k < n; ++k) merged.push_back({k, k + 1});
  KoszulMap d3 = differential(n, 3);
  b.presentation = quotient_presentation(d3, merged, wedge_basis(n, 3));

  std::vector<std::vector<int>> ccols;
  for (int j = 1; j <= n - 2; ++j)
    for (int q = j + 2; q <= n; ++q) ccols.push_back({j, j + 1, q});
  PolyMatrix cfull = quotient_presentation(d3, merged, ccols);

  const int twist = static_cast<int>(koszul_bourbaki_number(n, 2));
  finish_extraction(b, cfull, twist);
  if (n == 3) {
    b.has_expected = true;
    b.expected_ideal = make_ideal_gens(
        n,
        {Polynomial::variable(3, 2),
         Polynomial::variable(3, 1) + Polynomial::variable(3, 3)},
        twist);
  } else if (n == 5) {
    const char* text[] = {
        "x2*x3*x4",
        "x1*x3*x4 + x3^2*x4",
        "x1*x2*x4 + x1*x4^2 + x3*x4^2",
        "x1*x2*x3 + x1*x2*x5 + x1*x4*x5 + x3*x4*x5",
        "x2^2*x4 + x2*x4^2",
        "x2^2*x3 + x2^2*x5 + x2*x4*x5",
        "x2*x3^2 + x2*x3*x5",
    };
    std::vector<Polynomial> gens;
    for (const char* g : text) gens.push_back(parse_polynomial(g, 5));
    b.has_expected = true;
    b.expected_ideal = make_ideal_gens(5, std::move(gens), twist);
  }
  if (b.has_expected) b.matches_expected = same_generators(b.ideal, b.expected_ideal);
  return b;
}

bool z2_degree_check(int n) {
  CatalogBundle b = z2(n);
  return !b.ideal.gens.empty() && b.ideal.generated_degree == n - 2;
}

bool multigraded_obstruction(int n, int i) {
  if (n < 3 || i < 2 || i > n - 1)
    throw std::invalid_argument("need n >= 3 and 2 <= i <= n-1");
  const long long t1 = i * binomial(n - 1, i - 1) - n * binomial(n - 1, i - 2);
  const long long t2 = (n - i) * binomial(n - 1, i) - n * binomial(n - 1, i + 1);
  return i >= std::max(t1, t2);
}

CatalogBundle n6_z3_explicit() {
  const int n = 6;
  const std::vector<std::vector<int>> path = {{1, 2, 4}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5},
                                              {1, 5, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5},
                                              {3, 4, 6}, {4, 5, 6}};
  CatalogBundle b;
  b.n = n;
  b.i = 3;
  std::vector<Label> labels;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) {
    LabelCombo c;
    c.terms.push_back({Rational(1), path[t]});
    c.terms.push_back({Rational(-1), path[t + 1]});
    b.f_generators.push_back(std::move(c));
    labels.push_back(Label::of_name("f" + std::to_string(t + 1)));
  }
  b.map_matrix = restrict_map(differential(n, 3), b.f_generators, labels);
  b.certificate = check_bourbaki_map(b.map_matrix, 9);

  std::vector<std::vector<int>> cols4 = wedge_basis(n, 4);
  std::sort(cols4.begin(), cols4.end());
  b.presentation = quotient_presentation(differential(n, 4), path, cols4);

  // The ten lex-first columns are exactly the 4-subsets containing 1.
  std::vector<int> keep_rows(b.presentation.rows());
  std::iota(keep_rows.begin(), keep_rows.end(), 0);
  std::vector<int> keep_cols(10);
  std::iota(keep_cols.begin(), keep_cols.end(), 0);
  PolyMatrix cmat = b.presentation.submatrix(keep_rows, keep_cols);

  finish_extraction(b, cmat, static_cast<int>(koszul_bourbaki_number(6, 3)));
  return b;
}

BourbakiCertificate n6_z3_bad_configuration() {
  const std::vector<std::vector<int>> chosen = {{1, 2, 6}, {2, 3, 6}, {3, 4, 6},
                                                {4, 5, 6}, {1, 5, 6}, {1, 2, 4},
                                                {2, 3, 5}, {1, 3, 4}, {2, 4, 5}};
  std::vector<LabelCombo> combos;
  std::vector<Label> labels;
  for (const auto& w : chosen) {
    LabelCombo c;
    c.terms.push_back({Rational(1), w});
    combos.push_back(std::move(c));
    labels.push_back(Label::of_wedge(w));
  }
  PolyMatrix m = restrict_map(differential(6, 3), combos, labels);
  return check_bourbaki_map(m, 9);
}

namespace {

struct SubsetSearch {
  const PolyMatrix& mat;
  const std::vector<std::vector<int>>& basis;
  const std::vector<std::vector<int>>& super_of;
  const std::vector<int>& all_rows;
  int m;
  int t;
  int block_at;  // face count that forces a shared variable into every minor
  std::uint64_t budget;
  MultigradedSearchReport& rep;
  std::vector<int> cnt;
  std::vector<int> chosen;
  bool aborted = false;

  void run(int pos) {
    if (aborted) return;
    if (static_cast<int>(chosen.size()) == t) {
      if (rep.evaluated >= static_cast<long long>(budget)) {
        aborted = true;
        return;
      }
      ++rep.evaluated;
      Polynomial g = minors_gcd(mat.submatrix(all_rows, chosen), t);
      if (g.is_one()) {
        ++rep.passing;
        std::vector<std::vector<int>> subset;
        for (int p : chosen) subset.push_back(basis[p]);
        rep.passing_subsets.push_back(std::move(subset));
      } else {
        ++rep.failing;
      }
      return;
    }
    const int slots = t - static_cast<int>(chosen.size());
    if (m - pos < slots) return;

    bool blocked = false;
    for (int s : super_of[pos])
      if (cnt[s] + 1 >= block_at) {
        blocked = true;
        break;
      }
    if (blocked) {
      rep.pruned += binomial(m - pos - 1, slots - 1);
    } else {
      for (int s : super_of[pos]) ++cnt[s];
      chosen.push_back(pos);
      run(pos + 1);
      chosen.pop_back();
      for (int s : super_of[pos]) --cnt[s];
      if (aborted) return;
    }
    run(pos + 1);
  }
};

}  // namespace

MultigradedSearchReport multigraded_exhaustive_search(int n, int i, std::uint64_t budget) {
  if (n < 3 || i < 2 || i > n - 1)
    throw std::invalid_argument("need n >= 3 and 2 <= i <= n-1");

  MultigradedSearchReport rep;
  rep.n = n;
  rep.i = i;
  rep.budget = budget;
  rep.rank = cycle_rank(n, i);
  KoszulMap d = differential(n, i);
  const std::vector<std::vector<int>> basis = wedge_basis(n, i);
  const int m = static_cast<int>(basis.size());
  const int t = static_cast<int>(rep.rank) - 1;
  rep.total = binomial(m, t);

  // For each basis wedge, the (i+1)-sets it is a face of. A candidate holding
  // i faces of one such set S fails: at x_s = 0, s the element those faces
  // share, they restrict to the full boundary of the simplex on S minus s,
  // of rank i - 1, so x_s divides every maximal minor.
  const std::vector<std::vector<int>> supers = wedge_basis(n, i + 1);
  std::vector<std::vector<int>> super_of(m);
  for (std::size_t s = 0; s < supers.size(); ++s)
    for (std::size_t drop = 0; drop < supers[s].size(); ++drop) {
      std::vector<int> face;
      for (std::size_t q = 0; q < supers[s].size(); ++q)
        if (q != drop) face.push_back(supers[s][q]);
      super_of[wedge_position(face, n)].push_back(static_cast<int>(s));
    }

  std::vector<int> all_rows(d.matrix.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  SubsetSearch search{d.matrix, basis,  super_of, all_rows, m,
                      t,        i,      budget,   rep,      std::vector<int>(supers.size(), 0),
                      {},       false};
  search.chosen.reserve(t);
  search.run(0);

  rep.unexplored = rep.total - rep.evaluated - rep.pruned;
  rep.complete = rep.unexplored == 0;
  return rep;
}

}  // namespace bbk
