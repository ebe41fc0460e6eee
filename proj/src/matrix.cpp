#include "bourbakikit/matrix.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "bourbakikit/poly_gcd.hpp"
#include "bourbakikit/rng.hpp"

namespace bbk {

bool operator==(const Label& a, const Label& b) {
  if (a.is_wedge != b.is_wedge) return false;
  return a.is_wedge ? a.wedge == b.wedge : a.name == b.name;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
  PolyMatrix s(n_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  if (!row_labels.empty()) {
    s.row_labels.reserve(rows.size());
    for (int r : rows) s.row_labels.push_back(row_labels[r]);
  }
  if (!col_labels.empty()) {
    s.col_labels.reserve(cols.size());
    for (int c : cols) s.col_labels.push_back(col_labels[c]);
  }
  return s;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(n_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  t.row_labels = col_labels;
  t.col_labels = row_labels;
  return t;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.nvars() != b.nvars() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.nvars() != b.nvars())
    throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix c(a.nvars(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  c.row_labels = a.row_labels;
  c.col_labels = b.col_labels;
  return c;
}

bool is_zero_matrix(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

PolyMatrix combine_columns(const PolyMatrix& m,
                           const std::vector<std::vector<Rational>>& combos,
                           const std::vector<Label>& new_col_labels) {
  PolyMatrix r(m.nvars(), m.rows(), static_cast<int>(combos.size()));
  for (std::size_t j = 0; j < combos.size(); ++j) {
    if (combos[j].size() != static_cast<std::size_t>(m.cols()))
      throw std::invalid_argument("column combination length mismatch");
    for (int k = 0; k < m.cols(); ++k) {
      if (combos[j][k] == 0) continue;
      for (int i = 0; i < m.rows(); ++i) {
        if (m.at(i, k).is_zero()) continue;
        r.at(i, static_cast<int>(j)) += combos[j][k] * m.at(i, k);
      }
    }
  }
  r.row_labels = m.row_labels;
  if (!new_col_labels.empty()) {
    if (new_col_labels.size() != combos.size())
      throw std::invalid_argument("column label count mismatch");
    r.col_labels = new_col_labels;
  }
  return r;
}

namespace {

int count_nonzero(const PolyMatrix& m) {
  int nz = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) ++nz;
  return nz;
}

Polynomial det_laplace(const PolyMatrix& m) {
  const int t = m.rows();
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> nz(t, 0);
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < t; ++i)
      if (!m.at(i, j).is_zero()) ++nz[j];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return nz[a] < nz[b]; });
  int inversions = 0;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (order[i] > order[j]) ++inversions;

  std::unordered_map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::uint64_t)> rec = [&](std::uint64_t mask) -> Polynomial {
    if (mask == 0) return Polynomial::constant(m.nvars(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int k = t - std::popcount(mask);
    int col = order[k];
    Polynomial sum(m.nvars());
    bool negative = false;
    for (int r = 0; r < t; ++r) {
      if (!(mask & (std::uint64_t{1} << r))) continue;
      if (!m.at(r, col).is_zero()) {
        Polynomial term = m.at(r, col) * rec(mask ^ (std::uint64_t{1} << r));
        if (negative)
          sum -= term;
        else
          sum += term;
      }
      negative = !negative;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  std::uint64_t full = t == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
  Polynomial d = rec(full);
  return (inversions % 2) ? -d : d;
}

Polynomial det_bareiss(const PolyMatrix& m) {
  const int t = m.rows();
  std::vector<std::vector<Polynomial>> a(t, std::vector<Polynomial>(t, Polynomial(m.nvars())));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) a[i][j] = m.at(i, j);
  int sign = 1;
  Polynomial prev = Polynomial::constant(m.nvars(), 1);
  for (int k = 0; k < t - 1; ++k) {
    int pivot = -1;
    for (int r = k; r < t; ++r)
      if (!a[r][k].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Polynomial::zero(m.nvars());
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < t; ++i) {
      for (int j = k + 1; j < t; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Polynomial::zero(m.nvars());
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[t - 1][t - 1] : -a[t - 1][t - 1];
}

}  // namespace

Polynomial det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int t = m.rows();
  if (t == 0) return Polynomial::constant(m.nvars(), 1);
  if (t == 1) return m.at(0, 0);
  if (t <= 64) {
    int nz = count_nonzero(m);
    double density = static_cast<double>(nz) / (static_cast<double>(t) * t);
    if (t <= 12 || density <= 0.35) return det_laplace(m);
  }
  return det_bareiss(m);
}

std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& m) {
  const int alpha = m.rows();
  if (m.cols() != alpha - 1)
    throw std::invalid_argument("signed maximal minors need an alpha x (alpha-1) matrix");
  std::vector<int> all_cols(alpha - 1);
  std::iota(all_cols.begin(), all_cols.end(), 0);
  std::vector<Polynomial> f;
  f.reserve(alpha);
  for (int s = 0; s < alpha; ++s) {
    std::vector<int> rows;
    rows.reserve(alpha - 1);
    for (int r = 0; r < alpha; ++r)
      if (r != s) rows.push_back(r);
    Polynomial d = det(m.submatrix(rows, all_cols));
    f.push_back(s % 2 == 0 ? d : -d);
  }
  return f;
}

namespace {

// ---- subset enumeration ----

// Advance a t-subset of {0..m-1} in colexicographic order; false after the last.
bool next_colex(std::vector<int>& s, int m) {
  const int t = static_cast<int>(s.size());
  for (int i = 0; i < t; ++i) {
    int cap = (i + 1 < t) ? s[i + 1] : m;
    if (s[i] + 1 < cap) {
      ++s[i];
      for (int j = 0; j < i; ++j) s[j] = j;
      return true;
    }
  }
  return false;
}

// ---- bipartite matching (Kuhn) ----

struct Matcher {
  const std::vector<std::vector<int>>& col_rows;  // candidate rows per column
  int rows;
  std::vector<int> row_match;  // row -> column or -1
  std::vector<char> visited;

  Matcher(const std::vector<std::vector<int>>& cr, int nrows)
      : col_rows(cr), rows(nrows), row_match(nrows, -1), visited(cr.size(), 0) {}

  bool augment(int c, const std::vector<char>& allowed) {
    if (visited[c]) return false;
    visited[c] = 1;
    for (int r : col_rows[c]) {
      if (!allowed[r]) continue;
      if (row_match[r] < 0 || augment(row_match[r], allowed)) {
        row_match[r] = c;
        return true;
      }
    }
    return false;
  }

  int run(const std::vector<char>& allowed) {
    std::fill(row_match.begin(), row_match.end(), -1);
    int matched = 0;
    for (std::size_t c = 0; c < col_rows.size(); ++c) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(static_cast<int>(c), allowed)) ++matched;
    }
    return matched;
  }
};

// ---- multigraded monomial shortcut ----

struct MultigradedData {
  int nvars = 0;
  int rows = 0;
  int t = 0;  // = number of columns
  std::vector<std::vector<int>> col_rows;              // nonzero rows per column
  std::vector<std::vector<Rational>> col_coeffs;       // coefficients, parallel
  std::vector<ExponentVector> row_ind;                 // 0/1 indicator of row label
  ExponentVector col_total;                            // sum of column indicators
};

ExponentVector wedge_indicator(const std::vector<int>& wedge, int nvars) {
  ExponentVector ind(nvars, 0);
  for (int v : wedge) {
    if (v < 1 || v > nvars) return {};
    ind[v - 1] = 1;
  }
  return ind;
}

// A matrix qualifies when every entry is a monomial whose exponent vector is
// exactly col_label_indicator - row_label_indicator. Then the exponent of any
// nonzero t x t minor depends only on the chosen row set, which makes the
// minors gcd computable one variable at a time.
std::optional<MultigradedData> multigraded_view(const PolyMatrix& m, int t) {
  if (m.cols() != t || m.rows() > 64) return std::nullopt;
  if (m.row_labels.empty() || m.col_labels.empty()) return std::nullopt;
  for (const Label& l : m.row_labels)
    if (!l.is_wedge) return std::nullopt;
  for (const Label& l : m.col_labels)
    if (!l.is_wedge) return std::nullopt;

  MultigradedData d;
  d.nvars = m.nvars();
  d.rows = m.rows();
  d.t = t;
  d.row_ind.reserve(m.rows());
  std::vector<ExponentVector> col_ind;
  col_ind.reserve(t);
  for (const Label& l : m.row_labels) {
    ExponentVector ind = wedge_indicator(l.wedge, d.nvars);
    if (ind.empty() && !l.wedge.empty()) return std::nullopt;
    d.row_ind.push_back(std::move(ind));
    if (d.row_ind.back().empty()) d.row_ind.back().assign(d.nvars, 0);
  }
  d.col_total.assign(d.nvars, 0);
  for (const Label& l : m.col_labels) {
    ExponentVector ind = wedge_indicator(l.wedge, d.nvars);
    if (ind.empty() && !l.wedge.empty()) return std::nullopt;
    if (ind.empty()) ind.assign(d.nvars, 0);
    for (int k = 0; k < d.nvars; ++k) d.col_total[k] += ind[k];
    col_ind.push_back(std::move(ind));
  }
  d.col_rows.assign(t, {});
  d.col_coeffs.assign(t, {});
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      const Polynomial& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_monomial()) return std::nullopt;
      const Term& term = e.leading_term();
      for (int k = 0; k < d.nvars; ++k)
        if (term.e[k] != col_ind[j][k] - d.row_ind[i][k]) return std::nullopt;
      d.col_rows[j].push_back(i);
      d.col_coeffs[j].push_back(term.c);
    }
  }
  return d;
}

// Rational coefficient of the minor on the given sorted row set (the common
// monomial factor is determined by the row set alone).
Rational multigraded_minor_coeff(const MultigradedData& d, const std::vector<int>& rows) {
  const int t = d.t;
  std::vector<int> pos(d.rows, -1);
  for (int p = 0; p < t; ++p) pos[rows[p]] = p;
  std::unordered_map<std::uint32_t, Rational> memo;
  std::function<Rational(std::uint32_t)> rec = [&](std::uint32_t mask) -> Rational {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int k = t - std::popcount(mask);
    Rational sum = 0;
    const auto& rs = d.col_rows[k];
    const auto& cs = d.col_coeffs[k];
    for (std::size_t idx = 0; idx < rs.size(); ++idx) {
      int p = pos[rs[idx]];
      if (p < 0 || !(mask & (std::uint32_t{1} << p))) continue;
      int before = std::popcount(mask & ((std::uint32_t{1} << p) - 1));
      Rational sub = rec(mask ^ (std::uint32_t{1} << p));
      if (sub == 0) continue;
      Rational term = cs[idx] * sub;
      if (before % 2)
        sum -= term;
      else
        sum += term;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(t == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << t) - 1));
}

// DFS over row subsets in ascending-index order with a matching-feasibility
// prune. candidates[] restricts and orders the searchable rows; take_exact
// constrains how many rows must come from the leading K-segment (set
// k_segment = -1 to disable). Returns the first row set with a nonzero minor.
struct RowSearch {
  const MultigradedData& d;
  std::vector<int> candidates;
  int k_segment = -1;
  int k_take = 0;
  Matcher matcher;
  std::vector<char> allowed;
  std::vector<int> chosen;
  std::vector<int> found;

  explicit RowSearch(const MultigradedData& data)
      : d(data), matcher(data.col_rows, data.rows), allowed(data.rows, 0) {}

  bool feasible(std::size_t next) {
    std::fill(allowed.begin(), allowed.end(), 0);
    for (int r : chosen) allowed[r] = 1;
    for (std::size_t i = next; i < candidates.size(); ++i) allowed[candidates[i]] = 1;
    return matcher.run(allowed) == d.t;
  }

  bool dfs(std::size_t next, int k_used) {
    if (static_cast<int>(chosen.size()) == d.t) {
      if (k_segment >= 0 && k_used != k_take) return false;
      std::vector<int> rows = chosen;
      std::sort(rows.begin(), rows.end());
      if (multigraded_minor_coeff(d, rows) != 0) {
        found = rows;
        return true;
      }
      return false;
    }
    int need = d.t - static_cast<int>(chosen.size());
    if (candidates.size() - next < static_cast<std::size_t>(need)) return false;
    if (k_segment >= 0) {
      int k_remaining_avail = 0;
      for (std::size_t i = next; i < candidates.size() && static_cast<int>(i) < k_segment; ++i)
        ++k_remaining_avail;
      // k_segment is a prefix of candidates, so remaining K rows start at next.
      int k_left = k_take - k_used;
      if (k_left < 0) return false;
      if (k_left > k_remaining_avail) return false;
      int nk_avail = static_cast<int>(candidates.size()) -
                     std::max(static_cast<int>(next), k_segment);
      if (need - k_left > nk_avail) return false;
    }
    if (!feasible(next)) return false;
    // include candidates[next]
    bool in_k = k_segment >= 0 && static_cast<int>(next) < k_segment;
    if (!(k_segment >= 0 && in_k && k_used == k_take)) {
      chosen.push_back(candidates[next]);
      if (dfs(next + 1, k_used + (in_k ? 1 : 0))) return true;
      chosen.pop_back();
    }
    // exclude candidates[next]
    return dfs(next + 1, k_used);
  }
};

Polynomial minors_gcd_multigraded(const PolyMatrix& m, const MultigradedData& d) {
  // Any nonzero minor fixes, per variable, an upper bound for the gcd exponent.
  RowSearch base(d);
  base.candidates.resize(d.rows);
  std::iota(base.candidates.begin(), base.candidates.end(), 0);
  if (!base.dfs(0, 0)) return Polynomial::zero(d.nvars);
  std::vector<int> base_rows = base.found;

  ExponentVector gcd_exp(d.nvars, 0);
  for (int k = 0; k < d.nvars; ++k) {
    std::vector<int> with_k, without_k;
    for (int r = 0; r < d.rows; ++r)
      (d.row_ind[r][k] ? with_k : without_k).push_back(r);
    int base_count = 0;
    for (int r : base_rows) base_count += d.row_ind[r][k];
    int upper = static_cast<int>(d.col_total[k]) - base_count;
    if (upper <= 0) {
      gcd_exp[k] = std::max(upper, 0);
      continue;
    }
    int result = upper;
    for (int level = 0; level < upper; ++level) {
      int take = static_cast<int>(d.col_total[k]) - level;  // rows containing x_k
      if (take < 0 || take > static_cast<int>(with_k.size())) continue;
      if (d.t - take < 0 || d.t - take > static_cast<int>(without_k.size())) continue;
      RowSearch search(d);
      search.candidates = with_k;
      search.candidates.insert(search.candidates.end(), without_k.begin(), without_k.end());
      search.k_segment = static_cast<int>(with_k.size());
      search.k_take = take;
      if (search.dfs(0, 0)) {
        result = level;
        break;
      }
    }
    gcd_exp[k] = result;
  }
  return Polynomial::monomial(d.nvars, gcd_exp, 1);
}

}  // namespace

Polynomial minors_gcd(const PolyMatrix& m, int t) {
  if (t < 1 || t > m.rows() || t > m.cols())
    throw std::invalid_argument("minor size out of range");
  if (auto d = multigraded_view(m, t); d && t <= 32)
    return minors_gcd_multigraded(m, *d);

  std::vector<int> col_subset(t);
  std::iota(col_subset.begin(), col_subset.end(), 0);
  Polynomial g = Polynomial::zero(m.nvars());
  const bool use_masks = m.rows() <= 64;
  do {
    // Row occupancy masks of the selected columns, for a cheap zero-minor test.
    std::vector<std::uint64_t> col_mask(t, 0);
    if (use_masks) {
      for (int j = 0; j < t; ++j)
        for (int i = 0; i < m.rows(); ++i)
          if (!m.at(i, col_subset[j]).is_zero()) col_mask[j] |= std::uint64_t{1} << i;
    }
    std::vector<int> row_subset(t);
    std::iota(row_subset.begin(), row_subset.end(), 0);
    do {
      if (use_masks) {
        std::uint64_t rows_mask = 0;
        for (int r : row_subset) rows_mask |= std::uint64_t{1} << r;
        bool dead = false;
        for (int j = 0; j < t && !dead; ++j) dead = (col_mask[j] & rows_mask) == 0;
        if (dead) continue;
      }
      Polynomial d = det(m.submatrix(row_subset, col_subset));
      if (d.is_zero()) continue;
      g = g.is_zero() ? normalize_primitive(d) : poly_gcd(g, d);
      if (g.is_one()) return g;
    } while (next_colex(row_subset, m.rows()));
  } while (next_colex(col_subset, m.cols()));
  return g;
}

namespace {

std::vector<std::vector<mpq_class>> evaluate_matrix(const PolyMatrix& m,
                                                    const std::vector<long>& pt) {
  std::vector<std::vector<mpq_class>> e(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) e[i][j] = evaluate(m.at(i, j), pt);
  return e;
}

struct GaussResult {
  int rank = 0;
  std::vector<int> pivot_rows, pivot_cols;
};

GaussResult gauss_rank(std::vector<std::vector<mpq_class>> a) {
  GaussResult res;
  if (a.empty() || a[0].empty()) return res;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  std::vector<char> row_used(rows, 0), col_used(cols, 0);
  for (;;) {
    int pr = -1, pc = -1;
    for (int i = 0; i < rows && pr < 0; ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[j] || a[i][j] == 0) continue;
        pr = i;
        pc = j;
        break;
      }
    }
    if (pr < 0) break;
    row_used[pr] = 1;
    col_used[pc] = 1;
    res.pivot_rows.push_back(pr);
    res.pivot_cols.push_back(pc);
    ++res.rank;
    for (int i = 0; i < rows; ++i) {
      if (row_used[i] || a[i][pc] == 0) continue;
      mpq_class factor = a[i][pc] / a[pr][pc];
      for (int j = 0; j < cols; ++j) {
        if (col_used[j] && j != pc) continue;
        a[i][j] -= factor * a[pr][j];
      }
    }
  }
  std::sort(res.pivot_rows.begin(), res.pivot_rows.end());
  std::sort(res.pivot_cols.begin(), res.pivot_cols.end());
  return res;
}

constexpr std::uint64_t kRankSeed = 0x9e3779b97f4a7c15ULL;
constexpr long kEvalBound = 1000000;

std::vector<long> sample_point(BoundedRng& rng, int nvars) {
  std::vector<long> pt(nvars);
  for (long& v : pt) v = rng.uniform(-kEvalBound, kEvalBound);
  return pt;
}

}  // namespace

int rank_over_fraction_field(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || is_zero_matrix(m)) return 0;
  BoundedRng rng(kRankSeed);
  GaussResult best;
  best.rank = -1;
  int agreement = 0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    GaussResult g = gauss_rank(evaluate_matrix(m, sample_point(rng, m.nvars())));
    if (g.rank > best.rank) {
      best = std::move(g);
      agreement = 1;
    } else if (g.rank == best.rank) {
      ++agreement;
    }
    if (agreement >= 2) break;
  }
  if (best.rank <= 0)
    throw std::runtime_error("rank evaluation degenerate for a nonzero matrix");
  // The evaluated pivot minor is nonzero, so the symbolic one must be too;
  // computing it keeps the result certified rather than sampled.
  Polynomial witness = det(m.submatrix(best.pivot_rows, best.pivot_cols));
  if (witness.is_zero()) throw std::runtime_error("rank certificate failed");
  return best.rank;
}

PolyMatrix select_full_rank_submatrix(const PolyMatrix& m, int target_cols) {
  if (target_cols < 1 || target_cols > m.cols())
    throw std::invalid_argument("target column count out of range");
  if (target_cols > m.rows())
    throw std::invalid_argument("target column count exceeds row count");
  BoundedRng rng(kRankSeed);
  std::vector<std::vector<std::vector<mpq_class>>> evals;
  for (int p = 0; p < 2; ++p) evals.push_back(evaluate_matrix(m, sample_point(rng, m.nvars())));

  std::vector<int> cols(target_cols);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<int> all_rows(m.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  do {
    for (const auto& e : evals) {
      std::vector<std::vector<mpq_class>> sub(m.rows(),
                                              std::vector<mpq_class>(target_cols));
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < target_cols; ++j) sub[i][j] = e[i][cols[j]];
      GaussResult g = gauss_rank(std::move(sub));
      if (g.rank != target_cols) continue;
      std::vector<int> chosen;
      chosen.reserve(target_cols);
      for (int j : g.pivot_cols) chosen.push_back(cols[j]);
      Polynomial witness = det(m.submatrix(g.pivot_rows, chosen));
      if (witness.is_zero()) throw std::runtime_error("full-rank certificate failed");
      return m.submatrix(all_rows, cols);
    }
  } while (next_colex(cols, m.cols()));
  throw std::invalid_argument("no full-rank column subset of the requested size");
}

}  // namespace bbk
