#include "bourbakikit/koszul.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbk {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::vector<std::vector<int>> wedge_basis(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0) return {{}};
  std::vector<std::vector<int>> basis;
  basis.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::vector<int> s(k);
  for (int j = 0; j < k; ++j) s[j] = j + 1;
  for (;;) {
    basis.push_back(s);
    int i = 0;
    for (; i < k; ++i) {
      int cap = (i + 1 < k) ? s[i + 1] : n + 1;
      if (s[i] + 1 < cap) {
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j + 1;
        break;
      }
    }
    if (i == k) break;
  }
  return basis;
}

int wedge_position(const std::vector<int>& s, int n) {
  long long pos = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1 || s[j] > n || (j > 0 && s[j] <= s[j - 1]))
      throw std::invalid_argument("subset must be ascending within 1..n");
    pos += binomial(s[j] - 1, static_cast<int>(j) + 1);
  }
  return static_cast<int>(pos);
}

KoszulMap differential(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("differential index out of range");
  auto rows = wedge_basis(n, k - 1);
  auto cols = wedge_basis(n, k);
  PolyMatrix m(n, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& s = cols[c];
    for (int j = 0; j < k; ++j) {
      std::vector<int> face;
      face.reserve(k - 1);
      for (int t = 0; t < k; ++t)
        if (t != j) face.push_back(s[t]);
      int r = wedge_position(face, n);
      Rational sign = (j % 2 == 0) ? 1 : -1;
      m.at(r, static_cast<int>(c)) += sign * Polynomial::variable(n, s[j]);
    }
  }
  m.row_labels.reserve(rows.size());
  for (auto& w : rows) m.row_labels.push_back(Label::of_wedge(w));
  m.col_labels.reserve(cols.size());
  for (auto& w : cols) m.col_labels.push_back(Label::of_wedge(w));
  return {n, k, std::move(m)};
}

std::pair<std::vector<int>, int> hat_index(const std::vector<int>& s, int n) {
  std::vector<char> in(n + 1, 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] < 1 || s[j] > n || (j > 0 && s[j] <= s[j - 1]))
      throw std::invalid_argument("subset must be ascending within 1..n");
    in[s[j]] = 1;
  }
  std::vector<int> comp;
  comp.reserve(n - s.size());
  for (int v = 1; v <= n; ++v)
    if (!in[v]) comp.push_back(v);
  // Inversions of the concatenation (s, comp) against 1..n: each pair with the
  // s-element larger contributes one.
  long long inversions = 0;
  for (int a : s)
    for (int b : comp)
      if (a > b) ++inversions;
  return {comp, inversions % 2 == 0 ? 1 : -1};
}

long long cycle_rank(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("cycle index out of range");
  return binomial(n - 1, i - 1);
}

long long e1_of_cycle(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("cycle index out of range");
  return n * binomial(n - 2, i - 2);
}

PolyMatrix restrict_map(const KoszulMap& d, const std::vector<LabelCombo>& combos,
                        const std::vector<Label>& new_labels) {
  const PolyMatrix& diff = d.matrix;
  std::vector<std::vector<Rational>> weights(combos.size(),
                                             std::vector<Rational>(diff.cols(), 0));
  for (std::size_t j = 0; j < combos.size(); ++j) {
    for (const auto& [coeff, wedge] : combos[j].terms) {
      int col = -1;
      for (int c = 0; c < diff.cols(); ++c) {
        if (diff.col_labels[c].is_wedge && diff.col_labels[c].wedge == wedge) {
          col = c;
          break;
        }
      }
      if (col < 0) throw std::invalid_argument("wedge label not found among columns");
      weights[j][col] += coeff;
    }
  }
  return combine_columns(diff, weights, new_labels);
}

}  // namespace bbk
