#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bourbakikit/polynomial.hpp"

namespace bbk {

// Row/column tag: either a wedge index (sorted 1-based subset of [n]) or a
// free-generator name. Labels are bookkeeping; arithmetic never needs them,
// but the multigraded minor shortcut and the JSON output do.
struct Label {
  std::vector<int> wedge;
  std::string name;
  bool is_wedge = false;

  static Label of_wedge(std::vector<int> w) { return Label{std::move(w), "", true}; }
  static Label of_name(std::string s) { return Label{{}, std::move(s), false}; }
};

bool operator==(const Label& a, const Label& b);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int nvars, int rows, int cols)
      : n_(nvars), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols,
                                               Polynomial::zero(nvars)) {}

  int nvars() const { return n_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Polynomial& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  // Empty when unlabeled, otherwise sized rows()/cols().
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;

  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix transposed() const;

 private:
  int n_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Polynomial> a_;
};

bool operator==(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
bool is_zero_matrix(const PolyMatrix& m);

// Column recombination over constant coefficients: result column j is
// sum_i combos[j][i] * column_i. Row labels survive; column labels are taken
// from new_col_labels when provided.
PolyMatrix combine_columns(const PolyMatrix& m,
                           const std::vector<std::vector<Rational>>& combos,
                           const std::vector<Label>& new_col_labels = {});

// Exact determinant. Dense matrices go through fraction-free Bareiss
// elimination; sparse ones (or small ones) through Laplace expansion along
// the sparsest columns with memoization on row masks. Identical results.
Polynomial det(const PolyMatrix& m);

// For an alpha x (alpha-1) matrix: f_s = (-1)^(s+1) * det(m with row s
// deleted), s = 1..alpha. The column vector f satisfies transpose(m) . f = 0.
std::vector<Polynomial> signed_maximal_minors(const PolyMatrix& m);

// gcd of all t x t minors in canonical form; 0 if every minor vanishes.
// Early exit once the running gcd reaches 1. Throws std::invalid_argument
// when t is out of range.
Polynomial minors_gcd(const PolyMatrix& m, int t);

// Rank over Q(x_1..x_n): random integer evaluation (deterministic internal
// seed, a few agreeing samples) confirmed by an exact nonzero minor of the
// claimed size.
int rank_over_fraction_field(const PolyMatrix& m);

// Colexicographically first column subset of the given size whose columns
// are independent over the fraction field. Throws std::invalid_argument when
// no such subset exists.
PolyMatrix select_full_rank_submatrix(const PolyMatrix& m, int target_cols);

}  // namespace bbk
