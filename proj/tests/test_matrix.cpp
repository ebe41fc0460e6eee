#include <doctest.h>

#include <algorithm>

#include "bourbakikit/koszul.hpp"
#include "bourbakikit/matrix.hpp"
#include "bourbakikit/rng.hpp"

using namespace bbk;

namespace {

Polynomial random_poly(BoundedRng& rng, int nvars) {
  Polynomial f(nvars);
  const int terms = static_cast<int>(rng.uniform(0, 2));
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(nvars);
    for (int k = 0; k < nvars; ++k) e[k] = static_cast<int>(rng.uniform(0, 2));
    f.add_term(e, Rational(rng.uniform(-3, 3)));
  }
  return f;
}

PolyMatrix random_matrix(BoundedRng& rng, int nvars, int rows, int cols) {
  PolyMatrix m(nvars, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, nvars);
  return m;
}

PolyMatrix diag(int nvars, const std::vector<Polynomial>& d) {
  PolyMatrix m(nvars, static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

}  // namespace

TEST_CASE("determinant of small fixed matrices") {
  PolyMatrix m(2, 2, 2);
  m.at(0, 0) = parse_polynomial("x1", 2);
  m.at(0, 1) = parse_polynomial("x2", 2);
  m.at(1, 0) = parse_polynomial("x2", 2);
  m.at(1, 1) = parse_polynomial("x1", 2);
  CHECK(det(m) == parse_polynomial("x1^2 - x2^2", 2));

  // 0x0 determinant is the empty product.
  CHECK(det(PolyMatrix(3, 0, 0)).is_one());
}

TEST_CASE("determinant vanishes on duplicate rows") {
  BoundedRng rng(5);
  PolyMatrix m = random_matrix(rng, 2, 3, 3);
  for (int j = 0; j < 3; ++j) m.at(2, j) = m.at(0, j);
  CHECK(det(m).is_zero());
}

TEST_CASE("determinant is multiplicative and alternating") {
  BoundedRng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix a = random_matrix(rng, 2, 3, 3);
    PolyMatrix b = random_matrix(rng, 2, 3, 3);
    CHECK(det(mul(a, b)) == det(a) * det(b));

    PolyMatrix swapped = a.submatrix({1, 0, 2}, {0, 1, 2});
    CHECK(det(swapped) == -det(a));
  }
}

TEST_CASE("determinant agrees with evaluation") {
  BoundedRng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    PolyMatrix m = random_matrix(rng, 3, 4, 4);
    Polynomial d = det(m);
    std::vector<long> pt = {3, -2, 5};
    // Numeric determinant via Bareiss over Q.
    std::vector<std::vector<mpq_class>> num(4, std::vector<mpq_class>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) num[i][j] = evaluate(m.at(i, j), pt);
    mpq_class dn = 1;
    bool zero = false;
    for (int c = 0; c < 4 && !zero; ++c) {
      int p = c;
      while (p < 4 && num[p][c] == 0) ++p;
      if (p == 4) {
        zero = true;
        break;
      }
      if (p != c) {
        std::swap(num[p], num[c]);
        dn = -dn;
      }
      dn *= num[c][c];
      for (int r = c + 1; r < 4; ++r) {
        mpq_class f = num[r][c] / num[c][c];
        for (int j = c; j < 4; ++j) num[r][j] -= f * num[c][j];
      }
    }
    CHECK(evaluate(d, pt) == (zero ? mpq_class(0) : dn));
  }
}

TEST_CASE("signed maximal minors give a kernel vector") {
  PolyMatrix m(2, 2, 1);
  m.at(0, 0) = parse_polynomial("x1", 2);
  m.at(1, 0) = parse_polynomial("x2", 2);
  std::vector<Polynomial> f = signed_maximal_minors(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == parse_polynomial("x2", 2));
  CHECK(f[1] == -parse_polynomial("x1", 2));

  BoundedRng rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    PolyMatrix a = random_matrix(rng, 3, 4, 3);
    std::vector<Polynomial> v = signed_maximal_minors(a);
    REQUIRE(v.size() == 4);
    // transpose(a) . v = 0.
    for (int j = 0; j < 3; ++j) {
      Polynomial s(3);
      for (int i = 0; i < 4; ++i) s += a.at(i, j) * v[static_cast<std::size_t>(i)];
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("minors_gcd basics") {
  PolyMatrix m = diag(3, {parse_polynomial("x1*x2", 3), parse_polynomial("x1*x3", 3),
                          parse_polynomial("x2*x3", 3)});
  // The 1x1 minors are the entries; the three diagonal products are coprime.
  CHECK(minors_gcd(m, 1).is_one());
  CHECK(minors_gcd(m, 3) == parse_polynomial("x1^2*x2^2*x3^2", 3));
  // Every nonzero 2x2 minor is a product of two diagonal entries.
  CHECK(to_string(minors_gcd(m, 2)) == "x1*x2*x3");
  CHECK_THROWS_AS(minors_gcd(m, 4), std::invalid_argument);
  CHECK_THROWS_AS(minors_gcd(m, 0), std::invalid_argument);

  PolyMatrix z(2, 2, 2);
  CHECK(minors_gcd(z, 1).is_zero());
}

TEST_CASE("minors_gcd invariant under row and column permutation") {
  BoundedRng rng(31);
  PolyMatrix m = random_matrix(rng, 3, 4, 3);
  Polynomial g = minors_gcd(m, 2);
  CHECK(minors_gcd(m.submatrix({3, 1, 0, 2}, {2, 0, 1}), 2) == g);
  CHECK(minors_gcd(m.transposed(), 2) == g);
}

TEST_CASE("rank via evaluation matches exhaustive minor search") {
  BoundedRng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m = random_matrix(rng, 2, 3, 4);
    int r = rank_over_fraction_field(m);
    // Exhaustive: largest t with a nonzero t x t minor.
    int best = 0;
    for (int t = 1; t <= 3; ++t)
      if (!minors_gcd(m, t).is_zero()) best = t;
    CHECK(r == best);
  }
  CHECK(rank_over_fraction_field(PolyMatrix(2, 3, 0)) == 0);
}

TEST_CASE("koszul differential ranks") {
  CHECK(rank_over_fraction_field(differential(4, 2).matrix) == 3);
  CHECK(rank_over_fraction_field(differential(5, 3).matrix) == 6);
}

TEST_CASE("select_full_rank_submatrix picks independent columns") {
  PolyMatrix d = differential(4, 2).matrix;  // 4 x 6, rank 3
  PolyMatrix s = select_full_rank_submatrix(d, 3);
  CHECK(s.cols() == 3);
  CHECK(s.rows() == 4);
  CHECK(rank_over_fraction_field(s) == 3);
  CHECK_THROWS_AS(select_full_rank_submatrix(d, 4), std::invalid_argument);
}

TEST_CASE("submatrix carries labels") {
  PolyMatrix m(2, 2, 2);
  m.row_labels = {Label::of_wedge({1}), Label::of_wedge({2})};
  m.col_labels = {Label::of_name("a"), Label::of_name("b")};
  PolyMatrix s = m.submatrix({1}, {1, 0});
  REQUIRE(s.row_labels.size() == 1);
  CHECK(s.row_labels[0] == Label::of_wedge({2}));
  REQUIRE(s.col_labels.size() == 2);
  CHECK(s.col_labels[0] == Label::of_name("b"));
}

TEST_CASE("combine_columns forms rational column combinations") {
  PolyMatrix m(2, 2, 2);
  m.at(0, 0) = parse_polynomial("x1", 2);
  m.at(1, 1) = parse_polynomial("x2", 2);
  PolyMatrix c = combine_columns(m, {{Rational(1), Rational(-1)}});
  REQUIRE(c.cols() == 1);
  CHECK(c.at(0, 0) == parse_polynomial("x1", 2));
  CHECK(c.at(1, 0) == -parse_polynomial("x2", 2));
  CHECK_THROWS_AS(combine_columns(m, {{Rational(1)}}), std::invalid_argument);
}
