#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "bourbakikit/rees.hpp"
#include "bourbakikit/rng.hpp"

using namespace bbk;

namespace {

LatticeVector ones_with_t(int n, long long t) {
  LatticeVector v(static_cast<std::size_t>(n) + 1, 1);
  v[static_cast<std::size_t>(n)] = t;
  return v;
}

LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
  return c;
}

// Second canonical generator for odd n = 2k+1: (k, .., k, k+1).
LatticeVector f2_vector(int n) {
  const long long k = (n - 1) / 2;
  LatticeVector v(static_cast<std::size_t>(n) + 1, k);
  v[static_cast<std::size_t>(n)] = k + 1;
  return v;
}

}  // namespace

TEST_CASE("semigroup generators") {
  auto [es, fs] = semigroup_generators(5);
  REQUIRE(es.size() == 5);
  REQUIRE(fs.size() == 5);
  for (int i = 0; i < 5; ++i) {
    long long total = std::accumulate(es[static_cast<std::size_t>(i)].begin(),
                                      es[static_cast<std::size_t>(i)].end(), 0LL);
    CHECK(total == 1);
    CHECK(es[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] == 1);
    CHECK(es[static_cast<std::size_t>(i)].back() == 0);
  }
  // f_j has zeros exactly at j and its circular successor, t-coordinate 1.
  CHECK(fs[0] == LatticeVector{0, 0, 1, 1, 1, 1});
  CHECK(fs[3] == LatticeVector{1, 1, 1, 0, 0, 1});
  CHECK(fs[4] == LatticeVector{0, 1, 1, 1, 0, 1});
  for (const auto& f : fs) {
    CHECK(std::accumulate(f.begin(), f.end() - 1, 0LL) == 3);
    CHECK(f.back() == 1);
  }

  auto [e3, f3] = semigroup_generators(3);
  CHECK(f3[0] == LatticeVector{0, 0, 1, 1});
  CHECK(f3[2] == LatticeVector{0, 1, 0, 1});
}

TEST_CASE("circularly independent sets") {
  CHECK(cycle_independent_sets(4, 2) == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(cycle_independent_sets(5, 2).size() == 5);
  CHECK(cycle_independent_sets(6, 2).size() == 9);
  CHECK(cycle_independent_sets(6, 3) ==
        std::vector<std::vector<int>>{{1, 3, 5}, {2, 4, 6}});
  CHECK(cycle_independent_sets(7, 3).size() == 7);
  // Count n/(n-l) * C(n-l, l) for 2 <= l <= n/2.
  for (int n = 4; n <= 12; ++n)
    for (int l = 2; l <= n / 2; ++l) {
      long long expected = 0;
      // Binomial via Pascal recursion to keep the oracle independent.
      std::vector<std::vector<long long>> c(
          static_cast<std::size_t>(n + 1), std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
      for (int a = 0; a <= n; ++a) {
        c[static_cast<std::size_t>(a)][0] = 1;
        for (int b = 1; b <= a; ++b)
          c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
              c[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
      }
      expected = n * c[static_cast<std::size_t>(n - l)][static_cast<std::size_t>(l)] / (n - l);
      CHECK(static_cast<long long>(cycle_independent_sets(n, l).size()) == expected);
    }
  CHECK_THROWS_AS(cycle_independent_sets(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_independent_sets(5, 3), std::invalid_argument);
}

TEST_CASE("cone membership") {
  // Generators sit on the boundary; sums of distinct kinds reach the interior.
  auto [es, fs] = semigroup_generators(5);
  for (const auto& e : es) CHECK(cone_membership(e, 5) == ConeStatus::boundary);
  for (const auto& f : fs) CHECK(cone_membership(f, 5) == ConeStatus::boundary);
  CHECK(cone_membership(ones_with_t(5, 1), 5) == ConeStatus::interior);
  CHECK(cone_membership(f2_vector(5), 5) == ConeStatus::interior);
  CHECK(cone_membership(LatticeVector{-1, 0, 0, 0, 0, 0}, 5) == ConeStatus::outside);
  // Total degree below (n-2) * t fails the last inequality.
  CHECK(cone_membership(LatticeVector{1, 1, 0, 0, 0, 1}, 5) == ConeStatus::outside);
  // An independent pair carrying less than its share fails.
  CHECK(cone_membership(LatticeVector{0, 3, 0, 3, 3, 3}, 5) == ConeStatus::outside);
  CHECK_THROWS_AS(cone_membership(LatticeVector{1, 1, 1}, 5), std::invalid_argument);

  // Even n: the difference of the two all-ones levels stays interior, and
  // t = 0 nonnegative vectors are never outside.
  CHECK(cone_membership(ones_with_t(4, 1), 4) == ConeStatus::interior);
  CHECK(cone_membership(LatticeVector{2, 0, 1, 0, 0}, 4) == ConeStatus::boundary);
}

TEST_CASE("membership decompositions at n=4 and n=3") {
  // all-ones with t=1 at n=4: the first decomposition in descending s-order
  // uses f_1, forcing r = (1, 1, 0, 0).
  auto d = semigroup_membership(ones_with_t(4, 1), 4);
  REQUIRE(d.has_value());
  CHECK(d->s == std::vector<long long>{1, 0, 0, 0});
  CHECK(d->r == std::vector<long long>{1, 1, 0, 0});

  auto d3 = semigroup_membership(ones_with_t(3, 1), 3);
  REQUIRE(d3.has_value());
  CHECK(d3->s == std::vector<long long>{1, 0, 0});
  CHECK(d3->r == std::vector<long long>{1, 1, 0});
}

TEST_CASE("membership reconstructs the input") {
  BoundedRng rng(77);
  for (int n = 3; n <= 6; ++n) {
    auto [es, fs] = semigroup_generators(n);
    for (int trial = 0; trial < 50; ++trial) {
      LatticeVector a(static_cast<std::size_t>(n) + 1, 0);
      for (const auto& e : es)
        if (rng.uniform(0, 1)) a = add(a, e);
      for (const auto& f : fs)
        for (long w = rng.uniform(0, 2); w > 0; --w) a = add(a, f);
      auto d = semigroup_membership(a, n);
      REQUIRE(d.has_value());
      LatticeVector back(static_cast<std::size_t>(n) + 1, 0);
      for (int i = 0; i < n; ++i) {
        for (long long k = 0; k < d->r[static_cast<std::size_t>(i)]; ++k)
          back = add(back, es[static_cast<std::size_t>(i)]);
        for (long long k = 0; k < d->s[static_cast<std::size_t>(i)]; ++k)
          back = add(back, fs[static_cast<std::size_t>(i)]);
      }
      CHECK(back == a);
      // Members are never outside the cone.
      CHECK(cone_membership(a, n) != ConeStatus::outside);
    }
    // Each generator decomposes as itself.
    for (std::size_t j = 0; j < fs.size(); ++j) {
      auto df = semigroup_membership(fs[j], n);
      REQUIRE(df.has_value());
      std::vector<long long> unit(static_cast<std::size_t>(n), 0);
      unit[j] = 1;
      CHECK(df->s == unit);
      CHECK(df->r == std::vector<long long>(static_cast<std::size_t>(n), 0));
    }
  }
}

TEST_CASE("non-members are rejected") {
  CHECK_FALSE(semigroup_membership(LatticeVector{0, 0, 0, 0, 1}, 4).has_value());
  CHECK_FALSE(semigroup_membership(LatticeVector{-1, 0, 0, 0}, 3).has_value());
  // Enough total degree but a starved circularly independent pair.
  CHECK_FALSE(semigroup_membership(LatticeVector{0, 3, 0, 3, 3, 3}, 5).has_value());
  // For odd n the difference of the two canonical generators fails: spreading
  // one t across the cycle cannot leave both of some adjacent pair at zero.
  for (int n = 3; n <= 7; n += 2) {
    LatticeVector diff = sub(f2_vector(n), ones_with_t(n, 1));
    CHECK(cone_membership(diff, n) == ConeStatus::outside);
    CHECK_FALSE(semigroup_membership(diff, n).has_value());
  }
}

TEST_CASE("second canonical generator decomposes for odd n") {
  // (k,..,k,k+1) = e_1 + f_1 + f_3 + .. + f_{2k-1} + f_n for n = 2k+1: the
  // odd-index wheels cover each coordinate k times except the first, which
  // the extra e_1 fills.
  for (int n = 3; n <= 7; n += 2) {
    auto d = semigroup_membership(f2_vector(n), n);
    REQUIRE(d.has_value());
    long long st = std::accumulate(d->s.begin(), d->s.end(), 0LL);
    CHECK(st == (n + 1) / 2);
  }
}

TEST_CASE("normality at desk scale") {
  NormalityReport r3 = normality_check(3, 2, 6);
  CHECK(r3.passed);
  CHECK(r3.counterexamples.empty());
  CHECK(r3.cone_points > 0);
  CHECK(r3.decomposable == r3.cone_points);
  CHECK(r3.lattice_points == 7LL * 7 * 7 * 3);

  NormalityReport r5 = normality_check(5, 2, 6);
  CHECK(r5.passed);
  CHECK(r5.decomposable == r5.cone_points);
}

TEST_CASE("canonical module generators") {
  CanonicalModuleResult c3 = canonical_generators(3, 3, 9);
  REQUIRE(c3.generators.size() == 2);
  CHECK(c3.generators[0] == ones_with_t(3, 1));
  CHECK(c3.generators[1] == f2_vector(3));
  CHECK(c3.classification == CanonicalClass::type_two);

  CanonicalModuleResult c4 = canonical_generators(4, 3, 12);
  REQUIRE(c4.generators.size() == 1);
  CHECK(c4.generators[0] == ones_with_t(4, 1));
  CHECK(c4.classification == CanonicalClass::gorenstein);

  CanonicalModuleResult c5 = canonical_generators(5, 3, 15);
  REQUIRE(c5.generators.size() == 2);
  CHECK(c5.generators[0] == ones_with_t(5, 1));
  CHECK(c5.generators[1] == f2_vector(5));
  CHECK(c5.classification == CanonicalClass::type_two);
}

TEST_CASE("interior points reduce by the canonical generators") {
  ReductionReport r4 = interior_reduction_check(4, 2, 8);
  CHECK(r4.passed);
  CHECK(r4.violations.empty());
  CHECK(r4.interior_points > 0);
  CHECK(r4.reduced_by_f1 == r4.interior_points);
  CHECK(r4.reduced_by_f2 == 0);

  ReductionReport r5 = interior_reduction_check(5, 3, 8);
  CHECK(r5.passed);
  CHECK(r5.interior_points == r5.reduced_by_f1 + r5.reduced_by_f2);
  CHECK(r5.reduced_by_f2 > 0);  // the second generator itself needs F2
}
