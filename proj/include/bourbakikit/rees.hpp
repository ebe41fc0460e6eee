#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace bbk {

// Exponent vector of a monomial x_1^a_1 .. x_n^a_n t^a_{n+1} in the Rees
// algebra of the circular squarefree monomial ideal; length n+1.
using LatticeVector = std::vector<long long>;

// Nonnegative weights with a = sum r_i e_i + sum s_j f_j.
struct SemigroupDecomposition {
  std::vector<long long> r;
  std::vector<long long> s;
};

enum class ConeStatus { outside, boundary, interior };

// e_i = i-th unit vector; f_j = exponent of x t / (x_j x_{j+1}) with the pair
// wrapping at (n, 1): ones everywhere except zeros at j and its circular
// successor, t-coordinate 1.
std::pair<std::vector<LatticeVector>, std::vector<LatticeVector>> semigroup_generators(int n);

// Size-l subsets of {1..n} with no two elements circularly adjacent, in
// ascending lexicographic order.
std::vector<std::vector<int>> cycle_independent_sets(int n, int l);

// Position of a relative to the cone cut out by: every coordinate >= 0; for
// each circularly independent set S, sum_{i in S} a_i >= (|S|-1) a_{n+1}; and
// a_1 + .. + a_n >= (n-2) a_{n+1}. Interior means every inequality is strict.
ConeStatus cone_membership(const LatticeVector& a, int n);

// First decomposition over the generators in descending lexicographic
// s-order, or nullopt when a is not in the semigroup. The weights s_j are
// searched with sum s_j = a_{n+1}; each r_i is then forced.
std::optional<SemigroupDecomposition> semigroup_membership(const LatticeVector& a, int n);

struct NormalityReport {
  int n = 0;
  int t_max = 0;
  int box = 0;
  long long lattice_points = 0;  // vectors enumerated in the bounded region
  long long cone_points = 0;     // of those, not outside the cone
  long long decomposable = 0;
  std::vector<LatticeVector> counterexamples;  // cone points without a decomposition
  bool passed = false;
};

// Desk-scale normality: every lattice point of the cone with coordinates in
// [0, box] and t-coordinate in [0, t_max] must decompose over the generators.
NormalityReport normality_check(int n, int t_max, int box);

enum class CanonicalClass { gorenstein, type_two, inconclusive };

struct CanonicalModuleResult {
  int n = 0;
  int t_max = 0;
  int box = 0;
  std::vector<LatticeVector> generators;  // sorted by t-coordinate, then lex
  CanonicalClass classification = CanonicalClass::inconclusive;
};

// Minimal interior lattice points of the bounded region: p is kept when no
// single generator g leaves p - g interior. Classification reads the minimal
// set: exactly the all-ones vector means Gorenstein; for odd n = 2k+1,
// all-ones plus (k,..,k,k+1) means type two. A minimal point touching the box
// (other than the known second generator's t-coordinate) is reported as
// inconclusive rather than trusted.
CanonicalModuleResult canonical_generators(int n, int t_max, int box);

struct ReductionReport {
  int n = 0;
  int t_max = 0;
  int box = 0;
  long long interior_points = 0;
  long long reduced_by_f1 = 0;  // F - F1 decomposes
  long long reduced_by_f2 = 0;  // odd n only: F - F1 fails but F - F2 decomposes
  std::vector<LatticeVector> violations;
  bool passed = false;
};

// For every interior lattice point F of the bounded region, F - F1 must lie
// in the semigroup, or for odd n, F - F1 or F - F2 must.
ReductionReport interior_reduction_check(int n, int t_max, int box);

}  // namespace bbk
