#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bourbakikit/bourbaki.hpp"
#include "bourbakikit/koszul.hpp"
#include "bourbakikit/matrix.hpp"

namespace bbk {

// One explicit Bourbaki-sequence construction: the chosen free submodule F,
// the restricted map whose minors carry the height certificate, the cokernel
// presentation used for extraction, and the extracted ideal beside its
// frozen expected value.
struct CatalogBundle {
  int n = 0;
  int i = 0;
  std::vector<LabelCombo> f_generators;
  PolyMatrix map_matrix{0, 0, 0};     // restriction of the differential to F
  PolyMatrix presentation{0, 0, 0};   // presentation of the cokernel, when built
  PolyMatrix c{0, 0, 0};              // column selection actually fed to extraction
  BourbakiCertificate certificate;
  IdealGens ideal;
  Polynomial divisor{0};              // gcd stripped from the maximal minors
  bool has_expected = false;
  IdealGens expected_ideal;
  bool matches_expected = false;

  // Determinant witness that the minor gcd avoids the last variable; only the
  // circular-monomial construction fills this in.
  bool has_witness = false;
  PolyMatrix witness_submatrix{0, 0, 0};
  Polynomial witness_value{0};
  Polynomial witness_expected{0};
  bool witness_matches = false;
  bool witness_avoids_last_variable = false;
};

// Rank-(n-2) cycle module: F spanned by the hat duals of the single indices
// outside {i, j}; the cokernel is (x_i, x_j) with twist 2-n.
CatalogBundle z_top(int n, int i, int j);

// Rank-C(n-1,2) cycle module: F spanned by hat duals of the non-circular
// pairs; the cokernel is the ideal of circular squarefree monomials
// prod(x)/(x_i x_j) over the n cyclically adjacent pairs.
CatalogBundle z_nminus2(int n);

// Degree-2 cycle module: F spanned by consecutive differences
// e_{i,i+1} - e_{i+1,i+2}; extraction runs on the block matrix with first row
// D_j = (x_j + x_{j+2}, x_{j+3}, ..., x_n) and diagonal blocks -x_{i+1} I.
CatalogBundle z2(int n);

// True when every generator of z2(n) is homogeneous of degree n-2.
bool z2_degree_check(int n);

// True when i >= max{i*C(n-1,i-1) - n*C(n-1,i-2), (n-i)*C(n-1,i) - n*C(n-1,i+1)},
// the degree bound a basis-subset construction must satisfy; false means no
// such construction exists.
bool multigraded_obstruction(int n, int i);

// The fixed n=6, i=3 construction: nine consecutive differences along the ten
// triangle-free triples; extraction divides the eleven cofactor minors by x1^4.
CatalogBundle n6_z3_explicit();

// The failing n=6, i=3 basis choice whose minor gcd is divisible by x2*x4*x6.
BourbakiCertificate n6_z3_bad_configuration();

struct MultigradedSearchReport {
  int n = 0;
  int i = 0;
  long long rank = 0;          // cycle module rank r; subsets have size r-1
  long long total = 0;         // C(#basis, r-1)
  long long evaluated = 0;
  long long passing = 0;
  long long failing = 0;
  long long pruned = 0;        // cut by the sibling rule without evaluation
  long long unexplored = 0;    // left behind a budget stop
  bool complete = false;
  std::uint64_t budget = 0;
  std::vector<std::vector<std::vector<int>>> passing_subsets;
};

// Exhaustive scan of all (r-1)-subsets of the canonical K_i basis, testing
// each restricted differential for unit minor gcd. Subsets keeping too many
// faces of one (i+1)-set are pruned: picking i of them forces a common
// variable into every maximal minor.
MultigradedSearchReport multigraded_exhaustive_search(int n, int i, std::uint64_t budget);

}  // namespace bbk
