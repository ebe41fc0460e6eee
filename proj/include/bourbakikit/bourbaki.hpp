#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bourbakikit/koszul.hpp"
#include "bourbakikit/matrix.hpp"

namespace bbk {

struct IdealGens {
  int n = 0;
  std::vector<Polynomial> gens;
  // Grading shift carried as bookkeeping: the ideal equals the module up to
  // this twist when it came out of an extraction.
  int twist = 0;
  int generated_degree = -1;  // common degree of the generators, -1 when mixed
};

// Canonical form: generators normalized to primitive integer coefficients
// with positive leading term, sorted, deduplicated, zeros dropped.
IdealGens make_ideal_gens(int n, std::vector<Polynomial> gens, int twist = 0);

// Common total degree of a list of homogeneous polynomials, -1 when the list
// is empty, mixes degrees, or contains an inhomogeneous element.
int common_degree(const std::vector<Polynomial>& gens);

struct BourbakiCertificate {
  PolyMatrix matrix_used{0, 0, 0};
  int minor_size = 0;
  Polynomial gcd_witness{0};
  bool verdict = false;
  std::string note;
};

// An ideal has height >= 2 exactly when it is nonzero and its generators have
// unit gcd (the ambient polynomial ring is factorial).
bool height_ge_two(const IdealGens& gens);

// Criterion for a map into a free module, given as a matrix with s columns:
// the cokernel splits off an ideal of height >= 2 exactly when the s x s
// minors are not all zero and have unit gcd.
BourbakiCertificate check_bourbaki_map(const PolyMatrix& iota_phi, int s);

// Same criterion read off a presentation matrix psi with beta0 rows; the
// minors tested are those of size beta0 - r + 1.
BourbakiCertificate check_presentation_criterion(const PolyMatrix& psi, int beta0, int r);

struct ExtractionResult {
  IdealGens ideal;
  Polynomial divisor{0};   // gcd stripped from the signed maximal minors
  PolyMatrix c{0, 0, 0};   // the alpha x (alpha-1) matrix whose minors were taken
};

// Determinantal extraction: select alpha - 1 independent columns of the given
// alpha-row presentation, take signed maximal minors, divide out their gcd.
// The quotient generators span the height >= 2 ideal the cokernel's
// torsion-free part twists into.
ExtractionResult extract_bourbaki_ideal(const PolyMatrix& presentation);

// First syzygies of a monomial ideal in Taylor form: one column per generator
// pair (i < j), equal to (lcm/m_i) e_i - (lcm/m_j) e_j.
PolyMatrix taylor_presentation(const IdealGens& monomial_gens);

// m = k(r - 1) - e1.
long long bourbaki_number(long long k, long long r, long long e1);

// Bourbaki number of the i-th Koszul cycle module on n variables,
// i * C(n-1, i-1) - n * C(n-2, i-2) - i.
long long koszul_bourbaki_number(int n, int i);

// Alternating weighted sum of twists over a graded free resolution;
// twists[i] lists the shifts a with F_i a direct sum of R(-a).
long long e1_from_resolution(const GradedTwists& res);

struct HilbertBurchResult {
  long long m = 0;
  GradedTwists resolution;  // [0]: ideal generator twists, [1]: syzygy twists
};

// Twist of the height-two ideal cut out by a projective-dimension-one module
// generated in degree k with free resolution twists a (generators) and b
// (syzygies): m = sum(b) - sum(a) + k(alpha - beta - 1). Also returns the
// two-step resolution shape of the ideal, whose syzygy module gains
// alpha - beta - 1 extra copies of R(-k).
HilbertBurchResult hilbert_burch(const std::vector<int>& a_twists,
                                 const std::vector<int>& b_twists, long long k);

struct GenericSearchResult {
  bool found = false;
  int attempts_used = 0;
  std::vector<std::vector<long long>> lambda;  // alpha x (r-1) integer matrix
  PolyMatrix map{0, 0, 0};                     // A * lambda
  BourbakiCertificate certificate;
  std::vector<std::string> log;
};

// Randomized splitting search: sample integer matrices lambda with entries
// uniform in [-100, 100] and test the map criterion on A * lambda at minor
// size r - 1. Deterministic for a fixed seed.
GenericSearchResult generic_bourbaki_search(const PolyMatrix& a, int alpha, int r,
                                            std::uint64_t seed, int max_attempts = 20);

}  // namespace bbk
