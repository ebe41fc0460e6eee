#pragma once

#include <utility>
#include <vector>

#include "bourbakikit/matrix.hpp"

namespace bbk {

long long binomial(int n, int k);

// Ascending 1-based k-subsets of {1..n} in colexicographic order.
std::vector<std::vector<int>> wedge_basis(int n, int k);

// Position of an ascending subset in wedge_basis(n, k).
int wedge_position(const std::vector<int>& s, int n);

// Twists of a finite graded free resolution: entry i lists the shifts a with
// F_i a direct sum of R(-a), multiplicities by repetition.
using GradedTwists = std::vector<std::vector<int>>;

struct KoszulMap {
  int n = 0;
  int k = 0;
  PolyMatrix matrix{0, 0, 0};
};

// Matrix of the Koszul differential K_k -> K_{k-1} over x_1..x_n, with wedge
// labels on both sides. Columns follow wedge_basis(n, k), rows
// wedge_basis(n, k-1); the column of e_S is sum_j (-1)^{j+1} x_{s_j} e_{S minus s_j}.
KoszulMap differential(int n, int k);

// Complement of s in {1..n} together with the sign of the permutation listing
// s then the complement, both ascending; so the hat dual of e_s is
// sign * e_complement.
std::pair<std::vector<int>, int> hat_index(const std::vector<int>& s, int n);

// Rank of the module of i-cycles of the Koszul complex on n variables.
long long cycle_rank(int n, int i);

// Its first Hilbert coefficient.
long long e1_of_cycle(int n, int i);

// A column expressed in wedge coordinates: sum of coeff * e_subset.
struct LabelCombo {
  std::vector<std::pair<Rational, std::vector<int>>> terms;
};

// Columns of the differential recombined per the wedge-labelled combinations;
// the result keeps the rows and gains new_labels as column labels when given.
PolyMatrix restrict_map(const KoszulMap& d, const std::vector<LabelCombo>& combos,
                        const std::vector<Label>& new_labels = {});

}  // namespace bbk
