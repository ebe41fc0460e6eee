#include "bourbakikit/rees.hpp"

#include <algorithm>
#include <stdexcept>

namespace bbk {

namespace {

void require_n(int n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
}

void require_len(const LatticeVector& a, int n) {
  if (static_cast<int>(a.size()) != n + 1)
    throw std::invalid_argument("lattice vector length must be n+1");
}

// All circularly independent index sets (0-based), flattened with their sizes.
struct ConeData {
  int n = 0;
  std::vector<std::vector<int>> sets;
  std::vector<long long> weight;  // |S| - 1, the multiplier of the t-coordinate
};

ConeData make_cone_data(int n) {
  ConeData cd;
  cd.n = n;
  for (int l = 2; l <= n / 2; ++l)
    for (const auto& s : cycle_independent_sets(n, l)) {
      std::vector<int> zero_based(s.size());
      for (std::size_t q = 0; q < s.size(); ++q) zero_based[q] = s[q] - 1;
      cd.sets.push_back(std::move(zero_based));
      cd.weight.push_back(static_cast<long long>(s.size()) - 1);
    }
  return cd;
}

ConeStatus cone_status(const ConeData& cd, const LatticeVector& a) {
  const int n = cd.n;
  bool tight = false;
  long long total = 0;
  for (int i = 0; i <= n; ++i) {
    if (a[i] < 0) return ConeStatus::outside;
    if (a[i] == 0) tight = true;
    if (i < n) total += a[i];
  }
  const long long t = a[n];
  for (std::size_t q = 0; q < cd.sets.size(); ++q) {
    long long lhs = 0;
    for (int i : cd.sets[q]) lhs += a[i];
    const long long rhs = cd.weight[q] * t;
    if (lhs < rhs) return ConeStatus::outside;
    if (lhs == rhs) tight = true;
  }
  const long long rhs = (n - 2) * t;
  if (total < rhs) return ConeStatus::outside;
  if (total == rhs) tight = true;
  return tight ? ConeStatus::boundary : ConeStatus::interior;
}

// Depth-first search over s in descending lexicographic order; s[n-1] is
// forced by the t-coordinate. Writes the witness into s and returns true on
// the first full assignment with every forced r_i nonnegative.
bool decompose_dfs(const LatticeVector& a, int n, long long T, int pos, long long rem,
                   std::vector<long long>& s) {
  if (pos == n - 1) {
    s[pos] = rem;
    return a[pos] - T + s[pos] + s[pos - 1] >= 0 && a[0] - T + s[0] + s[pos] >= 0;
  }
  for (long long v = rem; v >= 0; --v) {
    s[pos] = v;
    // r_pos shrinks with v, so the first failure ends the loop.
    if (pos >= 1 && a[pos] - T + s[pos] + s[pos - 1] < 0) return false;
    if (decompose_dfs(a, n, T, pos + 1, rem - v, s)) return true;
  }
  return false;
}

bool decompose(const LatticeVector& a, int n, std::vector<long long>& s) {
  const long long T = a[n];
  if (T < 0) return false;
  return decompose_dfs(a, n, T, 0, T, s);
}

}  // namespace

std::pair<std::vector<LatticeVector>, std::vector<LatticeVector>> semigroup_generators(int n) {
  require_n(n);
  std::vector<LatticeVector> e, f;
  for (int i = 0; i < n; ++i) {
    LatticeVector v(n + 1, 0);
    v[i] = 1;
    e.push_back(std::move(v));
  }
  for (int j = 0; j < n; ++j) {
    LatticeVector v(n + 1, 1);
    v[j] = 0;
    v[(j + 1) % n] = 0;
    f.push_back(std::move(v));
  }
  return {std::move(e), std::move(f)};
}

std::vector<std::vector<int>> cycle_independent_sets(int n, int l) {
  require_n(n);
  if (l < 2 || l > n / 2)
    throw std::invalid_argument("independent set size out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> pick(l);
  // Lexicographic combination scan with the circular gap conditions.
  auto rec = [&](auto&& self, int depth, int next) -> void {
    if (depth == l) {
      if (pick[l - 1] - pick[0] <= n - 2) out.push_back(pick);
      return;
    }
    for (int v = next; v <= n; ++v) {
      if (depth > 0 && v - pick[depth - 1] < 2) continue;
      pick[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

ConeStatus cone_membership(const LatticeVector& a, int n) {
  require_n(n);
  require_len(a, n);
  return cone_status(make_cone_data(n), a);
}

std::optional<SemigroupDecomposition> semigroup_membership(const LatticeVector& a, int n) {
  require_n(n);
  require_len(a, n);
  std::vector<long long> s(n, 0);
  if (!decompose(a, n, s)) return std::nullopt;
  SemigroupDecomposition d;
  d.s = s;
  d.r.resize(n);
  const long long T = a[n];
  for (int i = 0; i < n; ++i) d.r[i] = a[i] - T + s[i] + s[(i + n - 1) % n];
  return d;
}

NormalityReport normality_check(int n, int t_max, int box) {
  require_n(n);
  NormalityReport rep;
  rep.n = n;
  rep.t_max = t_max;
  rep.box = box;
  const ConeData cd = make_cone_data(n);
  LatticeVector a(n + 1, 0);
  std::vector<long long> scratch(n, 0);
  for (long long t = 0; t <= t_max; ++t) {
    a.assign(n + 1, 0);
    a[n] = t;
    while (true) {
      ++rep.lattice_points;
      if (cone_status(cd, a) != ConeStatus::outside) {
        ++rep.cone_points;
        if (decompose(a, n, scratch))
          ++rep.decomposable;
        else
          rep.counterexamples.push_back(a);
      }
      int k = 0;
      while (k < n && a[k] == box) a[k++] = 0;
      if (k == n) break;
      ++a[k];
    }
  }
  rep.passed = rep.counterexamples.empty();
  return rep;
}

CanonicalModuleResult canonical_generators(int n, int t_max, int box) {
  require_n(n);
  CanonicalModuleResult res;
  res.n = n;
  res.t_max = t_max;
  res.box = box;
  const ConeData cd = make_cone_data(n);
  auto [egens, fgens] = semigroup_generators(n);
  std::vector<LatticeVector> gens = egens;
  gens.insert(gens.end(), fgens.begin(), fgens.end());

  LatticeVector a(n + 1, 1);
  LatticeVector q(n + 1, 0);
  for (long long t = 1; t <= t_max; ++t) {
    std::fill(a.begin(), a.end() - 1, 1);
    a[n] = t;
    if (box < 1) break;
    while (true) {
      if (cone_status(cd, a) == ConeStatus::interior) {
        bool minimal = true;
        for (const auto& g : gens) {
          for (int i = 0; i <= n; ++i) q[i] = a[i] - g[i];
          if (cone_status(cd, q) == ConeStatus::interior) {
            minimal = false;
            break;
          }
        }
        if (minimal) res.generators.push_back(a);
      }
      int k = 0;
      while (k < n && a[k] == box) a[k++] = 1;
      if (k == n) break;
      ++a[k];
    }
  }
  std::sort(res.generators.begin(), res.generators.end(),
            [n](const LatticeVector& x, const LatticeVector& y) {
              if (x[n] != y[n]) return x[n] < y[n];
              return x < y;
            });

  const LatticeVector f1(n + 1, 1);
  const bool odd = n % 2 == 1;
  const int k = (n - 1) / 2;
  LatticeVector f2;
  if (odd) {
    f2.assign(n + 1, k);
    f2[n] = k + 1;
  }

  bool ambiguous = false;
  for (const auto& p : res.generators) {
    for (int i = 0; i < n; ++i)
      if (p[i] == box) ambiguous = true;
    // The known odd-n second generator legitimately sits at t = k+1.
    if (p[n] == t_max && !(odd && p == f2)) ambiguous = true;
  }
  if (odd && (k > box || k + 1 > t_max)) ambiguous = true;  // region cannot see f2

  if (ambiguous) {
    res.classification = CanonicalClass::inconclusive;
  } else if (res.generators.size() == 1 && res.generators[0] == f1) {
    res.classification = CanonicalClass::gorenstein;
  } else if (odd && res.generators.size() == 2 && res.generators[0] == f1 &&
             res.generators[1] == f2) {
    res.classification = CanonicalClass::type_two;
  } else {
    res.classification = CanonicalClass::inconclusive;
  }
  return res;
}

ReductionReport interior_reduction_check(int n, int t_max, int box) {
  require_n(n);
  ReductionReport rep;
  rep.n = n;
  rep.t_max = t_max;
  rep.box = box;
  const ConeData cd = make_cone_data(n);
  const LatticeVector f1(n + 1, 1);
  const bool odd = n % 2 == 1;
  const int k = (n - 1) / 2;
  LatticeVector f2;
  if (odd) {
    f2.assign(n + 1, k);
    f2[n] = k + 1;
  }

  LatticeVector a(n + 1, 1);
  LatticeVector q(n + 1, 0);
  std::vector<long long> scratch(n, 0);
  for (long long t = 1; t <= t_max; ++t) {
    std::fill(a.begin(), a.end() - 1, 1);
    a[n] = t;
    if (box < 1) break;
    while (true) {
      if (cone_status(cd, a) == ConeStatus::interior) {
        ++rep.interior_points;
        for (int i = 0; i <= n; ++i) q[i] = a[i] - f1[i];
        if (decompose(q, n, scratch)) {
          ++rep.reduced_by_f1;
        } else if (odd) {
          for (int i = 0; i <= n; ++i) q[i] = a[i] - f2[i];
          if (decompose(q, n, scratch))
            ++rep.reduced_by_f2;
          else
            rep.violations.push_back(a);
        } else {
          rep.violations.push_back(a);
        }
      }
      int kk = 0;
      while (kk < n && a[kk] == box) a[kk++] = 1;
      if (kk == n) break;
      ++a[kk];
    }
  }
  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace bbk
