#include "bourbakikit/bourbaki.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "bourbakikit/poly_gcd.hpp"
#include "bourbakikit/rng.hpp"

namespace bbk {

IdealGens make_ideal_gens(int n, std::vector<Polynomial> gens, int twist) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (Polynomial& g : gens)
    if (!g.is_zero()) out.push_back(normalize_primitive(g));
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return compare_canonical(a, b) > 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  IdealGens res;
  res.n = n;
  res.gens = std::move(out);
  res.twist = twist;
  res.generated_degree = common_degree(res.gens);
  return res;
}

int common_degree(const std::vector<Polynomial>& gens) {
  if (gens.empty()) return -1;
  int deg = -1;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) return -1;
    int d = g.degree();
    if (deg == -1)
      deg = d;
    else if (deg != d)
      return -1;
  }
  return deg;
}

bool height_ge_two(const IdealGens& gens) {
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : gens.gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return false;
  return gcd_of_list(nonzero).is_one();
}

BourbakiCertificate check_bourbaki_map(const PolyMatrix& iota_phi, int s) {
  if (s > iota_phi.cols()) throw std::invalid_argument("minor size exceeds column count");
  BourbakiCertificate cert;
  cert.matrix_used = iota_phi;
  cert.minor_size = s;
  cert.gcd_witness = Polynomial::zero(iota_phi.nvars());
  if (s < 1 || s > iota_phi.rows()) {
    cert.note = "rank-deficient map";
    return cert;
  }
  cert.gcd_witness = minors_gcd(iota_phi, s);
  if (cert.gcd_witness.is_zero())
    cert.note = "all minors of the requested size vanish";
  else if (cert.gcd_witness.is_one()) {
    cert.verdict = true;
    cert.note = "unit minor gcd";
  } else
    cert.note = "minor gcd is not a unit";
  return cert;
}

BourbakiCertificate check_presentation_criterion(const PolyMatrix& psi, int beta0, int r) {
  if (beta0 != psi.rows()) throw std::invalid_argument("row count does not match beta0");
  if (beta0 < r) throw std::invalid_argument("fewer generators than the stated rank");
  const int t = beta0 - r + 1;
  BourbakiCertificate cert;
  cert.matrix_used = psi;
  cert.minor_size = t;
  cert.gcd_witness = Polynomial::zero(psi.nvars());
  if (t < 1 || t > psi.rows() || t > psi.cols()) {
    cert.note = "rank-deficient presentation";
    return cert;
  }
  cert.gcd_witness = minors_gcd(psi, t);
  if (cert.gcd_witness.is_zero())
    cert.note = "all minors of the requested size vanish";
  else if (cert.gcd_witness.is_one()) {
    cert.verdict = true;
    cert.note = "unit minor gcd";
  } else
    cert.note = "minor gcd is not a unit";
  return cert;
}

ExtractionResult extract_bourbaki_ideal(const PolyMatrix& presentation) {
  const int alpha = presentation.rows();
  if (alpha < 2) throw std::invalid_argument("extraction needs at least two rows");

  ExtractionResult res;
  res.c = select_full_rank_submatrix(presentation, alpha - 1);
  std::vector<Polynomial> minors = signed_maximal_minors(res.c);
  std::vector<Polynomial> nonzero;
  for (const Polynomial& f : minors)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty()) throw std::runtime_error("all maximal minors vanish");
  res.divisor = gcd_of_list(nonzero);

  std::vector<Polynomial> gens;
  for (const Polynomial& f : nonzero) gens.push_back(exact_div(f, res.divisor));
  res.ideal = make_ideal_gens(presentation.nvars(), std::move(gens));
  return res;
}

PolyMatrix taylor_presentation(const IdealGens& monomial_gens) {
  const int k = static_cast<int>(monomial_gens.gens.size());
  if (k < 2) throw std::invalid_argument("need at least two generators");
  std::vector<ExponentVector> exps;
  exps.reserve(k);
  for (const Polynomial& g : monomial_gens.gens) {
    if (g.is_zero() || !g.is_monomial())
      throw std::invalid_argument("generators must be nonzero monomials");
    exps.push_back(g.leading_term().e);
  }
  const int n = monomial_gens.n;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  PolyMatrix m(n, k, static_cast<int>(pairs.size()));
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    auto [i, j] = pairs[c];
    ExponentVector lcm(n);
    for (int v = 0; v < n; ++v) lcm[v] = std::max(exps[i][v], exps[j][v]);
    ExponentVector ei(n), ej(n);
    for (int v = 0; v < n; ++v) {
      ei[v] = lcm[v] - exps[i][v];
      ej[v] = lcm[v] - exps[j][v];
    }
    m.at(i, static_cast<int>(c)) = Polynomial::monomial(n, ei, 1);
    m.at(j, static_cast<int>(c)) = Polynomial::monomial(n, ej, -1);
  }
  for (int i = 0; i < k; ++i) m.row_labels.push_back(Label::of_name("g" + std::to_string(i + 1)));
  for (auto [i, j] : pairs)
    m.col_labels.push_back(
        Label::of_name("g" + std::to_string(i + 1) + "g" + std::to_string(j + 1)));
  return m;
}

long long bourbaki_number(long long k, long long r, long long e1) { return k * (r - 1) - e1; }

long long koszul_bourbaki_number(int n, int i) {
  return bourbaki_number(i, cycle_rank(n, i), e1_of_cycle(n, i));
}

long long e1_from_resolution(const GradedTwists& res) {
  long long e1 = 0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    long long s = std::accumulate(res[i].begin(), res[i].end(), 0LL);
    e1 += (i % 2 == 0) ? s : -s;
  }
  return e1;
}

HilbertBurchResult hilbert_burch(const std::vector<int>& a_twists,
                                 const std::vector<int>& b_twists, long long k) {
  const long long alpha = static_cast<long long>(a_twists.size());
  const long long beta = static_cast<long long>(b_twists.size());
  if (alpha <= beta + 1)
    throw std::invalid_argument("generator count must exceed syzygy count by at least two");
  long long sum_a = std::accumulate(a_twists.begin(), a_twists.end(), 0LL);
  long long sum_b = std::accumulate(b_twists.begin(), b_twists.end(), 0LL);
  HilbertBurchResult res;
  res.m = sum_b - sum_a + k * (alpha - beta - 1);
  std::vector<int> syz = b_twists;
  syz.insert(syz.end(), static_cast<std::size_t>(alpha - beta - 1), static_cast<int>(k));
  res.resolution = {a_twists, std::move(syz)};
  return res;
}

GenericSearchResult generic_bourbaki_search(const PolyMatrix& a, int alpha, int r,
                                            std::uint64_t seed, int max_attempts) {
  if (a.cols() != alpha) throw std::invalid_argument("column count does not match alpha");
  if (r < 1) throw std::invalid_argument("rank must be positive");
  GenericSearchResult res;
  if (r == 1) {
    // Nothing to split off a rank-one module; the empty map succeeds.
    res.found = true;
    res.map = PolyMatrix(a.nvars(), a.rows(), 0);
    res.certificate.matrix_used = res.map;
    res.certificate.minor_size = 0;
    res.certificate.gcd_witness = Polynomial::constant(a.nvars(), 1);
    res.certificate.verdict = true;
    res.certificate.note = "rank one, empty coefficient matrix";
    res.log.push_back("rank one module, trivial success");
    return res;
  }

  const int s = r - 1;
  BoundedRng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<std::vector<long long>> lambda(
        static_cast<std::size_t>(alpha), std::vector<long long>(s));
    std::vector<std::vector<Rational>> weights(
        static_cast<std::size_t>(s), std::vector<Rational>(alpha));
    for (int i = 0; i < alpha; ++i)
      for (int j = 0; j < s; ++j) {
        lambda[i][j] = rng.uniform(-100, 100);
        weights[j][i] = static_cast<long>(lambda[i][j]);
      }
    PolyMatrix candidate = combine_columns(a, weights);
    BourbakiCertificate cert = check_bourbaki_map(candidate, s);
    res.attempts_used = attempt;
    res.log.push_back("attempt " + std::to_string(attempt) + ": " + cert.note);
    if (cert.verdict) {
      res.found = true;
      res.lambda = std::move(lambda);
      res.map = std::move(candidate);
      res.certificate = std::move(cert);
      return res;
    }
  }
  return res;
}

}  // namespace bbk
