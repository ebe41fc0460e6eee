#include "bourbakikit/poly_gcd.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bbk {

ExponentVector monomial_content(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("monomial content of zero polynomial");
  ExponentVector m = f.terms().front().e;
  for (const Term& t : f.terms())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], t.e[k]);
  return m;
}

Polynomial normalize_primitive(const Polynomial& f) {
  if (f.is_zero()) return f;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Term& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (f.leading_term().c < 0) scale = -scale;
  return scale * f;
}

namespace {

int degree_in(const Polynomial& f, int var) {
  int d = 0;
  for (const Term& t : f.terms()) d = std::max(d, t.e[var]);
  return d;
}

// Highest variable index (0-based) appearing in f, or -1 for constants.
int top_variable(const Polynomial& f) {
  int top = -1;
  for (const Term& t : f.terms())
    for (int k = static_cast<int>(t.e.size()) - 1; k > top; --k)
      if (t.e[k] > 0) top = k;
  return top;
}

// Coefficient of var^k, as a polynomial with zero exponent in var.
Polynomial coefficient_of(const Polynomial& f, int var, int k) {
  Polynomial c(f.nvars());
  for (const Term& t : f.terms()) {
    if (t.e[var] != k) continue;
    ExponentVector e = t.e;
    e[var] = 0;
    c.add_term(e, t.c);
  }
  return c;
}

Polynomial shift_exponents(const Polynomial& f, const ExponentVector& m, int dir) {
  Polynomial r(f.nvars());
  for (const Term& t : f.terms()) {
    ExponentVector e = t.e;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += dir * m[k];
    r.add_term(e, t.c);
  }
  return r;
}

Polynomial content_in(const Polynomial& f, int var) {
  std::vector<Polynomial> coeffs;
  int d = degree_in(f, var);
  for (int k = 0; k <= d; ++k) {
    Polynomial c = coefficient_of(f, var, k);
    if (!c.is_zero()) coeffs.push_back(std::move(c));
  }
  return gcd_of_list(coeffs);
}

// Determinant by exact fraction elimination; only the zero test matters here.
mpq_class rational_det(std::vector<std::vector<mpq_class>> m) {
  const std::size_t k = m.size();
  mpq_class result = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col] == 0) continue;
      mpq_class factor = m[r][col] / m[col][col];
      for (std::size_t cc = col; cc < k; ++cc) m[r][cc] -= factor * m[col][cc];
    }
  }
  return result;
}

// Coefficient vector in var after substituting point[k] for every other
// variable; c[k] is the coefficient of var^k.
std::vector<mpq_class> specialize(const Polynomial& f, int var, const std::vector<long>& point) {
  std::vector<mpq_class> c(degree_in(f, var) + 1, 0);
  for (const Term& t : f.terms()) {
    mpq_class v = t.c;
    for (std::size_t k = 0; k < t.e.size(); ++k) {
      if (static_cast<int>(k) == var || t.e[k] == 0) continue;
      mpz_class base(point[k]);
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t.e[k]));
      v *= pw;
    }
    c[static_cast<std::size_t>(t.e[var])] += v;
  }
  return c;
}

// Coprimality certificate for polynomials primitive with respect to var. A
// common factor of positive degree in var forces the resultant in var to
// vanish identically; at a point where neither leading coefficient drops, the
// resultant of the specializations equals that resultant evaluated there, so
// a nonzero value rules the factor out. Inconclusive probes return false and
// the caller falls back to the remainder sequence.
bool coprime_by_resultant(const Polynomial& fp, const Polynomial& gp, int var) {
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  const int table = static_cast<int>(sizeof(primes) / sizeof(primes[0]));
  const int da = degree_in(fp, var);
  const int db = degree_in(gp, var);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<long> point(fp.nvars());
    for (std::size_t k = 0; k < point.size(); ++k) {
      long p = primes[(static_cast<int>(k) + 5 * attempt) % table];
      point[k] = (attempt % 2 == 1 && k % 2 == 1) ? -p : p;
    }
    std::vector<mpq_class> a = specialize(fp, var, point);
    std::vector<mpq_class> b = specialize(gp, var, point);
    if (a.back() == 0 || b.back() == 0) continue;  // degree dropped at this point
    const int size = da + db;
    std::vector<std::vector<mpq_class>> syl(size, std::vector<mpq_class>(size, 0));
    for (int r = 0; r < db; ++r)
      for (int k = 0; k <= da; ++k) syl[r][r + da - k] = a[k];
    for (int r = 0; r < da; ++r)
      for (int k = 0; k <= db; ++k) syl[db + r][r + db - k] = b[k];
    if (rational_det(std::move(syl)) != 0) return true;
  }
  return false;
}

// Pseudo-remainder of f by g with respect to var: the remainder of
// lc(g)^(deg f - deg g + 1) * f under division by g, which stays in the ring.
Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, int var) {
  int dg = degree_in(g, var);
  Polynomial lead_g = coefficient_of(g, var, dg);
  int df = degree_in(f, var);
  while (!f.is_zero() && (df = degree_in(f, var)) >= dg) {
    Polynomial lead_f = coefficient_of(f, var, df);
    ExponentVector shift(f.nvars(), 0);
    shift[var] = df - dg;
    f = lead_g * f - shift_exponents(lead_f * g, shift, +1);
  }
  return f;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("gcd across different rings");
  if (f.is_zero()) return normalize_primitive(g);
  if (g.is_zero()) return normalize_primitive(f);
  const int n = f.nvars();

  ExponentVector mf = monomial_content(f);
  ExponentVector mg = monomial_content(g);
  ExponentVector m(n);
  for (int k = 0; k < n; ++k) m[k] = std::min(mf[k], mg[k]);
  Polynomial a = shift_exponents(f, mf, -1);
  Polynomial b = shift_exponents(g, mg, -1);
  Polynomial common = Polynomial::monomial(n, m, 1);

  if (a.is_constant() || b.is_constant()) return normalize_primitive(common);

  int var = std::max(top_variable(a), top_variable(b));
  int da = degree_in(a, var), db = degree_in(b, var);
  if (da == 0 || db == 0) {
    // One side does not involve the main variable; it can only share factors
    // with the other side's coefficient content.
    Polynomial side = da == 0 ? a : b;
    Polynomial other_content = content_in(da == 0 ? b : a, var);
    return normalize_primitive(common * poly_gcd(side, other_content));
  }

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = poly_gcd(ca, cb);
  Polynomial fp = exact_div(a, ca);
  Polynomial gp = exact_div(b, cb);
  if (degree_in(fp, var) < degree_in(gp, var)) std::swap(fp, gp);

  // Dense coprime inputs are the expensive case for the remainder sequence;
  // settle them with the resultant certificate instead when it is conclusive.
  if (coprime_by_resultant(fp, gp, var)) return normalize_primitive(common * c);

  // Primitive PRS on the primitive parts.
  while (true) {
    if (degree_in(gp, var) == 0) {
      // A nonzero remainder of degree zero in var means the primitive parts
      // are coprime; gp == 0 would have been caught below.
      fp = Polynomial::constant(f.nvars(), 1);
      break;
    }
    Polynomial r = pseudo_remainder(fp, gp, var);
    if (r.is_zero()) {
      fp = gp;
      break;
    }
    fp = std::move(gp);
    Polynomial rc = content_in(r, var);
    gp = exact_div(r, rc);
  }
  return normalize_primitive(common * c * fp);
}

Polynomial gcd_of_list(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw std::invalid_argument("gcd of empty list");
  Polynomial g = normalize_primitive(fs.front());
  for (std::size_t k = 1; k < fs.size(); ++k) {
    if (g.is_one()) break;
    g = poly_gcd(g, fs[k]);
  }
  return g;
}

}  // namespace bbk
