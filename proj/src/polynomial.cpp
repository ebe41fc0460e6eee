#include "bourbakikit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bbk {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto check = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  if (!check(num) || !check(den))
    throw std::invalid_argument("bad rational literal: " + s);
  Rational q(num + "/" + den);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

int total_degree(const ExponentVector& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

int compare_monomials(const ExponentVector& a, const ExponentVector& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({ExponentVector(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(int nvars, ExponentVector e, Rational c) {
  if (static_cast<int>(e.size()) != nvars)
    throw std::invalid_argument("exponent vector length mismatch");
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent");
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  ExponentVector e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, std::move(e), 1);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].e) == 0);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && total_degree(terms_[0].e) == 0 && terms_[0].c == 1;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.front().e);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.front().e);
  for (const Term& t : terms_)
    if (total_degree(t.e) != d) return false;
  return true;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, const ExponentVector& key) { return compare_monomials(t.e, key) > 0; });
  if (it != terms_.end() && it->e == e) {
    it->c += c;
    if (it->c == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {e, c});
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Term& t : r.terms_) t.c = -t.c;
  return r;
}

// Merge of two descending term lists.
static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                     bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = compare_monomials(a[i].e, b[j].e);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().c = -out.back().c;
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().c = -out.back().c;
  }
  return out;
}

static void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomials from different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (a.terms_[k].e != b.terms_[k].e || a.terms_[k].c != b.terms_[k].c) return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a);
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a);
  r -= b;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  struct Desc {
    bool operator()(const ExponentVector& x, const ExponentVector& y) const {
      return compare_monomials(x, y) > 0;
    }
  };
  std::map<ExponentVector, Rational, Desc> acc;
  ExponentVector e(a.nvars());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      for (int k = 0; k < a.nvars(); ++k) e[k] = s.e[k] + t.e[k];
      auto [it, fresh] = acc.try_emplace(e, 0);
      it->second += s.c * t.c;
      if (it->second == 0) acc.erase(it);
    }
  }
  Polynomial r(a.nvars());
  for (auto& [mono, c] : acc) r.add_term(mono, c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return Polynomial::zero(a.nvars());
  Polynomial r(a.nvars());
  for (const Term& t : a.terms()) r.add_term(t.e, c * t.c);
  return r;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

bool try_exact_div(const Polynomial& f, const Polynomial& g, Polynomial* q) {
  require_same_ring(f, g);
  if (g.is_zero()) return false;
  Polynomial rem(f), quot(f.nvars());
  const Term& lg = g.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!divides(lg.e, lr.e)) return false;
    ExponentVector e(lr.e);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= lg.e[k];
    Rational c = lr.c / lg.c;
    Polynomial t = Polynomial::monomial(f.nvars(), e, c);
    quot += t;
    rem -= t * g;
  }
  if (q) *q = std::move(quot);
  return true;
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  Polynomial q;
  if (!try_exact_div(f, g, &q)) throw std::domain_error("exact_div: not divisible");
  return q;
}

int compare_canonical(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t m = std::min(ta.size(), tb.size());
  for (std::size_t k = 0; k < m; ++k) {
    int cmp = compare_monomials(ta[k].e, tb[k].e);
    if (cmp != 0) return cmp;
    if (ta[k].c != tb[k].c) return ta[k].c < tb[k].c ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

mpq_class evaluate(const Polynomial& f, const std::vector<long>& point) {
  if (point.size() != static_cast<std::size_t>(f.nvars()))
    throw std::invalid_argument("evaluation point length mismatch");
  mpq_class total = 0;
  for (const Term& t : f.terms()) {
    mpz_class m = 1;
    for (int k = 0; k < f.nvars(); ++k) {
      if (t.e[k] == 0) continue;
      mpz_class p;
      mpz_class base(point[k]);
      mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(t.e[k]));
      m *= p;
    }
    total += t.c * m;
  }
  return total;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_vars = total_degree(t.e) > 0;
    if (c != 1 || !has_vars) {
      out << c.get_num().get_str();
      if (c.get_den() != 1) out << "/" << c.get_den().get_str();
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (std::size_t k = 0; k < t.e.size(); ++k) {
      if (t.e[k] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << "x" << (k + 1);
      if (t.e[k] > 1) out << "^" << t.e[k];
    }
  }
  return out.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;
  explicit Scanner(const std::string& text) : s(text) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                ": " + what);
  }
  std::string integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
  Scanner sc(text);
  Polynomial result(nvars);
  bool first_term = true;
  while (!sc.eof()) {
    int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++sc.pos;
    } else if (!first_term) {
      sc.fail("expected '+' or '-' between terms");
    }
    first_term = false;

    Rational coeff = sign;
    ExponentVector e(nvars, 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char p = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        std::string num = sc.integer();
        std::string den = "1";
        if (sc.peek() == '/') {
          ++sc.pos;
          den = sc.integer();
        }
        coeff *= rational_from_string(num + "/" + den);
        saw_factor = true;
      } else if (p == 'x') {
        ++sc.pos;
        long idx = std::stol(sc.integer());
        if (idx < 1 || idx > nvars) sc.fail("variable index out of range");
        int exp = 1;
        if (sc.peek() == '^') {
          ++sc.pos;
          exp = static_cast<int>(std::stol(sc.integer()));
          if (exp < 0) sc.fail("negative exponent");
        }
        e[idx - 1] += exp;
        saw_factor = true;
      } else {
        sc.fail("expected a coefficient or variable");
      }
      if (sc.peek() == '*') {
        ++sc.pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) sc.fail("empty term");
    result.add_term(e, coeff);
  }
  return result;
}

}  // namespace bbk
