#pragma once

#include <string>
#include <vector>

#include "bourbakikit/rational.hpp"

namespace bbk {

// Exponent vector of a monomial in x_1..x_n. Length is the ambient variable
// count; entries are nonnegative.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);

// Degrevlex: higher total degree wins; on equal degree the monomial whose
// last differing exponent is smaller is the larger one. Returns -1/0/+1 with
// +1 meaning a comes strictly before b (a is the larger monomial).
int compare_monomials(const ExponentVector& a, const ExponentVector& b);

struct Term {
  ExponentVector e;
  Rational c;
};

// Sparse multivariate polynomial over Q with a fixed variable count. Terms
// are kept strictly sorted in descending monomial order with no zero
// coefficients, so equal polynomials have identical term sequences and the
// serialized form is canonical.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : n_(nvars) {}

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(int nvars, ExponentVector e, Rational c);
  // 1-based variable index.
  static Polynomial variable(int nvars, int i);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Leading term under the fixed order. Precondition: nonzero.
  const Term& leading_term() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // True when every term has the same total degree (vacuously for 0).
  bool is_homogeneous() const;

  // Accumulate c * x^e, dropping the term if the sum cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

// Quotient f/g when g divides f exactly; throws std::domain_error otherwise.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
// Nonthrowing variant; returns false (leaving q untouched) when g does not
// divide f.
bool try_exact_div(const Polynomial& f, const Polynomial& g, Polynomial* q);

bool divides(const ExponentVector& a, const ExponentVector& b);

// Total order on polynomials: compare term lists lexicographically (monomial
// order first, then coefficient). Used to sort generator lists canonically.
int compare_canonical(const Polynomial& a, const Polynomial& b);

// Substitute integers for the variables.
mpq_class evaluate(const Polynomial& f, const std::vector<long>& point);

// Human-readable form, e.g. "x1*x3^2 - 2/3*x2 + 1".
std::string to_string(const Polynomial& f);
// Strict parser for the same syntax (sums of coefficient-monomial products).
Polynomial parse_polynomial(const std::string& text, int nvars);

}  // namespace bbk
