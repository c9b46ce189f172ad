// Sparse multivariate polynomials over Q.
#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spiderfam/monomial.hpp"
#include "spiderfam/rational.hpp"

namespace spiderfam {

class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialKeyLess>;

  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly term(Monomial m, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c on m, erasing the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Rational coeff(const Monomial& m) const;

  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Rational& c) const;
  Poly mul_term(const Monomial& m, const Rational& c) const;

  // Substitute the constant `value` for variable `var` (folds its powers
  // into the coefficients and zeroes the exponent).
  Poly substitute(std::size_t var, const Rational& value) const;

  // x_i -> factors[i] * x_i for every variable simultaneously.
  Poly scale_vars(const std::vector<Rational>& factors) const;

  // gcd of numerators / lcm of denominators; positive. Zero for the zero
  // polynomial.
  Rational content() const;

  bool has_variable(std::size_t var) const;
  bool integer_coefficients() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  TermMap terms_;
};

std::pair<Monomial, Rational> leading_term(const Poly& p, const MonomialOrder& ord);
Monomial leading_monomial(const Poly& p, const MonomialOrder& ord);

// Scale to integer coefficients with content 1 and positive leading
// coefficient under `ord`. Zero stays zero.
Poly normalized_integer(const Poly& p, const MonomialOrder& ord);

// Terms sorted descending under `ord`, e.g. "2*x*z - 2*eps^2*x^2 + ...".
std::string poly_to_string(const Poly& p, const MonomialOrder& ord,
                           const std::vector<std::string>& names);

}  // namespace spiderfam
