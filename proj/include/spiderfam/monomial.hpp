// Exponent-vector monomials, weight vectors, and monomial orders.
//
// Ring layout: variable 0 is the deformation variable eps, variables
// 1..r are the coordinates x_1..x_r. Polynomials with no eps dependence
// simply keep exponent 0 in slot 0.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spiderfam/rational.hpp"

namespace spiderfam {

class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial var(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned exp(std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exps() const { return exps_; }

  bool is_one() const;
  unsigned total_degree() const;
  // Total degree over x_1..x_r only (eps excluded).
  unsigned coord_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool divides(const Monomial& a, const Monomial& b);    // a | b
  friend Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, pre a | b
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<unsigned> exps_;
};

// Storage-only comparator for term maps (plain lex on the exponent
// vector). Not a monomial order; use MonomialOrder for the algebra.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.exps() < b.exps(); }
};

// Positive integer weights of x_1..x_r; eps always has weight 0.
class WeightVector {
 public:
  explicit WeightVector(std::vector<long> w);

  std::size_t size() const { return w_.size(); }
  long weight(std::size_t leg) const { return w_[leg]; }  // 0-based: weight of x_{leg+1}
  const std::vector<long>& values() const { return w_; }

  long weight_of(const Monomial& m) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }

  std::string str() const;

 private:
  std::vector<long> w_;
};

// Total multiplicative order with 1 minimal and eps below every x_i.
//
// weighted_degrevlex: weighted degree (eps weight 0) first, then total
// x-degree, then reverse lex on x_r..x_1, then eps exponent ascending.
// lex: priority list of variable indices, most significant first; any
// variables left out (typically eps) are appended least significant.
class MonomialOrder {
 public:
  static MonomialOrder weighted_degrevlex(WeightVector w);
  static MonomialOrder lex(std::vector<std::size_t> priority);

  // -1 when a < b, 0 when equal, +1 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  enum class Kind { WeightedDegrevlex, Lex };
  MonomialOrder(Kind kind, WeightVector w, std::vector<std::size_t> priority)
      : kind_(kind), weights_(std::move(w)), priority_(std::move(priority)) {}

  Kind kind_;
  WeightVector weights_;
  std::vector<std::size_t> priority_;
};

// Variable names for printing: index 0 -> "eps"; x-coordinates are
// x, y, z when r <= 3 and x1..xr otherwise.
std::vector<std::string> ring_names(std::size_t num_legs);

}  // namespace spiderfam
