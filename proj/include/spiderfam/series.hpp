// Arithmetic in the truncated power-series ring Q[t]/(t^n), Mobius
// generators u_a = t/(1-at), and the divided-difference coordinates
// v_i = Delta^{i-1} u_1 that embed a spider's legs into the ring.
#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "spiderfam/rational.hpp"
#include "spiderfam/spider_type.hpp"

namespace spiderfam {

class Poly;

class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(check_order(order)) {}
  TruncSeries(std::size_t order, std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncSeries one(std::size_t order) { return constant(Rational(1), order); }
  // The series t (zero when order == 1).
  static TruncSeries t(std::size_t order) {
    TruncSeries s(order);
    if (order > 1) s.coeffs_[1] = Rational(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size(); }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
  void set_coeff(std::size_t i, Rational v) { coeffs_[i] = std::move(v); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  // t-adic order: index of the first nonzero coefficient; nullopt for 0.
  std::optional<std::size_t> t_order() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

 private:
  static std::size_t check_order(std::size_t order);
  std::vector<Rational> coeffs_;  // coeffs_[i] = coefficient of t^i; size = order
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_neg(const TruncSeries& a);
TruncSeries series_scale(const TruncSeries& a, const Rational& c);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
// Multiplicative inverse; throws NotAUnitError when the constant term is 0.
TruncSeries series_invert(const TruncSeries& a);
TruncSeries series_pow(const TruncSeries& a, unsigned e);

namespace kernels {
// The Cauchy product's output coefficients are independent of each other,
// so the parallel kernel distributes them across threads. Serial kept as
// the test reference.
TruncSeries series_mul_serial(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul_parallel(const TruncSeries& a, const TruncSeries& b);
}  // namespace kernels

// u_a = t/(1-at) = sum_{k>=1} a^{k-1} t^k, truncated at t^n.
TruncSeries mobius_generator(const Rational& a, std::size_t n);

struct CoordinateSystem {
  SpiderType spider;
  std::vector<Rational> a_values;    // parameters of the Mobius generators
  std::vector<TruncSeries> mobius;   // u_{a_1}, ..., u_{a_r}
  std::vector<TruncSeries> coords;   // v_1, ..., v_r with ord_t(v_i) = i
};

// Coordinates from the default parameters a = 1..r. Checks ord_t(v_i) = i
// and, for the default parameters, leading coefficient (i-1)!.
CoordinateSystem divided_difference_coords(const SpiderType& spider);
// Same with explicit parameters (must be distinct and nonzero). Throws
// OrderCollapseError if some v_i fails to have t-adic order i.
CoordinateSystem divided_difference_coords(const SpiderType& spider,
                                           const std::vector<Rational>& a_values);

// Substitutes v_i for x_i and evaluates in Q[t]/(t^n). The polynomial must
// not involve the deformation variable.
TruncSeries eval_poly_as_series(const Poly& p, const CoordinateSystem& coords);

}  // namespace spiderfam
