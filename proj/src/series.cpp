#include "spiderfam/series.hpp"

#include <set>
#include <stdexcept>

#include "spiderfam/errors.hpp"
#include "spiderfam/poly.hpp"

namespace spiderfam {

std::size_t TruncSeries::check_order(std::size_t order) {
  if (order == 0) throw std::invalid_argument("TruncSeries: order must be >= 1");
  return order;
}

TruncSeries::TruncSeries(std::size_t order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  check_order(order);
  if (coeffs_.size() != order) throw std::invalid_argument("TruncSeries: coefficient count");
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::size_t> TruncSeries::t_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return i;
  return std::nullopt;
}

std::string TruncSeries::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  if (s.empty()) return "0";
  return s + " (mod t^" + std::to_string(order()) + ")";
}

namespace {

void check_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncSeries: truncation order mismatch");
}

}  // namespace

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
  return out;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
  return out;
}

TruncSeries series_neg(const TruncSeries& a) {
  TruncSeries out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out.set_coeff(i, -a.coeff(i));
  return out;
}

TruncSeries series_scale(const TruncSeries& a, const Rational& c) {
  TruncSeries out(a.order());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < a.order(); ++i) out.set_coeff(i, a.coeff(i) * c);
  return out;
}

namespace kernels {
namespace {

// One reused product temporary per output coefficient: the inner loop is
// allocation-light, which is what lets the parallel kernel scale.
inline Rational cauchy_coeff(const TruncSeries& a, const TruncSeries& b, std::size_t k) {
  mpq_class acc(0), tmp;
  for (std::size_t i = 0; i <= k; ++i) {
    if (a.coeff(i).is_zero() || b.coeff(k - i).is_zero()) continue;
    mpq_mul(tmp.get_mpq_t(), a.coeff(i).raw().get_mpq_t(), b.coeff(k - i).raw().get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
  return Rational(std::move(acc));
}

constexpr std::size_t kParallelOrderThreshold = 64;

}  // namespace

TruncSeries series_mul_serial(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries out(a.order());
  for (std::size_t k = 0; k < a.order(); ++k) out.set_coeff(k, cauchy_coeff(a, b, k));
  return out;
}

TruncSeries series_mul_parallel(const TruncSeries& a, const TruncSeries& b) {
  check_same_order(a, b);
  TruncSeries out(a.order());
  // Interleaved chunks: the cost of coefficient k grows linearly with k.
#pragma omp parallel for schedule(static, 8)
  for (std::size_t k = 0; k < a.order(); ++k) out.set_coeff(k, cauchy_coeff(a, b, k));
  return out;
}

}  // namespace kernels

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
#ifdef _OPENMP
  if (a.order() >= kernels::kParallelOrderThreshold) return kernels::series_mul_parallel(a, b);
#endif
  return kernels::series_mul_serial(a, b);
}

TruncSeries series_invert(const TruncSeries& a) {
  if (a.coeff(0).is_zero())
    throw NotAUnitError("series_invert: constant term is zero, not a unit");
  const Rational c0_inv = a.coeff(0).inverse();
  TruncSeries out(a.order());
  out.set_coeff(0, c0_inv);
  for (std::size_t k = 1; k < a.order(); ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      if (!a.coeff(i).is_zero()) acc += a.coeff(i) * out.coeff(k - i);
    }
    out.set_coeff(k, -acc * c0_inv);
  }
  return out;
}

TruncSeries series_pow(const TruncSeries& a, unsigned e) {
  TruncSeries out = TruncSeries::one(a.order());
  for (unsigned i = 0; i < e; ++i) out = series_mul(out, a);
  return out;
}

TruncSeries mobius_generator(const Rational& a, std::size_t n) {
  TruncSeries u(n);
  Rational p(1);  // a^{k-1}
  for (std::size_t k = 1; k < n; ++k) {
    u.set_coeff(k, p);
    p *= a;
  }
  return u;
}

namespace {

std::vector<Rational> default_a_values(std::size_t r) {
  std::vector<Rational> a;
  for (std::size_t i = 1; i <= r; ++i) a.emplace_back(static_cast<long>(i));
  return a;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

CoordinateSystem divided_difference_coords(const SpiderType& spider) {
  return divided_difference_coords(spider, default_a_values(spider.num_legs()));
}

CoordinateSystem divided_difference_coords(const SpiderType& spider,
                                           const std::vector<Rational>& a_values) {
  const std::size_t r = spider.num_legs();
  const std::size_t n = spider.colength();
  if (a_values.size() != r)
    throw std::invalid_argument("divided_difference_coords: need one a-value per leg");
  std::set<std::string> seen;
  for (const auto& a : a_values) {
    if (a.is_zero())
      throw std::invalid_argument("divided_difference_coords: a-values must be nonzero");
    if (!seen.insert(a.str()).second)
      throw std::invalid_argument("divided_difference_coords: a-values must be distinct");
  }
  const bool default_as = a_values == default_a_values(r);

  CoordinateSystem cs{spider, a_values, {}, {}};
  for (const auto& a : a_values) cs.mobius.push_back(mobius_generator(a, n));

  // v_i = Delta^{i-1} u_1 = sum_j (-1)^{i-1-j} C(i-1,j) u_{1+j}
  for (std::size_t i = 1; i <= r; ++i) {
    TruncSeries v(n);
    for (std::size_t j = 0; j < i; ++j) {
      Rational coef{mpz_class(binomial(static_cast<unsigned>(i - 1), static_cast<unsigned>(j)))};
      if ((i - 1 - j) % 2) coef = -coef;
      v = series_add(v, series_scale(cs.mobius[j], coef));
    }
    const auto ord = v.t_order();
    if (!ord || *ord != i)
      throw OrderCollapseError("divided_difference_coords: v_" + std::to_string(i) +
                               " does not have t-adic order " + std::to_string(i) +
                               " for spider " + spider.str());
    if (default_as) {
      // With a = 1..r the leading coefficient must be (i-1)!.
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(i - 1));
      if (v.coeff(i) != Rational(fact))
        throw OrderCollapseError("divided_difference_coords: leading coefficient of v_" +
                                 std::to_string(i) + " is not (i-1)!");
    }
    cs.coords.push_back(std::move(v));
  }
  return cs;
}

TruncSeries eval_poly_as_series(const Poly& p, const CoordinateSystem& coords) {
  const std::size_t r = coords.spider.num_legs();
  const std::size_t n = coords.spider.colength();
  if (p.nvars() != r + 1)
    throw std::invalid_argument("eval_poly_as_series: ring size mismatch");
  if (p.has_variable(0))
    throw std::invalid_argument("eval_poly_as_series: polynomial involves eps");

  // Power tables per coordinate, up to the largest exponent used.
  std::vector<std::vector<TruncSeries>> pows(r);
  for (std::size_t i = 0; i < r; ++i) {
    pows[i].push_back(TruncSeries::one(n));
    const unsigned top = p.degree_in(i + 1);
    for (unsigned e = 1; e <= top; ++e) pows[i].push_back(series_mul(pows[i].back(), coords.coords[i]));
  }

  TruncSeries acc(n);
  for (const auto& [m, c] : p.terms()) {
    TruncSeries term = TruncSeries::constant(c, n);
    for (std::size_t i = 0; i < r; ++i) {
      const unsigned e = m.exp(i + 1);
      if (e) term = series_mul(term, pows[i][e]);
    }
    acc = series_add(acc, term);
  }
  return acc;
}

}  // namespace spiderfam
