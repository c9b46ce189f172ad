#include "spiderfam/verify.hpp"

#include <algorithm>

#include "spiderfam/errors.hpp"
#include "spiderfam/series.hpp"

namespace spiderfam {

MonomialOrder family_order(const ReesFamily& family) {
  return MonomialOrder::weighted_degrevlex(family.weights);
}

MonomialOrder curvilinear_lex_order(const SpiderType& spider) {
  std::vector<std::size_t> priority;
  for (std::size_t i = spider.num_legs(); i >= 1; --i) priority.push_back(i);
  return MonomialOrder::lex(priority);
}

std::vector<Poly> specialize(const ReesFamily& family, const Rational& lambda) {
  std::vector<Poly> out;
  for (const auto& f : family.family) {
    Poly s = f.substitute(0, lambda);
    if (!s.is_zero()) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<std::size_t> coordinate_vars(const SpiderType& spider) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 1; i <= spider.num_legs(); ++i) vars.push_back(i);
  return vars;
}

std::string shape_of(const std::vector<Poly>& gb, const MonomialOrder& ord,
                     const std::vector<std::string>& names) {
  std::string s;
  for (const auto& g : gb) {
    if (!s.empty()) s += ", ";
    s += leading_monomial(g, ord).str(names);
    if (g.num_terms() > 1) s += " - (" + std::to_string(g.num_terms() - 1) + " tail terms)";
  }
  return s;
}

}  // namespace

FiberReport fiber_dimension(const ReesFamily& family, const Rational& lambda) {
  const MonomialOrder ord = family_order(family);
  std::vector<Poly> gens = specialize(family, lambda);
  FiberReport report;
  report.lambda = lambda;
  if (gens.empty())
    throw InfiniteDimensionalError("fiber_dimension: specialized ideal is zero");
  report.gb = buchberger(gens, ord);
  auto sm = standard_monomials(report.gb, ord, coordinate_vars(family.spider));
  if (!sm)
    throw InfiniteDimensionalError("fiber_dimension: fiber at lambda = " + lambda.str() +
                                   " is not Artinian");
  report.dimension = sm->size();
  report.gb_shape = shape_of(report.gb, ord, ring_names(family.spider.num_legs()));
  if (lambda.is_zero()) report.is_spider = check_special_fiber(family);
  return report;
}

bool check_special_fiber(const ReesFamily& family) {
  const MonomialOrder ord = family_order(family);
  std::vector<Poly> gens = specialize(family, Rational(0));
  if (gens.empty()) return false;
  const std::vector<Poly> gb = buchberger(gens, ord);
  const std::vector<Poly> target = buchberger(spider_monomial_ideal(family.spider), ord);
  return gb == target;
}

FiberReport check_curvilinear_fiber(const ReesFamily& family, const Rational& lambda) {
  if (lambda.is_zero())
    throw std::invalid_argument("check_curvilinear_fiber: lambda must be nonzero");
  const SpiderType& spider = family.spider;
  const std::size_t r = spider.num_legs();
  const std::size_t n = spider.colength();
  const MonomialOrder ord = curvilinear_lex_order(spider);

  FiberReport report;
  report.lambda = lambda;
  std::vector<Poly> gens = specialize(family, lambda);
  if (gens.empty()) throw InfiniteDimensionalError("check_curvilinear_fiber: zero ideal");
  report.gb = buchberger(gens, ord);

  auto sm = standard_monomials(report.gb, ord, coordinate_vars(spider));
  if (!sm)
    throw InfiniteDimensionalError("check_curvilinear_fiber: fiber at lambda = " +
                                   lambda.str() + " is not Artinian");
  report.dimension = sm->size();
  report.gb_shape = shape_of(report.gb, ord, ring_names(r));

  // Expected shape: x_1^n plus, for i >= 2, a generator x_i - p_i(x_1).
  bool shape_ok = report.gb.size() == r && report.dimension == n;
  if (shape_ok) {
    std::size_t powers_seen = 0;
    std::vector<char> linear_seen(r + 1, 0);
    for (const auto& g : report.gb) {
      const Monomial lm = leading_monomial(g, ord);
      if (lm == Monomial::var(r + 1, 1, static_cast<unsigned>(n)) && g.num_terms() == 1) {
        ++powers_seen;
        continue;
      }
      bool linear = false;
      for (std::size_t i = 2; i <= r && !linear; ++i) {
        if (lm != Monomial::var(r + 1, i)) continue;
        linear = true;
        for (const auto& [m, c] : g.terms()) {
          if (m == lm) continue;
          for (std::size_t v = 0; v <= r; ++v)
            if (v != 1 && m.exp(v)) linear = false;  // tail must be in x_1 only
        }
        if (linear) linear_seen[i] = 1;
      }
      if (!linear) {
        shape_ok = false;
        break;
      }
    }
    if (powers_seen != 1) shape_ok = false;
    for (std::size_t i = 2; i <= r && shape_ok; ++i)
      if (!linear_seen[i]) shape_ok = false;
  }
  report.is_curvilinear = shape_ok;
  return report;
}

FlatnessCertificate flatness_certificate(const ReesFamily& family) {
  const MonomialOrder ord = family_order(family);
  const std::vector<Poly>& gens = family.family;
  const std::size_t g = gens.size();

  FlatnessCertificate cert;
  cert.spair_count = g * (g - 1) / 2;
  cert.all_reduce_to_zero = true;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      const Poly s = s_polynomial(gens[i], gens[j], ord);
      if (!s.is_zero() && !normal_form(s, gens, ord).is_zero())
        cert.all_reduce_to_zero = false;
    }
  }

  const std::vector<Poly> gb =
      cert.all_reduce_to_zero ? gens : buchberger(gens, ord);
  auto sm = standard_monomials(gb, ord, coordinate_vars(family.spider));
  cert.module_rank = sm ? sm->size() : 0;
  return cert;
}

bool verify_relation(const Poly& rel, const SpiderType& spider) {
  std::vector<Rational> defaults;
  for (std::size_t i = 1; i <= spider.num_legs(); ++i)
    defaults.emplace_back(static_cast<long>(i));
  return verify_relation(rel, spider, defaults);
}

bool verify_relation(const Poly& rel, const SpiderType& spider,
                     const std::vector<Rational>& a_values) {
  if (rel.has_variable(0)) throw std::invalid_argument("verify_relation: rel involves eps");
  const CoordinateSystem coords = divided_difference_coords(spider, a_values);
  return eval_poly_as_series(rel, coords).is_zero();
}

}  // namespace spiderfam
