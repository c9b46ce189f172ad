#include "spiderfam/spider.hpp"

#include <algorithm>
#include <stdexcept>

#include "spiderfam/errors.hpp"

namespace spiderfam {

namespace {

// Basis monomial list: 1, then x_i, x_i^2, ..., x_i^{l_i} per leg.
std::vector<Monomial> basis_monomials(const SpiderType& spider) {
  const std::size_t nvars = spider.num_legs() + 1;
  std::vector<Monomial> out{Monomial(nvars)};
  for (std::size_t i = 0; i < spider.num_legs(); ++i) {
    for (unsigned k = 1; k <= spider.legs[i]; ++k)
      out.push_back(Monomial::var(nvars, i + 1, k));
  }
  return out;
}

}  // namespace

SpiderBasis build_basis(const SpiderType& spider) {
  std::vector<Rational> defaults;
  for (std::size_t i = 1; i <= spider.num_legs(); ++i)
    defaults.emplace_back(static_cast<long>(i));
  return build_basis(spider, defaults);
}

SpiderBasis build_basis(const SpiderType& spider, const std::vector<Rational>& a_values) {
  const std::size_t n = spider.colength();
  CoordinateSystem coords = divided_difference_coords(spider, a_values);

  std::vector<Monomial> monomials = basis_monomials(spider);
  std::vector<TruncSeries> series;
  series.reserve(n);
  series.push_back(TruncSeries::one(n));
  for (std::size_t i = 0; i < spider.num_legs(); ++i) {
    TruncSeries p = coords.coords[i];
    for (unsigned k = 1; k <= spider.legs[i]; ++k) {
      series.push_back(p);
      if (k < spider.legs[i]) p = series_mul(p, coords.coords[i]);
    }
  }

  Matrix m(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t row = 0; row < n; ++row) m(row, col) = series[col].coeff(row);

  if (rank(m) != n)
    throw BasisDegenerateError("build_basis: candidate basis for spider " + spider.str() +
                               " has rank < " + std::to_string(n));

  return SpiderBasis{spider, std::move(coords), std::move(monomials), std::move(series),
                     std::move(m)};
}

std::vector<Rational> expand_in_basis(const TruncSeries& f, const SpiderBasis& basis) {
  const std::size_t n = basis.spider.colength();
  if (f.order() != n) throw std::invalid_argument("expand_in_basis: order mismatch");
  LinearSolution sol = solve_linear(basis.coeff_matrix, f.coeffs());
  if (sol.status != SolveStatus::Unique)
    throw BasisDegenerateError("expand_in_basis: basis matrix is not invertible");
  return std::move(sol.x);
}

namespace {

// Turn "border = sum c_m * m" into an integer relation: border - sum c_m m,
// multiplied by the lcm of the c_m denominators, divided by the content,
// border coefficient positive. The zero-series check runs on every output.
Relation make_relation(const SpiderBasis& basis, const TruncSeries& border_series,
                       const Monomial& border, RelationKind kind, std::size_t i,
                       std::size_t j) {
  const std::size_t nvars = basis.spider.num_legs() + 1;
  Poly rel(nvars);
  rel.add_term(border, Rational(1));
  if (!border_series.is_zero()) {
    const std::vector<Rational> c = expand_in_basis(border_series, basis);
    for (std::size_t k = 0; k < c.size(); ++k) rel.add_term(basis.monomials[k], -c[k]);
  } else if (kind == RelationKind::PurePower) {
    kind = RelationKind::VanishingPower;
  }

  // Clear denominators, then remove the integer content; the border
  // coefficient is positive by construction (content sign fixed to it).
  Rational content = rel.content();
  if (rel.coeff(border).sign() < 0) content = -content;
  Relation out{rel.scaled(content.inverse()), border, kind, i, j};

  if (!eval_poly_as_series(out.polynomial, basis.coords).is_zero())
    throw BasisDegenerateError("derive_relations: relation fails to vanish as a series");
  return out;
}

}  // namespace

std::vector<Relation> derive_relations(const SpiderBasis& basis) {
  const SpiderType& spider = basis.spider;
  const std::size_t r = spider.num_legs();
  const std::size_t nvars = r + 1;
  std::vector<Relation> out;

  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = i + 1; j <= r; ++j) {
      const TruncSeries prod =
          series_mul(basis.coords.coords[i - 1], basis.coords.coords[j - 1]);
      const Monomial border = Monomial::var(nvars, i) * Monomial::var(nvars, j);
      out.push_back(make_relation(basis, prod, border, RelationKind::Mixed, i, j));
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    const unsigned e = spider.legs[i - 1] + 1;
    const TruncSeries power = series_pow(basis.coords.coords[i - 1], e);
    const Monomial border = Monomial::var(nvars, i, e);
    out.push_back(make_relation(basis, power, border, RelationKind::PurePower, i, 0));
  }
  return out;
}

std::vector<WeightMargin> weight_margins(const std::vector<Relation>& relations,
                                         const WeightVector& weights) {
  std::vector<WeightMargin> out;
  for (std::size_t idx = 0; idx < relations.size(); ++idx) {
    const Relation& rel = relations[idx];
    WeightMargin wm{idx, rel.border, weights.weight_of(rel.border), std::nullopt, 0, 0};
    for (const auto& [m, c] : rel.polynomial.terms()) {
      if (m == rel.border) continue;
      const long w = weights.weight_of(m);
      if (!wm.heaviest_tail || w > wm.tail_weight) {
        wm.heaviest_tail = m;
        wm.tail_weight = w;
      }
    }
    wm.margin = wm.heaviest_tail ? wm.border_weight - wm.tail_weight : wm.border_weight;
    out.push_back(std::move(wm));
  }
  return out;
}

bool weights_feasible(const std::vector<Relation>& relations, const WeightVector& weights) {
  for (const auto& wm : weight_margins(relations, weights)) {
    if (wm.heaviest_tail && wm.margin <= 0) return false;
  }
  return true;
}

WeightVector select_weights(const std::vector<Relation>& relations, const SpiderType& spider,
                            long max_w) {
  const std::size_t r = spider.num_legs();
  for (long w = 1; w <= max_w; ++w) {
    std::vector<long> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = w + static_cast<long>(i);
    WeightVector candidate(v);
    if (weights_feasible(relations, candidate)) return candidate;
  }
  throw NoFeasibleWeightsError("select_weights: no consecutive weights up to w = " +
                               std::to_string(max_w) + " for spider " + spider.str());
}

WeightVector select_weights_general(const std::vector<Relation>& relations,
                                    const SpiderType& spider, long max_component) {
  const std::size_t r = spider.num_legs();
  // Ordered by total sum, then lexicographically: the first feasible
  // vector found is the minimal one in that ordering.
  for (long total = static_cast<long>(r); total <= max_component * static_cast<long>(r);
       ++total) {
    std::vector<long> v(r, 1);
    const auto scan = [&](auto&& self, std::size_t pos, long remaining) -> bool {
      if (pos + 1 == r) {
        if (remaining < 1 || remaining > max_component) return false;
        v[pos] = remaining;
        return weights_feasible(relations, WeightVector(v));
      }
      for (long w = 1; w <= std::min(max_component, remaining - static_cast<long>(r - pos - 1));
           ++w) {
        v[pos] = w;
        if (self(self, pos + 1, remaining - w)) return true;
      }
      return false;
    };
    if (scan(scan, 0, total)) return WeightVector(v);
  }
  throw NoFeasibleWeightsError("select_weights_general: no weights with components <= " +
                               std::to_string(max_component) + " for spider " + spider.str());
}

Poly homogenize(const Relation& rel, const WeightVector& weights) {
  const long wmax = weights.weight_of(rel.border);
  const std::size_t nvars = rel.polynomial.nvars();
  Poly out(nvars);
  for (const auto& [m, c] : rel.polynomial.terms()) {
    const long w = weights.weight_of(m);
    if (w > wmax || (w == wmax && m != rel.border))
      throw TiedLeadingWeightError("homogenize: border weight not uniquely maximal");
    std::vector<unsigned> exps = m.exps();
    exps[0] += static_cast<unsigned>(wmax - w);
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

ReesFamily build_family(const SpiderType& spider) { return build_family(spider, {}); }

ReesFamily build_family(const SpiderType& spider, const FamilyOptions& options) {
  SpiderBasis basis = options.a_values.empty() ? build_basis(spider)
                                               : build_basis(spider, options.a_values);
  std::vector<Relation> relations = derive_relations(basis);

  WeightVector weights = [&] {
    if (options.weights) {
      if (options.weights->size() != spider.num_legs())
        throw std::invalid_argument("build_family: weight vector has wrong length");
      if (!weights_feasible(relations, *options.weights))
        throw NoFeasibleWeightsError("build_family: supplied weights leave some border "
                                     "non-dominant");
      return *options.weights;
    }
    if (options.general_weight_search)
      return select_weights_general(relations, spider, options.max_component);
    try {
      return select_weights(relations, spider, options.max_weight);
    } catch (const NoFeasibleWeightsError&) {
      // Some unequal-leg types admit no consecutive vector at all (a tail
      // like y^3 in the z^2 relation forces 2w_3 > 3w_2); fall back to the
      // general scan.
      return select_weights_general(relations, spider, options.max_component);
    }
  }();

  ReesFamily fam{spider,      basis.coords.a_values, std::move(relations), weights, {}, {},
                 {},          false};
  bool uses_eps = false;
  for (const auto& rel : fam.relations) {
    Poly f = homogenize(rel, weights);
    if (f.has_variable(0)) uses_eps = true;
    // eps = 1 must recover the relation; eps = 0 must leave the border.
    if (f.substitute(0, Rational(1)) != rel.polynomial)
      throw std::logic_error("build_family: homogenization round-trip failed");
    if (f.substitute(0, Rational(0)) !=
        Poly::term(rel.border, rel.polynomial.coeff(rel.border)))
      throw std::logic_error("build_family: eps = 0 does not give the bare border");
    fam.family.push_back(std::move(f));
    fam.borders.push_back(rel.border);
    fam.border_weights.push_back(weights.weight_of(rel.border));
  }
  fam.constant_in_epsilon = !uses_eps;
  return fam;
}

std::vector<Poly> spider_monomial_ideal(const SpiderType& spider) {
  const std::size_t r = spider.num_legs();
  const std::size_t nvars = r + 1;
  std::vector<Poly> out;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = i + 1; j <= r; ++j)
      out.push_back(Poly::term(Monomial::var(nvars, i) * Monomial::var(nvars, j), Rational(1)));
  for (std::size_t i = 1; i <= r; ++i)
    out.push_back(Poly::variable(nvars, i, spider.legs[i - 1] + 1));
  return out;
}

}  // namespace spiderfam
