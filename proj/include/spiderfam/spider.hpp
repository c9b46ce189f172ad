// The pipeline from a spider type to its flat family: basis construction
// and rank verification, relation derivation by basis expansion, weight
// selection, and weighted Rees homogenization.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spiderfam/groebner.hpp"
#include "spiderfam/matrix.hpp"
#include "spiderfam/poly.hpp"
#include "spiderfam/series.hpp"
#include "spiderfam/spider_type.hpp"

namespace spiderfam {

// The candidate basis {1} u {x_i^k : 1 <= k <= l_i} of Q[t]/(t^n),
// together with the series realizing each monomial and the n x n
// coefficient matrix (rows = t-powers, columns = basis monomials).
// Construction asserts the matrix has full rank n.
struct SpiderBasis {
  SpiderType spider;
  CoordinateSystem coords;
  std::vector<Monomial> monomials;  // in the ring Q[eps, x_1..x_r], eps unused
  std::vector<TruncSeries> series;
  Matrix coeff_matrix;
};

SpiderBasis build_basis(const SpiderType& spider);
SpiderBasis build_basis(const SpiderType& spider, const std::vector<Rational>& a_values);

// Unique coefficients c with f = sum c[m] * basis.series[m].
std::vector<Rational> expand_in_basis(const TruncSeries& f, const SpiderBasis& basis);

enum class RelationKind { Mixed, PurePower, VanishingPower };

// An integer-coefficient polynomial identity among the coordinates:
// evaluates to the zero series, content 1, border coefficient positive.
struct Relation {
  Poly polynomial;
  Monomial border;
  RelationKind kind;
  std::size_t i = 0, j = 0;  // 1-based legs: mixed(i,j) or pure-power(i)
};

// Mixed relations for every pair i < j (border x_i x_j) and a pure-power
// relation per leg (border x_i^{l_i+1}), derived by expanding the border
// series in the basis and clearing denominators. Every output is checked
// to evaluate to the zero series.
std::vector<Relation> derive_relations(const SpiderBasis& basis);

struct WeightMargin {
  std::size_t relation_index;
  Monomial border;
  long border_weight;
  std::optional<Monomial> heaviest_tail;  // nullopt: no tail terms
  long tail_weight;                       // 0 when no tails
  long margin;                            // border - tail; border_weight when no tails
};

std::vector<WeightMargin> weight_margins(const std::vector<Relation>& relations,
                                         const WeightVector& weights);

// Every border strictly heavier than every tail monomial of its relation.
bool weights_feasible(const std::vector<Relation>& relations, const WeightVector& weights);

// Lexicographically smallest (w, w+1, ..., w+r-1) making all borders
// strictly dominant. Throws NoFeasibleWeightsError past max_w.
WeightVector select_weights(const std::vector<Relation>& relations, const SpiderType& spider,
                            long max_w = 1000000);

// Exhaustive scan over arbitrary weight vectors ordered by (sum, lex),
// for experiments with unequal legs. Components bounded by max_component.
WeightVector select_weights_general(const std::vector<Relation>& relations,
                                    const SpiderType& spider, long max_component = 64);

// Weighted Rees homogenization: term c*m picks up eps^(wmax - w(m)).
// Throws TiedLeadingWeightError when the maximal weight is not unique.
Poly homogenize(const Relation& rel, const WeightVector& weights);

struct ReesFamily {
  SpiderType spider;
  std::vector<Rational> a_values;
  std::vector<Relation> relations;  // the generic ideal
  WeightVector weights;
  std::vector<Poly> family;         // homogenized generators, ring Q[eps, x_1..x_r]
  std::vector<Monomial> borders;
  std::vector<long> border_weights;  // w_max per generator
  bool constant_in_epsilon = false;  // no generator mentions eps (r = 1 case)
};

struct FamilyOptions {
  std::vector<Rational> a_values;        // empty: default 1..r
  std::optional<WeightVector> weights;   // set: manual override (validated)
  bool general_weight_search = false;
  long max_weight = 1000000;
  long max_component = 64;
};

ReesFamily build_family(const SpiderType& spider);
ReesFamily build_family(const SpiderType& spider, const FamilyOptions& options);

// Minimal generators (x_i^{l_i+1}, x_i x_j) of the special-fiber monomial
// ideal, as polynomials in the family ring.
std::vector<Poly> spider_monomial_ideal(const SpiderType& spider);

}  // namespace spiderfam
