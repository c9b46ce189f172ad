// Machine verification of a family's claimed structure: the special
// fiber, generic fiber dimensions and curvilinearity, and the S-pair
// flatness certificate.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spiderfam/groebner.hpp"
#include "spiderfam/spider.hpp"

namespace spiderfam {

struct FiberReport {
  Rational lambda;
  std::size_t dimension = 0;
  std::optional<bool> is_spider;       // lambda = 0 only
  std::optional<bool> is_curvilinear;  // lambda != 0 only
  std::string gb_shape;
  std::vector<Poly> gb;
};

// Substitutes eps = lambda into every generator (zero results dropped).
std::vector<Poly> specialize(const ReesFamily& family, const Rational& lambda);

// Dimension of the fiber as |standard monomials| of a Groebner basis of
// the specialized ideal under the family's weighted order. Throws
// InfiniteDimensionalError when the fiber is not Artinian.
FiberReport fiber_dimension(const ReesFamily& family, const Rational& lambda);

// True iff the eps = 0 ideal equals the spider monomial ideal
// (x_i^{l_i+1}, x_i x_j), compared as reduced Groebner bases.
bool check_special_fiber(const ReesFamily& family);

// Lex Groebner basis with x_1 last; certifies the fiber shape
// {x_1^n, x_2 - p_2(x_1), ..., x_r - p_r(x_1)} of dimension n.
FiberReport check_curvilinear_fiber(const ReesFamily& family, const Rational& lambda);

struct FlatnessCertificate {
  std::size_t spair_count = 0;
  bool all_reduce_to_zero = false;
  std::size_t module_rank = 0;  // eps-free standard monomials of the family ideal
};

// Reduces every S-pair of the family generators under the weighted
// degrevlex order (family weights, eps least) and counts the eps-free
// standard monomials, which must equal the colength.
FlatnessCertificate flatness_certificate(const ReesFamily& family);

// True iff rel (no eps) evaluates to the zero series in Q[t]/(t^n).
bool verify_relation(const Poly& rel, const SpiderType& spider);
bool verify_relation(const Poly& rel, const SpiderType& spider,
                     const std::vector<Rational>& a_values);

// The weighted degrevlex order the family certificate uses.
MonomialOrder family_order(const ReesFamily& family);
// Lex order eliminating toward x_1 (x_r > ... > x_1 > eps).
MonomialOrder curvilinear_lex_order(const SpiderType& spider);

}  // namespace spiderfam
