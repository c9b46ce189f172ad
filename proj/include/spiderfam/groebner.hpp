// Multivariate division, S-polynomials, Buchberger's algorithm, and
// standard-monomial enumeration for zero-dimensional quotients.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spiderfam/poly.hpp"

namespace spiderfam {

struct DivisionResult {
  Poly remainder;
  std::vector<Poly> quotients;  // p = sum quotients[i]*gens[i] + remainder
};

// Division algorithm: no term of the remainder is divisible by any
// leading monomial of gens, and the cofactors reconstruct p exactly.
DivisionResult divide(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord);

Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord);

// Denominator-free S-pair: lc(g)*(lcm/lm(f))*f - lc(f)*(lcm/lm(g))*g.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord);

// Reduced Groebner basis, each element scaled to integer coefficients
// with content 1 and positive leading coefficient, sorted by ascending
// leading monomial. Pair handling follows Gebauer-Moller; selection is
// the normal strategy (smallest lcm first).
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord);

// Monomials in the active variables not divisible by any leading
// monomial of gb, sorted ascending under ord. nullopt when the count is
// infinite (some active variable has no pure power among the leading
// monomials). Defaults to all variables active.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly>& gb,
                                                        const MonomialOrder& ord);
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly>& gb,
                                                        const MonomialOrder& ord,
                                                        const std::vector<std::size_t>& active_vars);

}  // namespace spiderfam
