// Test-only oracles, kept independent of the library code paths they
// cross-check.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "spiderfam/groebner.hpp"
#include "spiderfam/matrix.hpp"
#include "spiderfam/poly.hpp"
#include "spiderfam/series.hpp"

namespace oracles {

// Fraction-free Bareiss rank over the integers, written from scratch so
// basis-rank checks do not go through spiderfam's elimination. Entries
// must stay within __int128 (fine for the small matrices tests feed it).
inline std::size_t bareiss_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  using I = __int128;
  std::vector<std::vector<I>> a(rows, std::vector<I>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  I prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

// Closed-form construction of the coordinate series,
// v_i = (i-1)! * t^i / prod_{a=1..i} (1 - a t), expanded directly as a
// product of geometric series. This is a different route from the
// binomial divided-difference sum the library uses.
inline spiderfam::TruncSeries closed_form_coord(std::size_t i, std::size_t n) {
  using namespace spiderfam;
  TruncSeries v = TruncSeries::one(n);
  for (std::size_t k = 0; k < i; ++k) v = series_mul(v, TruncSeries::t(n));
  for (std::size_t a = 1; a <= i; ++a) {
    TruncSeries geo(n);
    Rational p(1);
    for (std::size_t k = 0; k < n; ++k) {
      geo.set_coeff(k, p);
      p *= Rational(static_cast<long>(a));
    }
    v = series_mul(v, geo);
  }
  long fact = 1;
  for (std::size_t k = 2; k < i; ++k) fact *= static_cast<long>(k);
  return series_scale(v, Rational(fact));
}

// All monomials of coordinate degree <= cap in the ring of `nvars`
// variables with the eps slot fixed to zero.
inline std::vector<spiderfam::Monomial> monomials_up_to(std::size_t nvars, unsigned cap) {
  using spiderfam::Monomial;
  std::vector<Monomial> out;
  std::vector<unsigned> exps(nvars, 0);
  const auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      out.emplace_back(std::vector<unsigned>(exps));
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(rec, 1, cap);
  return out;
}

// Corank of the degree-<=cap Macaulay (multiplication-matrix) span of the
// generators: columns are the monomials of degree <= cap, the row space
// starts from the shifts m*g with deg(m*g) <= cap and is closed under
// multiplication by each variable inside the cap. The closure matters for
// inhomogeneous generators, where cancellations create low-degree ideal
// elements that plain product rows miss. For the zero-dimensional ideals
// this cross-checks, the corank is the k-dimension of the quotient.
inline std::size_t macaulay_corank(const std::vector<spiderfam::Poly>& gens, unsigned cap) {
  using namespace spiderfam;
  if (gens.empty()) throw std::invalid_argument("macaulay_corank: no generators");
  const std::size_t nvars = gens.front().nvars();

  // Columns sorted by degree descending, so a reduced row's pivot column
  // carries its degree and the low-degree part of the row space is spanned
  // by the low-degree rows.
  std::vector<Monomial> cols = monomials_up_to(nvars, cap);
  std::sort(cols.begin(), cols.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.exps() < b.exps();
  });
  const std::size_t ncols = cols.size();
  std::map<std::vector<unsigned>, std::size_t> col_index;
  for (std::size_t j = 0; j < ncols; ++j) col_index[cols[j].exps()] = j;

  // Row space kept in reduced echelon form.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;

  const auto insert = [&](std::vector<Rational> row) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!row[pivots[k]].is_zero()) {
        const Rational f = row[pivots[k]];
        for (std::size_t j = 0; j < ncols; ++j)
          if (!basis[k][j].is_zero()) row[j] -= f * basis[k][j];
      }
    }
    std::size_t piv = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!row[j].is_zero()) {
        piv = j;
        break;
      }
    }
    if (piv == ncols) return;
    const Rational inv = row[piv].inverse();
    for (std::size_t j = piv; j < ncols; ++j)
      if (!row[j].is_zero()) row[j] *= inv;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k][piv].is_zero()) {
        const Rational f = basis[k][piv];
        for (std::size_t j = 0; j < ncols; ++j)
          if (!row[j].is_zero()) basis[k][j] -= f * row[j];
      }
    }
    basis.push_back(std::move(row));
    pivots.push_back(piv);
  };

  for (const auto& g : gens) {
    const unsigned dg = g.total_degree();
    if (dg > cap) continue;
    for (const auto& shift : monomials_up_to(nvars, cap - dg)) {
      std::vector<Rational> row(ncols);
      for (const auto& [m, c] : g.terms()) row[col_index.at((m * shift).exps())] = c;
      insert(std::move(row));
    }
  }

  // Close under multiplication by the variables inside the cap. With
  // inhomogeneous generators, cancellations create low-degree elements
  // whose shifts the initial product rows do not span.
  std::size_t before = 0;
  while (before != basis.size()) {
    before = basis.size();
    for (std::size_t k = 0; k < before; ++k) {
      if (cols[pivots[k]].total_degree() >= cap) continue;
      for (std::size_t v = 1; v < nvars; ++v) {
        std::vector<Rational> row(ncols);
        const Monomial xv = Monomial::var(nvars, v);
        bool in_range = true;
        for (std::size_t j = 0; j < ncols && in_range; ++j) {
          if (basis[k][j].is_zero()) continue;
          const auto it = col_index.find((cols[j] * xv).exps());
          if (it == col_index.end()) in_range = false;
          else row[it->second] = basis[k][j];
        }
        if (in_range) insert(std::move(row));
      }
    }
  }
  return ncols - basis.size();
}

// Reduced Groebner basis without any pair pruning: every pair enters the
// queue. Cross-checks the Gebauer-Moller criteria in the library, since
// the reduced basis of an ideal is unique up to normalization.
inline std::vector<spiderfam::Poly> naive_reduced_gb(std::vector<spiderfam::Poly> g,
                                                     const spiderfam::MonomialOrder& ord) {
  using namespace spiderfam;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Poly s = s_polynomial(g[i], g[j], ord);
      if (s.is_zero()) continue;
      const Poly r = normal_form(s, g, ord);
      if (!r.is_zero()) g.push_back(r);
    }
  }
  // Minimalize, interreduce, normalize.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial lm = leading_monomial(g[i], ord);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial other = leading_monomial(g[j], ord);
      if (divides(other, lm) && !(other == lm && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, ord);
    out.push_back(normalized_integer(r, ord));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return ord.less(leading_monomial(a, ord), leading_monomial(b, ord));
  });
  return out;
}

// All canonical spider types (weakly descending legs — a spider's legs
// are a multiset) with at most max_r legs, each of length <= max_leg.
inline std::vector<std::vector<unsigned>> spider_grid(unsigned max_r, unsigned max_leg) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> legs;
  const auto rec = [&](auto&& self, unsigned bound) -> void {
    if (!legs.empty()) out.push_back(legs);
    if (legs.size() == max_r) return;
    for (unsigned l = bound; l >= 1; --l) {
      legs.push_back(l);
      self(self, l);
      legs.pop_back();
    }
  };
  rec(rec, max_leg);
  return out;
}

}  // namespace oracles
