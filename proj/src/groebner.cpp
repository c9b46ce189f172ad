#include "spiderfam/groebner.hpp"

#include <algorithm>
#include <list>
#include <stdexcept>

namespace spiderfam {

namespace {

struct GenView {
  const Poly* poly;
  Monomial lm;
  Rational lc;
};

std::vector<GenView> make_views(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  std::vector<GenView> views;
  views.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("division: zero generator");
    auto [m, c] = leading_term(g, ord);
    views.push_back({&g, std::move(m), std::move(c)});
  }
  return views;
}

}  // namespace

DivisionResult divide(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord) {
  const auto views = make_views(gens, ord);
  DivisionResult out{Poly(p.nvars()), std::vector<Poly>(gens.size(), Poly(p.nvars()))};
  Poly h = p;
  while (!h.is_zero()) {
    auto [hm, hc] = leading_term(h, ord);
    bool reduced = false;
    for (std::size_t i = 0; i < views.size(); ++i) {
      if (!divides(views[i].lm, hm)) continue;
      const Monomial q = quotient(hm, views[i].lm);
      const Rational f = hc / views[i].lc;
      h -= views[i].poly->mul_term(q, f);
      out.quotients[i].add_term(q, f);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.remainder.add_term(hm, hc);
      h.add_term(hm, -hc);
    }
  }
  return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& gens, const MonomialOrder& ord) {
  return divide(p, gens, ord).remainder;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  auto [fm, fc] = leading_term(f, ord);
  auto [gm, gc] = leading_term(g, ord);
  const Monomial l = lcm(fm, gm);
  return f.mul_term(quotient(l, fm), gc) - g.mul_term(quotient(l, gm), fc);
}

namespace {

// Full reduction used inside Buchberger. Content may be stripped: the
// result is only ever used up to a nonzero scalar.
Poly reduce_for_basis(Poly h, const std::vector<Poly>& basis,
                      const std::vector<Monomial>& lms, const MonomialOrder& ord) {
  Poly rem(h.nvars());
  while (!h.is_zero()) {
    auto [hm, hc] = leading_term(h, ord);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lms[i], hm)) continue;
      const Rational lc = leading_term(basis[i], ord).second;
      h -= basis[i].mul_term(quotient(hm, lms[i]), hc / lc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(hm, hc);
      h.add_term(hm, -hc);
    }
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm_lm;
};

// Gebauer-Moller update: prune the pending pair list against the new
// element, then add the surviving (i, t) pairs (chain, multiple, and
// coprime criteria).
void update_pairs(std::list<Pair>& pairs, const std::vector<Monomial>& lms, std::size_t t) {
  const Monomial& lt = lms[t];

  std::vector<Pair> cand;
  for (std::size_t i = 0; i < t; ++i) cand.push_back({i, t, lcm(lms[i], lt)});

  std::vector<char> keep(cand.size(), 0);
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool drop = false;
    if (!coprime(lms[cand[a].i], lt)) {
      for (std::size_t b = 0; b < cand.size() && !drop; ++b) {
        if (b == a || cand[b].lcm_lm == cand[a].lcm_lm) continue;
        if (divides(cand[b].lcm_lm, cand[a].lcm_lm)) drop = true;
      }
      // Among equal lcms keep the first only.
      for (std::size_t b = 0; b < a && !drop; ++b) {
        if (keep[b] && cand[b].lcm_lm == cand[a].lcm_lm) drop = true;
      }
    }
    if (!drop) keep[a] = 1;
  }
  for (std::size_t a = 0; a < cand.size(); ++a) {
    if (keep[a] && !coprime(lms[cand[a].i], lt)) kept.push_back(cand[a]);
  }

  // Chain criterion against the old pairs.
  for (auto it = pairs.begin(); it != pairs.end();) {
    if (divides(lt, it->lcm_lm) && lcm(lms[it->i], lt) != it->lcm_lm &&
        lcm(lms[it->j], lt) != it->lcm_lm) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }

  for (auto& p : kept) pairs.push_back(std::move(p));
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& ord) {
  std::vector<Poly> basis;
  std::vector<Monomial> lms;
  std::list<Pair> pairs;

  auto add_element = [&](const Poly& p) {
    Poly g = normalized_integer(p, ord);
    basis.push_back(std::move(g));
    lms.push_back(leading_monomial(basis.back(), ord));
    update_pairs(pairs, lms, basis.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    add_element(g);
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm under the order.
    auto best = pairs.begin();
    for (auto it = std::next(best); it != pairs.end(); ++it) {
      if (ord.less(it->lcm_lm, best->lcm_lm)) best = it;
    }
    const Pair p = *best;
    pairs.erase(best);

    const Poly s = s_polynomial(basis[p.i], basis[p.j], ord);
    if (s.is_zero()) continue;
    const Poly r = reduce_for_basis(s, basis, lms, ord);
    if (!r.is_zero()) add_element(r);
  }

  // Minimalize: drop elements whose leading monomial is divisible by
  // another's.
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(),
            [&](std::size_t a, std::size_t b) { return ord.less(lms[a], lms[b]); });
  std::vector<Poly> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t idx : order_idx) {
    bool redundant = false;
    for (const auto& m : minimal_lms) {
      if (divides(m, lms[idx])) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      minimal.push_back(basis[idx]);
      minimal_lms.push_back(lms[idx]);
    }
  }

  // Interreduce tails. Leading monomials are pairwise non-divisible, so a
  // single pass yields the reduced basis.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    std::vector<Monomial> others_lms;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      others_lms.push_back(minimal_lms[j]);
    }
    Poly r = others.empty() ? minimal[i]
                            : reduce_for_basis(minimal[i], others, others_lms, ord);
    reduced.push_back(normalized_integer(r, ord));
  }
  return reduced;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Poly>& gb,
                                                        const MonomialOrder& ord) {
  if (gb.empty()) return std::nullopt;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < gb.front().nvars(); ++i) all.push_back(i);
  return standard_monomials(gb, ord, all);
}

std::optional<std::vector<Monomial>> standard_monomials(
    const std::vector<Poly>& gb, const MonomialOrder& ord,
    const std::vector<std::size_t>& active_vars) {
  if (gb.empty()) return std::nullopt;
  const std::size_t nvars = gb.front().nvars();
  std::vector<Monomial> lms;
  for (const auto& g : gb) lms.push_back(leading_monomial(g, ord));

  for (const auto& m : lms) {
    if (m.is_one()) return std::vector<Monomial>{};  // unit ideal
  }

  // Finite over the active variables iff each has a pure power among the
  // leading monomials; the caps bound the search box.
  std::vector<unsigned> cap(nvars, 1);
  for (std::size_t v : active_vars) {
    unsigned best = 0;
    for (const auto& m : lms) {
      if (!m.exp(v)) continue;
      bool pure = true;
      for (std::size_t i = 0; i < nvars && pure; ++i) {
        if (i != v && m.exp(i)) pure = false;
      }
      if (pure && (best == 0 || m.exp(v) < best)) best = m.exp(v);
    }
    if (best == 0) return std::nullopt;
    cap[v] = best;
  }

  std::vector<Monomial> out;
  std::vector<unsigned> exps(nvars, 0);
  const auto emit = [&](auto&& self, std::size_t k) -> void {
    if (k == active_vars.size()) {
      Monomial m{std::vector<unsigned>(exps)};
      for (const auto& lm : lms) {
        if (divides(lm, m)) return;
      }
      out.push_back(std::move(m));
      return;
    }
    const std::size_t v = active_vars[k];
    for (unsigned e = 0; e < cap[v]; ++e) {
      exps[v] = e;
      self(self, k + 1);
    }
    exps[v] = 0;
  };
  emit(emit, 0);

  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return out;
}

}  // namespace spiderfam
