#include "spiderfam/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace spiderfam {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index, unsigned power) {
  return term(Monomial::var(nvars, index, power), Rational(1));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("Poly: mixed rings");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Poly: mixed rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("Poly: mixed rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: mixed rings");
  Poly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  Poly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
  return p;
}

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Poly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [mm, v] : terms_) p.terms_.emplace(mm * m, v * c);
  return p;
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw std::invalid_argument("Poly::substitute: variable out of range");
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exp(var);
    std::vector<unsigned> exps = m.exps();
    exps[var] = 0;
    p.add_term(Monomial(std::move(exps)), e ? c * Rational::pow(value, e) : c);
  }
  return p;
}

Poly Poly::scale_vars(const std::vector<Rational>& factors) const {
  if (factors.size() != nvars_) throw std::invalid_argument("Poly::scale_vars: size mismatch");
  Poly p(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational f = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m.exp(i)) f *= Rational::pow(factors[i], m.exp(i));
    p.add_term(m, f);
  }
  return p;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  return Rational(mpq_class(num_gcd, den_lcm));
}

bool Poly::has_variable(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(var)) return true;
  return false;
}

bool Poly::integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + m.str(names);
  }
  return s;
}

std::pair<Monomial, Rational> leading_term(const Poly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw std::invalid_argument("leading_term: zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return {best->first, best->second};
}

Monomial leading_monomial(const Poly& p, const MonomialOrder& ord) {
  return leading_term(p, ord).first;
}

Poly normalized_integer(const Poly& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  if (leading_term(p, ord).second.sign() < 0) c = -c;
  return p.scaled(c.inverse());
}

std::string poly_to_string(const Poly& p, const MonomialOrder& ord,
                           const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
  std::string s;
  for (const auto* t : terms) {
    const Rational& c = t->second;
    const Rational a = abs(c);
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (t->first.is_one()) {
      s += a.str();
    } else {
      if (!a.is_one()) s += a.str() + "*";
      s += t->first.str(names);
    }
  }
  return s;
}

}  // namespace spiderfam
