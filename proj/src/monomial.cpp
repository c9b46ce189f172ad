#include "spiderfam/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace spiderfam {

Monomial Monomial::var(std::size_t nvars, std::size_t index, unsigned power) {
  if (index >= nvars) throw std::invalid_argument("Monomial::var: index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

bool Monomial::is_one() const {
  for (unsigned e : exps_)
    if (e) return false;
  return true;
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

unsigned Monomial::coord_degree() const {
  unsigned d = 0;
  for (std::size_t i = 1; i < exps_.size(); ++i) d += exps_[i];
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: mixed rings");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: mixed rings");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exps_[i] > b.exps_[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw std::invalid_argument("Monomial: quotient not divisible");
  Monomial m = b;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] -= a.exps_[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: mixed rings");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i)
    if (b.exps_[i] > m.exps_[i]) m.exps_[i] = b.exps_[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: mixed rings");
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exps_[i] && b.exps_[i]) return false;
  return true;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!s.empty()) s += "*";
    s += names.at(i);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

WeightVector::WeightVector(std::vector<long> w) : w_(std::move(w)) {
  if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
  for (long v : w_)
    if (v < 1) throw std::invalid_argument("WeightVector: weights must be >= 1");
}

long WeightVector::weight_of(const Monomial& m) const {
  if (m.nvars() != w_.size() + 1)
    throw std::invalid_argument("WeightVector: ring size mismatch");
  long d = 0;
  for (std::size_t i = 1; i < m.nvars(); ++i) d += w_[i - 1] * static_cast<long>(m.exp(i));
  return d;
}

std::string WeightVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + ")";
}

MonomialOrder MonomialOrder::weighted_degrevlex(WeightVector w) {
  return MonomialOrder(Kind::WeightedDegrevlex, std::move(w), {});
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  if (priority.empty()) throw std::invalid_argument("MonomialOrder::lex: empty priority");
  return MonomialOrder(Kind::Lex, WeightVector({1}), std::move(priority));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MonomialOrder: mixed rings");

  if (kind_ == Kind::Lex) {
    std::vector<char> seen(a.nvars(), 0);
    for (std::size_t idx : priority_) {
      seen.at(idx) = 1;
      if (a.exp(idx) != b.exp(idx)) return a.exp(idx) > b.exp(idx) ? 1 : -1;
    }
    // Unlisted variables, least significant, in index order.
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (seen[i]) continue;
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
  }

  const long wa = weights_.weight_of(a);
  const long wb = weights_.weight_of(b);
  if (wa != wb) return wa > wb ? 1 : -1;

  const unsigned da = a.coord_degree();
  const unsigned db = b.coord_degree();
  if (da != db) return da > db ? 1 : -1;

  // Reverse lex: greater means the last differing x-exponent is smaller.
  for (std::size_t i = a.nvars(); i-- > 1;) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  }

  if (a.exp(0) != b.exp(0)) return a.exp(0) > b.exp(0) ? 1 : -1;
  return 0;
}

std::vector<std::string> ring_names(std::size_t num_legs) {
  std::vector<std::string> names{"eps"};
  if (num_legs <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < num_legs; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 1; i <= num_legs; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

}  // namespace spiderfam
