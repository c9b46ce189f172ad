#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace spiderfam {

// Leg lengths (l_1, ..., l_r) of a star-shaped monomial algebra
// k[x_1..x_r]/(x_i^{l_i+1}, x_i x_j). Its k-dimension is 1 + sum l_i.
struct SpiderType {
  std::vector<unsigned> legs;

  explicit SpiderType(std::vector<unsigned> l) : legs(std::move(l)) {
    if (legs.empty()) throw std::invalid_argument("SpiderType: needs at least one leg");
    for (unsigned leg : legs) {
      if (leg == 0) throw std::invalid_argument("SpiderType: legs must be >= 1");
    }
  }

  std::size_t num_legs() const { return legs.size(); }

  std::size_t colength() const {
    return 1 + std::accumulate(legs.begin(), legs.end(), std::size_t{0});
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(legs[i]);
    }
    return s + ")";
  }

  friend bool operator==(const SpiderType& a, const SpiderType& b) { return a.legs == b.legs; }
};

}  // namespace spiderfam
