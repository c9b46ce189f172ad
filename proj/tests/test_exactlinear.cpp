#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spiderfam/matrix.hpp"
#include "spiderfam/rational.hpp"

using namespace spiderfam;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 99);
  return Rational(num(rng), den(rng));
}

Matrix rand_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(-4, -6).denominator() == 3);
  CHECK(Rational::from_string("-22/33") == Rational(-2, 3));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("7").str() == "7");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational::pow(Rational(-1, 2), 3) == Rational(-1, 8));
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("solve_linear scalar and identity cases") {
  Matrix a(1, 1);
  a(0, 0) = Rational(2);
  auto sol = solve_linear(a, {Rational(1)});
  REQUIRE(sol.status == SolveStatus::Unique);
  CHECK(sol.x == std::vector<Rational>{Rational(1, 2)});

  auto sol2 = solve_linear(Matrix::identity(2), {Rational(3), Rational(-5)});
  REQUIRE(sol2.status == SolveStatus::Unique);
  CHECK(sol2.x == std::vector<Rational>{Rational(3), Rational(-5)});
}

TEST_CASE("solve_linear distinguishes inconsistent from underdetermined") {
  Matrix a(2, 2);
  a(0, 0) = Rational(1);
  a(0, 1) = Rational(2);
  a(1, 0) = Rational(2);
  a(1, 1) = Rational(4);
  CHECK(solve_linear(a, {Rational(1), Rational(3)}).status == SolveStatus::NoSolution);
  CHECK(solve_linear(a, {Rational(1), Rational(2)}).status == SolveStatus::NonUnique);

  // Overdetermined but consistent.
  Matrix b(3, 2);
  b(0, 0) = Rational(1);
  b(1, 1) = Rational(1);
  b(2, 0) = Rational(1);
  b(2, 1) = Rational(1);
  auto sol = solve_linear(b, {Rational(2), Rational(5), Rational(7)});
  REQUIRE(sol.status == SolveStatus::Unique);
  CHECK(sol.x == std::vector<Rational>{Rational(2), Rational(5)});

  CHECK_THROWS_AS(solve_linear(b, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("solve_linear results re-multiply exactly") {
  std::mt19937 rng(11);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const Matrix a = rand_matrix(n, n, rng);
    std::vector<Rational> b(n);
    for (auto& v : b) v = rand_rational(rng);
    const auto sol = solve_linear(a, b);
    if (sol.status != SolveStatus::Unique) continue;
    CHECK(mat_vec(a, sol.x) == b);
  }
}

TEST_CASE("rank basics") {
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(rank(Matrix::identity(4)) == 4);

  Matrix a(2, 3);
  a(0, 0) = Rational(1);
  a(0, 1) = Rational(2);
  a(0, 2) = Rational(3);
  a(1, 0) = Rational(2);
  a(1, 1) = Rational(4);
  a(1, 2) = Rational(6);
  CHECK(rank(a) == 1);
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
  std::mt19937 rng(13);
  for (int k = 0; k < 30; ++k) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix a = rand_matrix(rows, cols, rng);
    // Inject rank deficiency half the time.
    if (rows >= 2 && k % 2) {
      for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * Rational(3);
    }
    CHECK(rank(a) == rank(a.transpose()));
  }
}

TEST_CASE("parallel elimination kernel matches the serial reference") {
  std::mt19937 rng(17);
  for (std::size_t n : {5u, 17u, 33u}) {
    Matrix m = rand_matrix(n, n + 2, rng);
    if (n >= 17) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(3, j) = m(1, j);  // force a pivot skip
    }
    Matrix a = m, b = m;
    const auto ps = kernels::echelon_serial(a);
    const auto pp = kernels::echelon_parallel(b);
    CHECK(ps == pp);
    CHECK(a == b);
  }
}
