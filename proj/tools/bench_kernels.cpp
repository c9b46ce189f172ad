// Compares the serial reference kernels against the OpenMP-parallel ones
// on random exact-rational workloads: echelon elimination and truncated
// series products.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "spiderfam/matrix.hpp"
#include "spiderfam/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace spiderfam;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-999, 999);
  std::uniform_int_distribution<long> den(1, 99);
  return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::size_t n, std::mt19937& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

TruncSeries random_series(std::size_t order, std::mt19937& rng) {
  TruncSeries s(order);
  for (std::size_t i = 0; i < order; ++i) s.set_coeff(i, random_rational(rng));
  return s;
}

void bench_echelon(std::size_t n) {
  std::mt19937 rng(12345);
  const Matrix m = random_matrix(n, rng);

  Matrix a = m;
  auto t0 = Clock::now();
  const auto piv_serial = kernels::echelon_serial(a);
  const double serial = seconds_since(t0);

  Matrix b = m;
  t0 = Clock::now();
  const auto piv_parallel = kernels::echelon_parallel(b);
  const double parallel = seconds_since(t0);

  const bool same = piv_serial == piv_parallel && a == b;
  std::printf("echelon  n=%3zu   serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", n,
              serial, parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

void bench_series(std::size_t order) {
  std::mt19937 rng(54321);
  const TruncSeries a = random_series(order, rng);
  const TruncSeries b = random_series(order, rng);

  auto t0 = Clock::now();
  const TruncSeries rs = kernels::series_mul_serial(a, b);
  const double serial = seconds_since(t0);

  t0 = Clock::now();
  const TruncSeries rp = kernels::series_mul_parallel(a, b);
  const double parallel = seconds_since(t0);

  std::printf("sermul   n=%4zu  serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
              order, serial, parallel, serial / parallel,
              rs == rp ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled: parallel kernels fall back to serial loops\n");
#endif
  for (std::size_t n : {32u, 64u, 96u}) bench_echelon(n);
  for (std::size_t n : {256u, 512u, 1024u}) bench_series(n);
  return 0;
}
