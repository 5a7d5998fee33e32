// Timing comparison of the OpenMP matrix kernels against their serial
// reference twins, on reproducible pseudo-random rational matrices.  Exits
// non-zero if any parallel result disagrees with the serial one.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "derham/linalg.hpp"

using derham::la::QMatrix;
using derham::la::Rational;

namespace {

QMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      long num = static_cast<long>(rng() % 19) - 9;
      long den = static_cast<long>(rng() % 7) + 1;
      m(i, j) = Rational(num, den);
    }
  return m;
}

template <class F>
double time_once(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 120;
  if (n <= 0) {
    std::cerr << "usage: bench_kernels [size]\n";
    return 2;
  }
  std::mt19937_64 rng(7);
  QMatrix a = random_matrix(n, n, rng);
  QMatrix b = random_matrix(n, n, rng);
  // A wide low-rank-ish matrix exercises the elimination kernel harder.
  QMatrix c = random_matrix(n, 2 * n, rng);

  std::cout << "kernel            size        serial      parallel\n";
  bool ok = true;

  QMatrix p_mul, s_mul;
  double t_mul_p = time_once([&] { p_mul = derham::la::mul(a, b); });
  double t_mul_s = time_once([&] { s_mul = derham::la::mul_serial(a, b); });
  ok = ok && p_mul == s_mul;
  std::cout << "mul               " << n << "x" << n << "     " << t_mul_s << "    " << t_mul_p
            << "\n";

  derham::la::RankDecomposition p_rk, s_rk;
  double t_rk_p = time_once([&] { p_rk = derham::la::rank_kernel_image(c); });
  double t_rk_s = time_once([&] { s_rk = derham::la::rank_kernel_image_serial(c); });
  ok = ok && p_rk.rank == s_rk.rank && p_rk.kernel == s_rk.kernel && p_rk.image == s_rk.image;
  std::cout << "rank+kernel       " << n << "x" << 2 * n << "    " << t_rk_s << "    " << t_rk_p
            << "\n";

  if (!ok) {
    std::cout << "MISMATCH between serial and parallel results\n";
    return 1;
  }
  std::cout << "serial and parallel results identical\n";
  return 0;
}
