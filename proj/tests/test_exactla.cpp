#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "derham/linalg.hpp"

using namespace derham::la;

namespace {

QMatrix from_rows(int rows, int cols, std::initializer_list<long> entries) {
  QMatrix m(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Rational(*it++);
  return m;
}

QMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 5) + 1);
  return m;
}

}  // namespace

TEST_CASE("matrix product and transpose") {
  QMatrix a = from_rows(2, 3, {1, 2, 3, 4, 5, 6});
  QMatrix b = from_rows(3, 2, {7, 8, 9, 10, 11, 12});
  QMatrix ab = mul(a, b);
  CHECK(ab == from_rows(2, 2, {58, 64, 139, 154}));
  CHECK(mul_serial(a, b) == ab);
  CHECK(a.transpose().transpose() == a);
  QMatrix zero(2, 2);
  CHECK(zero.is_zero());
  CHECK_FALSE(ab.is_zero());
}

TEST_CASE("rational entries stay exact") {
  QMatrix a(1, 1);
  a(0, 0) = Rational(1, 3);
  QMatrix s = mul(a, a);
  CHECK(s(0, 0) == Rational(1, 9));
  // 1/3 * 3 = 1 exactly; no epsilon anywhere.
  CHECK(a(0, 0) * 3 == 1);
}

TEST_CASE("rank of singular and regular matrices") {
  CHECK(rank(from_rows(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(from_rows(2, 2, {1, 2, 3, 4})) == 2);
  CHECK(rank(QMatrix(3, 4)) == 0);
  CHECK(rank(QMatrix(0, 5)) == 0);
  CHECK(rank(QMatrix(5, 0)) == 0);
}

TEST_CASE("kernel basis is deterministic with unit free variables") {
  auto rd = rank_kernel_image(from_rows(2, 2, {1, 2, 2, 4}));
  CHECK(rd.rank == 1);
  REQUIRE(rd.kernel.cols() == 1);
  CHECK(rd.kernel(0, 0) == Rational(-2));
  CHECK(rd.kernel(1, 0) == Rational(1));
  REQUIRE(rd.image.cols() == 1);
  CHECK(rd.image(0, 0) == Rational(1));
  CHECK(rd.image(1, 0) == Rational(2));
}

TEST_CASE("kernel columns are actual kernel vectors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m = random_matrix(5, 8, rng);
    auto rd = rank_kernel_image(m);
    CHECK(rd.rank + rd.kernel.cols() == 8);
    CHECK(mul(m, rd.kernel).is_zero());
  }
}

TEST_CASE("solve returns the free-variables-zero solution") {
  auto x = solve(from_rows(1, 2, {1, 1}), {Rational(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(0));

  auto none = solve(from_rows(2, 1, {1, 1}), {Rational(1), Rational(2)});
  CHECK_FALSE(none.has_value());
}

TEST_CASE("multi_solve solves all columns at once") {
  QMatrix m = from_rows(2, 3, {1, 0, 1, 0, 1, 1});
  QMatrix rhs = from_rows(2, 2, {1, 3, 2, 5});
  auto x = multi_solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(mul(m, *x) == rhs);
  // Free third variable pinned to zero in every column.
  CHECK((*x)(2, 0) == Rational(0));
  CHECK((*x)(2, 1) == Rational(0));

  QMatrix bad_rhs = from_rows(2, 1, {1, 1});
  auto none = multi_solve(from_rows(2, 1, {1, 2}), bad_rhs);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("quotient space splits ambient into relations and coset basis") {
  // Relations x0 = x1 in Q^3: dim 2, coset basis on the non-pivot coordinates.
  QMatrix rel = from_rows(1, 3, {1, -1, 0});
  auto q = quotient_space(3, rel);
  CHECK(q.dim() == 2);
  CHECK(mul(q.coords, q.coset_basis) == QMatrix::identity(2));
  CHECK(mul(q.projection, q.projection) == q.projection);
  // (1,1,0) and (2,0,0) differ by the relation (1,-1,0): same class.
  std::vector<Rational> u{1, 1, 0}, v{2, 0, 0};
  CHECK(q.coords.apply(u) == q.coords.apply(v));
}

TEST_CASE("parallel and serial elimination agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    QMatrix m = random_matrix(12, 17, rng);
    auto p = rank_kernel_image(m);
    auto s = rank_kernel_image_serial(m);
    CHECK(p.rank == s.rank);
    CHECK(p.kernel == s.kernel);
    CHECK(p.image == s.image);
    CHECK(rank(m) == rank_serial(m));
  }
}
