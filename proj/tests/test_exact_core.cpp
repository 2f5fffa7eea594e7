#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gkm/bivar_poly.hpp"
#include "gkm/linalg.hpp"
#include "gkm/matrix.hpp"
#include "gkm/rational.hpp"
#include "oracles.hpp"

using namespace gkm;

TEST_CASE("rational canonical form") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat(-6, -4).str() == "3/2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat(0, 5).is_zero());
  CHECK(Rat(7).den() == 1);
  CHECK(Rat(1, -2).num() == -1);
  CHECK(Rat(1, -2).den() == 2);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-4/8") == Rat(-1, 2));
  CHECK(Rat::parse("-14") == Rat(-14));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK(Rat::parse("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(3, 4) / Rat(3, 2) == Rat(1, 2));
  CHECK(-Rat(1, 2) == Rat(-1, 2));
  CHECK(Rat(-3, 7).abs() == Rat(3, 7));
  CHECK(Rat(-3, 7).sign() == -1);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK(Rat(2, 3).pow(0) == Rat(1));
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(-1, 2).pow(2) == Rat(1, 4));
  CHECK(Rat(-1, 2).pow(3) == Rat(-1, 8));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  Rat acc(1, 3);
  acc += Rat(1, 6);
  CHECK(acc == Rat(1, 2));
  acc *= Rat(4);
  CHECK(acc == Rat(2));
}

TEST_CASE("polynomial arithmetic") {
  const BivarPoly x = BivarPoly::var_x();
  const BivarPoly y = BivarPoly::var_y();
  const BivarPoly p = (x + y) * (x + y);
  CHECK(p.coeff(2, 0) == Rat(1));
  CHECK(p.coeff(1, 1) == Rat(2));
  CHECK(p.coeff(0, 2) == Rat(1));
  CHECK(p.str() == "x^2+2*x*y+y^2");
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous(2));
  CHECK_FALSE(p.is_homogeneous(1));
  CHECK((p - p).is_zero());
  CHECK((p - p).total_degree() == -1);
  CHECK((p - p).is_homogeneous(0));
  CHECK((p - p).is_homogeneous(5));
  CHECK((p - p).str() == "0");
  CHECK((-x).str() == "-x");
  CHECK(BivarPoly::constant(Rat(5, 3)).str() == "5/3");
  CHECK((x * x + y).is_homogeneous(2) == false);
  CHECK(p.scaled(Rat(1, 2)).coeff(1, 1) == Rat(1));
  CHECK(p.scaled(Rat(0)).is_zero());
}

TEST_CASE("substitution and linear divisibility") {
  const BivarPoly x = BivarPoly::var_x();
  const BivarPoly y = BivarPoly::var_y();
  // (x - y)^2 vanishes on y = x, not on y = 2x.
  const BivarPoly sq = (x - y) * (x - y);
  CHECK(divisible_by_linear(sq, Rat(1)));
  CHECK_FALSE(divisible_by_linear(sq, Rat(2)));
  // (y - a*x) * q is always divisible by (y - a*x).
  const Rat a(-3, 5);
  const BivarPoly factor = y - x.scaled(a);
  const BivarPoly q = x.scaled(Rat(3)) + y.scaled(Rat(1, 2)) + BivarPoly::constant(Rat(7));
  CHECK(divisible_by_linear(factor * q, a));
  CHECK_FALSE(divisible_by_linear(factor * q + BivarPoly::constant(Rat(1)), a));
  // Substituting y = a*x flattens every term onto the x-axis.
  const BivarPoly s = (x + y).substitute_y(Rat(2));
  CHECK(s.coeff(1, 0) == Rat(3));
  CHECK(s.terms().size() == 1);
  CHECK(BivarPoly().substitute_y(Rat(5)).is_zero());
}

TEST_CASE("rank on frozen small matrices") {
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(RatMatrix(3, 5)) == 0);
  CHECK(rank(RatMatrix(0, 7)) == 0);
  CHECK(rank(RatMatrix(7, 0)) == 0);
  const RatMatrix collinear = RatMatrix::from_rows({
      {Rat(1), Rat(2), Rat(3)},
      {Rat(4), Rat(5), Rat(6)},
      {Rat(7), Rat(8), Rat(9)},
  });
  CHECK(rank(collinear) == 2);
  CHECK(rank_serial(collinear) == 2);
  CHECK(left_nullity(collinear) == 1);
  const RatMatrix singular_fractions = RatMatrix::from_rows({
      {Rat(1, 2), Rat(1, 3)},
      {Rat(1, 4), Rat(1, 6)},
  });
  CHECK(rank(singular_fractions) == 1);
  CHECK(rank_serial(singular_fractions) == 1);
}

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool force_deficient) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(num(rng), den(rng));
  if (force_deficient && rows >= 2) {
    // Overwrite the last row with a combination of the first two.
    const Rat f1(num(rng), den(rng)), f2(num(rng), den(rng));
    for (int c = 0; c < cols; ++c)
      m.at(rows - 1, c) = f1 * m.at(0, c) + (rows >= 2 ? f2 * m.at(1, c) : Rat(0));
  }
  return m;
}

}  // namespace

TEST_CASE("rank matches the minor-determinant oracle on random matrices") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const RatMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0);
    const std::size_t expected = oracles::rank_by_minors(m);
    CHECK(rank(m) == expected);
    CHECK(rank_serial(m) == expected);
  }
}

TEST_CASE("rank is column-duplication invariant") {
  std::mt19937_64 rng(7);
  const RatMatrix m = random_matrix(rng, 4, 3, false);
  RatMatrix doubled(4, 6);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) {
      doubled.at(r, c) = m.at(r, c);
      doubled.at(r, c + 3) = m.at(r, c);
    }
  CHECK(rank(doubled) == rank(m));
}

TEST_CASE("parallel and serial elimination agree on wide structured matrices") {
  // Power blocks similar in shape to the relation matrices: wide enough to
  // enter the parallel row-update path.
  for (int size : {12, 16}) {
    RatMatrix m(size, 3 * size);
    for (int r = 0; r < size; ++r) {
      const Rat base(r + 2, 2 * r + 1);
      for (int c = 0; c < 3 * size; ++c)
        m.at(r, c) = base.pow(static_cast<unsigned>(c % (size / 2)));
    }
    CHECK(rank(m) == rank_serial(m));
  }
  std::mt19937_64 rng(99);
  const RatMatrix m = random_matrix(rng, 10, 24, true);
  CHECK(rank(m) == rank_serial(m));
}

TEST_CASE("right kernel basis") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 2 + static_cast<int>(rng() % 5);
    const RatMatrix m = random_matrix(rng, rows, cols, trial % 2 == 0);
    const RatMatrix kernel = right_kernel_basis(m);
    CHECK(kernel.rows() == cols - rank(m));
    CHECK(kernel.cols() == static_cast<std::size_t>(cols));
    // Every basis vector lies in the kernel.
    for (std::size_t b = 0; b < kernel.rows(); ++b) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rat dot(0);
        for (std::size_t c = 0; c < m.cols(); ++c) dot += m.at(r, c) * kernel.at(b, c);
        CHECK(dot.is_zero());
      }
    }
    // The basis vectors are independent.
    RrefAccumulator acc(cols);
    for (std::size_t b = 0; b < kernel.rows(); ++b) CHECK(acc.insert(kernel.row(b)));
  }
  // Zero-row matrix: the kernel is everything.
  CHECK(right_kernel_basis(RatMatrix(0, 3)) == RatMatrix::identity(3));
}

TEST_CASE("incremental span tracking") {
  RrefAccumulator acc(3);
  const std::vector<Rat> v1{Rat(1), Rat(2), Rat(3)};
  const std::vector<Rat> v2{Rat(0), Rat(1), Rat(1)};
  CHECK(acc.insert(v1));
  CHECK_FALSE(acc.insert({Rat(2), Rat(4), Rat(6)}));
  CHECK(acc.insert(v2));
  CHECK(acc.rank() == 2);
  // A combination of v1 and v2 is contained; an outside vector is not.
  CHECK(acc.contains({Rat(1), Rat(3), Rat(4)}));
  CHECK(acc.contains({Rat(0), Rat(0), Rat(0)}));
  CHECK_FALSE(acc.contains({Rat(0), Rat(0), Rat(1)}));
  CHECK_FALSE(acc.insert({Rat(1), Rat(3), Rat(4)}));
  CHECK(acc.insert({Rat(0), Rat(0), Rat(1)}));
  CHECK(acc.rank() == 3);
}

TEST_CASE("row span helpers") {
  const RatMatrix rows = RatMatrix::from_rows({
      {Rat(1), Rat(0), Rat(1)},
      {Rat(0), Rat(1), Rat(1)},
  });
  CHECK(in_row_span(rows, {Rat(2), Rat(3), Rat(5)}));
  CHECK_FALSE(in_row_span(rows, {Rat(0), Rat(0), Rat(1)}));
  const std::vector<Rat> combo = row_times_matrix({Rat(2), Rat(3)}, rows);
  CHECK(combo == std::vector<Rat>{Rat(2), Rat(3), Rat(5)});
}
