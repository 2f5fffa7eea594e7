#include "gkm/linalg.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gkm {

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Row scaling changes neither rank nor row span.
std::vector<std::vector<mpz_class>> cleared_rows(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    mpz_class l(1);
    for (std::size_t c = 0; c < nc; ++c) {
      const mpz_class d = m.at(r, c).den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const Rat& v = m.at(r, c);
      a[r][c] = v.num() * (l / v.den());
    }
  }
  return a;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<mpz_class>> a = cleared_rows(m);

  // One-step fraction-free elimination.  After each stage every entry is a
  // minor of the original matrix built on the pivot rows/columns chosen so
  // far, which is why the division by the previous pivot is exact.
  mpz_class prev(1);
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    while (piv < nr && sgn(a[piv][col]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[rk], a[piv]);
    const std::vector<mpz_class>& p = a[rk];
    const long lo = static_cast<long>(rk) + 1;
    const long hi = static_cast<long>(nr);
    const bool wide = nc - col >= 8 && hi - lo >= 4;
#pragma omp parallel for schedule(dynamic) if (wide)
    for (long i = lo; i < hi; ++i) {
      std::vector<mpz_class>& row = a[i];
      mpz_class t;
      for (std::size_t j = col + 1; j < nc; ++j) {
        t = p[col] * row[j] - row[col] * p[j];
        if (prev == 1) {
          row[j] = t;
        } else {
          mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      }
      row[col] = 0;
    }
    prev = p[col];
    ++rk;
  }
  return rk;
}

std::size_t rank_serial(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<mpq_class>> a(nr, std::vector<mpq_class>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = m.at(r, c).value();

  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    while (piv < nr && sgn(a[piv][col]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[rk], a[piv]);
    for (std::size_t i = rk + 1; i < nr; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      mpq_class f = a[i][col] / a[rk][col];
      a[i][col] = 0;
      for (std::size_t j = col + 1; j < nc; ++j) a[i][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

std::size_t left_nullity(const RatMatrix& m) { return m.rows() - rank(m); }

RatMatrix right_kernel_basis(const RatMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<mpq_class>> a(nr, std::vector<mpq_class>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) a[r][c] = m.at(r, c).value();

  // Reduced row echelon form with first-nonzero pivoting.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t piv = rk;
    while (piv < nr && sgn(a[piv][col]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[rk], a[piv]);
    mpq_class inv = 1 / a[rk][col];
    for (std::size_t j = col; j < nc; ++j) a[rk][j] *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == rk || sgn(a[i][col]) == 0) continue;
      mpq_class f = a[i][col];
      for (std::size_t j = col; j < nc; ++j) a[i][j] -= f * a[rk][j];
    }
    pivots.emplace_back(rk, col);
    ++rk;
  }

  std::vector<bool> is_pivot(nc, false);
  for (const auto& [r, c] : pivots) is_pivot[c] = true;

  RatMatrix basis(nc - rk, nc);
  std::size_t out = 0;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    basis.at(out, f) = Rat(1);
    for (const auto& [r, c] : pivots) basis.at(out, c) = Rat(mpq_class(-a[r][f]));
    ++out;
  }
  return basis;
}

void RrefAccumulator::reduce(std::vector<Rat>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& f = v[pivot_cols_[i]];
    if (f.is_zero()) continue;
    const Rat fc = f;  // copy, entry changes below
    const std::vector<Rat>& row = rows_[i];
    for (std::size_t j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) v[j] -= fc * row[j];
  }
}

bool RrefAccumulator::insert(std::vector<Rat> v) {
  if (v.size() != cols_) throw std::invalid_argument("RrefAccumulator: width mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < cols_ && v[piv].is_zero()) ++piv;
  if (piv == cols_) return false;
  const Rat inv = Rat(1) / v[piv];
  for (std::size_t j = piv; j < cols_; ++j) v[j] *= inv;
  // Keep existing rows reduced against the new pivot column.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = rows_[i][piv];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) rows_[i][j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivot_cols_.push_back(piv);
  return true;
}

bool RrefAccumulator::contains(std::vector<Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RrefAccumulator: width mismatch");
  reduce(v);
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Rat> row_times_matrix(const std::vector<Rat>& c, const RatMatrix& m) {
  if (c.size() != m.rows()) throw std::invalid_argument("row_times_matrix: size mismatch");
  std::vector<Rat> out(m.cols(), Rat(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (c[r].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += c[r] * m.at(r, j);
  }
  return out;
}

bool in_row_span(const RatMatrix& rows, const std::vector<Rat>& v) {
  RrefAccumulator acc(rows.cols());
  for (std::size_t r = 0; r < rows.rows(); ++r) acc.insert(rows.row(r));
  return acc.contains(v);
}

}  // namespace gkm
