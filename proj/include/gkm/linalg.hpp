#pragma once

#include <cstddef>
#include <vector>

#include "gkm/matrix.hpp"

namespace gkm {

// Exact rank over the rationals.  Clears denominators row by row, then runs
// fraction-free (division-exact) elimination on integers.  The pivot is
// always the first row with a nonzero entry in the current column, so the
// result and every intermediate value are independent of thread count; row
// updates below the pivot run under OpenMP.
std::size_t rank(const RatMatrix& m);

// Reference implementation: plain rational Gaussian elimination, single
// threaded.  Kept for tests and the rank benchmark.
std::size_t rank_serial(const RatMatrix& m);

// rows - rank: the number of independent linear relations among the rows.
std::size_t left_nullity(const RatMatrix& m);

// Basis of {v : M v = 0}, one row per basis vector.  Built from the reduced
// row echelon form with one vector per free column, free columns ascending;
// fully deterministic.
RatMatrix right_kernel_basis(const RatMatrix& m);

// Incremental row-span tracker.  insert() reduces the vector against the
// rows kept so far and keeps it when independent.
class RrefAccumulator {
 public:
  explicit RrefAccumulator(std::size_t cols) : cols_(cols) {}

  // True when v was independent of the current span (and is now part of it).
  bool insert(std::vector<Rat> v);
  bool contains(std::vector<Rat> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rat>> rows_;     // pivot normalized to 1
  std::vector<std::size_t> pivot_cols_;    // pivot column of rows_[i]
  void reduce(std::vector<Rat>& v) const;
};

std::vector<Rat> row_times_matrix(const std::vector<Rat>& c, const RatMatrix& m);
bool in_row_span(const RatMatrix& rows, const std::vector<Rat>& v);

}  // namespace gkm
