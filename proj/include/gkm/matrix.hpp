#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Dense row-major matrix of exact rationals.  0 x n and n x 0 are valid.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Rat>& v);
  void append_row(const std::vector<Rat>& v);

  RatMatrix transposed() const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace gkm
