#include "gkm/matrix.hpp"

#include <stdexcept>

namespace gkm {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

std::vector<Rat> RatMatrix::row(std::size_t r) const {
  std::vector<Rat> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void RatMatrix::set_row(std::size_t r, const std::vector<Rat>& v) {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: row width mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void RatMatrix::append_row(const std::vector<Rat>& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix: row width mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

}  // namespace gkm
