#include "tauweave/qmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace tauweave {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

void QMat::append_row(const QVec &row) {
  if (cols_ == 0)
    cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("QMat::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

QMat QMat::multiplied(const QMat &other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("QMat::multiplied: shape mismatch");
  QMat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational &x = at(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) += x * other.at(k, j);
    }
  return out;
}

QVec QMat::apply(const QVec &v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("QMat::apply: size mismatch");
  QVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0)
        out[i] += at(i, j) * v[j];
  return out;
}

std::vector<std::size_t> QMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0)
      ++sel;
    if (sel == rows_)
      continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(sel, j), at(row, j));
    const Rational inv = Rational(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j)
      at(row, j) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0)
        continue;
      const Rational f = at(r, col);
      for (std::size_t j = col; j < cols_; ++j)
        at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMat::rank() const {
  QMat copy = *this;
  return copy.rref().size();
}

bool is_zero(const QVec &v) {
  for (const auto &x : v)
    if (x != 0)
      return false;
  return true;
}

QVec scaled(const QVec &v, const Rational &c) {
  QVec out = v;
  for (auto &x : out)
    x *= c;
  return out;
}

void add_scaled(QVec &dst, const QVec &src, const Rational &c) {
  assert(dst.size() == src.size());
  if (c == 0)
    return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] += c * src[i];
}

QVec RowSpace::reduce(const QVec &v) const {
  assert(v.size() == dim_);
  QVec res = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational &c = res[pivots_[k]];
    if (c != 0)
      add_scaled(res, rows_[k], -c);
  }
  return res;
}

bool RowSpace::insert(const QVec &v) {
  QVec res = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && res[p] == 0)
    ++p;
  if (p == dim_)
    return false;
  const Rational inv = Rational(1) / res[p];
  for (auto &x : res)
    x *= inv;
  // keep the stored basis reduced against the new row
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational &c = rows_[k][p];
    if (c != 0)
      add_scaled(rows_[k], res, -c);
  }
  rows_.push_back(std::move(res));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains_all(const RowSpace &other) const {
  for (const auto &row : other.rows_)
    if (!contains(row))
      return false;
  return true;
}

bool RowSpace::equals(const RowSpace &other) const {
  return rank() == other.rank() && contains_all(other);
}

bool solve(const QMat &a, const QVec &b, QVec &x) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = aug.rref();
  x.assign(a.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] == a.cols())
      return false; // pivot in the augmented column
    x[pivots[k]] = aug.at(k, a.cols());
  }
  return true;
}

std::vector<QVec> nullspace(const QMat &a) {
  QMat copy = a;
  auto pivots = copy.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    QVec v(a.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -copy.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace tauweave
