#pragma once

#include "tauweave/rational.hpp"

#include <cstddef>
#include <vector>

namespace tauweave {

using QVec = std::vector<Rational>;

// Dense rational matrix. Everything here is plain Gaussian elimination;
// problem sizes stay double-digit so no pivoting strategy is needed beyond
// "first nonzero".
class QMat {
public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void append_row(const QVec &row);

  QMat multiplied(const QMat &other) const;
  QVec apply(const QVec &v) const;

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  bool operator==(const QMat &other) const = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

bool is_zero(const QVec &v);
QVec scaled(const QVec &v, const Rational &c);
void add_scaled(QVec &dst, const QVec &src, const Rational &c);

// Row-space utilities used for exact span bookkeeping.
class RowSpace {
public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the current basis; returns the residue.
  QVec reduce(const QVec &v) const;

  // Inserts v if independent; returns true when the rank grew.
  bool insert(const QVec &v);

  bool contains(const QVec &v) const { return is_zero(reduce(v)); }
  bool contains_all(const RowSpace &other) const;
  bool equals(const RowSpace &other) const;

  const std::vector<QVec> &basis() const { return rows_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }

private:
  std::size_t dim_;
  std::vector<QVec> rows_;          // kept in reduced echelon form
  std::vector<std::size_t> pivots_; // pivot column of each row
};

// Solves A x = b; returns false when inconsistent.
bool solve(const QMat &a, const QVec &b, QVec &x);

// Basis of the right nullspace of A.
std::vector<QVec> nullspace(const QMat &a);

} // namespace tauweave
