#pragma once

#include "qgalois/cyclo.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qgalois {

using FinVec = std::vector<CycloScalar>;

/// Dense matrix over Q(w), row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<CycloScalar> entries);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycloScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<CycloScalar>& entries() const { return data_; }

  bool is_zero() const;
  ExactMatrix transpose() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const CycloScalar& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const CycloScalar& c) { return a *= c; }
  friend ExactMatrix operator*(const CycloScalar& c, ExactMatrix a) { return a *= c; }
  /// Skips zero entries; the matrices here are very sparse.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloScalar> data_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix matrix_power(const ExactMatrix& m, unsigned n);

/// Rank by exact Gaussian elimination.
std::size_t rank(std::vector<FinVec> rows);
std::size_t rank(const ExactMatrix& m);

/// Basis of {x : A x = 0} for the equations given as rows over `unknowns`
/// columns. Each basis vector has a 1 at its free column and 0 at the other
/// free columns.
std::vector<FinVec> nullspace(std::vector<FinVec> rows, std::size_t unknowns);

}  // namespace qgalois
