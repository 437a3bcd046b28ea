#pragma once

#include <ostream>
#include <vector>

#include "zinbiel/rational.hpp"

namespace zinbiel {

/// Dense rational matrix, row-major.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static MatrixQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Rational> row(int r) const;
  std::vector<Rational> col(int c) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  MatrixQ transposed() const;

  MatrixQ operator*(const MatrixQ& rhs) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;  // matrix * column vector
  MatrixQ operator+(const MatrixQ& rhs) const;
  MatrixQ operator-(const MatrixQ& rhs) const;
  MatrixQ scaled(const Rational& s) const;

  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Commutator a*b - b*a of square matrices.
MatrixQ commutator(const MatrixQ& a, const MatrixQ& b);

/// Column-major vectorization of a square operator matrix: entry (r, c)
/// lands at index c*n + r. This is the coordinate convention every
/// operator-space solve and subspace in this library uses.
std::vector<Rational> vectorize_operator(const MatrixQ& m);
MatrixQ operator_from_vector(const std::vector<Rational>& v, int n);

struct RrefResult {
  MatrixQ matrix;
  int rank = 0;
  std::vector<int> pivot_cols;
};

/// Textbook exact reduced row echelon form. Deterministic: the pivot is
/// the first nonzero entry of each column, no pivot selection heuristics
/// (none are needed in exact arithmetic).
RrefResult rref(MatrixQ m);

/// True when rows of m form a canonical RREF basis (pivots 1, strictly
/// increasing pivot columns, zeros above and below pivots, no zero rows).
bool is_canonical_rref(const MatrixQ& m);

std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

}  // namespace zinbiel
