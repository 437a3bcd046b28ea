#pragma once

#include <vector>

#include "zinbiel/matrix.hpp"

namespace zinbiel {

/// Linear subspace of Q^n stored as the canonical RREF basis matrix
/// (one basis vector per row). Canonicity makes equality a plain data
/// comparison: two Subspace values represent the same subspace iff their
/// stored bases are identical entry for entry.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);

  /// Canonicalizes an arbitrary spanning set.
  static Subspace from_spanning(int ambient, const std::vector<std::vector<Rational>>& vectors);

  /// Adopts rows that are already a canonical RREF basis. Throws if the
  /// canonical-form invariant does not hold.
  static Subspace from_canonical_rows(int ambient, MatrixQ rows);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  std::vector<Rational> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersection(const Subspace& a, const Subspace& b);

 private:
  int ambient_ = 0;
  MatrixQ basis_;  // dim x ambient, canonical RREF, no zero rows
};

/// Exact solution set {x : m x = 0} as a canonical Subspace of Q^cols.
Subspace nullspace(const MatrixQ& m);

}  // namespace zinbiel
