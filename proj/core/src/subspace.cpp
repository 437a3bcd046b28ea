#include "zinbiel/subspace.hpp"

#include <stdexcept>

#include "zinbiel/linear_system.hpp"

namespace zinbiel {

namespace {

// Spanning sets beyond this many entries go through the scaled solver
// instead of textbook elimination.
constexpr long kDirectRrefLimit = 64L * 1024L;

}  // namespace

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatrixQ(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatrixQ::identity(ambient);
  return s;
}

Subspace Subspace::from_spanning(int ambient, const std::vector<std::vector<Rational>>& vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) {
      throw std::invalid_argument("from_spanning: vector length != ambient dimension");
    }
  }
  const long entries = static_cast<long>(vectors.size()) * ambient;
  if (entries > kDirectRrefLimit) {
    // Row space via two kernels: rowspace(B) = kernel(kernel(B)).
    LinearSystem perp(ambient);
    for (const auto& v : vectors) perp.add_dense_row(v);
    const Subspace orth = perp.solve_kernel().kernel;
    LinearSystem back(ambient);
    for (int i = 0; i < orth.dim(); ++i) back.add_dense_row(orth.basis_vector(i));
    return back.solve_kernel().kernel;
  }

  MatrixQ m(static_cast<int>(vectors.size()), ambient);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < ambient; ++c) m.at(r, c) = vectors[r][c];
  RrefResult red = rref(std::move(m));
  MatrixQ basis(red.rank, ambient);
  for (int r = 0; r < red.rank; ++r)
    for (int c = 0; c < ambient; ++c) basis.at(r, c) = red.matrix.at(r, c);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::from_canonical_rows(int ambient, MatrixQ rows) {
  if (rows.cols() != ambient) throw std::invalid_argument("from_canonical_rows: width != ambient");
  if (rows.rows() > 0 && !is_canonical_rref(rows)) {
    throw std::invalid_argument("from_canonical_rows: rows are not a canonical RREF basis");
  }
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(rows);
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_) {
    throw std::invalid_argument("contains: vector length != ambient dimension");
  }
  std::vector<Rational> rem = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int p = -1;
    for (int c = 0; c < ambient_; ++c) {
      if (basis_.at(r, c) != 0) {
        p = c;
        break;
      }
    }
    const Rational f = rem[p];
    if (f == 0) continue;
    for (int c = p; c < ambient_; ++c) {
      if (basis_.at(r, c) != 0) rem[c] -= f * basis_.at(r, c);
    }
  }
  for (const auto& x : rem) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("contains: ambient dimension mismatch");
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_vector(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(a.dim() + b.dim());
  for (int r = 0; r < a.dim(); ++r) rows.push_back(a.basis_vector(r));
  for (int r = 0; r < b.dim(); ++r) rows.push_back(b.basis_vector(r));
  return from_spanning(a.ambient_, rows);
}

Subspace Subspace::intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("intersection: ambient dimension mismatch");
  const int n = a.ambient_;
  const int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return zero(n);
  // Kernel of the stacked bases: columns are a's basis vectors followed by
  // the negated basis vectors of b; a kernel element (u, v) certifies
  // sum_i u_i a_i = sum_j v_j b_j, which is a point of the intersection.
  MatrixQ stacked(n, da + db);
  for (int j = 0; j < da; ++j)
    for (int c = 0; c < n; ++c) stacked.at(c, j) = a.basis_.at(j, c);
  for (int j = 0; j < db; ++j)
    for (int c = 0; c < n; ++c) stacked.at(c, da + j) = -b.basis_.at(j, c);
  const Subspace ker = nullspace(stacked);
  std::vector<std::vector<Rational>> span;
  span.reserve(ker.dim());
  for (int r = 0; r < ker.dim(); ++r) {
    const std::vector<Rational> uv = ker.basis_vector(r);
    std::vector<Rational> x(n);
    for (int j = 0; j < da; ++j) {
      if (uv[j] == 0) continue;
      for (int c = 0; c < n; ++c)
        if (a.basis_.at(j, c) != 0) x[c] += uv[j] * a.basis_.at(j, c);
    }
    span.push_back(std::move(x));
  }
  return from_spanning(n, span);
}

Subspace nullspace(const MatrixQ& m) {
  const int cols = m.cols();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : red.pivot_cols) is_pivot[c] = true;

  // Free-column construction, then canonicalize through from_spanning so
  // the result is the unique RREF basis of the solution set.
  std::vector<std::vector<Rational>> span;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (int k = 0; k < red.rank; ++k) {
      const int p = red.pivot_cols[k];
      if (red.matrix.at(k, f) != 0) v[p] = -red.matrix.at(k, f);
    }
    span.push_back(std::move(v));
  }
  return Subspace::from_spanning(cols, span);
}

}  // namespace zinbiel
