#include "zinbiel/matrix.hpp"

#include <stdexcept>

namespace zinbiel {

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> MatrixQ::row(int r) const {
  std::vector<Rational> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Rational> MatrixQ::col(int c) const {
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

MatrixQ MatrixQ::operator*(const MatrixQ& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  MatrixQ out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs.at(k, j) != 0) out.at(i, j) += x * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<Rational> MatrixQ::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  std::vector<Rational> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

MatrixQ MatrixQ::operator+(const MatrixQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  MatrixQ out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

MatrixQ MatrixQ::operator-(const MatrixQ& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix diff: shape mismatch");
  MatrixQ out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

MatrixQ MatrixQ::scaled(const Rational& s) const {
  MatrixQ out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

MatrixQ commutator(const MatrixQ& a, const MatrixQ& b) { return a * b - b * a; }

std::vector<Rational> vectorize_operator(const MatrixQ& m) {
  if (!m.is_square()) throw std::invalid_argument("vectorize_operator: square matrix required");
  const int n = m.rows();
  std::vector<Rational> v(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(c) * n + r] = m.at(r, c);
  return v;
}

MatrixQ operator_from_vector(const std::vector<Rational>& v, int n) {
  if (static_cast<int>(v.size()) != n * n) throw std::invalid_argument("operator_from_vector: length != n^2");
  MatrixQ m(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m.at(r, c) = v[static_cast<std::size_t>(c) * n + r];
  return m;
}

RrefResult rref(MatrixQ m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int lead = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && lead < rows; ++c) {
    int p = -1;
    for (int r = lead; r < rows; ++r) {
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead) {
      for (int j = 0; j < cols; ++j) swap(m.at(p, j), m.at(lead, j));
    }
    const Rational inv = 1 / m.at(lead, c);
    for (int j = c; j < cols; ++j) m.at(lead, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Rational f = m.at(r, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) m.at(r, j) -= f * m.at(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return RrefResult{std::move(m), static_cast<int>(pivots.size()), std::move(pivots)};
}

bool is_canonical_rref(const MatrixQ& m) {
  int last_pivot = -1;
  for (int r = 0; r < m.rows(); ++r) {
    int p = -1;
    for (int c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) return false;  // zero row
    if (p <= last_pivot) return false;
    if (m.at(r, p) != 1) return false;
    for (int rr = 0; rr < m.rows(); ++rr) {
      if (rr != r && m.at(rr, p) != 0) return false;
    }
    last_pivot = p;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const MatrixQ& m) {
  for (int r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (int c = 0; c < m.cols(); ++c) {
      os << rational_to_string(m.at(r, c));
      if (c + 1 < m.cols()) os << ", ";
    }
    os << "]" << (r + 1 < m.rows() ? ",\n" : "]");
  }
  return os;
}

}  // namespace zinbiel
