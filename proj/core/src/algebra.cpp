#include "zinbiel/algebra.hpp"

#include <stdexcept>

namespace zinbiel {

AlgebraPresentation::AlgebraPresentation(std::string name_, int dim_)
    : name(std::move(name_)), dim(dim_) {
  if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  gamma.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
}

ElementVector AlgebraPresentation::basis_vector(int i) const {
  ElementVector v(dim);
  v[i] = 1;
  return v;
}

ElementVector multiply(const AlgebraPresentation& a, const ElementVector& x, const ElementVector& y) {
  const int n = a.dim;
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw std::invalid_argument("multiply: element dimension mismatch");
  }
  ElementVector out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      for (int k = 0; k < n; ++k) {
        const Rational& g = a.gamma_at(i, j, k);
        if (g != 0) out[k] += f * g;
      }
    }
  }
  return out;
}

ZinbielCheck check_zinbiel(const AlgebraPresentation& a) {
  const int n = a.dim;
  for (int i = 0; i < n; ++i) {
    const ElementVector ei = a.basis_vector(i);
    for (int j = 0; j < n; ++j) {
      const ElementVector ej = a.basis_vector(j);
      const ElementVector eij = multiply(a, ei, ej);
      for (int k = 0; k < n; ++k) {
        const ElementVector ek = a.basis_vector(k);
        ElementVector defect = multiply(a, eij, ek);
        const ElementVector right1 = multiply(a, ei, multiply(a, ej, ek));
        const ElementVector right2 = multiply(a, ei, multiply(a, ek, ej));
        bool zero = true;
        for (int t = 0; t < n; ++t) {
          defect[t] -= right1[t] + right2[t];
          if (defect[t] != 0) zero = false;
        }
        if (!zero) {
          return ZinbielCheck{false, ZinbielWitness{i, j, k, std::move(defect)}};
        }
      }
    }
  }
  return ZinbielCheck{true, std::nullopt};
}

MatrixQ mult_operator(const AlgebraPresentation& a, const ElementVector& p, Side side) {
  const int n = a.dim;
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("mult_operator: dimension mismatch");
  MatrixQ m(n, n);
  for (int t = 0; t < n; ++t) {
    const ElementVector image = side == Side::kLeft ? multiply(a, p, a.basis_vector(t))
                                                    : multiply(a, a.basis_vector(t), p);
    for (int k = 0; k < n; ++k) m.at(k, t) = image[k];
  }
  return m;
}

PowerChain power_chain(const AlgebraPresentation& a, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("power_chain: max_steps must be >= 1");
  const int n = a.dim;
  PowerChain chain;
  chain.terms.push_back(Subspace::full(n));
  while (static_cast<int>(chain.terms.size()) < max_steps) {
    const Subspace& prev = chain.terms.back();
    std::vector<std::vector<Rational>> span;
    for (int i = 0; i < n; ++i) {
      const ElementVector ei = a.basis_vector(i);
      for (int r = 0; r < prev.dim(); ++r) {
        span.push_back(multiply(a, ei, prev.basis_vector(r)));
      }
    }
    Subspace next = Subspace::from_spanning(n, span);
    const bool stabilized = next == prev;
    chain.terms.push_back(std::move(next));
    if (chain.terms.back().dim() == 0) {
      chain.nil_index = static_cast<int>(chain.terms.size());
      break;
    }
    if (stabilized) break;
  }
  return chain;
}

Subspace annihilator(const AlgebraPresentation& a) {
  const int n = a.dim;
  // p*e_j = 0 and e_j*p = 0 for all j, written as one stacked system.
  MatrixQ sys(2 * n * n, n);
  int r = 0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k, ++r) {
      for (int i = 0; i < n; ++i) sys.at(r, i) = a.gamma_at(i, j, k);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k, ++r) {
      for (int i = 0; i < n; ++i) sys.at(r, i) = a.gamma_at(j, i, k);
    }
  }
  return nullspace(sys);
}

bool is_ideal(const AlgebraPresentation& a, const Subspace& s) {
  const int n = a.dim;
  for (int r = 0; r < s.dim(); ++r) {
    const ElementVector v = s.basis_vector(r);
    for (int i = 0; i < n; ++i) {
      const ElementVector ei = a.basis_vector(i);
      if (!s.contains(multiply(a, ei, v))) return false;
      if (!s.contains(multiply(a, v, ei))) return false;
    }
  }
  return true;
}

CentralizerResult centralizer(const AlgebraPresentation& a, const Subspace& ideal) {
  const int n = a.dim;
  if (ideal.ambient_dim() != n) throw std::invalid_argument("centralizer: ambient dimension mismatch");
  CentralizerResult out;
  if (ideal.dim() == 0) {
    out.space = Subspace::full(n);
  } else {
    MatrixQ sys(2 * n * ideal.dim(), n);
    int r = 0;
    for (int b = 0; b < ideal.dim(); ++b) {
      const MatrixQ right = mult_operator(a, ideal.basis_vector(b), Side::kRight);
      const MatrixQ left = mult_operator(a, ideal.basis_vector(b), Side::kLeft);
      for (int k = 0; k < n; ++k, ++r)
        for (int i = 0; i < n; ++i) sys.at(r, i) = right.at(k, i);
      for (int k = 0; k < n; ++k, ++r)
        for (int i = 0; i < n; ++i) sys.at(r, i) = left.at(k, i);
    }
    out.space = nullspace(sys);
  }
  out.input_is_ideal = is_ideal(a, ideal);
  if (out.input_is_ideal) out.result_is_ideal = is_ideal(a, out.space);
  return out;
}

AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  AlgebraPresentation sum(a.name + "+" + b.name, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) sum.gamma_at(i, j, k) = a.gamma_at(i, j, k);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k)
        sum.gamma_at(a.dim + i, a.dim + j, a.dim + k) = b.gamma_at(i, j, k);
  sum.params = a.params;
  for (const auto& [key, value] : b.params) sum.params.emplace(key, value);
  return sum;
}

Subspace product_span(const AlgebraPresentation& a) {
  const int n = a.dim;
  std::vector<std::vector<Rational>> span;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> v(n);
      bool any = false;
      for (int k = 0; k < n; ++k) {
        v[k] = a.gamma_at(i, j, k);
        if (v[k] != 0) any = true;
      }
      if (any) span.push_back(std::move(v));
    }
  return Subspace::from_spanning(n, span);
}

}  // namespace zinbiel
