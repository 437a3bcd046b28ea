#include "zinbiel/operator_spaces.hpp"

#include <stdexcept>

namespace zinbiel {

namespace {

constexpr int kPowerChainCap = 64;

// Index of unknown a_rc in the column-major vectorization.
inline std::uint32_t unknown_index(int n, int r, int c) {
  return static_cast<std::uint32_t>(c) * n + r;
}

struct MultOps {
  std::vector<MatrixQ> left;   // left[i](k, t)  = gamma(i, t, k)
  std::vector<MatrixQ> right;  // right[j](k, t) = gamma(t, j, k)
  std::vector<bool> left_zero, right_zero;
};

MultOps mult_ops(const AlgebraPresentation& a) {
  const int n = a.dim;
  MultOps ops;
  ops.left.reserve(n);
  ops.right.reserve(n);
  ops.left_zero.assign(n, true);
  ops.right_zero.assign(n, true);
  for (int i = 0; i < n; ++i) {
    MatrixQ l(n, n), r(n, n);
    for (int t = 0; t < n; ++t) {
      for (int k = 0; k < n; ++k) {
        l.at(k, t) = a.gamma_at(i, t, k);
        r.at(k, t) = a.gamma_at(t, i, k);
        if (l.at(k, t) != 0) ops.left_zero[i] = false;
        if (r.at(k, t) != 0) ops.right_zero[i] = false;
      }
    }
    ops.left.push_back(std::move(l));
    ops.right.push_back(std::move(r));
  }
  return ops;
}

bool product_zero(const AlgebraPresentation& a, int i, int j) {
  for (int k = 0; k < a.dim; ++k)
    if (a.gamma_at(i, j, k) != 0) return false;
  return true;
}

// Emits the equations of one basis pair (i, j) into `sink`. The offset
// shifts the companion block of the quasi-derivation system.
template <typename Sink>
void emit_pair_equations(const AlgebraPresentation& a, const MultOps& ops, SpaceKind kind, int i,
                         int j, Sink&& sink) {
  const int n = a.dim;
  const MatrixQ& li = ops.left[i];
  const MatrixQ& rj = ops.right[j];
  const bool li_zero = ops.left_zero[i];
  const bool rj_zero = ops.right_zero[j];
  const bool prod_zero = product_zero(a, i, j);

  switch (kind) {
    case SpaceKind::kQuasiCentroid: {
      // phi(e_i) e_j = e_i phi(e_j)
      if (li_zero && rj_zero) return;
      for (int p = 0; p < n; ++p) {
        SparseRowQ row;
        for (int t = 0; t < n; ++t) {
          if (rj.at(p, t) != 0) row.emplace_back(unknown_index(n, t, i), rj.at(p, t));
          if (li.at(p, t) != 0) row.emplace_back(unknown_index(n, t, j), -li.at(p, t));
        }
        sink(row);
      }
      return;
    }
    case SpaceKind::kDerivation: {
      // d(e_i) e_j + e_i d(e_j) = d(e_i e_j)
      if (li_zero && rj_zero && prod_zero) return;
      for (int p = 0; p < n; ++p) {
        SparseRowQ row;
        for (int t = 0; t < n; ++t) {
          if (rj.at(p, t) != 0) row.emplace_back(unknown_index(n, t, i), rj.at(p, t));
          if (li.at(p, t) != 0) row.emplace_back(unknown_index(n, t, j), li.at(p, t));
        }
        for (int k = 0; k < n; ++k) {
          const Rational& g = a.gamma_at(i, j, k);
          if (g != 0) row.emplace_back(unknown_index(n, p, k), -g);
        }
        sink(row);
      }
      return;
    }
    case SpaceKind::kCentroid: {
      // phi(e_i e_j) = phi(e_i) e_j and phi(e_i e_j) = e_i phi(e_j)
      for (int p = 0; p < n; ++p) {
        SparseRowQ row1, row2;
        for (int t = 0; t < n; ++t) {
          if (rj.at(p, t) != 0) row1.emplace_back(unknown_index(n, t, i), rj.at(p, t));
          if (li.at(p, t) != 0) row2.emplace_back(unknown_index(n, t, j), li.at(p, t));
        }
        for (int k = 0; k < n; ++k) {
          const Rational& g = a.gamma_at(i, j, k);
          if (g != 0) {
            row1.emplace_back(unknown_index(n, p, k), -g);
            row2.emplace_back(unknown_index(n, p, k), -g);
          }
        }
        sink(row1);
        sink(row2);
      }
      return;
    }
    case SpaceKind::kCentralDerivation: {
      // phi(e_i) e_j = 0 and e_i phi(e_j) = 0
      for (int p = 0; p < n; ++p) {
        SparseRowQ row1, row2;
        for (int t = 0; t < n; ++t) {
          if (rj.at(p, t) != 0) row1.emplace_back(unknown_index(n, t, i), rj.at(p, t));
          if (li.at(p, t) != 0) row2.emplace_back(unknown_index(n, t, j), li.at(p, t));
        }
        sink(row1);
        sink(row2);
      }
      return;
    }
    case SpaceKind::kQuasiDerivationProjection: {
      // d(e_i) e_j + e_i d(e_j) = d'(e_i e_j), companion block at offset n^2
      const std::uint32_t off = static_cast<std::uint32_t>(n) * n;
      if (li_zero && rj_zero && prod_zero) return;
      for (int p = 0; p < n; ++p) {
        SparseRowQ row;
        for (int t = 0; t < n; ++t) {
          if (rj.at(p, t) != 0) row.emplace_back(unknown_index(n, t, i), rj.at(p, t));
          if (li.at(p, t) != 0) row.emplace_back(unknown_index(n, t, j), li.at(p, t));
        }
        for (int k = 0; k < n; ++k) {
          const Rational& g = a.gamma_at(i, j, k);
          if (g != 0) row.emplace_back(off + unknown_index(n, p, k), -g);
        }
        sink(row);
      }
      return;
    }
  }
}

Subspace solve_assembled(const AlgebraPresentation& a, SpaceKind kind, int ambient) {
  const MultOps ops = mult_ops(a);
  LinearSystem system(ambient);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      emit_pair_equations(a, ops, kind, i, j, [&](const SparseRowQ& row) { system.add_row(row); });
  return system.solve_kernel().kernel;
}

}  // namespace

const char* space_kind_key(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kDerivation: return "der";
    case SpaceKind::kCentroid: return "centroid";
    case SpaceKind::kQuasiCentroid: return "qcentroid";
    case SpaceKind::kCentralDerivation: return "cder";
    case SpaceKind::kQuasiDerivationProjection: return "qder";
  }
  return "?";
}

OperatorSpace solve_space(const AlgebraPresentation& a, SpaceKind kind) {
  if (kind == SpaceKind::kQuasiDerivationProjection) {
    throw std::invalid_argument("solve_space: quasi-derivations go through solve_quasi_derivations");
  }
  OperatorSpace out;
  out.kind = kind;
  out.n = a.dim;
  out.space = solve_assembled(a, kind, a.dim * a.dim);
  return out;
}

MatrixQ QDerPairSpace::pair_d(int i) const {
  const std::vector<Rational> v = pairs.basis_vector(i);
  return operator_from_vector(std::vector<Rational>(v.begin(), v.begin() + n * n), n);
}

MatrixQ QDerPairSpace::pair_companion(int i) const {
  const std::vector<Rational> v = pairs.basis_vector(i);
  return operator_from_vector(std::vector<Rational>(v.begin() + n * n, v.end()), n);
}

std::optional<MatrixQ> QDerPairSpace::companion_for(const MatrixQ& d) const {
  // Solve for combination coefficients of the pair basis whose d block
  // matches, then read the companion block off the same combination.
  const int nn = n * n;
  const int dim = pairs.dim();
  const std::vector<Rational> target = vectorize_operator(d);
  MatrixQ sys(nn, dim + 1);
  for (int r = 0; r < nn; ++r) {
    for (int b = 0; b < dim; ++b) sys.at(r, b) = pairs.basis().at(b, r);
    sys.at(r, dim) = target[r];
  }
  RrefResult red = rref(std::move(sys));
  std::vector<Rational> coeff(dim);
  for (int k = 0; k < red.rank; ++k) {
    const int p = red.pivot_cols[k];
    if (p == dim) return std::nullopt;  // inconsistent: d outside the projection
    coeff[p] = red.matrix.at(k, dim);
  }
  std::vector<Rational> companion(nn);
  for (int b = 0; b < dim; ++b) {
    if (coeff[b] == 0) continue;
    for (int r = 0; r < nn; ++r) {
      const Rational& x = pairs.basis().at(b, nn + r);
      if (x != 0) companion[r] += coeff[b] * x;
    }
  }
  return operator_from_vector(companion, n);
}

QDerPairSpace solve_quasi_derivations(const AlgebraPresentation& a) {
  const int n = a.dim;
  QDerPairSpace out;
  out.n = n;
  out.pairs = solve_assembled(a, SpaceKind::kQuasiDerivationProjection, 2 * n * n);
  std::vector<std::vector<Rational>> d_parts;
  d_parts.reserve(out.pairs.dim());
  for (int r = 0; r < out.pairs.dim(); ++r) {
    const std::vector<Rational> v = out.pairs.basis_vector(r);
    d_parts.emplace_back(v.begin(), v.begin() + n * n);
  }
  out.projection.kind = SpaceKind::kQuasiDerivationProjection;
  out.projection.n = n;
  out.projection.space = Subspace::from_spanning(n * n, d_parts);
  return out;
}

Subspace solve_space_pairwise(const AlgebraPresentation& a, SpaceKind kind) {
  const int n = a.dim;
  const int ambient = kind == SpaceKind::kQuasiDerivationProjection ? 2 * n * n : n * n;
  const MultOps ops = mult_ops(a);
  Subspace acc = Subspace::full(ambient);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<SparseRowQ> rows;
      emit_pair_equations(a, ops, kind, i, j, [&](const SparseRowQ& row) {
        if (!row.empty()) rows.push_back(row);
      });
      if (rows.empty()) continue;
      MatrixQ m(static_cast<int>(rows.size()), ambient);
      for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : rows[r]) m.at(r, static_cast<int>(c)) += v;
      acc = Subspace::intersection(acc, nullspace(m));
      if (acc.dim() == 0) return acc;
    }
  }
  return acc;
}

Subspace solve_qder_pairs_pairwise(const AlgebraPresentation& a) {
  return solve_space_pairwise(a, SpaceKind::kQuasiDerivationProjection);
}

MemberCheck verify_member(const AlgebraPresentation& a, SpaceKind kind, const MatrixQ& phi,
                          const std::optional<MatrixQ>& companion) {
  const int n = a.dim;
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("verify_member: operator shape mismatch");
  if (kind == SpaceKind::kQuasiDerivationProjection && !companion.has_value()) {
    throw std::invalid_argument("verify_member: quasi-derivation check requires a companion");
  }
  const auto apply = [&](const MatrixQ& op, const ElementVector& v) { return op.apply(v); };
  for (int i = 0; i < n; ++i) {
    const ElementVector ei = a.basis_vector(i);
    const ElementVector phi_ei = apply(phi, ei);
    for (int j = 0; j < n; ++j) {
      const ElementVector ej = a.basis_vector(j);
      const ElementVector phi_ej = apply(phi, ej);
      const ElementVector prod = multiply(a, ei, ej);
      bool ok = true;
      switch (kind) {
        case SpaceKind::kDerivation: {
          const ElementVector lhs = apply(phi, prod);
          const ElementVector r1 = multiply(a, phi_ei, ej);
          const ElementVector r2 = multiply(a, ei, phi_ej);
          for (int t = 0; t < n && ok; ++t) ok = lhs[t] == r1[t] + r2[t];
          break;
        }
        case SpaceKind::kCentroid: {
          const ElementVector lhs = apply(phi, prod);
          const ElementVector r1 = multiply(a, phi_ei, ej);
          const ElementVector r2 = multiply(a, ei, phi_ej);
          for (int t = 0; t < n && ok; ++t) ok = lhs[t] == r1[t] && lhs[t] == r2[t];
          break;
        }
        case SpaceKind::kQuasiCentroid: {
          const ElementVector r1 = multiply(a, phi_ei, ej);
          const ElementVector r2 = multiply(a, ei, phi_ej);
          for (int t = 0; t < n && ok; ++t) ok = r1[t] == r2[t];
          break;
        }
        case SpaceKind::kCentralDerivation: {
          const ElementVector r1 = multiply(a, phi_ei, ej);
          const ElementVector r2 = multiply(a, ei, phi_ej);
          for (int t = 0; t < n && ok; ++t) ok = r1[t] == 0 && r2[t] == 0;
          break;
        }
        case SpaceKind::kQuasiDerivationProjection: {
          const ElementVector lhs1 = multiply(a, phi_ei, ej);
          const ElementVector lhs2 = multiply(a, ei, phi_ej);
          const ElementVector rhs = apply(*companion, prod);
          for (int t = 0; t < n && ok; ++t) ok = lhs1[t] + lhs2[t] == rhs[t];
          break;
        }
      }
      if (!ok) return MemberCheck{false, std::make_pair(i, j)};
    }
  }
  return MemberCheck{true, std::nullopt};
}

std::optional<MatrixQ> find_companion(const AlgebraPresentation& a, const MatrixQ& d) {
  const int n = a.dim;
  // d'(e_i e_j) = d(e_i) e_j + e_i d(e_j): n^2 targets constrain the n^2
  // unknown companion entries; solvability = consistency of the system.
  MatrixQ sys(n * n * n, n * n + 1);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    const ElementVector ei = a.basis_vector(i);
    const ElementVector d_ei = d.apply(ei);
    for (int j = 0; j < n; ++j) {
      const ElementVector ej = a.basis_vector(j);
      const ElementVector target =
          [&] {
            ElementVector t1 = multiply(a, d_ei, ej);
            const ElementVector t2 = multiply(a, ei, d.apply(ej));
            for (int t = 0; t < n; ++t) t1[t] += t2[t];
            return t1;
          }();
      for (int p = 0; p < n; ++p, ++r) {
        for (int k = 0; k < n; ++k) {
          const Rational& g = a.gamma_at(i, j, k);
          if (g != 0) sys.at(r, static_cast<int>(unknown_index(n, p, k))) = g;
        }
        sys.at(r, n * n) = target[p];
      }
    }
  }
  RrefResult red = rref(std::move(sys));
  std::vector<Rational> companion(n * n);
  for (int k = 0; k < red.rank; ++k) {
    const int p = red.pivot_cols[k];
    if (p == n * n) return std::nullopt;  // inconsistent
    companion[p] = red.matrix.at(k, n * n);
  }
  return operator_from_vector(companion, n);
}

MatrixQ ParametricForm::instantiate(const std::vector<Rational>& values) const {
  if (values.size() != param_names.size()) {
    throw std::invalid_argument("instantiate: wrong number of parameter values");
  }
  MatrixQ m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (const auto& [idx, coeff] : grid[r][c].terms) m.at(r, c) += coeff * values[idx];
  return m;
}

std::string ParametricForm::cell_string(int r, int c) const {
  const LinearExpr& e = grid[r][c];
  if (e.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < e.terms.size(); ++t) {
    const auto& [idx, coeff] = e.terms[t];
    const bool neg = coeff < 0;
    const Rational mag = neg ? Rational(-coeff) : coeff;
    if (t == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += param_names[idx];
  }
  return out;
}

std::vector<std::vector<std::string>> ParametricForm::grid_strings() const {
  std::vector<std::vector<std::string>> out(n, std::vector<std::string>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r][c] = cell_string(r, c);
  return out;
}

ParametricForm parametric_form(const OperatorSpace& space) {
  const int n = space.n;
  const char prefix = (space.kind == SpaceKind::kDerivation ||
                       space.kind == SpaceKind::kQuasiDerivationProjection)
                          ? 'd'
                          : 'a';
  ParametricForm form;
  form.n = n;
  form.grid.assign(n, std::vector<LinearExpr>(n));
  for (int b = 0; b < space.dim(); ++b) {
    const std::vector<Rational> v = space.space.basis_vector(b);
    int pivot = -1;
    for (int idx = 0; idx < n * n; ++idx) {
      if (v[idx] != 0) {
        pivot = idx;
        break;
      }
    }
    const int pr = pivot % n, pc = pivot / n;
    std::string name(1, prefix);
    if (n <= 9) {
      name += std::to_string(pr + 1) + std::to_string(pc + 1);
    } else {
      name += std::to_string(pr + 1) + "_" + std::to_string(pc + 1);
    }
    form.param_names.push_back(name);
    for (int idx = 0; idx < n * n; ++idx) {
      if (v[idx] == 0) continue;
      form.grid[idx % n][idx / n].terms.emplace_back(b, v[idx]);
    }
  }
  return form;
}

AlgebraAnalysis analyze_algebra(const AlgebraPresentation& a) {
  AlgebraAnalysis out;
  out.algebra = a;
  out.zinbiel = check_zinbiel(a);
  out.chain = power_chain(a, kPowerChainCap);
  out.annihilator_space = annihilator(a);
  out.der = solve_space(a, SpaceKind::kDerivation);
  out.centroid = solve_space(a, SpaceKind::kCentroid);
  out.qcentroid = solve_space(a, SpaceKind::kQuasiCentroid);
  out.cder = solve_space(a, SpaceKind::kCentralDerivation);
  out.qder = solve_quasi_derivations(a);
  return out;
}

}  // namespace zinbiel
