#include "zinbiel/theory.hpp"

#include <stdexcept>

namespace zinbiel {

namespace {

std::vector<MatrixQ> basis_matrices(const Subspace& s, int n) {
  std::vector<MatrixQ> out;
  out.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) out.push_back(operator_from_vector(s.basis_vector(i), n));
  return out;
}

Subspace bracket_span(const Subspace& a, const Subspace& b, int n) {
  std::vector<std::vector<Rational>> span;
  const std::vector<MatrixQ> ma = basis_matrices(a, n);
  const std::vector<MatrixQ> mb = basis_matrices(b, n);
  for (const MatrixQ& x : ma)
    for (const MatrixQ& y : mb) span.push_back(vectorize_operator(commutator(x, y)));
  return Subspace::from_spanning(n * n, span);
}

}  // namespace

LieSpan lie_closure_of(const Subspace& operators, int n) {
  LieSpan out;
  Subspace span = operators;
  bool first = true;
  // Closure strictly grows the dimension, so this terminates within n^2 steps.
  while (true) {
    const Subspace brackets = bracket_span(span, span, n);
    if (span.contains(brackets)) {
      out.closure_verified = first;
      break;
    }
    span = Subspace::sum(span, brackets);
    first = false;
  }
  out.span = span;

  Subspace layer = span;
  out.lower_central_dims.push_back(layer.dim());
  while (layer.dim() > 0) {
    Subspace next = bracket_span(span, layer, n);
    if (next == layer) {  // stabilized above zero
      out.lower_central_dims.push_back(next.dim());
      break;
    }
    out.lower_central_dims.push_back(next.dim());
    layer = std::move(next);
  }
  out.nilpotent = out.lower_central_dims.back() == 0;
  return out;
}

LieSpan lie_closure(const OperatorSpace& space) { return lie_closure_of(space.space, space.n); }

LieSpan lie_closure(const QDerPairSpace& pairs) {
  return lie_closure_of(pairs.projection.space, pairs.n);
}

bool qder_pair_bracket_closed(const AlgebraPresentation& a, const QDerPairSpace& pairs) {
  const int n = pairs.n;
  for (int i = 0; i < pairs.pair_dim(); ++i) {
    const MatrixQ d1 = pairs.pair_d(i);
    const MatrixQ c1 = pairs.pair_companion(i);
    for (int j = 0; j < pairs.pair_dim(); ++j) {
      const MatrixQ bracket_d = commutator(d1, pairs.pair_d(j));
      const MatrixQ bracket_c = commutator(c1, pairs.pair_companion(j));
      if (!verify_member(a, SpaceKind::kQuasiDerivationProjection, bracket_d, bracket_c).valid) {
        return false;
      }
      std::vector<Rational> pair_vec = vectorize_operator(bracket_d);
      const std::vector<Rational> comp_vec = vectorize_operator(bracket_c);
      pair_vec.insert(pair_vec.end(), comp_vec.begin(), comp_vec.end());
      if (!pairs.pairs.contains(pair_vec)) return false;
    }
  }
  return true;
}

SmallnessVerdict smallness(const AlgebraAnalysis& analysis) {
  const int n = analysis.algebra.dim;
  SmallnessVerdict out;
  const Subspace identity_line =
      Subspace::from_spanning(n * n, {vectorize_operator(MatrixQ::identity(n))});
  const Subspace sum = Subspace::sum(analysis.cder.space, identity_line);
  out.dim_qcentroid = analysis.qcentroid.dim();
  out.dim_cder_plus_scalars = sum.dim();
  out.is_small = sum == analysis.qcentroid.space;

  // Composition closure of C_d + scalars: (l*id + phi)(m*id + psi) - lm*id
  // lands back in C_d. Checked on basis elements; central * central and
  // scalar * central products are central by the defining identities.
  out.sum_composition_closed = true;
  const std::vector<MatrixQ> cd = basis_matrices(analysis.cder.space, n);
  for (const MatrixQ& phi : cd) {
    for (const MatrixQ& psi : cd) {
      if (!analysis.cder.space.contains(vectorize_operator(phi * psi))) {
        out.sum_composition_closed = false;
      }
    }
    if (!analysis.cder.space.contains(vectorize_operator(phi))) out.sum_composition_closed = false;
  }

  if (!out.is_small) {
    for (int i = 0; i < analysis.qcentroid.dim(); ++i) {
      if (!sum.contains(analysis.qcentroid.space.basis_vector(i))) {
        out.witness = analysis.qcentroid.basis_matrix(i);
        break;
      }
    }
  }
  return out;
}

SmallnessVerdict smallness(const AlgebraPresentation& a) { return smallness(analyze_algebra(a)); }

bool quasi_char_nilpotent(const AlgebraAnalysis& analysis) {
  return lie_closure(analysis.qder).nilpotent;
}

bool quasi_char_nilpotent(const AlgebraPresentation& a) {
  return quasi_char_nilpotent(analyze_algebra(a));
}

std::vector<ClaimVerdict> reconcile_claims(const AlgebraAnalysis& analysis) {
  const AlgebraPresentation& a = analysis.algebra;
  const int n = a.dim;
  std::vector<ClaimVerdict> out;

  const std::vector<MatrixQ> der = basis_matrices(analysis.der.space, n);
  const std::vector<MatrixQ> qgamma = basis_matrices(analysis.qcentroid.space, n);
  const std::vector<MatrixQ> qder = basis_matrices(analysis.qder.projection.space, n);
  std::vector<MatrixQ> lcol, rcol;
  for (int i = 0; i < n; ++i) {
    lcol.push_back(mult_operator(a, a.basis_vector(i), Side::kLeft));
    rcol.push_back(mult_operator(a, a.basis_vector(i), Side::kRight));
  }

  // Prop 2.7 (2): [d, L_p] = L_{d(p)} for derivations.
  {
    ClaimVerdict v{"Prop2.7.2", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& d : der) {
      for (int p = 0; p < n && v.holds; ++p) {
        const MatrixQ lhs = commutator(d, lcol[p]);
        const MatrixQ rhs = mult_operator(a, d.apply(a.basis_vector(p)), Side::kLeft);
        if (!(lhs == rhs)) {
          v.holds = false;
          v.witness_op = d;
          v.note = "[d, L_p] != L_{d(p)} at p = e" + std::to_string(p + 1);
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Prop 2.7 (3): [d, R_p] = R_{d(p)}.
  {
    ClaimVerdict v{"Prop2.7.3", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& d : der) {
      for (int p = 0; p < n && v.holds; ++p) {
        const MatrixQ lhs = commutator(d, rcol[p]);
        const MatrixQ rhs = mult_operator(a, d.apply(a.basis_vector(p)), Side::kRight);
        if (!(lhs == rhs)) {
          v.holds = false;
          v.witness_op = d;
          v.note = "[d, R_p] != R_{d(p)} at p = e" + std::to_string(p + 1);
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Lemma 2.8: L_{pq} = L_p L_q and R_{pq} = R_q R_p, as printed.
  {
    ClaimVerdict v{"Lemma2.8.L", true, "", std::nullopt, std::nullopt};
    for (int i = 0; i < n && v.holds; ++i) {
      for (int j = 0; j < n && v.holds; ++j) {
        const MatrixQ lhs = mult_operator(a, multiply(a, a.basis_vector(i), a.basis_vector(j)), Side::kLeft);
        const MatrixQ rhs = lcol[i] * lcol[j];
        if (!(lhs == rhs)) {
          v.holds = false;
          v.note = "L_{e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                   "} != L_{e" + std::to_string(i + 1) + "} L_{e" + std::to_string(j + 1) + "}";
          v.witness_op = lhs;
          v.witness_op2 = rhs;
        }
      }
    }
    out.push_back(std::move(v));
  }
  {
    ClaimVerdict v{"Lemma2.8.R", true, "", std::nullopt, std::nullopt};
    for (int i = 0; i < n && v.holds; ++i) {
      for (int j = 0; j < n && v.holds; ++j) {
        const MatrixQ lhs = mult_operator(a, multiply(a, a.basis_vector(i), a.basis_vector(j)), Side::kRight);
        const MatrixQ rhs = rcol[j] * rcol[i];
        if (!(lhs == rhs)) {
          v.holds = false;
          v.note = "R_{e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                   "} != R_{e" + std::to_string(j + 1) + "} R_{e" + std::to_string(i + 1) + "}";
          v.witness_op = lhs;
          v.witness_op2 = rhs;
        }
      }
    }
    out.push_back(std::move(v));
  }
  // Prop 3.9 with I = Z^2 (always an ideal: (pq)r and r(pq) land in Z*Z^2).
  {
    ClaimVerdict v{"Prop3.9", true, "", std::nullopt, std::nullopt};
    const Subspace z2 = product_span(a);
    const CentralizerResult c = centralizer(a, z2);
    if (!c.input_is_ideal) {
      v.holds = false;
      v.note = "Z^2 failed the ideal check";
    } else if (!c.result_is_ideal) {
      v.holds = false;
      v.note = "centralizer of Z^2 is not an ideal";
    } else {
      v.note = "centralizer of Z^2 verified to be an ideal";
    }
    out.push_back(std::move(v));
  }
  // Lemma 3.14 (1): QGamma . QDer lands in QDer.
  {
    ClaimVerdict v{"Lemma3.14.1", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& phi : qgamma) {
      for (const MatrixQ& d : qder) {
        if (!analysis.qder.projection.space.contains(vectorize_operator(phi * d))) {
          v.holds = false;
          v.witness_op = phi;
          v.witness_op2 = d;
          v.note = "phi d left the quasi-derivation projection";
          break;
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Lemma 3.14 (2): [QGamma, QDer] lands in QDer.
  {
    ClaimVerdict v{"Lemma3.14.2", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& phi : qgamma) {
      for (const MatrixQ& d : qder) {
        if (!analysis.qder.projection.space.contains(vectorize_operator(commutator(phi, d)))) {
          v.holds = false;
          v.witness_op = phi;
          v.witness_op2 = d;
          v.note = "[phi, d] left the quasi-derivation projection";
          break;
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Lemma 3.14 (3a): [QGamma, QGamma](Z) inside the annihilator.
  {
    ClaimVerdict v{"Lemma3.14.3a", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& phi : qgamma) {
      for (const MatrixQ& psi : qgamma) {
        const MatrixQ br = commutator(phi, psi);
        for (int c = 0; c < n && v.holds; ++c) {
          if (!analysis.annihilator_space.contains(br.col(c))) {
            v.holds = false;
            v.witness_op = phi;
            v.witness_op2 = psi;
            v.note = "[phi, psi] e" + std::to_string(c + 1) + " is outside C(Z)";
          }
        }
        if (!v.holds) break;
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Lemma 3.14 (3b): [QGamma, QGamma](Z^1) = 0, literally as printed
  // (Z^1 is the whole algebra, so this asks the brackets to vanish).
  {
    ClaimVerdict v{"Lemma3.14.3b", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& phi : qgamma) {
      for (const MatrixQ& psi : qgamma) {
        if (!commutator(phi, psi).is_zero()) {
          v.holds = false;
          v.witness_op = phi;
          v.witness_op2 = psi;
          v.note = "[phi, psi] != 0 although Z^1 = Z";
          break;
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Lemma 3.14 (4): the centralizer (of W = Z) is QGamma-invariant.
  {
    ClaimVerdict v{"Lemma3.14.4", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& phi : qgamma) {
      for (int b = 0; b < analysis.annihilator_space.dim() && v.holds; ++b) {
        if (!analysis.annihilator_space.contains(phi.apply(analysis.annihilator_space.basis_vector(b)))) {
          v.holds = false;
          v.witness_op = phi;
          v.note = "phi does not preserve C(Z)";
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Prop 3.12 (1): C_d = QGamma intersect QDer. The identity map is the
  // canonical counterexample whenever Z^2 != 0.
  {
    ClaimVerdict v{"Prop3.12.1", true, "", std::nullopt, std::nullopt};
    const Subspace meet = Subspace::intersection(analysis.qcentroid.space, analysis.qder.projection.space);
    if (!(meet == analysis.cder.space)) {
      v.holds = false;
      const MatrixQ id = MatrixQ::identity(n);
      const std::vector<Rational> idv = vectorize_operator(id);
      if (analysis.qcentroid.space.contains(idv) && analysis.qder.projection.space.contains(idv) &&
          !analysis.cder.space.contains(idv)) {
        v.witness_op = id;
        v.note = "identity map lies in QGamma and QDer but is not central (Z^2 != 0)";
      } else {
        for (int i = 0; i < meet.dim(); ++i) {
          if (!analysis.cder.space.contains(meet.basis_vector(i))) {
            v.witness_op = operator_from_vector(meet.basis_vector(i), n);
            v.note = "intersection exceeds the central derivations";
            break;
          }
        }
      }
    } else {
      v.note = "C_d equals QGamma intersect QDer";
    }
    out.push_back(std::move(v));
  }
  // Prop 3.12 (2): d phi in QGamma iff phi d is a central derivation.
  {
    ClaimVerdict v{"Prop3.12.2", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& d : qder) {
      for (const MatrixQ& phi : qgamma) {
        const bool lhs = analysis.qcentroid.space.contains(vectorize_operator(d * phi));
        const bool rhs = analysis.cder.space.contains(vectorize_operator(phi * d));
        if (lhs != rhs) {
          v.holds = false;
          v.witness_op = d;
          v.witness_op2 = phi;
          v.note = lhs ? "d phi in QGamma but phi d not central" : "phi d central but d phi not in QGamma";
          break;
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  // Prop 3.12 (3): d phi in QDer iff [d, phi] is a central derivation.
  {
    ClaimVerdict v{"Prop3.12.3", true, "", std::nullopt, std::nullopt};
    for (const MatrixQ& d : qder) {
      for (const MatrixQ& phi : qgamma) {
        const bool lhs = analysis.qder.projection.space.contains(vectorize_operator(d * phi));
        const bool rhs = analysis.cder.space.contains(vectorize_operator(commutator(d, phi)));
        if (lhs != rhs) {
          v.holds = false;
          v.witness_op = d;
          v.witness_op2 = phi;
          v.note = lhs ? "d phi in QDer but [d, phi] not central" : "[d, phi] central but d phi not in QDer";
          break;
        }
      }
      if (!v.holds) break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<ClaimVerdict> reconcile_claims(const AlgebraPresentation& a) {
  return reconcile_claims(analyze_algebra(a));
}

namespace {

// Embeds an operator block acting from factor columns [c0, c0+cw) into
// rows [r0, r0+rh) of an N x N operator.
std::vector<Rational> embed_block(const MatrixQ& block, int big_n, int r0, int c0) {
  MatrixQ m(big_n, big_n);
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c) m.at(r0 + r, c0 + c) = block.at(r, c);
  return vectorize_operator(m);
}

// Cross maps factor -> other factor with image in the annihilator of the
// target and kernel containing `killed` (a subspace of the source).
Subspace cross_block_space(int src_dim, int dst_dim, const Subspace& dst_annihilator,
                           const Subspace& killed) {
  LinearSystem sys(src_dim * dst_dim);  // unknown X(r, c) at index c*dst_dim + r
  // columns of X land in the annihilator of the destination factor:
  // for every functional vanishing on it... simpler: X column c must be a
  // combination of the annihilator basis; equivalently X kills nothing but
  // its columns satisfy the annihilator's RREF constraints. We impose
  // membership by requiring orthogonality to the complement: instead,
  // build equations from the annihilator as solution set: column c in A
  // iff reduce-against-basis leaves zero; as linear constraints, use a
  // basis of the orthogonal complement of A.
  const int nb = dst_dim;
  MatrixQ ann_rows(dst_annihilator.dim(), nb);
  for (int r = 0; r < dst_annihilator.dim(); ++r)
    for (int c = 0; c < nb; ++c) ann_rows.at(r, c) = dst_annihilator.basis().at(r, c);
  const Subspace complement = nullspace(ann_rows.rows() == 0 ? MatrixQ(1, nb) : ann_rows);
  // complement = {y : A y = 0}; x in A  <=>  y . x = 0 for all y with
  // y orthogonal to A. A is a row-space; x in rowspace(A) iff x is
  // orthogonal to nullspace(A). So constrain with nullspace(A) rows.
  for (int cc = 0; cc < src_dim; ++cc) {
    for (int y = 0; y < complement.dim(); ++y) {
      SparseRowQ row;
      for (int r = 0; r < nb; ++r) {
        const Rational& v = complement.basis().at(y, r);
        if (v != 0) row.emplace_back(static_cast<std::uint32_t>(cc * nb + r), v);
      }
      sys.add_row(row);
    }
  }
  // X w = 0 for every basis vector w of the killed subspace.
  for (int b = 0; b < killed.dim(); ++b) {
    const std::vector<Rational> w = killed.basis_vector(b);
    for (int r = 0; r < nb; ++r) {
      SparseRowQ row;
      for (int c = 0; c < src_dim; ++c) {
        if (w[c] != 0) row.emplace_back(static_cast<std::uint32_t>(c * nb + r), w[c]);
      }
      sys.add_row(row);
    }
  }
  return sys.solve_kernel().kernel;
}

}  // namespace

DirectSumCheck direct_sum_theorem_check(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  DirectSumCheck out;
  out.left_name = a.name;
  out.right_name = b.name;
  const AlgebraPresentation sum = direct_sum(a, b);
  const int big_n = sum.dim;
  const OperatorSpace lhs = solve_space(sum, SpaceKind::kQuasiCentroid);
  out.lhs_dim = lhs.dim();

  const OperatorSpace qa = solve_space(a, SpaceKind::kQuasiCentroid);
  const OperatorSpace qb = solve_space(b, SpaceKind::kQuasiCentroid);
  const Subspace ann_a = annihilator(a);
  const Subspace ann_b = annihilator(b);
  const Subspace sq_a = product_span(a);
  const Subspace sq_b = product_span(b);

  std::vector<std::vector<Rational>> diag;
  for (int i = 0; i < qa.dim(); ++i) diag.push_back(embed_block(qa.basis_matrix(i), big_n, 0, 0));
  for (int i = 0; i < qb.dim(); ++i)
    diag.push_back(embed_block(qb.basis_matrix(i), big_n, a.dim, a.dim));
  const Subspace diag_space = Subspace::from_spanning(big_n * big_n, diag);

  const auto build_rhs = [&](bool kill_square) {
    const Subspace killed_a = kill_square ? sq_a : Subspace::full(a.dim);
    const Subspace killed_b = kill_square ? sq_b : Subspace::full(b.dim);
    const Subspace c1 = cross_block_space(a.dim, b.dim, ann_b, killed_a);  // Z1 -> Z2
    const Subspace c2 = cross_block_space(b.dim, a.dim, ann_a, killed_b);  // Z2 -> Z1
    std::vector<std::vector<Rational>> span;
    for (int i = 0; i < c1.dim(); ++i) {
      MatrixQ block(b.dim, a.dim);
      const std::vector<Rational> v = c1.basis_vector(i);
      for (int c = 0; c < a.dim; ++c)
        for (int r = 0; r < b.dim; ++r) block.at(r, c) = v[c * b.dim + r];
      span.push_back(embed_block(block, big_n, a.dim, 0));
    }
    for (int i = 0; i < c2.dim(); ++i) {
      MatrixQ block(a.dim, b.dim);
      const std::vector<Rational> v = c2.basis_vector(i);
      for (int c = 0; c < b.dim; ++c)
        for (int r = 0; r < a.dim; ++r) block.at(r, c) = v[c * a.dim + r];
      span.push_back(embed_block(block, big_n, 0, a.dim));
    }
    Subspace cross = Subspace::from_spanning(big_n * big_n, span);
    return Subspace::sum(diag_space, cross);
  };

  const Subspace rhs_square = build_rhs(true);
  const Subspace rhs_source = build_rhs(false);
  out.rhs_dim_kill_square = rhs_square.dim();
  out.rhs_dim_kill_source = rhs_source.dim();
  out.match_kill_square = rhs_square == lhs.space;
  out.match_kill_source = rhs_source == lhs.space;

  out.verdict.claim_id = "Theorem3.15";
  out.verdict.holds = out.match_kill_square || out.match_kill_source;
  if (out.match_kill_square && out.match_kill_source) {
    out.verdict.note = "both readings of the cross-block condition match";
  } else if (out.match_kill_square) {
    out.verdict.note = "matches with cross maps killing the square of their source";
  } else if (out.match_kill_source) {
    out.verdict.note = "matches with cross maps killing their whole source";
  } else {
    out.verdict.note = "neither reading reproduces the directly computed quasi-centroid";
  }
  return out;
}

}  // namespace zinbiel
