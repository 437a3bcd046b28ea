#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/linear_system.hpp"

namespace zinbiel {

/// Operators are n x n matrices over Q; column j holds the coordinates of
/// the image of e_j. Operator spaces live in Q^(n^2) via the column-major
/// vectorization from matrix.hpp.
enum class SpaceKind {
  kDerivation,
  kCentroid,
  kQuasiCentroid,
  kCentralDerivation,
  kQuasiDerivationProjection,
};

const char* space_kind_key(SpaceKind kind);  // "der", "centroid", "qcentroid", "cder", "qder"

struct OperatorSpace {
  SpaceKind kind{};
  int n = 0;
  Subspace space;  // canonical basis, ambient n^2

  int dim() const { return space.dim(); }
  MatrixQ basis_matrix(int i) const { return operator_from_vector(space.basis_vector(i), n); }
};

/// Solutions of the quasi-derivation system in 2n^2 unknowns: the d block
/// occupies coordinates [0, n^2), the companion block [n^2, 2n^2).
struct QDerPairSpace {
  int n = 0;
  Subspace pairs;            // canonical basis of the pair space
  OperatorSpace projection;  // span of the d components

  int pair_dim() const { return pairs.dim(); }
  MatrixQ pair_d(int i) const;
  MatrixQ pair_companion(int i) const;

  /// A companion for d when (d, d') lies in the pair space; nullopt when
  /// d is outside the projection.
  std::optional<MatrixQ> companion_for(const MatrixQ& d) const;
};

/// Assembles and solves the defining linear system of the requested
/// operator space (n^3 equations, n^2 unknowns; the centroid and central
/// derivations impose both of their product identities).
OperatorSpace solve_space(const AlgebraPresentation& a, SpaceKind kind);

QDerPairSpace solve_quasi_derivations(const AlgebraPresentation& a);

/// Independent audit path: intersects the per-basis-pair constraint
/// subspaces one (i, j) at a time. Must agree with solve_space; the two
/// computation orders share no code beyond the subspace primitives.
Subspace solve_space_pairwise(const AlgebraPresentation& a, SpaceKind kind);
Subspace solve_qder_pairs_pairwise(const AlgebraPresentation& a);

struct MemberCheck {
  bool valid = false;
  std::optional<std::pair<int, int>> first_violation;  // basis pair (i, j), 0-based
};

/// Evaluates the defining identity of `kind` on all n^2 basis pairs in
/// exact arithmetic, straight from the element-level definitions (it never
/// touches the solver's assembly, and serves as its oracle). A companion
/// is required exactly for the quasi-derivation kind.
MemberCheck verify_member(const AlgebraPresentation& a, SpaceKind kind, const MatrixQ& phi,
                          const std::optional<MatrixQ>& companion = std::nullopt);

/// Solves for a companion d' with d(p)q + p d(q) = d'(pq); nullopt when
/// none exists (d is not a quasi-derivation).
std::optional<MatrixQ> find_companion(const AlgebraPresentation& a, const MatrixQ& d);

/// Affine rendering of an operator space in the style of a parametric
/// matrix: free parameters are named after the matrix position of the
/// RREF pivot coordinate of each basis element.
struct LinearExpr {
  std::vector<std::pair<int, Rational>> terms;  // (parameter index, coefficient)
  bool is_zero() const { return terms.empty(); }
};

struct ParametricForm {
  int n = 0;
  std::vector<std::string> param_names;        // one per basis element
  std::vector<std::vector<LinearExpr>> grid;   // n x n

  MatrixQ instantiate(const std::vector<Rational>& values) const;
  std::string cell_string(int r, int c) const;
  std::vector<std::vector<std::string>> grid_strings() const;
};

ParametricForm parametric_form(const OperatorSpace& space);

/// Everything the CLI and the reconciliation machinery need about one
/// algebra, computed in one pass.
struct AlgebraAnalysis {
  AlgebraPresentation algebra;
  ZinbielCheck zinbiel;
  PowerChain chain;
  Subspace annihilator_space;
  OperatorSpace der, centroid, qcentroid, cder;
  QDerPairSpace qder;
};

AlgebraAnalysis analyze_algebra(const AlgebraPresentation& a);

}  // namespace zinbiel
