#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/matrix.hpp"
#include "zinbiel/subspace.hpp"

namespace zinbiel {

/// Coordinates of an algebra element in the basis e_1..e_n.
using ElementVector = std::vector<Rational>;

/// An algebra presented by structure constants:
///   e_i * e_j = sum_k gamma(i,j,k) e_k   (all indices 0-based in code).
/// Products not set are zero. `params` records the rational values any
/// family parameters were instantiated at; it does not affect gamma,
/// which always holds concrete rationals.
struct AlgebraPresentation {
  std::string name;
  int dim = 0;
  std::vector<Rational> gamma;  // dim^3 entries, index (i*dim + j)*dim + k
  std::map<std::string, Rational> params;

  AlgebraPresentation() = default;
  AlgebraPresentation(std::string name_, int dim_);

  const Rational& gamma_at(int i, int j, int k) const {
    return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Rational& gamma_at(int i, int j, int k) {
    return gamma[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  ElementVector basis_vector(int i) const;

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    return a.name == b.name && a.dim == b.dim && a.gamma == b.gamma && a.params == b.params;
  }
};

/// Bilinear product extension of the structure constants.
ElementVector multiply(const AlgebraPresentation& a, const ElementVector& x, const ElementVector& y);

struct ZinbielWitness {
  int i = 0, j = 0, k = 0;  // first failing basis triple, 0-based
  ElementVector defect;     // (e_i e_j) e_k - e_i (e_j e_k) - e_i (e_k e_j)
};

struct ZinbielCheck {
  bool holds = false;
  std::optional<ZinbielWitness> witness;
};

/// Exhaustive check of (p q) r = p (q r) + p (r q) on all n^3 basis triples.
ZinbielCheck check_zinbiel(const AlgebraPresentation& a);

enum class Side { kLeft, kRight };

/// Matrix of L_p (q -> p*q) or R_p (q -> q*p) in the basis.
MatrixQ mult_operator(const AlgebraPresentation& a, const ElementVector& p, Side side);

struct PowerChain {
  std::vector<Subspace> terms;  // terms[t] = Z^{t+1}; terms[0] is the full space
  std::optional<int> nil_index;  // smallest s with Z^s = 0, when reached
};

/// Z^1 = Z, Z^{t+1} = Z * Z^t, computed until zero, stabilization, or
/// max_steps terms.
PowerChain power_chain(const AlgebraPresentation& a, int max_steps);

/// C(Z): elements p with p*Z = Z*p = 0.
Subspace annihilator(const AlgebraPresentation& a);

struct CentralizerResult {
  Subspace space;
  bool input_is_ideal = false;
  bool result_is_ideal = false;  // verified, not assumed
};

/// C_Z(I) = {p : p*I = I*p = 0} for a subspace I, with the ideal property
/// of the result verified computationally whenever the input is an ideal.
CentralizerResult centralizer(const AlgebraPresentation& a, const Subspace& ideal);

/// True iff s is closed under left and right multiplication by the algebra.
bool is_ideal(const AlgebraPresentation& a, const Subspace& s);

/// Block-diagonal sum: products inside each factor, cross products zero.
AlgebraPresentation direct_sum(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// Span of all products x*y, x,y in Z (the derived subspace Z^2).
Subspace product_span(const AlgebraPresentation& a);

}  // namespace zinbiel
