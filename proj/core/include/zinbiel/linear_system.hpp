#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/subspace.hpp"

namespace zinbiel {

/// One equation term: coefficient attached to an unknown index.
using SparseRowQ = std::vector<std::pair<std::uint32_t, Rational>>;

/// Homogeneous exact linear system over Q, built one equation at a time.
///
/// solve_kernel() returns the exact solution set as a canonical Subspace.
/// Small systems go through plain rational elimination. Large systems go
/// through a multi-modular path (per-prime elimination, CRT lift of
/// determinant-scaled kernel vectors) whose output is accepted only after
/// an unconditional exact certificate:
///   - every stored equation annihilates every candidate basis vector
///     (checked in exact rational arithmetic), so the candidate space is
///     contained in the kernel, and
///   - the candidate dimension equals cols - r where r is a mod-p rank of
///     a subset of the equations, hence a lower bound on the exact rank.
/// Together these squeeze the candidate into being exactly the kernel.
/// Modular arithmetic only ever proposes candidates; it is never trusted.
class LinearSystem {
 public:
  explicit LinearSystem(int cols);

  /// Adds one equation. Terms are merged, scaled to a primitive integer
  /// vector, and deduplicated against previously stored equations.
  void add_row(const SparseRowQ& terms);
  void add_dense_row(const std::vector<Rational>& row);

  int cols() const { return cols_; }
  int stored_rows() const { return static_cast<int>(rows_.size()); }

  struct KernelResult {
    Subspace kernel;
    int rank = 0;  // exact rank of the full system
  };

  KernelResult solve_kernel();

 private:
  struct IntRow {
    std::vector<std::pair<std::uint32_t, mpz_class>> terms;  // sorted by column
    std::uint64_t hash = 0;
  };

  int cols_;
  std::vector<IntRow> rows_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> dedupe_;
};

}  // namespace zinbiel
