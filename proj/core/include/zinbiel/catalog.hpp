#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/theory.hpp"

namespace zinbiel {

/// One product line e_i * e_j = sum of coeff [* param] e_k (1-based in the
/// source tables, stored 0-based).
struct ProductTerm {
  Rational coeff;
  std::optional<std::string> param;
  int k = 0;
};

struct ProductSpec {
  int i = 0, j = 0;
  std::vector<ProductTerm> terms;
};

/// A parametric matrix exactly as printed, cell strings in ASCII
/// (lambda/alpha spelled out, fractions as p/q).
struct ClaimedGrid {
  std::vector<std::vector<std::string>> cells;
  bool empty() const { return cells.empty(); }
  int distinct_symbol_count() const;  // distinct a_rc / d_rc tokens
  bool mixes_symbol_families() const;  // both a_rc and d_rc present
};

/// One table row of claims, conditioned on the family parameter when the
/// paper splits rows (e.g. lambda != 0 vs lambda = 0).
struct CatalogClaimRow {
  std::string label;                 // "", "lambda != 0", "alpha = 0", ...
  std::optional<Rational> equals;    // applies iff value == equals
  std::vector<Rational> not_equals;  // applies iff value avoids all of these
  std::optional<int> qgamma_dim;     // the table's Dim column
  std::optional<std::string> qgamma_type;  // "small" / "not small"
  ClaimedGrid qgamma_grid, der_grid, qder_grid;

  bool applies(const std::optional<Rational>& value) const;
};

struct CatalogEntry {
  std::string name;
  int dim = 0;
  std::optional<std::string> param;       // at most one family parameter
  std::vector<Rational> special_values;   // the paper's declared split points
  std::vector<ProductSpec> products;
  std::vector<CatalogClaimRow> claims;
  std::vector<std::string> known_issues;
};

/// All classified algebras of dimensions 2-4, transcribed verbatim from
/// the classification theorems, with the claimed tables attached as data.
const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Instantiates a catalog presentation at rational parameter values.
/// Throws std::invalid_argument on unknown names and missing/extra params.
AlgebraPresentation get_algebra(const std::string& name, const std::map<std::string, Rational>& params);

/// ---- Reconciliation ----

struct SpaceAudit {
  std::string space;               // "QGamma", "Der" or "QDer"
  std::optional<int> claimed_dim;  // Dim column (QGamma) or distinct grid symbols
  std::vector<std::pair<std::string, int>> recomputed;  // (instantiation label, dim)
  bool dims_stable = true;  // recomputed dims agree across the row's samples
  bool match = false;
  std::string note;
};

struct RowAudit {
  std::string entry;
  std::string row_label;  // the claim row condition, e.g. "lambda != 0"
  std::optional<std::string> claimed_small;
  std::optional<std::string> recomputed_small;
  std::vector<SpaceAudit> spaces;
};

struct InstantiationRecord {
  std::string entry;
  std::string label;  // "" or "lambda=2"
  bool zinbiel_holds = false;
  std::optional<int> nil_index;
  int annihilator_dim = 0;
  int der_dim = 0, centroid_dim = 0, qcentroid_dim = 0, cder_dim = 0;
  int qder_projection_dim = 0, qder_pair_dim = 0;
  bool is_small = false;
  bool oracles_ok = false;  // verify_member soundness + two-path maximality
  std::vector<ClaimVerdict> claims;
};

struct ReconciliationReport {
  std::vector<RowAudit> rows;
  std::vector<InstantiationRecord> instantiations;
  std::vector<DirectSumCheck> direct_sums;
  std::vector<std::string> findings;  // known issues + anomalies observed

  int mismatch_count() const;
  int falsified_claim_count() const;
};

/// Recomputes every selected entry (all of them when `names` is empty) at
/// the generic samples plus the paper's special values and compares the
/// results against the claimed tables. `param_samples` controls how many
/// generic values are drawn from the fixed sequence 1, 2, 3, 5, 7, 11, ...
ReconciliationReport reconcile_catalog(const std::vector<std::string>& names, int param_samples = 4);

/// Generic sample values for a family: the first `count` entries of the
/// fixed sequence that avoid the declared special values.
std::vector<Rational> generic_samples(const CatalogEntry& entry, int count);

}  // namespace zinbiel
