#pragma once

#include <string>
#include <vector>

#include "zinbiel/catalog.hpp"

namespace zinbiel {

/// Space selection for analyze-style output, in fixed rendering order.
std::vector<SpaceKind> all_space_kinds();

/// Byte-deterministic JSON for one analyzed algebra:
///   {algebra: {name, dim, params}, flags: {zinbiel, nil_index,
///    annihilator_dim}, spaces: {kind: {dim, basis, parametric, ...}},
///    reconciliation: []}
/// Rationals are exact "p/q" strings.
std::string analysis_to_json(const AlgebraAnalysis& analysis, const std::vector<SpaceKind>& kinds);

/// Plain-text rendering with the parametric grids laid out like the
/// source tables.
std::string analysis_to_table(const AlgebraAnalysis& analysis, const std::vector<SpaceKind>& kinds);

std::string report_to_json(const ReconciliationReport& report);
std::string report_to_table(const ReconciliationReport& report);

}  // namespace zinbiel
