#include "zinbiel/report.hpp"

#include <json.hpp>

#include <sstream>

namespace zinbiel {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const MatrixQ& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json grid_json(const std::vector<std::vector<std::string>>& grid) {
  Json rows = Json::array();
  for (const auto& row : grid) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell);
    rows.push_back(std::move(r));
  }
  return rows;
}

Json space_json(const OperatorSpace& space) {
  Json obj;
  obj["dim"] = space.dim();
  Json basis = Json::array();
  for (int i = 0; i < space.dim(); ++i) basis.push_back(matrix_json(space.basis_matrix(i)));
  obj["basis"] = std::move(basis);
  obj["parametric"] = grid_json(parametric_form(space).grid_strings());
  return obj;
}

std::string render_grid(const std::vector<std::vector<std::string>>& grid) {
  std::vector<std::size_t> width(grid.empty() ? 0 : grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    out << "    [ ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c] << std::string(width[c] - row[c].size(), ' ');
      if (c + 1 < row.size()) out << "  ";
    }
    out << " ]\n";
  }
  return out.str();
}

const char* space_label(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kDerivation: return "Der";
    case SpaceKind::kCentroid: return "Centroid";
    case SpaceKind::kQuasiCentroid: return "QGamma";
    case SpaceKind::kCentralDerivation: return "C_d";
    case SpaceKind::kQuasiDerivationProjection: return "QDer";
  }
  return "?";
}

const OperatorSpace& pick_space(const AlgebraAnalysis& analysis, SpaceKind kind) {
  switch (kind) {
    case SpaceKind::kDerivation: return analysis.der;
    case SpaceKind::kCentroid: return analysis.centroid;
    case SpaceKind::kQuasiCentroid: return analysis.qcentroid;
    case SpaceKind::kCentralDerivation: return analysis.cder;
    case SpaceKind::kQuasiDerivationProjection: return analysis.qder.projection;
  }
  return analysis.der;
}

}  // namespace

std::vector<SpaceKind> all_space_kinds() {
  return {SpaceKind::kDerivation, SpaceKind::kQuasiDerivationProjection, SpaceKind::kCentroid,
          SpaceKind::kQuasiCentroid, SpaceKind::kCentralDerivation};
}

std::string analysis_to_json(const AlgebraAnalysis& analysis, const std::vector<SpaceKind>& kinds) {
  Json root;
  Json algebra;
  algebra["name"] = analysis.algebra.name;
  algebra["dim"] = analysis.algebra.dim;
  Json params;
  for (const auto& [key, value] : analysis.algebra.params) params[key] = rational_to_string(value);
  algebra["params"] = std::move(params);
  root["algebra"] = std::move(algebra);

  Json flags;
  flags["zinbiel"] = analysis.zinbiel.holds;
  if (analysis.chain.nil_index.has_value()) {
    flags["nil_index"] = *analysis.chain.nil_index;
  } else {
    flags["nil_index"] = nullptr;
  }
  flags["annihilator_dim"] = analysis.annihilator_space.dim();
  root["flags"] = std::move(flags);

  Json spaces;
  for (SpaceKind kind : kinds) {
    Json obj = space_json(pick_space(analysis, kind));
    if (kind == SpaceKind::kQuasiDerivationProjection) {
      obj["pair_dim"] = analysis.qder.pair_dim();
    }
    spaces[space_kind_key(kind)] = std::move(obj);
  }
  root["spaces"] = std::move(spaces);
  root["reconciliation"] = Json::array();
  return root.dump(2) + "\n";
}

std::string analysis_to_table(const AlgebraAnalysis& analysis, const std::vector<SpaceKind>& kinds) {
  std::ostringstream out;
  out << "algebra " << analysis.algebra.name << " (dim " << analysis.algebra.dim << ")";
  if (!analysis.algebra.params.empty()) {
    out << " at";
    for (const auto& [key, value] : analysis.algebra.params)
      out << " " << key << "=" << rational_to_string(value);
  }
  out << "\n";
  out << "  zinbiel identity: " << (analysis.zinbiel.holds ? "holds" : "FAILS") << "\n";
  if (!analysis.zinbiel.holds && analysis.zinbiel.witness.has_value()) {
    const ZinbielWitness& w = *analysis.zinbiel.witness;
    out << "    first failing triple: (e" << w.i + 1 << ", e" << w.j + 1 << ", e" << w.k + 1 << ")\n";
  }
  if (analysis.chain.nil_index.has_value()) {
    out << "  nil-index: " << *analysis.chain.nil_index << " (chain dims";
    for (const Subspace& s : analysis.chain.terms) out << " " << s.dim();
    out << ")\n";
  } else {
    out << "  nil-index: none reached (chain dims";
    for (const Subspace& s : analysis.chain.terms) out << " " << s.dim();
    out << ")\n";
  }
  out << "  annihilator dim: " << analysis.annihilator_space.dim() << "\n";
  for (SpaceKind kind : kinds) {
    const OperatorSpace& space = pick_space(analysis, kind);
    out << "  " << space_label(kind) << ": dim " << space.dim();
    if (kind == SpaceKind::kQuasiDerivationProjection) {
      out << " (pair space dim " << analysis.qder.pair_dim() << ")";
    }
    out << "\n";
    out << render_grid(parametric_form(space).grid_strings());
  }
  return out.str();
}

std::string report_to_json(const ReconciliationReport& report) {
  Json root;
  Json rows = Json::array();
  for (const RowAudit& row : report.rows) {
    for (const SpaceAudit& sa : row.spaces) {
      Json r;
      r["table_row"] = row.entry + (row.row_label.empty() ? "" : " " + row.row_label);
      r["space"] = sa.space;
      if (sa.claimed_dim.has_value()) {
        r["claimed"] = *sa.claimed_dim;
      } else {
        r["claimed"] = nullptr;
      }
      Json rec = Json::array();
      for (const auto& [label, dim] : sa.recomputed) {
        Json one;
        one["at"] = label;
        one["dim"] = dim;
        rec.push_back(std::move(one));
      }
      r["recomputed"] = std::move(rec);
      r["stable"] = sa.dims_stable;
      r["match"] = sa.match;
      r["note"] = sa.note;
      rows.push_back(std::move(r));
    }
    if (row.claimed_small.has_value()) {
      Json r;
      r["table_row"] = row.entry + (row.row_label.empty() ? "" : " " + row.row_label);
      r["space"] = "QGamma smallness";
      r["claimed"] = *row.claimed_small;
      r["recomputed"] = row.recomputed_small.has_value() ? Json(*row.recomputed_small) : Json(nullptr);
      r["match"] = row.claimed_small == row.recomputed_small;
      r["note"] = "";
      rows.push_back(std::move(r));
    }
  }
  root["reconciliation"] = std::move(rows);

  Json claims = Json::array();
  for (const InstantiationRecord& rec : report.instantiations) {
    for (const ClaimVerdict& v : rec.claims) {
      Json c;
      c["claim_id"] = v.claim_id;
      c["algebra"] = rec.entry + (rec.label.empty() ? "" : " (" + rec.label + ")");
      c["holds"] = v.holds;
      c["note"] = v.note;
      if (v.witness_op.has_value()) c["witness"] = matrix_json(*v.witness_op);
      if (v.witness_op2.has_value()) c["witness2"] = matrix_json(*v.witness_op2);
      claims.push_back(std::move(c));
    }
  }
  root["claims"] = std::move(claims);

  Json insts = Json::array();
  for (const InstantiationRecord& rec : report.instantiations) {
    Json r;
    r["entry"] = rec.entry;
    r["at"] = rec.label;
    r["zinbiel"] = rec.zinbiel_holds;
    r["nil_index"] = rec.nil_index.has_value() ? Json(*rec.nil_index) : Json(nullptr);
    r["annihilator_dim"] = rec.annihilator_dim;
    r["der"] = rec.der_dim;
    r["qder"] = rec.qder_projection_dim;
    r["qder_pairs"] = rec.qder_pair_dim;
    r["centroid"] = rec.centroid_dim;
    r["qcentroid"] = rec.qcentroid_dim;
    r["cder"] = rec.cder_dim;
    r["small"] = rec.is_small;
    r["oracles_ok"] = rec.oracles_ok;
    insts.push_back(std::move(r));
  }
  root["instantiations"] = std::move(insts);

  Json sums = Json::array();
  for (const DirectSumCheck& check : report.direct_sums) {
    Json s;
    s["claim_id"] = check.verdict.claim_id;
    s["summands"] = check.left_name + " (+) " + check.right_name;
    s["lhs_dim"] = check.lhs_dim;
    s["rhs_dim_kill_square"] = check.rhs_dim_kill_square;
    s["rhs_dim_kill_source"] = check.rhs_dim_kill_source;
    s["match_kill_square"] = check.match_kill_square;
    s["match_kill_source"] = check.match_kill_source;
    s["note"] = check.verdict.note;
    sums.push_back(std::move(s));
  }
  root["direct_sums"] = std::move(sums);

  Json findings = Json::array();
  for (const std::string& f : report.findings) findings.push_back(f);
  root["findings"] = std::move(findings);
  root["mismatches"] = report.mismatch_count();
  root["falsified_claims"] = report.falsified_claim_count();
  return root.dump(2) + "\n";
}

std::string report_to_table(const ReconciliationReport& report) {
  std::ostringstream out;
  out << "table audit (claimed vs recomputed)\n";
  for (const RowAudit& row : report.rows) {
    const std::string head = row.entry + (row.row_label.empty() ? "" : " [" + row.row_label + "]");
    for (const SpaceAudit& sa : row.spaces) {
      out << "  " << head << " " << sa.space << ": claimed ";
      if (sa.claimed_dim.has_value()) {
        out << *sa.claimed_dim;
      } else {
        out << "-";
      }
      out << ", recomputed ";
      if (sa.dims_stable) {
        out << sa.recomputed.front().second;
        if (sa.recomputed.size() > 1) out << " (stable across " << sa.recomputed.size() << " samples)";
      } else {
        for (const auto& [label, dim] : sa.recomputed) out << " " << label << ":" << dim;
      }
      out << " -> " << (sa.match ? "match" : "MISMATCH");
      if (!sa.note.empty()) out << "  [" << sa.note << "]";
      out << "\n";
    }
    if (row.claimed_small.has_value()) {
      out << "  " << head << " smallness: claimed " << *row.claimed_small << ", recomputed "
          << (row.recomputed_small ? *row.recomputed_small : std::string("-")) << " -> "
          << (row.claimed_small == row.recomputed_small ? "match" : "MISMATCH") << "\n";
    }
  }
  out << "claim audit\n";
  for (const InstantiationRecord& rec : report.instantiations) {
    for (const ClaimVerdict& v : rec.claims) {
      if (v.holds) continue;
      out << "  " << v.claim_id << " on " << rec.entry
          << (rec.label.empty() ? "" : " (" + rec.label + ")") << ": FALSIFIED — " << v.note << "\n";
    }
  }
  int held = 0, total = 0;
  for (const InstantiationRecord& rec : report.instantiations) {
    for (const ClaimVerdict& v : rec.claims) {
      ++total;
      if (v.holds) ++held;
    }
  }
  out << "  (" << held << "/" << total << " claim instantiations hold)\n";
  if (!report.direct_sums.empty()) {
    out << "direct-sum decomposition audit\n";
    for (const DirectSumCheck& check : report.direct_sums) {
      out << "  " << check.left_name << " (+) " << check.right_name << ": lhs " << check.lhs_dim
          << ", kill-square " << check.rhs_dim_kill_square << " ("
          << (check.match_kill_square ? "match" : "no match") << "), kill-source "
          << check.rhs_dim_kill_source << " (" << (check.match_kill_source ? "match" : "no match")
          << ")\n";
    }
  }
  if (!report.findings.empty()) {
    out << "findings\n";
    for (const std::string& f : report.findings) out << "  - " << f << "\n";
  }
  out << "totals: " << report.mismatch_count() << " table mismatches, "
      << report.falsified_claim_count() << " falsified claim instantiations\n";
  return out.str();
}

}  // namespace zinbiel
