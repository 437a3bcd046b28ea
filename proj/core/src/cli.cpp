#include "zinbiel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zinbiel/algebra_file.hpp"
#include "zinbiel/report.hpp"

namespace zinbiel {

namespace {

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<SpaceKind> parse_kinds(const std::string& csv) {
  if (csv.empty()) return all_space_kinds();
  std::vector<SpaceKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "der") {
      out.push_back(SpaceKind::kDerivation);
    } else if (item == "qder") {
      out.push_back(SpaceKind::kQuasiDerivationProjection);
    } else if (item == "centroid") {
      out.push_back(SpaceKind::kCentroid);
    } else if (item == "qcentroid") {
      out.push_back(SpaceKind::kQuasiCentroid);
    } else if (item == "cder") {
      out.push_back(SpaceKind::kCentralDerivation);
    } else {
      throw std::runtime_error("unknown space kind: " + item +
                               " (expected der,qder,centroid,qcentroid,cder)");
    }
  }
  return out;
}

std::map<std::string, Rational> parse_param_assignments(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::runtime_error("expected NAME=VALUE, got: " + item);
    out[item.substr(0, eq)] = rational_from_string(item.substr(eq + 1));
  }
  return out;
}

int emit_analysis(const AlgebraPresentation& algebra, const std::string& kinds_csv, bool json,
                  bool strict, std::ostream& out) {
  const AlgebraAnalysis analysis = analyze_algebra(algebra);
  const std::vector<SpaceKind> kinds = parse_kinds(kinds_csv);
  out << (json ? analysis_to_json(analysis, kinds) : analysis_to_table(analysis, kinds));
  return (strict && !analysis.zinbiel.holds) ? kFinding : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact operator spaces (derivations, quasi-derivations, centroid, quasi-centroid, "
               "central derivations) of finite-dimensional Zinbiel algebras, plus a recomputation "
               "audit of the low-dimensional tables"};
  app.name("zinbiel");
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "verify the defining identity for an algebra file");
  std::string check_file;
  bool check_strict = false;
  check->add_option("file", check_file, "algebra file")->required();
  check->add_flag("--strict", check_strict, "exit 1 when the identity fails");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "solve operator spaces for an algebra file");
  std::string analyze_file, analyze_spaces;
  bool analyze_json = false, analyze_table = false, analyze_strict = false;
  analyze->add_option("file", analyze_file, "algebra file")->required();
  analyze->add_option("--spaces", analyze_spaces, "comma list of der,qder,centroid,qcentroid,cder");
  analyze->add_flag("--json", analyze_json, "JSON output");
  analyze->add_flag("--table", analyze_table, "plain-text output (default)");
  analyze->add_flag("--strict", analyze_strict, "exit 1 when the identity fails");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "the classified dimension 2-4 algebras");
  auto* catalog_list = catalog->add_subcommand("list", "list catalog entries");
  auto* catalog_analyze = catalog->add_subcommand("analyze", "analyze a catalog entry");
  std::string cat_name, cat_spaces;
  std::vector<std::string> cat_params;
  bool cat_json = false, cat_table = false, cat_strict = false;
  catalog_analyze->add_option("name", cat_name, "catalog name, e.g. Z3^6")->required();
  catalog_analyze->add_option("--param", cat_params, "parameter value NAME=VALUE");
  catalog_analyze->add_option("--spaces", cat_spaces, "comma list of spaces");
  catalog_analyze->add_flag("--json", cat_json, "JSON output");
  catalog_analyze->add_flag("--table", cat_table, "plain-text output (default)");
  catalog_analyze->add_flag("--strict", cat_strict, "exit 1 when the identity fails");
  catalog->require_subcommand(1);

  // reconcile
  auto* reconcile = app.add_subcommand("reconcile", "recompute the tables and compare to the claims");
  std::vector<std::string> rec_names;
  bool rec_all = false, rec_json = false, rec_strict = false;
  int rec_samples = 4;
  reconcile->add_flag("--all", rec_all, "audit every catalog entry");
  reconcile->add_option("names", rec_names, "catalog names to audit");
  reconcile->add_option("--samples", rec_samples, "generic parameter samples per family")
      ->check(CLI::Range(1, 10));
  reconcile->add_flag("--json", rec_json, "JSON output");
  reconcile->add_flag("--strict", rec_strict, "exit 1 when the audit finds mismatches");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "dimensions of a family across parameter values");
  std::string sweep_name, sweep_param, sweep_values;
  bool sweep_json = false;
  sweep->add_option("name", sweep_name, "catalog family, e.g. Z3^6")->required();
  sweep->add_option("--param", sweep_param, "parameter name")->required();
  sweep->add_option("--values", sweep_values, "comma list of rational values")->required();
  sweep->add_flag("--json", sweep_json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (check->parsed()) {
      const AlgebraPresentation a = parse_algebra_file(read_file(check_file));
      const ZinbielCheck result = check_zinbiel(a);
      if (result.holds) {
        out << a.name << ": zinbiel identity holds on all " << a.dim * a.dim * a.dim
            << " basis triples\n";
        return kOk;
      }
      const ZinbielWitness& w = *result.witness;
      out << a.name << ": zinbiel identity FAILS at (e" << w.i + 1 << ", e" << w.j + 1 << ", e"
          << w.k + 1 << "); defect =";
      for (int t = 0; t < a.dim; ++t) {
        if (w.defect[t] != 0) out << " " << rational_to_string(w.defect[t]) << "*e" << t + 1;
      }
      out << "\n";
      return check_strict ? kFinding : kOk;
    }

    if (analyze->parsed()) {
      (void)analyze_table;
      const AlgebraPresentation a = parse_algebra_file(read_file(analyze_file));
      return emit_analysis(a, analyze_spaces, analyze_json, analyze_strict, out);
    }

    if (catalog_list->parsed()) {
      for (const CatalogEntry& e : catalog_entries()) {
        out << e.name << "  dim " << e.dim;
        if (e.param.has_value()) {
          out << "  param " << *e.param << " (splits at";
          for (const Rational& v : e.special_values) out << " " << rational_to_string(v);
          out << ")";
        }
        out << "\n";
        for (const ProductSpec& p : e.products) {
          out << "    e" << p.i + 1 << " e" << p.j + 1 << " =";
          bool first = true;
          for (const ProductTerm& t : p.terms) {
            out << (first ? " " : " + ");
            if (t.coeff != 1 || !t.param.has_value()) out << rational_to_string(t.coeff);
            if (t.param.has_value()) out << (t.coeff != 1 ? "*" : "") << *t.param;
            out << " e" << t.k + 1;
            first = false;
          }
          out << "\n";
        }
        if (e.products.empty()) out << "    (abelian)\n";
      }
      return kOk;
    }

    if (catalog_analyze->parsed()) {
      (void)cat_table;
      const AlgebraPresentation a = get_algebra(cat_name, parse_param_assignments(cat_params));
      return emit_analysis(a, cat_spaces, cat_json, cat_strict, out);
    }

    if (reconcile->parsed()) {
      if (!rec_all && rec_names.empty()) {
        err << "error: pass --all or at least one catalog name\n";
        return kInputError;
      }
      const ReconciliationReport report =
          reconcile_catalog(rec_all ? std::vector<std::string>{} : rec_names, rec_samples);
      out << (rec_json ? report_to_json(report) : report_to_table(report));
      const bool findings = report.mismatch_count() > 0 || report.falsified_claim_count() > 0;
      return (rec_strict && findings) ? kFinding : kOk;
    }

    if (sweep->parsed()) {
      const CatalogEntry* entry = find_catalog_entry(sweep_name);
      if (!entry) throw std::runtime_error("unknown catalog algebra: " + sweep_name);
      if (!entry->param.has_value() || *entry->param != sweep_param) {
        throw std::runtime_error(sweep_name + " has no parameter named " + sweep_param);
      }
      std::vector<Rational> values;
      std::stringstream ss(sweep_values);
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(rational_from_string(item));
      if (values.empty()) throw std::runtime_error("--values must list at least one rational");

      std::ostringstream table;
      table << sweep_name << " sweep over " << sweep_param << "\n";
      table << "  value | Der | QDer | Centroid | QGamma | C_d | nil\n";
      std::ostringstream json;
      json << "[\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        const AlgebraPresentation a = get_algebra(sweep_name, {{sweep_param, values[i]}});
        const AlgebraAnalysis analysis = analyze_algebra(a);
        table << "  " << rational_to_string(values[i]) << " | " << analysis.der.dim() << " | "
              << analysis.qder.projection.dim() << " | " << analysis.centroid.dim() << " | "
              << analysis.qcentroid.dim() << " | " << analysis.cder.dim() << " | "
              << (analysis.chain.nil_index ? std::to_string(*analysis.chain.nil_index) : "-") << "\n";
        json << "  {\"" << sweep_param << "\": \"" << rational_to_string(values[i])
             << "\", \"der\": " << analysis.der.dim() << ", \"qder\": " << analysis.qder.projection.dim()
             << ", \"centroid\": " << analysis.centroid.dim()
             << ", \"qcentroid\": " << analysis.qcentroid.dim() << ", \"cder\": " << analysis.cder.dim()
             << "}" << (i + 1 < values.size() ? "," : "") << "\n";
      }
      json << "]\n";
      out << (sweep_json ? json.str() : table.str());
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace zinbiel
