#include "zinbiel/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace zinbiel {

namespace {

using Grid = std::vector<std::vector<std::string>>;

ProductTerm term_of(const std::string& coeff, int k) {
  ProductTerm t;
  t.k = k - 1;
  if (std::isalpha(static_cast<unsigned char>(coeff[0]))) {
    t.coeff = 1;
    t.param = coeff;
  } else if (coeff[0] == '-' && coeff.size() > 1 &&
             std::isalpha(static_cast<unsigned char>(coeff[1]))) {
    t.coeff = -1;
    t.param = coeff.substr(1);
  } else {
    t.coeff = rational_from_string(coeff);
  }
  return t;
}

struct TermSpec {
  const char* coeff;
  int k;
};

ProductSpec prod(int i, int j, std::initializer_list<TermSpec> terms) {
  ProductSpec p;
  p.i = i - 1;
  p.j = j - 1;
  for (const auto& t : terms) p.terms.push_back(term_of(t.coeff, t.k));
  return p;
}

ClaimedGrid grid(Grid cells) { return ClaimedGrid{std::move(cells)}; }

CatalogClaimRow row_all(std::optional<int> qdim, const char* qtype, Grid qg, Grid dg, Grid qdg) {
  CatalogClaimRow r;
  if (qdim) r.qgamma_dim = qdim;
  if (qtype) r.qgamma_type = qtype;
  r.qgamma_grid = grid(std::move(qg));
  r.der_grid = grid(std::move(dg));
  r.qder_grid = grid(std::move(qdg));
  return r;
}

CatalogClaimRow row_eq(std::string label, long value, std::optional<int> qdim, const char* qtype,
                       Grid qg, Grid dg, Grid qdg) {
  CatalogClaimRow r = row_all(qdim, qtype, std::move(qg), std::move(dg), std::move(qdg));
  r.label = std::move(label);
  r.equals = rational_of(value);
  return r;
}

CatalogClaimRow row_neq(std::string label, std::initializer_list<long> avoid, std::optional<int> qdim,
                        const char* qtype, Grid qg, Grid dg, Grid qdg) {
  CatalogClaimRow r = row_all(qdim, qtype, std::move(qg), std::move(dg), std::move(qdg));
  r.label = std::move(label);
  for (long v : avoid) r.not_equals.push_back(rational_of(v));
  return r;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  {
    CatalogEntry e;
    e.name = "Z2^1";
    e.dim = 2;
    e.products = {prod(1, 1, {{"1", 2}})};
    e.claims = {row_all(2, "small",
                        {{"a22", "0"}, {"a21", "a22"}},
                        {{"d11", "0"}, {"d21", "2*d11"}},
                        {{"a11", "0"}, {"a21", "2*d11"}})};
    e.known_issues = {
        "printed quasi-centroid grid repeats a22 while the proof derives a12 = 0, a22 = a11 "
        "for the centroid; both recomputed spaces appear in the report"};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "Z3^1";
    e.dim = 3;
    e.claims = {row_all(9, "small",
                        {{"a11", "a12", "a13"}, {"a21", "a22", "a23"}, {"a31", "a32", "a33"}},
                        {{"d11", "d12", "d33"}, {"d21", "d22", "d23"}, {"d31", "d32", "d33"}},
                        {{"a11", "a12", "a33"}, {"a21", "a22", "a23"}, {"a31", "a32", "a33"}})};
    e.known_issues = {
        "proof text cites gamma_13^2 = gamma_31^2 = 1 although the classification defines the "
        "algebra abelian; products transcribed from the theorem statement"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^2";
    e.dim = 3;
    e.products = {prod(1, 1, {{"1", 3}})};
    e.claims = {row_all(6, "not small",
                        {{"a33", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "a33"}},
                        {{"d11", "0", "0"}, {"d21", "d22", "0"}, {"d31", "d32", "2*d11"}},
                        {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "2*d11"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^3";
    e.dim = 3;
    e.products = {prod(1, 1, {{"1", 3}}), prod(2, 2, {{"1", 3}})};
    e.claims = {row_all(4, "small",
                        {{"a33", "a12", "0"}, {"0", "a33", "0"}, {"a31", "a32", "a33"}},
                        {{"d22", "-d21", "0"}, {"d21", "d22", "0"}, {"d31", "d32", "2*d22"}},
                        {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^4";
    e.dim = 3;
    e.products = {prod(1, 2, {{"1/2", 3}}), prod(2, 1, {{"-1/2", 3}})};
    e.claims = {row_all(4, "not small",
                        {{"a33", "0", "0"}, {"0", "a12", "0"}, {"a31", "a32", "a33"}},
                        {{"d33-d22", "d12", "0"}, {"d21", "d22", "0"}, {"d31", "d32", "d33"}},
                        {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "d11+d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^5";
    e.dim = 3;
    e.products = {prod(2, 1, {{"1", 3}})};
    e.claims = {row_all(8, "not small",
                        {{"a11", "a12", "a13"}, {"0", "a22", "a23"}, {"a31", "a32", "a33"}},
                        {{"d33-d22", "0", "0"}, {"0", "d22", "0"}, {"d31", "d32", "d33"}},
                        {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "d11+d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^6";
    e.dim = 3;
    e.param = "lambda";
    e.special_values = {rational_of(0)};
    e.products = {prod(1, 1, {{"1", 3}}), prod(1, 2, {{"1", 3}}), prod(2, 2, {{"lambda", 3}})};
    e.claims = {
        row_neq("lambda != 0", {0}, 4, "not small",
                {{"a33", "-lambda*a22+lambda*a33", "0"}, {"0", "a22", "0"}, {"a31", "a32", "a33"}},
                {{"d33-d22", "d33-2*d22", "0"}, {"-d33+2*d22", "d22", "0"}, {"d31", "d32", "d33"}},
                {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "-d21+2*d22"}}),
        row_eq("lambda = 0", 0, 5, "not small",
               {{"a33", "0", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "a33"}},
               {{"d33-d22", "0", "0"}, {"-d33+2*d22", "d22", "0"}, {"d31", "d32", "d33"}},
               {{"a11", "a12", "0"}, {"a21", "a22", "0"}, {"a31", "a32", "-d21+2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z3^7";
    e.dim = 3;
    e.products = {prod(1, 1, {{"1", 2}}), prod(1, 2, {{"1/2", 3}}), prod(2, 1, {{"1", 3}})};
    e.claims = {row_all(4, "small",
                        {{"a33", "0", "0"}, {"a32", "a33", "0"}, {"a31", "a32", "a33"}},
                        {{"d11", "0", "0"}, {"d21", "2*d11", "0"}, {"d31", "3/2*d21", "3*d11"}},
                        {{"a11", "0", "0"}, {"a21", "2*d11", "0"}, {"a31", "3/2*d21", "d11+d22"}})};
    out.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "Z4^1";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 2}}), prod(1, 2, {{"1", 3}}), prod(2, 1, {{"2", 3}}),
                  prod(1, 3, {{"1", 4}}), prod(2, 2, {{"3", 4}}), prod(3, 1, {{"3", 4}})};
    e.claims = {row_all(
        10, "small",
        {{"a44", "0", "0", "0"},
         {"a21", "a44", "0", "0"},
         {"a31", "2*a21", "a44", "0"},
         {"a41", "3*a31", "3*a21", "a44"}},
        {{"1/2*d22", "0", "0", "0"},
         {"1/3*d32", "d22", "0", "0"},
         {"1/4*d42", "d32", "3/2*d22", "0"},
         {"d41", "d42", "2*d32", "2*d22"}},
        {{"a11", "0", "0", "0"},
         {"a21", "2*d11", "0", "0"},
         {"a31", "d32", "d11+d22", "0"},
         {"a41", "4*d31", "2*d32", "2*d22"}})};
    e.known_issues = {
        "quasi-centroid table grid shows 4 distinct symbols but the Dim column says 10, and the "
        "proof displays a different matrix"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^2";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 3}}), prod(1, 2, {{"1", 4}}), prod(1, 3, {{"1", 4}}),
                  prod(3, 1, {{"2", 4}})};
    e.claims = {row_all(
        9, "not small",
        {{"a44", "0", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "a44", "0"},
         {"a41", "a42", "2*a31", "a44"}},
        {{"d11", "0", "0", "0"},
         {"d43-3*d31", "2*d11", "0", "0"},
         {"d31", "0", "2*d11", "0"},
         {"d41", "d42", "d43", "3*d11"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "2*d11", "0"},
         {"a41", "a42", "d21+3*d31", "d11+d33"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^3";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 3}}), prod(1, 3, {{"1", 4}}), prod(2, 2, {{"1", 4}}),
                  prod(3, 1, {{"2", 4}})};
    e.claims = {row_all(
        7, "small",
        {{"a44", "0", "0", "0"},
         {"0", "a44", "0", "0"},
         {"a31", "a32", "a44", "0"},
         {"a41", "a42", "2*a31", "a44"}},
        {{"d11", "0", "0", "0"},
         {"0", "3/2*d11", "0", "0"},
         {"d31", "0", "2*d11", "0"},
         {"d41", "d42", "3*d31", "3*d11"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "4*d22-3*d33", "0"},
         {"a41", "a42", "3*d31", "2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^4";
    e.dim = 4;
    e.products = {prod(1, 2, {{"1", 3}}), prod(1, 3, {{"1", 4}}), prod(2, 1, {{"-1", 3}})};
    e.claims = {row_all(
        6, "not small",
        {{"a44", "0", "0", "0"},
         {"0", "a22", "0", "0"},
         {"a31", "a32", "a44", "0"},
         {"a41", "a42", "0", "a44"}},
        {{"-d33+d44", "0", "0", "0"},
         {"d21", "-d44+2*d33", "0", "0"},
         {"0", "0", "d33", "0"},
         {"d41", "d42", "0", "d44"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "d11+d22", "0"},
         {"a41", "a42", "0", "d11+d33"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^5";
    e.dim = 4;
    e.products = {prod(1, 2, {{"1", 3}}), prod(1, 3, {{"1", 4}}), prod(2, 1, {{"-1", 3}}),
                  prod(2, 2, {{"1", 4}})};
    e.claims = {row_all(
        6, "small",
        {{"a44", "0", "0", "0"},
         {"0", "a44", "0", "0"},
         {"a31", "a32", "a44", "0"},
         {"a41", "a42", "0", "a44"}},
        {{"1/2*d22", "0", "0", "0"},
         {"-d43", "d22", "0", "0"},
         {"0", "2*d43", "3/2*d22", "0"},
         {"d41", "d42", "d43", "2*d22"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "3*d22-d33", "0"},
         {"a41", "a42", "-d21", "2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^6";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 4}}), prod(1, 2, {{"1", 3}}), prod(2, 1, {{"-1", 3}}),
                  prod(2, 2, {{"-2", 3}, {"1", 4}})};
    e.claims = {row_all(
        9, "not small",
        {{"a44", "-a43", "0", "0"},
         {"a43", "-2*a43+a44", "0", "0"},
         {"a31", "a32", "-2*a43+a44", "-a43"},
         {"a41", "a42", "a43", "a44"}},
        {{"d22", "0", "0", "0"},
         {"0", "d22", "0", "0"},
         {"d31", "d32", "2*d22", "0"},
         {"d41", "d42", "0", "2*d22"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "2*d22", "0"},
         {"a41", "a42", "0", "2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^7";
    e.dim = 4;
    e.products = {prod(1, 2, {{"1", 3}}), prod(2, 1, {{"1", 4}}), prod(2, 2, {{"-1", 3}})};
    e.claims = {row_all(
        9, "not small",
        {{"a33", "-a33+a22", "0", "a14"},
         {"0", "a22", "0", "a24"},
         {"a31", "a32", "a33", "a34"},
         {"a41", "a42", "0", "a44"}},
        {{"d22", "0", "0", "0"},
         {"0", "d22", "0", "0"},
         {"d31", "d32", "2*d22", "0"},
         {"d41", "d42", "0", "2*d22"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "2*d22", "0"},
         {"a41", "a42", "0", "2*d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^8";
    e.dim = 4;
    e.param = "alpha";
    e.special_values = {rational_of(0)};
    e.products = {prod(1, 1, {{"1", 3}}), prod(1, 2, {{"1", 4}}), prod(2, 1, {{"-alpha", 3}}),
                  prod(2, 2, {{"-1", 4}})};
    e.claims = {
        [] {
          CatalogClaimRow r;
          r.qgamma_dim = 7;
          r.qgamma_type = "not small";
          r.qgamma_grid = grid({{"alpha*a21+a33", "-alpha*a21+a21+a22-a33", "0", "0"},
                                {"a21", "a22", "0", "0"},
                                {"a31", "a32", "a33", "0"},
                                {"a41", "a42", "0", "alpha*a21-a21+a33"}});
          return r;
        }(),
        row_neq("alpha != 0", {0}, std::nullopt, nullptr, {},
                {{"d11", "d12", "0", "0"},
                 {"d21", "d12+d11-d21", "0", "0"},
                 {"d31", "d32", "2*d11-d21", "d12"},
                 {"d41", "d42", "d21", "d12+d11-2*d21"}},
                {{"a11", "a12", "0", "0"},
                 {"a21", "a22", "0", "0"},
                 {"a31", "a32", "a33", "d12"},
                 {"a41", "a42", "d21", "d12+a33-d21"}}),
        row_eq("alpha = 0", 0, std::nullopt, nullptr, {},
               {{"d11", "0", "0", "0"},
                {"0", "d11", "0", "0"},
                {"d31", "d32", "2*d11", "0"},
                {"d41", "d42", "0", "2*d11"}},
               {{"a11", "a12", "0", "0"},
                {"a21", "a22", "0", "0"},
                {"a31", "a32", "a33", "0"},
                {"a41", "a42", "0", "a33"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^9";
    e.dim = 4;
    e.param = "alpha";
    e.special_values = {rational_of(0)};
    e.products = {prod(1, 1, {{"1", 4}}), prod(1, 2, {{"alpha", 4}}), prod(2, 1, {{"-alpha", 4}}),
                  prod(2, 2, {{"1", 4}}), prod(3, 3, {{"1", 4}})};
    e.claims = {
        [] {
          CatalogClaimRow r;
          r.qgamma_dim = 6;
          r.qgamma_type = "not small";
          r.qgamma_grid = grid({{"a44", "a12", "a13", "0"},
                                {"0", "-alpha*a12+a44", "a23", "0"},
                                {"0", "0", "a44", "0"},
                                {"a41", "a42", "a43", "a44"}});
          return r;
        }(),
        row_neq("alpha != 0", {0}, std::nullopt, nullptr, {},
                {{"d22", "-d21", "d13", "0"},
                 {"d21", "d22", "d23", "0"},
                 {"-d13", "-d23", "d22", "0"},
                 {"d41", "d42", "d43", "2*d22"}},
                {{"a11", "a12", "a13", "0"},
                 {"a21", "a22", "a23", "0"},
                 {"a31", "a32", "a33", "0"},
                 {"a41", "a42", "a43", "2*d33"}}),
        row_eq("alpha = 0", 0, std::nullopt, nullptr, {},
               {{"d22", "-d21", "0", "0"},
                {"d21", "d22", "0", "0"},
                {"0", "0", "d22", "0"},
                {"d41", "d42", "d43", "2*d22"}},
               {{"a11", "a12", "a13", "0"},
                {"a21", "a22", "a23", "0"},
                {"a31", "a32", "a33", "0"},
                {"a41", "a42", "a43", "2*d33"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^10";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 4}}), prod(1, 3, {{"1", 4}}), prod(2, 1, {{"-1", 4}}),
                  prod(2, 2, {{"1", 4}}), prod(3, 1, {{"1", 4}})};
    e.claims = {row_all(
        7, "not small",
        {{"a44", "0", "0", "0"},
         {"0", "a44", "a23", "0"},
         {"0", "a32", "a33", "0"},
         {"a41", "a42", "a43", "a44"}},
        {{"d33", "0", "0", "0"},
         {"-d32", "d33", "0", "0"},
         {"0", "d32", "d33", "0"},
         {"d41", "d42", "d43", "2*d33"}},
        {{"a11", "a12", "a13", "0"},
         {"a21", "a22", "a23", "0"},
         {"a31", "a32", "a33", "0"},
         {"a41", "a42", "a43", "2*d33"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^11";
    e.dim = 4;
    e.products = {prod(1, 1, {{"1", 4}}), prod(1, 2, {{"1", 4}}), prod(2, 1, {{"-1", 4}}),
                  prod(3, 3, {{"1", 4}})};
    e.claims = {row_all(
        7, "not small",
        {{"a44", "0", "a13", "0"},
         {"0", "a22", "a23", "0"},
         {"0", "0", "a44", "0"},
         {"a41", "a42", "a43", "a44"}},
        {{"d33", "0", "0", "0"},
         {"d21", "d33", "0", "0"},
         {"0", "0", "d33", "0"},
         {"d41", "d42", "d43", "2*d33"}},
        {{"a11", "a12", "a13", "0"},
         {"a21", "a22", "a23", "0"},
         {"a31", "a32", "a33", "0"},
         {"a41", "a42", "a43", "2*d33"}})};
    out.push_back(std::move(e));
  }

  const auto z412_products = [] {
    return std::vector<ProductSpec>{prod(1, 2, {{"1", 3}}), prod(2, 1, {{"1", 4}})};
  };
  const char* z412_typo =
      "products printed identical to Z4^12 (evident typo); the entry keeps its own claimed "
      "tables, which cannot all arise from the shared printed products";
  {
    CatalogEntry e;
    e.name = "Z4^12";
    e.dim = 4;
    e.products = z412_products();
    e.claims = {row_all(
        10, "not small",
        {{"a33", "0", "0", "a14"},
         {"0", "a22", "0", "a24"},
         {"a31", "a32", "a33", "a34"},
         {"a41", "a42", "0", "a44"}},
        {{"d44-d22", "0", "0", "0"},
         {"0", "d22", "0", "0"},
         {"d31", "d32", "d44", "0"},
         {"d41", "d42", "0", "d44"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "d11+d22", "0"},
         {"a41", "a42", "0", "d11+d22"}})};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^13";
    e.dim = 4;
    e.products = z412_products();
    e.claims = {row_all(
        7, "not small",
        {{"a33", "a34", "0", "0"},
         {"0", "a44", "0", "0"},
         {"a31", "a32", "a33", "a34"},
         {"a41", "a42", "0", "a44"}},
        {{"d33-d22", "d12", "0", "0"},
         {"0", "d22", "0", "0"},
         {"d31", "d32", "d33", "0"},
         {"d41", "d42", "0", "2*d22"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "d11+d22", "0"},
         {"a41", "a42", "0", "2*d22"}})};
    e.known_issues = {z412_typo};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^14";
    e.dim = 4;
    e.products = z412_products();
    e.claims = {row_all(
        11, "not small",
        {{"a11", "a12", "0", "a14"},
         {"0", "a33", "0", "a24"},
         {"a31", "a32", "a33", "a34"},
         {"a41", "a42", "0", "a44"}},
        {{"d44-d22", "d43", "0", "0"},
         {"0", "d22", "0", "0"},
         {"d31", "d32", "2*d22", "0"},
         {"d41", "d42", "d43", "d44"}},
        {{"a11", "a12", "0", "0"},
         {"a21", "a22", "0", "0"},
         {"a31", "a32", "2*d22", "0"},
         {"a41", "a42", "d12", "d11+d22"}})};
    e.known_issues = {z412_typo};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^15";
    e.dim = 4;
    e.param = "alpha";
    e.special_values = {rational_of(0), rational_of(1)};
    e.products = z412_products();
    e.claims = {
        row_neq("alpha != 0", {0}, 7, "not small",
                {{"a44", "a43", "0", "0"},
                 {"a21", "a33", "0", "0"},
                 {"a31", "a32", "a33", "a21"},
                 {"a41", "a42", "a43", "a44"}},
                {}, {}),
        row_eq("alpha = 0", 0, 8, "not small",
               {{"a44", "a43", "0", "0"},
                {"0", "a33", "0", "0"},
                {"a31", "a32", "a33", "0"},
                {"a41", "a42", "a43", "a44"}},
               {}, {}),
        row_neq("alpha != 1", {1}, std::nullopt, nullptr, {},
                {{"d44-d22", "-1/2*alpha*d43+1/2*d43", "0", "0"},
                 {"0", "d22", "0", "0"},
                 {"d31", "d32", "2*d22", "0"},
                 {"d41", "d42", "d43", "d44"}},
                {{"a11", "a12", "0", "0"},
                 {"a21", "a22", "0", "0"},
                 {"a31", "a32", "2*d22", "0"},
                 {"a41", "a42", "a43", "d11+d22"}})};
    e.known_issues = {z412_typo,
                      "claimed tables split on alpha although the printed products never use it"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Z4^16";
    e.dim = 4;
    e.products = z412_products();
    e.claims = {row_all(
        7, "not small",
        {{"a44", "0", "a13", "0"},
         {"0", "a22", "a23", "0"},
         {"0", "0", "a44", "0"},
         {"a41", "a42", "a43", "a44"}},
        {{"2*d33-d22", "d12", "0", "0"},
         {"d21", "d22", "0", "0"},
         {"0", "0", "d33", "0"},
         {"d41", "d42", "d43", "2*d33"}},
        {{"a11", "a12", "a13", "0"},
         {"a21", "a22", "a23", "0"},
         {"a31", "a32", "a33", "0"},
         {"a41", "a42", "a43", "2*d33"}})};
    e.known_issues = {z412_typo};
    out.push_back(std::move(e));
  }

  return out;
}

}  // namespace

namespace {

// Scans an ASCII grid cell for entry symbols of the form a_rc / d_rc
// (two digits, as everywhere in the source tables).
std::vector<std::string> cell_symbols(const std::string& cell) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos + 3 <= cell.size(); ++pos) {
    const char c = cell[pos];
    if (c != 'a' && c != 'd') continue;
    if (pos > 0 && std::isalnum(static_cast<unsigned char>(cell[pos - 1]))) continue;
    if (std::isdigit(static_cast<unsigned char>(cell[pos + 1])) &&
        std::isdigit(static_cast<unsigned char>(cell[pos + 2]))) {
      out.push_back(cell.substr(pos, 3));
    }
  }
  return out;
}

}  // namespace

int ClaimedGrid::distinct_symbol_count() const {
  std::set<std::string> symbols;
  for (const auto& row : cells)
    for (const auto& cell : row)
      for (const std::string& s : cell_symbols(cell)) symbols.insert(s);
  return static_cast<int>(symbols.size());
}

bool ClaimedGrid::mixes_symbol_families() const {
  bool has_a = false, has_d = false;
  for (const auto& row : cells)
    for (const auto& cell : row)
      for (const std::string& s : cell_symbols(cell)) (s[0] == 'a' ? has_a : has_d) = true;
  return has_a && has_d;
}

bool CatalogClaimRow::applies(const std::optional<Rational>& value) const {
  if (!value.has_value()) return !equals.has_value() && not_equals.empty();
  if (equals.has_value()) return *value == *equals;
  for (const Rational& avoid : not_equals) {
    if (*value == avoid) return false;
  }
  return true;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

AlgebraPresentation get_algebra(const std::string& name, const std::map<std::string, Rational>& params) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw std::invalid_argument("unknown catalog algebra: " + name);
  if (entry->param.has_value()) {
    if (params.size() != 1 || params.begin()->first != *entry->param) {
      throw std::invalid_argument(name + " requires exactly one parameter: " + *entry->param);
    }
  } else if (!params.empty()) {
    throw std::invalid_argument(name + " takes no parameters");
  }
  AlgebraPresentation a(name, entry->dim);
  a.params = params;
  for (const ProductSpec& p : entry->products) {
    for (const ProductTerm& t : p.terms) {
      Rational coeff = t.coeff;
      if (t.param.has_value()) coeff *= params.at(*t.param);
      a.gamma_at(p.i, p.j, t.k) += coeff;
    }
  }
  return a;
}

std::vector<Rational> generic_samples(const CatalogEntry& entry, int count) {
  static const long sequence[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::vector<Rational> out;
  for (long v : sequence) {
    if (static_cast<int>(out.size()) >= count) break;
    const Rational q = rational_of(v);
    bool special = false;
    for (const Rational& s : entry.special_values) {
      if (q == s) special = true;
    }
    if (!special) out.push_back(q);
  }
  return out;
}

int ReconciliationReport::mismatch_count() const {
  int count = 0;
  for (const RowAudit& row : rows) {
    for (const SpaceAudit& s : row.spaces) {
      if (!s.match) ++count;
    }
    if (row.claimed_small && row.recomputed_small && *row.claimed_small != *row.recomputed_small) ++count;
  }
  return count;
}

int ReconciliationReport::falsified_claim_count() const {
  int count = 0;
  for (const InstantiationRecord& rec : instantiations) {
    for (const ClaimVerdict& v : rec.claims) {
      if (!v.holds) ++count;
    }
  }
  return count;
}

namespace {

bool run_soundness_and_maximality(const AlgebraAnalysis& analysis) {
  const AlgebraPresentation& a = analysis.algebra;
  const auto sound = [&](const OperatorSpace& space) {
    for (int i = 0; i < space.dim(); ++i) {
      if (!verify_member(a, space.kind, space.basis_matrix(i)).valid) return false;
    }
    return true;
  };
  if (!sound(analysis.der) || !sound(analysis.centroid) || !sound(analysis.qcentroid) ||
      !sound(analysis.cder)) {
    return false;
  }
  for (int i = 0; i < analysis.qder.pair_dim(); ++i) {
    if (!verify_member(a, SpaceKind::kQuasiDerivationProjection, analysis.qder.pair_d(i),
                       analysis.qder.pair_companion(i))
             .valid) {
      return false;
    }
  }
  // Two-path maximality: the pairwise-intersection order must reproduce
  // the assembled-system solution exactly.
  if (!(solve_space_pairwise(a, SpaceKind::kDerivation) == analysis.der.space)) return false;
  if (!(solve_space_pairwise(a, SpaceKind::kCentroid) == analysis.centroid.space)) return false;
  if (!(solve_space_pairwise(a, SpaceKind::kQuasiCentroid) == analysis.qcentroid.space)) return false;
  if (!(solve_space_pairwise(a, SpaceKind::kCentralDerivation) == analysis.cder.space)) return false;
  if (!(solve_qder_pairs_pairwise(a) == analysis.qder.pairs)) return false;
  return true;
}

std::string value_label(const CatalogEntry& entry, const std::optional<Rational>& value) {
  if (!value.has_value()) return "";
  return *entry.param + "=" + rational_to_string(*value);
}

}  // namespace

ReconciliationReport reconcile_catalog(const std::vector<std::string>& names, int param_samples) {
  std::vector<const CatalogEntry*> selected;
  if (names.empty()) {
    for (const CatalogEntry& e : catalog_entries()) selected.push_back(&e);
  } else {
    for (const std::string& n : names) {
      const CatalogEntry* e = find_catalog_entry(n);
      if (!e) throw std::invalid_argument("unknown catalog algebra: " + n);
      selected.push_back(e);
    }
  }

  ReconciliationReport report;
  for (const CatalogEntry* entry : selected) {
    for (const std::string& issue : entry->known_issues) {
      report.findings.push_back(entry->name + ": " + issue);
    }

    std::vector<std::optional<Rational>> values;
    if (entry->param.has_value()) {
      for (const Rational& v : generic_samples(*entry, param_samples)) values.emplace_back(v);
      for (const Rational& v : entry->special_values) values.emplace_back(v);
    } else {
      values.emplace_back(std::nullopt);
    }

    struct Computed {
      std::optional<Rational> value;
      InstantiationRecord record;
    };
    std::vector<Computed> computed;
    for (const auto& value : values) {
      std::map<std::string, Rational> params;
      if (value.has_value()) params[*entry->param] = *value;
      const AlgebraPresentation a = get_algebra(entry->name, params);
      const AlgebraAnalysis analysis = analyze_algebra(a);
      InstantiationRecord rec;
      rec.entry = entry->name;
      rec.label = value_label(*entry, value);
      rec.zinbiel_holds = analysis.zinbiel.holds;
      rec.nil_index = analysis.chain.nil_index;
      rec.annihilator_dim = analysis.annihilator_space.dim();
      rec.der_dim = analysis.der.dim();
      rec.centroid_dim = analysis.centroid.dim();
      rec.qcentroid_dim = analysis.qcentroid.dim();
      rec.cder_dim = analysis.cder.dim();
      rec.qder_projection_dim = analysis.qder.projection.dim();
      rec.qder_pair_dim = analysis.qder.pair_dim();
      rec.is_small = smallness(analysis).is_small;
      rec.oracles_ok = run_soundness_and_maximality(analysis);
      rec.claims = reconcile_claims(analysis);
      if (!rec.zinbiel_holds) {
        report.findings.push_back(entry->name + (rec.label.empty() ? "" : " (" + rec.label + ")") +
                                  ": presentation fails the defining identity");
      }
      if (!rec.oracles_ok) {
        report.findings.push_back(entry->name + (rec.label.empty() ? "" : " (" + rec.label + ")") +
                                  ": internal oracle disagreement (soundness/maximality)");
      }
      computed.push_back(Computed{value, std::move(rec)});
    }

    for (const CatalogClaimRow& claim_row : entry->claims) {
      RowAudit audit;
      audit.entry = entry->name;
      audit.row_label = claim_row.label;
      std::vector<const Computed*> matching;
      for (const Computed& c : computed) {
        if (claim_row.applies(c.value)) matching.push_back(&c);
      }
      if (matching.empty()) continue;

      const auto audit_space = [&](const std::string& space_name, std::optional<int> claimed,
                                   const ClaimedGrid& grid_data, auto dim_of) {
        if (!claimed.has_value() && grid_data.empty()) return;
        SpaceAudit sa;
        sa.space = space_name;
        sa.claimed_dim = claimed;
        for (const Computed* c : matching) {
          sa.recomputed.emplace_back(c->record.label, dim_of(c->record));
        }
        for (const auto& [label, dim] : sa.recomputed) {
          if (dim != sa.recomputed.front().second) sa.dims_stable = false;
        }
        sa.match = sa.dims_stable && sa.claimed_dim.has_value() &&
                   *sa.claimed_dim == sa.recomputed.front().second;
        if (!grid_data.empty()) {
          if (claimed.has_value() && grid_data.distinct_symbol_count() != *claimed) {
            sa.note = "table Dim differs from the grid's distinct symbol count (" +
                      std::to_string(grid_data.distinct_symbol_count()) + ")";
          }
          if (grid_data.mixes_symbol_families()) {
            if (!sa.note.empty()) sa.note += "; ";
            sa.note += "paper grid mixes a_ij and d_ij symbols";
          }
        }
        if (!sa.dims_stable) {
          if (!sa.note.empty()) sa.note += "; ";
          sa.note += "recomputed dims vary across generic samples";
          report.findings.push_back(entry->name + " " + claim_row.label + " " + space_name +
                                    ": recomputed dims vary across generic samples");
        }
        audit.spaces.push_back(std::move(sa));
      };

      audit_space("QGamma", claim_row.qgamma_dim, claim_row.qgamma_grid,
                  [](const InstantiationRecord& r) { return r.qcentroid_dim; });
      audit_space("Der",
                  claim_row.der_grid.empty()
                      ? std::nullopt
                      : std::optional<int>(claim_row.der_grid.distinct_symbol_count()),
                  claim_row.der_grid, [](const InstantiationRecord& r) { return r.der_dim; });
      audit_space("QDer",
                  claim_row.qder_grid.empty()
                      ? std::nullopt
                      : std::optional<int>(claim_row.qder_grid.distinct_symbol_count()),
                  claim_row.qder_grid,
                  [](const InstantiationRecord& r) { return r.qder_projection_dim; });

      if (claim_row.qgamma_type.has_value()) {
        audit.claimed_small = claim_row.qgamma_type;
        bool all_same = true;
        for (const Computed* c : matching) {
          if (c->record.is_small != matching.front()->record.is_small) all_same = false;
        }
        audit.recomputed_small = matching.front()->record.is_small ? "small" : "not small";
        if (!all_same) {
          report.findings.push_back(entry->name + " " + claim_row.label +
                                    ": smallness verdict varies across samples");
        }
      }
      report.rows.push_back(std::move(audit));
    }

    for (Computed& c : computed) report.instantiations.push_back(std::move(c.record));
  }

  // Direct-sum audits for the decomposition theorem, on a fixed trio.
  if (names.empty()) {
    const AlgebraPresentation z21 = get_algebra("Z2^1", {});
    const AlgebraPresentation z31 = get_algebra("Z3^1", {});
    report.direct_sums.push_back(direct_sum_theorem_check(z21, z21));
    report.direct_sums.push_back(direct_sum_theorem_check(z21, z31));
    report.direct_sums.push_back(direct_sum_theorem_check(z31, z31));
  }

  return report;
}

}  // namespace zinbiel
