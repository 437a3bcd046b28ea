#include "zinbiel/algebra_file.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace zinbiel {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '*' || c == '=' || c == '+') {
      ++i;
    } else if (c == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') ++i;
      if (i < line.size()) ++i;  // closing quote
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '*' && line[i] != '=' && line[i] != '+' && line[i] != '#') {
        ++i;
      }
    }
    out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  const char c = s[0];
  return std::isdigit(static_cast<unsigned char>(c)) ||
         ((c == '-' || c == '+') && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1])));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// e<k> with 1 <= k; returns 0-based index or nullopt.
std::optional<long> basis_index(const std::string& s) {
  if (s.size() < 2 || s[0] != 'e') return std::nullopt;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  }
  const long k = std::stol(s.substr(1));
  if (k < 1) return std::nullopt;
  return k - 1;
}

}  // namespace

AlgebraPresentation parse_algebra_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  std::optional<AlgebraPresentation> algebra;
  std::map<std::string, Rational> params;
  std::vector<std::vector<bool>> seen;

  const auto fail = [&](const std::string& msg, int col) -> void { throw ParseError(msg, line_no, col); };

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!algebra.has_value()) {
      if (tokens[0].text != "algebra") fail("expected the algebra header first", tokens[0].col);
      if (tokens.size() != 4 || tokens[2].text != "dim") {
        fail("header must read: algebra \"<name>\" dim <n>", tokens[0].col);
      }
      std::string name = tokens[1].text;
      if (name.size() < 2 || name.front() != '"' || name.back() != '"') {
        fail("algebra name must be quoted", tokens[1].col);
      }
      name = name.substr(1, name.size() - 2);
      long n = 0;
      try {
        n = std::stol(tokens[3].text);
      } catch (...) {
        fail("dimension must be an integer", tokens[3].col);
      }
      if (n < 1 || n > 64) fail("dimension out of range (1..64)", tokens[3].col);
      algebra.emplace(name, static_cast<int>(n));
      seen.assign(n, std::vector<bool>(n, false));
      continue;
    }

    if (tokens[0].text == "param") {
      if (tokens.size() != 4 || tokens[2].text != "=") {
        fail("param line must read: param <ident> = <rational>", tokens[0].col);
      }
      if (!is_identifier(tokens[1].text) || basis_index(tokens[1].text).has_value()) {
        fail("invalid parameter name '" + tokens[1].text + "'", tokens[1].col);
      }
      if (params.count(tokens[1].text)) fail("duplicate parameter '" + tokens[1].text + "'", tokens[1].col);
      Rational value;
      try {
        value = rational_from_string(tokens[3].text);
      } catch (const std::exception& e) {
        fail(e.what(), tokens[3].col);
      }
      params.emplace(tokens[1].text, value);
      algebra->params.emplace(tokens[1].text, value);
      continue;
    }

    // product line: e<i> * e<j> = term { + term }
    const int n = algebra->dim;
    const auto lhs_i = basis_index(tokens[0].text);
    if (!lhs_i.has_value()) fail("expected e<i> on the left of a product", tokens[0].col);
    if (tokens.size() < 3 || tokens[1].text != "*") fail("expected '*'", tokens[std::min<std::size_t>(1, tokens.size() - 1)].col);
    const auto lhs_j = basis_index(tokens[2].text);
    if (!lhs_j.has_value()) fail("expected e<j> after '*'", tokens[2].col);
    if (*lhs_i >= n) fail("basis index out of range", tokens[0].col);
    if (*lhs_j >= n) fail("basis index out of range", tokens[2].col);
    if (tokens.size() < 4 || tokens[3].text != "=") fail("expected '='", tokens[std::min<std::size_t>(3, tokens.size() - 1)].col);
    if (seen[*lhs_i][*lhs_j]) fail("duplicate product line for this basis pair", tokens[0].col);
    seen[*lhs_i][*lhs_j] = true;

    std::size_t pos = 4;
    if (pos >= tokens.size()) fail("empty right-hand side", tokens[3].col);
    while (true) {
      // term := coeff [* ident] e<k>
      if (pos >= tokens.size()) fail("expected a term", tokens.back().col);
      Rational coeff;
      if (looks_rational(tokens[pos].text)) {
        try {
          coeff = rational_from_string(tokens[pos].text);
        } catch (const std::exception& e) {
          fail(e.what(), tokens[pos].col);
        }
        ++pos;
        if (pos < tokens.size() && tokens[pos].text == "*") {
          ++pos;
          if (pos >= tokens.size() || !is_identifier(tokens[pos].text) ||
              basis_index(tokens[pos].text).has_value()) {
            fail("expected a parameter name after '*'", tokens[pos < tokens.size() ? pos : pos - 1].col);
          }
          const auto it = params.find(tokens[pos].text);
          if (it == params.end()) fail("unknown parameter '" + tokens[pos].text + "'", tokens[pos].col);
          coeff *= it->second;
          ++pos;
        }
      } else if (is_identifier(tokens[pos].text) && !basis_index(tokens[pos].text).has_value()) {
        const auto it = params.find(tokens[pos].text);
        if (it == params.end()) fail("unknown parameter '" + tokens[pos].text + "'", tokens[pos].col);
        coeff = it->second;
        ++pos;
      } else {
        fail("expected a coefficient", tokens[pos].col);
      }
      if (pos >= tokens.size()) fail("expected e<k> to close the term", tokens.back().col);
      const auto k = basis_index(tokens[pos].text);
      if (!k.has_value()) fail("expected e<k> to close the term", tokens[pos].col);
      if (*k >= n) fail("basis index out of range", tokens[pos].col);
      algebra->gamma_at(static_cast<int>(*lhs_i), static_cast<int>(*lhs_j), static_cast<int>(*k)) += coeff;
      ++pos;
      if (pos == tokens.size()) break;
      if (tokens[pos].text != "+") fail("expected '+' between terms", tokens[pos].col);
      ++pos;
    }
  }

  if (!algebra.has_value()) throw ParseError("empty input: missing algebra header", 1, 1);
  return *algebra;
}

std::string serialize_algebra_file(const AlgebraPresentation& a) {
  std::ostringstream out;
  out << "algebra \"" << a.name << "\" dim " << a.dim << "\n";
  for (const auto& [key, value] : a.params) {
    out << "param " << key << " = " << rational_to_string(value) << "\n";
  }
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      bool any = false;
      for (int k = 0; k < a.dim; ++k) {
        if (a.gamma_at(i, j, k) != 0) any = true;
      }
      if (!any) continue;
      out << "e" << (i + 1) << " * e" << (j + 1) << " =";
      bool first = true;
      for (int k = 0; k < a.dim; ++k) {
        const Rational& g = a.gamma_at(i, j, k);
        if (g == 0) continue;
        out << (first ? " " : " + ") << rational_to_string(g) << " e" << (k + 1);
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace zinbiel
