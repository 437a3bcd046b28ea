#pragma once

#include <stdexcept>
#include <string>

#include "zinbiel/algebra.hpp"

namespace zinbiel {

/// Syntax or semantic error in an algebra file, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Parses the line-oriented algebra grammar ('#' starts a comment):
///
///   algebra "<name>" dim <n>
///   param <ident> = <rational>
///   e<i> * e<j> = <term> { + <term> }
///
/// where term := <coeff> e<k> and coeff := <rational> | <rational> * <ident>
/// | <ident>. Parameters substitute to their declared rational values;
/// unlisted products are zero; duplicate (i, j) lines are errors.
AlgebraPresentation parse_algebra_file(const std::string& text);

/// Renders a presentation back into the grammar (concrete rationals, with
/// `param` lines recording the instantiated values). parse(serialize(a))
/// reproduces a exactly.
std::string serialize_algebra_file(const AlgebraPresentation& a);

}  // namespace zinbiel
