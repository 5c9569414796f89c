#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "kcomm/linalg.hpp"
#include "kcomm/multipoly.hpp"
#include "kcomm/unipoly.hpp"

namespace kcomm {

/// 1-based position of a character in an input file.
struct SourceLocation {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, const std::string& message)
      : std::runtime_error("line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " +
                           message),
        where_(where),
        message_(message) {}

  SourceLocation where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation where_;
  std::string message_;
};

// Polynomial grammar (whitespace is insignificant):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' ['-'] integer)?
//   atom   := integer | variable | '(' expr ')'
// Variables are `t` when there is one variable, `t1`..`tn` otherwise.
// Division is only by nonzero constants, which covers `a/b` scalars.

MultiPoly parse_polynomial(std::string_view text, const Field& field, std::size_t nvars, SourceLocation at = {});
UniPoly parse_unipoly(std::string_view text, const Field& field, SourceLocation at = {});

/// The same grammar over k(t), allowing division by polynomials and
/// negative exponents; returns (numerator, denominator) unreduced.
std::pair<UniPoly, UniPoly> parse_rational_function(std::string_view text, const Field& field, SourceLocation at = {});

/// `[[a,b];[c,d]]`, with `[[]]` for the 0x0 matrix. Entries are integers or
/// `a/b` fractions; over F_p they are reduced mod p.
Matrix parse_matrix(std::string_view text, const Field& field, SourceLocation at = {});

FieldElement parse_scalar(std::string_view text, const Field& field, SourceLocation at = {});

}  // namespace kcomm
