#pragma once

// Text syntax for algebra elements.
//
//   expr    := ["-"] term {("+"|"-") term}
//   term    := factor {factor | "*" factor}
//   factor  := primary {"^" int | "'"}
//   primary := rational | "q" | "i" | name | "(" expr ")"
//
// Juxtaposition and "*" both multiply, postfix ' applies the star map, and
// negative powers are allowed for monomial scalars only.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qg/rewrite.hpp"

namespace qg {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

struct ExprAST {
  enum class Kind { rational, q, imag, name, product, sum, difference, negate,
                    power, star };
  Kind kind;
  std::string text; // rational literal or generator name
  long exponent = 0;
  std::size_t pos = 0;
  std::vector<std::unique_ptr<ExprAST>> children;
};

std::unique_ptr<ExprAST> parse_ast(std::string_view text);
/// Resolves names against `pres`; the result is not normalized.
NCPolynomial evaluate(const ExprAST &ast, const Presentation &pres);
NCPolynomial parse_expr(std::string_view text, const Presentation &pres);
/// Parses an expression that must not involve generators.
LaurentScalar parse_scalar(std::string_view text);

std::string format_word(const Word &w, const Presentation &pres);
/// Deterministic rendering, ascending monomial order: "1 + q b c".
std::string format_expr(const NCPolynomial &p, const Presentation &pres);
std::string format_tensor(const TensorPoly &t, const Presentation &pres);

} // namespace qg
