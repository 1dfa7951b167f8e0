#pragma once

#include "qmrc/ring.hpp"

#include <memory>
#include <string>
#include <variant>

namespace qmrc::expr {

// Grammar (whitespace-insensitive):
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" uint)?
//   atom   := "E2" | "E4" | "E6" | "Delta" | rational
//           | "D" "(" expr ")" | "RC" "(" expr "," expr "," uint ")"
//           | "(" expr ")"
//   rational := "-"? digits ("/" digits)?
struct SyntaxError : std::runtime_error {
  std::size_t offset;
  SyntaxError(const std::string& what, std::size_t offset_)
      : std::runtime_error(what + " at offset " + std::to_string(offset_)), offset(offset_) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Gen {
  std::string name;  // "E2", "E4", "E6", "Delta"
};
struct Lit {
  Rational value;
};
enum class BinOp { Add, Sub, Mul };
struct Bin {
  BinOp op;
  NodePtr lhs, rhs;
};
struct Pow {
  NodePtr base;
  unsigned exp;
};
struct Der {
  NodePtr arg;
};
struct Brk {
  NodePtr f, g;
  unsigned n;
};

struct Node {
  std::variant<Gen, Lit, Bin, Pow, Der, Brk> v;
};

bool equal(const Node& a, const Node& b);

NodePtr parse(const std::string& text);

// Canonical rendering with minimal parentheses; parse(print(e)) reproduces e.
std::string print(const Node& e);

// Evaluates in the graded ring.  Sums require matching weights (the zero
// form adapts); weight violations raise EvalError with both weights named.
QuasiForm eval(const Node& e);

}  // namespace qmrc::expr
