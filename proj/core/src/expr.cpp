#include "qmrc/expr.hpp"

#include "qmrc/brackets.hpp"

#include <cctype>

namespace qmrc::expr {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  std::string digits() {
    std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == begin) fail("expected digits");
    return text_.substr(begin, pos_ - begin);
  }

  unsigned uint_lit() {
    skip_ws();
    const std::string d = digits();
    unsigned long v = 0;
    try {
      v = std::stoul(d);
    } catch (const std::out_of_range&) {
      fail("integer literal out of range");
    }
    if (v > 1u << 20) fail("integer literal out of range");
    return static_cast<unsigned>(v);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = std::make_shared<Node>(Node{Bin{BinOp::Add, lhs, term()}});
      else if (accept('-'))
        lhs = std::make_shared<Node>(Node{Bin{BinOp::Sub, lhs, term()}});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (accept('*')) lhs = std::make_shared<Node>(Node{Bin{BinOp::Mul, lhs, factor()}});
    return lhs;
  }

  NodePtr factor() {
    NodePtr base = atom();
    if (accept('^')) {
      skip_ws();
      return std::make_shared<Node>(Node{Pow{base, uint_lit()}});
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')', "closing parenthesis");
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational_lit();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  NodePtr rational_lit() {
    std::string s;
    if (accept('-')) s = "-";
    s += digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      s += "/" + digits();
    }
    return std::make_shared<Node>(Node{Lit{Rational::from_string(s)}});
  }

  NodePtr identifier() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name = text_.substr(begin, pos_ - begin);
    if (name == "E2" || name == "E4" || name == "E6" || name == "Delta")
      return std::make_shared<Node>(Node{Gen{name}});
    if (name == "D") {
      expect('(', "argument of D");
      NodePtr arg = expr();
      expect(')', "closing parenthesis of D");
      return std::make_shared<Node>(Node{Der{arg}});
    }
    if (name == "RC") {
      expect('(', "arguments of RC");
      NodePtr f = expr();
      expect(',', "separator in RC");
      NodePtr g = expr();
      expect(',', "separator in RC");
      const unsigned n = uint_lit();
      expect(')', "closing parenthesis of RC");
      return std::make_shared<Node>(Node{Brk{f, g, n}});
    }
    pos_ = begin;
    fail("unknown identifier \"" + name + "\"");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

// Precedence: sums 1, products 2, powers 3, atoms 4.
int level(const Node& e) {
  if (std::holds_alternative<Bin>(e.v))
    return std::get<Bin>(e.v).op == BinOp::Mul ? 2 : 1;
  if (std::holds_alternative<Pow>(e.v)) return 3;
  if (std::holds_alternative<Lit>(e.v) && std::get<Lit>(e.v).value.sign() < 0) return 1;
  return 4;
}

void print_at(const Node& e, std::string& out);

void print_child(const NodePtr& e, int min_level, std::string& out) {
  if (level(*e) < min_level) {
    out += "(";
    print_at(*e, out);
    out += ")";
  } else {
    print_at(*e, out);
  }
}

void print_at(const Node& e, std::string& out) {
  if (const auto* g = std::get_if<Gen>(&e.v)) {
    out += g->name;
  } else if (const auto* l = std::get_if<Lit>(&e.v)) {
    out += l->value.str();
  } else if (const auto* b = std::get_if<Bin>(&e.v)) {
    switch (b->op) {
      case BinOp::Add:
        print_child(b->lhs, 1, out);
        out += " + ";
        print_child(b->rhs, 2, out);
        break;
      case BinOp::Sub:
        print_child(b->lhs, 1, out);
        out += " - ";
        print_child(b->rhs, 2, out);
        break;
      case BinOp::Mul:
        print_child(b->lhs, 2, out);
        out += "*";
        print_child(b->rhs, 3, out);
        break;
    }
  } else if (const auto* p = std::get_if<Pow>(&e.v)) {
    print_child(p->base, 4, out);
    out += "^" + std::to_string(p->exp);
  } else if (const auto* d = std::get_if<Der>(&e.v)) {
    out += "D(";
    print_at(*d->arg, out);
    out += ")";
  } else if (const auto* r = std::get_if<Brk>(&e.v)) {
    out += "RC(";
    print_at(*r->f, out);
    out += ", ";
    print_at(*r->g, out);
    out += ", " + std::to_string(r->n) + ")";
  }
}

}  // namespace

bool equal(const Node& a, const Node& b) {
  if (a.v.index() != b.v.index()) return false;
  if (const auto* g = std::get_if<Gen>(&a.v)) return g->name == std::get<Gen>(b.v).name;
  if (const auto* l = std::get_if<Lit>(&a.v)) return l->value == std::get<Lit>(b.v).value;
  if (const auto* x = std::get_if<Bin>(&a.v)) {
    const auto& y = std::get<Bin>(b.v);
    return x->op == y.op && equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
  }
  if (const auto* p = std::get_if<Pow>(&a.v)) {
    const auto& q = std::get<Pow>(b.v);
    return p->exp == q.exp && equal(*p->base, *q.base);
  }
  if (const auto* d = std::get_if<Der>(&a.v)) return equal(*d->arg, *std::get<Der>(b.v).arg);
  const auto& x = std::get<Brk>(a.v);
  const auto& y = std::get<Brk>(b.v);
  return x.n == y.n && equal(*x.f, *y.f) && equal(*x.g, *y.g);
}

NodePtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const Node& e) {
  std::string out;
  print_at(e, out);
  return out;
}

QuasiForm eval(const Node& e) {
  if (const auto* g = std::get_if<Gen>(&e.v)) {
    if (g->name == "E2") return QuasiForm::E2();
    if (g->name == "E4") return QuasiForm::E4();
    if (g->name == "E6") return QuasiForm::E6();
    return QuasiForm::Delta();
  }
  if (const auto* l = std::get_if<Lit>(&e.v)) return QuasiForm::constant(l->value);
  if (const auto* b = std::get_if<Bin>(&e.v)) {
    const QuasiForm x = eval(*b->lhs), y = eval(*b->rhs);
    if (b->op == BinOp::Mul) return mul(x, y);
    if (!x.is_zero() && !y.is_zero() && x.weight() != y.weight())
      throw EvalError("weight mismatch in sum: " + std::to_string(x.weight()) + " vs " +
                      std::to_string(y.weight()));
    return b->op == BinOp::Add ? add(x, y) : sub(x, y);
  }
  if (const auto* p = std::get_if<Pow>(&e.v)) {
    const QuasiForm base = eval(*p->base);
    QuasiForm acc = QuasiForm::constant(Rational(1));
    for (unsigned i = 0; i < p->exp; ++i) acc = mul(acc, base);
    return acc;
  }
  if (const auto* d = std::get_if<Der>(&e.v)) return derive(eval(*d->arg));
  const auto& r = std::get<Brk>(e.v);
  const QuasiForm f = eval(*r.f), g = eval(*r.g);
  if (f.weight() == 0 || g.weight() == 0)
    throw EvalError("RC requires operands of positive weight");
  return bracket(f, g, static_cast<int>(r.n));
}

}  // namespace qmrc::expr
