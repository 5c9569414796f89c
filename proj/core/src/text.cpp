#include "kcomm/text.hpp"

#include <cctype>
#include <memory>

namespace kcomm {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, SourceLocation at) : text_(text), at_(at) {}

  std::size_t offset() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'" + found());
  }
  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  /// Raw text up to the next delimiter, with its starting offset
  /// (leading whitespace skipped).
  std::pair<std::size_t, std::string_view> raw_until(std::string_view delims) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && delims.find(text_[pos_]) == std::string_view::npos) ++pos_;
    return {start, text_.substr(start, pos_ - start)};
  }
  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  SourceLocation location(std::size_t offset) const {
    SourceLocation loc = at_;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    return loc;
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw ParseError(location(offset), message);
  }

  std::string found() {
    if (done()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  std::string_view text_;
  SourceLocation at_;
  std::size_t pos_ = 0;
};

struct Node {
  enum class Kind { Integer, Variable, Add, Sub, Mul, Div, Neg, Pow } kind;
  std::size_t offset = 0;
  mpz_class integer;
  std::size_t variable = 0;
  long exponent = 0;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr binary(Node::Kind kind, std::size_t offset, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->offset = offset;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class ExprParser {
 public:
  ExprParser(Cursor& cur, std::size_t nvars) : cur_(cur), nvars_(nvars) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    if (!cur_.done()) cur_.fail(cur_.offset(), "unexpected input" + cur_.found());
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      const std::size_t at = cur_.offset();
      if (cur_.accept('+')) {
        lhs = binary(Node::Kind::Add, at, std::move(lhs), term());
      } else if (cur_.accept('-')) {
        lhs = binary(Node::Kind::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      cur_.peek();
      const std::size_t at = cur_.offset();
      if (cur_.accept('*')) {
        lhs = binary(Node::Kind::Mul, at, std::move(lhs), unary());
      } else if (cur_.accept('/')) {
        lhs = binary(Node::Kind::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    cur_.peek();
    const std::size_t at = cur_.offset();
    if (cur_.accept('-')) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Neg;
      n->offset = at;
      n->lhs = unary();
      return n;
    }
    if (cur_.accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    cur_.peek();
    const std::size_t at = cur_.offset();
    if (!cur_.accept('^')) return base;
    const bool negative = cur_.accept('-');
    const std::string_view d = cur_.digits();
    if (d.empty()) cur_.fail(cur_.offset(), "expected an integer exponent" + cur_.found());
    if (d.size() > 6) cur_.fail(at, "exponent too large");
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::Pow;
    n->offset = at;
    n->exponent = std::stol(std::string(d)) * (negative ? -1 : 1);
    n->lhs = std::move(base);
    return n;
  }

  NodePtr atom() {
    const char c = cur_.peek();
    const std::size_t at = cur_.offset();
    if (cur_.accept('(')) {
      NodePtr e = expr();
      cur_.expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Integer;
      n->offset = at;
      n->integer.set_str(std::string(cur_.digits()), 10);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const std::string_view id = cur_.identifier();
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::Variable;
      n->offset = at;
      n->variable = resolve(id, at);
      return n;
    }
    cur_.fail(at, "expected a number, variable or '('" + cur_.found());
  }

  std::size_t resolve(std::string_view id, std::size_t at) const {
    if (id == "t" && nvars_ == 1) return 0;
    if (id.size() >= 2 && id[0] == 't') {
      std::size_t idx = 0;
      for (char ch : id.substr(1)) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
          idx = 0;
          break;
        }
        idx = idx * 10 + static_cast<std::size_t>(ch - '0');
        if (idx > nvars_) break;
      }
      if (idx >= 1 && idx <= nvars_) return idx - 1;
    }
    const std::string expected = nvars_ == 1 ? "t" : "t1..t" + std::to_string(nvars_);
    cur_.fail(at, "unknown variable '" + std::string(id) + "' (expected " + expected + ")");
  }

  Cursor& cur_;
  std::size_t nvars_;
};

template <class Ops>
typename Ops::Value evaluate(const Node& n, const Ops& ops) {
  switch (n.kind) {
    case Node::Kind::Integer:
      return ops.integer(n.integer);
    case Node::Kind::Variable:
      return ops.variable(n.variable);
    case Node::Kind::Add:
      return ops.add(evaluate(*n.lhs, ops), evaluate(*n.rhs, ops));
    case Node::Kind::Sub:
      return ops.sub(evaluate(*n.lhs, ops), evaluate(*n.rhs, ops));
    case Node::Kind::Mul:
      return ops.mul(evaluate(*n.lhs, ops), evaluate(*n.rhs, ops));
    case Node::Kind::Div:
      return ops.div(evaluate(*n.lhs, ops), evaluate(*n.rhs, ops), n.offset);
    case Node::Kind::Neg:
      return ops.neg(evaluate(*n.lhs, ops));
    case Node::Kind::Pow:
      return ops.pow(evaluate(*n.lhs, ops), n.exponent, n.offset);
  }
  throw std::logic_error("unreachable");
}

struct PolyOps {
  using Value = MultiPoly;
  const Field& k;
  std::size_t nvars;
  const Cursor& cur;

  Value integer(const mpz_class& v) const { return MultiPoly::constant(k, nvars, k.from_mpz(v)); }
  Value variable(std::size_t i) const { return MultiPoly::variable(k, nvars, i); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    if (b.is_zero()) cur.fail(at, "division by zero");
    if (b.total_degree() != 0) cur.fail(at, "division by a non-constant polynomial");
    return a * b.leading_coefficient().inv();
  }
  Value pow(const Value& a, long e, std::size_t at) const {
    if (e < 0) cur.fail(at, "negative exponent in a polynomial");
    return a.pow(static_cast<unsigned>(e));
  }
};

struct RationalOps {
  using Value = std::pair<UniPoly, UniPoly>;
  const Field& k;
  const Cursor& cur;

  Value one_over(UniPoly p) const { return {std::move(p), UniPoly::constant(k.one())}; }
  Value integer(const mpz_class& v) const { return one_over(UniPoly::constant(k.from_mpz(v))); }
  Value variable(std::size_t) const { return one_over(UniPoly::monomial(k.one(), 1)); }
  Value add(const Value& a, const Value& b) const {
    return {a.first * b.second + b.first * a.second, a.second * b.second};
  }
  Value sub(const Value& a, const Value& b) const {
    return {a.first * b.second - b.first * a.second, a.second * b.second};
  }
  Value mul(const Value& a, const Value& b) const { return {a.first * b.first, a.second * b.second}; }
  Value neg(const Value& a) const { return {-a.first, a.second}; }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    if (b.first.is_zero()) cur.fail(at, "division by zero");
    return {a.first * b.second, a.second * b.first};
  }
  Value pow(const Value& a, long e, std::size_t at) const {
    if (e < 0) {
      if (a.first.is_zero()) cur.fail(at, "zero raised to a negative power");
      return {a.second.pow(static_cast<unsigned>(-e)), a.first.pow(static_cast<unsigned>(-e))};
    }
    return {a.first.pow(static_cast<unsigned>(e)), a.second.pow(static_cast<unsigned>(e))};
  }
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const Field& field, std::size_t nvars, SourceLocation at) {
  if (nvars == 0) throw PolyError("polynomials need at least one variable");
  Cursor cur(text, at);
  if (cur.done()) cur.fail(0, "empty polynomial");
  const NodePtr ast = ExprParser(cur, nvars).parse_all();
  return evaluate(*ast, PolyOps{field, nvars, cur});
}

UniPoly parse_unipoly(std::string_view text, const Field& field, SourceLocation at) {
  return parse_polynomial(text, field, 1, at).to_unipoly();
}

std::pair<UniPoly, UniPoly> parse_rational_function(std::string_view text, const Field& field, SourceLocation at) {
  Cursor cur(text, at);
  if (cur.done()) cur.fail(0, "empty expression");
  const NodePtr ast = ExprParser(cur, 1).parse_all();
  auto value = evaluate(*ast, RationalOps{field, cur});
  if (value.second.is_zero()) cur.fail(0, "denominator is zero");
  return value;
}

FieldElement parse_scalar(std::string_view text, const Field& field, SourceLocation at) {
  Cursor cur(text, at);
  auto one = [&]() {
    const bool neg = cur.accept('-');
    if (!neg) cur.accept('+');
    cur.peek();
    const std::size_t start = cur.offset();
    const std::string_view d = cur.digits();
    if (d.empty()) cur.fail(start, "expected an integer" + cur.found());
    mpz_class v(std::string(d), 10);
    return neg ? mpz_class(-v) : v;
  };
  const mpz_class num = one();
  mpz_class den = 1;
  cur.peek();
  const std::size_t slash = cur.offset();
  if (cur.accept('/')) den = one();
  if (!cur.done()) cur.fail(cur.offset(), "unexpected input in scalar" + cur.found());
  if (den == 0) cur.fail(slash, "division by zero");
  try {
    return field.from_mpq(mpq_class(num, den));
  } catch (const FieldError& e) {
    cur.fail(slash, e.what());
  }
}

Matrix parse_matrix(std::string_view text, const Field& field, SourceLocation at) {
  Cursor cur(text, at);
  std::vector<std::vector<FieldElement>> rows;
  cur.expect('[');
  do {
    cur.expect('[');
    std::vector<FieldElement> row;
    if (!cur.accept(']')) {
      do {
        const auto [start, token] = cur.raw_until(",;[]");
        if (token.find_first_not_of(" \t\r\n") == std::string_view::npos) {
          cur.fail(start, "expected a matrix entry" + cur.found());
        }
        row.push_back(parse_scalar(token, field, cur.location(start)));
      } while (cur.accept(','));
      cur.expect(']');
    }
    rows.push_back(std::move(row));
  } while (cur.accept(';'));
  cur.expect(']');
  if (!cur.done()) cur.fail(cur.offset(), "unexpected input after matrix" + cur.found());

  if (rows.size() == 1 && rows.front().empty()) return Matrix(field, 0, 0);
  const std::size_t cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols || cols == 0) {
      cur.fail(0, "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace kcomm
