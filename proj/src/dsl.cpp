#include "stml/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "stml/errors.hpp"

namespace stml {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr constant(double v) { return node({.kind = Expr::Kind::Constant, .value = v}); }

// Recursive-descent parser.
//
//   expression := term (('+'|'-') term)*
//   term       := unary (('*'|'/') unary)*
//   unary      := '-' unary | power
//   power      := atom ('^' ['-'] number)?
//   atom       := number | identifier | func '(' expression ')' | '(' expression ')'
//
// Exponents are numeric literals; chained '^' needs parentheses.
class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  ExprPtr run() {
    ExprPtr e = expression();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expression() {
    ExprPtr e = term();
    while (true) {
      if (consume('+'))
        e = node({.kind = Expr::Kind::Add, .lhs = e, .rhs = term()});
      else if (consume('-'))
        e = node({.kind = Expr::Kind::Sub, .lhs = e, .rhs = term()});
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (true) {
      if (consume('*'))
        e = node({.kind = Expr::Kind::Mul, .lhs = e, .rhs = unary()});
      else if (consume('/'))
        e = node({.kind = Expr::Kind::Div, .lhs = e, .rhs = unary()});
      else
        return e;
    }
  }

  ExprPtr unary() {
    if (consume('-')) return node({.kind = Expr::Kind::Neg, .lhs = unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!consume('^')) return base;
    bool neg = consume('-');
    double expo = number();
    if (neg) expo = -expo;
    return node({.kind = Expr::Kind::Pow, .value = expo, .lhs = base});
  }

  double number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
      ++pos_;
    // exponent suffix: 1e-3, 2.5E+7
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
      if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
        pos_ = mark;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    if (pos_ == start) fail("expected a number");
    double v = 0.0;
    auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_) fail("malformed number");
    return v;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  ExprPtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr e = expression();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = identifier();
      if (name == "exp" || name == "log" || name == "sqrt") {
        if (!consume('(')) fail("expected '(' after " + name);
        ExprPtr arg = expression();
        if (!consume(')')) fail("expected ')'");
        Expr::Kind k = name == "exp"   ? Expr::Kind::Exp
                       : name == "log" ? Expr::Kind::Log
                                       : Expr::Kind::Sqrt;
        return node({.kind = k, .lhs = arg});
      }
      if (name == "pi") return constant(std::numbers::pi);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
          return node({.kind = Expr::Kind::Variable, .var = static_cast<int>(i)});
      fail("unknown identifier '" + name + "'");
    }
    fail("expected a number, identifier or '('");
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

// Binding strength for the printer; parentheses are emitted only where the
// grammar requires them, so printed output reparses to the same tree.
int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_expr(std::ostream& os, const Expr& e, const std::vector<std::string>& vars,
                int parent_prec, bool rhs_of_same) {
  const int prec = precedence(e.kind);
  const bool need_parens = prec < parent_prec || (prec == parent_prec && rhs_of_same);
  if (need_parens) os << '(';
  switch (e.kind) {
    case Expr::Kind::Constant:
      if (e.value < 0) {
        os << '(' << format_double(e.value) << ')';
      } else {
        os << format_double(e.value);
      }
      break;
    case Expr::Kind::Variable:
      os << vars[static_cast<std::size_t>(e.var)];
      break;
    case Expr::Kind::Add:
      print_expr(os, *e.lhs, vars, 1, false);
      os << " + ";
      print_expr(os, *e.rhs, vars, 1, true);
      break;
    case Expr::Kind::Sub:
      print_expr(os, *e.lhs, vars, 1, false);
      os << " - ";
      print_expr(os, *e.rhs, vars, 1, true);
      break;
    case Expr::Kind::Mul:
      print_expr(os, *e.lhs, vars, 2, false);
      os << "*";
      print_expr(os, *e.rhs, vars, 2, true);
      break;
    case Expr::Kind::Div:
      print_expr(os, *e.lhs, vars, 2, false);
      os << "/";
      print_expr(os, *e.rhs, vars, 2, true);
      break;
    case Expr::Kind::Neg:
      os << "-";
      print_expr(os, *e.lhs, vars, 3, true);
      break;
    case Expr::Kind::Exp:
    case Expr::Kind::Log:
    case Expr::Kind::Sqrt:
      os << (e.kind == Expr::Kind::Exp ? "exp(" : e.kind == Expr::Kind::Log ? "log(" : "sqrt(");
      print_expr(os, *e.lhs, vars, 0, false);
      os << ')';
      break;
    case Expr::Kind::Pow:
      print_expr(os, *e.lhs, vars, 5, false);
      os << '^';
      if (e.value < 0) os << '-';
      os << format_double(std::abs(e.value));
      break;
  }
  if (need_parens) os << ')';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

SmoothMap::SmoothMap(std::vector<std::string> vars, ExprPtr body)
    : vars_(std::move(vars)), body_(std::move(body)) {
  if (vars_.empty()) throw std::invalid_argument("SmoothMap: needs at least one variable");
  ExprPtr b = body_;
  field_ = make_field(static_cast<int>(vars_.size()),
                      [b]<class T>(std::span<const T> args) -> T {
                        return detail::eval_expr<T>(*b, args);
                      });
}

SmoothMap SmoothMap::parse(std::string_view src, std::vector<std::string> vars) {
  Parser p(src, vars);
  ExprPtr body = p.run();
  return SmoothMap(std::move(vars), std::move(body));
}

std::string SmoothMap::print() const {
  std::ostringstream os;
  print_expr(os, *body_, vars_, 0, false);
  return os.str();
}

}  // namespace stml
