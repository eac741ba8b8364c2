#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stml/field.hpp"

namespace stml {

/// Expression tree for the textual DSL. Bodies are closed under
/// +, -, *, /, unary minus, exp, log, sqrt and `^` with a literal exponent;
/// variables are named identifiers, `pi` is a built-in constant.
struct Expr {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Exp, Log, Sqrt, Pow };

  Kind kind;
  double value = 0.0;  // Constant; Pow exponent
  int var = -1;        // Variable index
  std::shared_ptr<const Expr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

namespace detail {

template <class T>
T eval_expr(const Expr& e, std::span<const T> args) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return constant_of(args[0], e.value);
    case Expr::Kind::Variable:
      return args[static_cast<std::size_t>(e.var)];
    case Expr::Kind::Add:
      return eval_expr(*e.lhs, args) + eval_expr(*e.rhs, args);
    case Expr::Kind::Sub:
      return eval_expr(*e.lhs, args) - eval_expr(*e.rhs, args);
    case Expr::Kind::Mul:
      return eval_expr(*e.lhs, args) * eval_expr(*e.rhs, args);
    case Expr::Kind::Div:
      return divide(eval_expr(*e.lhs, args), eval_expr(*e.rhs, args));
    case Expr::Kind::Neg:
      return -eval_expr(*e.lhs, args);
    case Expr::Kind::Exp:
      return s_exp(eval_expr(*e.lhs, args));
    case Expr::Kind::Log:
      return s_log(eval_expr(*e.lhs, args));
    case Expr::Kind::Sqrt:
      return s_sqrt(eval_expr(*e.lhs, args));
    case Expr::Kind::Pow: {
      T base = eval_expr(*e.lhs, args);
      double a = e.value;
      long long n = static_cast<long long>(a);
      if (static_cast<double>(n) == a) return s_powi(base, n);
      return s_pow(base, a);
    }
  }
  throw std::logic_error("eval_expr: bad expression node");
}

}  // namespace detail

/// A smooth function of named real arguments, defined by a DSL expression
/// and evaluable over reals and over truncated series (exact jet arithmetic).
class SmoothMap {
 public:
  SmoothMap() = default;
  SmoothMap(std::vector<std::string> vars, ExprPtr body);

  /// Parses `src` against the given variable names. Throws ParseError with
  /// line/column on malformed input or unknown identifiers.
  static SmoothMap parse(std::string_view src, std::vector<std::string> vars);

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const ExprPtr& body() const { return body_; }
  const ScalarField& field() const { return field_; }
  operator ScalarField() const { return field_; }

  template <class T>
  T operator()(std::span<const T> args) const {
    return field_(args);
  }
  template <class T>
  T operator()(const std::vector<T>& args) const {
    return field_(args);
  }
  double operator()(std::initializer_list<double> args) const { return field_(args); }

  /// Canonical printer; parse(print()) reproduces the same tree.
  std::string print() const;

 private:
  std::vector<std::string> vars_;
  ExprPtr body_;
  ScalarField field_;
};

/// Shortest round-trip decimal formatting for doubles (used by the canonical
/// printer and the CSV/JSON writers).
std::string format_double(double v);

}  // namespace stml
