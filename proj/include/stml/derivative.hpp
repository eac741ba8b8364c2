#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stml/field.hpp"

namespace stml {

/// Per-variable derivative orders for a mixed partial. Total order is capped
/// at kMaxDerivativeOrder by the nested-jet engine.
struct MultiIndex {
  std::vector<int> orders;

  int total() const {
    int t = 0;
    for (int o : orders) t += o;
    return t;
  }
};

inline constexpr int kMaxDerivativeOrder = 4;

namespace detail {

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Core of the differentiation engine: one series level per seeded variable,
// with the level's order matching that variable's derivative order. Returns
// the raw Taylor coefficient tower; callers scale by factorials.
template <class T>
T diff_rec(const ScalarField& f, const std::vector<T>& args,
           std::span<const std::pair<int, int>> seeds) {
  if (seeds.empty()) return f(args);
  if constexpr (nesting_depth<T>::value >= kMaxNesting) {
    throw std::logic_error("diff_rec: jet nesting depth exceeded");
  } else {
    const auto [var, order] = seeds.front();
    using S = Series<T>;
    std::vector<S> sargs;
    sargs.reserve(args.size());
    for (std::size_t j = 0; j < args.size(); ++j) {
      S s(order, zero_of(args[0]));
      s[0] = args[j];
      if (static_cast<int>(j) == var) s[1] = constant_of(args[0], 1.0);
      sargs.push_back(std::move(s));
    }
    S out = diff_rec<S>(f, sargs, seeds.subspan(1));
    return out[order];
  }
}

}  // namespace detail

/// Exact mixed partial of a field over nested single-direction jets,
/// generic in the argument scalar (so derived component fields can be
/// differentiated again). `seeds` lists (variable, order) pairs for the
/// distinct differentiated variables.
template <class T>
T diff_nested(const ScalarField& f, const std::vector<T>& args,
              std::span<const std::pair<int, int>> seeds) {
  double scale = 1.0;
  for (const auto& [var, order] : seeds) {
    if (var < 0 || var >= static_cast<int>(args.size()))
      throw std::invalid_argument("diff_nested: variable index out of range");
    if (order < 1) throw std::invalid_argument("diff_nested: seed order must be >= 1");
    scale *= detail::factorial(order);
  }
  T raw = detail::diff_rec<T>(f, args, seeds);
  return raw * scale;
}

/// Exact mixed partial d^idx f at a point; total order of idx at most 4.
double derivative(const ScalarField& f, std::span<const double> point, const MultiIndex& idx);

/// Central-difference estimate of the same mixed partial. Test oracle only;
/// never used on production paths.
double fd_oracle(const ScalarField& f, std::span<const double> point, const MultiIndex& idx,
                 double h);

/// Evaluates f over order-r series arguments; coefficient lambda of the
/// result is the lambda-th Taylor coefficient of f along the encoded curve.
Series<double> jet_evaluate(const ScalarField& f, std::span<const Series<double>> args);

}  // namespace stml
