#include "stml/derivative.hpp"

#include <stdexcept>

namespace stml {

double derivative(const ScalarField& f, std::span<const double> point, const MultiIndex& idx) {
  if (static_cast<int>(idx.orders.size()) != f.arity() ||
      static_cast<int>(point.size()) != f.arity())
    throw std::invalid_argument("derivative: arity mismatch");
  if (idx.total() > kMaxDerivativeOrder)
    throw std::invalid_argument("derivative: total order exceeds supported depth");

  std::vector<std::pair<int, int>> seeds;
  for (std::size_t v = 0; v < idx.orders.size(); ++v)
    if (idx.orders[v] > 0) seeds.emplace_back(static_cast<int>(v), idx.orders[v]);

  std::vector<double> args(point.begin(), point.end());
  return diff_nested<double>(f, args, seeds);
}

double fd_oracle(const ScalarField& f, std::span<const double> point, const MultiIndex& idx,
                 double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_oracle: step must be positive");

  int var = -1;
  for (std::size_t v = 0; v < idx.orders.size(); ++v)
    if (idx.orders[v] > 0) {
      var = static_cast<int>(v);
      break;
    }
  if (var < 0) return f(point);

  MultiIndex rest = idx;
  rest.orders[static_cast<std::size_t>(var)] -= 1;

  std::vector<double> fwd(point.begin(), point.end());
  std::vector<double> bwd(point.begin(), point.end());
  fwd[static_cast<std::size_t>(var)] += h;
  bwd[static_cast<std::size_t>(var)] -= h;
  return (fd_oracle(f, fwd, rest, h) - fd_oracle(f, bwd, rest, h)) / (2.0 * h);
}

Series<double> jet_evaluate(const ScalarField& f, std::span<const Series<double>> args) {
  if (args.empty() || static_cast<int>(args.size()) != f.arity())
    throw std::invalid_argument("jet_evaluate: arity mismatch");
  const int r = args[0].order();
  for (const auto& a : args)
    if (a.order() != r) throw std::invalid_argument("jet_evaluate: argument order mismatch");
  return f(args);
}

}  // namespace stml
