#pragma once

#include <cstddef>
#include <vector>

#include "stml/parallel.hpp"

namespace stml {

/// Gauss-Legendre quadrature rule on an interval [a, b].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  static QuadratureRule gauss_legendre(int n, double a, double b);
};

/// Quadrature sum over rule nodes: terms are evaluated independently
/// (in parallel when enabled) and combined with the fixed pairwise tree,
/// so a run is reproducible to the last bit for a fixed node count.
template <class T, class Fn>
T quadrature_sum(const QuadratureRule& rule, const T& proto, Fn&& term) {
  std::vector<T> terms = parallel::map_indexed<T>(
      rule.size(), proto, [&](std::size_t q) { return term(rule.nodes[q], rule.weights[q]); });
  return pairwise_sum(terms);
}

/// Serial reference for the kernel above; same tree, same bits.
template <class T, class Fn>
T quadrature_sum_serial(const QuadratureRule& rule, const T& proto, Fn&& term) {
  std::vector<T> terms(rule.size(), proto);
  for (std::size_t q = 0; q < rule.size(); ++q)
    terms[q] = term(rule.nodes[q], rule.weights[q]);
  return pairwise_sum(terms);
}

}  // namespace stml
