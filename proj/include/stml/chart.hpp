#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stml/field.hpp"

namespace stml {

/// A coordinate chart: dimension, coordinate names, and an optional domain
/// predicate (the chart covers the open set where the predicate field is
/// strictly positive, e.g. sigma > 0).
struct ChartSpec {
  std::vector<std::string> names;
  std::optional<ScalarField> domain;

  int dim() const { return static_cast<int>(names.size()); }

  bool contains(std::span<const double> p) const {
    if (!domain) return true;
    return (*domain)(p) > 0.0;
  }
};

ChartSpec make_chart(std::vector<std::string> names);

/// A point of the r-th tangent bundle over an n-dimensional chart:
/// coordinates x^i_lambda stored lambda-major (base block first, then the
/// velocity blocks in increasing lambda).
struct JetPoint {
  int n = 0;
  int r = 0;
  std::vector<double> coords;  // size n*(r+1)

  double& at(int i, int lambda) { return coords[static_cast<std::size_t>(lambda) * n + i]; }
  double at(int i, int lambda) const { return coords[static_cast<std::size_t>(lambda) * n + i]; }

  std::span<const double> block(int lambda) const {
    return std::span<const double>(coords).subspan(static_cast<std::size_t>(lambda) * n,
                                                   static_cast<std::size_t>(n));
  }
};

/// The chart induced on T^r M by a base chart: dimension n(r+1), coordinate
/// x^i_lambda named by suffixing the base name with _lambda (base names kept
/// bare for lambda = 0). Iterating the construction lifts again.
struct TangentChart {
  ChartSpec base;
  int r = 1;
  ChartSpec chart;

  int n() const { return base.dim(); }
  int dim() const { return chart.dim(); }
  int flat(int i, int lambda) const { return lambda * base.dim() + i; }
};

TangentChart make_tangent_chart(const ChartSpec& base, int r);

/// An invertible coordinate change between two charts of equal dimension.
/// `forward` gives target coordinates of a source point, `inverse` the
/// source coordinates of a target point.
struct CoordinateMap {
  ChartSpec source;
  ChartSpec target;
  FieldBatch forward;
  FieldBatch inverse;

  CoordinateMap inverted() const { return {target, source, inverse, forward}; }
};

}  // namespace stml
