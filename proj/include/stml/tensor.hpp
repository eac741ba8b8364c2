#pragma once

#include <span>
#include <vector>

#include "stml/chart.hpp"
#include "stml/field.hpp"
#include "stml/linalg.hpp"

namespace stml {

enum class Symmetry { None, Symmetric, Antisymmetric };

/// Covariant tensor field of valence p on a chart: n^p component fields in
/// row-major index order (i_1 slowest). Declared symmetry is a checkable
/// property at sampled points, not a storage optimization.
class TensorField {
 public:
  TensorField() = default;
  TensorField(ChartSpec chart, int valence, FieldBatch components,
              Symmetry declared = Symmetry::None);

  static TensorField from_fields(ChartSpec chart, int valence,
                                 std::vector<ScalarField> components,
                                 Symmetry declared = Symmetry::None);

  const ChartSpec& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  int valence() const { return valence_; }
  Symmetry declared() const { return declared_; }
  const FieldBatch& components() const { return comps_; }

  template <class T>
  std::vector<T> values(std::span<const T> point) const {
    return comps_(point);
  }
  std::vector<double> values(std::span<const double> point) const { return comps_(point); }

  ScalarField component(std::span<const int> index) const;
  int flat_index(std::span<const int> index) const;

 private:
  ChartSpec chart_;
  int valence_ = 0;
  FieldBatch comps_;
  Symmetry declared_ = Symmetry::None;
};

/// Symmetric nondegenerate (0,2) tensor field; nondegeneracy is checked at
/// evaluation points, not globally.
class MetricField {
 public:
  MetricField() = default;
  explicit MetricField(TensorField t);

  const ChartSpec& chart() const { return t_.chart(); }
  int dim() const { return t_.dim(); }
  const TensorField& tensor() const { return t_; }
  const FieldBatch& components() const { return t_.components(); }

  /// Component matrix at a point, row-major.
  template <class T>
  std::vector<T> matrix(std::span<const T> point) const {
    return t_.components()(point);
  }

  /// Inverse component matrix at a point; throws DegeneracyError.
  template <class T>
  std::vector<T> inverse_matrix(std::span<const T> point) const {
    return linalg::inverse(t_.components()(point), dim());
  }

 private:
  TensorField t_;
};

class VectorField {
 public:
  VectorField() = default;
  VectorField(ChartSpec chart, FieldBatch components);
  static VectorField from_fields(ChartSpec chart, std::vector<ScalarField> components);

  const ChartSpec& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const FieldBatch& components() const { return comps_; }

  template <class T>
  std::vector<T> values(std::span<const T> point) const {
    return comps_(point);
  }

 private:
  ChartSpec chart_;
  FieldBatch comps_;
};

class OneForm {
 public:
  OneForm() = default;
  OneForm(ChartSpec chart, FieldBatch components);
  static OneForm from_fields(ChartSpec chart, std::vector<ScalarField> components);

  const ChartSpec& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const FieldBatch& components() const { return comps_; }

 private:
  ChartSpec chart_;
  FieldBatch comps_;
};

/// Affine connection given by Christoffel fields Gamma^k_ij with the
/// derivative direction first, nabla_{d_i} d_j = Gamma^k_ij d_k.
/// Storage is [k][i][j] row-major.
class Connection {
 public:
  Connection() = default;
  Connection(ChartSpec chart, FieldBatch gamma);
  static Connection from_fields(ChartSpec chart, std::vector<ScalarField> gamma);

  const ChartSpec& chart() const { return chart_; }
  int dim() const { return chart_.dim(); }
  const FieldBatch& components() const { return gamma_; }

  /// All Gamma^k_ij at a point, [k][i][j] row-major.
  template <class T>
  std::vector<T> christoffels(std::span<const T> point) const {
    return gamma_(point);
  }

  ScalarField gamma(int k, int i, int j) const;
  int flat_index(int k, int i, int j) const;

 private:
  ChartSpec chart_;
  FieldBatch gamma_;
};

}  // namespace stml
