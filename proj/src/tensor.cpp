#include "stml/tensor.hpp"

#include <stdexcept>

namespace stml {

namespace {

int pow_int(int base, int e) {
  int v = 1;
  for (int k = 0; k < e; ++k) v *= base;
  return v;
}

}  // namespace

TensorField::TensorField(ChartSpec chart, int valence, FieldBatch components, Symmetry declared)
    : chart_(std::move(chart)), valence_(valence), comps_(std::move(components)),
      declared_(declared) {
  if (valence_ < 1) throw std::invalid_argument("TensorField: valence must be >= 1");
  if (comps_.size() != pow_int(chart_.dim(), valence_))
    throw std::invalid_argument("TensorField: component count does not match n^p");
  if (comps_.arity() != chart_.dim())
    throw std::invalid_argument("TensorField: component arity does not match chart");
}

TensorField TensorField::from_fields(ChartSpec chart, int valence,
                                     std::vector<ScalarField> components, Symmetry declared) {
  const int arity = chart.dim();
  return TensorField(std::move(chart), valence, batch_from_fields(arity, std::move(components)),
                     declared);
}

int TensorField::flat_index(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != valence_)
    throw std::invalid_argument("TensorField: index rank mismatch");
  int flat = 0;
  for (int k : index) {
    if (k < 0 || k >= dim()) throw std::invalid_argument("TensorField: index out of range");
    flat = flat * dim() + k;
  }
  return flat;
}

ScalarField TensorField::component(std::span<const int> index) const {
  return comps_.component(flat_index(index));
}

MetricField::MetricField(TensorField t) : t_(std::move(t)) {
  if (t_.valence() != 2) throw std::invalid_argument("MetricField: valence must be 2");
}

VectorField::VectorField(ChartSpec chart, FieldBatch components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_.dim() || comps_.arity() != chart_.dim())
    throw std::invalid_argument("VectorField: component shape mismatch");
}

VectorField VectorField::from_fields(ChartSpec chart, std::vector<ScalarField> components) {
  const int arity = chart.dim();
  return VectorField(std::move(chart), batch_from_fields(arity, std::move(components)));
}

OneForm::OneForm(ChartSpec chart, FieldBatch components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (comps_.size() != chart_.dim() || comps_.arity() != chart_.dim())
    throw std::invalid_argument("OneForm: component shape mismatch");
}

OneForm OneForm::from_fields(ChartSpec chart, std::vector<ScalarField> components) {
  const int arity = chart.dim();
  return OneForm(std::move(chart), batch_from_fields(arity, std::move(components)));
}

Connection::Connection(ChartSpec chart, FieldBatch gamma)
    : chart_(std::move(chart)), gamma_(std::move(gamma)) {
  const int n = chart_.dim();
  if (gamma_.size() != n * n * n || gamma_.arity() != n)
    throw std::invalid_argument("Connection: Christoffel shape mismatch");
}

Connection Connection::from_fields(ChartSpec chart, std::vector<ScalarField> gamma) {
  const int arity = chart.dim();
  return Connection(std::move(chart), batch_from_fields(arity, std::move(gamma)));
}

int Connection::flat_index(int k, int i, int j) const {
  const int n = dim();
  return (k * n + i) * n + j;
}

ScalarField Connection::gamma(int k, int i, int j) const {
  return gamma_.component(flat_index(k, i, j));
}

}  // namespace stml
