#pragma once

#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stml/series.hpp"

namespace stml {

/// Maximum supported jet-nesting depth for field evaluation. One level is
/// consumed per differentiation direction and one per tangent lift, so this
/// bounds e.g. third derivatives of twice-lifted objects.
inline constexpr int kMaxNesting = 6;

namespace detail {
template <int D>
struct NestedT {
  using type = Series<typename NestedT<D - 1>::type>;
};
template <>
struct NestedT<0> {
  using type = double;
};
}  // namespace detail

template <int D>
using Nested = typename detail::NestedT<D>::type;

/// Evaluation interface for a smooth scalar-valued function of n real
/// arguments. Each virtual overload evaluates over one jet-nesting depth;
/// implementations forward to a single generic body.
class FieldImpl {
 public:
  virtual ~FieldImpl() = default;
  virtual int arity() const = 0;
  virtual Nested<0> eval(std::span<const Nested<0>> a) const = 0;
  virtual Nested<1> eval(std::span<const Nested<1>> a) const = 0;
  virtual Nested<2> eval(std::span<const Nested<2>> a) const = 0;
  virtual Nested<3> eval(std::span<const Nested<3>> a) const = 0;
  virtual Nested<4> eval(std::span<const Nested<4>> a) const = 0;
  virtual Nested<5> eval(std::span<const Nested<5>> a) const = 0;
  virtual Nested<6> eval(std::span<const Nested<6>> a) const = 0;
};

template <class F>
class CallableField final : public FieldImpl {
 public:
  CallableField(int arity, F f) : arity_(arity), f_(std::move(f)) {}

  int arity() const override { return arity_; }
  Nested<0> eval(std::span<const Nested<0>> a) const override { return f_(a); }
  Nested<1> eval(std::span<const Nested<1>> a) const override { return f_(a); }
  Nested<2> eval(std::span<const Nested<2>> a) const override { return f_(a); }
  Nested<3> eval(std::span<const Nested<3>> a) const override { return f_(a); }
  Nested<4> eval(std::span<const Nested<4>> a) const override { return f_(a); }
  Nested<5> eval(std::span<const Nested<5>> a) const override { return f_(a); }
  Nested<6> eval(std::span<const Nested<6>> a) const override { return f_(a); }

 private:
  int arity_;
  F f_;
};

/// Value-semantic handle to a smooth function of n real arguments, evaluable
/// over doubles and over (nested) truncated series. This is the carrier for
/// every component function in the library: expression-backed maps, derived
/// Christoffel fields, lifted components, quadrature sums.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::shared_ptr<const FieldImpl> impl) : impl_(std::move(impl)) {}

  bool valid() const noexcept { return impl_ != nullptr; }
  int arity() const { return impl_->arity(); }

  template <class T>
  T operator()(std::span<const T> args) const {
    if constexpr (nesting_depth<T>::value > kMaxNesting)
      throw std::logic_error("ScalarField: jet nesting depth exceeded");
    else
      return impl_->eval(args);
  }

  template <class T>
  T operator()(const std::vector<T>& args) const {
    return (*this)(std::span<const T>(args));
  }

  double operator()(std::initializer_list<double> args) const {
    return (*this)(std::span<const double>(args.begin(), args.size()));
  }

 private:
  std::shared_ptr<const FieldImpl> impl_;
};

/// Wraps a generic callable T(span<const T>) as a ScalarField.
template <class F>
ScalarField make_field(int arity, F f) {
  return ScalarField(std::make_shared<CallableField<F>>(arity, std::move(f)));
}

inline ScalarField constant_field(int arity, double v) {
  return make_field(arity, [v]<class T>(std::span<const T> a) -> T {
    return constant_of(a[0], v);
  });
}

inline ScalarField coordinate_field(int arity, int i) {
  return make_field(arity, [i]<class T>(std::span<const T> a) -> T { return a[i]; });
}

/// A family of smooth functions on a common chart evaluated together, so
/// derived objects (Christoffel symbols, curvature, lifts) can share the
/// expensive parts of one evaluation across all components.
class BatchImpl {
 public:
  virtual ~BatchImpl() = default;
  virtual int arity() const = 0;
  virtual int size() const = 0;
  virtual std::vector<Nested<0>> eval(std::span<const Nested<0>> a) const = 0;
  virtual std::vector<Nested<1>> eval(std::span<const Nested<1>> a) const = 0;
  virtual std::vector<Nested<2>> eval(std::span<const Nested<2>> a) const = 0;
  virtual std::vector<Nested<3>> eval(std::span<const Nested<3>> a) const = 0;
  virtual std::vector<Nested<4>> eval(std::span<const Nested<4>> a) const = 0;
  virtual std::vector<Nested<5>> eval(std::span<const Nested<5>> a) const = 0;
  virtual std::vector<Nested<6>> eval(std::span<const Nested<6>> a) const = 0;
};

template <class F>
class CallableBatch final : public BatchImpl {
 public:
  CallableBatch(int arity, int size, F f) : arity_(arity), size_(size), f_(std::move(f)) {}

  int arity() const override { return arity_; }
  int size() const override { return size_; }
  std::vector<Nested<0>> eval(std::span<const Nested<0>> a) const override { return f_(a); }
  std::vector<Nested<1>> eval(std::span<const Nested<1>> a) const override { return f_(a); }
  std::vector<Nested<2>> eval(std::span<const Nested<2>> a) const override { return f_(a); }
  std::vector<Nested<3>> eval(std::span<const Nested<3>> a) const override { return f_(a); }
  std::vector<Nested<4>> eval(std::span<const Nested<4>> a) const override { return f_(a); }
  std::vector<Nested<5>> eval(std::span<const Nested<5>> a) const override { return f_(a); }
  std::vector<Nested<6>> eval(std::span<const Nested<6>> a) const override { return f_(a); }

 private:
  int arity_;
  int size_;
  F f_;
};

class FieldBatch {
 public:
  FieldBatch() = default;
  explicit FieldBatch(std::shared_ptr<const BatchImpl> impl) : impl_(std::move(impl)) {}

  bool valid() const noexcept { return impl_ != nullptr; }
  int arity() const { return impl_->arity(); }
  int size() const { return impl_->size(); }

  template <class T>
  std::vector<T> operator()(std::span<const T> args) const {
    if constexpr (nesting_depth<T>::value > kMaxNesting)
      throw std::logic_error("FieldBatch: jet nesting depth exceeded");
    else
      return impl_->eval(args);
  }

  template <class T>
  std::vector<T> operator()(const std::vector<T>& args) const {
    return (*this)(std::span<const T>(args));
  }

  /// Single-component view. Composable but recomputes the whole batch per
  /// evaluation; batch callers should use operator() directly.
  ScalarField component(int i) const {
    FieldBatch self = *this;
    return make_field(arity(), [self, i]<class T>(std::span<const T> a) -> T {
      return self(a)[static_cast<std::size_t>(i)];
    });
  }

 private:
  std::shared_ptr<const BatchImpl> impl_;
};

template <class F>
FieldBatch make_batch(int arity, int size, F f) {
  return FieldBatch(std::make_shared<CallableBatch<F>>(arity, size, std::move(f)));
}

inline FieldBatch batch_from_fields(int arity, std::vector<ScalarField> fields) {
  const int m = static_cast<int>(fields.size());
  return make_batch(arity, m,
                    [fields = std::move(fields)]<class T>(std::span<const T> a) {
                      std::vector<T> out;
                      out.reserve(fields.size());
                      for (const auto& f : fields) out.push_back(f(a));
                      return out;
                    });
}

/// Partial derivative of f in coordinate direction `dir`, as a field.
/// Evaluation seeds one extra series level of order 1 and reads off the
/// linear coefficient; exact at every nesting depth.
inline ScalarField partial(const ScalarField& f, int dir) {
  return make_field(f.arity(), [f, dir]<class T>(std::span<const T> a) -> T {
    using S = Series<T>;
    std::vector<S> sargs;
    sargs.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      S s(1, zero_of(a[0]));
      s[0] = a[j];
      if (static_cast<int>(j) == dir) s[1] = constant_of(a[0], 1.0);
      sargs.push_back(std::move(s));
    }
    return f(std::span<const S>(sargs))[1];
  });
}

}  // namespace stml
