#include "stml/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "stml/errors.hpp"

namespace stml {

namespace {

// d_dir of every component of a batch at args, via one seeded evaluation.
template <class T>
std::vector<T> batch_partial(const FieldBatch& b, std::span<const T> args, int dir) {
  using S = Series<T>;
  std::vector<S> sargs;
  sargs.reserve(args.size());
  for (std::size_t j = 0; j < args.size(); ++j) {
    S s(1, zero_of(args[0]));
    s[0] = args[j];
    if (static_cast<int>(j) == dir) s[1] = constant_of(args[0], 1.0);
    sargs.push_back(std::move(s));
  }
  std::vector<S> out = b(std::span<const S>(sargs));
  std::vector<T> res;
  res.reserve(out.size());
  for (auto& o : out) res.push_back(o[1]);
  return res;
}

// [dir][component], flattened dir-major.
template <class T>
std::vector<T> batch_gradient(const FieldBatch& b, std::span<const T> args) {
  std::vector<T> all;
  all.reserve(args.size() * static_cast<std::size_t>(b.size()));
  for (int dir = 0; dir < static_cast<int>(args.size()); ++dir) {
    std::vector<T> row = batch_partial(b, args, dir);
    for (auto& v : row) all.push_back(std::move(v));
  }
  return all;
}

template <class T>
std::vector<T> inverse_metric_or_throw(const FieldBatch& gb, std::span<const T> args, int n) {
  std::vector<T> g = gb(args);
  try {
    return linalg::inverse(std::move(g), n);
  } catch (const DegeneracyError&) {
    if constexpr (std::is_same_v<T, double>) {
      throw DegeneracyError("singular metric at evaluation point",
                            std::vector<double>(args.begin(), args.end()));
    } else {
      throw;
    }
  }
}

}  // namespace

Connection levi_civita(const MetricField& g) {
  const int n = g.dim();
  const FieldBatch gb = g.components();
  auto body = [gb, n]<class T>(std::span<const T> a) {
    std::vector<T> ginv = inverse_metric_or_throw(gb, a, n);
    std::vector<T> dg = batch_gradient(gb, a);  // dg[(l*n+i)*n+j] = d_l g_ij
    auto dG = [&](int l, int i, int j) -> const T& {
      return dg[static_cast<std::size_t>((l * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          T acc = zero_of(a[0]);
          for (int l = 0; l < n; ++l)
            acc += ginv[static_cast<std::size_t>(k * n + l)] *
                   (dG(i, j, l) + dG(j, i, l) - dG(l, i, j));
          out.push_back(0.5 * acc);
        }
    return out;
  };
  return Connection(g.chart(), make_batch(n, n * n * n, std::move(body)));
}

Connection dual_connection(const MetricField& g, const Connection& nabla) {
  const int n = g.dim();
  const FieldBatch gb = g.components();
  const FieldBatch cb = nabla.components();
  auto body = [gb, cb, n]<class T>(std::span<const T> a) {
    std::vector<T> gv = gb(a);
    std::vector<T> ginv = inverse_metric_or_throw(gb, a, n);
    std::vector<T> dg = batch_gradient(gb, a);
    std::vector<T> gamma = cb(a);
    auto G = [&](int i, int j) -> const T& { return gv[static_cast<std::size_t>(i * n + j)]; };
    auto dG = [&](int l, int i, int j) -> const T& {
      return dg[static_cast<std::size_t>((l * n + i) * n + j)];
    };
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          T acc = zero_of(a[0]);
          for (int l = 0; l < n; ++l) {
            T term = dG(i, j, l);
            for (int m = 0; m < n; ++m) term -= Gam(m, i, l) * G(j, m);
            acc += term * ginv[static_cast<std::size_t>(l * n + k)];
          }
          out.push_back(acc);
        }
    return out;
  };
  return Connection(nabla.chart(), make_batch(n, n * n * n, std::move(body)));
}

FieldBatch torsion_fields(const Connection& nabla) {
  const int n = nabla.dim();
  const FieldBatch cb = nabla.components();
  return make_batch(n, n * n * n, [cb, n]<class T>(std::span<const T> a) {
    std::vector<T> gamma = cb(a);
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(gamma.size());
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(Gam(k, i, j) - Gam(k, j, i));
    return out;
  });
}

std::vector<double> torsion_at(const Connection& nabla, std::span<const double> point) {
  return torsion_fields(nabla)(point);
}

FieldBatch curvature_fields(const Connection& nabla) {
  const int n = nabla.dim();
  const FieldBatch cb = nabla.components();
  return make_batch(n, n * n * n * n, [cb, n]<class T>(std::span<const T> a) {
    std::vector<T> gamma = cb(a);
    std::vector<T> dgamma = batch_gradient(cb, a);  // [dir][(k*n+i)*n+j]
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    auto dGam = [&](int d, int k, int i, int j) -> const T& {
      return dgamma[static_cast<std::size_t>(((d * n + k) * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) * n * n * n);
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            T acc = dGam(i, l, j, k) - dGam(j, l, i, k);
            for (int m = 0; m < n; ++m)
              acc += Gam(l, i, m) * Gam(m, j, k) - Gam(l, j, m) * Gam(m, i, k);
            out.push_back(std::move(acc));
          }
    return out;
  });
}

std::vector<double> curvature_at(const Connection& nabla, std::span<const double> point) {
  return curvature_fields(nabla)(point);
}

FieldBatch nabla_g_fields(const Connection& nabla, const MetricField& g) {
  const int n = g.dim();
  const FieldBatch gb = g.components();
  const FieldBatch cb = nabla.components();
  return make_batch(n, n * n * n, [gb, cb, n]<class T>(std::span<const T> a) {
    std::vector<T> gv = gb(a);
    std::vector<T> dg = batch_gradient(gb, a);
    std::vector<T> gamma = cb(a);
    auto G = [&](int i, int j) -> const T& { return gv[static_cast<std::size_t>(i * n + j)]; };
    auto dG = [&](int l, int i, int j) -> const T& {
      return dg[static_cast<std::size_t>((l * n + i) * n + j)];
    };
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          T acc = dG(i, j, k);
          for (int m = 0; m < n; ++m) acc -= Gam(m, i, j) * G(m, k) + Gam(m, i, k) * G(j, m);
          out.push_back(std::move(acc));
        }
    return out;
  });
}

std::vector<double> nabla_g_at(const Connection& nabla, const MetricField& g,
                               std::span<const double> point) {
  return nabla_g_fields(nabla, g)(point);
}

std::pair<int, int> signature(const MetricField& g, std::span<const double> point) {
  std::vector<double> m = g.matrix(point);
  try {
    return linalg::inertia(m, g.dim());
  } catch (const DegeneracyError&) {
    throw DegeneracyError("degenerate metric in signature computation",
                          std::vector<double>(point.begin(), point.end()));
  }
}

namespace {

// Jacobian d x^i / d y^a of the inverse maps at a target point, [i][a].
template <class T>
std::vector<T> inverse_jacobian(const FieldBatch& inv, std::span<const T> y, int n) {
  std::vector<T> by_dir = batch_gradient(inv, y);  // [a][i]
  std::vector<T> jac;
  jac.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      jac.push_back(by_dir[static_cast<std::size_t>(a * n + i)]);
  return jac;
}

}  // namespace

TensorField transform_tensor(const CoordinateMap& map, const TensorField& t) {
  const int n = t.dim();
  if (map.source.dim() != n) throw std::invalid_argument("transform_tensor: dimension mismatch");
  const int p = t.valence();
  const FieldBatch comps = t.components();
  const FieldBatch inv = map.inverse;
  auto body = [comps, inv, n, p]<class T>(std::span<const T> y) {
    std::vector<T> x = inv(y);
    std::vector<T> jac = inverse_jacobian(inv, y, n);  // J[i][a] = dx^i/dy^a
    std::vector<T> base = comps(std::span<const T>(x));

    int total = 1;
    for (int q = 0; q < p; ++q) total *= n;
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> tgt(static_cast<std::size_t>(p), 0), src(static_cast<std::size_t>(p), 0);
    for (int flat = 0; flat < total; ++flat) {
      int rem = flat;
      for (int q = p - 1; q >= 0; --q) {
        tgt[static_cast<std::size_t>(q)] = rem % n;
        rem /= n;
      }
      T acc = zero_of(y[0]);
      for (int sflat = 0; sflat < total; ++sflat) {
        int srem = sflat;
        for (int q = p - 1; q >= 0; --q) {
          src[static_cast<std::size_t>(q)] = srem % n;
          srem /= n;
        }
        T term = base[static_cast<std::size_t>(sflat)];
        for (int q = 0; q < p; ++q)
          term = term * jac[static_cast<std::size_t>(src[static_cast<std::size_t>(q)] * n +
                                                     tgt[static_cast<std::size_t>(q)])];
        acc += term;
      }
      out.push_back(std::move(acc));
    }
    return out;
  };
  int total = 1;
  for (int q = 0; q < p; ++q) total *= n;
  return TensorField(map.target, p, make_batch(n, total, std::move(body)), t.declared());
}

MetricField transform_metric(const CoordinateMap& map, const MetricField& g) {
  return MetricField(transform_tensor(map, g.tensor()));
}

Connection transform_connection(const CoordinateMap& map, const Connection& nabla) {
  const int n = nabla.dim();
  if (map.source.dim() != n)
    throw std::invalid_argument("transform_connection: dimension mismatch");
  const FieldBatch cb = nabla.components();
  const FieldBatch inv = map.inverse;
  auto body = [cb, inv, n]<class T>(std::span<const T> y) {
    std::vector<T> x = inv(y);
    std::vector<T> jac = inverse_jacobian(inv, y, n);  // J[i][a]
    std::vector<T> jinv;
    try {
      jinv = linalg::inverse(jac, n);  // (J^-1)[a][i] = dy^a/dx^i
    } catch (const DegeneracyError&) {
      if constexpr (std::is_same_v<T, double>) {
        throw DegeneracyError("non-invertible Jacobian at evaluation point",
                              std::vector<double>(y.begin(), y.end()));
      } else {
        throw;
      }
    }
    std::vector<T> gamma = cb(std::span<const T>(x));
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    auto J = [&](int i, int a) -> const T& { return jac[static_cast<std::size_t>(i * n + a)]; };
    auto Jinv = [&](int a, int i) -> const T& {
      return jinv[static_cast<std::size_t>(a * n + i)];
    };

    // Hessian H^k_ab = d^2 x^k / dy^a dy^b via order-2 seeded jets.
    std::vector<T> hess(static_cast<std::size_t>(n) * n * n, zero_of(y[0]));
    auto H = [&](int k, int a, int b) -> T& {
      return hess[static_cast<std::size_t>((k * n + a) * n + b)];
    };
    using S = Series<T>;
    auto second_coeffs = [&](int a, int b) {
      // order-2 jet along e_a + e_b (just e_a when a == b)
      std::vector<S> sargs;
      sargs.reserve(y.size());
      for (std::size_t q = 0; q < y.size(); ++q) {
        S s(2, zero_of(y[0]));
        s[0] = y[q];
        if (static_cast<int>(q) == a) s[1] = constant_of(y[0], 1.0);
        if (static_cast<int>(q) == b && b != a) s[1] = s[1] + constant_of(y[0], 1.0);
        sargs.push_back(std::move(s));
      }
      return inv(std::span<const S>(sargs));
    };
    for (int a = 0; a < n; ++a) {
      std::vector<S> ser = second_coeffs(a, a);
      for (int k = 0; k < n; ++k) H(k, a, a) = 2.0 * ser[static_cast<std::size_t>(k)][2];
    }
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<S> ser = second_coeffs(a, b);
        for (int k = 0; k < n; ++k) {
          // 2 c_2 along e_a + e_b equals H_aa + 2 H_ab + H_bb
          H(k, a, b) = ser[static_cast<std::size_t>(k)][2] - 0.5 * (H(k, a, a) + H(k, b, b));
          H(k, b, a) = H(k, a, b);
        }
      }

    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int c = 0; c < n; ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          T acc = zero_of(y[0]);
          for (int k = 0; k < n; ++k) {
            T inner = H(k, a, b);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) inner += Gam(k, i, j) * J(i, a) * J(j, b);
            acc += Jinv(c, k) * inner;
          }
          out.push_back(std::move(acc));
        }
    return out;
  };
  return Connection(map.target, make_batch(n, n * n * n, std::move(body)));
}

double map_roundtrip_defect(const CoordinateMap& map,
                            std::span<const std::vector<double>> points) {
  double worst = 0.0;
  for (const auto& p : points) {
    std::vector<double> fwd = map.forward(std::span<const double>(p));
    std::vector<double> back = map.inverse(std::span<const double>(fwd));
    for (std::size_t i = 0; i < p.size(); ++i)
      worst = std::max(worst, std::abs(back[i] - p[i]));
  }
  return worst;
}

VectorField horizontal_lift(const Connection& nabla, const VectorField& x) {
  const int n = nabla.dim();
  if (x.dim() != n) throw std::invalid_argument("horizontal_lift: dimension mismatch");
  TangentChart tc = make_tangent_chart(nabla.chart(), 1);
  const FieldBatch xb = x.components();
  const FieldBatch cb = nabla.components();
  auto body = [xb, cb, n]<class T>(std::span<const T> a) {
    std::span<const T> base = a.subspan(0, static_cast<std::size_t>(n));
    std::vector<T> xv = xb(base);
    std::vector<T> gamma = cb(base);
    auto Gam = [&](int k, int i, int j) -> const T& {
      return gamma[static_cast<std::size_t>((k * n + i) * n + j)];
    };
    std::vector<T> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out.push_back(xv[static_cast<std::size_t>(k)]);
    for (int k = 0; k < n; ++k) {
      T acc = zero_of(a[0]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          acc += xv[static_cast<std::size_t>(i)] * Gam(k, i, j) * a[static_cast<std::size_t>(n + j)];
      out.push_back(-acc);
    }
    return out;
  };
  return VectorField(tc.chart, make_batch(2 * n, 2 * n, std::move(body)));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  const int n = x.dim();
  if (y.dim() != n) throw std::invalid_argument("lie_bracket: dimension mismatch");
  const FieldBatch xb = x.components();
  const FieldBatch yb = y.components();
  auto body = [xb, yb, n]<class T>(std::span<const T> a) {
    std::vector<T> xv = xb(a);
    std::vector<T> yv = yb(a);
    std::vector<T> dx = batch_gradient(xb, a);  // [dir][comp]
    std::vector<T> dy = batch_gradient(yb, a);
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      T acc = zero_of(a[0]);
      for (int j = 0; j < n; ++j)
        acc += xv[static_cast<std::size_t>(j)] * dy[static_cast<std::size_t>(j * n + k)] -
               yv[static_cast<std::size_t>(j)] * dx[static_cast<std::size_t>(j * n + k)];
      out.push_back(std::move(acc));
    }
    return out;
  };
  return VectorField(x.chart(), make_batch(n, n, std::move(body)));
}

}  // namespace stml
