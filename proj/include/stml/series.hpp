#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "stml/errors.hpp"

namespace stml {

// Scalar helpers for double, the innermost coefficient type. Declared ahead
// of the Series template so its friend operators can resolve them.
inline double zero_of(double) { return 0.0; }
inline double constant_of(double, double v) { return v; }
inline double constant_part(double x) { return x; }

// divide with an explicit zero-divisor check at the constant term; the plain
// coefficient divisions inside the recurrences go through here as well.
inline double divide(double u, double v) {
  if (v == 0.0) throw DomainError("division by zero", v);
  return u / v;
}

/// Truncated Taylor series in one formal parameter t: coefficients c_0..c_r
/// of t^0..t^r, with strict truncation at the order r. The coefficient type
/// T is either double or another Series, so nesting Series<Series<double>>
/// carries jets in several independent directions at once.
///
/// Coefficients are plain Taylor coefficients (no factorial scaling):
/// a curve x(t) = sum c_k t^k is represented by (c_0, ..., c_r).
template <class T>
class Series {
 public:
  Series(int order, const T& fill) : c_(static_cast<std::size_t>(order) + 1, fill) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

  const std::vector<T>& coeffs() const noexcept { return c_; }

  Series operator-() const {
    Series out(*this);
    for (auto& ck : out.c_) ck = -ck;
    return out;
  }

  Series& operator+=(const Series& rhs) {
    check_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
  }

  Series& operator-=(const Series& rhs) {
    check_order(rhs);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
  }

  Series& operator*=(double s) {
    for (auto& ck : c_) ck = ck * s;
    return *this;
  }

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }

  // Cauchy product, truncated at the common order. This is the Leibniz rule
  // (f g)^{(k)} = sum_j f^{(j)} g^{(k-j)} in coefficient form.
  friend Series operator*(const Series& a, const Series& b) {
    a.check_order(b);
    const int r = a.order();
    Series out(r, zero_of(a.c_[0]));
    for (int k = 0; k <= r; ++k) {
      T acc = a.c_[0] * b.c_[static_cast<std::size_t>(k)];
      for (int j = 1; j <= k; ++j)
        acc += a.c_[static_cast<std::size_t>(j)] * b.c_[static_cast<std::size_t>(k - j)];
      out.c_[static_cast<std::size_t>(k)] = acc;
    }
    return out;
  }

  // c_0 = u_0 / v_0, c_k = (u_k - sum_{j<k} c_j v_{k-j}) / v_0.
  // Requires v to have nonzero constant part; no Laurent handling.
  friend Series operator/(const Series& u, const Series& v) {
    u.check_order(v);
    const int r = u.order();
    Series out(r, zero_of(u.c_[0]));
    out.c_[0] = divide(u.c_[0], v.c_[0]);
    for (int k = 1; k <= r; ++k) {
      T acc = u.c_[static_cast<std::size_t>(k)];
      for (int j = 0; j < k; ++j)
        acc -= out.c_[static_cast<std::size_t>(j)] * v.c_[static_cast<std::size_t>(k - j)];
      out.c_[static_cast<std::size_t>(k)] = divide(acc, v.c_[0]);
    }
    return out;
  }

  friend Series operator*(Series lhs, double s) { return lhs *= s; }
  friend Series operator*(double s, Series rhs) { return rhs *= s; }

  friend std::ostream& operator<<(std::ostream& os, const Series& s) {
    os << "(";
    for (int k = 0; k <= s.order(); ++k) os << (k ? ", " : "") << s[k];
    return os << ")";
  }

 private:
  void check_order(const Series& other) const {
    if (c_.size() != other.c_.size())
      throw std::invalid_argument("Series: order mismatch in binary operation");
  }

  std::vector<T> c_;
};

// --- scalar helpers shared by double and nested Series -----------------------

template <class T>
Series<T> zero_of(const Series<T>& like) {
  return Series<T>(like.order(), zero_of(like[0]));
}

template <class T>
Series<T> constant_of(const Series<T>& like, double v) {
  Series<T> out(like.order(), zero_of(like[0]));
  out[0] = constant_of(like[0], v);
  return out;
}

template <class T>
double constant_part(const Series<T>& x) {
  return constant_part(x[0]);
}

template <class T>
struct nesting_depth {
  static constexpr int value = 0;
};
template <class T>
struct nesting_depth<Series<T>> {
  static constexpr int value = 1 + nesting_depth<T>::value;
};

template <class T>
Series<T> divide(const Series<T>& u, const Series<T>& v) {
  if (constant_part(v) == 0.0)
    throw DomainError("division by a series with zero constant term", constant_part(v));
  return u / v;
}

// --- transcendental functions -------------------------------------------------
//
// The series versions use the standard ODE recurrences and are exact for the
// truncation order. Domain conditions act on the (innermost) constant term.

inline double s_exp(double x) { return std::exp(x); }

inline double s_log(double x) {
  if (!(x > 0.0)) throw DomainError("log of non-positive value", x);
  return std::log(x);
}

inline double s_sqrt(double x) {
  if (x < 0.0) throw DomainError("sqrt of negative value", x);
  return std::sqrt(x);
}

inline double s_pow(double x, double a) {
  if (!(x > 0.0)) throw DomainError("non-integer power of non-positive base", x);
  return std::pow(x, a);
}

// exp(u): c_0 = exp(u_0), k c_k = sum_{j=1..k} j u_j c_{k-j}
template <class T>
Series<T> s_exp(const Series<T>& u) {
  const int r = u.order();
  Series<T> c(r, zero_of(u[0]));
  c[0] = s_exp(u[0]);
  for (int k = 1; k <= r; ++k) {
    T acc = static_cast<double>(k) * (u[k] * c[0]);
    for (int j = 1; j < k; ++j) acc += static_cast<double>(j) * (u[j] * c[k - j]);
    c[k] = acc * (1.0 / k);
  }
  return c;
}

// log(u): c_0 = log(u_0), c_k = (u_k - (1/k) sum_{j=1..k-1} j c_j u_{k-j}) / u_0
template <class T>
Series<T> s_log(const Series<T>& u) {
  if (!(constant_part(u) > 0.0))
    throw DomainError("log of series with non-positive constant term", constant_part(u));
  const int r = u.order();
  Series<T> c(r, zero_of(u[0]));
  c[0] = s_log(u[0]);
  for (int k = 1; k <= r; ++k) {
    T acc = u[k];
    for (int j = 1; j < k; ++j) acc -= (static_cast<double>(j) / k) * (c[j] * u[k - j]);
    c[k] = divide(acc, u[0]);
  }
  return c;
}

// sqrt(u): c_0 = sqrt(u_0), c_k = (u_k - sum_{j=1..k-1} c_j c_{k-j}) / (2 c_0)
template <class T>
Series<T> s_sqrt(const Series<T>& u) {
  if (!(constant_part(u) > 0.0))
    throw DomainError("sqrt of series with non-positive constant term", constant_part(u));
  const int r = u.order();
  Series<T> c(r, zero_of(u[0]));
  c[0] = s_sqrt(u[0]);
  for (int k = 1; k <= r; ++k) {
    T acc = u[k];
    for (int j = 1; j < k; ++j) acc -= c[j] * c[k - j];
    c[k] = divide(acc, 2.0 * c[0]);
  }
  return c;
}

// u^a for real a: c_0 = u_0^a, k u_0 c_k = sum_{j=1..k} (a j - (k - j)) u_j c_{k-j}
template <class T>
Series<T> s_pow(const Series<T>& u, double a) {
  if (!(constant_part(u) > 0.0))
    throw DomainError("non-integer power of series with non-positive constant term",
                      constant_part(u));
  const int r = u.order();
  Series<T> c(r, zero_of(u[0]));
  c[0] = s_pow(u[0], a);
  for (int k = 1; k <= r; ++k) {
    T acc = (a * k) * (u[k] * c[0]);
    for (int j = 1; j < k; ++j)
      acc += (a * j - static_cast<double>(k - j)) * (u[j] * c[k - j]);
    c[k] = divide(acc * (1.0 / k), u[0]);
  }
  return c;
}

// Integer powers work for any base (negative exponents need a nonzero
// constant term). Plain binary exponentiation over the scalar ring.
template <class T>
T s_powi(const T& x, long long n) {
  if (n < 0) {
    T inv = divide(constant_of(x, 1.0), x);
    return s_powi(inv, -n);
  }
  T acc = constant_of(x, 1.0);
  T base = x;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

inline double s_powi(double x, long long n) {
  if (n < 0) {
    if (x == 0.0) throw DomainError("negative integer power of zero", x);
    return s_powi(1.0 / x, -n);
  }
  double acc = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace stml
