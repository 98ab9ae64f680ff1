#pragma once

#include <cmath>
#include <type_traits>

// Forward-mode differentiation scalar. Dual<double> carries one directional
// derivative; nesting (Dual<Dual<double>>) yields second derivatives. All
// library code that must be differentiable is templated on the scalar type.

namespace nshift::num {

template <class T>
struct Dual {
  T v{};  // value
  T d{};  // directional derivative

  constexpr Dual() = default;
  constexpr Dual(T value, T deriv) : v(value), d(deriv) {}
  // Implicit promotion of a constant: derivative part is zero.
  constexpr Dual(double value) : v(T(value)), d(T(0.0)) {}
};

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

template <class T>
struct dual_traits;
template <>
struct dual_traits<double> {
  static double make(double c) { return c; }
};
template <class U>
struct dual_traits<Dual<U>> {
  static Dual<U> make(double c) {
    return Dual<U>(dual_traits<U>::make(c), dual_traits<U>::make(0.0));
  }
};

template <class T>
T constant(double c) {
  return dual_traits<T>::make(c);
}

// Innermost value of a (possibly nested) dual.
inline double primal(double x) { return x; }
template <class T>
double primal(const Dual<T>& x) {
  return primal(x.v);
}

inline bool primal_zero(double x) { return x == 0.0; }
template <class T>
bool primal_zero(const Dual<T>& x) {
  return primal_zero(x.v) && primal_zero(x.d);
}

// True when x carries no derivative information at any nesting level, i.e.
// it is a constant for differentiation purposes.
inline bool derivatives_all_zero(double) { return true; }
template <class T>
bool derivatives_all_zero(const Dual<T>& x) {
  return primal_zero(x.d) && derivatives_all_zero(x.v);
}

// ---- arithmetic ----

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.v + b.v, a.d + b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.v - b.v, a.d - b.d};
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}

template <class T>
Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.v + dual_traits<T>::make(b), a.d};
}
template <class T>
Dual<T> operator+(double a, const Dual<T>& b) {
  return b + a;
}
template <class T>
Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.v - dual_traits<T>::make(b), a.d};
}
template <class T>
Dual<T> operator-(double a, const Dual<T>& b) {
  return {dual_traits<T>::make(a) - b.v, -b.d};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, double b) {
  T c = dual_traits<T>::make(b);
  return {a.v * c, a.d * c};
}
template <class T>
Dual<T> operator*(double a, const Dual<T>& b) {
  return b * a;
}
template <class T>
Dual<T> operator/(const Dual<T>& a, double b) {
  T c = dual_traits<T>::make(b);
  return {a.v / c, a.d / c};
}
template <class T>
Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(dual_traits<T>::make(a), dual_traits<T>::make(0.0)) / b;
}

template <class T>
Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) {
  a = a + b;
  return a;
}
template <class T>
Dual<T>& operator-=(Dual<T>& a, const Dual<T>& b) {
  a = a - b;
  return a;
}
template <class T>
Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) {
  a = a * b;
  return a;
}

// Comparisons order by primal value (used only for branching).
template <class T>
bool operator<(const Dual<T>& a, const Dual<T>& b) {
  return primal(a) < primal(b);
}
template <class T>
bool operator>(const Dual<T>& a, const Dual<T>& b) {
  return primal(a) > primal(b);
}

// ---- elementary functions ----

using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;
using std::tanh;

template <class T>
Dual<T> sin(const Dual<T>& a) {
  return {sin(a.v), a.d * cos(a.v)};
}
template <class T>
Dual<T> cos(const Dual<T>& a) {
  return {cos(a.v), -(a.d * sin(a.v))};
}
template <class T>
Dual<T> exp(const Dual<T>& a) {
  T e = exp(a.v);
  return {e, a.d * e};
}
template <class T>
Dual<T> log(const Dual<T>& a) {
  return {log(a.v), a.d / a.v};
}
template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  T r = sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}
template <class T>
Dual<T> tanh(const Dual<T>& a) {
  T t = tanh(a.v);
  return {t, a.d * (1.0 - t * t)};
}

// a^n for constant integral n; valid for negative bases, any nesting level.
inline double pow_integral(double a, double n) { return std::pow(a, n); }
template <class T>
Dual<T> pow_integral(const Dual<T>& a, double n) {
  T pv = pow_integral(a.v, n);
  if (n == 0.0) return {pv, dual_traits<T>::make(0.0)};
  T pd = pow_integral(a.v, n - 1.0);
  return {pv, a.d * (n * pd)};
}

// General a^b via exp(b log a); requires primal(a) > 0 (checked by callers).
inline double pow_general(double a, double b) { return std::pow(a, b); }
template <class T>
Dual<T> pow_general(const Dual<T>& a, const Dual<T>& b) {
  return exp(b * log(a));
}

}  // namespace nshift::num
