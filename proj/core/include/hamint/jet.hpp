#pragma once

// Truncated power series in one formal variable h.
//
// A BasicJet<T> of order N holds the monomial coefficients c[0..N] of
// c[0] + c[1] h + ... + c[N] h^N. Coefficients may themselves be jets,
// which gives bivariate series: BasicJet<Jet> is a series in an outer
// variable whose coefficients are series in an inner one.

#include <array>
#include <cmath>
#include <concepts>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>

#include "hamint/errors.hpp"

namespace hamint {

/// Storage capacity of a jet. Public entry points that take a series order
/// (Taylor and delta-series) accept at most kMaxSeriesOrder; the extra room
/// is used by internal shifts and test oracles.
inline constexpr int kMaxJetOrder = 20;
inline constexpr int kMaxSeriesOrder = 16;

template <class T>
class BasicJet;

using Jet = BasicJet<double>;
using Jet2 = BasicJet<Jet>;

namespace jet_detail {

template <class T>
struct is_jet : std::false_type {};
template <class T>
struct is_jet<BasicJet<T>> : std::true_type {};

inline double zero_like(double) { return 0.0; }
template <class T>
BasicJet<T> zero_like(const BasicJet<T>& like);

inline double one_like(double) { return 1.0; }
template <class T>
BasicJet<T> one_like(const BasicJet<T>& like);

inline double leading(double v) { return v; }
template <class T>
double leading(const BasicJet<T>& j);

inline bool is_zero(double v) { return v == 0.0; }
template <class T>
bool is_zero(const BasicJet<T>& j);

}  // namespace jet_detail

/// Scalars that combine with a BasicJet<T>: plain arithmetic values (applied
/// recursively through nested coefficients) and T itself.
template <class S, class T>
concept JetScalar = std::is_arithmetic_v<S> || std::same_as<S, T>;

template <class T>
class BasicJet {
 public:
  using value_type = T;

  BasicJet() : order_(0) {}

  explicit BasicJet(int order, const T& fill = T{}) : order_(order) {
    if (order < 0 || order > kMaxJetOrder) {
      throw UsageError("jet order " + std::to_string(order) + " outside [0, " +
                       std::to_string(kMaxJetOrder) + "]");
    }
    for (int k = 0; k <= order_; ++k) c_[k] = fill;
  }

  static BasicJet constant(const T& value, int order) {
    BasicJet r(order, jet_detail::zero_like(value));
    r.c_[0] = value;
    return r;
  }

  /// value + h
  static BasicJet variable(const T& value, int order) {
    BasicJet r = constant(value, order);
    if (order >= 1) r.c_[1] = jet_detail::one_like(value);
    return r;
  }

  static BasicJet from_coeffs(std::initializer_list<T> coeffs) {
    if (coeffs.size() == 0) throw UsageError("jet needs at least one coefficient");
    BasicJet r(static_cast<int>(coeffs.size()) - 1, jet_detail::zero_like(*coeffs.begin()));
    int k = 0;
    for (const T& v : coeffs) r.c_[k++] = v;
    return r;
  }

  int order() const noexcept { return order_; }
  std::span<const T> coeffs() const noexcept { return {c_.data(), static_cast<std::size_t>(order_) + 1}; }

  T& operator[](int k) { return c_[k]; }
  const T& operator[](int k) const { return c_[k]; }

  BasicJet& operator+=(const BasicJet& b) {
    require_same_order(b);
    for (int k = 0; k <= order_; ++k) c_[k] += b.c_[k];
    return *this;
  }
  BasicJet& operator-=(const BasicJet& b) {
    require_same_order(b);
    for (int k = 0; k <= order_; ++k) c_[k] -= b.c_[k];
    return *this;
  }
  BasicJet& operator*=(const BasicJet& b) { return *this = *this * b; }
  BasicJet& operator/=(const BasicJet& b) { return *this = *this / b; }

  template <JetScalar<T> S>
  BasicJet& operator+=(const S& s) {
    c_[0] += s;
    return *this;
  }
  template <JetScalar<T> S>
  BasicJet& operator-=(const S& s) {
    c_[0] -= s;
    return *this;
  }
  template <JetScalar<T> S>
  BasicJet& operator*=(const S& s) {
    for (int k = 0; k <= order_; ++k) c_[k] *= s;
    return *this;
  }
  template <class S>
    requires std::is_arithmetic_v<S>
  BasicJet& operator/=(const S& s) {
    for (int k = 0; k <= order_; ++k) c_[k] /= s;
    return *this;
  }

  BasicJet operator-() const {
    BasicJet r = *this;
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
  }

  void require_same_order(const BasicJet& b) const {
    if (b.order_ != order_) {
      throw UsageError("jet order mismatch: " + std::to_string(order_) + " vs " +
                       std::to_string(b.order_));
    }
  }

 private:
  int order_;
  std::array<T, kMaxJetOrder + 1> c_{};
};

namespace jet_detail {

template <class T>
BasicJet<T> zero_like(const BasicJet<T>& like) {
  return BasicJet<T>(like.order(), zero_like(like[0]));
}
template <class T>
BasicJet<T> one_like(const BasicJet<T>& like) {
  return BasicJet<T>::constant(one_like(like[0]), like.order());
}
template <class T>
double leading(const BasicJet<T>& j) {
  return leading(j[0]);
}
template <class T>
bool is_zero(const BasicJet<T>& j) {
  for (int k = 0; k <= j.order(); ++k) {
    if (!is_zero(j[k])) return false;
  }
  return true;
}

}  // namespace jet_detail

template <class T>
BasicJet<T> operator+(BasicJet<T> a, const BasicJet<T>& b) {
  a += b;
  return a;
}
template <class T>
BasicJet<T> operator-(BasicJet<T> a, const BasicJet<T>& b) {
  a -= b;
  return a;
}

template <class T>
BasicJet<T> operator*(const BasicJet<T>& a, const BasicJet<T>& b) {
  a.require_same_order(b);
  BasicJet<T> r(a.order(), jet_detail::zero_like(a[0]));
  for (int k = 0; k <= a.order(); ++k) {
    T acc = a[0] * b[k];
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    r[k] = acc;
  }
  return r;
}

template <class T>
BasicJet<T> operator/(const BasicJet<T>& a, const BasicJet<T>& b) {
  a.require_same_order(b);
  if (jet_detail::leading(b[0]) == 0.0) {
    throw SingularDivisionError("jet division by a series with zero constant term");
  }
  BasicJet<T> q(a.order(), jet_detail::zero_like(a[0]));
  for (int k = 0; k <= a.order(); ++k) {
    T acc = a[k];
    for (int i = 1; i <= k; ++i) acc -= b[i] * q[k - i];
    q[k] = acc / b[0];
  }
  return q;
}

template <class T, JetScalar<T> S>
BasicJet<T> operator+(BasicJet<T> a, const S& s) {
  a += s;
  return a;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator+(const S& s, BasicJet<T> a) {
  a += s;
  return a;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator-(BasicJet<T> a, const S& s) {
  a -= s;
  return a;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator-(const S& s, const BasicJet<T>& a) {
  BasicJet<T> r = -a;
  r += s;
  return r;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator*(BasicJet<T> a, const S& s) {
  a *= s;
  return a;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator*(const S& s, BasicJet<T> a) {
  a *= s;
  return a;
}
template <class T, class S>
  requires std::is_arithmetic_v<S>
BasicJet<T> operator/(BasicJet<T> a, const S& s) {
  a /= s;
  return a;
}
template <class T, JetScalar<T> S>
BasicJet<T> operator/(const S& s, const BasicJet<T>& a) {
  return BasicJet<T>::constant(jet_detail::zero_like(a[0]) + s, a.order()) / a;
}

/// Simultaneous sin/cos recurrence: s' = c a', c' = -s a'.
template <class T>
std::pair<BasicJet<T>, BasicJet<T>> sincos(const BasicJet<T>& a) {
  using std::cos;
  using std::sin;
  const int n = a.order();
  BasicJet<T> s(n, jet_detail::zero_like(a[0]));
  BasicJet<T> c(n, jet_detail::zero_like(a[0]));
  s[0] = sin(a[0]);
  c[0] = cos(a[0]);
  for (int k = 1; k <= n; ++k) {
    T sk = jet_detail::zero_like(a[0]);
    T ck = jet_detail::zero_like(a[0]);
    for (int j = 1; j <= k; ++j) {
      T ja = a[j] * static_cast<double>(j);
      sk += ja * c[k - j];
      ck -= ja * s[k - j];
    }
    s[k] = sk * (1.0 / k);
    c[k] = ck * (1.0 / k);
  }
  return {s, c};
}

template <class T>
BasicJet<T> sin(const BasicJet<T>& a) {
  return sincos(a).first;
}
template <class T>
BasicJet<T> cos(const BasicJet<T>& a) {
  return sincos(a).second;
}

template <class T>
BasicJet<T> exp(const BasicJet<T>& a) {
  using std::exp;
  const int n = a.order();
  BasicJet<T> e(n, jet_detail::zero_like(a[0]));
  e[0] = exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    T acc = jet_detail::zero_like(a[0]);
    for (int j = 1; j <= k; ++j) acc += a[j] * e[k - j] * static_cast<double>(j);
    e[k] = acc * (1.0 / k);
  }
  return e;
}

template <class T>
BasicJet<T> sqrt(const BasicJet<T>& a) {
  using std::sqrt;
  if (!(jet_detail::leading(a[0]) > 0.0)) {
    throw DomainError("sqrt of a series with non-positive constant term");
  }
  const int n = a.order();
  BasicJet<T> y(n, jet_detail::zero_like(a[0]));
  y[0] = sqrt(a[0]);
  const T two_y0 = y[0] * 2.0;
  for (int k = 1; k <= n; ++k) {
    T acc = a[k];
    for (int j = 1; j < k; ++j) acc -= y[j] * y[k - j];
    y[k] = acc / two_y0;
  }
  return y;
}

/// a^r. Needs a nonzero constant term; a negative one only for integer r.
template <class T>
BasicJet<T> pow(const BasicJet<T>& a, double r) {
  using std::pow;
  const double lead = jet_detail::leading(a[0]);
  const bool integral = std::floor(r) == r;
  if (lead == 0.0 && integral && r >= 0.0 && r <= 64.0) {
    BasicJet<T> result = jet_detail::one_like(a);
    BasicJet<T> base = a;
    for (auto e = static_cast<unsigned>(r); e != 0; e >>= 1) {
      if (e & 1u) result = result * base;
      base = base * base;
    }
    return result;
  }
  if (lead == 0.0 || (lead < 0.0 && !integral)) {
    throw DomainError("pow of a series outside the power's domain");
  }
  const int n = a.order();
  BasicJet<T> y(n, jet_detail::zero_like(a[0]));
  y[0] = pow(a[0], r);
  for (int k = 1; k <= n; ++k) {
    T acc = jet_detail::zero_like(a[0]);
    for (int j = 1; j <= k; ++j) acc += a[j] * y[k - j] * (r * j - (k - j));
    y[k] = acc / (a[0] * static_cast<double>(k));
  }
  return y;
}

/// Antiderivative with zero constant term; the top input coefficient drops out.
template <class T>
BasicJet<T> integrate(const BasicJet<T>& a) {
  BasicJet<T> r(a.order(), jet_detail::zero_like(a[0]));
  for (int k = 0; k < a.order(); ++k) r[k + 1] = a[k] * (1.0 / (k + 1));
  return r;
}

/// d/dh, one order lower (order 0 stays order 0).
template <class T>
BasicJet<T> derivative(const BasicJet<T>& a) {
  const int n = a.order() > 0 ? a.order() - 1 : 0;
  BasicJet<T> r(n, jet_detail::zero_like(a[0]));
  for (int k = 0; k < a.order(); ++k) r[k] = a[k + 1] * static_cast<double>(k + 1);
  return r;
}

/// Multiply by h^m (m > 0, order kept) or divide by h^-m (m < 0, order drops
/// by -m). Division requires the -m lowest coefficients to be exactly zero.
template <class T>
BasicJet<T> shift(const BasicJet<T>& a, int m) {
  if (m >= 0) {
    BasicJet<T> r(a.order(), jet_detail::zero_like(a[0]));
    for (int k = m; k <= a.order(); ++k) r[k] = a[k - m];
    return r;
  }
  const int drop = -m;
  if (drop > a.order()) throw UsageError("shift drops more coefficients than the jet holds");
  for (int k = 0; k < drop; ++k) {
    if (!jet_detail::is_zero(a[k])) {
      throw UsageError("shift would discard a nonzero coefficient");
    }
  }
  BasicJet<T> r(a.order() - drop, jet_detail::zero_like(a[0]));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k + drop];
  return r;
}

/// Same series cut (or zero-extended) to the given order.
template <class T>
BasicJet<T> with_order(const BasicJet<T>& a, int order) {
  BasicJet<T> r(order, jet_detail::zero_like(a[0]));
  for (int k = 0; k <= std::min(order, a.order()); ++k) r[k] = a[k];
  return r;
}

/// Horner evaluation at h.
template <class T>
T evaluate(const BasicJet<T>& a, double h) {
  T acc = a[a.order()];
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * h + a[k];
  return acc;
}

/// Substitute a series with zero constant term: sum_k c_k u^k.
template <class T>
BasicJet<T> compose(std::span<const T> c, const BasicJet<T>& u) {
  BasicJet<T> acc = BasicJet<T>::constant(c.back(), u.order());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * u + c[k];
  return acc;
}

}  // namespace hamint
