#ifndef HK_FORMS_HPP
#define HK_FORMS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

/// A vector whose components are polynomials; used to write bilinear forms
/// such as <z, conj(t+s)> directly.
using PolyVector = std::vector<Polynomial>;

/// Components of a group: x[1..m], or z[1..N] / zbar[1..N] when `bar`.
inline PolyVector vec(const SystemRef& sys, std::string_view group, bool bar = false) {
  const Group& g = sys->group(group);
  PolyVector v;
  v.reserve(static_cast<std::size_t>(g.length));
  for (int j = 0; j < g.length; ++j) v.push_back(Polynomial::variable(sys, sys->symbol(group, j, bar)));
  return v;
}

inline PolyVector operator+(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw KindMismatch("vector length mismatch");
  PolyVector r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

inline PolyVector operator-(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw KindMismatch("vector length mismatch");
  PolyVector r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

inline PolyVector operator*(const Scalar& s, const PolyVector& a) {
  PolyVector r;
  for (const auto& p : a) r.push_back(s * p);
  return r;
}

/// Bilinear sum a_1 b_1 + ... + a_n b_n (no implicit conjugation).
inline Polynomial dot(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size() || a.empty()) throw KindMismatch("vector length mismatch");
  PolynomialBuilder out(a.front().system());
  for (std::size_t i = 0; i < a.size(); ++i) out.add_product(a[i], b[i]);
  return std::move(out).build();
}

/// Skew product sum_{l<=n} a_l b_{n+l} - a_{n+l} b_l for vectors of length 2n.
inline Polynomial skew(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size() || a.size() % 2 != 0 || a.empty())
    throw KindMismatch("skew product needs equal even-length vectors");
  const std::size_t n = a.size() / 2;
  PolynomialBuilder out(a.front().system());
  for (std::size_t l = 0; l < n; ++l) {
    out.add_product(a[l], b[n + l]);
    out.add_product(a[n + l], b[l], Scalar(-1));
  }
  return std::move(out).build();
}

/// |x|^2 for a real group, sum z_j zbar_j for a complex one.
inline Polynomial norm_sq(const SystemRef& sys, std::string_view group) {
  const Group& g = sys->group(group);
  return g.is_complex() ? dot(vec(sys, group), vec(sys, group, true)) : dot(vec(sys, group), vec(sys, group));
}

}  // namespace hk

#endif  // HK_FORMS_HPP
