#ifndef HK_LINALG_HPP
#define HK_LINALG_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

/// A linear map on polynomials, used to build operator matrices.
using LinearMap = std::function<Polynomial(const Polynomial&)>;

/// Rank of the matrix whose rows are the given sparse vectors, by exact
/// Gaussian elimination.
inline std::size_t exact_rank(std::vector<std::map<std::size_t, Scalar>> rows) {
  std::size_t rank = 0;
  std::vector<bool> used(rows.size(), false);
  std::map<std::size_t, bool> seen_cols;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) seen_cols[c] = true;
  for (const auto& [col, unused] : seen_cols) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it != rows[i].end() && !it->second.is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    ++rank;
    const auto prow = rows[pivot];
    const Scalar pv = prow.at(col);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end() || it->second.is_zero()) continue;
      const Scalar factor = it->second / pv;
      for (const auto& [c, v] : prow) {
        Scalar nv = rows[i][c] - factor * v;
        if (nv.is_zero())
          rows[i].erase(c);
        else
          rows[i][c] = nv;
      }
    }
  }
  return rank;
}

/// Dimension of the joint kernel of `maps` restricted to span(basis).
inline std::size_t joint_nullity(const SystemRef& sys, const std::vector<Monomial>& basis, const std::vector<LinearMap>& maps) {
  std::size_t next = 0;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> cols(maps.size());
  std::vector<std::map<std::size_t, Scalar>> rows;
  for (const auto& b : basis) {
    Polynomial p = Polynomial::monomial(sys, b);
    std::map<std::size_t, Scalar> row;
    for (std::size_t w = 0; w < maps.size(); ++w) {
      Polynomial img = maps[w](p);
      for (const auto& [m, c] : img.terms()) {
        auto [it, fresh] = cols[w].try_emplace(m, next);
        if (fresh) ++next;
        row[it->second] = c;
      }
    }
    rows.push_back(std::move(row));
  }
  return basis.size() - exact_rank(std::move(rows));
}

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  RationalMatrix r(n, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix r(a.empty() ? 0 : a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

/// Inverse by Gauss-Jordan elimination; throws on a singular matrix.
inline RationalMatrix inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) throw Error("singular matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// Rational orthogonal matrix (I - S)^{-1} (I + S) from a skew-symmetric S.
inline RationalMatrix cayley_orthogonal(const RationalMatrix& skew) {
  const std::size_t n = skew.size();
  RationalMatrix minus = identity_matrix(n);
  RationalMatrix plus = identity_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      minus[i][j] -= skew[i][j];
      plus[i][j] += skew[i][j];
    }
  return multiply(inverse(minus), plus);
}

/// P with the real group's variables replaced by R x.
inline Polynomial transform_group(const Polynomial& p, std::string_view group, const RationalMatrix& r) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  if (g.is_complex()) throw KindMismatch("transform_group needs a real group");
  if (r.size() != static_cast<std::size_t>(g.length)) throw InvalidParams("matrix size does not match group length");
  std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(sys.symbol_count()));
  for (int i = 0; i < g.length; ++i) {
    Polynomial img(p.system());
    for (int j = 0; j < g.length; ++j)
      img += Scalar(r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
             Polynomial::monomial(p.system(), Monomial::of(sys.symbol(group, j)));
    images[sys.symbol(group, i).id] = std::move(img);
  }
  return substitute(p, images);
}

}  // namespace hk

#endif  // HK_LINALG_HPP
