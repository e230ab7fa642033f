// Independent reference computations for the tests. Each one takes a route
// that differs from the library's: exponent-vector operators and fraction-free
// elimination for dimensions, recurrences for the special functions, repeated
// differentiation for the Fischer product, the moment formula and the literal
// Laplacian series for sphere means, and real coordinates for I2.

#ifndef HK_TESTS_ORACLES_HPP
#define HK_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hk/hk.hpp"

namespace oracle {

using Q = mpq_class;
using Exps = std::vector<int>;
using ExpPoly = std::map<Exps, Q>;

inline void add_to(ExpPoly& p, const Exps& e, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = p.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

/// All exponent vectors of length n and total degree d.
inline void compositions(int n, int d, Exps& cur, std::vector<Exps>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    compositions(n, d - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Exps> compositions(int n, int d) {
  std::vector<Exps> out;
  Exps cur;
  compositions(n, d, cur, out);
  return out;
}

/// Real monomials of degree k in m variables.
inline std::vector<Exps> real_basis(int m, int k) { return compositions(m, k); }

/// Complex monomials z^a zbar^b, |a| = p, |b| = q, laid out as (a_1..a_N, b_1..b_N).
inline std::vector<Exps> complex_basis(int N, int p, int q) {
  std::vector<Exps> out;
  for (const auto& a : compositions(N, p))
    for (const auto& b : compositions(N, q)) {
      Exps e = a;
      e.insert(e.end(), b.begin(), b.end());
      out.push_back(e);
    }
  return out;
}

/// Real Laplacian of x^e.
inline ExpPoly real_laplacian(const Exps& e) {
  ExpPoly out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 2) continue;
    Exps f = e;
    f[i] -= 2;
    add_to(out, f, Q(e[i] * (e[i] - 1)));
  }
  return out;
}

/// sum_j d/dz_j d/dzbar_j of z^a zbar^b.
inline ExpPoly complex_laplacian(const Exps& e) {
  const std::size_t N = e.size() / 2;
  ExpPoly out;
  for (std::size_t j = 0; j < N; ++j) {
    if (e[j] < 1 || e[N + j] < 1) continue;
    Exps f = e;
    f[j] -= 1;
    f[N + j] -= 1;
    add_to(out, f, Q(e[j] * e[N + j]));
  }
  return out;
}

/// Adds coeff * s_mul * d/ds_der applied to the monomial e.
inline void field_term(ExpPoly& out, const Exps& e, std::size_t mul, std::size_t der, const Q& coeff) {
  if (e[der] < 1) return;
  Exps f = e;
  Q c = coeff * e[der];
  f[der] -= 1;
  f[mul] += 1;
  add_to(out, f, c);
}

/// Lowering twist: -sum_j (zbar_j d/dz_{n+j} - zbar_{n+j} d/dz_j), complex length 2n.
inline ExpPoly lowering_twist(const Exps& e) {
  const std::size_t N = e.size() / 2;
  const std::size_t n = N / 2;
  ExpPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    field_term(out, e, N + j, n + j, Q(-1));
    field_term(out, e, N + n + j, j, Q(1));
  }
  return out;
}

/// Raising twist: sum_j (z_j d/dzbar_{n+j} - z_{n+j} d/dzbar_j).
inline ExpPoly raising_twist(const Exps& e) {
  const std::size_t N = e.size() / 2;
  const std::size_t n = N / 2;
  ExpPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    field_term(out, e, j, N + n + j, Q(1));
    field_term(out, e, n + j, N + j, Q(-1));
  }
  return out;
}

/// Rank by fraction-free (Bareiss) elimination on an integer matrix.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

using ExpMap = ExpPoly (*)(const Exps&);

/// dim of the joint kernel of `maps` on span(basis), by rank-nullity.
inline std::size_t joint_nullity(const std::vector<Exps>& basis, const std::vector<ExpMap>& maps) {
  // row index: (map, output monomial); column: basis element
  std::map<std::pair<std::size_t, Exps>, std::size_t> row_of;
  std::vector<ExpPoly> images;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < maps.size(); ++k)
    for (const auto& b : basis) {
      images.push_back(maps[k](b));
      owner.push_back(k);
      for (const auto& [e, c] : images.back()) row_of.try_emplace({k, e}, row_of.size());
    }
  std::vector<std::vector<mpz_class>> m(row_of.size(), std::vector<mpz_class>(basis.size(), 0));
  for (std::size_t idx = 0; idx < images.size(); ++idx) {
    const std::size_t col = idx % basis.size();
    for (const auto& [e, c] : images[idx]) {
      if (c.get_den() != 1) throw std::logic_error("operator oracle produced a fraction");
      m[row_of.at({owner[idx], e})][col] = c.get_num();
    }
  }
  return basis.size() - bareiss_rank(std::move(m));
}

// ---------------------------------------------------------------------------
// Special functions by recurrence

using Dense = std::vector<Q>;

inline Dense dense_add(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Dense dense_scale(const Dense& a, const Q& s) {
  Dense r = a;
  for (auto& x : r) x *= s;
  return r;
}

inline Dense dense_shift(const Dense& a) {
  Dense r(a.size() + 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
  return r;
}

inline Dense trimmed(Dense a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

/// n C_n = 2 x (n + mu - 1) C_{n-1} - (n + 2 mu - 2) C_{n-2}.
inline Dense gegenbauer(unsigned k, const Q& mu) {
  std::vector<Dense> c{Dense{Q(1)}, Dense{Q(0), 2 * mu}};
  for (unsigned n = 2; n <= k; ++n) {
    Dense a = dense_scale(dense_shift(c[n - 1]), 2 * (Q(n) + mu - 1));
    Dense b = dense_scale(c[n - 2], -(Q(n) + 2 * mu - 2));
    c.push_back(dense_scale(dense_add(a, b), Q(1) / Q(n)));
  }
  return trimmed(c[k]);
}

/// Standard three-term recurrence, started from P_0 = 1 and
/// P_1 = (alpha+1) + (alpha+beta+2)(x-1)/2.
inline Dense jacobi(unsigned nu, const Q& al, const Q& be) {
  std::vector<Dense> p{Dense{Q(1)}};
  const Q s = al + be;
  p.push_back(Dense{(al + 1) - (s + 2) / 2, (s + 2) / 2});
  for (unsigned n = 2; n <= nu; ++n) {
    const Q a = 2 * Q(n) * (Q(n) + s) * (2 * Q(n) + s - 2);
    const Q b = 2 * Q(n) + s - 1;
    const Q c = (2 * Q(n) + s) * (2 * Q(n) + s - 2);
    const Q d = al * al - be * be;
    const Q e = 2 * (Q(n) + al - 1) * (Q(n) + be - 1) * (2 * Q(n) + s);
    Dense t = dense_add(dense_scale(dense_shift(p[n - 1]), b * c), dense_scale(p[n - 1], b * d));
    t = dense_add(t, dense_scale(p[n - 2], -e));
    p.push_back(dense_scale(t, Q(1) / a));
  }
  return trimmed(p[nu]);
}

inline Dense as_dense(const hk::Univariate& u) {
  Dense d;
  for (const auto& c : u.coefficients()) d.push_back(c);
  return trimmed(d);
}

inline Q pochhammer(const Q& a, int r) {
  Q out = 1;
  for (int i = 0; i < r; ++i) out *= a + i;
  return out;
}

inline Q factorial(int n) { return pochhammer(Q(1), n); }

// ---------------------------------------------------------------------------
// Means

/// Sphere mean of x^e on S^{m-1}: prod (1/2)_{e_i/2} / (m/2)_{|e|/2} when all
/// exponents are even.
inline Q real_moment(const Exps& e) {
  Q num = 1;
  int half = 0;
  for (int a : e) {
    if (a % 2) return 0;
    num *= pochhammer(Q(1, 2), a / 2);
    half += a / 2;
  }
  return num / pochhammer(Q(static_cast<long>(e.size()), 2), half);
}

/// Sphere mean of z^a zbar^b on the unit sphere of C^N: delta_ab a! / (N)_{|a|}.
inline Q complex_moment(const Exps& a, const Exps& b) {
  if (a != b) return 0;
  Q num = 1;
  int deg = 0;
  for (int x : a) {
    num *= factorial(x);
    deg += x;
  }
  return num / pochhammer(Q(static_cast<long>(a.size())), deg);
}

/// Literal series sum_j Delta^j P |_{x=0} / (4^j j! (m/2)_j), P a polynomial in
/// the real group only.
inline hk::Polynomial literal_sphere_mean(const hk::Polynomial& p, const std::string& group) {
  const int m = p.system()->group(group).length;
  hk::Polynomial out(p.system());
  hk::Polynomial cur = p;
  Q four_pow = 1;
  for (int j = 0; !cur.is_zero(); ++j) {
    const Q w = 1 / (four_pow * factorial(j) * pochhammer(Q(m, 2), j));
    out += hk::Scalar(w) * hk::restrict_zero(cur, group);
    cur = hk::laplacian(cur, group);
    four_pow *= 4;
  }
  return out;
}

/// Stiefel mean by the literal double series with repeated I1, I2 applications:
///   St1: sum 1/(4^j (m/2)_j ((m-1)/2)_l) I1^{j-2l}/(j-2l)! I2^l/l! f |_{s=t=0}
///   St2: sum 1/(4^j (N)_j (N-1)_l)       I1^{j-2l}/(j-2l)! I2^l/l! f |_{s=t=0}
inline hk::Polynomial literal_stiefel_mean(const hk::Polynomial& f, const hk::StiefelContext& ctx) {
  const bool cplx = ctx.manifold == hk::Manifold::St2;
  const Q a = cplx ? Q(ctx.dim) : Q(ctx.dim, 2);
  const Q b = cplx ? Q(ctx.dim - 1) : Q(ctx.dim - 1, 2);
  int deg = 0;
  const auto& sys = *f.system();
  for (const auto& [m, c] : f.terms()) {
    int d = 0;
    for (const char* g : {"s", "t"})
      for (auto s : sys.symbols_of(g)) d += static_cast<int>(m[s]);
    deg = std::max(deg, d);
  }
  hk::Polynomial out(f.system());
  for (int j = 0; 2 * j <= deg; ++j)
    for (int l = 0; 2 * l <= j; ++l) {
      hk::Polynomial g = hk::apply_I(f, ctx, hk::IOperator::I2, l);
      g = hk::apply_I(g, ctx, hk::IOperator::I1, j - 2 * l);
      g = hk::restrict_zero(hk::restrict_zero(g, ctx.s), ctx.t);
      Q four_pow = 1;
      for (int i = 0; i < j; ++i) four_pow *= 4;
      const Q w = 1 / (four_pow * pochhammer(a, j) * pochhammer(b, l) * factorial(j - 2 * l) * factorial(l));
      out += hk::Scalar(w) * g;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Fischer product by differentiation

/// [conj(P)(d) Q] at group = 0, differentiating Q term by term. Under the
/// conjugation each group symbol of P turns into the derivative by the symbol
/// it was before conjugating (z -> d/dz after zbar -> z), so a term c z^a zbar^b
/// of P acts as conj(c) d/dz^a d/dzbar^b; parameters of P are conjugated.
inline hk::Polynomial fischer_by_differentiation(const hk::Polynomial& p, const hk::Polynomial& q,
                                                 const std::string& group) {
  const auto& sys = *p.system();
  const int gi = sys.group_index(group);
  hk::Polynomial out(p.system());
  for (const auto& [m, c] : p.terms()) {
    hk::Polynomial d = q;
    hk::Monomial rest;
    for (int id = 0; id < sys.symbol_count(); ++id) {
      hk::Symbol s{static_cast<std::uint16_t>(id)};
      if (sys.info(s).group == gi) {
        for (unsigned e = 0; e < m[s]; ++e) d = hk::partial(d, s);
      } else if (m[s] > 0) {
        rest.set(s, m[s]);
      }
    }
    hk::Polynomial param = hk::conjugate(hk::Polynomial::monomial(p.system(), rest, c));
    out += param * hk::restrict_zero(d, group);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rotations

using Matrix = std::vector<std::vector<Q>>;

/// Rational rotation of R^3 from an integer quaternion (Euler-Rodrigues),
/// embedded in the leading block of an m x m identity.
inline Matrix quaternion_rotation(long a, long b, long c, long d, int m) {
  const Q n = a * a + b * b + c * c + d * d;
  const long r[3][3] = {{a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)},
                        {2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)},
                        {2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d}};
  Matrix out(static_cast<std::size_t>(m), std::vector<Q>(static_cast<std::size_t>(m), Q(0)));
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Q(r[i][j]) / n;
  return out;
}

// ---------------------------------------------------------------------------
// I2 on St2 in real coordinates

/// Applies Delta_w Delta_v - <grad_w, grad_v>^2 - <grad_w, J grad_v>^2 to f(s, t)
/// after writing s = w' + i w'', t = v' + i v''. `sys` must carry complex groups
/// s, t of length N and real groups w, v of length 2N. Returns the result in
/// the real coordinates together with the complex-coordinate operator result
/// mapped to real coordinates.
inline std::pair<hk::Polynomial, hk::Polynomial> i2_real_vs_complex(const hk::Polynomial& f,
                                                                    const hk::StiefelContext& ctx) {
  const auto& sys = *f.system();
  const hk::SystemRef ref = f.system();
  const int N = ctx.dim;
  const hk::Scalar i = hk::Scalar::imaginary_unit();
  std::vector<std::optional<hk::Polynomial>> images(static_cast<std::size_t>(sys.symbol_count()));
  for (auto [cg, rg] : {std::pair{"s", "w"}, std::pair{"t", "v"}}) {
    for (int j = 0; j < N; ++j) {
      hk::Polynomial re = hk::Polynomial::variable(ref, rg, j);
      hk::Polynomial im = hk::Polynomial::variable(ref, rg, N + j);
      images[sys.symbol(cg, j).id] = re + i * im;
      images[sys.symbol(cg, j, true).id] = re - i * im;
    }
  }
  auto to_real = [&](const hk::Polynomial& p) { return hk::substitute(p, images); };

  auto var = [&](const char* g, int j) { return hk::Polynomial::variable(ref, g, j); };
  hk::Polynomial lw(ref), lv(ref), dot(ref), jdot(ref);
  for (int j = 0; j < 2 * N; ++j) {
    lw += var("w", j) * var("w", j);
    lv += var("v", j) * var("v", j);
    dot += var("w", j) * var("v", j);
  }
  for (int j = 0; j < N; ++j) jdot += var("w", j) * var("v", N + j) - var("w", N + j) * var("v", j);
  hk::Polynomial sym = lw * lv - dot * dot - jdot * jdot;

  hk::Polynomial real_side = hk::apply_operator(sym, to_real(f));
  hk::Polynomial complex_side = to_real(hk::apply_I(f, ctx, hk::IOperator::I2));
  return {real_side, complex_side};
}

}  // namespace oracle

#endif  // HK_TESTS_ORACLES_HPP
