#ifndef HK_HARMONICS_HPP
#define HK_HARMONICS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hk/forms.hpp"
#include "hk/operators.hpp"
#include "hk/params.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace detail {

inline DegreeProfile require_homogeneous(const Polynomial& p, std::string_view group, const char* what) {
  DegreeProfile d = degree_profile(p, group);
  if (d.is_inhomogeneous()) throw Inhomogeneous(std::string(what) + ": input is not homogeneous in group " + std::string(group));
  return d;
}

inline Rational half(long v) { return rational(v, 2); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Harmonic projectors

/// Coefficient alpha_j of the real projector Proj^k_ell on R^m.
inline Rational harmonic_coeff_real(int m, int k, int ell, int j) {
  const Rational a = detail::half(m) + (k - 2 * ell - j - 1);  // Gamma ratio base
  Rational v = (detail::half(m) + (k - 2 * ell - 1));
  mpz_class four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(j + ell));
  v /= Rational(four) * factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(ell));
  v /= pochhammer(a, static_cast<unsigned>(ell + j + 1));
  return (j % 2 == 0) ? v : Rational(-v);
}

/// Proj^k_ell: the harmonic H_{k-2 ell} in the decomposition sum |x|^{2j} H_{k-2j}.
/// `group` must be real; other groups are parameters.
inline Polynomial proj_harmonic_real(const Polynomial& p, std::string_view group, int ell = 0) {
  const Group& g = p.system()->group(group);
  if (g.is_complex()) throw KindMismatch("real harmonic projection on complex group " + g.name);
  DegreeProfile d = detail::require_homogeneous(p, group, "proj_harmonic_real");
  if (d.is_zero()) return p;
  const int k = d.degree;
  if (ell < 0 || 2 * ell > k) throw InvalidParams("projection offset out of range");
  const Polynomial r2 = norm_sq(p.system(), group);
  Polynomial lap = laplacian_power(p, group, ell);
  Polynomial radial = Polynomial::constant(p.system(), Scalar(1));
  Polynomial out(p.system());
  for (int j = 0; j <= k / 2 - ell; ++j) {
    if (j > 0) {
      lap = laplacian(lap, group);
      radial = radial * r2;
    }
    if (lap.is_zero()) break;
    out += Scalar(harmonic_coeff_real(g.length, k, ell, j)) * (radial * lap);
  }
  return out;
}

/// Coefficient beta_j of the complex projector Proj^{p,q}_ell on C^N.
inline Rational harmonic_coeff_complex(int n, int p, int q, int ell, int j) {
  Rational v = n - 1 + p + q - 2 * ell;
  v /= factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(ell));
  // (n-2+p+q-j-2l)! / (n-1+p+q-l)! = 1 / (n-1+p+q-j-2l)_{l+j+1}
  v /= pochhammer(Rational(n - 1 + p + q - j - 2 * ell), static_cast<unsigned>(ell + j + 1));
  return (j % 2 == 0) ? v : Rational(-v);
}

/// Proj^{p,q}_ell on a complex group: the harmonic H_{p-ell,q-ell} part.
inline Polynomial proj_harmonic_complex(const Polynomial& p, std::string_view group, int ell = 0) {
  const Group& g = p.system()->group(group);
  detail::require_complex(g, "complex harmonic projection");
  DegreeProfile d = detail::require_homogeneous(p, group, "proj_harmonic_complex");
  if (d.is_zero()) return p;
  const int dp = d.degree;
  const int dq = d.codegree;
  const int nu = std::min(dp, dq);
  if (ell < 0 || ell > nu) throw InvalidParams("projection offset out of range");
  const Polynomial r2 = norm_sq(p.system(), group);
  Polynomial lap = laplacian_power(p, group, ell);
  Polynomial radial = Polynomial::constant(p.system(), Scalar(1));
  Polynomial out(p.system());
  for (int j = 0; j <= nu - ell; ++j) {
    if (j > 0) {
      lap = laplacian(lap, group);
      radial = radial * r2;
    }
    if (lap.is_zero()) break;
    out += Scalar(harmonic_coeff_complex(g.length, dp, dq, ell, j)) * (radial * lap);
  }
  return out;
}

/// Dispatches on the group kind.
inline Polynomial proj_harmonic(const Polynomial& p, std::string_view group, int ell = 0) {
  return p.system()->group(group).is_complex() ? proj_harmonic_complex(p, group, ell)
                                               : proj_harmonic_real(p, group, ell);
}

// ---------------------------------------------------------------------------
// Symplectic projector

/// gamma_j = (-1)^j / j! * (|q-p|+1)! / (|q-p|+1+j)!.
inline Rational symplectic_coeff(int p, int q, int j) {
  const int d = std::abs(q - p);
  Rational v = 1 / (factorial(static_cast<unsigned>(j)) * pochhammer(Rational(d + 2), static_cast<unsigned>(j)));
  return (j % 2 == 0) ? v : Rational(-v);
}

/// (E^dag)^a E^b R = kappa * E^{b-a} R for R in ker E^dag of bidegree (p,q).
inline Rational kappa(int p, int q, int a, int b) {
  if (a > b) return 0;
  return factorial(static_cast<unsigned>(b)) / factorial(static_cast<unsigned>(b - a)) *
         pochhammer(Rational(q - p - b + 1), static_cast<unsigned>(a));
}

enum class Orientation {
  Edag,  // projection onto ker E^dag, bidegree p <= q
  E,     // mirrored: projection onto ker E, bidegree p >= q
};

namespace detail {

inline Polynomial proj_edag(const Polynomial& p, std::string_view group, int dp, int dq) {
  Polynomial out = p;
  Polynomial lowered = p;
  for (int j = 1; j <= dp; ++j) {
    lowered = twist(lowered, group, Twist::Edag);
    if (lowered.is_zero()) break;
    out += Scalar(symplectic_coeff(dp, dq, j)) * twist_power(lowered, group, Twist::E, j);
  }
  return out;
}

}  // namespace detail

/// Proj^{p,q}_{E^dag} (orientation Edag, needs p <= q) or its mirror
/// conj o Proj o conj (orientation E, needs p >= q).
inline Polynomial proj_symplectic(const Polynomial& p, std::string_view group, Orientation orient = Orientation::Edag) {
  const Group& g = p.system()->group(group);
  detail::require_complex(g, "symplectic projection");
  if (g.length % 2 != 0) throw KindMismatch("symplectic projection needs even complex length");
  DegreeProfile d = detail::require_homogeneous(p, group, "proj_symplectic");
  if (d.is_zero()) return p;
  if (orient == Orientation::Edag) {
    if (d.degree > d.codegree) throw InvalidParams("E^dag projection needs p <= q, got " + d.to_string());
    return detail::proj_edag(p, group, d.degree, d.codegree);
  }
  if (d.degree < d.codegree) throw InvalidParams("E projection needs p >= q, got " + d.to_string());
  return conjugate(detail::proj_edag(conjugate(p), group, d.codegree, d.degree));
}

/// Orientation matching the bidegree of P.
inline Orientation natural_orientation(int p, int q) { return p <= q ? Orientation::Edag : Orientation::E; }

// ---------------------------------------------------------------------------
// Fischer decompositions

enum class Flavor { real, complex, symplectic };

/// Components of P. real/complex: entry j is |x|^{2j} H_{k-2j} (resp.
/// |z|^{2j} H_{p-j,q-j}). symplectic: entry j is E^j R_{p-j,q+j}. Components
/// sum to P.
inline std::vector<Polynomial> decompose(const Polynomial& p, std::string_view group, Flavor flavor) {
  const SystemRef& sys = p.system();
  DegreeProfile d = detail::require_homogeneous(p, group, "decompose");
  std::vector<Polynomial> out;
  if (d.is_zero()) {
    out.push_back(p);
    return out;
  }
  switch (flavor) {
    case Flavor::real:
    case Flavor::complex: {
      const Group& g = sys->group(group);
      if ((flavor == Flavor::complex) != g.is_complex()) throw KindMismatch("decomposition flavor does not match group kind");
      const int top = g.is_complex() ? std::min(d.degree, d.codegree) : d.degree / 2;
      const Polynomial r2 = norm_sq(sys, group);
      Polynomial radial = Polynomial::constant(sys, Scalar(1));
      for (int j = 0; j <= top; ++j) {
        if (j > 0) radial = radial * r2;
        out.push_back(radial * proj_harmonic(p, group, j));
      }
      return out;
    }
    case Flavor::symplectic: {
      const Group& g = sys->group(group);
      detail::require_complex(g, "symplectic decomposition");
      const int dp = d.degree;
      const int dq = d.codegree;
      Polynomial lowered = p;  // (E^dag)^j P
      for (int j = 0; j <= dp; ++j) {
        if (j > 0) lowered = twist(lowered, group, Twist::Edag);
        if (dp - j > dq + j || lowered.is_zero()) {
          out.push_back(Polynomial(sys));
          continue;
        }
        Rational norm = factorial(static_cast<unsigned>(j)) * pochhammer(Rational(dq - dp + j + 1), static_cast<unsigned>(j));
        Polynomial r = Scalar(1 / norm) * detail::proj_edag(lowered, group, dp - j, dq + j);
        out.push_back(twist_power(r, group, Twist::E, j));
      }
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bilinear building blocks for kernels on groups (z, u)

struct BilinearAtoms {
  Polynomial A;        // <z, conj u> = sum z_j ubar_j
  Polynomial Abar;     // sum zbar_j u_j
  Polynomial C;        // skew product sum z_l u_{n+l} - z_{n+l} u_l (even length only)
  Polynomial Cbar;
  Polynomial normsq_z;
  Polynomial normsq_u;
  Polynomial quat_modsq;  // A Abar + C Cbar
  bool has_skew = false;

  static BilinearAtoms make(const SystemRef& sys, std::string_view z = "z", std::string_view u = "u") {
    const Group& gz = sys->group(z);
    const Group& gu = sys->group(u);
    detail::require_complex(gz, "bilinear atoms");
    detail::require_complex(gu, "bilinear atoms");
    if (gz.length != gu.length) throw KindMismatch("bilinear atoms need groups of equal length");
    BilinearAtoms a{Polynomial(sys), Polynomial(sys), Polynomial(sys), Polynomial(sys),
                    Polynomial(sys), Polynomial(sys), Polynomial(sys)};
    a.A = dot(vec(sys, z), vec(sys, u, true));
    a.Abar = dot(vec(sys, z, true), vec(sys, u));
    a.normsq_z = norm_sq(sys, z);
    a.normsq_u = norm_sq(sys, u);
    a.quat_modsq = a.A * a.Abar;
    if (gz.length % 2 == 0) {
      a.has_skew = true;
      a.C = skew(vec(sys, z), vec(sys, u));
      a.Cbar = conjugate(a.C);
      a.quat_modsq += a.C * a.Cbar;
    }
    return a;
  }
};

// ---------------------------------------------------------------------------
// Kernels

enum class KernelKind { Z, K, ZS, KS };

inline std::string to_string(KernelKind w) {
  switch (w) {
    case KernelKind::Z: return "Z";
    case KernelKind::K: return "K";
    case KernelKind::ZS: return "ZS";
    case KernelKind::KS: return "KS";
  }
  return "Z";
}

/// Which linear factor carries the excess degree q-p in the symplectic kernels.
enum class ExcessFactor {
  zbar_u,  // <zbar, u>^{q-p}: bidegree (p,q) in z
  z_ubar,  // <z, ubar>^{q-p}: the alternative reading, bidegree (q,p) in z
};

/// Default variable system for a kernel: (x, y) real of length m, or (z, u)
/// complex of length N (2n for the symplectic case).
inline SystemRef kernel_system(const KernelParams& kp) {
  if (kp.kind == Case::real) return VariableSystem::make({{"x", kp.dim, Kind::real}, {"y", kp.dim, Kind::real}});
  return VariableSystem::make({{"z", kp.complex_dim(), Kind::complex}, {"u", kp.complex_dim(), Kind::complex}});
}

/// Eigen-constant lambda_k = (mu+1)_k / k! with mu = m/2 - 1.
inline Rational lambda_real(int m, int k) {
  return pochhammer(detail::half(m), static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(k));
}

/// lambda_{p,q} = (k+N-1)! / (2^k (N-1)! (k-nu)!) with k = p+q.
inline Rational lambda_complex(int n, int p, int q) {
  const int k = p + q;
  const int nu = std::min(p, q);
  mpz_class two;
  mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return factorial(static_cast<unsigned>(k + n - 1)) /
         (Rational(two) * factorial(static_cast<unsigned>(n - 1)) * factorial(static_cast<unsigned>(k - nu)));
}

/// a_{p,q} = (N-1+k)/(N-1) binom(k-nu+N-2, k-nu).
inline Rational kernel_const_complex(int n, int p, int q) {
  const int k = p + q;
  const int nu = std::min(p, q);
  return rational(n - 1 + k, n - 1) * binomial(static_cast<long>(k - nu + n - 2), static_cast<long>(k - nu));
}

/// b_{p,q} = (q-p+1) / (p! (q+1)!), p <= q.
inline Rational zs_const(int p, int q) {
  return Rational(q - p + 1) / (factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q + 1)));
}

/// c_{p,q} = (q-p+1)(q+2n-2)! / ((p+q+2n-2)! (q+1)!), p <= q.
inline Rational hs_proj_const(int n, int p, int q) {
  return Rational(q - p + 1) * factorial(static_cast<unsigned>(q + 2 * n - 2)) /
         (factorial(static_cast<unsigned>(p + q + 2 * n - 2)) * factorial(static_cast<unsigned>(q + 1)));
}

/// d_{p,q} = (q-p+1)(p+q+2n-1)(q+2n-2)! / ((2n-1)! (q+1)!), p <= q.
inline Rational ks_const(int n, int p, int q) {
  return Rational((q - p + 1) * (p + q + 2 * n - 1)) * factorial(static_cast<unsigned>(q + 2 * n - 2)) /
         (factorial(static_cast<unsigned>(2 * n - 1)) * factorial(static_cast<unsigned>(q + 1)));
}

namespace detail {

/// sum_i coeff_i * a^i * b^{deg-i}
inline Polynomial homogenize(const Univariate& u, const Polynomial& a, const Polynomial& b, int deg) {
  const SystemRef& sys = a.system();
  Polynomial out(sys);
  std::vector<Polynomial> apow{Polynomial::constant(sys, Scalar(1))};
  std::vector<Polynomial> bpow{Polynomial::constant(sys, Scalar(1))};
  for (int i = 1; i <= deg; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  for (int i = 0; i <= deg; ++i) {
    Rational c = u.coeff(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    out += Scalar(c) * (apow[static_cast<std::size_t>(i)] * bpow[static_cast<std::size_t>(deg - i)]);
  }
  return out;
}

inline Polynomial real_kernel(const KernelParams& kp, KernelKind which, const SystemRef& sys) {
  const int k = kp.k;
  const Polynomial xy = dot(vec(sys, "x"), vec(sys, "y"));
  if (which == KernelKind::Z) return Scalar(1 / factorial(static_cast<unsigned>(k))) * power(xy, static_cast<unsigned>(k));
  if (which != KernelKind::K) throw InvalidParams("kernel " + to_string(which) + " is not defined in the real case");
  const Rational mu = half(kp.dim) - 1;
  Univariate c = gegenbauer(static_cast<unsigned>(k), mu);
  const Polynomial rr = norm_sq(sys, "x") * norm_sq(sys, "y");
  Polynomial out(sys);
  for (int r = 0; 2 * r <= k; ++r) {
    Rational cr = c.coeff(static_cast<std::size_t>(k - 2 * r));
    if (sgn(cr) == 0) continue;
    out += Scalar(cr) * (power(xy, static_cast<unsigned>(k - 2 * r)) * power(rr, static_cast<unsigned>(r)));
  }
  return Scalar((k + mu) / mu) * out;
}

inline Polynomial complex_kernel(const KernelParams& kp, KernelKind which, const SystemRef& sys) {
  const int n = kp.complex_dim();
  const int p = kp.p;
  const int q = kp.q;
  BilinearAtoms at = BilinearAtoms::make(sys);
  if (which == KernelKind::Z)
    return Scalar(1 / (factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q)))) *
           (power(at.A, static_cast<unsigned>(p)) * power(at.Abar, static_cast<unsigned>(q)));
  if (which != KernelKind::K) throw InvalidParams("kernel " + to_string(which) + " needs the symplectic case");
  const int nu = std::min(p, q);
  // P_nu^{N-2,|p-q|}(2s-1) as a polynomial in s = A Abar / (|z|^2 |u|^2)
  Univariate jac = jacobi(static_cast<unsigned>(nu), Rational(n - 2), Rational(std::abs(p - q)))
                       .affine_compose(Rational(2), Rational(-1));
  Polynomial radial = homogenize(jac, at.A * at.Abar, at.normsq_z * at.normsq_u, nu);
  return Scalar(kernel_const_complex(n, p, q)) *
         (power(at.A, static_cast<unsigned>(p - nu)) * power(at.Abar, static_cast<unsigned>(q - nu)) * radial);
}

/// Z^S or K^S for p <= q.
inline Polynomial symplectic_kernel_low(int n, int p, int q, KernelKind which, const SystemRef& sys, ExcessFactor excess) {
  BilinearAtoms at = BilinearAtoms::make(sys);
  const Polynomial& lin = excess == ExcessFactor::zbar_u ? at.Abar : at.A;
  Polynomial head = power(lin, static_cast<unsigned>(q - p));
  if (which == KernelKind::ZS) return Scalar(zs_const(p, q)) * (head * power(at.quat_modsq, static_cast<unsigned>(p)));
  // P_p^{2n-3, q-p+1}(2t-1); alpha = -1 when n = 1, hence the extended domain.
  Univariate jac = jacobi(static_cast<unsigned>(p), Rational(2 * n - 3), Rational(q - p + 1), JacobiDomain::extended)
                       .affine_compose(Rational(2), Rational(-1));
  Polynomial radial = homogenize(jac, at.quat_modsq, at.normsq_z * at.normsq_u, p);
  return Scalar(ks_const(n, p, q)) * (head * radial);
}

}  // namespace detail

/// Kernel polynomial in groups (x, y) or (z, u) of `sys`.
///   Z:  <x,y>^k / k!  or  A^p Abar^q / (p! q!)
///   K:  reproducing kernel of H_k or H_{p,q}
///   ZS: symplectic Fischer kernel b_{p,q} Abar^{q-p} (A Abar + C Cbar)^p
///   KS: reproducing kernel of the symplectic harmonics
/// For the symplectic case with p > q, ZS/KS are conj of the (q,p) kernel.
inline Polynomial kernel(const KernelParams& kp, KernelKind which, const SystemRef& sys,
                         ExcessFactor excess = ExcessFactor::zbar_u) {
  kp.validate();
  switch (kp.kind) {
    case Case::real: return detail::real_kernel(kp, which, sys);
    case Case::complex: return detail::complex_kernel(kp, which, sys);
    case Case::symplectic:
      if (which == KernelKind::Z || which == KernelKind::K) return detail::complex_kernel(kp, which, sys);
      if (kp.p <= kp.q) return detail::symplectic_kernel_low(kp.dim, kp.p, kp.q, which, sys, excess);
      return conjugate(detail::symplectic_kernel_low(kp.dim, kp.q, kp.p, which, sys, excess));
  }
  return Polynomial(sys);
}

inline Polynomial kernel(const KernelParams& kp, KernelKind which, ExcessFactor excess = ExcessFactor::zbar_u) {
  return kernel(kp, which, kernel_system(kp), excess);
}

/// Dimension of the space the kernel reproduces.
inline Rational kernel_space_dim(const KernelParams& kp) {
  switch (kp.kind) {
    case Case::real: return dim_spherical(kp.dim, kp.k);
    case Case::complex: return dim_complex(kp.dim, kp.p, kp.q);
    case Case::symplectic: return dim_symplectic_hs(kp.complex_dim(), kp.p, kp.q);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Random test polynomials

enum class RandomFlavor { homogeneous, harmonic, symplectic, symplectic_harmonic };

inline std::string to_string(RandomFlavor f) {
  switch (f) {
    case RandomFlavor::homogeneous: return "homogeneous";
    case RandomFlavor::harmonic: return "harmonic";
    case RandomFlavor::symplectic: return "symplectic";
    case RandomFlavor::symplectic_harmonic: return "symplectic_harmonic";
  }
  return "homogeneous";
}

/// Deterministic integer in [-9, 9].
inline long random_coeff(std::mt19937_64& rng) { return static_cast<long>(rng() % 19) - 9; }

namespace detail {

inline void monomials_of_degree(const std::vector<Symbol>& syms, std::size_t from, int degree, Monomial cur,
                                std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  if (from >= syms.size()) return;
  for (int e = degree; e >= 0; --e) {
    Monomial next = cur;
    if (e > 0) next.set(syms[from], static_cast<unsigned>(e));
    monomials_of_degree(syms, from + 1, degree - e, next, out);
  }
}

}  // namespace detail

/// All monomials of degree k in a real group, or of bidegree (p, q) in a complex one.
inline std::vector<Monomial> monomial_basis(const VariableSystem& sys, std::string_view group, int p, int q = 0) {
  const Group& g = sys.group(group);
  std::vector<Symbol> hol;
  std::vector<Symbol> anti;
  for (int j = 0; j < g.length; ++j) {
    hol.push_back(sys.symbol(group, j));
    if (g.is_complex()) anti.push_back(sys.symbol(group, j, true));
  }
  std::vector<Monomial> a;
  detail::monomials_of_degree(hol, 0, p, Monomial{}, a);
  if (!g.is_complex()) return a;
  std::vector<Monomial> b;
  detail::monomials_of_degree(anti, 0, q, Monomial{}, b);
  std::vector<Monomial> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

/// Random polynomial of the degree in `kp` on `group` of `sys` (length must
/// match kp). Gaussian-integer coefficients with parts in [-9, 9], then
/// projected according to the flavor. Throws InvalidParams when the target
/// space is zero-dimensional.
inline Polynomial random_poly(std::uint64_t seed, const KernelParams& kp, RandomFlavor flavor, const SystemRef& sys,
                              std::string_view group) {
  kp.validate();
  const Group& g = sys->group(group);
  const bool real = kp.kind == Case::real;
  if (real == g.is_complex() || g.length != kp.complex_dim())
    throw KindMismatch("random_poly: group " + g.name + " does not match " + kp.to_string());
  Rational target = 1;
  switch (flavor) {
    case RandomFlavor::homogeneous:
      target = real ? dim_homogeneous(kp.dim, kp.k) : dim_bihomogeneous(kp.complex_dim(), kp.p, kp.q);
      break;
    case RandomFlavor::harmonic:
      target = real ? dim_spherical(kp.dim, kp.k) : dim_complex(kp.complex_dim(), kp.p, kp.q);
      break;
    case RandomFlavor::symplectic:
    case RandomFlavor::symplectic_harmonic:
      if (kp.kind != Case::symplectic) throw InvalidParams("symplectic flavors need symplectic parameters");
      target = flavor == RandomFlavor::symplectic ? dim_symplectic_r(kp.complex_dim(), kp.p, kp.q)
                                                  : dim_symplectic_hs(kp.complex_dim(), kp.p, kp.q);
      break;
  }
  if (target <= 0) throw InvalidParams("random_poly: target space is zero-dimensional for " + kp.to_string());
  std::mt19937_64 rng(seed);
  std::vector<Monomial> basis = real ? monomial_basis(*sys, group, kp.k) : monomial_basis(*sys, group, kp.p, kp.q);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PolynomialBuilder b(sys);
    for (const auto& m : basis) {
      long re = random_coeff(rng);
      long im = random_coeff(rng);
      b.add(m, Scalar(Rational(re), Rational(im)));
    }
    Polynomial p = std::move(b).build();
    switch (flavor) {
      case RandomFlavor::homogeneous: break;
      case RandomFlavor::harmonic: p = proj_harmonic(p, group); break;
      case RandomFlavor::symplectic: p = proj_symplectic(p, group, natural_orientation(kp.p, kp.q)); break;
      case RandomFlavor::symplectic_harmonic:
        p = proj_harmonic(proj_symplectic(p, group, natural_orientation(kp.p, kp.q)), group);
        break;
    }
    if (!p.is_zero()) return p;
  }
  throw InvalidParams("random_poly: could not draw a nonzero element for " + kp.to_string());
}

inline Polynomial random_poly(std::uint64_t seed, const KernelParams& kp, RandomFlavor flavor) {
  SystemRef sys = kernel_system(kp);
  return random_poly(seed, kp, flavor, sys, kp.kind == Case::real ? "x" : "z");
}

}  // namespace hk

#endif  // HK_HARMONICS_HPP
