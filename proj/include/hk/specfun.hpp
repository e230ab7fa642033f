#ifndef HK_SPECFUN_HPP
#define HK_SPECFUN_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hk/params.hpp"
#include "hk/scalar.hpp"

namespace hk {

/// Rising product (a)_r = a(a+1)...(a+r-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned r) {
  Rational out = 1;
  Rational f = a;
  for (unsigned i = 0; i < r; ++i) {
    out *= f;
    f += 1;
  }
  return out;
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

/// Generalized binomial top*(top-1)*...*(top-k+1)/k! for rational top.
inline Rational binomial(const Rational& top, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= (top - i);
  return out / factorial(k);
}

inline Rational binomial(long top, long k) {
  if (k < 0) return 0;
  if (top >= 0 && k > top) return 0;
  return binomial(Rational(top), static_cast<unsigned>(k));
}

/// Univariate polynomial with exact rational coefficients; coefficient i
/// multiplies x^i. Trailing zeros are trimmed.
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Rational> coeffs, std::string label = "x")
      : c_(std::move(coeffs)), label_(std::move(label)) {
    trim();
  }

  static Univariate constant(const Rational& c) { return Univariate(std::vector<Rational>{c}); }
  static Univariate monomial(unsigned i, const Rational& c = 1) {
    std::vector<Rational> v(i + 1, Rational(0));
    v[i] = c;
    return Univariate(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const std::string& label() const noexcept { return label_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Univariate operator+(const Univariate& a, const Univariate& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Univariate(std::move(r), a.label_);
  }
  friend Univariate operator-(const Univariate& a, const Univariate& b) { return a + Rational(-1) * b; }
  friend Univariate operator*(const Rational& s, const Univariate& a) {
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return Univariate(std::move(r), a.label_);
  }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.c_.empty() || b.c_.empty()) return Univariate(std::vector<Rational>{}, a.label_);
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Univariate(std::move(r), a.label_);
  }
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

  /// x -> -x.
  Univariate reflected() const {
    std::vector<Rational> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Univariate(std::move(r), label_);
  }

  /// U(a*x + b).
  Univariate affine_compose(const Rational& a, const Rational& b) const {
    Univariate lin(std::vector<Rational>{b, a}, label_);
    Univariate acc(std::vector<Rational>{}, label_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    acc.label_ = label_;
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (sgn(c_[i]) == 0) continue;
      std::string coef = c_[i].get_str();
      if (!out.empty() && coef.front() != '-') out += '+';
      out += coef;
      if (i > 0) out += "*" + label_ + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
  std::string label_ = "x";
};

/// Gegenbauer polynomial C_k^mu(t) = sum_r (-1)^r (mu)_{k-r} / (r! (k-2r)!) (2t)^{k-2r}.
/// The Gamma ratio Gamma(mu+k-r)/Gamma(mu) is taken as (mu)_{k-r}, exact for
/// half-integer mu.
inline Univariate gegenbauer(unsigned k, const Rational& mu) {
  if (sgn(mu) <= 0) throw InvalidParams("gegenbauer needs mu > 0");
  std::vector<Rational> c(k + 1, Rational(0));
  for (unsigned r = 0; 2 * r <= k; ++r) {
    unsigned e = k - 2 * r;
    Rational v = pochhammer(mu, k - r) / (factorial(r) * factorial(e));
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, e);
    v *= Rational(two_pow);
    c[e] = (r % 2 == 0) ? v : Rational(-v);
  }
  return Univariate(std::move(c), "t");
}

enum class JacobiDomain {
  classical,  // alpha, beta > -1
  extended,   // any rational parameters, via the binomial-sum definition
};

/// Jacobi polynomial P_nu^{alpha,beta}(x) =
///   sum_s binom(nu+alpha, nu-s) binom(nu+beta, s) ((x-1)/2)^s ((x+1)/2)^{nu-s}.
inline Univariate jacobi(unsigned nu, const Rational& alpha, const Rational& beta,
                         JacobiDomain domain = JacobiDomain::classical) {
  if (domain == JacobiDomain::classical && (alpha <= -1 || beta <= -1))
    throw InvalidParams("jacobi needs alpha, beta > -1");
  const Univariate xm(std::vector<Rational>{rational(-1, 2), rational(1, 2)});  // (x-1)/2
  const Univariate xp(std::vector<Rational>{rational(1, 2), rational(1, 2)});   // (x+1)/2
  std::vector<Univariate> pm{Univariate::constant(1)};
  std::vector<Univariate> pp{Univariate::constant(1)};
  for (unsigned i = 1; i <= nu; ++i) {
    pm.push_back(pm.back() * xm);
    pp.push_back(pp.back() * xp);
  }
  Univariate out;
  for (unsigned s = 0; s <= nu; ++s) {
    Rational w = binomial(Rational(alpha + nu), nu - s) * binomial(Rational(beta + nu), s);
    if (sgn(w) == 0) continue;
    out = out + w * (pm[s] * pp[nu - s]);
  }
  return Univariate(out.coefficients(), "x");
}

// ---------------------------------------------------------------------------
// Dimensions of harmonic spaces

/// dim P_k(R^m) = binom(k+m-1, m-1).
inline Rational dim_homogeneous(int m, int k) {
  if (k < 0) return 0;
  return binomial(static_cast<long>(k + m - 1), static_cast<long>(m - 1));
}

/// dim P_{p,q}(C^N).
inline Rational dim_bihomogeneous(int n, int p, int q) {
  if (p < 0 || q < 0) return 0;
  return binomial(static_cast<long>(p + n - 1), static_cast<long>(p)) *
         binomial(static_cast<long>(q + n - 1), static_cast<long>(q));
}

/// dim H_k(R^m) = (2k+m-2)/(k+m-2) binom(k+m-2, m-2).
inline Rational dim_spherical(int m, int k) {
  if (m < 2) throw InvalidParams("dim H_k needs m >= 2");
  if (k < 0) return 0;
  if (k == 0) return 1;
  return rational(2 * k + m - 2, k + m - 2) * binomial(static_cast<long>(k + m - 2), static_cast<long>(m - 2));
}

/// dim H_{p,q}(C^N) = (N+p+q-1)/(N-1) binom(q+N-2, N-2) binom(p+N-2, N-2).
inline Rational dim_complex(int n, int p, int q) {
  if (n < 2) throw InvalidParams("dim H_{p,q} needs N >= 2");
  if (p < 0 || q < 0) return 0;
  return rational(n + p + q - 1, n - 1) * binomial(static_cast<long>(q + n - 2), static_cast<long>(n - 2)) *
         binomial(static_cast<long>(p + n - 2), static_cast<long>(n - 2));
}

/// dim R_{p,q}(C^N), N even: kernel of the lowering twist on P_{p,q}.
inline Rational dim_symplectic_r(int n_complex, int p, int q) {
  if (n_complex % 2 != 0) throw InvalidParams("symplectic dimensions need even complex dimension");
  if (p < 0 || q < 0) return 0;
  if (p > q) std::swap(p, q);
  return dim_bihomogeneous(n_complex, p, q) - dim_bihomogeneous(n_complex, p - 1, q + 1);
}

/// dim H^S_{p,q}(C^N) = dim R_{p,q} - dim R_{p-1,q-1}.
inline Rational dim_symplectic_hs(int n_complex, int p, int q) {
  if (p < 0 || q < 0) return 0;
  return dim_symplectic_r(n_complex, p, q) - dim_symplectic_r(n_complex, p - 1, q - 1);
}

enum class DimKind { spherical, complex_bidegree, symplectic_r, symplectic_hs };

namespace detail {

inline Rational dim_formula_value(const KernelParams& kp, DimKind which) {
  kp.validate();
  switch (which) {
    case DimKind::spherical:
      return kp.kind == Case::real ? dim_spherical(kp.dim, kp.k) : dim_spherical(2 * kp.complex_dim(), kp.degree());
    case DimKind::complex_bidegree:
      if (kp.kind == Case::real) throw InvalidParams("bidegree dimension needs a complex case");
      return dim_complex(kp.complex_dim(), kp.p, kp.q);
    case DimKind::symplectic_r:
      if (kp.kind != Case::symplectic) throw InvalidParams("symplectic dimension needs the symplectic case");
      return dim_symplectic_r(kp.complex_dim(), kp.p, kp.q);
    case DimKind::symplectic_hs:
      if (kp.kind != Case::symplectic) throw InvalidParams("symplectic dimension needs the symplectic case");
      return dim_symplectic_hs(kp.complex_dim(), kp.p, kp.q);
  }
  return 0;
}

}  // namespace detail

/// Closed-form dimension of the requested space.
inline long dim_formulas(const KernelParams& kp, DimKind which) {
  Rational v = detail::dim_formula_value(kp, which);
  if (v.get_den() != 1 || sgn(v) < 0) throw InvalidParams("dimension formula gave a non-integer value for " + kp.to_string());
  return v.get_num().get_si();
}

}  // namespace hk

#endif  // HK_SPECFUN_HPP
