#ifndef HK_OPERATORS_HPP
#define HK_OPERATORS_HPP

#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "hk/forms.hpp"
#include "hk/polynomial.hpp"
#include "hk/specfun.hpp"

namespace hk {

namespace detail {

inline void require_complex(const Group& g, const char* what) {
  if (!g.is_complex()) throw KindMismatch(std::string(what) + " needs a complex group, got " + g.name);
}

inline Monomial conjugate_monomial(const VariableSystem& sys, const Monomial& m) {
  Monomial r;
  for (int i = 0; i < sys.symbol_count(); ++i) {
    unsigned e = m.exponent(static_cast<std::size_t>(i));
    if (e) r.set(sys.conjugate(Symbol{static_cast<std::uint16_t>(i)}), e);
  }
  return r;
}

/// Applies sum_k coeff_k * mult_k * d/d(deriv_k) (a first-order operator with
/// monomial coefficients).
struct VectorFieldTerm {
  Symbol mult;
  Symbol deriv;
  Scalar coeff;
};

inline Polynomial apply_vector_field(const Polynomial& p, const std::vector<VectorFieldTerm>& field) {
  PolynomialBuilder b(p.system());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& f : field) {
      unsigned e = m[f.deriv];
      if (!e) continue;
      Monomial d = m;
      d.set(f.deriv, e - 1);
      d.set(f.mult, d[f.mult] + 1);
      b.add(d, c * f.coeff * Scalar(static_cast<long>(e)));
    }
  }
  return std::move(b).build();
}

/// Applies sum_k coeff_k * d/d(a_k) d/d(b_k).
struct SecondOrderTerm {
  Symbol a;
  Symbol b;
  Scalar coeff;
};

inline Polynomial apply_second_order(const Polynomial& p, const std::vector<SecondOrderTerm>& op) {
  PolynomialBuilder out(p.system());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& t : op) {
      unsigned ea = m[t.a];
      if (!ea) continue;
      Monomial d = m;
      d.set(t.a, ea - 1);
      unsigned eb = d[t.b];
      if (!eb) continue;
      d.set(t.b, eb - 1);
      out.add(d, c * t.coeff * Scalar(static_cast<long>(ea) * static_cast<long>(eb)));
    }
  }
  return std::move(out).build();
}

inline std::vector<SecondOrderTerm> laplacian_terms(const VariableSystem& sys, const Group& g, const Scalar& scale) {
  std::vector<SecondOrderTerm> op;
  for (int j = 0; j < g.length; ++j) {
    if (g.is_complex())
      op.push_back({sys.symbol(g.name, j), sys.symbol(g.name, j, true), scale});
    else
      op.push_back({sys.symbol(g.name, j), sys.symbol(g.name, j), scale});
  }
  return op;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Euler and Laplace operators

enum class EulerVariant { full, holomorphic, antiholomorphic };

/// E P, E_z P or Ebar_z P: each term is scaled by its degree in the group.
inline Polynomial euler(const Polynomial& p, std::string_view group, EulerVariant variant = EulerVariant::full) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  if (variant != EulerVariant::full) detail::require_complex(g, "holomorphic/antiholomorphic Euler operator");
  PolynomialBuilder b(p.system());
  for (const auto& [m, c] : p.terms()) {
    auto [hol, anti] = group_bidegree(sys, m, g);
    long w = variant == EulerVariant::full ? hol + anti : (variant == EulerVariant::holomorphic ? hol : anti);
    b.add(m, c * Scalar(w));
  }
  return std::move(b).build();
}

enum class LaplacianVariant {
  real,     // sum of second derivatives in real coordinates
  complex,  // Delta_z = sum d/dz_j d/dzbar_j; equals real / 4 on complex groups
};

inline Polynomial laplacian(const Polynomial& p, std::string_view group, LaplacianVariant variant) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  if (variant == LaplacianVariant::complex) detail::require_complex(g, "complex Laplacian");
  Scalar scale = (g.is_complex() && variant == LaplacianVariant::real) ? Scalar(4) : Scalar(1);
  return detail::apply_second_order(p, detail::laplacian_terms(sys, g, scale));
}

/// Real Laplacian on real groups, Delta_z on complex groups.
inline Polynomial laplacian(const Polynomial& p, std::string_view group) {
  const Group& g = p.system()->group(group);
  return laplacian(p, group, g.is_complex() ? LaplacianVariant::complex : LaplacianVariant::real);
}

/// Laplacian applied `times` times.
inline Polynomial laplacian_power(Polynomial p, std::string_view group, int times) {
  for (int i = 0; i < times && !p.is_zero(); ++i) p = laplacian(p, group);
  return p;
}

// ---------------------------------------------------------------------------
// Twisted Euler operators on a complex group of even length 2n. Component j
// is paired with n+j by declaration order.

enum class Twist { E, Edag };

inline Polynomial twist(const Polynomial& p, std::string_view group, Twist which) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  detail::require_complex(g, "twisted Euler operator");
  if (g.length % 2 != 0) throw KindMismatch("twisted Euler operator needs even length, got " + std::to_string(g.length));
  const int n = g.length / 2;
  std::vector<detail::VectorFieldTerm> field;
  for (int j = 0; j < n; ++j) {
    if (which == Twist::E) {
      // z_j dbar_{n+j} - z_{n+j} dbar_j
      field.push_back({sys.symbol(group, j), sys.symbol(group, n + j, true), Scalar(1)});
      field.push_back({sys.symbol(group, n + j), sys.symbol(group, j, true), Scalar(-1)});
    } else {
      // -(zbar_j d_{n+j} - zbar_{n+j} d_j)
      field.push_back({sys.symbol(group, j, true), sys.symbol(group, n + j), Scalar(-1)});
      field.push_back({sys.symbol(group, n + j, true), sys.symbol(group, j), Scalar(1)});
    }
  }
  return detail::apply_vector_field(p, field);
}

inline Polynomial twist_power(Polynomial p, std::string_view group, Twist which, int times) {
  for (int i = 0; i < times && !p.is_zero(); ++i) p = twist(p, group, which);
  return p;
}

// ---------------------------------------------------------------------------

enum class GradPairVariant {
  real,       // sum d/da_j d/db_j
  holo_anti,  // sum d/da_j d/dbbar_j
  anti_holo,  // sum d/dabar_j d/db_j
};

/// One application of <grad_a, grad_b> with the variant's bar placement.
inline Polynomial grad_pair(const Polynomial& p, std::string_view group_a, std::string_view group_b,
                            GradPairVariant variant) {
  const auto& sys = *p.system();
  const Group& a = sys.group(group_a);
  const Group& b = sys.group(group_b);
  if (a.length != b.length) throw KindMismatch("gradient pairing needs groups of equal length");
  bool abar = variant == GradPairVariant::anti_holo;
  bool bbar = variant == GradPairVariant::holo_anti;
  if (abar) detail::require_complex(a, "antiholomorphic gradient");
  if (bbar) detail::require_complex(b, "antiholomorphic gradient");
  std::vector<detail::SecondOrderTerm> op;
  for (int j = 0; j < a.length; ++j) op.push_back({sys.symbol(group_a, j, abar), sys.symbol(group_b, j, bbar), Scalar(1)});
  return detail::apply_second_order(p, op);
}

/// Constant-coefficient differential operator application: the monomial
/// prod s^{v_s} of `symbol` acts as prod d^{v_s}/ds^{v_s}.
inline Polynomial apply_operator(const Polynomial& symbol, const Polynomial& f) {
  Polynomial::check_same(symbol, f);
  PolynomialBuilder out(f.system());
  const auto n = static_cast<std::size_t>(f.system()->symbol_count());
  std::vector<std::pair<std::size_t, unsigned>> support;
  for (const auto& [nu, d] : symbol.terms()) {
    support.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (unsigned k = nu.exponent(i)) support.emplace_back(i, k);
    for (const auto& [mu, c] : f.terms()) {
      // falling factorials of the exponents; small enough for machine integers
      long w = 1;
      for (const auto& [i, k] : support) {
        const unsigned a = mu.exponent(i);
        if (a < k) {
          w = 0;
          break;
        }
        for (unsigned t = 0; t < k; ++t) w *= static_cast<long>(a - t);
      }
      if (w == 0) continue;
      Scalar term = c;
      term *= d;
      if (w != 1) term *= Scalar(w);
      out.add(mu.quotient(nu), std::move(term));
    }
  }
  return std::move(out).build();
}

// ---------------------------------------------------------------------------
// Fischer inner products

/// [conj(P)(d) Q] at group = 0, parameters in other groups passing through
/// (and conjugated on the P side). Closed form: sum over group monomials mu
/// of conj(P_mu) Q_mu mu!.
inline Polynomial fischer_pairing(const Polynomial& p, const Polynomial& q, std::string_view group) {
  Polynomial::check_same(p, q);
  const auto& sys = *p.system();
  auto mask = group_mask(sys, group);
  SplitPolynomial sp = split_by(p, mask);
  SplitPolynomial sq = split_by(q, mask);
  PolynomialBuilder out(p.system());
  for (const auto& [mu, prest] : sp.parts) {
    auto it = sq.parts.find(mu);
    if (it == sq.parts.end()) continue;
    Scalar w(mu.factorial_weight());
    for (const auto& [pm, pc] : prest) {
      Monomial pmc = detail::conjugate_monomial(sys, pm);
      Scalar pw = pc.conj() * w;
      for (const auto& [qm, qc] : it->second) out.add(pmc * qm, pw * qc);
    }
  }
  return std::move(out).build();
}

namespace detail {

inline Scalar fischer_scalar(const Polynomial& p, const Polynomial& q, std::string_view group, bool want_complex) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  if (g.is_complex() != want_complex)
    throw KindMismatch(std::string(want_complex ? "complex" : "real") + " Fischer product on group " + g.name);
  auto mask = group_mask(sys, group);
  if (!supported_in(p, mask) || !supported_in(q, mask))
    throw ForeignSymbols("Fischer product operands must only involve group " + g.name);
  Polynomial r = fischer_pairing(p, q, group);
  return r.is_zero() ? Scalar(0) : r.terms().front().second;
}

}  // namespace detail

inline Scalar fischer_real(const Polynomial& p, const Polynomial& q, std::string_view group) {
  return detail::fischer_scalar(p, q, group, false);
}

/// Complex convention: z_j -> d/dzbar_j and zbar_j -> d/dz_j.
inline Scalar fischer_complex(const Polynomial& p, const Polynomial& q, std::string_view group) {
  return detail::fischer_scalar(p, q, group, true);
}

// ---------------------------------------------------------------------------
// Sphere means

/// Normalized sphere mean of the monomial `mu` restricted to `g`, from the
/// Pizzetti series term sum_j Delta^j/(4^j j! (m/2)_j) at the origin, with
/// m the real dimension. Only j = deg/2 can contribute.
inline Rational sphere_moment(const VariableSystem& sys, const Group& g, const Monomial& mu) {
  (void)sys;
  if (mu.degree() % 2 != 0) return 0;
  const unsigned j = static_cast<unsigned>(mu.degree() / 2);
  // Delta^j mu at 0: the symbol (sum xi^2)^j (or (4 sum xi xibar)^j) paired with mu.
  Rational lap_at_zero;
  Rational half_dim;
  if (g.is_complex()) {
    mpz_class w = 1;
    for (int i = 0; i < g.length; ++i) {
      unsigned a = mu.exponent(static_cast<std::size_t>(g.offset + 2 * i));
      unsigned b = mu.exponent(static_cast<std::size_t>(g.offset + 2 * i + 1));
      if (a != b) return 0;
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), a);
      w *= f;
    }
    // (4 Delta_z)^j z^a zbar^a |0 = 4^j j! a!
    mpz_class four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, j);
    lap_at_zero = Rational(four_pow) * factorial(j) * Rational(w);
    half_dim = g.length;
  } else {
    Rational w = factorial(j);
    for (int i = 0; i < g.length; ++i) {
      unsigned a = mu.exponent(static_cast<std::size_t>(g.offset + i));
      if (a % 2 != 0) return 0;
      w *= factorial(a) / factorial(a / 2);
    }
    lap_at_zero = w;
    half_dim = Rational(g.length, 2);
    half_dim.canonicalize();
  }
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, j);
  return lap_at_zero / (Rational(four_pow) * factorial(j) * pochhammer(half_dim, j));
}

/// (1/omega) * integral over the unit sphere of `group` of P; other groups are
/// parameters.
inline Polynomial sphere_mean(const Polynomial& p, std::string_view group) {
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  auto mask = group_mask(sys, group);
  auto other = complement(mask);
  PolynomialBuilder out(p.system());
  for (const auto& [m, c] : p.terms()) {
    Rational w = sphere_moment(sys, g, m.masked(mask));
    if (sgn(w) == 0) continue;
    out.add(m.masked(other), c * Scalar(w));
  }
  return std::move(out).build();
}

/// Sphere mean of conj(P) * Q without materializing the product.
inline Polynomial spherical_inner(const Polynomial& p, const Polynomial& q, std::string_view group) {
  Polynomial::check_same(p, q);
  const auto& sys = *p.system();
  const Group& g = sys.group(group);
  auto mask = group_mask(sys, group);
  SplitPolynomial sp = split_by(conjugate(p), mask);
  SplitPolynomial sq = split_by(q, mask);
  PolynomialBuilder out(p.system());
  for (const auto& [mu1, prest] : sp.parts) {
    for (const auto& [mu2, qrest] : sq.parts) {
      Rational w = sphere_moment(sys, g, mu1 * mu2);
      if (sgn(w) == 0) continue;
      Scalar sw(w);
      for (const auto& [pm, pc] : prest) {
        Scalar pw = pc * sw;
        for (const auto& [qm, qc] : qrest) out.add(pm * qm, pw * qc);
      }
    }
  }
  return std::move(out).build();
}

}  // namespace hk

#endif  // HK_OPERATORS_HPP
