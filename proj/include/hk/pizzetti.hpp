#ifndef HK_PIZZETTI_HPP
#define HK_PIZZETTI_HPP

#include <cstddef>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk/harmonics.hpp"

namespace hk {

enum class Manifold {
  St1,  // pairs of orthonormal vectors in R^m
  St2,  // pairs of unitary-orthonormal vectors in C^N
};

/// Integration groups (s, t) of a Stiefel manifold inside a variable system.
struct StiefelContext {
  Manifold manifold = Manifold::St1;
  int dim = 3;
  std::string s = "s";
  std::string t = "t";

  void check(const VariableSystem& sys) const {
    const Group& gs = sys.group(s);
    const Group& gt = sys.group(t);
    const bool cplx = manifold == Manifold::St2;
    if (gs.is_complex() != cplx || gt.is_complex() != cplx)
      throw KindMismatch(std::string("Stiefel groups must be ") + (cplx ? "complex" : "real"));
    if (gs.length != dim || gt.length != dim) throw KindMismatch("Stiefel groups must have length " + std::to_string(dim));
    if (cplx && dim < 2) throw InvalidParams("complex Stiefel means need N >= 2");
    if (!cplx && dim < 2) throw InvalidParams("real Stiefel means need m >= 2");
  }
};

/// Resource caps; zero means unlimited.
struct Limits {
  std::size_t max_terms = 0;

  void check(const Polynomial& p, const char* what) const {
    if (max_terms != 0 && p.size() > max_terms)
      throw CapExceeded("max-terms", std::string(what) + " has " + std::to_string(p.size()) + " terms (cap " +
                                         std::to_string(max_terms) + ")");
  }
};

enum class IOperator { I1, I2 };

/// The constant-coefficient operators I1, I2 written as symbol polynomials in
/// the (s, t) groups, where the symbol s means d/ds.
///   St1: I1 = Delta_s + Delta_t, I2 = Delta_s Delta_t - <grad_s, grad_t>^2
///   St2: I1 = 4(Delta_s + Delta_t), I2 = 16(Delta_s Delta_t - <grad_s, grad_tbar><grad_sbar, grad_t>)
///        with Delta_s = sum d/ds_a d/dsbar_a.
inline Polynomial i_symbol(const SystemRef& sys, const StiefelContext& ctx, IOperator which) {
  ctx.check(*sys);
  const bool cplx = ctx.manifold == Manifold::St2;
  PolyVector s = vec(sys, ctx.s);
  PolyVector t = vec(sys, ctx.t);
  if (!cplx) {
    Polynomial ds = dot(s, s);
    Polynomial dt = dot(t, t);
    if (which == IOperator::I1) return ds + dt;
    return ds * dt - power(dot(s, t), 2);
  }
  PolyVector sb = vec(sys, ctx.s, true);
  PolyVector tb = vec(sys, ctx.t, true);
  Polynomial ds = dot(s, sb);
  Polynomial dt = dot(t, tb);
  if (which == IOperator::I1) return Scalar(4) * (ds + dt);
  return Scalar(16) * (ds * dt - dot(s, tb) * dot(sb, t));
}

/// Weight of the (j, ell) Pizzetti term, including 1/((j-2 ell)! ell!).
///   St1: 1 / (4^j (m/2)_j ((m-1)/2)_ell)
///   St2: 1 / (4^j (N)_j (N-1)_ell)
inline Rational pizzetti_weight(const StiefelContext& ctx, int j, int ell) {
  mpz_class four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(j));
  Rational a;
  Rational b;
  if (ctx.manifold == Manifold::St1) {
    a = rational(ctx.dim, 2);
    b = rational(ctx.dim - 1, 2);
  } else {
    a = ctx.dim;
    b = ctx.dim - 1;
  }
  Rational w = Rational(four) * pochhammer(a, static_cast<unsigned>(j)) * pochhammer(b, static_cast<unsigned>(ell)) *
               factorial(static_cast<unsigned>(j - 2 * ell)) * factorial(static_cast<unsigned>(ell));
  return 1 / w;
}

/// Tables of the order-2j Pizzetti operator: entry mu holds (coefficient of
/// the symbol monomial mu) * mu!, which is the operator applied to mu at 0.
class PizzettiTables {
 public:
  PizzettiTables(SystemRef sys, StiefelContext ctx) : sys_(std::move(sys)), ctx_(std::move(ctx)) {
    ctx_.check(*sys_);
    i1_ = i_symbol(sys_, ctx_, IOperator::I1);
    i2_ = i_symbol(sys_, ctx_, IOperator::I2);
  }

  const StiefelContext& context() const noexcept { return ctx_; }
  const SystemRef& system() const noexcept { return sys_; }

  /// Symbol of the single (j, ell) term, weight included.
  Polynomial term_symbol(int j, int ell) const {
    return Scalar(pizzetti_weight(ctx_, j, ell)) *
           (power(i1_, static_cast<unsigned>(j - 2 * ell)) * power(i2_, static_cast<unsigned>(ell)));
  }

  /// Full order-2j symbol sum_ell term_symbol(j, ell).
  Polynomial symbol(int j) const {
    Polynomial out(sys_);
    for (int ell = 0; 2 * ell <= j; ++ell) out += term_symbol(j, ell);
    return out;
  }

  using Table = std::vector<std::pair<Monomial, Scalar>>;

  /// Weighted table for order 2j, built on first use.
  const Table& table(int j) {
    while (static_cast<int>(tables_.size()) <= j) tables_.emplace_back();
    auto& slot = tables_[static_cast<std::size_t>(j)];
    if (!slot) {
      Table t;
      const Polynomial sym = symbol(j);
      for (const auto& [m, c] : sym.terms()) t.emplace_back(m, c * Scalar(m.factorial_weight()));
      slot = std::make_unique<Table>(std::move(t));
    }
    return *slot;
  }

  /// Lookup map view of table(j).
  const std::unordered_map<Monomial, Scalar, MonomialHash>& lookup(int j) {
    while (static_cast<int>(maps_.size()) <= j) maps_.emplace_back();
    auto& slot = maps_[static_cast<std::size_t>(j)];
    if (!slot) {
      auto m = std::make_unique<std::unordered_map<Monomial, Scalar, MonomialHash>>();
      for (const auto& [mono, c] : table(j)) m->emplace(mono, c);
      slot = std::move(m);
    }
    return *slot;
  }

 private:
  SystemRef sys_;
  StiefelContext ctx_;
  Polynomial i1_{nullptr};
  Polynomial i2_{nullptr};
  std::vector<std::unique_ptr<Table>> tables_;
  std::vector<std::unique_ptr<std::unordered_map<Monomial, Scalar, MonomialHash>>> maps_;
};

inline std::array<bool, kMaxSymbols> stiefel_mask(const VariableSystem& sys, const StiefelContext& ctx) {
  auto a = group_mask(sys, ctx.s);
  auto b = group_mask(sys, ctx.t);
  for (std::size_t i = 0; i < kMaxSymbols; ++i) a[i] = a[i] || b[i];
  return a;
}

/// Normalized Stiefel mean of f over (s, t), a polynomial in the remaining groups.
inline Polynomial stiefel_mean(const Polynomial& f, PizzettiTables& tables) {
  if (!same_system(f.system(), tables.system())) throw SystemMismatch();
  const auto& sys = *f.system();
  auto mask = stiefel_mask(sys, tables.context());
  SplitPolynomial parts = split_by(f, mask);
  PolynomialBuilder out(f.system());
  for (const auto& [mu, rest] : parts.parts) {
    if (mu.degree() % 2 != 0) continue;
    const auto& look = tables.lookup(mu.degree() / 2);
    auto it = look.find(mu);
    if (it == look.end()) continue;
    for (const auto& [m, c] : rest) out.add(m, c * it->second);
  }
  return std::move(out).build();
}

inline Polynomial stiefel_mean(const Polynomial& f, const StiefelContext& ctx) {
  PizzettiTables tables(f.system(), ctx);
  return stiefel_mean(f, tables);
}

inline Polynomial stiefel1_mean(const Polynomial& f, const StiefelContext& ctx) {
  if (ctx.manifold != Manifold::St1) throw KindMismatch("stiefel1_mean needs a real Stiefel context");
  return stiefel_mean(f, ctx);
}

inline Polynomial stiefel2_mean(const Polynomial& f, const StiefelContext& ctx) {
  if (ctx.manifold != Manifold::St2) throw KindMismatch("stiefel2_mean needs a complex Stiefel context");
  return stiefel_mean(f, ctx);
}

/// Contribution of the single Pizzetti term (j, ell) to the mean of f.
inline Polynomial stiefel_term(const Polynomial& f, const PizzettiTables& tables, int j, int ell) {
  const auto& sys = *f.system();
  Polynomial sym = tables.term_symbol(j, ell);
  std::unordered_map<Monomial, Scalar, MonomialHash> look;
  for (const auto& [m, c] : sym.terms()) look.emplace(m, c * Scalar(m.factorial_weight()));
  SplitPolynomial parts = split_by(f, stiefel_mask(sys, tables.context()));
  PolynomialBuilder out(f.system());
  for (const auto& [mu, rest] : parts.parts) {
    auto it = look.find(mu);
    if (it == look.end()) continue;
    for (const auto& [m, c] : rest) out.add(m, c * it->second);
  }
  return std::move(out).build();
}

namespace detail {

/// sum over table entries mu of w_mu * [mu](F * H) without forming F * H.
/// `table_for(j)` gives the table pairing against (s,t)-degree 2j, or nullptr
/// when that order contributes nothing.
template <class TableFor>
Polynomial product_pairing(const Polynomial& f, const Polynomial& h, const StiefelContext& ctx, TableFor&& table_for) {
  Polynomial::check_same(f, h);
  const auto& sys = *f.system();
  auto mask = stiefel_mask(sys, ctx);
  SplitPolynomial fs = split_by(f, mask);
  SplitPolynomial hs = split_by(h, mask);

  // F keys grouped by (s,t)-degree
  std::map<int, std::vector<const Monomial*>> fkeys;
  std::map<int, bool> hdeg;
  for (const auto& [mu, rest] : fs.parts) fkeys[mu.degree()].push_back(&mu);
  for (const auto& [mu, rest] : hs.parts) hdeg[mu.degree()] = true;

  // G[mu1] = sum over mu in table, mu1 | mu of table[mu] * H[mu / mu1]
  std::unordered_map<Monomial, PolynomialBuilder, MonomialHash> acc;
  for (const auto& [df, keys] : fkeys) {
    for (const auto& [dh, present] : hdeg) {
      if ((df + dh) % 2 != 0) continue;
      const std::vector<std::pair<Monomial, Scalar>>* table = table_for((df + dh) / 2);
      if (!table) continue;
      for (const auto& [mu, w] : *table) {
        for (const Monomial* mu1 : keys) {
          if (!mu.divisible_by(*mu1)) continue;
          auto hit = hs.parts.find(mu.quotient(*mu1));
          if (hit == hs.parts.end()) continue;
          auto [slot, fresh] = acc.try_emplace(*mu1, f.system());
          for (const auto& [m, c] : hit->second) slot->second.add(m, c * w);
        }
      }
    }
  }
  PolynomialBuilder out(f.system());
  for (auto& [mu1, builder] : acc) {
    Polynomial g = std::move(builder).build();
    if (g.is_zero()) continue;
    for (const auto& [fm, fc] : fs.parts.at(mu1))
      for (const auto& [gm, gc] : g.terms()) out.add(fm * gm, fc * gc);
  }
  return std::move(out).build();
}

}  // namespace detail

/// Stiefel mean of F * H without expanding the product. F and H may depend
/// on disjoint or overlapping parameter groups.
inline Polynomial stiefel_product_mean(const Polynomial& f, const Polynomial& h, PizzettiTables& tables,
                                       const Limits& limits = {}) {
  Polynomial r = detail::product_pairing(f, h, tables.context(), [&](int j) { return &tables.table(j); });
  limits.check(r, "Stiefel product mean");
  return r;
}

/// Single Pizzetti term (j, ell) of the mean of F * H, product not expanded.
inline Polynomial stiefel_product_term(const Polynomial& f, const Polynomial& h, const PizzettiTables& tables, int j,
                                       int ell) {
  PizzettiTables::Table t;
  const Polynomial sym = tables.term_symbol(j, ell);
  for (const auto& [m, c] : sym.terms()) t.emplace_back(m, c * Scalar(m.factorial_weight()));
  return detail::product_pairing(f, h, tables.context(), [&](int order) { return order == j ? &t : nullptr; });
}

/// I1 or I2 applied `times` times as differential operators.
inline Polynomial apply_I(const Polynomial& f, const StiefelContext& ctx, IOperator which, int times = 1) {
  Polynomial sym = i_symbol(f.system(), ctx, which);
  Polynomial out = f;
  for (int i = 0; i < times && !out.is_zero(); ++i) out = apply_operator(sym, out);
  return out;
}

// ---------------------------------------------------------------------------
// Plane waves

/// Groups (x, y, s, t) real of length m, or (z, u, s, t) complex of length N
/// (2n in the symplectic case).
inline SystemRef plane_wave_system(const KernelParams& kp) {
  if (kp.kind == Case::real)
    return VariableSystem::make(
        {{"x", kp.dim, Kind::real}, {"y", kp.dim, Kind::real}, {"s", kp.dim, Kind::real}, {"t", kp.dim, Kind::real}});
  const int n = kp.complex_dim();
  return VariableSystem::make(
      {{"z", n, Kind::complex}, {"u", n, Kind::complex}, {"s", n, Kind::complex}, {"t", n, Kind::complex}});
}

inline StiefelContext plane_wave_context(const KernelParams& kp) {
  StiefelContext ctx;
  ctx.manifold = kp.kind == Case::real ? Manifold::St1 : Manifold::St2;
  ctx.dim = kp.complex_dim();
  return ctx;
}

/// A plane-wave integrand kept as the product of its z-side and u-side factors.
struct PlaneWave {
  KernelParams params;
  Polynomial z_side;
  Polynomial u_side;

  Polynomial polynomial() const { return z_side * u_side; }
};

/// Exchanges the parameter groups x<->y or z<->u.
inline Polynomial swap_parameters(const Polynomial& p) {
  const auto& sys = *p.system();
  return sys.has_group("x") ? swap_groups(p, "x", "y") : swap_groups(p, "z", "u");
}

/// Unprojected complex wave <z, conj(t+s)>^p <zbar, t-s>^q. With
/// `flip_s` the sign of s is reversed in both factors.
inline Polynomial complex_wave_z(const SystemRef& sys, int p, int q, bool flip_s = false) {
  PolyVector s = vec(sys, "s");
  PolyVector sb = vec(sys, "s", true);
  if (flip_s) {
    s = Scalar(-1) * s;
    sb = Scalar(-1) * sb;
  }
  PolyVector t = vec(sys, "t");
  PolyVector tb = vec(sys, "t", true);
  Polynomial a = dot(vec(sys, "z"), tb + sb);
  Polynomial b = dot(vec(sys, "z", true), t - s);
  return power(a, static_cast<unsigned>(p)) * power(b, static_cast<unsigned>(q));
}

/// Closed form without prefactor:
///   <zbar, t+s>^{q-p} (<z, tbar-sbar><zbar, t+s> + <z, t+s>_s <zbar, tbar-sbar>_s)^p,  p <= q.
inline Polynomial symplectic_wave_closed_form(const SystemRef& sys, int p, int q) {
  PolyVector z = vec(sys, "z");
  PolyVector zb = vec(sys, "z", true);
  PolyVector w = vec(sys, "t") + vec(sys, "s");
  PolyVector vb = vec(sys, "t", true) - vec(sys, "s", true);
  Polynomial head = dot(zb, w);
  Polynomial inner = dot(z, vb) * head + skew(z, w) * skew(zb, vb);
  return power(head, static_cast<unsigned>(q - p)) * power(inner, static_cast<unsigned>(p));
}

/// Plane-wave integrand for the parameters:
///   real:       <x, t+is>^k <y, t-is>^k
///   complex:    <z, conj(t+s)>^p <zbar, t-s>^q <u, conj(t-s)>^q <ubar, t+s>^p
///   symplectic: g_z conj(g_u), g_z the E^dag projection (in z) of the complex
///               z-side (its mirror when p > q)
inline PlaneWave plane_wave(const KernelParams& kp, const SystemRef& sys, const Limits& limits = {}) {
  kp.validate();
  if (kp.kind == Case::real) {
    PolyVector s = vec(sys, "s");
    PolyVector t = vec(sys, "t");
    PolyVector is = Scalar::imaginary_unit() * s;
    Polynomial a = power(dot(vec(sys, "x"), t + is), static_cast<unsigned>(kp.k));
    Polynomial b = power(dot(vec(sys, "y"), t - is), static_cast<unsigned>(kp.k));
    return {kp, a, b};
  }
  Polynomial wz = complex_wave_z(sys, kp.p, kp.q);
  limits.check(wz, "plane wave");
  if (kp.kind == Case::symplectic) wz = proj_symplectic(wz, "z", natural_orientation(kp.p, kp.q));
  limits.check(wz, "projected plane wave");
  Polynomial wu = conjugate(rename_group(wz, "z", "u"));
  return {kp, wz, wu};
}

inline PlaneWave plane_wave(const KernelParams& kp) { return plane_wave(kp, plane_wave_system(kp)); }

}  // namespace hk

#endif  // HK_PIZZETTI_HPP
