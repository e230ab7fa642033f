#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace hk;
using support::P;
using support::Q;

namespace {

SystemRef st1_system(int m) {
  return VariableSystem::make({{"x", m, Kind::real}, {"y", m, Kind::real}, {"s", m, Kind::real}, {"t", m, Kind::real}});
}

SystemRef st2_system(int n) {
  return VariableSystem::make(
      {{"z", n, Kind::complex}, {"u", n, Kind::complex}, {"s", n, Kind::complex}, {"t", n, Kind::complex}});
}

StiefelContext st(Manifold mf, int dim) {
  StiefelContext c;
  c.manifold = mf;
  c.dim = dim;
  return c;
}

}  // namespace

TEST(StiefelMean, RealExamples) {
  auto sys = st1_system(3);
  auto ctx = st(Manifold::St1, 3);
  EXPECT_EQ(stiefel_mean(P("1", sys), ctx), P("1", sys));
  EXPECT_EQ(stiefel_mean(P("t[1]^2", sys), ctx), P("1/3", sys));
  EXPECT_EQ(stiefel_mean(P("s[2]^2", sys), ctx), P("1/3", sys));
  EXPECT_EQ(stiefel_mean(P("s[1]", sys), ctx), Polynomial(sys));
  EXPECT_EQ(stiefel_mean(P("s[1]*t[1]", sys), ctx), Polynomial(sys));
  Polynomial f = plane_wave(KernelParams::real(3, 1), sys).polynomial();
  EXPECT_EQ(stiefel_mean(f, ctx), Scalar(Q(2, 3)) * dot(vec(sys, "x"), vec(sys, "y")));
}

TEST(StiefelMean, ComplexExamples) {
  auto sys = st2_system(2);
  auto ctx = st(Manifold::St2, 2);
  EXPECT_EQ(stiefel_mean(P("1", sys), ctx), P("1", sys));
  EXPECT_EQ(stiefel_mean(P("s[1]*sbar[1]+t[1]*tbar[1]", sys), ctx), P("1", sys));
  EXPECT_EQ(stiefel_mean(P("s[1]*sbar[1]", sys), ctx), P("1/2", sys));
  EXPECT_EQ(stiefel_mean(P("s[1]^2", sys), ctx), Polynomial(sys));
  EXPECT_EQ(stiefel_mean(P("s[1]*tbar[1]", sys), ctx), Polynomial(sys));
}

TEST(StiefelMean, RejectsBadContexts) {
  auto sys = VariableSystem::make({{"s", 1, Kind::complex}, {"t", 1, Kind::complex}});
  EXPECT_THROW(stiefel_mean(P("1", sys), st(Manifold::St2, 1)), InvalidParams);
  auto sys2 = st1_system(3);
  EXPECT_THROW(stiefel_mean(P("1", sys2), st(Manifold::St2, 3)), KindMismatch);
  EXPECT_THROW(stiefel_mean(P("1", sys2), st(Manifold::St1, 4)), KindMismatch);
}

TEST(StiefelMean, MatchesLiteralSeries) {
  std::mt19937_64 rng(31);
  int nonzero = 0;
  auto check = [&](const SystemRef& sys, const StiefelContext& ctx) {
    // integrate over (s, t) only: draw in a system without parameters, then embed
    auto st_only = VariableSystem::make({{"s", ctx.dim, sys->group("s").kind}, {"t", ctx.dim, sys->group("t").kind}});
    for (int i = 0; i < 6; ++i) {
      Polynomial f = parse(format(support::random_poly(rng, st_only, 8, 6)), sys) * support::random_poly(rng, sys, 3, 2);
      Polynomial mean = stiefel_mean(f, ctx);
      if (!mean.is_zero()) ++nonzero;
      EXPECT_EQ(mean, oracle::literal_stiefel_mean(f, ctx)) << ctx.dim;
    }
  };
  for (int m : {2, 3, 4}) check(st1_system(m), st(Manifold::St1, m));
  for (int n : {2, 3}) check(st2_system(n), st(Manifold::St2, n));
  EXPECT_GT(nonzero, 15);
}

TEST(StiefelMean, VanishesOnTheDefiningIdeal) {
  // <s,t>, |s|^2 - 1 and |t|^2 - 1 vanish on the manifold
  std::mt19937_64 rng(32);
  for (int m : {3, 4}) {
    auto sys = st1_system(m);
    auto ctx = st(Manifold::St1, m);
    Polynomial one = P("1", sys);
    const Polynomial gens[] = {dot(vec(sys, "s"), vec(sys, "t")), norm_sq(sys, "s") - one, norm_sq(sys, "t") - one};
    for (int i = 0; i < 4; ++i) {
      Polynomial g = support::random_poly(rng, sys, 5, 3);
      for (const auto& h : gens) EXPECT_TRUE(stiefel_mean(h * g, ctx).is_zero());
    }
  }
  for (int n : {2, 3}) {
    auto sys = st2_system(n);
    auto ctx = st(Manifold::St2, n);
    Polynomial one = P("1", sys);
    Polynomial st_inner = dot(vec(sys, "s"), vec(sys, "t", true));
    const Polynomial gens[] = {st_inner, conjugate(st_inner), norm_sq(sys, "s") - one, norm_sq(sys, "t") - one};
    for (int i = 0; i < 4; ++i) {
      Polynomial g = support::random_poly(rng, sys, 5, 3);
      for (const auto& h : gens) EXPECT_TRUE(stiefel_mean(h * g, ctx).is_zero());
    }
  }
}

TEST(StiefelMean, ProductMeanMatchesExpandedProduct) {
  std::mt19937_64 rng(33);
  auto sys = st2_system(2);
  PizzettiTables tables(sys, st(Manifold::St2, 2));
  for (int i = 0; i < 6; ++i) {
    Polynomial f = support::random_poly(rng, sys, 5, 3);
    Polynomial h = support::random_poly(rng, sys, 5, 3);
    EXPECT_EQ(stiefel_product_mean(f, h, tables), stiefel_mean(f * h, tables));
  }
  auto sr = st1_system(3);
  PizzettiTables rt(sr, st(Manifold::St1, 3));
  PlaneWave w = plane_wave(KernelParams::real(3, 3), sr);
  EXPECT_EQ(stiefel_product_mean(w.z_side, w.u_side, rt), stiefel_mean(w.polynomial(), rt));
}

TEST(StiefelMean, TermsSumToMean) {
  std::mt19937_64 rng(34);
  auto sys = st1_system(3);
  PizzettiTables tables(sys, st(Manifold::St1, 3));
  Polynomial f = support::random_poly(rng, sys, 8, 6);
  Polynomial sum(sys);
  for (int j = 0; j <= 3; ++j)
    for (int ell = 0; 2 * ell <= j; ++ell) sum += stiefel_term(f, tables, j, ell);
  EXPECT_EQ(sum, stiefel_mean(f, tables));
}

TEST(ApplyI, Examples) {
  auto sr = st1_system(3);
  auto cr = st(Manifold::St1, 3);
  Polynomial f1 = plane_wave(KernelParams::real(3, 1), sr).polynomial();
  EXPECT_EQ(apply_I(f1, cr, IOperator::I1), Scalar(4) * dot(vec(sr, "x"), vec(sr, "y")));
  EXPECT_TRUE(apply_I(f1, cr, IOperator::I2).is_zero());
  auto sc = st2_system(2);
  auto cc = st(Manifold::St2, 2);
  Polynomial f10 = plane_wave(KernelParams::complex(2, 1, 0), sc).polynomial();
  EXPECT_EQ(apply_I(f10, cc, IOperator::I1), Scalar(8) * dot(vec(sc, "z"), vec(sc, "u", true)));
  EXPECT_EQ(apply_I(P("s[1]^2*t[2]^2", sr), cr, IOperator::I2), P("4", sr));
  EXPECT_EQ(apply_I(P("s[1]*t[1]*s[2]*t[2]", sr), cr, IOperator::I2), P("-2", sr));
}

TEST(ApplyI, ComplexI2MatchesRealCoordinates) {
  // the complex form of I2 equals Delta_w Delta_v - <grad_w,grad_v>^2 - <grad_w,J grad_v>^2
  std::mt19937_64 rng(35);
  for (int n : {2, 3}) {
    auto sys = VariableSystem::make({{"s", n, Kind::complex},
                                     {"t", n, Kind::complex},
                                     {"w", 2 * n, Kind::real},
                                     {"v", 2 * n, Kind::real}});
    auto ctx = st(Manifold::St2, n);
    auto only_st = VariableSystem::make({{"s", n, Kind::complex}, {"t", n, Kind::complex}});
    for (int i = 0; i < 5; ++i) {
      Polynomial g = support::random_poly(rng, only_st, 6, 5);
      Polynomial f = parse(format(g), sys);
      auto [real_side, complex_side] = oracle::i2_real_vs_complex(f, ctx);
      EXPECT_EQ(real_side, complex_side) << n;
    }
  }
}

TEST(PlaneWave, Shapes) {
  auto sr = st1_system(3);
  PlaneWave w = plane_wave(KernelParams::real(3, 1), sr);
  EXPECT_EQ(w.z_side, dot(vec(sr, "x"), vec(sr, "t") + Scalar::imaginary_unit() * vec(sr, "s")));
  EXPECT_EQ(w.u_side, dot(vec(sr, "y"), vec(sr, "t") - Scalar::imaginary_unit() * vec(sr, "s")));
  EXPECT_EQ(swap_parameters(w.polynomial()), conjugate(w.polynomial()));

  for (int q = 0; q <= 3; ++q) {
    KernelParams kp = KernelParams::symplectic(1, 0, q);
    auto sys = plane_wave_system(kp);
    PlaneWave ws = plane_wave(kp, sys);
    EXPECT_EQ(ws.z_side, complex_wave_z(sys, 0, q));
    EXPECT_EQ(ws.u_side, conjugate(rename_group(ws.z_side, "z", "u")));
    EXPECT_EQ(symplectic_wave_closed_form(sys, 0, q), complex_wave_z(sys, 0, q, true));
  }
}

TEST(PlaneWave, SymplecticProjectionHasClosedForm) {
  // with s negated the projected wave is (q-p+1)/(q+1) times the closed form
  for (int n : {1, 2})
    for (int p = 0; p <= 2; ++p)
      for (int q = p; q <= 3; ++q) {
        KernelParams kp = KernelParams::symplectic(n, p, q);
        auto sys = plane_wave_system(kp);
        Polynomial proj = proj_symplectic(complex_wave_z(sys, p, q, true), "z");
        EXPECT_EQ(proj, Scalar(rational(q - p + 1, q + 1)) * symplectic_wave_closed_form(sys, p, q))
            << n << " " << p << " " << q;
        EXPECT_TRUE(twist(symplectic_wave_closed_form(sys, p, q), "z", Twist::Edag).is_zero());
      }
}

TEST(PlaneWave, MaxTermsCap) {
  KernelParams kp = KernelParams::symplectic(2, 2, 2);
  auto sys = plane_wave_system(kp);
  Limits lim;
  lim.max_terms = 10;
  EXPECT_THROW(plane_wave(kp, sys, lim), CapExceeded);
  lim.max_terms = 0;
  EXPECT_NO_THROW(plane_wave(kp, sys, lim));
}
