#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace hk;
using support::P;
using support::Q;

namespace {

SystemRef xs(int m) { return VariableSystem::make({{"x", m, Kind::real}}); }
SystemRef zs(int n) { return VariableSystem::make({{"z", n, Kind::complex}}); }

/// z (length 2n) and u (length 2n) for the twist examples.
SystemRef zu(int n2) { return VariableSystem::make({{"z", n2, Kind::complex}, {"u", n2, Kind::complex}}); }

Polynomial hol_minus_anti(const Polynomial& p) {
  return euler(p, "z", EulerVariant::antiholomorphic) - euler(p, "z", EulerVariant::holomorphic);
}

}  // namespace

TEST(Euler, Examples) {
  auto x = xs(2);
  EXPECT_EQ(euler(P("x[1]^2*x[2]", x), "x"), P("3*x[1]^2*x[2]", x));
  auto z = zs(2);
  EXPECT_EQ(euler(P("z[1]^2*zbar[2]", z), "z", EulerVariant::holomorphic), P("2*z[1]^2*zbar[2]", z));
  EXPECT_EQ(euler(P("z[1]^2*zbar[2]", z), "z", EulerVariant::antiholomorphic), P("z[1]^2*zbar[2]", z));
  EXPECT_THROW(euler(P("x[1]", x), "x", EulerVariant::holomorphic), KindMismatch);
}

TEST(Laplacian, Examples) {
  auto x = xs(2);
  EXPECT_EQ(laplacian(P("x[1]^2+x[2]^2", x), "x"), P("4", x));
  auto z = zs(2);
  EXPECT_EQ(laplacian(P("z[1]*zbar[1]", z), "z", LaplacianVariant::complex), P("1", z));
  EXPECT_EQ(laplacian(P("z[1]*zbar[1]", z), "z", LaplacianVariant::real), P("4", z));
  EXPECT_THROW(laplacian(P("x[1]", x), "x", LaplacianVariant::complex), KindMismatch);
}

TEST(Laplacian, RealVariantIsFourTimesComplexOnRandomInputs) {
  std::mt19937_64 rng(2);
  auto z = zs(3);
  for (int i = 0; i < 20; ++i) {
    Polynomial p = support::random_poly(rng, z, 8, 5);
    EXPECT_EQ(laplacian(p, "z", LaplacianVariant::real), Scalar(4) * laplacian(p, "z", LaplacianVariant::complex));
  }
}

TEST(Twist, ActionsOnBilinearAtoms) {
  auto sys = zu(2);
  Polynomial Abar = P("zbar[1]*u[1]+zbar[2]*u[2]", sys);
  Polynomial C = P("z[1]*u[2]-z[2]*u[1]", sys);
  Polynomial A = P("z[1]*ubar[1]+z[2]*ubar[2]", sys);
  EXPECT_EQ(twist(Abar, "z", Twist::E), C);
  EXPECT_EQ(twist(C, "z", Twist::Edag), Abar);
  EXPECT_EQ(twist(A, "z", Twist::E), Polynomial(sys));
  EXPECT_EQ(twist(Abar, "z", Twist::Edag), Polynomial(sys));
  EXPECT_EQ(twist(conjugate(C), "z", Twist::Edag), Polynomial(sys));
  BilinearAtoms at = BilinearAtoms::make(sys);
  EXPECT_EQ(at.A, A);
  EXPECT_EQ(at.Abar, Abar);
  EXPECT_EQ(at.C, C);
  // the skew product is antisymmetric under z <-> u
  EXPECT_EQ(swap_groups(at.C, "z", "u"), -at.C);
}

TEST(Twist, ShiftsBidegreeAndRejectsOddLength) {
  std::mt19937_64 rng(4);
  auto z = zs(4);
  Polynomial p = support::random_homogeneous(rng, z, "z", 2, 2);
  EXPECT_EQ(degree_profile(twist(p, "z", Twist::E), "z").to_string(), "(3,1)");
  EXPECT_EQ(degree_profile(twist(p, "z", Twist::Edag), "z").to_string(), "(1,3)");
  EXPECT_THROW(twist(P("z[1]", zs(3)), "z", Twist::E), KindMismatch);
}

TEST(Twist, Sl2CommutatorsOnRandomInputs) {
  std::mt19937_64 rng(6);
  for (int n2 : {2, 4}) {
    auto z = zs(n2);
    Polynomial r2 = norm_sq(z, "z");
    auto E = [](const Polynomial& p) { return twist(p, "z", Twist::E); };
    auto Ed = [](const Polynomial& p) { return twist(p, "z", Twist::Edag); };
    for (int i = 0; i < 20; ++i) {
      Polynomial p = support::random_homogeneous(rng, z, "z", static_cast<int>(rng() % 4), static_cast<int>(rng() % 4));
      EXPECT_EQ(hol_minus_anti(Ed(p)) - Ed(hol_minus_anti(p)), Scalar(2) * Ed(p));
      EXPECT_EQ(hol_minus_anti(E(p)) - E(hol_minus_anti(p)), Scalar(-2) * E(p));
      EXPECT_EQ(Ed(E(p)) - E(Ed(p)), hol_minus_anti(p));
      EXPECT_EQ(E(laplacian(p, "z")), laplacian(E(p), "z"));
      EXPECT_EQ(Ed(laplacian(p, "z")), laplacian(Ed(p), "z"));
      EXPECT_EQ(E(r2 * p), r2 * E(p));
      EXPECT_EQ(Ed(r2 * p), r2 * Ed(p));
    }
  }
}

TEST(Twist, MatchesExponentVectorOracle) {
  std::mt19937_64 rng(8);
  auto z = zs(4);
  for (const auto& e : oracle::complex_basis(4, 2, 1)) {
    Monomial m;
    for (int j = 0; j < 4; ++j) {
      m = m * Monomial::of(z->symbol("z", j), static_cast<unsigned>(e[static_cast<std::size_t>(j)]));
      m = m * Monomial::of(z->symbol("z", j, true), static_cast<unsigned>(e[static_cast<std::size_t>(4 + j)]));
    }
    auto to_poly = [&](const oracle::ExpPoly& ep) {
      Polynomial out(z);
      for (const auto& [f, c] : ep) {
        Monomial mm;
        for (int j = 0; j < 4; ++j) {
          mm = mm * Monomial::of(z->symbol("z", j), static_cast<unsigned>(f[static_cast<std::size_t>(j)]));
          mm = mm * Monomial::of(z->symbol("z", j, true), static_cast<unsigned>(f[static_cast<std::size_t>(4 + j)]));
        }
        out += Polynomial::monomial(z, mm, Scalar(c));
      }
      return out;
    };
    Polynomial mono = Polynomial::monomial(z, m);
    EXPECT_EQ(twist(mono, "z", Twist::E), to_poly(oracle::raising_twist(e)));
    EXPECT_EQ(twist(mono, "z", Twist::Edag), to_poly(oracle::lowering_twist(e)));
    EXPECT_EQ(laplacian(mono, "z"), to_poly(oracle::complex_laplacian(e)));
  }
}

TEST(GradPair, Examples) {
  auto st = VariableSystem::make({{"s", 2, Kind::real}, {"t", 2, Kind::real}});
  EXPECT_EQ(grad_pair(P("s[1]*t[1]", st), "s", "t", GradPairVariant::real), P("1", st));
  EXPECT_EQ(grad_pair(P("s[1]*t[2]", st), "s", "t", GradPairVariant::real), Polynomial(st));
  auto cst = VariableSystem::make({{"s", 2, Kind::complex}, {"t", 2, Kind::complex}});
  EXPECT_EQ(grad_pair(P("s[1]*tbar[1]+s[2]*tbar[1]", cst), "s", "t", GradPairVariant::holo_anti), P("1", cst));
  EXPECT_EQ(grad_pair(P("sbar[2]*t[2]", cst), "s", "t", GradPairVariant::anti_holo), P("1", cst));
  auto bad = VariableSystem::make({{"s", 2, Kind::real}, {"t", 3, Kind::real}});
  EXPECT_THROW(grad_pair(P("s[1]", bad), "s", "t", GradPairVariant::real), KindMismatch);
}

TEST(Fischer, RealExamples) {
  auto x = xs(2);
  EXPECT_EQ(fischer_real(P("x[1]^2", x), P("x[1]^2", x), "x"), Scalar(2));
  EXPECT_EQ(fischer_real(P("x[1]*x[2]", x), P("x[1]*x[2]", x), "x"), Scalar(1));
  Polynomial r2 = norm_sq(x, "x");
  Polynomial q = P("x[1]^2+x[2]^2", x);
  EXPECT_EQ(fischer_real(r2, q, "x"), Scalar(4));
  EXPECT_EQ(fischer_real(P("1", x), laplacian(q, "x"), "x"), Scalar(4));
}

TEST(Fischer, ComplexExamples) {
  auto z = zs(2);
  EXPECT_EQ(fischer_complex(P("z[1]", z), P("z[1]", z), "z"), Scalar(1));
  EXPECT_EQ(fischer_complex(P("z[1]^2", z), P("z[1]^2", z), "z"), Scalar(2));
  EXPECT_EQ(fischer_complex(P("z[1]*zbar[2]", z), P("z[1]*zbar[2]", z), "z"), Scalar(1));
  EXPECT_EQ(fischer_complex(P("(0,1)*z[1]", z), P("z[1]", z), "z"), Scalar(Q(0), Q(-1)));
}

TEST(Fischer, ForeignSymbolsAndKindRejected) {
  auto sys = VariableSystem::make({{"x", 2, Kind::real}, {"y", 2, Kind::real}});
  EXPECT_THROW(fischer_real(P("x[1]*y[1]", sys), P("x[1]", sys), "x"), ForeignSymbols);
  EXPECT_THROW(fischer_complex(P("x[1]", sys), P("x[1]", sys), "x"), KindMismatch);
}

TEST(Fischer, ClosedFormMatchesDifferentiation) {
  std::mt19937_64 rng(10);
  auto sys = VariableSystem::make({{"x", 3, Kind::real}, {"y", 2, Kind::real}});
  auto csys = VariableSystem::make({{"z", 2, Kind::complex}, {"u", 2, Kind::complex}});
  for (int i = 0; i < 20; ++i) {
    Polynomial a = support::random_poly(rng, sys, 6, 4);
    Polynomial b = support::random_poly(rng, sys, 6, 4);
    EXPECT_EQ(fischer_pairing(a, b, "x"), oracle::fischer_by_differentiation(a, b, "x"));
    Polynomial c = support::random_poly(rng, csys, 6, 4);
    Polynomial d = support::random_poly(rng, csys, 6, 4);
    EXPECT_EQ(fischer_pairing(c, d, "z"), oracle::fischer_by_differentiation(c, d, "z"));
  }
}

TEST(Fischer, ConjugateSymmetricAndPositive) {
  std::mt19937_64 rng(12);
  auto x = xs(3);
  auto z = zs(2);
  for (int i = 0; i < 20; ++i) {
    Polynomial a = support::random_homogeneous(rng, x, "x", 3);
    Polynomial b = support::random_homogeneous(rng, x, "x", 3);
    EXPECT_EQ(fischer_real(a, b, "x"), fischer_real(b, a, "x").conj());
    Scalar aa = fischer_real(a, a, "x");
    EXPECT_TRUE(aa.is_real());
    EXPECT_GT(aa.re(), 0);
    Polynomial c = support::random_homogeneous(rng, z, "z", 2, 1);
    Polynomial d = support::random_homogeneous(rng, z, "z", 2, 1);
    EXPECT_EQ(fischer_complex(c, d, "z"), fischer_complex(d, c, "z").conj());
    Scalar cc = fischer_complex(c, c, "z");
    EXPECT_TRUE(cc.is_real());
    EXPECT_GT(cc.re(), 0);
  }
}

TEST(Fischer, DualityOnRandomInputs) {
  std::mt19937_64 rng(14);
  for (int m : {3, 4, 5}) {
    auto x = xs(m);
    Polynomial r2 = norm_sq(x, "x");
    for (int i = 0; i < 20; ++i) {
      const int k = static_cast<int>(rng() % 4);
      Polynomial p = support::random_homogeneous(rng, x, "x", k);
      Polynomial q = support::random_homogeneous(rng, x, "x", k + 2);
      EXPECT_EQ(fischer_real(r2 * p, q, "x"), fischer_real(p, laplacian(q, "x"), "x"));
    }
  }
}

TEST(SphereMean, Examples) {
  auto x = xs(3);
  EXPECT_EQ(sphere_mean(P("1", x), "x"), P("1", x));
  for (int m : {2, 3, 4, 5, 7}) {
    auto xm = xs(m);
    EXPECT_EQ(sphere_mean(P("x[1]^2", xm), "x"), Scalar(rational(1, m)) * P("1", xm));
  }
  EXPECT_EQ(sphere_mean(P("x[1]^4", x), "x"), P("1/5", x));
  EXPECT_EQ(sphere_mean(P("x[1]^3*x[2]", x), "x"), Polynomial(x));
}

TEST(SphereMean, MatchesMomentFormulaOnMonomials) {
  for (int m : {2, 3, 4, 5}) {
    auto x = xs(m);
    for (int d = 0; d <= 6; ++d)
      for (const auto& e : oracle::real_basis(m, d)) {
        Monomial mono;
        for (int j = 0; j < m; ++j) mono = mono * Monomial::of(x->symbol("x", j), static_cast<unsigned>(e[static_cast<std::size_t>(j)]));
        EXPECT_EQ(sphere_mean(Polynomial::monomial(x, mono), "x"), Scalar(oracle::real_moment(e)) * P("1", x));
      }
  }
  for (int n : {1, 2, 3}) {
    auto z = zs(n);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (const auto& e : oracle::complex_basis(n, p, q)) {
          Monomial mono;
          for (int j = 0; j < n; ++j) {
            mono = mono * Monomial::of(z->symbol("z", j), static_cast<unsigned>(e[static_cast<std::size_t>(j)]));
            mono = mono * Monomial::of(z->symbol("z", j, true), static_cast<unsigned>(e[static_cast<std::size_t>(n + j)]));
          }
          oracle::Exps a(e.begin(), e.begin() + n), b(e.begin() + n, e.end());
          EXPECT_EQ(sphere_mean(Polynomial::monomial(z, mono), "z"), Scalar(oracle::complex_moment(a, b)) * P("1", z));
        }
  }
}

TEST(SphereMean, MatchesLiteralLaplacianSeries) {
  std::mt19937_64 rng(16);
  for (int m : {3, 4, 6}) {
    auto x = xs(m);
    for (int i = 0; i < 10; ++i) {
      Polynomial p = support::random_poly(rng, x, 10, 6);
      EXPECT_EQ(sphere_mean(p, "x"), oracle::literal_sphere_mean(p, "x"));
    }
  }
}

TEST(SphereMean, ParametersPassThrough) {
  auto sys = VariableSystem::make({{"x", 3, Kind::real}, {"y", 3, Kind::real}});
  // mean over x of <x,y>^2 = |y|^2 / 3
  Polynomial xy = dot(vec(sys, "x"), vec(sys, "y"));
  EXPECT_EQ(sphere_mean(xy * xy, "x"), Scalar(Q(1, 3)) * norm_sq(sys, "y"));
}

TEST(SphericalInner, Examples) {
  auto x = xs(3);
  EXPECT_EQ(spherical_inner(P("x[1]", x), P("x[1]", x), "x"), P("1/3", x));
  EXPECT_EQ(spherical_inner(P("x[1]", x), P("x[2]", x), "x"), Polynomial(x));
  // 2^1 (m/2)_1 <x1, x1>_S = <x1, x1>_F
  Scalar lhs = Scalar(Rational(2) * pochhammer(Q(3, 2), 1)) * spherical_inner(P("x[1]", x), P("x[1]", x), "x").coefficient(Monomial{});
  EXPECT_EQ(lhs, fischer_real(P("x[1]", x), P("x[1]", x), "x"));
}

TEST(SphericalInner, EqualsMeanOfConjugateProduct) {
  std::mt19937_64 rng(18);
  auto sys = VariableSystem::make({{"z", 2, Kind::complex}, {"u", 2, Kind::complex}});
  for (int i = 0; i < 10; ++i) {
    Polynomial a = support::random_poly(rng, sys, 6, 4);
    Polynomial b = support::random_poly(rng, sys, 6, 4);
    EXPECT_EQ(spherical_inner(a, b, "z"), sphere_mean(conjugate(a) * b, "z"));
  }
}

TEST(Proportionality, RealOnRandomHarmonics) {
  for (int m : {3, 4, 5})
    for (int k = 0; k <= 4; ++k) {
      auto x = xs(m);
      KernelParams kp = KernelParams::real(m, k);
      const Rational factor = Rational(mpz_class(1) << k) * pochhammer(rational(m, 2), static_cast<unsigned>(k));
      for (int i = 0; i < 20; ++i) {
        Polynomial h = random_poly(1000 + static_cast<std::uint64_t>(i), kp, RandomFlavor::harmonic, x, "x");
        Polynomial p = random_poly(2000 + static_cast<std::uint64_t>(i), kp, RandomFlavor::homogeneous, x, "x");
        Scalar sph = spherical_inner(h, p, "x").coefficient(Monomial{});
        EXPECT_EQ(Scalar(factor) * sph, fischer_real(h, p, "x"));
        if (k >= 2) {
          Polynomial other = random_poly(3000 + static_cast<std::uint64_t>(i), KernelParams::real(m, k - 2), RandomFlavor::harmonic, x, "x");
          EXPECT_TRUE(spherical_inner(h, other, "x").is_zero());
          EXPECT_TRUE(fischer_real(h, other, "x").is_zero());
        }
      }
    }
}

TEST(Proportionality, ComplexOnRandomHarmonics) {
  for (int n : {2, 3})
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        auto z = zs(n);
        KernelParams kp = KernelParams::complex(n, p, q);
        const Rational factor = pochhammer(Rational(n), static_cast<unsigned>(p + q));
        for (int i = 0; i < 20; ++i) {
          Polynomial h = random_poly(4000 + static_cast<std::uint64_t>(i), kp, RandomFlavor::harmonic, z, "z");
          Polynomial r = random_poly(5000 + static_cast<std::uint64_t>(i), kp, RandomFlavor::homogeneous, z, "z");
          Scalar sph = spherical_inner(h, r, "z").coefficient(Monomial{});
          EXPECT_EQ(Scalar(factor) * sph, fischer_complex(h, r, "z"));
        }
      }
}
