// Small helpers shared by the test binaries.

#ifndef HK_TESTS_SUPPORT_HPP
#define HK_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "hk/hk.hpp"

namespace support {

inline hk::Polynomial P(const std::string& text, const hk::SystemRef& sys) { return hk::parse(text, sys); }

inline hk::Rational Q(long n, long d = 1) { return hk::rational(n, d); }

/// Random polynomial with `terms` terms of total degree <= `maxdeg` over every
/// symbol of the system; Gaussian-integer coefficients in [-4, 4].
inline hk::Polynomial random_poly(std::mt19937_64& rng, const hk::SystemRef& sys, int terms, int maxdeg,
                                  bool complex_coeffs = true) {
  hk::PolynomialBuilder b(sys);
  const int n = sys->symbol_count();
  for (int t = 0; t < terms; ++t) {
    hk::Monomial m;
    const int deg = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (int i = 0; i < deg; ++i) {
      hk::Symbol s{static_cast<std::uint16_t>(rng() % static_cast<unsigned>(n))};
      m = m * hk::Monomial::of(s);
    }
    long re = static_cast<long>(rng() % 9) - 4;
    long im = complex_coeffs ? static_cast<long>(rng() % 9) - 4 : 0;
    b.add(m, hk::Scalar(hk::Rational(re), hk::Rational(im)));
  }
  return std::move(b).build();
}

/// Random homogeneous polynomial of the given degree in one real group.
inline hk::Polynomial random_homogeneous(std::mt19937_64& rng, const hk::SystemRef& sys, const std::string& group,
                                        int p, int q = 0) {
  hk::PolynomialBuilder b(sys);
  for (const auto& m : hk::monomial_basis(*sys, group, p, q)) {
    long re = static_cast<long>(rng() % 9) - 4;
    long im = static_cast<long>(rng() % 9) - 4;
    b.add(m, hk::Scalar(hk::Rational(re), hk::Rational(im)));
  }
  return std::move(b).build();
}

}  // namespace support

#define EXPECT_POLY_EQ(a, b) EXPECT_EQ(hk::format(a), hk::format(b))

#endif  // HK_TESTS_SUPPORT_HPP
