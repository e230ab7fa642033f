#ifndef HK_VERIFY_HPP
#define HK_VERIFY_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hk/harmonics.hpp"
#include "hk/linalg.hpp"
#include "hk/pizzetti.hpp"
#include "hk/text.hpp"

namespace hk::verify {

enum class Status { pass, fail, skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

/// {case, m, k} or {case, n, p, q}.
inline nlohmann::ordered_json params_json(const KernelParams& kp) {
  nlohmann::ordered_json pj;
  pj["case"] = hk::to_string(kp.kind);
  if (kp.kind == Case::real) {
    pj["m"] = kp.dim;
    pj["k"] = kp.k;
  } else {
    pj["n"] = kp.dim;
    pj["p"] = kp.p;
    pj["q"] = kp.q;
  }
  return pj;
}

struct Witness {
  std::string monomial;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct Report {
  std::string identity_id;
  KernelParams params;
  Status status = Status::pass;
  std::optional<Witness> witness;
  long elapsed_ms = 0;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> resolution_notes;

  nlohmann::ordered_json to_json(bool timing) const {
    nlohmann::ordered_json j;
    j["identity_id"] = identity_id;
    j["params"] = params_json(params);
    j["status"] = to_string(status);
    if (witness) {
      j["witness"] = {{"monomial", witness->monomial}, {"lhs", witness->lhs}, {"rhs", witness->rhs},
                      {"detail", witness->detail}};
    }
    j["elapsed_ms"] = timing ? elapsed_ms : 0;
    if (seed) j["seed"] = *seed;
    j["resolution_notes"] = resolution_notes;
    return j;
  }
};

/// Thrown by Checker on the first mismatch of a task.
struct CheckFailure {
  Witness witness;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of one (identity, params) task derived from the run seed.
inline std::uint64_t task_seed(std::uint64_t base, const std::string& id, const KernelParams& kp) {
  std::uint64_t h = splitmix64(base ^ fnv1a(id));
  h = splitmix64(h ^ static_cast<std::uint64_t>(kp.kind));
  h = splitmix64(h ^ static_cast<std::uint64_t>(kp.dim));
  h = splitmix64(h ^ static_cast<std::uint64_t>(kp.k));
  h = splitmix64(h ^ static_cast<std::uint64_t>(kp.p));
  return splitmix64(h ^ static_cast<std::uint64_t>(kp.q));
}

struct Options {
  std::uint64_t seed = 42;
  int jobs = 1;
  std::size_t max_terms = 0;
  int samples = 5;      // random inputs per reproduction check
  int op_samples = 20;  // random inputs per operator identity
  bool timing = false;
};

/// Per-task helper: seeded sample streams, exact comparisons, notes.
class Checker {
 public:
  Checker(std::uint64_t seed, const Options& opts) : seed_(seed), opts_(opts) { limits_.max_terms = opts.max_terms; }

  std::uint64_t sample_seed(std::uint64_t stream, int i) const {
    return splitmix64(splitmix64(seed_ ^ (stream * 0x9e3779b97f4a7c15ULL)) + static_cast<std::uint64_t>(i));
  }
  const Options& options() const noexcept { return opts_; }
  const Limits& limits() const noexcept { return limits_; }
  std::vector<std::string>& notes() noexcept { return notes_; }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  void equal(const Polynomial& lhs, const Polynomial& rhs, const std::string& detail) const {
    limits_.check(lhs, "left-hand side");
    limits_.check(rhs, "right-hand side");
    if (lhs == rhs) return;
    throw CheckFailure{witness(lhs, rhs, detail)};
  }

  void equal(const Scalar& lhs, const Scalar& rhs, const std::string& detail) const {
    if (lhs == rhs) return;
    throw CheckFailure{Witness{"1", lhs.to_string(), rhs.to_string(), detail}};
  }

  void that(bool cond, const std::string& detail) const {
    if (!cond) throw CheckFailure{Witness{"", "", "", detail}};
  }

  static Witness witness(const Polynomial& lhs, const Polynomial& rhs, const std::string& detail) {
    Polynomial diff = lhs - rhs;
    const Monomial& m = diff.terms().front().first;
    return Witness{format(Polynomial::monomial(lhs.system(), m)), lhs.coefficient(m).to_string(),
                   rhs.coefficient(m).to_string(), detail};
  }

 private:
  std::uint64_t seed_;
  Options opts_;
  Limits limits_;
  std::vector<std::string> notes_;
};

struct Task {
  std::string id;
  KernelParams params;
  bool seeded = false;
  std::function<void(Checker&)> body;
};

/// Parameter grid restriction from the command line; empty fields use defaults.
struct Selection {
  std::optional<Case> only_case;
  std::vector<int> m;
  std::vector<int> n;
  std::optional<int> k;
  std::optional<int> kmax;
  std::optional<int> p;
  std::optional<int> q;
};

enum class Suite { all, spherical, complex, symplectic, pizzetti, planewave };

inline std::optional<Suite> parse_suite(const std::string& s) {
  if (s == "all") return Suite::all;
  if (s == "spherical") return Suite::spherical;
  if (s == "complex") return Suite::complex;
  if (s == "symplectic") return Suite::symplectic;
  if (s == "pizzetti") return Suite::pizzetti;
  if (s == "planewave") return Suite::planewave;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Grids

inline std::vector<int> range_to(int hi) {
  std::vector<int> v;
  for (int i = 0; i <= hi; ++i) v.push_back(i);
  return v;
}

inline std::vector<KernelParams> real_grid(const Selection& sel, int default_kmax = 4) {
  std::vector<int> ms = sel.m.empty() ? std::vector<int>{3, 4, 5} : sel.m;
  std::vector<int> ks = sel.k ? std::vector<int>{*sel.k} : range_to(sel.kmax.value_or(default_kmax));
  std::vector<KernelParams> out;
  for (int m : ms)
    for (int k : ks) out.push_back(KernelParams::real(m, k));
  return out;
}

inline std::vector<KernelParams> complex_grid(const Selection& sel) {
  std::vector<int> ns = sel.n.empty() ? std::vector<int>{2, 3} : sel.n;
  const int hi = sel.kmax.value_or(3);
  std::vector<int> ps = sel.p ? std::vector<int>{*sel.p} : range_to(hi);
  std::vector<int> qs = sel.q ? std::vector<int>{*sel.q} : range_to(hi);
  std::vector<KernelParams> out;
  for (int n : ns)
    for (int p : ps)
      for (int q : qs) out.push_back(KernelParams::complex(n, p, q));
  return out;
}

/// n = 1: p <= q, p + q <= 5; n >= 2: p <= q <= cap.
inline std::vector<KernelParams> symplectic_grid(const Selection& sel, int cap = 2) {
  std::vector<int> ns = sel.n.empty() ? std::vector<int>{1, 2} : sel.n;
  std::vector<KernelParams> out;
  for (int n : ns) {
    if (sel.p || sel.q) {
      out.push_back(KernelParams::symplectic(n, sel.p.value_or(0), sel.q.value_or(0)));
      continue;
    }
    for (int p = 0; p <= 5; ++p)
      for (int q = p; q <= 5; ++q) {
        if (n == 1 && p + q > 5) continue;
        if (n >= 2 && q > cap) continue;
        if (sel.kmax && p + q > *sel.kmax) continue;
        out.push_back(KernelParams::symplectic(n, p, q));
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace detail {

inline Polynomial one(const SystemRef& sys) { return Polynomial::constant(sys, Scalar(1)); }

inline std::string bideg(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Parameters for a random draw of another degree in the same space family.
inline KernelParams with_degree(const KernelParams& kp, int p, int q) {
  switch (kp.kind) {
    case Case::real: return KernelParams::real(kp.dim, p);
    case Case::complex: return KernelParams::complex(kp.dim, p, q);
    case Case::symplectic: return KernelParams::symplectic(kp.dim, p, q);
  }
  return kp;
}

inline Polynomial draw(const Checker& c, std::uint64_t stream, int i, const KernelParams& kp, RandomFlavor flavor,
                       const SystemRef& sys, std::string_view group) {
  return random_poly(c.sample_seed(stream, i), kp, flavor, sys, group);
}

/// The complex-space parameters underlying a symplectic parameter set.
inline KernelParams as_complex(const KernelParams& kp) {
  return kp.kind == Case::symplectic ? KernelParams::complex(kp.complex_dim(), kp.p, kp.q) : kp;
}

inline Polynomial scalar_poly(const SystemRef& sys, const Scalar& s) { return Polynomial::constant(sys, s); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Real (spherical) identities

namespace spherical {

inline void reproduction(Checker& c, const KernelParams& kp, int jmax) {
  SystemRef sys = kernel_system(kp);
  Polynomial K = kernel(kp, KernelKind::K, sys);
  for (int j = 0; j <= jmax; ++j) {
    for (int i = 0; i < c.options().samples; ++i) {
      Polynomial H = detail::draw(c, static_cast<std::uint64_t>(j), i, detail::with_degree(kp, j, 0), RandomFlavor::harmonic, sys, "x");
      Polynomial rhs = j == kp.k ? rename_group(H, "x", "y") : Polynomial(sys);
      c.equal(spherical_inner(K, H, "x"), rhs, "<K_k, H_j>_S, j=" + std::to_string(j) + " sample " + std::to_string(i));
    }
  }
}

inline void fischer_reproduction(Checker& c, const KernelParams& kp, int jmax) {
  SystemRef sys = kernel_system(kp);
  Polynomial Z = kernel(kp, KernelKind::Z, sys);
  for (int j = 0; j <= jmax; ++j) {
    for (int i = 0; i < c.options().samples; ++i) {
      Polynomial P = detail::draw(c, static_cast<std::uint64_t>(j), i, detail::with_degree(kp, j, 0), RandomFlavor::homogeneous, sys, "x");
      Polynomial rhs = j == kp.k ? rename_group(P, "x", "y") : Polynomial(sys);
      c.equal(fischer_pairing(Z, P, "x"), rhs, "<Z_k, P_j>_F, j=" + std::to_string(j) + " sample " + std::to_string(i));
    }
  }
}

inline void proportionality(Checker& c, const KernelParams& kp, int jmax) {
  SystemRef sys = VariableSystem::make({{"x", kp.dim, Kind::real}});
  const Rational factor = pochhammer(rational(kp.dim, 2), static_cast<unsigned>(kp.k)) * Rational(mpz_class(1) << kp.k);
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial H = detail::draw(c, 0, i, kp, RandomFlavor::harmonic, sys, "x");
    for (int j = 0; j <= std::max(jmax, kp.k); ++j) {
      // off the diagonal only harmonics are sphere-orthogonal to H
      const RandomFlavor fl = j == kp.k ? RandomFlavor::homogeneous : RandomFlavor::harmonic;
      Polynomial P = detail::draw(c, 1 + static_cast<std::uint64_t>(j), i, detail::with_degree(kp, j, 0), fl, sys, "x");
      Scalar fis = fischer_real(H, P, "x");
      Polynomial sph = spherical_inner(H, P, "x");
      std::string where = "H_k vs P_j, j=" + std::to_string(j) + " sample " + std::to_string(i);
      if (j == kp.k) {
        c.equal(Scalar(factor) * sph, detail::scalar_poly(sys, fis), "2^k (m/2)_k <H,P>_S = <H,P>_F, " + where);
      } else {
        c.equal(sph, Polynomial(sys), "<H,P>_S = 0, " + where);
        c.equal(fis, Scalar(0), "<H,P>_F = 0, " + where);
      }
    }
  }
}

inline void fischer_duality(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"x", kp.dim, Kind::real}});
  Polynomial r2 = norm_sq(sys, "x");
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial P = detail::draw(c, 0, i, kp, RandomFlavor::homogeneous, sys, "x");
    Polynomial Q = detail::draw(c, 1, i, detail::with_degree(kp, kp.k + 2, 0), RandomFlavor::homogeneous, sys, "x");
    c.equal(fischer_real(r2 * P, Q, "x"), fischer_real(P, laplacian(Q, "x"), "x"),
            "<|x|^2 P, Q>_F = <P, Lap Q>_F, sample " + std::to_string(i));
  }
}

inline void projector(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"x", kp.dim, Kind::real}});
  Polynomial r2 = norm_sq(sys, "x");
  const int k = kp.k;
  for (int i = 0; i < c.options().op_samples; ++i) {
    // Proj^k_ell (|x|^{2j} H_{k-2j}) = delta_{j ell} H_{k-2j}
    for (int j = 0; 2 * j <= k; ++j) {
      Polynomial H = detail::draw(c, 1 + static_cast<std::uint64_t>(j), i, detail::with_degree(kp, k - 2 * j, 0), RandomFlavor::harmonic, sys, "x");
      c.equal(laplacian(H, "x"), Polynomial(sys), "random harmonic is harmonic");
      Polynomial P = power(r2, static_cast<unsigned>(j)) * H;
      for (int ell = 0; 2 * ell <= k; ++ell)
        c.equal(proj_harmonic_real(P, "x", ell), ell == j ? H : Polynomial(sys),
                "Proj^k_" + std::to_string(ell) + "(|x|^" + std::to_string(2 * j) + " H), sample " + std::to_string(i));
    }
    Polynomial P = detail::draw(c, 0, i, kp, RandomFlavor::homogeneous, sys, "x");
    Polynomial once = proj_harmonic_real(P, "x");
    c.equal(laplacian(once, "x"), Polynomial(sys), "Proj^k_0 P is harmonic, sample " + std::to_string(i));
    c.equal(proj_harmonic_real(once, "x"), once, "Proj^k_0 idempotent, sample " + std::to_string(i));
    auto parts = decompose(P, "x", Flavor::real);
    Polynomial sum(sys);
    for (const auto& q : parts) sum += q;
    c.equal(sum, P, "decomposition sums to P, sample " + std::to_string(i));
  }
  c.equal(proj_harmonic_real(r2 * power(r2, static_cast<unsigned>(std::max(0, k / 2 - 1))), "x"),
          k >= 2 && k % 2 == 0 ? Polynomial(sys) : proj_harmonic_real(r2 * power(r2, static_cast<unsigned>(std::max(0, k / 2 - 1))), "x"),
          "radial annihilation");
}

inline void kernel_projection(Checker& c, const KernelParams& kp) {
  SystemRef sys = kernel_system(kp);
  Polynomial K = kernel(kp, KernelKind::K, sys);
  Polynomial Z = kernel(kp, KernelKind::Z, sys);
  Rational ck = pochhammer(rational(kp.dim, 2), static_cast<unsigned>(kp.k)) * Rational(mpz_class(1) << kp.k);
  c.equal(K, Scalar(ck) * proj_harmonic_real(Z, "x"), "K_k = 2^k (m/2)_k Proj^k_0 Z_k");
  c.equal(swap_parameters(K), K, "K_k(x,y) = K_k(y,x)");
  c.equal(laplacian(K, "x"), Polynomial(sys), "K_k harmonic in x");
}

/// Seeded skew-symmetric matrix with entries in [-2, 2].
inline RationalMatrix random_skew(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  RationalMatrix s(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      s[i][j] = static_cast<long>(rng() % 5) - 2;
      s[j][i] = -s[i][j];
    }
  return s;
}

inline void kernel_rotation(Checker& c, const KernelParams& kp) {
  SystemRef sys = kernel_system(kp);
  Polynomial K = kernel(kp, KernelKind::K, sys);
  const int rotations = std::min(c.options().samples, 2);
  for (int i = 0; i < rotations; ++i) {
    RationalMatrix r = cayley_orthogonal(random_skew(c.sample_seed(0, i), kp.dim));
    c.that(multiply(transpose(r), r) == identity_matrix(r.size()), "Cayley transform is orthogonal");
    c.equal(transform_group(transform_group(K, "x", r), "y", r), K, "K_k(Rx, Ry) = K_k(x, y), sample " + std::to_string(i));
  }
}

inline void dimension(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"x", kp.dim, Kind::real}});
  auto basis = monomial_basis(*sys, "x", kp.k);
  std::size_t nul = joint_nullity(sys, basis, {[](const Polynomial& p) { return laplacian(p, "x"); }});
  long closed = dim_formulas(kp, DimKind::spherical);
  c.equal(Scalar(static_cast<long>(nul)), Scalar(closed), "dim H_k: nullity of Laplacian vs closed form");
  Rational total = 0;
  for (int j = 0; 2 * j <= kp.k; ++j) total += dim_spherical(kp.dim, kp.k - 2 * j);
  c.equal(Scalar(total), Scalar(dim_homogeneous(kp.dim, kp.k)), "sum_j dim H_{k-2j} = dim P_k");
}

}  // namespace spherical

// ---------------------------------------------------------------------------
// Complex identities

namespace complexh {

inline void reproduction(Checker& c, const KernelParams& kp, int dmax) {
  SystemRef sys = kernel_system(kp);
  Polynomial K = kernel(kp, KernelKind::K, sys);
  for (int r = 0; r <= dmax; ++r)
    for (int s = 0; s <= dmax; ++s)
      for (int i = 0; i < c.options().samples; ++i) {
        Polynomial H = detail::draw(c, static_cast<std::uint64_t>(16 * r + s), i, detail::with_degree(kp, r, s), RandomFlavor::harmonic, sys, "z");
        Polynomial rhs = (r == kp.p && s == kp.q) ? rename_group(H, "z", "u") : Polynomial(sys);
        c.equal(spherical_inner(K, H, "z"), rhs, "<K_pq, H_" + detail::bideg(r, s) + ">_S sample " + std::to_string(i));
      }
}

inline void fischer_reproduction(Checker& c, const KernelParams& kp, int dmax) {
  SystemRef sys = kernel_system(kp);
  Polynomial Z = kernel(kp, KernelKind::Z, sys);
  for (int r = 0; r <= dmax; ++r)
    for (int s = 0; s <= dmax; ++s)
      for (int i = 0; i < c.options().samples; ++i) {
        Polynomial P = detail::draw(c, static_cast<std::uint64_t>(16 * r + s), i, detail::with_degree(kp, r, s), RandomFlavor::homogeneous, sys, "z");
        Polynomial rhs = (r == kp.p && s == kp.q) ? rename_group(P, "z", "u") : Polynomial(sys);
        c.equal(fischer_pairing(Z, P, "z"), rhs, "<Z_pq, P_" + detail::bideg(r, s) + ">_F sample " + std::to_string(i));
      }
}

inline void proportionality(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"z", kp.complex_dim(), Kind::complex}});
  const Rational factor = pochhammer(Rational(kp.complex_dim()), static_cast<unsigned>(kp.p + kp.q));
  const KernelParams other = detail::with_degree(kp, kp.q, kp.p);
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial H = detail::draw(c, 0, i, kp, RandomFlavor::harmonic, sys, "z");
    Polynomial P = detail::draw(c, 1, i, kp, RandomFlavor::homogeneous, sys, "z");
    c.equal(Scalar(factor) * spherical_inner(H, P, "z"), detail::scalar_poly(sys, fischer_complex(H, P, "z")),
            "(N)_{p+q} <H,P>_S = <H,P>_F, sample " + std::to_string(i));
    if (kp.p != kp.q) {
      Polynomial Q = detail::draw(c, 2, i, other, RandomFlavor::homogeneous, sys, "z");
      c.equal(spherical_inner(H, Q, "z"), Polynomial(sys), "cross-bidegree <H,P>_S = 0, sample " + std::to_string(i));
      c.equal(fischer_complex(H, Q, "z"), Scalar(0), "cross-bidegree <H,P>_F = 0, sample " + std::to_string(i));
    }
    Polynomial Q = detail::draw(c, 3, i, detail::with_degree(kp, kp.p + 1, kp.q + 1), RandomFlavor::homogeneous, sys, "z");
    c.equal(fischer_complex(norm_sq(sys, "z") * P, Q, "z"), fischer_complex(P, laplacian(Q, "z"), "z"),
            "<|z|^2 P, Q>_F = <P, Lap_z Q>_F, sample " + std::to_string(i));
    c.equal(fischer_complex(P, Q * Polynomial(sys), "z"), Scalar(0), "zero pairing");
    c.equal(fischer_complex(P, H, "z"), fischer_complex(H, P, "z").conj(), "conjugate symmetry, sample " + std::to_string(i));
    Scalar pp = fischer_complex(P, P, "z");
    c.that(pp.is_real() && sgn(pp.re()) > 0, "<P,P>_F positive, sample " + std::to_string(i));
  }
}

inline void projector(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"z", kp.complex_dim(), Kind::complex}});
  Polynomial r2 = norm_sq(sys, "z");
  const int nu = std::min(kp.p, kp.q);
  for (int i = 0; i < c.options().op_samples; ++i) {
    for (int j = 0; j <= nu; ++j) {
      Polynomial H = detail::draw(c, 1 + static_cast<std::uint64_t>(j), i, detail::with_degree(kp, kp.p - j, kp.q - j), RandomFlavor::harmonic, sys, "z");
      c.equal(laplacian(H, "z"), Polynomial(sys), "random harmonic is harmonic");
      Polynomial P = power(r2, static_cast<unsigned>(j)) * H;
      for (int ell = 0; ell <= nu; ++ell)
        c.equal(proj_harmonic_complex(P, "z", ell), ell == j ? H : Polynomial(sys),
                "Proj^{p,q}_" + std::to_string(ell) + "(|z|^" + std::to_string(2 * j) + " H), sample " + std::to_string(i));
    }
    Polynomial P = detail::draw(c, 0, i, kp, RandomFlavor::homogeneous, sys, "z");
    Polynomial once = proj_harmonic_complex(P, "z");
    c.equal(laplacian(once, "z"), Polynomial(sys), "Proj_0 P harmonic, sample " + std::to_string(i));
    c.equal(proj_harmonic_complex(once, "z"), once, "Proj_0 idempotent, sample " + std::to_string(i));
    auto parts = decompose(P, "z", Flavor::complex);
    Polynomial sum(sys);
    for (const auto& q : parts) sum += q;
    c.equal(sum, P, "decomposition sums to P, sample " + std::to_string(i));
  }
}

inline void kernel_projection(Checker& c, const KernelParams& kp) {
  SystemRef sys = kernel_system(kp);
  Polynomial K = kernel(kp, KernelKind::K, sys);
  Polynomial Z = kernel(kp, KernelKind::Z, sys);
  Rational ck = pochhammer(Rational(kp.complex_dim()), static_cast<unsigned>(kp.p + kp.q));
  c.equal(K, Scalar(ck) * proj_harmonic_complex(Z, "z"), "K_pq = (N)_{p+q} Proj_0 Z_pq");
  c.equal(conjugate(K), swap_parameters(K), "conj K_pq(z,u) = K_pq(u,z)");
  c.equal(laplacian(K, "z"), Polynomial(sys), "K_pq harmonic in z");
}

inline void dimension(Checker& c, const KernelParams& kp) {
  SystemRef sys = VariableSystem::make({{"z", kp.complex_dim(), Kind::complex}});
  auto basis = monomial_basis(*sys, "z", kp.p, kp.q);
  std::size_t nul = joint_nullity(sys, basis, {[](const Polynomial& p) { return laplacian(p, "z"); }});
  c.equal(Scalar(static_cast<long>(nul)), Scalar(dim_formulas(kp, DimKind::complex_bidegree)),
          "dim H_pq: nullity of Lap_z vs closed form");
  Rational total = 0;
  for (int j = 0; j <= std::min(kp.p, kp.q); ++j) total += dim_complex(kp.complex_dim(), kp.p - j, kp.q - j);
  c.equal(Scalar(total), Scalar(dim_bihomogeneous(kp.complex_dim(), kp.p, kp.q)), "sum_j dim H_{p-j,q-j} = dim P_pq");
}

}  // namespace complexh

// ---------------------------------------------------------------------------
// Symplectic identities (complex group of length 2n)

namespace symplectic {

inline SystemRef z_system(const KernelParams& kp) {
  return VariableSystem::make({{"z", kp.complex_dim(), Kind::complex}});
}

inline Polynomial hol_minus_anti(const Polynomial& p) {
  return euler(p, "z", EulerVariant::antiholomorphic) - euler(p, "z", EulerVariant::holomorphic);
}

inline void sl2(Checker& c, const KernelParams& kp) {
  SystemRef sys = z_system(kp);
  Polynomial r2 = norm_sq(sys, "z");
  auto E = [](const Polynomial& p) { return twist(p, "z", Twist::E); };
  auto Ed = [](const Polynomial& p) { return twist(p, "z", Twist::Edag); };
  auto lap = [](const Polynomial& p) { return laplacian(p, "z"); };
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial P = detail::draw(c, 0, i, detail::as_complex(kp), RandomFlavor::homogeneous, sys, "z");
    const std::string at = ", sample " + std::to_string(i);
    c.equal(hol_minus_anti(Ed(P)) - Ed(hol_minus_anti(P)), Scalar(2) * Ed(P), "[H, E^dag] = 2 E^dag" + at);
    c.equal(hol_minus_anti(E(P)) - E(hol_minus_anti(P)), Scalar(-2) * E(P), "[H, E] = -2 E" + at);
    c.equal(Ed(E(P)) - E(Ed(P)), hol_minus_anti(P), "[E^dag, E] = H" + at);
    c.equal(E(lap(P)), lap(E(P)), "E commutes with Lap_z" + at);
    c.equal(Ed(lap(P)), lap(Ed(P)), "E^dag commutes with Lap_z" + at);
    c.equal(E(r2 * P), r2 * E(P), "E commutes with |z|^2" + at);
    c.equal(Ed(r2 * P), r2 * Ed(P), "E^dag commutes with |z|^2" + at);
  }
}

inline void kappa_relation(Checker& c, const KernelParams& kp) {
  if (kp.p > kp.q) return;
  SystemRef sys = z_system(kp);
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial R = detail::draw(c, 0, i, kp, RandomFlavor::symplectic, sys, "z");
    c.equal(twist(R, "z", Twist::Edag), Polynomial(sys), "random symplectic R in ker E^dag");
    for (int b = 0; b <= 3; ++b) {
      Polynomial Eb = twist_power(R, "z", Twist::E, b);
      for (int a = 0; a <= 3; ++a) {
        Polynomial lhs = twist_power(Eb, "z", Twist::Edag, a);
        Polynomial rhs = a > b ? Polynomial(sys)
                               : Scalar(kappa(kp.p, kp.q, a, b)) * twist_power(R, "z", Twist::E, b - a);
        c.equal(lhs, rhs, "(E^dag)^" + std::to_string(a) + " E^" + std::to_string(b) + " R, sample " + std::to_string(i));
      }
    }
  }
}

inline void projector(Checker& c, const KernelParams& kp) {
  SystemRef sys = z_system(kp);
  const Orientation o = natural_orientation(kp.p, kp.q);
  const Twist lower = o == Orientation::Edag ? Twist::Edag : Twist::E;
  const Twist raise = o == Orientation::Edag ? Twist::E : Twist::Edag;
  for (int i = 0; i < c.options().op_samples; ++i) {
    const std::string at = ", sample " + std::to_string(i);
    Polynomial P = detail::draw(c, 0, i, detail::as_complex(kp), RandomFlavor::homogeneous, sys, "z");
    Polynomial once = proj_symplectic(P, "z", o);
    c.equal(twist(once, "z", lower), Polynomial(sys), "projection lies in the kernel of the lowering twist" + at);
    c.equal(proj_symplectic(once, "z", o), once, "projector idempotent" + at);
    // Proj(raise^j R_{...}) = delta_{0j}
    const int lo = std::min(kp.p, kp.q);
    for (int j = 0; j <= lo; ++j) {
      KernelParams shifted = o == Orientation::Edag ? detail::with_degree(kp, kp.p - j, kp.q + j)
                                                    : detail::with_degree(kp, kp.p + j, kp.q - j);
      Polynomial R = detail::draw(c, 1 + static_cast<std::uint64_t>(j), i, shifted, RandomFlavor::symplectic, sys, "z");
      Polynomial ER = twist_power(R, "z", raise, j);
      c.equal(proj_symplectic(ER, "z", o), j == 0 ? ER : Polynomial(sys),
              "Proj(E^" + std::to_string(j) + " R)" + at);
    }
    if (o == Orientation::Edag) {
      auto parts = decompose(P, "z", Flavor::symplectic);
      Polynomial sum(sys);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        sum += parts[j];
        // component j = E^j R with R in ker E^dag: (E^dag)^{j+1} kills it
        c.equal(twist_power(parts[j], "z", Twist::Edag, static_cast<int>(j) + 1), Polynomial(sys),
                "component " + std::to_string(j) + " has the E^j R form" + at);
      }
      c.equal(sum, P, "symplectic decomposition sums to P" + at);
    }
  }
}

inline void fischer_reproduction(Checker& c, const KernelParams& kp) {
  if (kp.p > kp.q) return;
  SystemRef sys = kernel_system(kp);
  Polynomial ZS = kernel(kp, KernelKind::ZS, sys);
  for (int k = 0; k <= kp.p; ++k) {
    for (int i = 0; i < c.options().samples; ++i) {
      Polynomial R = detail::draw(c, static_cast<std::uint64_t>(k), i, detail::with_degree(kp, kp.p - k, kp.q + k), RandomFlavor::symplectic, sys, "z");
      Polynomial ER = twist_power(R, "z", Twist::E, k);
      Polynomial rhs = k == 0 ? rename_group(R, "z", "u") : Polynomial(sys);
      c.equal(fischer_pairing(ZS, ER, "z"), rhs, "<Z^S, E^" + std::to_string(k) + " R>_F, sample " + std::to_string(i));
    }
  }
}

inline void laplacian_ladder(Checker& c, const KernelParams& kp) {
  if (kp.p > kp.q) return;
  SystemRef sys = kernel_system(kp);
  Polynomial ZS = kernel(kp, KernelKind::ZS, sys);
  Polynomial lower = kp.p == 0 ? Polynomial(sys)
                               : norm_sq(sys, "u") * kernel(KernelParams::symplectic(kp.dim, kp.p - 1, kp.q - 1), KernelKind::ZS, sys);
  c.equal(laplacian(ZS, "z"), lower, "Lap_z Z^S_pq = |u|^2 Z^S_{p-1,q-1}");
}

/// Formula kernels vs the operator-projection path.
inline void closed_form(Checker& c, const KernelParams& kp) {
  SystemRef sys = kernel_system(kp);
  const int n = kp.dim;
  if (kp.p <= kp.q) {
    Polynomial Z = kernel(kp, KernelKind::Z, sys);
    Polynomial ZS = kernel(kp, KernelKind::ZS, sys);
    Polynomial KS = kernel(kp, KernelKind::KS, sys);
    c.equal(ZS, proj_symplectic(Z, "z"), "Z^S formula = Proj_{E^dag} Z_pq");
    Rational poch = pochhammer(Rational(2 * n), static_cast<unsigned>(kp.p + kp.q));
    c.equal(proj_harmonic_complex(ZS, "z"), Scalar(hs_proj_const(n, kp.p, kp.q) / ks_const(n, kp.p, kp.q)) * KS,
            "Proj_0 Z^S = (c/d) K^S");
    c.equal(KS, Scalar(poch) * proj_harmonic_complex(ZS, "z"), "K^S = (2n)_{p+q} Proj_0 Z^S");
    c.equal(KS, proj_symplectic(kernel(kp, KernelKind::K, sys), "z"), "K^S = Proj_{E^dag} K_pq");
    c.equal(laplacian(KS, "z"), Polynomial(sys), "K^S harmonic in z");
    c.equal(twist(KS, "z", Twist::Edag), Polynomial(sys), "K^S in ker E^dag");
    if (kp.p < kp.q) {
      Polynomial alt = kernel(kp, KernelKind::ZS, sys, ExcessFactor::z_ubar);
      DegreeProfile d = degree_profile(alt, "z");
      c.note("Z^S/K^S excess factor: <zbar,u>^{q-p} gives z-bidegree " + detail::bideg(kp.p, kp.q) +
             "; <z,ubar>^{q-p} gives " + d.to_string() + (alt == ZS ? " (same)" : " (differs)"));
    }
  } else {
    KernelParams mirror = KernelParams::symplectic(n, kp.q, kp.p);
    c.equal(kernel(kp, KernelKind::KS, sys), conjugate(kernel(mirror, KernelKind::KS, sys)), "K^S_{p,q} = conj K^S_{q,p}");
    c.equal(kernel(kp, KernelKind::ZS, sys), proj_symplectic(kernel(kp, KernelKind::Z, sys), "z", Orientation::E),
            "mirrored Z^S = Proj_E Z_pq");
  }
}

inline void reproduction(Checker& c, const KernelParams& kp) {
  SystemRef sys = kernel_system(kp);
  const int N = kp.complex_dim();
  const bool low = kp.p <= kp.q;
  const Twist raise = low ? Twist::E : Twist::Edag;
  Polynomial K = kernel(kp, KernelKind::KS, sys);
  Polynomial r2 = norm_sq(sys, "z");
  const int lo = std::min(kp.p, kp.q);
  for (int j = 0; j <= lo; ++j)
    for (int k = 0; j + k <= lo; ++k) {
      const int a = low ? kp.p - j - k : kp.p - j + k;
      const int b = low ? kp.q - j + k : kp.q - j - k;
      if (dim_symplectic_hs(N, a, b) == 0) continue;
      KernelParams sub = detail::with_degree(kp, a, b);
      for (int i = 0; i < c.options().samples; ++i) {
        Polynomial H = detail::draw(c, static_cast<std::uint64_t>(8 * j + k), i, sub, RandomFlavor::symplectic_harmonic, sys, "z");
        Polynomial test = power(r2, static_cast<unsigned>(j)) * twist_power(H, "z", raise, k);
        Polynomial rhs = (j == 0 && k == 0) ? rename_group(H, "z", "u") : Polynomial(sys);
        c.equal(spherical_inner(K, test, "z"), rhs,
                "<K^S, |z|^" + std::to_string(2 * j) + " E^" + std::to_string(k) + " H^S>_S, sample " + std::to_string(i));
      }
    }
  if (dim_symplectic_hs(N, kp.p, kp.q) == 0) {
    c.equal(K, Polynomial(sys), "H^S is zero-dimensional, so K^S must vanish");
    c.note("H^S_pq is zero-dimensional here; K^S = 0 verified");
  }
  if (low && kp.p < kp.q && dim_symplectic_hs(N, kp.p, kp.q) > 0) {
    Polynomial alt = kernel(kp, KernelKind::KS, sys, ExcessFactor::z_ubar);
    Polynomial H = detail::draw(c, 0, 0, kp, RandomFlavor::symplectic_harmonic, sys, "z");
    bool ok = spherical_inner(alt, H, "z") == rename_group(H, "z", "u");
    c.note(std::string("kernel orientation: <zbar,u>^{q-p} reproduces; <z,ubar>^{q-p} ") +
           (ok ? "also reproduces" : "does not reproduce"));
  }
}

inline void dimension(Checker& c, const KernelParams& kp) {
  SystemRef sys = z_system(kp);
  const int N = kp.complex_dim();
  auto basis = monomial_basis(*sys, "z", kp.p, kp.q);
  const Twist lower = kp.p <= kp.q ? Twist::Edag : Twist::E;
  LinearMap tw = [lower](const Polynomial& p) { return twist(p, "z", lower); };
  LinearMap lap = [](const Polynomial& p) { return laplacian(p, "z"); };
  std::size_t r = joint_nullity(sys, basis, {tw});
  std::size_t hs = joint_nullity(sys, basis, {tw, lap});
  c.equal(Scalar(static_cast<long>(r)), Scalar(dim_formulas(kp, DimKind::symplectic_r)), "dim R_pq: nullity of twist vs formula");
  c.equal(Scalar(static_cast<long>(hs)), Scalar(dim_formulas(kp, DimKind::symplectic_hs)), "dim H^S_pq: joint nullity vs formula");
  if (kp.p <= kp.q) {
    Rational sum_h = 0;
    for (int j = 0; j <= kp.p; ++j) sum_h += dim_symplectic_hs(N, kp.p - j, kp.q + j);
    c.equal(Scalar(sum_h), Scalar(dim_complex(N, kp.p, kp.q)), "dim H_pq = sum_j dim H^S_{p-j,q+j}");
    Rational sum_r = 0;
    for (int j = 0; j <= kp.p; ++j) sum_r += dim_symplectic_hs(N, kp.p - j, kp.q - j);
    c.equal(Scalar(sum_r), Scalar(dim_symplectic_r(N, kp.p, kp.q)), "dim R_pq = sum_j dim H^S_{p-j,q-j}");
  }
}

}  // namespace symplectic

// ---------------------------------------------------------------------------
// Stiefel / Pizzetti identities

namespace pizzetti {

/// Light-cone coordinates w = t + c s, v = t - c s on the plane-wave system
/// (c = i for the real wave, 1 for the complex one). Each linear form of a
/// plane wave involves only one of w, v, so the integrands stay small there.
/// Operators follow by the chain rule: d/dt -> d/dw + d/dv, d/ds -> c (d/dw - d/dv).
class LightCone {
 public:
  explicit LightCone(const KernelParams& kp) : ctx_(plane_wave_context(kp)) {
    const bool real = kp.kind == Case::real;
    const Kind kind = real ? Kind::real : Kind::complex;
    const int n = kp.complex_dim();
    sys_ = VariableSystem::make({{real ? "x" : "z", n, kind},
                                 {real ? "y" : "u", n, kind},
                                 {"s", n, kind},
                                 {"t", n, kind},
                                 {"w", n, kind},
                                 {"v", n, kind}});
    const Scalar cs = real ? Scalar::imaginary_unit() : Scalar(1);
    const Scalar half = Scalar(rational(1, 2));
    const auto count = static_cast<std::size_t>(sys_->symbol_count());
    to_cone_.assign(count, std::nullopt);
    symbol_map_.assign(count, std::nullopt);
    auto mono = [&](Symbol s) { return Polynomial::monomial(sys_, Monomial::of(s)); };
    for (int j = 0; j < n; ++j) {
      for (bool bar : real ? std::vector<bool>{false} : std::vector<bool>{false, true}) {
        Polynomial w = mono(sys_->symbol("w", j, bar));
        Polynomial v = mono(sys_->symbol("v", j, bar));
        const auto s = sys_->symbol("s", j, bar).id;
        const auto t = sys_->symbol("t", j, bar).id;
        to_cone_[t] = half * (w + v);
        to_cone_[s] = (half / cs) * (w - v);
        symbol_map_[t] = w + v;
        symbol_map_[s] = cs * (w - v);
      }
    }
    for (IOperator op : {IOperator::I1, IOperator::I2})
      symbols_.push_back(substitute(i_symbol(sys_, ctx_, op), symbol_map_));
  }

  const SystemRef& system() const noexcept { return sys_; }
  const StiefelContext& context() const noexcept { return ctx_; }

  Polynomial to_cone(const Polynomial& f) const { return substitute(f, to_cone_); }

  Polynomial apply_I(const Polynomial& g, IOperator which) const {
    return apply_operator(symbols_[which == IOperator::I1 ? 0 : 1], g);
  }

 private:
  StiefelContext ctx_;
  SystemRef sys_;
  std::vector<std::optional<Polynomial>> to_cone_;
  std::vector<std::optional<Polynomial>> symbol_map_;
  std::vector<Polynomial> symbols_;
};

/// Lemma checks also run directly in (s, t) up to this total degree.
inline constexpr int kDirectLemmaDegree = 3;

/// Normalized plane wave (sides divided by their factorials), each side
/// passed through `side` before the product is formed.
template <class Side>
Polynomial normalized_wave(const KernelParams& kp, const SystemRef& sys, Side&& side) {
  PlaneWave w = plane_wave(kp, sys);
  Rational f = kp.kind == Case::real ? factorial(static_cast<unsigned>(kp.k))
                                     : factorial(static_cast<unsigned>(kp.p)) * factorial(static_cast<unsigned>(kp.q));
  return Scalar(1 / (f * f)) * (side(w.z_side) * side(w.u_side));
}

/// f_k = <x,t+is>^k <y,t-is>^k / (k!)^2
template <class Side>
Polynomial f_real(const SystemRef& sys, int k, Side&& side) {
  if (k < 0) return Polynomial(sys);
  return normalized_wave(KernelParams::real(sys->group("x").length, k), sys, side);
}

/// f_{p,q} = A_p B_q C_q D_p with the factorial normalizations.
template <class Side>
Polynomial f_complex(const SystemRef& sys, int p, int q, Side&& side) {
  if (p < 0 || q < 0) return Polynomial(sys);
  return normalized_wave(KernelParams::complex(sys->group("z").length, p, q), sys, side);
}

inline Polynomial as_is(const Polynomial& p) { return p; }

/// I1, I2 on f_k against their closed forms, with `apply` the operator action
/// in whatever coordinates `side` produces.
template <class Side, class Apply>
void real_lemma_in(Checker& c, const SystemRef& sys, int k, Side&& side, Apply&& apply, const std::string& where) {
  Polynomial fk = f_real(sys, k, side);
  Polynomial xy = dot(vec(sys, "x"), vec(sys, "y"));
  Polynomial gram = xy * xy - norm_sq(sys, "x") * norm_sq(sys, "y");
  c.equal(apply(fk, IOperator::I1), Scalar(4) * xy * f_real(sys, k - 1, side), "I1 f_k = 4<x,y> f_{k-1}" + where);
  c.equal(apply(fk, IOperator::I2), Scalar(4) * gram * f_real(sys, k - 2, side),
          "I2 f_k = 4(<x,y>^2-|x|^2|y|^2) f_{k-2}" + where);
}

template <class Side, class Apply>
void complex_lemma_in(Checker& c, const SystemRef& sys, int p, int q, Side&& side, Apply&& apply,
                      const std::string& where) {
  BilinearAtoms at = BilinearAtoms::make(sys);
  Polynomial f = f_complex(sys, p, q, side);
  c.equal(apply(f, IOperator::I1),
          Scalar(8) * (at.A * f_complex(sys, p - 1, q, side) + at.Abar * f_complex(sys, p, q - 1, side)),
          "I1 f_pq = 8(<z,ubar> f_{p-1,q} + <zbar,u> f_{p,q-1})" + where);
  c.equal(apply(f, IOperator::I2),
          Scalar(64) * (at.A * at.Abar - at.normsq_z * at.normsq_u) * f_complex(sys, p - 1, q - 1, side),
          "I2 f_pq = 64(|<z,ubar>|^2 - |z|^2|u|^2) f_{p-1,q-1}" + where);
}

inline void lemma_real(Checker& c, const KernelParams& kp) {
  LightCone lc(kp);
  real_lemma_in(
      c, lc.system(), kp.k, [&](const Polynomial& p) { return lc.to_cone(p); },
      [&](const Polynomial& g, IOperator op) { return lc.apply_I(g, op); }, " (light-cone coordinates)");
  if (kp.k <= kDirectLemmaDegree) {
    SystemRef sys = plane_wave_system(kp);
    StiefelContext ctx = plane_wave_context(kp);
    real_lemma_in(
        c, sys, kp.k, as_is, [&](const Polynomial& g, IOperator op) { return apply_I(g, ctx, op); }, "");
  }
}

inline void lemma_complex(Checker& c, const KernelParams& kp) {
  LightCone lc(kp);
  complex_lemma_in(
      c, lc.system(), kp.p, kp.q, [&](const Polynomial& p) { return lc.to_cone(p); },
      [&](const Polynomial& g, IOperator op) { return lc.apply_I(g, op); }, " (light-cone coordinates)");
  if (kp.p + kp.q <= kDirectLemmaDegree) {
    SystemRef sys = plane_wave_system(kp);
    StiefelContext ctx = plane_wave_context(kp);
    complex_lemma_in(
        c, sys, kp.p, kp.q, as_is, [&](const Polynomial& g, IOperator op) { return apply_I(g, ctx, op); }, "");
  }
}

inline void degree_selection(Checker& c, const KernelParams& kp) {
  SystemRef sys = plane_wave_system(kp);
  PizzettiTables tables(sys, plane_wave_context(kp));
  const int deg = kp.degree();
  PlaneWave w = plane_wave(kp, sys, c.limits());
  Polynomial total(sys);
  for (int j = 0; j <= deg + 1; ++j)
    for (int ell = 0; 2 * ell <= j; ++ell) {
      Polynomial t = stiefel_product_term(w.z_side, w.u_side, tables, j, ell);
      if (j != deg) c.equal(t, Polynomial(sys), "term (j,l)=(" + std::to_string(j) + "," + std::to_string(ell) + ") vanishes");
      total += t;
    }
  c.equal(total, stiefel_product_mean(w.z_side, w.u_side, tables, c.limits()), "diagonal terms sum to the mean");
}

inline void sphere_consistency(Checker& c, const KernelParams& kp) {
  SystemRef sys = plane_wave_system(kp);
  StiefelContext ctx = plane_wave_context(kp);
  const bool real = kp.kind == Case::real;
  for (int i = 0; i < c.options().op_samples; ++i) {
    Polynomial P = detail::draw(c, 0, i, kp, RandomFlavor::homogeneous, sys, "t");
    KernelParams lin = real ? KernelParams::real(kp.dim, 1) : KernelParams::complex(kp.dim, 1, 0);
    Polynomial L = detail::draw(c, 1, i, lin, RandomFlavor::homogeneous, sys, real ? "x" : "z");
    Polynomial f = P * L;
    c.equal(stiefel_mean(f, ctx), sphere_mean(f, "t"), "s-independent mean equals sphere mean, sample " + std::to_string(i));
  }
}

inline void swap_symmetry(Checker& c, const KernelParams& kp) {
  SystemRef sys = plane_wave_system(kp);
  PizzettiTables tables(sys, plane_wave_context(kp));
  PlaneWave w = plane_wave(kp, sys, c.limits());
  Polynomial mean = stiefel_product_mean(w.z_side, w.u_side, tables, c.limits());
  Polynomial swapped = stiefel_product_mean(swap_parameters(w.z_side), swap_parameters(w.u_side), tables, c.limits());
  c.equal(swapped, swap_parameters(mean), "mean of swapped integrand");
  c.equal(swap_parameters(mean), mean, "mean symmetric in x, y");
}

}  // namespace pizzetti

// ---------------------------------------------------------------------------
// Plane-wave kernel identities

namespace planewave {

struct Reading {
  std::string name;
  Rational constant;
};

inline void real(Checker& c, const KernelParams& kp) {
  SystemRef sys = plane_wave_system(kp);
  PizzettiTables tables(sys, plane_wave_context(kp));
  PlaneWave w = plane_wave(kp, sys, c.limits());
  Polynomial mean = stiefel_product_mean(w.z_side, w.u_side, tables, c.limits());
  Polynomial K = kernel(kp, KernelKind::K, sys);
  Rational constant = lambda_real(kp.dim, kp.k) * dim_spherical(kp.dim, kp.k);
  c.note("constant lambda_k dim H_k with lambda_k = (mu+1)_k / k! = " + constant.get_str());
  c.equal(Scalar(constant) * mean, K, "lambda_k dim H_k * mean = K_k");
}

/// Tries each reading in order; passes if one holds and records all outcomes.
inline void check_readings(Checker& c, const Polynomial& mean, const Polynomial& K, const std::vector<Reading>& readings,
                           const std::string& what) {
  std::optional<Witness> first;
  bool any = false;
  for (const auto& r : readings) {
    Polynomial lhs = Scalar(r.constant) * mean;
    bool ok = lhs == K;
    c.note("constant " + r.name + " = " + r.constant.get_str() + ": " + (ok ? "holds" : "fails"));
    if (ok) any = true;
    if (!ok && !first) first = Checker::witness(lhs, K, what + " with constant " + r.name);
  }
  if (!any) throw CheckFailure{*first};
}

inline std::vector<Reading> complex_readings(int N, int p, int q) {
  const Rational lam = lambda_complex(N, p, q);
  const Rational dim = dim_complex(N, p, q);
  const Rational pq = factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q));
  const Rational nu = factorial(static_cast<unsigned>(std::min(p, q)));
  return {{"lambda*dim", lam * dim},
          {"lambda*dim/(p!q!)^2", lam * dim / (pq * pq)},
          {"lambda*dim/min(p,q)!", lam * dim / nu}};
}

inline void complex(Checker& c, const KernelParams& kp) {
  SystemRef sys = plane_wave_system(kp);
  PizzettiTables tables(sys, plane_wave_context(kp));
  PlaneWave w = plane_wave(kp, sys, c.limits());
  Polynomial mean = stiefel_product_mean(w.z_side, w.u_side, tables, c.limits());
  Polynomial K = kernel(kp, KernelKind::K, sys);
  check_readings(c, mean, K, complex_readings(kp.dim, kp.p, kp.q), "complex plane wave");
}

inline void symplectic(Checker& c, const KernelParams& kp) {
  if (kp.p > kp.q) throw InvalidParams("the symplectic plane-wave identity needs p <= q");
  SystemRef sys = plane_wave_system(kp);
  PizzettiTables tables(sys, plane_wave_context(kp));
  const int N = kp.complex_dim();
  const int p = kp.p;
  const int q = kp.q;
  PlaneWave w = plane_wave(kp, sys, c.limits());
  Polynomial mean = stiefel_product_mean(w.z_side, w.u_side, tables, c.limits());
  Polynomial K = kernel(kp, KernelKind::KS, sys);
  if (K.is_zero()) c.note("H^S_pq is zero-dimensional; both sides vanish");
  const Rational lam = lambda_complex(N, p, q);
  const Rational dim = dim_complex(N, p, q);
  const Rational nu = factorial(static_cast<unsigned>(std::min(p, q)));
  const Rational corrected = lam * dim / nu;
  check_readings(c, mean, K,
                 {{"lambda", lam}, {"lambda*dim", lam * dim}, {"lambda*dim/min(p,q)!", corrected}},
                 "symplectic plane wave (projected g_z)");

  // The closed form of g_z against the projection path. The closed
  // form carries conj(t-s) where the wave has conj(t+s); the Stiefel mean is
  // invariant under s -> -s, so the projection of the flipped wave is compared.
  Polynomial X = symplectic_wave_closed_form(sys, p, q);
  Polynomial flipped = proj_symplectic(complex_wave_z(sys, p, q, true), "z");
  const Rational emerged = rational(q - p + 1, q + 1);
  c.equal(flipped, Scalar(emerged) * X, "Proj_{E^dag} of the s-flipped wave = (q-p+1)/(q+1) * closed form");
  c.note("g_z closed form equals the projection of <z,conj(t-s)>^p <zbar,t+s>^q (s sign flipped)");
  c.note("projected unnormalized wave = " + emerged.get_str() + " * closed form");

  const Rational pf = factorial(static_cast<unsigned>(p));
  const Rational qf = factorial(static_cast<unsigned>(q));
  const Rational qf1 = factorial(static_cast<unsigned>(q + 1));
  const Rational normalized = emerged / (pf * qf);
  for (const auto& [name, value] : std::vector<std::pair<std::string, Rational>>{
           {"(q-p+1)/(p!(q+1)!)", Rational(q - p + 1) / (pf * qf1)},
           {"(q-p+1)(q+1)!/p!", Rational(q - p + 1) * qf1 / pf}}) {
    std::string verdict = value == emerged      ? "matches the projected unnormalized wave"
                          : value == normalized ? "matches the projected wave normalized by 1/(p!q!)"
                                                : "matches neither normalization";
    c.note("prefactor reading " + name + " = " + value.get_str() + ": " + verdict);
  }
  // With the prefactor (q-p+1)/(p!(q+1)!) the integrand is scaled by 1/(p!q!)^2
  // relative to the projected wave, which the constant must absorb.
  Polynomial g = Scalar(Rational(q - p + 1) / (pf * qf1)) * X;
  Polynomial gu = conjugate(rename_group(g, "z", "u"));
  Polynomial mean_prefactor = stiefel_product_mean(g, gu, tables, c.limits());
  c.equal(Scalar(corrected * pf * pf * qf * qf) * mean_prefactor, K,
          "closed-form g_z with prefactor (q-p+1)/(p!(q+1)!) and constant (p!q!)^2 lambda dim/min(p,q)!");
  c.note("closed-form g_z with prefactor (q-p+1)/(p!(q+1)!) reproduces K^S with constant (p!q!)^2 * lambda*dim/min(p,q)!");
}

}  // namespace planewave

// ---------------------------------------------------------------------------
// Catalogue

inline bool case_selected(const Selection& sel, Case c) { return !sel.only_case || *sel.only_case == c; }

inline std::vector<Task> tasks_for(Suite suite, const Selection& sel) {
  std::vector<Task> tasks;
  auto add = [&](std::string id, const KernelParams& kp, bool seeded, std::function<void(Checker&)> body) {
    tasks.push_back(Task{std::move(id), kp, seeded, std::move(body)});
  };
  const bool all = suite == Suite::all;

  if ((all || suite == Suite::spherical) && case_selected(sel, Case::real)) {
    auto grid = real_grid(sel);
    int jmax = 0;
    for (const auto& kp : grid) jmax = std::max(jmax, kp.k);
    for (const auto& kp : grid) {
      add("spherical.reproduction", kp, true, [kp, jmax](Checker& c) { spherical::reproduction(c, kp, jmax); });
      add("spherical.fischer_reproduction", kp, true, [kp, jmax](Checker& c) { spherical::fischer_reproduction(c, kp, jmax); });
      add("spherical.proportionality", kp, true, [kp, jmax](Checker& c) { spherical::proportionality(c, kp, jmax); });
      add("spherical.fischer_duality", kp, true, [kp](Checker& c) { spherical::fischer_duality(c, kp); });
      add("spherical.projector", kp, true, [kp](Checker& c) { spherical::projector(c, kp); });
      add("spherical.kernel_projection", kp, false, [kp](Checker& c) { spherical::kernel_projection(c, kp); });
      add("spherical.kernel_rotation", kp, true, [kp](Checker& c) { spherical::kernel_rotation(c, kp); });
    }
    for (const auto& kp : real_grid(sel, 5))
      add("spherical.dimension", kp, false, [kp](Checker& c) { spherical::dimension(c, kp); });
  }
  if ((all || suite == Suite::complex) && case_selected(sel, Case::complex)) {
    auto grid = complex_grid(sel);
    int dmax = 0;
    for (const auto& kp : grid) dmax = std::max({dmax, kp.p, kp.q});
    for (const auto& kp : grid) {
      add("complex.reproduction", kp, true, [kp, dmax](Checker& c) { complexh::reproduction(c, kp, dmax); });
      add("complex.fischer_reproduction", kp, true, [kp, dmax](Checker& c) { complexh::fischer_reproduction(c, kp, dmax); });
      add("complex.proportionality", kp, true, [kp](Checker& c) { complexh::proportionality(c, kp); });
      add("complex.projector", kp, true, [kp](Checker& c) { complexh::projector(c, kp); });
      add("complex.kernel_projection", kp, false, [kp](Checker& c) { complexh::kernel_projection(c, kp); });
      add("complex.dimension", kp, false, [kp](Checker& c) { complexh::dimension(c, kp); });
    }
  }
  if ((all || suite == Suite::symplectic) && case_selected(sel, Case::symplectic)) {
    for (const auto& kp : symplectic_grid(sel)) {
      add("symplectic.sl2_commutators", kp, true, [kp](Checker& c) { symplectic::sl2(c, kp); });
      if (kp.p <= kp.q) {
        add("symplectic.kappa", kp, true, [kp](Checker& c) { symplectic::kappa_relation(c, kp); });
        add("symplectic.fischer_reproduction", kp, true, [kp](Checker& c) { symplectic::fischer_reproduction(c, kp); });
        add("symplectic.laplacian_ladder", kp, false, [kp](Checker& c) { symplectic::laplacian_ladder(c, kp); });
      }
      add("symplectic.projector", kp, true, [kp](Checker& c) { symplectic::projector(c, kp); });
      add("symplectic.closed_form", kp, false, [kp](Checker& c) { symplectic::closed_form(c, kp); });
      add("symplectic.reproduction", kp, true, [kp](Checker& c) { symplectic::reproduction(c, kp); });
    }
    for (const auto& kp : symplectic_grid(sel, 3))
      add("symplectic.dimension", kp, false, [kp](Checker& c) { symplectic::dimension(c, kp); });
  }
  if (all || suite == Suite::pizzetti) {
    if (case_selected(sel, Case::real)) {
      for (const auto& kp : real_grid(sel, 5))
        add("pizzetti.lemma_real", kp, false, [kp](Checker& c) { pizzetti::lemma_real(c, kp); });
      for (const auto& kp : real_grid(sel)) {
        add("pizzetti.degree_selection", kp, false, [kp](Checker& c) { pizzetti::degree_selection(c, kp); });
        add("pizzetti.sphere_consistency", kp, true, [kp](Checker& c) { pizzetti::sphere_consistency(c, kp); });
        add("pizzetti.swap_symmetry", kp, false, [kp](Checker& c) { pizzetti::swap_symmetry(c, kp); });
      }
    }
    if (case_selected(sel, Case::complex)) {
      for (const auto& kp : complex_grid(sel)) {
        add("pizzetti.lemma_complex", kp, false, [kp](Checker& c) { pizzetti::lemma_complex(c, kp); });
        add("pizzetti.degree_selection", kp, false, [kp](Checker& c) { pizzetti::degree_selection(c, kp); });
        add("pizzetti.sphere_consistency", kp, true, [kp](Checker& c) { pizzetti::sphere_consistency(c, kp); });
      }
    }
  }
  if (all || suite == Suite::planewave) {
    if (case_selected(sel, Case::real))
      for (const auto& kp : real_grid(sel))
        add("planewave.real", kp, false, [kp](Checker& c) { planewave::real(c, kp); });
    if (case_selected(sel, Case::complex))
      for (const auto& kp : complex_grid(sel))
        add("planewave.complex", kp, false, [kp](Checker& c) { planewave::complex(c, kp); });
    if (case_selected(sel, Case::symplectic))
      for (const auto& kp : symplectic_grid(sel))
        if (kp.p <= kp.q) add("planewave.symplectic", kp, false, [kp](Checker& c) { planewave::symplectic(c, kp); });
  }
  return tasks;
}

// ---------------------------------------------------------------------------
// Runner

inline Report run_task(const Task& task, const Options& opts) {
  Report r;
  r.identity_id = task.id;
  r.params = task.params;
  const std::uint64_t seed = task_seed(opts.seed, task.id, task.params);
  if (task.seeded) r.seed = seed;
  Checker c(seed, opts);
  auto t0 = std::chrono::steady_clock::now();
  try {
    task.body(c);
    r.status = Status::pass;
  } catch (const CheckFailure& f) {
    r.status = Status::fail;
    r.witness = f.witness;
  } catch (const CapExceeded& e) {
    r.status = Status::skipped;
    c.note("cap " + e.cap() + ": " + e.what());
  } catch (const std::exception& e) {
    r.status = Status::fail;
    r.witness = Witness{"", "", "", std::string("error: ") + e.what()};
  }
  r.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.resolution_notes = std::move(c.notes());
  return r;
}

inline bool report_before(const Report& a, const Report& b) {
  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
  return a.params < b.params;
}

/// Runs every task on a pool of `opts.jobs` workers; reports come back sorted
/// by (identity_id, params).
inline std::vector<Report> run(const std::vector<Task>& tasks, const Options& opts) {
  std::vector<Report> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = run_task(tasks[i], opts);
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(out.begin(), out.end(), report_before);
  return out;
}

inline std::string to_jsonl(const std::vector<Report>& reports, bool timing) {
  std::string s;
  for (const auto& r : reports) {
    s += r.to_json(timing).dump();
    s += '\n';
  }
  return s;
}

/// 0 when everything passed, 3 on any failure or (without allow_skip) any skip.
inline int exit_code(const std::vector<Report>& reports, bool allow_skip) {
  for (const auto& r : reports) {
    if (r.status == Status::fail) return 3;
    if (r.status == Status::skipped && !allow_skip) return 3;
  }
  return 0;
}

}  // namespace hk::verify

#endif  // HK_VERIFY_HPP
