#ifndef HK_POLYNOMIAL_HPP
#define HK_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk/errors.hpp"
#include "hk/scalar.hpp"
#include "hk/variables.hpp"

namespace hk {

/// Exponent vector over the flat symbols of a VariableSystem. Dense storage,
/// sparse semantics: absent symbols have exponent zero.
class Monomial {
 public:
  static constexpr unsigned kMaxExponent = 255;

  unsigned operator[](Symbol s) const noexcept { return e_[s.id]; }
  unsigned exponent(std::size_t id) const noexcept { return e_[id]; }
  int degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(Symbol s, unsigned exponent) {
    if (exponent > kMaxExponent) throw Error("exponent overflow");
    deg_ = static_cast<std::uint16_t>(deg_ - e_[s.id] + exponent);
    e_[s.id] = static_cast<std::uint8_t>(exponent);
  }

  static Monomial of(Symbol s, unsigned exponent = 1) {
    Monomial m;
    m.set(s, exponent);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      unsigned v = unsigned{a.e_[i]} + b.e_[i];
      if (v > kMaxExponent) throw Error("exponent overflow");
      r.e_[i] = static_cast<std::uint8_t>(v);
    }
    r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
    return r;
  }

  /// True when every exponent of `d` is at most the matching exponent here.
  bool divisible_by(const Monomial& d) const noexcept {
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (d.e_[i] > e_[i]) return false;
    return true;
  }

  /// this / d; requires divisible_by(d).
  Monomial quotient(const Monomial& d) const noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - d.e_[i]);
    r.deg_ = static_cast<std::uint16_t>(deg_ - d.deg_);
    return r;
  }

  /// Product of factorials of the exponents.
  Rational factorial_weight() const {
    mpz_class w = 1;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (e_[i] > 1) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), e_[i]);
        w *= f;
      }
    }
    return Rational(w);
  }

  /// Keeps only the symbols where `mask` is set.
  Monomial masked(const std::array<bool, kMaxSymbols>& mask) const noexcept {
    Monomial r;
    int d = 0;
    for (std::size_t i = 0; i < kMaxSymbols; ++i) {
      if (mask[i]) {
        r.e_[i] = e_[i];
        d += e_[i];
      }
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.deg_ == b.deg_ && std::memcmp(a.e_.data(), b.e_.data(), kMaxSymbols) == 0;
  }

  /// Canonical (graded lexicographic) order: higher total degree first, then
  /// larger exponent on the earliest symbol first.
  friend bool canonical_before(const Monomial& a, const Monomial& b) noexcept {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_;
    return std::memcmp(a.e_.data(), b.e_.data(), kMaxSymbols) > 0;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < kMaxSymbols; i += 8) {
      std::uint64_t w;
      std::memcpy(&w, e_.data() + i, 8);
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint8_t, kMaxSymbols> e_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class Polynomial;

/// Accumulates terms in a hash map and emits a normalized Polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(SystemRef sys) : sys_(std::move(sys)) {}

  void reserve(std::size_t n) { acc_.reserve(n); }

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  void add(const Monomial& m, Scalar&& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc_.try_emplace(m, std::move(c));
    if (!inserted) it->second += c;
  }

  void add(const Polynomial& p, const Scalar& scale = Scalar(1));
  void add_product(const Polynomial& a, const Polynomial& b, const Scalar& scale = Scalar(1));

  std::size_t size() const noexcept { return acc_.size(); }

  Polynomial build() &&;

 private:
  SystemRef sys_;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc_;
};

/// Sparse multivariate polynomial with Gaussian-rational coefficients. Terms
/// are kept in canonical order with no zero coefficients, so equality is
/// term-wise equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Polynomial(SystemRef sys) : sys_(std::move(sys)) {}

  static Polynomial constant(SystemRef sys, const Scalar& c) {
    Polynomial p(std::move(sys));
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }

  static Polynomial monomial(SystemRef sys, const Monomial& m, const Scalar& c = Scalar(1)) {
    Polynomial p(std::move(sys));
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
  }

  static Polynomial variable(SystemRef sys, Symbol s) { return monomial(std::move(sys), Monomial::of(s)); }

  static Polynomial variable(SystemRef sys, std::string_view group, int index, bool bar = false) {
    Symbol s = sys->symbol(group, index, bar);
    return variable(std::move(sys), s);
  }

  const SystemRef& system() const noexcept { return sys_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return canonical_before(t.first, k); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Scalar(0);
  }

  /// Highest total degree, -1 for the zero polynomial.
  int total_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_system(a.sys_, b.sys_)) return false;
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.sys_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    PolynomialBuilder bld(a.sys_);
    bld.add_product(a, b);
    return std::move(bld).build();
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    Polynomial r(a.sys_);
    if (s.is_zero()) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, s * c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Scalar& s) { return s * a; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (!same_system(a.sys_, b.sys_)) throw SystemMismatch();
  }

 private:
  friend class PolynomialBuilder;

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.sys_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && canonical_before(i->first, j->first))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || canonical_before(j->first, i->first)) {
        r.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
        ++j;
      } else {
        Scalar c = subtract ? i->second - j->second : i->second + j->second;
        if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  SystemRef sys_;
  std::vector<Term> terms_;
};

inline void PolynomialBuilder::add(const Polynomial& p, const Scalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [m, c] : p.terms()) add(m, scale.is_one() ? c : scale * c);
}

inline void PolynomialBuilder::add_product(const Polynomial& a, const Polynomial& b, const Scalar& scale) {
  if (scale.is_zero()) return;
  for (const auto& [ma, ca] : a.terms()) {
    Scalar sa = scale.is_one() ? ca : scale * ca;
    for (const auto& [mb, cb] : b.terms()) add(ma * mb, sa * cb);
  }
}

inline Polynomial PolynomialBuilder::build() && {
  Polynomial p(sys_);
  p.terms_.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  acc_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return canonical_before(x.first, y.first); });
  return p;
}

// ---------------------------------------------------------------------------
// Ring operations

enum class CombineOp { add, sub, mul };

inline Polynomial combine(const Polynomial& a, const Polynomial& b, CombineOp op) {
  switch (op) {
    case CombineOp::add: return a + b;
    case CombineOp::sub: return a - b;
    case CombineOp::mul: return a * b;
  }
  return a * b;
}

inline Polynomial power(const Polynomial& a, unsigned e) {
  Polynomial result = Polynomial::constant(a.system(), Scalar(1));
  Polynomial base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Formal partial derivative; z and zbar are independent symbols.
inline Polynomial partial(const Polynomial& a, Symbol s) {
  if (s.id >= a.system()->symbol_count()) throw UnknownSymbol("#" + std::to_string(s.id));
  PolynomialBuilder b(a.system());
  for (const auto& [m, c] : a.terms()) {
    unsigned e = m[s];
    if (e == 0) continue;
    Monomial d = m;
    d.set(s, e - 1);
    b.add(d, c * Scalar(static_cast<long>(e)));
  }
  return std::move(b).build();
}

/// Conjugates every coefficient and swaps z_j <-> zbar_j in every complex group.
inline Polynomial conjugate(const Polynomial& a) {
  const auto& sys = *a.system();
  PolynomialBuilder b(a.system());
  b.reserve(a.size());
  const int n = sys.symbol_count();
  for (const auto& [m, c] : a.terms()) {
    Monomial r;
    for (int i = 0; i < n; ++i) {
      unsigned e = m.exponent(static_cast<std::size_t>(i));
      if (e) r.set(sys.conjugate(Symbol{static_cast<std::uint16_t>(i)}), e);
    }
    b.add(r, c.conj());
  }
  return std::move(b).build();
}

inline std::array<bool, kMaxSymbols> group_mask(const VariableSystem& sys, std::string_view group) {
  std::array<bool, kMaxSymbols> mask{};
  for (Symbol s : sys.symbols_of(group)) mask[s.id] = true;
  return mask;
}

inline std::array<bool, kMaxSymbols> groups_mask(const VariableSystem& sys, std::initializer_list<std::string_view> groups) {
  std::array<bool, kMaxSymbols> mask{};
  for (auto g : groups)
    for (Symbol s : sys.symbols_of(g)) mask[s.id] = true;
  return mask;
}

inline std::array<bool, kMaxSymbols> complement(std::array<bool, kMaxSymbols> mask) {
  for (auto& b : mask) b = !b;
  return mask;
}

/// Substitutes 0 for every symbol of `group`.
inline Polynomial restrict_zero(const Polynomial& a, std::string_view group) {
  auto mask = group_mask(*a.system(), group);
  PolynomialBuilder b(a.system());
  for (const auto& [m, c] : a.terms()) {
    if (m.masked(mask).is_one()) b.add(m, c);
  }
  return std::move(b).build();
}

/// Homogeneity report for one group.
struct DegreeProfile {
  enum class Kind { zero, homogeneous, bihomogeneous, inhomogeneous };
  Kind kind = Kind::zero;
  int degree = 0;  // homogeneous: degree; bihomogeneous: p (z-degree)
  int codegree = 0;  // bihomogeneous: q (zbar-degree)

  bool is_zero() const noexcept { return kind == Kind::zero; }
  bool is_inhomogeneous() const noexcept { return kind == Kind::inhomogeneous; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::zero: return "zero";
      case Kind::homogeneous: return std::to_string(degree);
      case Kind::bihomogeneous: return "(" + std::to_string(degree) + "," + std::to_string(codegree) + ")";
      case Kind::inhomogeneous: return "inhomogeneous";
    }
    return "inhomogeneous";
  }
};

/// (z-degree, zbar-degree) of a single monomial in a group; real groups report (degree, 0).
inline std::pair<int, int> group_bidegree(const VariableSystem& sys, const Monomial& m, const Group& g) {
  int p = 0;
  int q = 0;
  for (int k = 0; k < g.symbol_count(); ++k) {
    unsigned e = m.exponent(static_cast<std::size_t>(g.offset + k));
    if (g.is_complex() && (k % 2 == 1))
      q += static_cast<int>(e);
    else
      p += static_cast<int>(e);
  }
  (void)sys;
  return {p, q};
}

inline DegreeProfile degree_profile(const Polynomial& a, std::string_view group) {
  const auto& sys = *a.system();
  const Group& g = sys.group(group);
  DegreeProfile prof;
  if (a.is_zero()) return prof;
  bool first = true;
  int p0 = 0;
  int q0 = 0;
  for (const auto& [m, c] : a.terms()) {
    auto [p, q] = group_bidegree(sys, m, g);
    if (first) {
      p0 = p;
      q0 = q;
      first = false;
    } else if (g.is_complex() ? (p != p0 || q != q0) : (p != p0)) {
      prof.kind = DegreeProfile::Kind::inhomogeneous;
      return prof;
    }
  }
  if (g.is_complex()) {
    prof.kind = DegreeProfile::Kind::bihomogeneous;
    prof.degree = p0;
    prof.codegree = q0;
  } else {
    prof.kind = DegreeProfile::Kind::homogeneous;
    prof.degree = p0;
  }
  return prof;
}

/// Scales a degree profile by e (the degree of a power).
inline DegreeProfile scaled(DegreeProfile d, int e) {
  d.degree *= e;
  d.codegree *= e;
  return d;
}

/// Replaces symbols by polynomials. `images[id]` empty means the symbol is kept.
inline Polynomial substitute(const Polynomial& a, const std::vector<std::optional<Polynomial>>& images) {
  const auto& sysref = a.system();
  const int n = sysref->symbol_count();
  Polynomial result(sysref);
  // cache powers per symbol
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
  auto power_of = [&](int id, unsigned e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(id)];
    if (cache.empty()) cache.push_back(Polynomial::constant(sysref, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[static_cast<std::size_t>(id)]);
    return cache[e];
  };
  PolynomialBuilder out(sysref);
  for (const auto& [m, c] : a.terms()) {
    Monomial kept;
    Polynomial prod = Polynomial::constant(sysref, c);
    for (int i = 0; i < n; ++i) {
      unsigned e = m.exponent(static_cast<std::size_t>(i));
      if (!e) continue;
      if (images[static_cast<std::size_t>(i)]) {
        prod = prod * power_of(i, e);
      } else {
        kept.set(Symbol{static_cast<std::uint16_t>(i)}, e);
      }
    }
    for (const auto& [pm, pc] : prod.terms()) out.add(pm * kept, pc);
  }
  return std::move(out).build();
}

/// Moves every occurrence of group `from` onto group `to` (same kind and
/// length) and vice versa.
inline Polynomial swap_groups(const Polynomial& a, std::string_view from, std::string_view to) {
  const auto& sys = *a.system();
  const Group& g1 = sys.group(from);
  const Group& g2 = sys.group(to);
  if (g1.kind != g2.kind || g1.length != g2.length)
    throw KindMismatch("groups " + g1.name + " and " + g2.name + " differ in kind or length");
  std::vector<int> perm(static_cast<std::size_t>(sys.symbol_count()));
  for (int i = 0; i < sys.symbol_count(); ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int k = 0; k < g1.symbol_count(); ++k) {
    perm[static_cast<std::size_t>(g1.offset + k)] = g2.offset + k;
    perm[static_cast<std::size_t>(g2.offset + k)] = g1.offset + k;
  }
  PolynomialBuilder b(a.system());
  for (const auto& [m, c] : a.terms()) {
    Monomial r;
    for (int i = 0; i < sys.symbol_count(); ++i) {
      unsigned e = m.exponent(static_cast<std::size_t>(i));
      if (e) r.set(Symbol{static_cast<std::uint16_t>(perm[static_cast<std::size_t>(i)])}, e);
    }
    b.add(r, c);
  }
  return std::move(b).build();
}

/// Renames group `from` to `to`; requires the polynomial to be free of `to`.
inline Polynomial rename_group(const Polynomial& a, std::string_view from, std::string_view to) {
  auto mask = group_mask(*a.system(), to);
  for (const auto& [m, c] : a.terms())
    if (!m.masked(mask).is_one()) throw Error("rename target group " + std::string(to) + " already occurs");
  return swap_groups(a, from, to);
}

/// Highest degree in the symbols selected by `mask`.
inline int masked_degree(const Polynomial& a, const std::array<bool, kMaxSymbols>& mask) {
  int d = -1;
  for (const auto& [m, c] : a.terms()) d = std::max(d, m.masked(mask).degree());
  return d;
}

/// True when every term only involves symbols in `mask`.
inline bool supported_in(const Polynomial& a, const std::array<bool, kMaxSymbols>& mask) {
  auto other = complement(mask);
  for (const auto& [m, c] : a.terms())
    if (!m.masked(other).is_one()) return false;
  return true;
}

/// A polynomial viewed as sum over monomials `key` in the masked symbols of
/// key * rest(key), with rest free of those symbols.
struct SplitPolynomial {
  std::unordered_map<Monomial, std::vector<Polynomial::Term>, MonomialHash> parts;
};

inline SplitPolynomial split_by(const Polynomial& a, const std::array<bool, kMaxSymbols>& mask) {
  SplitPolynomial s;
  auto other = complement(mask);
  for (const auto& [m, c] : a.terms()) s.parts[m.masked(mask)].emplace_back(m.masked(other), c);
  return s;
}

}  // namespace hk

#endif  // HK_POLYNOMIAL_HPP
