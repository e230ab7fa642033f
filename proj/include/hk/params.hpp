#ifndef HK_PARAMS_HPP
#define HK_PARAMS_HPP

#include <string>
#include <tuple>

#include "hk/errors.hpp"

namespace hk {

enum class Case { real, complex, symplectic };

inline std::string to_string(Case c) {
  switch (c) {
    case Case::real: return "real";
    case Case::complex: return "complex";
    case Case::symplectic: return "symplectic";
  }
  return "real";
}

/// Parameters of a harmonic space.
///   real:       dimension m (>= 3), degree k
///   complex:    complex dimension N (>= 2), bidegree (p, q)
///   symplectic: quaternionic dimension n (>= 1), complex dimension N = 2n, bidegree (p, q)
struct KernelParams {
  Case kind = Case::real;
  int dim = 3;
  int k = 0;
  int p = 0;
  int q = 0;

  static KernelParams real(int m, int k) { return checked({Case::real, m, k, 0, 0}); }
  static KernelParams complex(int n, int p, int q) { return checked({Case::complex, n, p + q, p, q}); }
  static KernelParams symplectic(int n, int p, int q) { return checked({Case::symplectic, n, p + q, p, q}); }

  /// Dimension of the complex coordinate space (m for the real case).
  int complex_dim() const noexcept { return kind == Case::symplectic ? 2 * dim : dim; }
  int degree() const noexcept { return kind == Case::real ? k : p + q; }
  int nu() const noexcept { return p < q ? p : q; }

  void validate() const {
    switch (kind) {
      case Case::real:
        if (dim < 3) throw InvalidParams("real case needs m >= 3");
        if (k < 0) throw InvalidParams("degree must be non-negative");
        break;
      case Case::complex:
        if (dim < 2) throw InvalidParams("complex case needs N >= 2");
        if (p < 0 || q < 0) throw InvalidParams("bidegree must be non-negative");
        break;
      case Case::symplectic:
        if (dim < 1) throw InvalidParams("symplectic case needs n >= 1");
        if (p < 0 || q < 0) throw InvalidParams("bidegree must be non-negative");
        break;
    }
  }

  std::string to_string() const {
    switch (kind) {
      case Case::real: return "real(m=" + std::to_string(dim) + ",k=" + std::to_string(k) + ")";
      case Case::complex:
        return "complex(n=" + std::to_string(dim) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
      case Case::symplectic:
        return "symplectic(n=" + std::to_string(dim) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    }
    return {};
  }

  auto key() const { return std::tuple(static_cast<int>(kind), dim, k, p, q); }
  friend bool operator==(const KernelParams& a, const KernelParams& b) { return a.key() == b.key(); }
  friend bool operator<(const KernelParams& a, const KernelParams& b) { return a.key() < b.key(); }

 private:
  static KernelParams checked(KernelParams kp) {
    kp.validate();
    return kp;
  }
};

}  // namespace hk

#endif  // HK_PARAMS_HPP
