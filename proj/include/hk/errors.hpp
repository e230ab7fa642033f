#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable systems.
class SystemMismatch : public Error {
 public:
  SystemMismatch() : Error("polynomials belong to different variable systems") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name) : Error("unknown symbol: " + name) {}
};

class UnknownGroup : public Error {
 public:
  explicit UnknownGroup(const std::string& name) : Error("unknown variable group: " + name) {}
};

/// An operator was applied to a group of the wrong kind (real vs complex) or shape.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Input polynomial is not (bi)homogeneous where the operation requires it.
class Inhomogeneous : public Error {
 public:
  using Error::Error;
};

/// Polynomial contains symbols outside the group an inner product is taken over.
class ForeignSymbols : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource cap (term count, degree) was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, const std::string& detail)
      : Error("resource cap " + cap + " exceeded: " + detail), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace hk

#endif  // HK_ERRORS_HPP
