#ifndef HK_VARIABLES_HPP
#define HK_VARIABLES_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hk/errors.hpp"

namespace hk {

/// Upper bound on formal symbols per system (monomials are fixed-width).
inline constexpr std::size_t kMaxSymbols = 64;

enum class Kind { real, complex };

struct GroupSpec {
  std::string name;
  int length = 0;
  Kind kind = Kind::real;
};

/// A named vector variable. A complex group of length N owns 2N formal
/// symbols laid out as z[1], zbar[1], z[2], zbar[2], ...
struct Group {
  std::string name;
  int length = 0;
  Kind kind = Kind::real;
  int offset = 0;  // first flat symbol id

  bool is_complex() const noexcept { return kind == Kind::complex; }
  int symbol_count() const noexcept { return is_complex() ? 2 * length : length; }
};

/// Flat id of a formal symbol inside a VariableSystem.
struct Symbol {
  std::uint16_t id = 0;
  friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
  friend bool operator<(Symbol a, Symbol b) { return a.id < b.id; }
};

struct SymbolInfo {
  int group = 0;   // position in VariableSystem::groups()
  int index = 0;   // 0-based
  bool bar = false;
};

class VariableSystem;
using SystemRef = std::shared_ptr<const VariableSystem>;

/// Ordered registry of vector variables. Immutable once built; share it via
/// SystemRef.
class VariableSystem {
 public:
  static SystemRef make(const std::vector<GroupSpec>& specs) {
    auto sys = std::shared_ptr<VariableSystem>(new VariableSystem());
    int offset = 0;
    for (const auto& s : specs) {
      if (s.length <= 0) throw InvalidParams("group " + s.name + " must have positive length");
      if (s.name.empty()) throw InvalidParams("group name must be non-empty");
      for (const auto& g : sys->groups_) {
        if (g.name == s.name || g.name + "bar" == s.name || g.name == s.name + "bar")
          throw InvalidParams("duplicate or clashing group name: " + s.name);
      }
      Group g{s.name, s.length, s.kind, offset};
      offset += g.symbol_count();
      sys->groups_.push_back(std::move(g));
    }
    if (static_cast<std::size_t>(offset) > kMaxSymbols)
      throw InvalidParams("variable system exceeds " + std::to_string(kMaxSymbols) + " formal symbols");
    sys->info_.resize(static_cast<std::size_t>(offset));
    for (int gi = 0; gi < static_cast<int>(sys->groups_.size()); ++gi) {
      const auto& g = sys->groups_[static_cast<std::size_t>(gi)];
      for (int j = 0; j < g.length; ++j) {
        if (g.is_complex()) {
          sys->info_[static_cast<std::size_t>(g.offset + 2 * j)] = {gi, j, false};
          sys->info_[static_cast<std::size_t>(g.offset + 2 * j + 1)] = {gi, j, true};
        } else {
          sys->info_[static_cast<std::size_t>(g.offset + j)] = {gi, j, false};
        }
      }
    }
    return sys;
  }

  const std::vector<Group>& groups() const noexcept { return groups_; }
  int symbol_count() const noexcept { return static_cast<int>(info_.size()); }

  bool has_group(std::string_view name) const noexcept {
    for (const auto& g : groups_)
      if (g.name == name) return true;
    return false;
  }

  const Group& group(std::string_view name) const {
    for (const auto& g : groups_)
      if (g.name == name) return g;
    throw UnknownGroup(std::string(name));
  }

  int group_index(std::string_view name) const {
    for (std::size_t i = 0; i < groups_.size(); ++i)
      if (groups_[i].name == name) return static_cast<int>(i);
    throw UnknownGroup(std::string(name));
  }

  /// Symbol for component `index` (0-based) of `group`; `bar` selects the conjugate.
  Symbol symbol(std::string_view group_name, int index, bool bar = false) const {
    const Group& g = group(group_name);
    if (index < 0 || index >= g.length)
      throw UnknownSymbol(std::string(group_name) + "[" + std::to_string(index + 1) + "]");
    if (bar && !g.is_complex()) throw UnknownSymbol(std::string(group_name) + "bar");
    int id = g.is_complex() ? g.offset + 2 * index + (bar ? 1 : 0) : g.offset + index;
    return Symbol{static_cast<std::uint16_t>(id)};
  }

  const SymbolInfo& info(Symbol s) const { return info_.at(s.id); }

  /// z_j <-> zbar_j for complex groups, identity for real ones.
  Symbol conjugate(Symbol s) const {
    const SymbolInfo& i = info(s);
    if (!groups_[static_cast<std::size_t>(i.group)].is_complex()) return s;
    return Symbol{static_cast<std::uint16_t>(i.bar ? s.id - 1 : s.id + 1)};
  }

  std::string symbol_name(Symbol s) const {
    const SymbolInfo& i = info(s);
    const Group& g = groups_[static_cast<std::size_t>(i.group)];
    return g.name + (i.bar ? "bar" : "") + "[" + std::to_string(i.index + 1) + "]";
  }

  /// All formal symbols of a group, in flat order.
  std::vector<Symbol> symbols_of(std::string_view group_name) const {
    const Group& g = group(group_name);
    std::vector<Symbol> out;
    for (int k = 0; k < g.symbol_count(); ++k) out.push_back(Symbol{static_cast<std::uint16_t>(g.offset + k)});
    return out;
  }

  friend bool operator==(const VariableSystem& a, const VariableSystem& b) {
    if (a.groups_.size() != b.groups_.size()) return false;
    for (std::size_t i = 0; i < a.groups_.size(); ++i) {
      const auto& x = a.groups_[i];
      const auto& y = b.groups_[i];
      if (x.name != y.name || x.length != y.length || x.kind != y.kind) return false;
    }
    return true;
  }

 private:
  VariableSystem() = default;

  std::vector<Group> groups_;
  std::vector<SymbolInfo> info_;
};

inline bool same_system(const SystemRef& a, const SystemRef& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace hk

#endif  // HK_VARIABLES_HPP
