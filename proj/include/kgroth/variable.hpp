#ifndef KGROTH_VARIABLE_HPP
#define KGROTH_VARIABLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace kgroth {

// Variable families, in canonical rank order. The order fixes the canonical
// term order used by the text renderer, so it must never be reshuffled.
enum class VarFamily : std::uint8_t {
  alpha = 0,   // a1, a2, ...  domain Chern roots in recursion coordinates
  beta = 1,    // b1, b2, ...  target Chern roots
  epsilon = 2, // e1, e2, ...  domain roots of Thom instances
  z = 3,       // z1, z2, ...  residue variables
  omega = 4,   // w1, w2, ...  localization weights
  sigma = 5,   // s1, s2, ...  tautological subbundle roots
  tau = 6,     // u1, ...      auxiliary class variables
  t = 7,       // t1           deformation/series parameter
  x = 8,       // x1, x2, ...  coefficient-table expansion variables
  abar = 9,    // A1, A2, ...  additive (cohomological) domain roots
  bbar = 10,   // B1, B2, ...  additive target roots
};

constexpr int kNumFamilies = 11;

struct Variable {
  VarFamily family;
  int index;  // 1-based

  friend bool operator==(const Variable& a, const Variable& b) {
    return a.family == b.family && a.index == b.index;
  }
  friend bool operator!=(const Variable& a, const Variable& b) { return !(a == b); }
  friend bool operator<(const Variable& a, const Variable& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.index < b.index;
  }
};

// Compact id preserving the (family, index) order; indices stay small
// (at most a few dozen live variables), 20 bits is plenty.
using VarId = std::uint32_t;

inline VarId var_id(const Variable& v) {
  return (static_cast<VarId>(v.family) << 20) | static_cast<VarId>(v.index);
}

inline Variable var_of_id(VarId id) {
  return Variable{static_cast<VarFamily>(id >> 20), static_cast<int>(id & 0xfffff)};
}

inline Variable alpha(int i) { return {VarFamily::alpha, i}; }
inline Variable beta(int i) { return {VarFamily::beta, i}; }
inline Variable epsilon(int i) { return {VarFamily::epsilon, i}; }
inline Variable zvar(int i) { return {VarFamily::z, i}; }
inline Variable omega(int i) { return {VarFamily::omega, i}; }
inline Variable sigma(int i) { return {VarFamily::sigma, i}; }
inline Variable tau(int i) { return {VarFamily::tau, i}; }
inline Variable tvar() { return {VarFamily::t, 1}; }
inline Variable xvar(int i) { return {VarFamily::x, i}; }
inline Variable abar(int i) { return {VarFamily::abar, i}; }
inline Variable bbar(int i) { return {VarFamily::bbar, i}; }

// Short names used by the canonical text renderer: a1, b2, e1, z1, w1, s1,
// u1, t1, x1, A1, B1.
std::string var_name(const Variable& v);

// Inverse of var_name; nullopt if the text is not a variable name.
std::optional<Variable> parse_var_name(const std::string& text);

}  // namespace kgroth

namespace std {
template <>
struct hash<kgroth::Variable> {
  size_t operator()(const kgroth::Variable& v) const noexcept {
    return std::hash<kgroth::VarId>()(kgroth::var_id(v));
  }
};
}  // namespace std

#endif
