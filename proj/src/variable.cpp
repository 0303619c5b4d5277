#include "kgroth/variable.hpp"

#include <array>

namespace kgroth {

namespace {

constexpr std::array<const char*, kNumFamilies> kPrefix = {
    "a", "b", "e", "z", "w", "s", "u", "t", "x", "A", "B"};

}  // namespace

std::string var_name(const Variable& v) {
  return std::string(kPrefix[static_cast<int>(v.family)]) + std::to_string(v.index);
}

std::optional<Variable> parse_var_name(const std::string& text) {
  if (text.size() < 2) return std::nullopt;
  int fam = -1;
  for (int f = 0; f < kNumFamilies; ++f) {
    if (text[0] == kPrefix[f][0]) {
      fam = f;
      break;
    }
  }
  if (fam < 0) return std::nullopt;
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    index = index * 10 + (text[i] - '0');
    if (index > 0xfffff) return std::nullopt;
  }
  if (index < 1) return std::nullopt;
  return Variable{static_cast<VarFamily>(fam), index};
}

}  // namespace kgroth
