#include "kgroth/residue.hpp"

namespace kgroth {

RationalFunction residue_at_zero(const RationalFunction& f, const Variable& v) {
  return expansion_coefficient(f, v, -1);
}

RationalFunction residue_at_infinity(const RationalFunction& f, const Variable& v) {
  SubstMap map;
  map.emplace(var_id(v), Subst{Rational(1), Monomial{{VarExp{var_id(v), -1}}}});
  RationalFunction inverted = f.substituted(map);
  return -expansion_coefficient(inverted, v, 1);
}

RationalFunction residue_zero_infinity(const RationalFunction& f, const Variable& v) {
  return (residue_at_zero(f, v) + residue_at_infinity(f, v)).light_normalized();
}

RationalFunction apply_residue(const RationalFunction& f, const ResidueSpec& spec) {
  switch (spec.location) {
    case ResidueLocation::zero:
      return residue_at_zero(f, spec.var);
    case ResidueLocation::infinity:
      return residue_at_infinity(f, spec.var);
    case ResidueLocation::zero_and_infinity:
      return residue_zero_infinity(f, spec.var);
  }
  throw Error("apply_residue: bad location");
}

RationalFunction iterated_residue(const ResidueForm& form) {
  RationalFunction cur = form.integrand;
  for (const auto& spec : form.specs) cur = apply_residue(cur, spec);
  return cur;
}

}  // namespace kgroth
