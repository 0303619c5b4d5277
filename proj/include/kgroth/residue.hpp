#ifndef KGROTH_RESIDUE_HPP
#define KGROTH_RESIDUE_HPP

#include <vector>

#include "kgroth/series.hpp"

namespace kgroth {

enum class ResidueLocation { zero, infinity, zero_and_infinity };

struct ResidueSpec {
  Variable var;
  ResidueLocation location;
};

// An iterated residue of a rational 1-form: specs are applied left to right,
// so specs.front() is the innermost residue variable.
struct ResidueForm {
  RationalFunction integrand;
  std::vector<ResidueSpec> specs;
};

// Res at v = 0 of f dv: the coefficient of v^-1 in the expansion around 0.
RationalFunction residue_at_zero(const RationalFunction& f, const Variable& v);

// Res at v = infinity of f dv: substitute v -> 1/v and take minus the
// coefficient of v^1, i.e. Res_{v=inf} f dv = -Res_{w=0} f(1/w) w^-2 dw.
RationalFunction residue_at_infinity(const RationalFunction& f, const Variable& v);

// Sum of the residues at 0 and at infinity.
RationalFunction residue_zero_infinity(const RationalFunction& f, const Variable& v);

RationalFunction apply_residue(const RationalFunction& f, const ResidueSpec& spec);

RationalFunction iterated_residue(const ResidueForm& form);

}  // namespace kgroth

#endif
