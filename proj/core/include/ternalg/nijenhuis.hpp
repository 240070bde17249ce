#pragma once

#include "ternalg/operators.hpp"

namespace ternalg {

/// lambda-family nw + l*omega1 + l^2*omega2 (same for ne), truncated at the
/// given order; only orders 0, 1 and 2 exist here.
struct DeformationFamily {
  ThreeHomLDend base;
  TriTensor omega1_nw, omega1_ne;
  TriTensor omega2_nw, omega2_ne;
  int order = 2;
};

/// alpha N = N alpha plus the expanded Nijenhuis identity
///   p(Nx,Ny,Nz) = N( pairs - N(singles) + N^2 p )
/// for every product of the target.  Ids "alphaN", "NIJ-nw"/"NIJ-ne"/"NIJ".
Report check_nijenhuis(const ThreeHomLDend& a, const LinearMap& n);
Report check_nijenhuis(const ThreeHomPreLie& a, const LinearMap& n);
Report check_nijenhuis(const ThreeHomLie& a, const LinearMap& n);

/// First-order deformed product p1 = singles - N p and the second-order
/// p2 = pairs - N p1, for one product.
TriTensor deformed_first(const TriTensor& p, const LinearMap& n);
TriTensor deformed_second(const TriTensor& p, const LinearMap& n);

struct NijenhuisDeformation {
  ThreeHomLDend first;       // (A, nw^1_N, ne^1_N, alpha)
  DeformationFamily family;  // omega1 = first order, omega2 = second order
};

/// Requires check_nijenhuis to pass.
NijenhuisDeformation nijenhuis_deform(const ThreeHomLDend& a, const LinearMap& n);

/// N as a map (A, first order) -> (A, base), the morphism statement attached
/// to the first-order deformation; false in general even for valid Nijenhuis
/// operators (e.g. N = identity on any algebra with nonzero products).
bool deformation_morphism_first(const ThreeHomLDend& base, const LinearMap& n);
/// N as a map (A, second order) -> (A, base); equivalent to the expanded
/// Nijenhuis identity, so it holds for every passing candidate.
bool deformation_morphism_second(const ThreeHomLDend& base, const LinearMap& n);

/// Every axiom's lambda-expansion coefficient vanishes through the family's
/// order.  Ids "<axiom>@<degree>".  Order > 2 is rejected with BadOrder.
Report check_deformation(const DeformationFamily& d);

/// The six trivial-deformation consequence equations with omega taken from
/// nijenhuis_deform.  Ids "TD1-nw".."TD3-ne".
Report check_trivial_deformation(const ThreeHomLDend& a, const LinearMap& n);

/// N stays Nijenhuis on the horizontal, vertical and commutator structures.
/// Ids "descend:h", "descend:v", "descend:c".
Report nijenhuis_descends(const ThreeHomLDend& a, const LinearMap& n);

/// For a derivation N of both products: the Nijenhuis verdict equals the
/// weight-0 Rota-Baxter verdict (reported as verdict equality).
Report derivation_rb_bridge(const ThreeHomLDend& a, const LinearMap& n);

/// n Nijenhuis on the pre-Lie algebra, rb Rota-Baxter, n rb = rb n  =>  n is
/// Nijenhuis on ldend_from_rb(a, rb); the report is that final check.
Report check_nijenhuis_prelie_compat(const ThreeHomPreLie& a, const LinearMap& n,
                                     const LinearMap& rb);

}  // namespace ternalg
