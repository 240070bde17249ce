#pragma once

#include "ternalg/algebras.hpp"
#include "ternalg/rep_tensor.hpp"

namespace ternalg {

/// Representation of a 3-Hom-Lie algebra on a module with twist phi.
struct LieRep {
  ThreeHomLie alg;
  RepTensor rho;  // skew flag set
  LinearMap phi;
};

/// Representation (l, r, phi) of a 3-Hom-pre-Lie algebra; l is skew, r is not.
struct PreLieRep {
  ThreeHomPreLie alg;
  RepTensor l;
  RepTensor r;
  LinearMap phi;
};

/// Identity ids "rskew", "phi", "REP1", "REP2"; throws BadBase when the base
/// algebra fails its own check.  The witness tuple is the basis tuple plus
/// the module basis column where the two sides first differ.
Report check_lie_rep(const LieRep& r);

/// The two derived identities every valid representation satisfies
/// (ids "REPD1", "REPD2"); an independent cross-check of the checker.
Report rep_derived_identities(const LieRep& r);

/// Bracket on A + V built unconditionally; it passes check_3homlie exactly
/// when the input passes check_lie_rep.
ThreeHomLie semidirect_lie(const LieRep& r);

/// rho(e_i, e_j) v = [e_i, e_j, v].
LieRep adjoint_rep(const ThreeHomLie& a);

/// Twisted dual: rho*(x,y) = -(rho(a^-1 x, a^-1 y) phi^-2)^T on the dual
/// basis, twist (phi^-1)^T.
LieRep dual_lie_rep(const LieRep& r);

/// dual_lie_rep of the adjoint representation.
LieRep coadjoint_rep(const ThreeHomLie& a);

/// Identity ids "l:<id>" (sub-adjacent Lie-rep check of l), "phi-r",
/// "PREP1".."PREP4"; mu is expanded as l + r - r∘swap.
Report check_prelie_rep(const PreLieRep& p);

ThreeHomPreLie semidirect_prelie(const PreLieRep& p);

/// L(x,y)z = {x,y,z}, R(x,y)z = {z,x,y}.
PreLieRep adjoint_prelie_rep(const ThreeHomPreLie& a);

/// mu(x,y) = l(x,y) + r(x,y) - r(y,x) as a representation of the sub-adjacent
/// algebra.
LieRep mu_rep(const PreLieRep& p);

/// (mu*, -r*) on the dual module, twist (phi^-1)^T.
PreLieRep dual_prelie_rep(const PreLieRep& p);

/// (phi∘l, phi∘r, phi) over the Yau twist of the (untwisted) base algebra by
/// alpha; requires the stated commutation relations.
PreLieRep twist_rep(const PreLieRep& p, const LinearMap& alpha, const LinearMap& phi);

void validate(const LieRep& r);
void validate(const PreLieRep& p);

}  // namespace ternalg
