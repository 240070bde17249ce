#pragma once

#include "ternalg/representations.hpp"

namespace ternalg {

/// Candidate O-operator T: module -> algebra over a Lie or pre-Lie
/// representation; the Rota-Baxter case is context = adjoint with a square T.
struct LieOOperator {
  LieRep context;
  RectMap t;
};

struct PreLieOOperator {
  PreLieRep context;
  RectMap t;
};

/// Identity ids "T-phi" (twist intertwining) and "O" (the defining identity
/// over all module basis triples).  Throws BadRep when the context fails its
/// representation check.
Report check_o_operator(const LieOOperator& c);
Report check_o_operator(const PreLieOOperator& c);

/// Weight-0 Rota-Baxter identity of n for a single ternary product
/// (id "RB"); used for the adjoint specialisations and the derivation bridge.
Report check_rota_baxter(const TriTensor& product, const LinearMap& alpha, const LinearMap& n);

/// {u,v,w} = rho(Tu,Tv)w on the module, twist phi; T becomes a morphism from
/// the sub-adjacent algebra to the base (verified).
ThreeHomPreLie prelie_from_o(const LieOOperator& c);

/// nw(u,v,w) = l(Tu,Tv)w, ne(u,v,w) = r(Tv,Tw)u, twist phi; T becomes a
/// morphism of the associated horizontal pre-Lie structures (verified).
ThreeHomLDend ldend_from_o(const PreLieOOperator& c);

/// nw(x,y,z) = {Rx,Ry,z}, ne(x,y,z) = {x,Ry,Rz}; rb must be a Rota-Baxter
/// operator on a, i.e. an O-operator for the adjoint representation.
ThreeHomLDend ldend_from_rb(const ThreeHomPreLie& a, const LinearMap& rb);

/// For invertible T: nw(x,y,z) = T(l(x,y)T^-1 z), ne(x,y,z) = T(r(y,z)T^-1 x)
/// on the base algebra; satisfies nw + ne - ne∘swap12 = product (verified).
ThreeHomLDend compatible_ldend(const PreLieOOperator& c);

/// Skew bilinear form on a 3-Hom-pre-Lie algebra.
struct SymplecticForm {
  ThreeHomPreLie alg;
  BilinearForm b;
};

/// Identity ids "skew", "nondegenerate" (kernel witness), "closed".
Report check_symplectic(const SymplecticForm& s);

/// The compatible structure through the coadjoint-context O-operator
/// T: A* -> A with <T^-1 x, y> = B(x, y).
ThreeHomLDend ldend_from_symplectic(const SymplecticForm& s);

/// {a(x),a(y),a(z)}' defined by B({a(x),a(y),a(z)}', a^2(w)) =
/// B(a(z),[x,y,w]^C) - B(a(z),{w,x,y}) + B(a(z),{w,y,x}).
ThreeHomPreLie prelie_prime_from_symplectic(const SymplecticForm& s);

/// nw(x,y,z) = [R1R2 x, R1R2 y, z], ne(x,y,z) = [R1 x, R1R2 y, R2 z] for a
/// commuting pair of Rota-Baxter operators; the intermediate lemma (r2 stays
/// Rota-Baxter on {x,y,z} = [R1 x, R1 y, z]) is verified.
ThreeHomLDend ldend_from_commuting_rb(const ThreeHomLie& a, const LinearMap& r1,
                                      const LinearMap& r2);

/// [x,y,z]_tau = tau(x)[y,z] + tau(y)[z,x] + tau(z)[x,y] for a trace
/// function tau (vanishes on brackets, fixed by alpha).
ThreeHomLie trace_3homlie(const HomLie& h, const Vec& tau);

/// The closing-remark dendriform structure from a trace function and a
/// commuting Rota-Baxter pair; equals ldend_from_commuting_rb over
/// trace_3homlie (verified).
ThreeHomLDend trace_rb_ldend(const HomLie& h, const Vec& tau, const LinearMap& r1,
                             const LinearMap& r2);

}  // namespace ternalg
