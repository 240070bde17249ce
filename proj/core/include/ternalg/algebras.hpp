#pragma once

#include "ternalg/report.hpp"
#include "ternalg/tensor.hpp"

namespace ternalg {

/// Skew ternary bracket with twist map alpha; validity is decided by
/// check_3homlie, never assumed.
struct ThreeHomLie {
  int dim = 0;
  TriTensor bracket;
  LinearMap alpha;
  Mode mode = Mode::Real;
};

/// Ternary product skew in its first two slots (3-Hom-pre-Lie candidate).
struct ThreeHomPreLie {
  int dim = 0;
  TriTensor prod;
  LinearMap alpha;
  Mode mode = Mode::Real;
};

/// Pair of ternary products (nw, ne) with twist map (3-Hom-L-dendriform
/// candidate).
struct ThreeHomLDend {
  int dim = 0;
  TriTensor nw;
  TriTensor ne;
  LinearMap alpha;
  Mode mode = Mode::Real;
};

/// Binary skew bracket with a twist; only skew-symmetry is ever checked
/// (the trace construction re-verifies its output directly).
struct HomLie {
  int dim = 0;
  BiTensor bracket2;
  LinearMap alpha;
  Mode mode = Mode::Real;
};

/// Exhaustive axiom checks over all basis tuples.  Identity ids: "skew",
/// "mult", "FI" / "PL0", "mult", "PL1", "PL2" / "LD0", "mult-nw", "mult-ne",
/// "LD1".."LD6".  A failing algebra is a result, never an exception.
Report check_3homlie(const ThreeHomLie& a);
Report check_3hompre(const ThreeHomPreLie& a);
Report check_3homldend(const ThreeHomLDend& a);

/// Cyclic-sum bracket {x,y,z}+{y,z,x}+{z,x,y}; requires a valid pre-Lie input.
ThreeHomLie subadjacent_lie(const ThreeHomPreLie& a);

ThreeHomPreLie horizontal_prelie(const ThreeHomLDend& a);
ThreeHomPreLie vertical_prelie(const ThreeHomLDend& a);
ThreeHomLie commutator_lie(const ThreeHomLDend& a);

/// Composes the products with t on all slots and installs t as the twist.
ThreeHomLie yau_twist(const ThreeHomLie& a, const LinearMap& t);
ThreeHomPreLie yau_twist(const ThreeHomPreLie& a, const LinearMap& t);
ThreeHomLDend yau_twist(const ThreeHomLDend& a, const LinearMap& t);

/// f(p_src(x,y,z)) = p_dst(f x, f y, f z) for every product, plus twist
/// intertwining f alpha_src = alpha_dst f.
bool is_lie_morphism(const LinearMap& f, const ThreeHomLie& src, const ThreeHomLie& dst);
bool is_prelie_morphism(const LinearMap& f, const ThreeHomPreLie& src, const ThreeHomPreLie& dst);
bool is_ldend_morphism(const LinearMap& f, const ThreeHomLDend& src, const ThreeHomLDend& dst);

/// Structural validation (dimensions agree, real-mode data is real).
void validate(const ThreeHomLie& a);
void validate(const ThreeHomPreLie& a);
void validate(const ThreeHomLDend& a);
void validate(const HomLie& a);

}  // namespace ternalg
