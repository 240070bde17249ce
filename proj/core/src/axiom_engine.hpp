#pragma once

// Internal machinery shared by the axiom checkers: every nested identity of
// the three algebra kinds is a sum of terms  outer(.., inner(..), ..)  where
// the outer product's two free slots carry alpha and the inner slots carry
// raw arguments.  Identities are expanded to dense 5-linear tensors and
// compared side against side; the first differing tuple is the witness.

#include <array>
#include <functional>
#include <vector>

#include "ternalg/report.hpp"
#include "ternalg/tensor.hpp"

namespace ternalg::detail {

enum class Pr { NW, NE, H, V, C };

struct AxTerm {
  Pr outer;
  int pos;  // slot of the nested product inside outer
  Pr inner;
  std::array<int, 2> outer_vars;  // variables read by outer's free slots, in slot order
  std::array<int, 3> inner_vars;  // variables read by the inner slots
  int sign;
};

struct Axiom {
  const char* id;
  std::vector<AxTerm> lhs;
  std::vector<AxTerm> rhs;
};

const std::vector<Axiom>& ld_axioms();  // LD1..LD6 over {NW, NE, H, V, C}
const std::vector<Axiom>& pl_axioms();  // PL1, PL2 over {NW = product, C}
const std::vector<Axiom>& fi_axioms();  // FI over {NW = bracket}

using TensorOf = std::function<const TriTensor&(Pr)>;

/// Runs the axiom list against base tensors; alpha twists outer free slots.
/// Violations are appended to the builder (first one stops everything).
void run_axioms(ReportBuilder& rb, const std::vector<Axiom>& axioms, int dim,
                const TensorOf& tensor_of, const LinearMap& alpha);

/// Polynomial variant for lambda-deformations: each product id maps to the
/// list of lambda coefficients; the degree-d part of every axiom must vanish
/// for d = 0..order.  Identity ids are suffixed "@d".
using PolyOf = std::function<const std::vector<TriTensor>&(Pr)>;
void run_axioms_poly(ReportBuilder& rb, const std::vector<Axiom>& axioms, int dim,
                     const PolyOf& poly_of, const LinearMap& alpha, int order);

}  // namespace ternalg::detail
