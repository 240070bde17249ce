#pragma once

#include "ternalg/algebras.hpp"

namespace ternalg {

struct ProductCandidate {
  ThreeHomLDend alg;
  LinearMap e;
};

struct ComplexCandidate {
  ThreeHomLDend alg;
  LinearMap j;
};

/// Eigenspace bases in reduced row-echelon form; for complex structures
/// basis_plus spans the +i eigenspace q and basis_minus its conjugate.
struct Decomposition {
  std::vector<Vec> basis_plus;
  std::vector<Vec> basis_minus;
};

struct StructureLabels {
  bool strict = false;
  bool abelian = false;
  bool strong = false;
  bool perfect = false;
  bool operator==(const StructureLabels&) const = default;
};

/// E^2 = id, E alpha = alpha E and the two integrability identities
/// (ids "E2", "Ealpha", "INT-nw", "INT-ne").
Report check_product(const ProductCandidate& c);

/// Exact +1/-1 eigenspaces; verifies direct sum, alpha-stability and closure
/// of both eigenspaces under both products.
Decomposition product_decompose(const ProductCandidate& c);

/// E = +1 on span(basis_plus), -1 on span(basis_minus); the decomposition is
/// validated (direct sum, closure, alpha-stability) first.
ProductCandidate product_from_decomposition(const ThreeHomLDend& a, const Decomposition& d);

/// Special integrability regimes, each decided by its exhaustive identity.
/// By default the candidate must pass check_product; with allow_almost only
/// E^2 = id and E alpha = alpha E are required.
StructureLabels classify_product(const ProductCandidate& c, bool allow_almost = false);

/// J^2 = -id, J alpha = alpha J and the two integrability identities
/// (ids "J2", "Jalpha", "INT-nw", "INT-ne").
Report check_complex(const ComplexCandidate& c);

/// Same structure constants over Gaussian rationals.
ThreeHomLDend complexify(const ThreeHomLDend& a);

/// Entry-wise conjugation of both products (an involution in complex mode).
ThreeHomLDend conjugated(const ThreeHomLDend& a);

/// q = span{e_k - i J e_k} inside the complexification (real-mode input);
/// verifies the direct sum with the conjugate span and closure of q.
Decomposition complex_decompose(const ComplexCandidate& c);

/// J(X + conj(Y)) = iX - i conj(Y) for X, Y in span(q); the restriction to
/// the real form must have real entries (NotRealizable otherwise).
LinearMap complex_from_subalgebra(const ThreeHomLDend& complexified, const std::vector<Vec>& q);

StructureLabels classify_complex(const ComplexCandidate& c, bool allow_almost = false);

/// nw_J(x,y,z) = (nw(x,y,z) - nw(x,Jy,Jz) - nw(Jx,y,Jz) - nw(Jx,Jy,z))/4 and
/// likewise for ne.
ThreeHomLDend j_twisted_products(const ComplexCandidate& c);

/// On a complex-mode algebra: check_product(E) and check_complex(iE) must
/// agree; the report records both verdicts and passes iff they match.
Report product_complex_correspondence(const ThreeHomLDend& complex_alg, const LinearMap& e);

}  // namespace ternalg
