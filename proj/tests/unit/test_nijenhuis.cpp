#include <doctest.h>

#include "golden_instances.hpp"

using namespace ternalg;
using golden::q;

namespace {

const LinearMap kZero3 = LinearMap(3);
const LinearMap kId3 = LinearMap::identity(3);
const LinearMap kTwoId3 = LinearMap::diagonal({q(2), q(2), q(2)});

}  // namespace

TEST_CASE("scalar multiples of the identity are always Nijenhuis") {
  ThreeHomLDend d = golden::d3();
  for (long long c : {0, 1, 2, -3, 5}) {
    LinearMap n = LinearMap::diagonal({q(c), q(c), q(c)});
    CHECK(check_nijenhuis(d, n).pass());
  }
  // rational scalar too
  CHECK(check_nijenhuis(d, LinearMap::diagonal({q(1, 2), q(1, 2), q(1, 2)})).pass());
  CHECK(check_nijenhuis(golden::zero_ldend(2), LinearMap::identity(2)).pass());

  // the other target kinds
  CHECK(check_nijenhuis(golden::p3(), kTwoId3).pass());
  CHECK(check_nijenhuis(golden::t3(), kTwoId3).pass());
}

TEST_CASE("S and the scaling derivation are Nijenhuis on d3") {
  CHECK(check_nijenhuis(golden::d3(), golden::s_map()).pass());
  CHECK(check_nijenhuis(golden::d3(), golden::derivation_d3()).pass());
}

TEST_CASE("a non-Nijenhuis candidate fails with a witness") {
  // break alpha-commutation first
  ThreeHomLDend tw = yau_twist(golden::d3(), golden::m_morphism());
  LinearMap shear(3);
  shear.at(0, 0) = q(1);
  shear.at(1, 1) = q(1);
  shear.at(2, 2) = q(1);
  shear.at(0, 1) = q(1);
  Report r = check_nijenhuis(tw, shear);
  REQUIRE(!r.pass());
  CHECK(r.violations[0].identity == "alphaN");
}

TEST_CASE("first and second order deformed products for N = identity") {
  ThreeHomLDend d = golden::d3();
  CHECK(deformed_first(d.nw, kId3) == d.nw.scaled(q(2)));
  CHECK(deformed_second(d.nw, kId3) == d.nw);
  CHECK(deformed_first(d.nw, kZero3).is_zero());
  CHECK(deformed_second(d.nw, kZero3).is_zero());
  CHECK(deformed_first(d.nw, kTwoId3) == d.nw.scaled(q(4)));
}

TEST_CASE("nijenhuis_deform: first-order algebra and order-2 family") {
  ThreeHomLDend d = golden::d3();
  for (const LinearMap* n :
       {&kZero3, &kId3, &kTwoId3}) {
    NijenhuisDeformation nd = nijenhuis_deform(d, *n);
    CHECK(check_3homldend(nd.first).pass());
    CHECK(check_deformation(nd.family).pass());
    CHECK(check_trivial_deformation(d, *n).pass());
    CHECK(nijenhuis_descends(d, *n).pass());
  }
  // non-scalar Nijenhuis operators from the derived instance
  for (const LinearMap& n : {golden::s_map(), golden::derivation_d3()}) {
    NijenhuisDeformation nd = nijenhuis_deform(d, n);
    CHECK(check_3homldend(nd.first).pass());
    CHECK(check_deformation(nd.family).pass());
    CHECK(check_trivial_deformation(d, n).pass());
    CHECK(nijenhuis_descends(d, n).pass());
  }

  LinearMap shear(3);
  shear.at(0, 0) = q(1);
  shear.at(1, 1) = q(1);
  shear.at(2, 2) = q(1);
  shear.at(0, 1) = q(1);
  ThreeHomLDend tw = yau_twist(d, golden::m_morphism());
  CHECK_THROWS_AS(nijenhuis_deform(tw, shear), NotNijenhuis);
}

TEST_CASE("the first-order morphism statement fails exactly where the oracle says") {
  // N(p^1_N(x,y,z)) = p(Nx,Ny,Nz) holds for N = 0 and N = 2 id but fails for
  // N = identity and N = S on any algebra with nonzero products (first-order
  // side: N p^1 = 2c^2 p vs c^3 p for N = c id); the second-order morphism is
  // the Nijenhuis identity itself and always holds.
  ThreeHomLDend d = golden::d3();
  CHECK(deformation_morphism_first(d, kZero3));
  CHECK(deformation_morphism_first(d, kTwoId3));
  CHECK(deformation_morphism_first(d, golden::derivation_d3()));
  CHECK(!deformation_morphism_first(d, kId3));
  CHECK(!deformation_morphism_first(d, golden::s_map()));

  for (const LinearMap& n :
       {kZero3, kId3, kTwoId3, golden::s_map(), golden::derivation_d3()})
    CHECK(deformation_morphism_second(d, n));

  // on the zero algebra the first-order morphism is vacuous
  CHECK(deformation_morphism_first(golden::zero_ldend(2), LinearMap::identity(2)));
}

TEST_CASE("check_deformation edge cases") {
  ThreeHomLDend d = golden::d3();

  // omega1 = base products: (1 + lambda)^2-scaled family, valid at order 1
  DeformationFamily fam{d, d.nw, d.ne, TriTensor(3), TriTensor(3), 1};
  CHECK(check_deformation(fam).pass());

  // zero omegas reduce to the base axioms at every degree
  DeformationFamily zero_fam{d, TriTensor(3), TriTensor(3), TriTensor(3), TriTensor(3), 2};
  CHECK(check_deformation(zero_fam).pass());

  // order 0 only re-checks the base
  DeformationFamily order0{d, d.nw, d.ne, d.nw, d.ne, 0};
  CHECK(check_deformation(order0).pass());

  // a junk first-order term fails at lambda^1 with the axiom named
  TriTensor junk(3);
  junk.at(0, 1, 2, 0) = q(1);
  junk.at(1, 0, 2, 0) = q(-1);
  DeformationFamily bad{d, junk, TriTensor(3), TriTensor(3), TriTensor(3), 2};
  Report r = check_deformation(bad);
  REQUIRE(!r.pass());
  CHECK(r.violations[0].identity.find("@1") != std::string::npos);

  DeformationFamily order3{d, d.nw, d.ne, d.nw, d.ne, 3};
  CHECK_THROWS_AS(check_deformation(order3), BadOrder);
}

TEST_CASE("derivation bridge: Nijenhuis iff Rota-Baxter for derivations") {
  // diag(1,0,-1) is a derivation of both products of d3
  Report r = derivation_rb_bridge(golden::d3(), golden::derivation_d3());
  CHECK(r.pass());
  CHECK(r.detail == "nijenhuis=pass rotabaxter=pass");

  // zero operator and zero algebra are trivially fine
  CHECK(derivation_rb_bridge(golden::d3(), kZero3).pass());
  CHECK(derivation_rb_bridge(golden::zero_ldend(2), golden::rotation2()).pass());

  // identity is not a derivation of a nonzero product
  CHECK_THROWS_AS(derivation_rb_bridge(golden::d3(), kId3), NotADerivation);
}

TEST_CASE("Nijenhuis operators transfer through Rota-Baxter splittings") {
  // n Nijenhuis on p3, S Rota-Baxter, n S = S n  =>  n Nijenhuis on d3
  CHECK(check_nijenhuis_prelie_compat(golden::p3(), kId3, golden::s_map()).pass());
  CHECK(check_nijenhuis_prelie_compat(golden::p3(), golden::s_map(), golden::s_map()).pass());
  CHECK(check_nijenhuis_prelie_compat(golden::p3(), kZero3, golden::s_map()).pass());

  LinearMap not_rb = kId3;
  CHECK_THROWS_AS(check_nijenhuis_prelie_compat(golden::p3(), kZero3, not_rb), NotAnOOperator);

  // nilpotent e2 -> e0 is Nijenhuis on p3 but does not commute with S
  LinearMap n20(3);
  n20.at(0, 2) = q(1);
  CHECK(check_nijenhuis(golden::p3(), n20).pass());
  CHECK_THROWS_AS(check_nijenhuis_prelie_compat(golden::p3(), n20, golden::s_map()),
                  NotCommuting);
}
