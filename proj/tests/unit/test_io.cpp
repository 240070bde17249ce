#include <doctest.h>

#include <random>

#include "golden_instances.hpp"

using namespace ternalg;
using golden::q;

TEST_CASE("parse a minimal zero-algebra document") {
  Document d = parse_document("kind: 3hom_lie\nmode: real\ndim: 2\n");
  CHECK(d.kind == DocKind::Lie3);
  CHECK(d.dim == 2);
  CHECK(d.sections.empty());
  ThreeHomLie a = lie_from_document(d);
  CHECK(a.bracket.is_zero());
  CHECK(check_3homlie(a).pass());  // zero bracket, zero twist: passes
}

TEST_CASE("documents round-trip bit-exactly through serialize") {
  // canonical documents produced from domain values
  std::vector<Document> docs = {
      to_document(golden::dim3lie()),
      to_document(golden::p3()),
      to_document(golden::d3()),
      to_document(adjoint_rep(golden::dim3lie())),
      to_document(adjoint_prelie_rep(golden::p3())),
      to_document(golden::p4_symplectic()),
      to_document(golden::homlie3()),
      to_document(golden::s_map()),
      covector_to_document(golden::tau_e2()),
      to_document(complexify(golden::d3())),
  };
  for (const Document& d : docs) {
    std::string text = serialize(d);
    Document back = parse_document(text);
    CHECK(back == d);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("parsing canonicalizes messy but well-formed input") {
  const char* messy =
      "# trace bracket, scrambled\n"
      "kind: 3hom_lie\n"
      "mode: real\n"
      "dim: 3\n"
      "\n"
      "[alpha]\n"
      "2 2 = 1\n"
      "0 0 = 1\n"
      "1 1 = 1\n"
      "[bracket]\n"
      "2 1 0 1 = -1\n"
      "0 1 2 1 = 1   # one orbit entry\n"
      "1 0 2 1 = -1\n"
      "0 2 1 1 = -1\n"
      "1 2 0 1 = 1\n"
      "2 0 1 1 = 1\n"
      "0 0 0 0 = 0\n";
  Document d = parse_document(messy);
  CHECK(d == to_document(golden::t3()));
  // serialize . parse is the canonical form: sorted entries, no zero entries
  CHECK(serialize(d) == serialize(to_document(golden::t3())));
}

TEST_CASE("scalar grammar") {
  Document d = parse_document(
      "kind: linear_map\nmode: complex\ndim: 2\n[m]\n"
      "0 0 = 1/2+3/4 i\n0 1 = -2 i\n1 0 = 5\n1 1 = -1/3-1/7 i\n");
  LinearMap m = map_from_document(d);
  CHECK(m.at(0, 0) == q(1, 2) + q(3, 4) * Scalar::i());
  CHECK(m.at(0, 1) == q(-2) * Scalar::i());
  CHECK(m.at(1, 0) == q(5));
  CHECK(m.at(1, 1) == q(-1, 3) - q(1, 7) * Scalar::i());
  // canonical output reproduces the same spellings
  CHECK(serialize(to_document(m, Mode::Complex)) == serialize(d));
}

TEST_CASE("parse errors carry positions and reasons") {
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 3\n[bracket]\n0 1 2 0 = 1/0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("kind: bogus\ndim: 3\n"), ParseError);
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 3\n[nope]\n"), ParseError);
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 3\n[bracket]\n0 1 2 = 1\n"), ParseError);
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 3\n[bracket]\n0 1 2 3 = 1\n"), RangeError);
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 3\n[bracket]\n0 1 2 0 = 2 i\n"),
                  ParseError);  // imaginary entry in a real-mode document
  CHECK_THROWS_AS(
      parse_document("kind: 3hom_lie\ndim: 3\n[bracket]\n0 1 2 0 = 1\n0 1 2 0 = 2\n"),
      ParseError);  // duplicate entry
  CHECK_THROWS_AS(parse_document("kind: 3hom_lie\ndim: 0\n"), ParseError);
  CHECK_THROWS_AS(parse_document(""), ParseError);

  try {
    parse_document("kind: 3hom_lie\nmode: real\ndim: 3\n[bracket]\n0 1 2 0 = 1/0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
  }
}

TEST_CASE("random sparse documents survive the round trip") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> idx(0, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int it = 0; it < 25; ++it) {
    TriTensor nw(4), ne(4);
    for (int n = 0; n < 6; ++n) {
      nw.at(idx(gen), idx(gen), idx(gen), idx(gen)) = Scalar::of(num(gen), den(gen));
      ne.at(idx(gen), idx(gen), idx(gen), idx(gen)) =
          Scalar::of(num(gen), den(gen)) + Scalar::of(num(gen), den(gen)) * Scalar::i();
    }
    LinearMap alpha(4);
    for (int i = 0; i < 4; ++i) alpha.at(i, idx(gen)) = Scalar::of(num(gen), den(gen));
    ThreeHomLDend a{4, std::move(nw), std::move(ne), std::move(alpha), Mode::Complex};
    Document doc = to_document(a);
    Document back = parse_document(serialize(doc));
    CHECK(back == doc);
    ThreeHomLDend a2 = ldend_from_document(back);
    CHECK(a2.nw == a.nw);
    CHECK(a2.ne == a.ne);
    CHECK(a2.alpha == a.alpha);
  }
}

TEST_CASE("machine reports are deterministic modulo wall time") {
  Report r1 = check_3homlie(golden::skew_broken());
  Report r2 = check_3homlie(golden::skew_broken());
  CHECK(render_report(r1, true, false) == render_report(r2, true, false));
  std::string text = render_report(r1, true, false);
  CHECK(text.find("suite=3homlie status=fail") != std::string::npos);
  CHECK(text.find("violation id=skew tuple=0,1,2") != std::string::npos);
  CHECK(text.find("wall_ms") == std::string::npos);
  std::string with_wall = render_report(r1, true, true);
  CHECK(with_wall.find("wall_ms=") != std::string::npos);

  std::string human = render_report(r1, false, false);
  CHECK(human.find("FAIL") != std::string::npos);
}
