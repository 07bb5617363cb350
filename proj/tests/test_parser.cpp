#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "commute/families.hpp"
#include "commute/spec_parser.hpp"

using namespace commute;

namespace {

ParseError capture(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  return ParseError(0, "unreachable");
}

}  // namespace

TEST_CASE("atoms parse into the right family and parameters", "[parser]") {
  CHECK(parse_spec("D(8)").kind == FamilyKind::Dihedral);
  CHECK(parse_spec("D(8)").params[0] == 4);  // stored as m, order 2m
  CHECK(parse_spec("Q(8)").params[0] == 2);  // stored as m, order 4m
  CHECK(parse_spec("QD(16)").params[0] == 4);  // stored as n, order 2^n

  FamilySpec meta = parse_spec("M(3,4)");
  CHECK(meta.kind == FamilyKind::Metacyclic);
  CHECK(meta.params[0] == 3);
  CHECK(meta.params[1] == 4);

  CHECK(parse_spec("U6(3)").kind == FamilyKind::U6n);
  CHECK(parse_spec("Sz2").kind == FamilyKind::Sz2);
  CHECK(parse_spec("GL2(5)").params[0] == 5);
  CHECK(parse_spec("PSL2(8)").kind == FamilyKind::PSL2);
  CHECK(parse_spec("ATheta(2)").kind == FamilyKind::HanakiTheta);
  CHECK(parse_spec("AP(1,5)").params[1] == 5);
  CHECK(parse_spec("PQ(5,11)").params[0] == 5);
  CHECK(parse_spec("Z(6)").kind == FamilyKind::Cyclic);
  CHECK(parse_spec("S(4)").kind == FamilyKind::Sym);
}

TEST_CASE("all six order-16 member names parse", "[parser]") {
  CHECK(parse_spec("G16(Z2xD8)").which16 == Order16Kind::Z2xD8);
  CHECK(parse_spec("G16(Z2xQ8)").which16 == Order16Kind::Z2xQ8);
  CHECK(parse_spec("G16(M16)").which16 == Order16Kind::M16);
  CHECK(parse_spec("G16(Z4rZ4)").which16 == Order16Kind::Z4rZ4);
  CHECK(parse_spec("G16(D8sZ4)").which16 == Order16Kind::D8sZ4);
  CHECK(parse_spec("G16(SG16_3)").which16 == Order16Kind::SG16_3);
  CHECK(parse_spec("G16(M16)").kind == FamilyKind::Order16);
}

TEST_CASE("products compose left-associatively", "[parser]") {
  FamilySpec p = parse_spec("D(6)xZ(2)xZ(3)");
  REQUIRE(p.kind == FamilyKind::Product);
  REQUIRE(p.factors.size() == 2);
  CHECK(p.factors[0].kind == FamilyKind::Product);
  CHECK(p.factors[0].factors[0].kind == FamilyKind::Dihedral);
  CHECK(p.factors[0].factors[1].kind == FamilyKind::Cyclic);
  CHECK(p.factors[1].kind == FamilyKind::Cyclic);
  CHECK(p.factors[1].params[0] == 3);
  CHECK(render(p) == "D(6)xZ(2)xZ(3)");
}

TEST_CASE("a bare-name atom splits cleanly at the product separator",
          "[parser]") {
  FamilySpec p = parse_spec("Sz2xZ(2)");
  REQUIRE(p.kind == FamilyKind::Product);
  CHECK(p.factors[0].kind == FamilyKind::Sz2);
  CHECK(p.factors[1].kind == FamilyKind::Cyclic);
  CHECK(render(p) == "Sz2xZ(2)");
}

TEST_CASE("spaces and tabs between tokens are skipped", "[parser]") {
  CHECK(render(parse_spec(" D( 8 ) x Z( 2 ) ")) == "D(8)xZ(2)");
  CHECK(render(parse_spec("D (8)")) == "D(8)");
  CHECK(render(parse_spec("M( 3 , 4 )")) == "M(3,4)");
  CHECK(render(parse_spec("\tSz2\t")) == "Sz2");
}

TEST_CASE("parse errors carry the byte offset of the offending token",
          "[parser]") {
  ParseError e = capture("D(8");
  CHECK(e.offset == 3);
  CHECK(std::string(e.what()) == "syntax error at byte 3: expected ')'");

  CHECK(capture("Foo(3)").offset == 0);
  CHECK(std::string(capture("Foo(3)").what()) ==
        "syntax error at byte 0: unknown family 'Foo'");

  CHECK(capture("D(8)y").offset == 4);
  CHECK(std::string(capture("D(8)y").what()) ==
        "syntax error at byte 4: expected 'x' or end of input");

  CHECK(capture("").offset == 0);
  CHECK(std::string(capture("").what()) ==
        "syntax error at byte 0: expected a family atom");

  CHECK(std::string(capture("D(8)x").what()) ==
        "syntax error at byte 5: expected a family atom");
  CHECK(std::string(capture("D()").what()) ==
        "syntax error at byte 2: expected an integer");
  CHECK(std::string(capture("M(3 4)").what()) ==
        "syntax error at byte 4: expected ','");
  CHECK(std::string(capture("G16(Zork)").what()) ==
        "syntax error at byte 4: unknown order-16 member 'Zork'");
}

TEST_CASE("integer literals are capped at twelve digits", "[parser]") {
  CHECK(parse_spec("Z(999999999999)").params[0] == 999999999999ULL);
  ParseError e = capture("Z(1234567890123)");
  CHECK(e.offset == 2);
  CHECK(std::string(e.what()) ==
        "syntax error at byte 2: integer literal too large");
}

TEST_CASE("range violations surface at construction, not parse time",
          "[parser]") {
  FamilySpec qd8 = parse_spec("QD(8)");  // parses: order 8 is a power of two
  CHECK(qd8.params[0] == 3);
  CHECK_THROWS_AS(construct(qd8), ConstraintError);
  CHECK_THROWS_AS(parse_spec("D(7)"), ConstraintError);  // odd order
  CHECK_THROWS_AS(parse_spec("Q(10)"), ConstraintError);
  CHECK_THROWS_AS(parse_spec("QD(24)"), ConstraintError);
}
