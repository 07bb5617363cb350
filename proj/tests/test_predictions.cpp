#include <catch2/catch_amalgamated.hpp>

#include "commute/families.hpp"
#include "commute/group.hpp"
#include "commute/predictions.hpp"
#include "commute/spec_parser.hpp"
#include "commute/spectrum.hpp"

using namespace commute;

namespace {

Prediction family_or_fail(const FamilySpec& spec) {
  auto p = predict_family(spec);
  REQUIRE(p.has_value());
  return *p;
}

}  // namespace

TEST_CASE("dihedral closed forms, odd and even", "[predictions]") {
  SECTION("odd m lists a zero eigenvalue per reflection") {
    Prediction p = family_or_fail(FamilySpec::dihedral(3));
    CHECK(p.source == "dihedral-family");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 1}, {0, 3}, {1, 1}}));
    CHECK(*p.energy_printed == 2);
    CHECK(*p.energy_from_spectrum == 2);
    CHECK_FALSE(p.internally_inconsistent());
  }
  SECTION("even m = 4 merges the top eigenvalue into the ones") {
    Prediction p = family_or_fail(FamilySpec::dihedral(4));
    CHECK(*p.spectrum == Spectrum::exact({{-1, 3}, {1, 3}}));
    CHECK(*p.energy_printed == 6);
    CHECK_FALSE(p.internally_inconsistent());
  }
  SECTION("even m = 6") {
    Prediction p = family_or_fail(FamilySpec::dihedral(6));
    CHECK(*p.spectrum == Spectrum::exact({{-1, 6}, {1, 3}, {3, 1}}));
    CHECK(*p.energy_printed == 12);
  }
}

TEST_CASE("dicyclic closed form carries a misprinted energy", "[predictions]") {
  SECTION("m = 2 merges 2m-3 into the ones") {
    Prediction p = family_or_fail(FamilySpec::dicyclic(2));
    CHECK(p.source == "dicyclic-family");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 3}, {1, 3}}));
    CHECK(*p.energy_printed == 9);
    CHECK(*p.energy_from_spectrum == 6);
    CHECK(p.internally_inconsistent());
    CHECK_FALSE(p.note.empty());
  }
  SECTION("m = 3") {
    Prediction p = family_or_fail(FamilySpec::dicyclic(3));
    CHECK(*p.spectrum == Spectrum::exact({{-1, 6}, {1, 3}, {3, 1}}));
    CHECK(*p.energy_printed == 15);
    CHECK(*p.energy_from_spectrum == 12);
    CHECK(p.internally_inconsistent());
  }
}

TEST_CASE("quasidihedral closed form", "[predictions]") {
  Prediction p = family_or_fail(FamilySpec::quasidihedral(4));
  CHECK(p.source == "quasidihedral-family");
  CHECK(*p.spectrum == Spectrum::exact({{-1, 9}, {1, 4}, {5, 1}}));
  CHECK(*p.energy_printed == 18);
  CHECK_FALSE(p.internally_inconsistent());
}

TEST_CASE("metacyclic closed forms, odd and even", "[predictions]") {
  SECTION("odd m") {
    Prediction p = family_or_fail(FamilySpec::metacyclic(3, 2));
    CHECK(p.source == "metacyclic-family");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 6}, {1, 3}, {3, 1}}));
    CHECK(*p.energy_printed == 12);
    CHECK_FALSE(p.internally_inconsistent());
  }
  SECTION("even m = 4 merges mn-2n-1 into 2n-1") {
    Prediction p = family_or_fail(FamilySpec::metacyclic(4, 2));
    CHECK(*p.spectrum == Spectrum::exact({{-1, 9}, {3, 3}}));
    CHECK(*p.energy_printed == 18);
    CHECK_FALSE(p.internally_inconsistent());
  }
}

TEST_CASE("u6n closed form", "[predictions]") {
  Prediction p = family_or_fail(FamilySpec::u6n(3));
  CHECK(p.source == "u6n-family");
  CHECK(*p.spectrum == Spectrum::exact({{-1, 11}, {2, 3}, {5, 1}}));
  CHECK(*p.energy_printed == 22);
  CHECK_FALSE(p.internally_inconsistent());
}

TEST_CASE("projective and general linear closed forms", "[predictions]") {
  SECTION("PSL2 over the field of four elements") {
    Prediction p = family_or_fail(FamilySpec::psl2(4));
    CHECK(p.source == "psl2-family");
    CHECK(*p.spectrum ==
          Spectrum::exact({{-1, 38}, {1, 10}, {2, 5}, {3, 6}}));
    CHECK(*p.energy_printed == 76);
    CHECK_FALSE(p.internally_inconsistent());
  }
  SECTION("GL2 over the field of three elements") {
    Prediction p = family_or_fail(FamilySpec::gl2(3));
    CHECK(p.source == "gl2-family");
    CHECK(*p.spectrum ==
          Spectrum::exact({{-1, 33}, {1, 6}, {3, 4}, {5, 3}}));
    CHECK(*p.energy_printed == 66);
    CHECK_FALSE(p.internally_inconsistent());
  }
}

TEST_CASE("extraspecial-type closed forms", "[predictions]") {
  SECTION("theta family at n = 2") {
    Prediction p = family_or_fail(FamilySpec::hanaki_theta(2));
    CHECK(p.source == "hanaki-theta-family");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 9}, {3, 3}}));
    CHECK(*p.energy_printed == 18);
  }
  SECTION("p family at (1, 3)") {
    Prediction p = family_or_fail(FamilySpec::hanaki_p(1, 3));
    CHECK(p.source == "hanaki-p-family");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 20}, {5, 4}}));
    CHECK(*p.energy_printed == 40);
    CHECK_FALSE(p.internally_inconsistent());
  }
}

TEST_CASE("pq closed form is self-consistent but over-counts the vertices",
          "[predictions]") {
  Prediction p = family_or_fail(FamilySpec::pq(3, 7));
  CHECK(p.source == "pq-family");
  CHECK(*p.spectrum == Spectrum::exact({{-1, 13}, {1, 7}, {5, 1}}));
  CHECK(*p.energy_printed == 25);
  CHECK(*p.energy_from_spectrum == 25);
  // The printed energy matches the printed spectrum, so the row looks fine
  // in isolation; only the vertex count exposes it.  The group has pq - 1
  // non-central elements, one fewer than the multiplicities claim.
  CHECK_FALSE(p.internally_inconsistent());
  CHECK(p.spectrum->multiplicity_total() == 21);
  FiniteGroup g = construct(FamilySpec::pq(3, 7));
  CHECK(static_cast<long long>(g.order() - g.center().size()) == 20);
  CHECK_FALSE(p.note.empty());
}

TEST_CASE("families without a tabulated row yield no prediction",
          "[predictions]") {
  CHECK_FALSE(predict_family(FamilySpec::cyclic(6)).has_value());
  CHECK_FALSE(predict_family(FamilySpec::sym(4)).has_value());
  CHECK_FALSE(predict_family(FamilySpec::sz2()).has_value());
  CHECK_FALSE(
      predict_family(FamilySpec::order16(Order16Kind::Z2xD8)).has_value());
  CHECK_FALSE(predict_family(parse_spec("D(8)xZ(2)")).has_value());
}

TEST_CASE("the abelian-centralizer energy form mixes up its two sums",
          "[predictions]") {
  SECTION("quaternion group") {
    FiniteGroup g = construct(FamilySpec::dicyclic(2));
    Prediction p = predict_ac(g, g.centralizer_partition(), g.class_count());
    CHECK(p.source == "ac-theorem");
    CHECK(*p.spectrum == Spectrum::exact({{-1, 3}, {1, 3}}));
    // 2|G|(k - |Z|) - 2n(|Z|+1) = 2*8*(5-2) - 2*3*3.
    CHECK(*p.energy_printed == 30);
    CHECK(*p.energy_from_spectrum == 6);
    CHECK(p.internally_inconsistent());
  }
  SECTION("order-20 one-dimensional affine group") {
    FiniteGroup g = construct(FamilySpec::sz2());
    Prediction p = predict_ac(g, g.centralizer_partition(), g.class_count());
    CHECK(*p.spectrum == Spectrum::exact({{-1, 13}, {2, 5}, {3, 1}}));
    CHECK(*p.energy_printed == 136);
    CHECK(*p.energy_from_spectrum == 26);
    CHECK(p.internally_inconsistent());
  }
}

TEST_CASE("quotient-shape claims", "[predictions]") {
  SECTION("central quotient of rank two over two") {
    FiniteGroup g = construct(FamilySpec::dicyclic(2));
    auto rows = predict_quotient(g, g.centralizer_partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].source == "quotient-elementary-abelian");
    CHECK(*rows[0].spectrum == Spectrum::exact({{-1, 3}, {1, 3}}));
    CHECK(*rows[0].energy_printed == 6);
    CHECK_FALSE(rows[0].internally_inconsistent());
  }
  SECTION("central quotient of rank two over two, larger center") {
    FiniteGroup g = construct(FamilySpec::order16(Order16Kind::M16));
    auto rows = predict_quotient(g, g.centralizer_partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].source == "quotient-elementary-abelian");
    CHECK(*rows[0].spectrum == Spectrum::exact({{-1, 9}, {3, 3}}));
    CHECK(*rows[0].energy_printed == 18);
  }
  SECTION("dihedral central quotient") {
    FiniteGroup g = construct(parse_spec("D(6)xZ(3)"));
    auto rows = predict_quotient(g, g.centralizer_partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].source == "quotient-dihedral");
    CHECK(*rows[0].spectrum == Spectrum::exact({{-1, 11}, {2, 3}, {5, 1}}));
    CHECK(*rows[0].energy_printed == 22);
    CHECK_FALSE(rows[0].internally_inconsistent());
  }
  SECTION("affine central quotient carries a misprinted energy") {
    FiniteGroup g = construct(parse_spec("Sz2xZ(2)"));
    auto rows = predict_quotient(g, g.centralizer_partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].source == "quotient-sz2");
    CHECK(*rows[0].spectrum == Spectrum::exact({{-1, 32}, {5, 5}, {7, 1}}));
    CHECK(*rows[0].energy_printed == 44);
    CHECK(*rows[0].energy_from_spectrum == 64);
    CHECK(rows[0].internally_inconsistent());
    CHECK_FALSE(rows[0].note.empty());
  }
  SECTION("no recognized quotient shape") {
    FiniteGroup g = construct(FamilySpec::sym(4));
    CHECK(predict_quotient(g, g.centralizer_partition()).empty());
  }
}

TEST_CASE("centralizer-count claims", "[predictions]") {
  SECTION("four centralizers, which for an order-8 group is also p+2") {
    FiniteGroup g = construct(FamilySpec::dihedral(4));
    auto rows = predict_centralizer_class(g, g.centralizer_partition());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].source == "four-centralizer");
    CHECK(*rows[0].energy_printed == 6);
    CHECK_FALSE(rows[0].spectrum.has_value());
    CHECK(rows[1].source == "p-plus-two-centralizer");
    CHECK(*rows[1].energy_printed == 6);
  }
  SECTION("five centralizers in a p-group: both claims fire") {
    FiniteGroup g = construct(FamilySpec::hanaki_p(1, 3));
    auto rows = predict_centralizer_class(g, g.centralizer_partition());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].source == "p-plus-two-centralizer");
    CHECK(*rows[0].energy_printed == 40);
    CHECK(rows[1].source == "five-centralizer");
    CHECK(rows[1].admissible_energies ==
          std::vector<long long>{40, 22});
  }
  SECTION("five centralizers outside prime-power order") {
    FiniteGroup g = construct(FamilySpec::u6n(2));
    auto rows = predict_centralizer_class(g, g.centralizer_partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].source == "five-centralizer");
    CHECK(rows[0].admissible_energies ==
          std::vector<long long>{24, 12});
    CHECK_FALSE(rows[0].energy_printed.has_value());
  }
  SECTION("seven centralizers match nothing") {
    FiniteGroup g = construct(FamilySpec::sz2());
    CHECK(predict_centralizer_class(g, g.centralizer_partition()).empty());
  }
}

TEST_CASE("direct products with one abelian factor scale the cliques",
          "[predictions]") {
  SECTION("non-abelian factor first") {
    auto p = predict_product(parse_spec("Sz2xZ(2)"), {});
    REQUIRE(p.has_value());
    CHECK(p->source == "product-with-abelian");
    CHECK(*p->spectrum == Spectrum::exact({{-1, 32}, {5, 5}, {7, 1}}));
    CHECK(*p->energy_from_spectrum == 64);
    CHECK_FALSE(p->energy_printed.has_value());
    CHECK_FALSE(p->internally_inconsistent());
  }
  SECTION("abelian factor first") {
    auto p = predict_product(parse_spec("Z(2)xD(6)"), {});
    REQUIRE(p.has_value());
    CHECK(*p->spectrum == Spectrum::exact({{-1, 6}, {1, 3}, {3, 1}}));
    CHECK(*p->energy_from_spectrum == 12);
  }
  SECTION("two abelian factors make no claim") {
    CHECK_FALSE(predict_product(parse_spec("Z(2)xZ(3)"), {}).has_value());
  }
  SECTION("a base with a non-abelian centralizer makes no claim") {
    CHECK_FALSE(predict_product(parse_spec("S(4)xZ(2)"), {}).has_value());
  }
  SECTION("non-products make no claim") {
    CHECK_FALSE(predict_product(FamilySpec::dihedral(4), {}).has_value());
  }
}
