#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "commute/field.hpp"

using namespace commute;

TEST_CASE("prime field is plain modular arithmetic", "[field]") {
  Field f(7, 1);
  CHECK(f.order() == 7);
  CHECK(f.characteristic() == 7);
  CHECK(f.degree() == 1);
  CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});  // x
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.add(4, 5) == 2);
  CHECK(f.neg(3) == 4);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.label(5) == "5");
}

TEST_CASE("modulus selection is the constant-first lexicographic minimum",
          "[field]") {
  // Little-endian coefficient vectors, top coefficient monic.
  CHECK(Field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field(2, 4).modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
  CHECK(Field(5, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field(3, 3).modulus() == std::vector<std::uint32_t>{1, 0, 2, 1});

  CHECK(Field(2, 2).modulus_label() == "x^2+x+1");
  CHECK(Field(2, 3).modulus_label() == "x^3+x^2+1");
  CHECK(Field(3, 2).modulus_label() == "x^2+1");
}

TEST_CASE("GF(4) multiplication matches the modulus", "[field]") {
  Field f(2, 2);
  // Index layout: 0, 1, x, x+1.
  std::uint32_t x = 2, x1 = 3;
  CHECK(f.mul(x, x) == x1);      // x^2 = x + 1
  CHECK(f.mul(x, x1) == 1);      // x(x+1) = x^2 + x = 1
  CHECK(f.mul(x1, x1) == x);     // (x+1)^2 = x^2 + 1 = x
  CHECK(f.inv(x) == x1);
  CHECK(f.frobenius(x) == x1);   // squaring
  CHECK(f.label(x) == "x");
  CHECK(f.label(x1) == "x+1");
  CHECK(f.label(0) == "0");
}

TEST_CASE("field laws hold on every element of small fields", "[field]") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {2, 3},
                      {3, 2}}) {
    Field f(p, n);
    std::uint32_t q = static_cast<std::uint32_t>(f.order());
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("large field without tables still multiplies correctly", "[field]") {
  Field f(2, 10);  // order 1024 > table limit
  CHECK(f.order() == 1024);
  std::uint32_t x = 2;
  // x^1023 = 1 for any nonzero element of GF(1024).
  CHECK(f.pow(x, 1023) == 1);
  CHECK(f.mul(x, f.inv(x)) == 1);
}

TEST_CASE("field constructor rejects bad parameters", "[field]") {
  CHECK_THROWS_AS(Field(4, 1), ConstraintError);   // not prime
  CHECK_THROWS_AS(Field(1, 1), ConstraintError);
  CHECK_THROWS_AS(Field(2, 0), ConstraintError);   // degree 0
  CHECK_THROWS_AS(Field(2, 17), CapError);         // 2^17 above the cap
}

TEST_CASE("field element operations validate and wrap", "[field]") {
  Field f4(2, 2);
  Field f7(7, 1);
  CHECK_THROWS_AS(f4.mul(2, 9), ConstraintError);  // index out of range
  CHECK_THROWS_AS(f4.inv(0), ConstraintError);
  CHECK_THROWS_AS(f7.frobenius(3), ConstraintError);  // odd characteristic

  FieldElement a(f4, 2), b(f4, 3);
  CHECK((a * b).index() == 1);
  CHECK((a + b).index() == 1);  // x + (x+1) = 1
  CHECK((-a).index() == 2);     // characteristic 2
  CHECK(a.inverse().index() == 3);
  CHECK(a.frobenius().index() == 3);
  CHECK(a != b);
  CHECK(a == FieldElement(f4, 2));

  FieldElement c(f7, 3);
  CHECK_THROWS_AS(a + c, FieldMismatchError);
}
