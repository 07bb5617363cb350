#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "commute/errors.hpp"
#include "commute/families.hpp"

namespace commute {

// Parser for the group-spec mini-language:
//
//   spec  := atom { "x" atom }
//   atom  := "D" "(" int ")"      dihedral, by total order (even, >= 6)
//          | "Q" "(" int ")"      dicyclic, by total order (multiple of 4)
//          | "QD" "(" int ")"     quasidihedral, by total order (power of 2)
//          | "M" "(" int "," int ")"   metacyclic M_2mn, parameters m, n
//          | "U6" "(" int ")"     U_6n, parameter n
//          | "Sz2"                the order-20 group Sz(2)
//          | "GL2" "(" int ")"    GL(2,q)
//          | "PSL2" "(" int ")"   PSL(2,q), q = 2^k
//          | "ATheta" "(" int ")" A(n,theta), parameter n
//          | "AP" "(" int "," int ")"  A(n,p), parameters n, p
//          | "PQ" "(" int "," int ")"  Z_q : Z_p, parameters p, q
//          | "G16" "(" name ")"   one of Z2xD8 Z2xQ8 M16 Z4rZ4 D8sZ4 SG16_3
//          | "Z" "(" int ")"      cyclic
//          | "S" "(" int ")"      symmetric
//
// "x" composes direct products left-associatively.  Spaces and tabs between
// tokens are skipped.  Syntax errors raise ParseError with the byte offset;
// range violations (e.g. an odd dihedral order) raise ConstraintError.
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_atom();
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      FamilySpec rhs = parse_atom();
      spec = FamilySpec::product(std::move(spec), std::move(rhs));
      skip_ws();
    }
    if (pos_ != s_.size()) {
      throw ParseError(pos_, "expected 'x' or end of input");
    }
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') {
      throw ParseError(pos_, "expected an integer");
    }
    std::uint64_t v = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      if (pos_ - start >= 12) {
        throw ParseError(start, "integer literal too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string parse_name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(start, "expected a name");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    // No family name contains 'x', so the product separator ends the scan;
    // this lets "Sz2xZ(2)" split without requiring whitespace.
    while (pos_ < s_.size() && s_[pos_] != 'x' &&
           std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(start, "expected a family atom");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  FamilySpec parse_atom() {
    skip_ws();
    std::size_t start = pos_;
    std::string id = parse_ident();
    if (id == "Sz2") return FamilySpec::sz2();
    if (id == "D") return FamilySpec::dihedral_of_order(one_int());
    if (id == "Q") return FamilySpec::dicyclic_of_order(one_int());
    if (id == "QD") return FamilySpec::quasidihedral_of_order(one_int());
    if (id == "M") {
      auto [a, b] = two_ints();
      return FamilySpec::metacyclic(a, b);
    }
    if (id == "U6") return FamilySpec::u6n(one_int());
    if (id == "GL2") return FamilySpec::gl2(one_int());
    if (id == "PSL2") return FamilySpec::psl2(one_int());
    if (id == "ATheta") return FamilySpec::hanaki_theta(one_int());
    if (id == "AP") {
      auto [a, b] = two_ints();
      return FamilySpec::hanaki_p(a, b);
    }
    if (id == "PQ") {
      auto [a, b] = two_ints();
      return FamilySpec::pq(a, b);
    }
    if (id == "G16") {
      expect('(');
      std::size_t name_at = pos_;
      std::string name = parse_name();
      expect(')');
      if (name == "Z2xD8") return FamilySpec::order16(Order16Kind::Z2xD8);
      if (name == "Z2xQ8") return FamilySpec::order16(Order16Kind::Z2xQ8);
      if (name == "M16") return FamilySpec::order16(Order16Kind::M16);
      if (name == "Z4rZ4") return FamilySpec::order16(Order16Kind::Z4rZ4);
      if (name == "D8sZ4") return FamilySpec::order16(Order16Kind::D8sZ4);
      if (name == "SG16_3") return FamilySpec::order16(Order16Kind::SG16_3);
      throw ParseError(name_at, "unknown order-16 member '" + name + "'");
    }
    if (id == "Z") return FamilySpec::cyclic(one_int());
    if (id == "S") return FamilySpec::sym(one_int());
    throw ParseError(start, "unknown family '" + id + "'");
  }

  std::uint64_t one_int() {
    expect('(');
    std::uint64_t v = parse_int();
    expect(')');
    return v;
  }

  std::pair<std::uint64_t, std::uint64_t> two_ints() {
    expect('(');
    std::uint64_t a = parse_int();
    expect(',');
    std::uint64_t b = parse_int();
    expect(')');
    return {a, b};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline FamilySpec parse_spec(std::string_view text) {
  return SpecParser(text).parse();
}

}  // namespace commute
