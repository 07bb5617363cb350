#pragma once

#include <vector>

#include "commute/families.hpp"

namespace commute {

// The fixed evaluation catalog: every group with a tabulated closed-form
// spectrum or energy that fits comfortably within the default caps, in a
// stable order.  `verify --all` runs exactly this list.
inline std::vector<FamilySpec> formula_catalog() {
  std::vector<FamilySpec> out;
  for (std::uint64_t m = 3; m <= 9; ++m) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      out.push_back(FamilySpec::metacyclic(m, n));
    }
  }
  for (std::uint64_t m = 3; m <= 20; ++m) out.push_back(FamilySpec::dihedral(m));
  for (std::uint64_t m = 2; m <= 10; ++m) out.push_back(FamilySpec::dicyclic(m));
  for (std::uint64_t n = 1; n <= 8; ++n) out.push_back(FamilySpec::u6n(n));
  for (std::uint64_t n = 4; n <= 6; ++n) {
    out.push_back(FamilySpec::quasidihedral(n));
  }
  out.push_back(FamilySpec::psl2(4));
  out.push_back(FamilySpec::psl2(8));
  out.push_back(FamilySpec::gl2(3));
  out.push_back(FamilySpec::gl2(4));
  out.push_back(FamilySpec::gl2(5));
  out.push_back(FamilySpec::gl2(7));
  out.push_back(FamilySpec::hanaki_theta(2));
  out.push_back(FamilySpec::hanaki_theta(3));
  out.push_back(FamilySpec::hanaki_p(1, 2));
  out.push_back(FamilySpec::hanaki_p(1, 3));
  out.push_back(FamilySpec::hanaki_p(1, 5));
  out.push_back(FamilySpec::hanaki_p(2, 2));
  out.push_back(FamilySpec::pq(3, 7));
  out.push_back(FamilySpec::pq(2, 3));
  out.push_back(FamilySpec::pq(5, 11));
  out.push_back(FamilySpec::pq(3, 13));
  out.push_back(FamilySpec::order16(Order16Kind::Z2xD8));
  out.push_back(FamilySpec::order16(Order16Kind::Z2xQ8));
  out.push_back(FamilySpec::order16(Order16Kind::M16));
  out.push_back(FamilySpec::order16(Order16Kind::Z4rZ4));
  out.push_back(FamilySpec::order16(Order16Kind::D8sZ4));
  out.push_back(FamilySpec::order16(Order16Kind::SG16_3));
  out.push_back(FamilySpec::sz2());
  return out;
}

}  // namespace commute
