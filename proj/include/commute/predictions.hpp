#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commute/arith.hpp"
#include "commute/errors.hpp"
#include "commute/families.hpp"
#include "commute/group.hpp"
#include "commute/spectrum.hpp"

namespace commute {

// One published closed-form claim about a commuting-graph spectrum or energy,
// exactly as tabulated.  Formulas are reproduced literally, including the
// handful whose printed energy disagrees with their own printed spectrum;
// `internally_inconsistent` flags those, and the verifier decides how the
// claim fares against the measured graph.
struct Prediction {
  std::string source;  // stable kebab-case tag, e.g. "dihedral-family"
  std::optional<Spectrum> spectrum;
  std::optional<long long> energy_printed;
  std::optional<long long> energy_from_spectrum;
  // Non-empty for claims of the form "the energy is one of ...".
  std::vector<long long> admissible_energies;
  std::string note;

  bool internally_inconsistent() const {
    return energy_printed && energy_from_spectrum &&
           *energy_printed != *energy_from_spectrum;
  }
};

namespace detail {

// Accumulate (eigenvalue, multiplicity) pairs, merging repeated eigenvalues.
// Closed forms can collide for small parameters (e.g. the dicyclic form at
// m = 2 lists the eigenvalue 2m-3 = 1 twice), and a bare map literal would
// silently drop the duplicate instead of adding it.
inline std::map<long long, long long> acc(
    std::initializer_list<std::pair<long long, long long>> entries) {
  std::map<long long, long long> m;
  for (const auto& e : entries) m[e.first] += e.second;
  return m;
}

inline Prediction with_spectrum(std::string source,
                                const std::map<long long, long long>& mults,
                                std::optional<long long> energy_printed,
                                std::string note = "") {
  Prediction p;
  p.source = std::move(source);
  p.spectrum = Spectrum::exact(mults);
  p.energy_printed = energy_printed;
  p.energy_from_spectrum = p.spectrum->exact_energy();
  p.note = std::move(note);
  return p;
}

}  // namespace detail

// The tabulated closed form for a family member, when one exists.
// Values are reproduced as printed, misprints included.
inline std::optional<Prediction> predict_family(const FamilySpec& spec) {
  using detail::with_spectrum;
  switch (spec.kind) {
    case FamilyKind::Dihedral: {
      long long m = static_cast<long long>(spec.params[0]);
      if (m % 2 == 1) {
        return with_spectrum("dihedral-family",
                             detail::acc({{-1, m - 2}, {0, m}, {m - 2, 1}}),
                             2 * m - 4);
      }
      return with_spectrum(
          "dihedral-family",
          detail::acc({{-1, 3 * m / 2 - 3}, {1, m / 2}, {m - 3, 1}}),
          3 * m - 6);
    }
    case FamilyKind::Dicyclic: {
      long long m = static_cast<long long>(spec.params[0]);
      return with_spectrum(
          "dicyclic-family",
          detail::acc({{-1, 3 * m - 3}, {1, m}, {2 * m - 3, 1}}), 6 * m - 3,
          "tabulated energy 6m-3 disagrees with the tabulated spectrum, "
          "which sums to 6m-6");
    }
    case FamilyKind::Quasidihedral: {
      long long n = static_cast<long long>(spec.params[0]);
      long long pow_n = 1LL << n;
      long long quarter = 1LL << (n - 2);
      return with_spectrum(
          "quasidihedral-family",
          detail::acc(
              {{-1, pow_n - quarter - 3}, {1, quarter}, {2 * quarter - 3, 1}}),
          pow_n + 2 * quarter - 6);
    }
    case FamilyKind::Metacyclic: {
      long long m = static_cast<long long>(spec.params[0]);
      long long n = static_cast<long long>(spec.params[1]);
      if (m % 2 == 1) {
        return with_spectrum(
            "metacyclic-family",
            detail::acc({{-1, 2 * m * n - m - n - 1},
                         {n - 1, m},
                         {m * n - n - 1, 1}}),
            4 * m * n - 2 * m - 2 * n - 2);
      }
      std::map<long long, long long> mults;
      mults[-1] += 2 * m * n - 2 * n - m / 2 - 1;
      mults[2 * n - 1] += m / 2;
      mults[m * n - 2 * n - 1] += 1;  // merges with 2n-1 when m = 4
      return with_spectrum("metacyclic-family", mults,
                           4 * m * n - 4 * n - m - 2);
    }
    case FamilyKind::U6n: {
      long long n = static_cast<long long>(spec.params[0]);
      return with_spectrum(
          "u6n-family",
          detail::acc({{-1, 5 * n - 4}, {n - 1, 3}, {2 * n - 1, 1}}),
          10 * n - 8);
    }
    case FamilyKind::PSL2: {
      long long q = static_cast<long long>(spec.params[0]);
      long long neg = q * q * q - q * q - 2 * q - 2;
      std::map<long long, long long> mults;
      mults[-1] += neg;
      mults[q - 3] += q * (q + 1) / 2;
      mults[q - 2] += q + 1;
      mults[q - 1] += q * (q - 1) / 2;
      return with_spectrum("psl2-family", mults, 2 * neg);
    }
    case FamilyKind::GL2: {
      long long q = static_cast<long long>(spec.params[0]);
      long long neg = (q - 1) * (q * q * q - q - 1) - (q * q + q + 1);
      std::map<long long, long long> mults;
      mults[-1] += neg;
      mults[(q - 1) * (q - 2) - 1] += q * (q + 1) / 2;
      mults[q * q - 2 * q] += q + 1;
      mults[q * q - q - 1] += q * (q - 1) / 2;
      return with_spectrum("gl2-family", mults, 2 * neg);
    }
    case FamilyKind::HanakiTheta: {
      long long qn = 1LL << spec.params[0];
      return with_spectrum(
          "hanaki-theta-family",
          detail::acc({{-1, (qn - 1) * (qn - 1)}, {qn - 1, qn - 1}}),
          2 * (qn - 1) * (qn - 1));
    }
    case FamilyKind::HanakiP: {
      long long pn = static_cast<long long>(
          checked_pow(spec.params[1], static_cast<std::uint32_t>(spec.params[0])));
      long long cube = pn * pn * pn;
      return with_spectrum(
          "hanaki-p-family",
          detail::acc({{-1, cube - 2 * pn - 1}, {pn * pn - pn - 1, pn + 1}}),
          2 * (cube - 2 * pn - 1));
    }
    case FamilyKind::PQ: {
      long long p = static_cast<long long>(spec.params[0]);
      long long q = static_cast<long long>(spec.params[1]);
      return with_spectrum(
          "pq-family",
          detail::acc({{-1, p * q - q - 1}, {p - 2, q}, {q - 2, 1}}),
          2 * q * (p - 1) - 3,
          "the tabulated -1 multiplicity pq-q-1 exceeds the vertex count "
          "pq-1 by one; the graph forces pq-q-2 and energy 2q(p-1)-4");
    }
    default:
      return std::nullopt;
  }
}

// The general spectrum/energy claim for any group whose non-central element
// centralizers are all abelian.  The spectrum is computed from the
// centralizer partition; the energy is the tabulated closed form
// 2|G|(k - |Z|) - 2n(|Z|+1), which substitutes the element-wise centralizer
// sum (via the class-equation identity) where the distinct-centralizer sum
// belongs, so it usually disagrees with the spectrum it accompanies.
inline Prediction predict_ac(const FiniteGroup& g,
                             const CentralizerPartition& part,
                             std::uint64_t class_count) {
  Prediction p;
  p.source = "ac-theorem";
  p.spectrum = ac_spectrum(g);
  p.energy_from_spectrum = p.spectrum->exact_energy();
  long long order = static_cast<long long>(g.order());
  long long z = static_cast<long long>(part.center.size());
  long long k = static_cast<long long>(class_count);
  long long n = static_cast<long long>(part.centralizers.size());
  p.energy_printed = 2 * order * (k - z) - 2 * n * (z + 1);
  p.note =
      "tabulated energy applies the element-wise centralizer-order sum where "
      "the sum over distinct centralizers belongs";
  return p;
}

namespace detail {

inline std::map<std::uint32_t, std::uint64_t> dihedral_order_profile(
    std::uint64_t m) {
  std::map<std::uint32_t, std::uint64_t> profile;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d == 0) profile[static_cast<std::uint32_t>(d)] += euler_phi(d);
  }
  profile[2] += m;
  return profile;
}

inline const std::map<std::uint32_t, std::uint64_t>& sz2_order_profile() {
  // Element orders in the order-20 group <a,b | a^5, b^4, b^-1 a b = a^2>.
  static const std::map<std::uint32_t, std::uint64_t> profile = {
      {1, 1}, {2, 5}, {4, 10}, {5, 4}};
  return profile;
}

}  // namespace detail

// Quotient-shape claims: when G/Z(G) is elementary abelian of rank 2,
// dihedral, or the order-20 one-dimensional affine group, a closed form for
// the spectrum of the commuting graph of G applies.  Quotient shapes are
// recognized by order plus element-order profile, which suffices for these
// targets without general isomorphism testing.
inline std::vector<Prediction> predict_quotient(const FiniteGroup& g,
                                                const CentralizerPartition& part) {
  std::vector<Prediction> out;
  long long z = static_cast<long long>(part.center.size());
  FiniteGroup q = quotient(g, part.center);
  std::uint64_t qorder = q.order();

  if (auto pp = prime_power(qorder); pp && pp->second == 2) {
    long long p = static_cast<long long>(pp->first);
    bool elementary = true;
    for (std::uint32_t x = 0; x < q.order(); ++x) {
      if (x != q.identity() && q.element_order(x) != pp->first) {
        elementary = false;
        break;
      }
    }
    if (elementary && q.is_abelian()) {
      out.push_back(detail::with_spectrum(
          "quotient-elementary-abelian",
          {{-1, (p * p - 1) * z - p - 1}, {(p - 1) * z - 1, p + 1}},
          2 * ((p * p - 1) * z - p - 1)));
    }
  }

  if (qorder % 2 == 0 && qorder >= 6) {
    std::uint64_t m = qorder / 2;
    if (q.order_profile() == detail::dihedral_order_profile(m)) {
      long long mm = static_cast<long long>(m);
      std::map<long long, long long> mults;
      mults[-1] += (2 * mm - 1) * z - mm - 1;
      mults[z - 1] += mm;
      mults[(mm - 1) * z - 1] += 1;
      out.push_back(detail::with_spectrum("quotient-dihedral", mults,
                                          2 * ((2 * mm - 1) * z - mm - 1)));
    }
  }

  if (qorder == 20 && q.order_profile() == detail::sz2_order_profile()) {
    std::map<long long, long long> mults;
    mults[-1] += 19 * z - 6;
    mults[4 * z - 1] += 1;
    mults[3 * z - 1] += 5;
    out.push_back(detail::with_spectrum(
        "quotient-sz2", mults, 28 * z - 12,
        "tabulated energy 28|Z|-12 disagrees with the tabulated spectrum, "
        "which sums to 38|Z|-12"));
  }
  return out;
}

// Claims keyed on the number of distinct centralizers |Cent(G)| (counting
// C_G(z) = G for central z): groups with exactly 4 of them, p-groups with
// exactly p+2, and groups with exactly 5 (whose energy is one of two values).
inline std::vector<Prediction> predict_centralizer_class(
    const FiniteGroup& g, const CentralizerPartition& part) {
  std::vector<Prediction> out;
  long long z = static_cast<long long>(part.center.size());
  std::uint64_t count = part.count_total;

  if (count == 4) {
    Prediction p;
    p.source = "four-centralizer";
    p.energy_printed = 6 * (z - 1);
    out.push_back(std::move(p));
  }
  if (auto pp = prime_power(g.order());
      pp && count == pp->first + 2) {
    long long prime = static_cast<long long>(pp->first);
    Prediction p;
    p.source = "p-plus-two-centralizer";
    p.energy_printed = 2 * ((prime * prime - 1) * z - prime - 1);
    out.push_back(std::move(p));
  }
  if (count == 5) {
    Prediction p;
    p.source = "five-centralizer";
    p.admissible_energies = {8 * (2 * z - 1), 10 * z - 8};
    p.note = "energy must be one of the two admissible values";
    out.push_back(std::move(p));
  }
  return out;
}

// Claim for direct products G x A with G non-abelian and A abelian: each
// distinct non-central centralizer C of G yields a clique of |A|(|C| - |Z|)
// vertices, and the spectrum follows from the clique sizes.  (The -1
// multiplicity is taken as the vertex count minus the number of cliques,
// the only reading consistent with the clique structure.)
inline std::optional<Prediction> predict_product(const FamilySpec& spec,
                                                 const ConstructOptions& opt) {
  if (spec.kind != FamilyKind::Product) return std::nullopt;
  FiniteGroup left = construct(spec.factors[0], opt);
  FiniteGroup right = construct(spec.factors[1], opt);
  bool left_ab = left.is_abelian();
  bool right_ab = right.is_abelian();
  if (left_ab == right_ab) return std::nullopt;  // need exactly one abelian
  const FiniteGroup& base = left_ab ? right : left;
  const FiniteGroup& torus = left_ab ? left : right;
  // The scaled-clique claim presumes every centralizer of the base group is
  // abelian; without that the product's graph is not a clique union at all.
  if (!base.is_ac_group()) return std::nullopt;
  CentralizerPartition part = base.centralizer_partition();
  std::uint64_t z = part.center.size();
  std::vector<std::uint64_t> sizes;
  for (const auto& c : part.centralizers) {
    sizes.push_back(static_cast<std::uint64_t>(torus.order()) * (c.size() - z));
  }
  Prediction p;
  p.source = "product-with-abelian";
  p.spectrum = clique_union_spectrum(sizes);
  p.energy_from_spectrum = p.spectrum->exact_energy();
  p.note = "clique sizes scale the base group's centralizer parts by the "
           "abelian factor's order";
  return p;
}

}  // namespace commute
