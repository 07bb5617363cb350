#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "commute/errors.hpp"

namespace commute {

// Normal-form word for closure construction: a small integer tuple whose
// meaning is defined by the multiplication rule that accompanies it.
using Word = std::vector<std::uint32_t>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t v : w) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// A finite group presented by a normal form, a list of generators, and a
// multiplication rule on normal forms.  `closure` breadth-first-expands the
// generators into the full element list and validates the group axioms.
struct GroupRule {
  std::string name;
  Word identity;
  std::vector<Word> generators;
  std::function<Word(const Word&, const Word&)> multiply;
  std::function<std::string(const Word&)> label;
};

// The distinct element centralizers of a non-abelian group.
//
// `centralizers` holds every distinct C_G(x) over non-central x, each as a
// sorted element list, ordered by (size, lexicographic members).
// `count_total` additionally counts C_G(z) = G for central z, i.e. it is the
// number of distinct centralizers over all group elements.
struct CentralizerPartition {
  std::vector<std::uint32_t> center;
  std::vector<std::vector<std::uint32_t>> centralizers;
  std::uint64_t count_total = 0;
};

inline constexpr std::uint32_t kDefaultMaxOrder = 10000;

// Immutable finite group on elements 0..order-1.
//
// Multiplication is table-backed for orders up to kTableCap and falls back
// to evaluating the originating rule on demand above that, so very large
// groups stay inside memory bounds at the cost of slower products.
class FiniteGroup {
 public:
  static constexpr std::uint32_t kTableCap = 4096;

  std::uint32_t order() const { return d_->order; }
  std::uint32_t identity() const { return d_->identity; }
  const std::string& name() const { return d_->name; }
  const std::string& label(std::uint32_t g) const {
    check(g);
    return d_->labels[g];
  }
  bool has_table() const { return !d_->table.empty(); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    check(a);
    check(b);
    if (!d_->table.empty()) {
      return d_->table[static_cast<std::size_t>(a) * d_->order + b];
    }
    return d_->mul_fn(a, b);
  }

  std::uint32_t inverse(std::uint32_t g) const {
    check(g);
    return d_->inverses[g];
  }

  // h g h^{-1}
  std::uint32_t conjugate(std::uint32_t h, std::uint32_t g) const {
    return mul(mul(h, g), inverse(h));
  }

  bool commutes(std::uint32_t a, std::uint32_t b) const {
    return mul(a, b) == mul(b, a);
  }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < order(); ++a) {
      for (std::uint32_t b = a + 1; b < order(); ++b) {
        if (!commutes(a, b)) return false;
      }
    }
    return true;
  }

  // Sorted ascending element indices of Z(G).
  std::vector<std::uint32_t> center() const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t g = 0; g < order(); ++g) {
      bool central = true;
      for (std::uint32_t h = 0; h < order(); ++h) {
        if (!commutes(g, h)) {
          central = false;
          break;
        }
      }
      if (central) z.push_back(g);
    }
    return z;
  }

  // Sorted ascending element indices of C_G(x).
  std::vector<std::uint32_t> centralizer(std::uint32_t x) const {
    check(x);
    std::vector<std::uint32_t> c;
    for (std::uint32_t h = 0; h < order(); ++h) {
      if (commutes(x, h)) c.push_back(h);
    }
    return c;
  }

  // Requires a non-abelian group (otherwise there is nothing to partition).
  CentralizerPartition centralizer_partition() const {
    CentralizerPartition part;
    part.center = center();
    if (part.center.size() == order()) {
      throw ConstraintError(
          "centralizer partition requires a non-abelian group");
    }
    std::set<std::vector<std::uint32_t>> distinct;
    std::vector<bool> central(order(), false);
    for (std::uint32_t z : part.center) central[z] = true;
    for (std::uint32_t g = 0; g < order(); ++g) {
      if (!central[g]) distinct.insert(centralizer(g));
    }
    part.centralizers.assign(distinct.begin(), distinct.end());
    std::sort(part.centralizers.begin(), part.centralizers.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a < b;
              });
    // Central elements contribute the single centralizer C_G(z) = G, which
    // no non-central element attains in a non-abelian group.
    part.count_total = part.centralizers.size() + 1;
    return part;
  }

  // Classes sorted by (size, smallest member); members sorted ascending.
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const {
    std::vector<bool> seen(order(), false);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t g = 0; g < order(); ++g) {
      if (seen[g]) continue;
      std::set<std::uint32_t> orbit;
      for (std::uint32_t h = 0; h < order(); ++h) {
        orbit.insert(conjugate(h, g));
      }
      std::vector<std::uint32_t> cls(orbit.begin(), orbit.end());
      for (std::uint32_t x : cls) seen[x] = true;
      classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.front() < b.front();
    });
    return classes;
  }

  std::uint64_t class_count() const { return conjugacy_classes().size(); }

  // True when the centralizer of every non-central element is abelian.
  // Requires a non-abelian group.
  bool is_ac_group() const {
    CentralizerPartition part = centralizer_partition();
    for (const auto& c : part.centralizers) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          if (!commutes(c[i], c[j])) return false;
        }
      }
    }
    return true;
  }

  std::uint32_t element_order(std::uint32_t g) const {
    check(g);
    std::uint32_t ord = 1;
    std::uint32_t cur = g;
    while (cur != identity()) {
      cur = mul(cur, g);
      ++ord;
      if (ord > order()) {
        throw InternalError("element order exceeds group order");
      }
    }
    return ord;
  }

  // Map from element order to the number of elements of that order.
  std::map<std::uint32_t, std::uint64_t> order_profile() const {
    std::map<std::uint32_t, std::uint64_t> profile;
    for (std::uint32_t g = 0; g < order(); ++g) {
      ++profile[element_order(g)];
    }
    return profile;
  }

  // Sum of |C_G(x)| over all non-central x.
  std::uint64_t noncentral_centralizer_order_sum() const {
    std::vector<bool> central(order(), false);
    for (std::uint32_t z : center()) central[z] = true;
    std::uint64_t sum = 0;
    for (std::uint32_t g = 0; g < order(); ++g) {
      if (central[g]) continue;
      for (std::uint32_t h = 0; h < order(); ++h) {
        if (commutes(g, h)) ++sum;
      }
    }
    return sum;
  }

  // --- factories ---------------------------------------------------------

  // Builds a group from an explicit multiplication table (row-major,
  // table[a*order+b] = a*b).  Validates the group axioms.
  static FiniteGroup from_table(std::string name,
                                std::vector<std::string> labels,
                                std::vector<std::uint32_t> table) {
    std::uint32_t n = static_cast<std::uint32_t>(labels.size());
    if (n == 0) throw ConstraintError("group must have at least one element");
    if (table.size() != static_cast<std::size_t>(n) * n) {
      throw ConstraintError("multiplication table has wrong size");
    }
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->order = n;
    d->labels = std::move(labels);
    d->table = std::move(table);
    d->identity = find_identity(*d);
    compute_inverses(*d);
    validate(*d);
    return FiniteGroup(std::move(d));
  }

  friend FiniteGroup closure(const GroupRule& rule, std::uint32_t max_order);
  friend FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    std::uint32_t max_order);
  friend FiniteGroup quotient(const FiniteGroup& g,
                              const std::vector<std::uint32_t>& normal);

 private:
  struct Data {
    std::string name;
    std::uint32_t order = 0;
    std::uint32_t identity = 0;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> table;  // empty when using mul_fn
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul_fn;
    std::vector<std::uint32_t> inverses;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  void check(std::uint32_t g) const {
    if (g >= d_->order) {
      throw ConstraintError("element index " + std::to_string(g) +
                            " out of range for group of order " +
                            std::to_string(d_->order));
    }
  }

  static std::uint32_t raw_mul(const Data& d, std::uint32_t a, std::uint32_t b) {
    if (!d.table.empty()) {
      return d.table[static_cast<std::size_t>(a) * d.order + b];
    }
    return d.mul_fn(a, b);
  }

  static std::uint32_t find_identity(const Data& d) {
    for (std::uint32_t e = 0; e < d.order; ++e) {
      bool ok = true;
      for (std::uint32_t g = 0; g < d.order; ++g) {
        if (raw_mul(d, e, g) != g || raw_mul(d, g, e) != g) {
          ok = false;
          break;
        }
      }
      if (ok) return e;
    }
    throw ValidationError("multiplication rule has no identity element");
  }

  // Walks the power chain g, g^2, ... until the identity recurs; one walk
  // resolves the inverse of every element of <g>, so the whole pass costs
  // O(sum of cyclic-subgroup walks) instead of O(order^2) scans.
  static void compute_inverses(Data& d) {
    constexpr std::uint32_t kUnset = UINT32_MAX;
    d.inverses.assign(d.order, kUnset);
    d.inverses[d.identity] = d.identity;
    std::vector<std::uint32_t> chain;
    for (std::uint32_t g = 0; g < d.order; ++g) {
      if (d.inverses[g] != kUnset) continue;
      chain.assign(1, d.identity);
      std::uint32_t cur = g;
      while (cur != d.identity) {
        chain.push_back(cur);
        if (chain.size() > d.order) {
          throw ValidationError("element " + std::to_string(g) +
                                " has no inverse; rule is not a group");
        }
        cur = raw_mul(d, cur, g);
      }
      const std::size_t len = chain.size();  // g^len = identity
      for (std::size_t k = 1; k < len; ++k) {
        d.inverses[chain[k]] = chain[len - k];
      }
    }
    for (std::uint32_t g = 0; g < d.order; ++g) {
      std::uint32_t h = d.inverses[g];
      if (h == kUnset || raw_mul(d, g, h) != d.identity ||
          raw_mul(d, h, g) != d.identity) {
        throw ValidationError("element " + std::to_string(g) +
                              " has no two-sided inverse; rule is not a group");
      }
    }
  }

  static void validate(const Data& d) {
    std::uint32_t n = d.order;
    if (!d.table.empty()) {
      // Each row and column of the table must be a permutation.
      std::vector<bool> seen(n);
      for (std::uint32_t a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t b = 0; b < n; ++b) {
          std::uint32_t v = d.table[static_cast<std::size_t>(a) * n + b];
          if (v >= n || seen[v]) {
            throw ValidationError("row " + std::to_string(a) +
                                  " of the multiplication table is not a permutation");
          }
          seen[v] = true;
        }
      }
      for (std::uint32_t b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t a = 0; a < n; ++a) {
          std::uint32_t v = d.table[static_cast<std::size_t>(a) * n + b];
          if (seen[v]) {
            throw ValidationError("column " + std::to_string(b) +
                                  " of the multiplication table is not a permutation");
          }
          seen[v] = true;
        }
      }
    }
    // Associativity: exhaustive for small orders, seeded random sampling
    // above that (the permutation/inverse checks already constrain heavily).
    if (n <= 200) {
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          std::uint32_t ab = raw_mul(d, a, b);
          for (std::uint32_t c = 0; c < n; ++c) {
            if (raw_mul(d, ab, c) != raw_mul(d, a, raw_mul(d, b, c))) {
              throw ValidationError("multiplication rule is not associative");
            }
          }
        }
      }
    } else {
      std::mt19937_64 rng(0xC0FFEEull);
      std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
      for (int trial = 0; trial < 100000; ++trial) {
        std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
        if (raw_mul(d, raw_mul(d, a, b), c) !=
            raw_mul(d, a, raw_mul(d, b, c))) {
          throw ValidationError("multiplication rule is not associative");
        }
      }
    }
  }

  std::shared_ptr<const Data> d_;
};

// Expands generators to the full group by breadth-first closure under the
// multiplication rule, then validates the group axioms.  Element 0 is the
// identity; the rest are numbered in discovery order.
inline FiniteGroup closure(const GroupRule& rule,
                           std::uint32_t max_order = kDefaultMaxOrder) {
  if (!rule.multiply || !rule.label) {
    throw ConstraintError("closure rule must provide multiply and label");
  }
  auto elems = std::make_shared<std::vector<Word>>();
  auto index = std::make_shared<std::unordered_map<Word, std::uint32_t, WordHash>>();
  elems->push_back(rule.identity);
  index->emplace(rule.identity, 0);
  for (const Word& g : rule.generators) {
    if (index->emplace(g, static_cast<std::uint32_t>(elems->size())).second) {
      elems->push_back(g);
    }
  }
  for (std::size_t i = 0; i < elems->size(); ++i) {
    for (const Word& g : rule.generators) {
      Word w = rule.multiply((*elems)[i], g);
      if (index->emplace(w, static_cast<std::uint32_t>(elems->size())).second) {
        elems->push_back(w);
        if (elems->size() > max_order) {
          throw CapError("closure exceeded the order cap of " +
                         std::to_string(max_order));
        }
      }
    }
  }
  auto d = std::make_shared<FiniteGroup::Data>();
  d->name = rule.name;
  d->order = static_cast<std::uint32_t>(elems->size());
  d->labels.reserve(d->order);
  for (const Word& w : *elems) d->labels.push_back(rule.label(w));
  if (d->order <= FiniteGroup::kTableCap) {
    d->table.resize(static_cast<std::size_t>(d->order) * d->order);
    for (std::uint32_t a = 0; a < d->order; ++a) {
      for (std::uint32_t b = 0; b < d->order; ++b) {
        Word w = rule.multiply((*elems)[a], (*elems)[b]);
        auto it = index->find(w);
        if (it == index->end()) {
          throw ValidationError("multiplication left the closed element set");
        }
        d->table[static_cast<std::size_t>(a) * d->order + b] = it->second;
      }
    }
  } else {
    auto mul = rule.multiply;
    d->mul_fn = [elems, index, mul](std::uint32_t a, std::uint32_t b) {
      Word w = mul((*elems)[a], (*elems)[b]);
      auto it = index->find(w);
      if (it == index->end()) {
        throw ValidationError("multiplication left the closed element set");
      }
      return it->second;
    };
  }
  d->identity = FiniteGroup::find_identity(*d);
  if (d->identity != 0) {
    throw ValidationError("closure identity word is not the identity element");
  }
  FiniteGroup::compute_inverses(*d);
  FiniteGroup::validate(*d);
  return FiniteGroup(std::move(d));
}

// Direct product A x B on index pairs (i major over A, j minor over B).
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                  std::uint32_t max_order = kDefaultMaxOrder) {
  std::uint64_t n =
      static_cast<std::uint64_t>(a.order()) * static_cast<std::uint64_t>(b.order());
  if (n > max_order) {
    throw CapError("direct product order " + std::to_string(n) +
                   " exceeds the order cap of " + std::to_string(max_order));
  }
  auto d = std::make_shared<FiniteGroup::Data>();
  d->name = a.name() + " x " + b.name();
  d->order = static_cast<std::uint32_t>(n);
  d->labels.reserve(d->order);
  for (std::uint32_t i = 0; i < a.order(); ++i) {
    for (std::uint32_t j = 0; j < b.order(); ++j) {
      d->labels.push_back("(" + a.label(i) + ", " + b.label(j) + ")");
    }
  }
  std::uint32_t bo = b.order();
  if (n <= FiniteGroup::kTableCap) {
    d->table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t x = 0; x < d->order; ++x) {
      for (std::uint32_t y = 0; y < d->order; ++y) {
        std::uint32_t v = a.mul(x / bo, y / bo) * bo + b.mul(x % bo, y % bo);
        d->table[static_cast<std::size_t>(x) * d->order + y] = v;
      }
    }
  } else {
    auto pa = std::make_shared<FiniteGroup>(a);
    auto pb = std::make_shared<FiniteGroup>(b);
    d->mul_fn = [pa, pb, bo](std::uint32_t x, std::uint32_t y) {
      return pa->mul(x / bo, y / bo) * bo + pb->mul(x % bo, y % bo);
    };
  }
  d->identity = a.identity() * bo + b.identity();
  FiniteGroup::compute_inverses(*d);
  FiniteGroup::validate(*d);
  return FiniteGroup(std::move(d));
}

// Quotient G/N by a normal subgroup, given as a sorted element list.
// Cosets are ordered by their smallest member and labeled by a
// representative: "[rep]".
inline FiniteGroup quotient(const FiniteGroup& g,
                            const std::vector<std::uint32_t>& normal) {
  if (normal.empty()) throw ConstraintError("normal subgroup must be non-empty");
  std::set<std::uint32_t> nset(normal.begin(), normal.end());
  if (nset.size() != normal.size()) {
    throw ConstraintError("normal subgroup list has duplicates");
  }
  if (!nset.count(g.identity())) {
    throw ConstraintError("normal subgroup must contain the identity");
  }
  for (std::uint32_t a : normal) {
    if (a >= g.order()) throw ConstraintError("subgroup element out of range");
    for (std::uint32_t b : normal) {
      if (!nset.count(g.mul(a, b))) {
        throw ConstraintError("subgroup list is not closed under multiplication");
      }
    }
  }
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    for (std::uint32_t a : normal) {
      if (!nset.count(g.conjugate(h, a))) {
        throw ConstraintError("subgroup is not normal");
      }
    }
  }
  if (g.order() % normal.size() != 0) {
    throw InternalError("subgroup order does not divide group order");
  }
  std::uint32_t q = g.order() / static_cast<std::uint32_t>(normal.size());
  std::vector<std::uint32_t> coset_of(g.order(), UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);  // x is the smallest member of its coset
    for (std::uint32_t nmem : normal) {
      std::uint32_t y = g.mul(x, nmem);
      if (coset_of[y] != UINT32_MAX && coset_of[y] != id) {
        throw InternalError("cosets are not disjoint");
      }
      coset_of[y] = id;
    }
  }
  if (reps.size() != q) throw InternalError("unexpected coset count");
  auto d = std::make_shared<FiniteGroup::Data>();
  d->name = g.name() + " / N";
  d->order = q;
  d->labels.reserve(q);
  for (std::uint32_t r : reps) d->labels.push_back("[" + g.label(r) + "]");
  if (q <= FiniteGroup::kTableCap) {
    d->table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t i = 0; i < q; ++i) {
      for (std::uint32_t j = 0; j < q; ++j) {
        d->table[static_cast<std::size_t>(i) * q + j] =
            coset_of[g.mul(reps[i], reps[j])];
      }
    }
  } else {
    auto parent = std::make_shared<FiniteGroup>(g);
    auto co = std::make_shared<std::vector<std::uint32_t>>(std::move(coset_of));
    auto rp = std::make_shared<std::vector<std::uint32_t>>(reps);
    d->mul_fn = [parent, co, rp](std::uint32_t i, std::uint32_t j) {
      return (*co)[parent->mul((*rp)[i], (*rp)[j])];
    };
    coset_of = *co;  // keep for the identity lookup below
  }
  d->identity = coset_of[g.identity()];
  FiniteGroup::compute_inverses(*d);
  FiniteGroup::validate(*d);
  return FiniteGroup(std::move(d));
}

// Quotient by the center, the case this library actually exercises.
inline FiniteGroup central_quotient(const FiniteGroup& g) {
  FiniteGroup q = quotient(g, g.center());
  return q;
}

}  // namespace commute
