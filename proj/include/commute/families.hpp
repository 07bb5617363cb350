#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "commute/arith.hpp"
#include "commute/errors.hpp"
#include "commute/field.hpp"
#include "commute/group.hpp"

namespace commute {

// Named presentations this toolkit can construct.  Parameters follow the
// usual conventions:
//   Dihedral m      D_2m  = <a,b | a^m, b^2, bab^-1 = a^-1>, order 2m, m >= 3
//   Dicyclic m      Q_4m  = <a,b | a^2m, b^2 = a^m, bab^-1 = a^-1>, order 4m,
//                   m >= 2
//   Quasidihedral n QD_2^n = <a,b | a^(2^(n-1)), b^2, bab^-1 = a^(2^(n-2)-1)>,
//                   order 2^n, n >= 4
//   Metacyclic m,n  M_2mn = <a,b | a^m, b^2n, bab^-1 = a^-1>, order 2mn,
//                   m >= 3
//   U6n n           U_6n  = <a,b | a^2n, b^3, a^-1 b a = b^-1>, order 6n
//   Sz2             <a,b | a^5, b^4, b^-1 a b = a^2>, order 20
//   GL2 q           invertible 2x2 matrices over GF(q), q > 2
//   PSL2 q          SL(2, GF(q)) for q = 2^k, k >= 2 (centerless, so = PSL)
//   HanakiTheta n   unitriangular-type group on pairs over GF(2^n), n >= 2:
//                   U(a,b) U(a',b') = U(a+a', b+b'+a'*a^2), order 4^n
//   HanakiP n,p     triples over GF(p^n):
//                   V(a,b,c) V(a',b',c') = V(a+a', b+b'+c*a', c+c'),
//                   order p^3n
//   PQ p,q          Z_q : Z_p with p | q-1, the action by the smallest
//                   residue of multiplicative order p mod q; order pq
//   Order16 which   the six non-abelian order-16 groups with |Z| = 4
//   Cyclic n        Z_n
//   Abelian n1,...  Z_n1 x Z_n2 x ...
//   Sym n           symmetric group S_n
//   Product         direct product of two family specs
enum class FamilyKind {
  Dihedral,
  Dicyclic,
  Quasidihedral,
  Metacyclic,
  U6n,
  Sz2,
  GL2,
  PSL2,
  HanakiTheta,
  HanakiP,
  PQ,
  Order16,
  Cyclic,
  Abelian,
  Sym,
  Product,
};

enum class Order16Kind {
  Z2xD8,   // Z_2 x D_8
  Z2xQ8,   // Z_2 x Q_8
  M16,     // <a,b | a^8, b^2, bab^-1 = a^5>
  Z4rZ4,   // <a,b | a^4, b^4, bab^-1 = a^-1>
  D8sZ4,   // central product D_8 * Z_4
  SG16_3,  // Pauli-type group of order 16
};

struct ConstructOptions {
  std::uint32_t max_order = kDefaultMaxOrder;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Cyclic;
  // Parameter meaning depends on kind; see the factories below.
  std::vector<std::uint64_t> params;
  Order16Kind which16 = Order16Kind::Z2xD8;
  std::vector<FamilySpec> factors;  // Product only (exactly two)

  // --- factories ---------------------------------------------------------
  static FamilySpec make(FamilyKind kind, std::vector<std::uint64_t> ps) {
    FamilySpec s;
    s.kind = kind;
    s.params = std::move(ps);
    return s;
  }
  static FamilySpec dihedral(std::uint64_t m) { return make(FamilyKind::Dihedral, {m}); }
  static FamilySpec dicyclic(std::uint64_t m) { return make(FamilyKind::Dicyclic, {m}); }
  static FamilySpec quasidihedral(std::uint64_t n) {
    return make(FamilyKind::Quasidihedral, {n});
  }
  static FamilySpec metacyclic(std::uint64_t m, std::uint64_t n) {
    return make(FamilyKind::Metacyclic, {m, n});
  }
  static FamilySpec u6n(std::uint64_t n) { return make(FamilyKind::U6n, {n}); }
  static FamilySpec sz2() { return make(FamilyKind::Sz2, {}); }
  static FamilySpec gl2(std::uint64_t q) { return make(FamilyKind::GL2, {q}); }
  static FamilySpec psl2(std::uint64_t q) { return make(FamilyKind::PSL2, {q}); }
  static FamilySpec hanaki_theta(std::uint64_t n) {
    return make(FamilyKind::HanakiTheta, {n});
  }
  static FamilySpec hanaki_p(std::uint64_t n, std::uint64_t p) {
    return make(FamilyKind::HanakiP, {n, p});
  }
  static FamilySpec pq(std::uint64_t p, std::uint64_t q) {
    return make(FamilyKind::PQ, {p, q});
  }
  static FamilySpec order16(Order16Kind which) {
    FamilySpec s = make(FamilyKind::Order16, {});
    s.which16 = which;
    return s;
  }
  static FamilySpec cyclic(std::uint64_t n) { return make(FamilyKind::Cyclic, {n}); }
  static FamilySpec abelian(std::vector<std::uint64_t> ns) {
    return make(FamilyKind::Abelian, std::move(ns));
  }
  static FamilySpec sym(std::uint64_t n) { return make(FamilyKind::Sym, {n}); }
  static FamilySpec product(FamilySpec a, FamilySpec b) {
    FamilySpec s = make(FamilyKind::Product, {});
    s.factors.push_back(std::move(a));
    s.factors.push_back(std::move(b));
    return s;
  }

  // Surface-form factories used by the parser: these take the total group
  // order where the grammar does.
  static FamilySpec dihedral_of_order(std::uint64_t order) {
    if (order % 2 != 0) {
      throw ConstraintError("dihedral group order must be even, got " +
                            std::to_string(order));
    }
    return dihedral(order / 2);
  }
  static FamilySpec dicyclic_of_order(std::uint64_t order) {
    if (order % 4 != 0) {
      throw ConstraintError("dicyclic group order must be divisible by 4, got " +
                            std::to_string(order));
    }
    return dicyclic(order / 4);
  }
  static FamilySpec quasidihedral_of_order(std::uint64_t order) {
    auto pp = prime_power(order);
    if (!pp || pp->first != 2) {
      throw ConstraintError("quasidihedral group order must be a power of 2, got " +
                            std::to_string(order));
    }
    return quasidihedral(pp->second);
  }
};

namespace detail {

inline std::string power_label(const std::string& g, std::uint64_t e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

inline std::string two_gen_label(const std::string& g1, std::uint64_t e1,
                                 const std::string& g2, std::uint64_t e2) {
  std::string a = power_label(g1, e1);
  std::string b = power_label(g2, e2);
  if (a.empty() && b.empty()) return "e";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

// Semidirect-style two-generator closure on normal forms x^i y^j with
// y x y^-1 = x^t: (i,j) * (i',j') = (i + i' t^j mod m, j + j' mod s).
inline GroupRule two_gen_rule(std::uint64_t m, std::uint64_t s, std::uint64_t t,
                              std::string name, std::string xname,
                              std::string yname) {
  std::vector<std::uint32_t> tpow(s);
  std::uint64_t cur = 1 % m;
  for (std::uint64_t j = 0; j < s; ++j) {
    tpow[j] = static_cast<std::uint32_t>(cur);
    cur = (cur * (t % m)) % m;
  }
  if ((cur) != 1 % m) {
    throw InternalError("twist order does not divide the second factor order");
  }
  GroupRule rule;
  rule.name = std::move(name);
  rule.identity = {0, 0};
  rule.generators = {{1 % static_cast<std::uint32_t>(m), 0},
                     {0, 1 % static_cast<std::uint32_t>(s)}};
  std::uint32_t m32 = static_cast<std::uint32_t>(m);
  std::uint32_t s32 = static_cast<std::uint32_t>(s);
  rule.multiply = [m32, s32, tpow](const Word& a, const Word& b) -> Word {
    std::uint64_t i = (a[0] + static_cast<std::uint64_t>(b[0]) * tpow[a[1]]) % m32;
    std::uint32_t j = (a[1] + b[1]) % s32;
    return {static_cast<std::uint32_t>(i), j};
  };
  rule.label = [xname, yname](const Word& w) {
    return two_gen_label(xname, w[0], yname, w[1]);
  };
  return rule;
}

inline FiniteGroup make_dihedral(std::uint64_t m, const ConstructOptions& opt) {
  return closure(two_gen_rule(m, 2, m - 1, "D_" + std::to_string(2 * m), "a", "b"),
                 opt.max_order);
}

inline FiniteGroup make_dicyclic(std::uint64_t m, const ConstructOptions& opt) {
  // <a,b | a^2m = 1, b^2 = a^m, b a b^-1 = a^-1> on normal forms a^i b^j,
  // 0 <= i < 2m, 0 <= j < 2, with the b^2 = a^m carry.
  std::uint32_t mm = static_cast<std::uint32_t>(m);
  GroupRule rule;
  rule.name = "Q_" + std::to_string(4 * m);
  rule.identity = {0, 0};
  rule.generators = {{1, 0}, {0, 1}};
  rule.multiply = [mm](const Word& a, const Word& b) -> Word {
    std::uint32_t two_m = 2 * mm;
    // (a^i b^j)(a^i' b^j'): move a^i' past b^j.
    std::uint32_t i = a[1] == 0 ? (a[0] + b[0]) % two_m
                                : (a[0] + two_m - b[0] % two_m) % two_m;
    std::uint32_t j = a[1] + b[1];
    if (j >= 2) {
      j -= 2;
      i = (i + mm) % two_m;
    }
    return {i, j};
  };
  rule.label = [](const Word& w) { return two_gen_label("a", w[0], "b", w[1]); };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_quasidihedral(std::uint64_t n,
                                      const ConstructOptions& opt) {
  std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::uint64_t t = (std::uint64_t{1} << (n - 2)) - 1;
  return closure(two_gen_rule(half, 2, t, "QD_" + std::to_string(std::uint64_t{1} << n),
                              "a", "b"),
                 opt.max_order);
}

inline FiniteGroup make_metacyclic(std::uint64_t m, std::uint64_t n,
                                   const ConstructOptions& opt) {
  std::string name =
      "M_" + std::to_string(2 * m * n) + "(" + std::to_string(m) + "," +
      std::to_string(n) + ")";
  return closure(two_gen_rule(m, 2 * n, m - 1, std::move(name), "a", "b"),
                 opt.max_order);
}

inline FiniteGroup make_u6n(std::uint64_t n, const ConstructOptions& opt) {
  // <a,b | a^2n = b^3 = 1, a^-1 b a = b^-1>: b is the normal generator, so
  // normal forms are b^i a^j and a b a^-1 = b^-1 gives the same twist shape.
  return closure(two_gen_rule(3, 2 * n, 2, "U_" + std::to_string(6 * n), "b", "a"),
                 opt.max_order);
}

inline FiniteGroup make_sz2(const ConstructOptions& opt) {
  // <a,b | a^5 = b^4 = 1, b^-1 a b = a^2>; then b a b^-1 = a^3.
  return closure(two_gen_rule(5, 4, 3, "Sz(2)", "a", "b"), opt.max_order);
}

inline std::string matrix_label(const Field& f, std::uint32_t a, std::uint32_t b,
                                std::uint32_t c, std::uint32_t d) {
  return "[" + f.label(a) + " " + f.label(b) + "; " + f.label(c) + " " +
         f.label(d) + "]";
}

// GL(2,q) when sl is false, SL(2,q) when true.  Elements are listed by
// enumerating matrix entries (a,b,c,d) lexicographically by field index and
// keeping those with the required determinant, fed through closure so the
// identity lands at index 0.
inline FiniteGroup make_matrix_group(std::uint64_t q, bool sl, std::string name,
                                     const ConstructOptions& opt) {
  auto pp = prime_power(q);
  if (!pp) {
    throw ConstraintError("matrix group field size must be a prime power, got " +
                          std::to_string(q));
  }
  Field f(pp->first, pp->second);
  std::uint32_t qq = static_cast<std::uint32_t>(f.order());
  std::uint64_t order = sl ? (std::uint64_t)qq * qq * qq - qq
                           : ((std::uint64_t)qq * qq - 1) * ((std::uint64_t)qq * qq - qq);
  if (order > opt.max_order) {
    throw CapError("group order " + std::to_string(order) +
                   " exceeds the order cap of " + std::to_string(opt.max_order));
  }
  GroupRule rule;
  rule.name = std::move(name);
  rule.identity = {f.one(), f.zero(), f.zero(), f.one()};
  for (std::uint32_t a = 0; a < qq; ++a) {
    for (std::uint32_t b = 0; b < qq; ++b) {
      for (std::uint32_t c = 0; c < qq; ++c) {
        for (std::uint32_t d = 0; d < qq; ++d) {
          std::uint32_t det = f.sub(f.mul(a, d), f.mul(b, c));
          if (sl ? det == f.one() : det != f.zero()) {
            rule.generators.push_back({a, b, c, d});
          }
        }
      }
    }
  }
  rule.multiply = [f](const Word& x, const Word& y) -> Word {
    return {f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
  };
  rule.label = [f](const Word& w) {
    return matrix_label(f, w[0], w[1], w[2], w[3]);
  };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_hanaki_theta(std::uint64_t n,
                                     const ConstructOptions& opt) {
  Field f(2, static_cast<std::uint32_t>(n));
  std::uint32_t q = static_cast<std::uint32_t>(f.order());
  GroupRule rule;
  rule.name = "A(" + std::to_string(n) + ",theta)";
  rule.identity = {0, 0};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) rule.generators.push_back({a, b});
  }
  rule.multiply = [f](const Word& x, const Word& y) -> Word {
    // U(a,b) U(a',b') = U(a+a', b+b'+a'*a^2)
    return {f.add(x[0], y[0]),
            f.add(f.add(x[1], y[1]), f.mul(y[0], f.frobenius(x[0])))};
  };
  rule.label = [f](const Word& w) {
    return "U(" + f.label(w[0]) + ", " + f.label(w[1]) + ")";
  };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_hanaki_p(std::uint64_t n, std::uint64_t p,
                                 const ConstructOptions& opt) {
  Field f(p, static_cast<std::uint32_t>(n));
  std::uint32_t q = static_cast<std::uint32_t>(f.order());
  std::uint64_t order = (std::uint64_t)q * q * q;
  if (order > opt.max_order) {
    throw CapError("group order " + std::to_string(order) +
                   " exceeds the order cap of " + std::to_string(opt.max_order));
  }
  GroupRule rule;
  rule.name = "A(" + std::to_string(n) + "," + std::to_string(p) + ")";
  rule.identity = {0, 0, 0};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) rule.generators.push_back({a, b, c});
    }
  }
  rule.multiply = [f](const Word& x, const Word& y) -> Word {
    // V(a,b,c) V(a',b',c') = V(a+a', b+b'+c*a', c+c')
    return {f.add(x[0], y[0]), f.add(f.add(x[1], y[1]), f.mul(x[2], y[0])),
            f.add(x[2], y[2])};
  };
  rule.label = [f](const Word& w) {
    return "V(" + f.label(w[0]) + ", " + f.label(w[1]) + ", " + f.label(w[2]) +
           ")";
  };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_pq(std::uint64_t p, std::uint64_t q,
                           const ConstructOptions& opt) {
  // Z_q : Z_p, action x -> x^t with t the smallest residue of
  // multiplicative order exactly p modulo q.
  std::uint64_t t = 0;
  for (std::uint64_t c = 2; c < q; ++c) {
    if (multiplicative_order(c, q) == p) {
      t = c;
      break;
    }
  }
  if (t == 0) throw InternalError("no residue of the requested order found");
  std::string name =
      "Z_" + std::to_string(q) + ":Z_" + std::to_string(p);
  return closure(two_gen_rule(q, p, t, std::move(name), "a", "b"),
                 opt.max_order);
}

inline FiniteGroup make_d8sz4(const ConstructOptions& opt) {
  // Central product D_8 * Z_4 on normal forms a^i b^j c^k with a of order 4
  // central, b^2 = c^2 = e, and [c, b] = a^2; the dihedral part is <b, c>
  // with (bc)^2 = a^2, sharing its central involution with <a>.
  GroupRule rule;
  rule.name = "D_8*Z_4";
  rule.identity = {0, 0, 0};
  rule.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  rule.multiply = [](const Word& x, const Word& y) -> Word {
    return {(x[0] + y[0] + 2 * x[2] * y[1]) % 4, (x[1] + y[1]) % 2,
            (x[2] + y[2]) % 2};
  };
  rule.label = [](const Word& w) {
    std::string s = two_gen_label("a", w[0], "b", w[1]);
    std::string c = power_label("c", w[2]);
    if (c.empty()) return s;
    if (s == "e") return c;
    return s + " " + c;
  };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_sg16_3(const ConstructOptions& opt) {
  // Order-16 group generated by x, y of order 4 with x^2 = y^2 central of
  // order 2 and x y x^-1 = y^-1 (Pauli group type).  Normal forms y^j x^i.
  // The rewriting x^i y^j' = y^j'' x^i'' below was tabulated from the
  // defining relations.
  static const std::uint32_t R[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{0, 1}, {3, 3}, {2, 1}, {1, 3}},
      {{0, 2}, {1, 2}, {2, 2}, {3, 2}},
      {{0, 3}, {3, 1}, {2, 3}, {1, 1}},
  };
  GroupRule rule;
  rule.name = "SG(16,3)";
  rule.identity = {0, 0};
  rule.generators = {{0, 1}, {1, 0}};  // x = y^0 x^1, y = y^1 x^0
  rule.multiply = [](const Word& a, const Word& b) -> Word {
    // (y^j x^i)(y^j' x^i') with x^i y^j' = y^j'' x^i''.
    std::uint32_t j2 = R[a[1]][b[0]][0];
    std::uint32_t i2 = R[a[1]][b[0]][1];
    return {(a[0] + j2) % 4, (i2 + b[1]) % 4};
  };
  rule.label = [](const Word& w) { return two_gen_label("y", w[0], "x", w[1]); };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_cyclic(std::uint64_t n, const ConstructOptions& opt) {
  std::uint32_t nn = static_cast<std::uint32_t>(n);
  GroupRule rule;
  rule.name = "Z_" + std::to_string(n);
  rule.identity = {0};
  if (n > 1) rule.generators = {{1}};
  rule.multiply = [nn](const Word& a, const Word& b) -> Word {
    return {(a[0] + b[0]) % nn};
  };
  rule.label = [](const Word& w) { return std::to_string(w[0]); };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_abelian(const std::vector<std::uint64_t>& ns,
                                const ConstructOptions& opt) {
  if (ns.size() == 1) return make_cyclic(ns[0], opt);
  GroupRule rule;
  rule.name = "Z_" + std::to_string(ns[0]);
  for (std::size_t i = 1; i < ns.size(); ++i) {
    rule.name += " x Z_" + std::to_string(ns[i]);
  }
  std::vector<std::uint32_t> mods(ns.begin(), ns.end());
  rule.identity.assign(ns.size(), 0);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] > 1) {
      Word g(ns.size(), 0);
      g[i] = 1;
      rule.generators.push_back(std::move(g));
    }
  }
  rule.multiply = [mods](const Word& a, const Word& b) -> Word {
    Word r(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      r[i] = (a[i] + b[i]) % mods[i];
    }
    return r;
  };
  rule.label = [](const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(w[i]);
    }
    return s + ")";
  };
  return closure(rule, opt.max_order);
}

inline FiniteGroup make_sym(std::uint64_t n, const ConstructOptions& opt) {
  std::uint32_t nn = static_cast<std::uint32_t>(n);
  GroupRule rule;
  rule.name = "S_" + std::to_string(n);
  rule.identity.resize(nn);
  std::iota(rule.identity.begin(), rule.identity.end(), 0);
  if (nn >= 2) {
    Word t = rule.identity;
    std::swap(t[0], t[1]);
    rule.generators.push_back(t);
  }
  if (nn >= 3) {
    Word c(nn);
    for (std::uint32_t i = 0; i < nn; ++i) c[i] = (i + 1) % nn;
    rule.generators.push_back(c);
  }
  rule.multiply = [](const Word& a, const Word& b) -> Word {
    // (a b)(i) = a(b(i))
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };
  rule.label = [](const Word& w) {
    // Cycle notation, 1-based.
    std::string s;
    std::vector<bool> seen(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (seen[i] || w[i] == i) continue;
      s += "(" + std::to_string(i + 1);
      std::size_t j = w[i];
      seen[i] = true;
      while (j != i) {
        seen[j] = true;
        s += " " + std::to_string(j + 1);
        j = w[j];
      }
      s += ")";
    }
    return s.empty() ? std::string("e") : s;
  };
  return closure(rule, opt.max_order);
}

}  // namespace detail

// Canonical spec-string form, e.g. "D(8)", "M(3,4)", "G16(M16)", "D(6)xZ(2)".
inline std::string render(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Dihedral:
      return "D(" + std::to_string(2 * s.params[0]) + ")";
    case FamilyKind::Dicyclic:
      return "Q(" + std::to_string(4 * s.params[0]) + ")";
    case FamilyKind::Quasidihedral:
      return "QD(" + std::to_string(std::uint64_t{1} << s.params[0]) + ")";
    case FamilyKind::Metacyclic:
      return "M(" + std::to_string(s.params[0]) + "," +
             std::to_string(s.params[1]) + ")";
    case FamilyKind::U6n:
      return "U6(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::Sz2:
      return "Sz2";
    case FamilyKind::GL2:
      return "GL2(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::PSL2:
      return "PSL2(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::HanakiTheta:
      return "ATheta(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::HanakiP:
      return "AP(" + std::to_string(s.params[0]) + "," +
             std::to_string(s.params[1]) + ")";
    case FamilyKind::PQ:
      return "PQ(" + std::to_string(s.params[0]) + "," +
             std::to_string(s.params[1]) + ")";
    case FamilyKind::Order16:
      switch (s.which16) {
        case Order16Kind::Z2xD8: return "G16(Z2xD8)";
        case Order16Kind::Z2xQ8: return "G16(Z2xQ8)";
        case Order16Kind::M16: return "G16(M16)";
        case Order16Kind::Z4rZ4: return "G16(Z4rZ4)";
        case Order16Kind::D8sZ4: return "G16(D8sZ4)";
        case Order16Kind::SG16_3: return "G16(SG16_3)";
      }
      throw InternalError("unknown order-16 member");
    case FamilyKind::Cyclic:
      return "Z(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::Abelian: {
      std::string out;
      for (std::size_t i = 0; i < s.params.size(); ++i) {
        if (i) out += "x";
        out += "Z(" + std::to_string(s.params[i]) + ")";
      }
      return out;
    }
    case FamilyKind::Sym:
      return "S(" + std::to_string(s.params[0]) + ")";
    case FamilyKind::Product:
      return render(s.factors[0]) + "x" + render(s.factors[1]);
  }
  throw InternalError("unknown family kind");
}

// Human-readable group name, e.g. "D_8", "M_24(3,4)", "Sz(2)".
inline std::string display_name(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Dihedral: return "D_" + std::to_string(2 * s.params[0]);
    case FamilyKind::Dicyclic: return "Q_" + std::to_string(4 * s.params[0]);
    case FamilyKind::Quasidihedral:
      return "QD_" + std::to_string(std::uint64_t{1} << s.params[0]);
    case FamilyKind::Metacyclic:
      return "M_" + std::to_string(2 * s.params[0] * s.params[1]) + "(" +
             std::to_string(s.params[0]) + "," + std::to_string(s.params[1]) + ")";
    case FamilyKind::U6n: return "U_" + std::to_string(6 * s.params[0]);
    case FamilyKind::Sz2: return "Sz(2)";
    case FamilyKind::GL2: return "GL(2," + std::to_string(s.params[0]) + ")";
    case FamilyKind::PSL2: return "PSL(2," + std::to_string(s.params[0]) + ")";
    case FamilyKind::HanakiTheta:
      return "A(" + std::to_string(s.params[0]) + ",theta)";
    case FamilyKind::HanakiP:
      return "A(" + std::to_string(s.params[0]) + "," +
             std::to_string(s.params[1]) + ")";
    case FamilyKind::PQ:
      return "Z_" + std::to_string(s.params[1]) + ":Z_" +
             std::to_string(s.params[0]);
    case FamilyKind::Order16:
      switch (s.which16) {
        case Order16Kind::Z2xD8: return "Z_2 x D_8";
        case Order16Kind::Z2xQ8: return "Z_2 x Q_8";
        case Order16Kind::M16: return "M_16";
        case Order16Kind::Z4rZ4: return "Z_4:Z_4";
        case Order16Kind::D8sZ4: return "D_8*Z_4";
        case Order16Kind::SG16_3: return "SG(16,3)";
      }
      throw InternalError("unknown order-16 member");
    case FamilyKind::Cyclic: return "Z_" + std::to_string(s.params[0]);
    case FamilyKind::Abelian: {
      std::string out;
      for (std::size_t i = 0; i < s.params.size(); ++i) {
        if (i) out += " x ";
        out += "Z_" + std::to_string(s.params[i]);
      }
      return out;
    }
    case FamilyKind::Sym: return "S_" + std::to_string(s.params[0]);
    case FamilyKind::Product:
      return display_name(s.factors[0]) + " x " + display_name(s.factors[1]);
  }
  throw InternalError("unknown family kind");
}

// Predicted group order (before construction), with overflow checking.
inline std::uint64_t order_of(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Dihedral: return checked_mul(2, s.params[0]);
    case FamilyKind::Dicyclic: return checked_mul(4, s.params[0]);
    case FamilyKind::Quasidihedral:
      if (s.params[0] >= 63) throw ConstraintError("quasidihedral exponent too large");
      return std::uint64_t{1} << s.params[0];
    case FamilyKind::Metacyclic:
      return checked_mul(2, checked_mul(s.params[0], s.params[1]));
    case FamilyKind::U6n: return checked_mul(6, s.params[0]);
    case FamilyKind::Sz2: return 20;
    case FamilyKind::GL2: {
      std::uint64_t q = s.params[0];
      std::uint64_t q2 = checked_mul(q, q);
      return checked_mul(q2 - 1, q2 - q);
    }
    case FamilyKind::PSL2: {
      std::uint64_t q = s.params[0];
      return checked_mul(q, checked_mul(q, q)) - q;
    }
    case FamilyKind::HanakiTheta:
      if (s.params[0] >= 31) throw ConstraintError("field degree too large");
      return std::uint64_t{1} << (2 * s.params[0]);
    case FamilyKind::HanakiP:
      return checked_pow(s.params[1], static_cast<std::uint32_t>(3 * s.params[0]));
    case FamilyKind::PQ: return checked_mul(s.params[0], s.params[1]);
    case FamilyKind::Order16: return 16;
    case FamilyKind::Cyclic: return s.params[0];
    case FamilyKind::Abelian: {
      std::uint64_t n = 1;
      for (std::uint64_t f : s.params) n = checked_mul(n, f);
      return n;
    }
    case FamilyKind::Sym: {
      std::uint64_t n = 1;
      for (std::uint64_t i = 2; i <= s.params[0]; ++i) n = checked_mul(n, i);
      return n;
    }
    case FamilyKind::Product:
      return checked_mul(order_of(s.factors[0]), order_of(s.factors[1]));
  }
  throw InternalError("unknown family kind");
}

// Parameter-range validation; throws ConstraintError on violation.
inline void validate(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::Dihedral:
      if (s.params[0] < 3) {
        throw ConstraintError("dihedral parameter m must be >= 3, got " +
                              std::to_string(s.params[0]));
      }
      return;
    case FamilyKind::Dicyclic:
      if (s.params[0] < 2) {
        throw ConstraintError("dicyclic parameter m must be >= 2, got " +
                              std::to_string(s.params[0]));
      }
      return;
    case FamilyKind::Quasidihedral:
      if (s.params[0] < 4) {
        throw ConstraintError(
            "quasidihedral group order must be at least 16 (exponent >= 4), got exponent " +
            std::to_string(s.params[0]));
      }
      return;
    case FamilyKind::Metacyclic:
      if (s.params[0] < 3) {
        throw ConstraintError("metacyclic parameter m must be >= 3, got " +
                              std::to_string(s.params[0]));
      }
      if (s.params[1] < 1) {
        throw ConstraintError("metacyclic parameter n must be >= 1");
      }
      return;
    case FamilyKind::U6n:
      if (s.params[0] < 1) throw ConstraintError("U_6n parameter n must be >= 1");
      return;
    case FamilyKind::Sz2:
      return;
    case FamilyKind::GL2: {
      auto pp = prime_power(s.params[0]);
      if (!pp) {
        throw ConstraintError("GL2 field size must be a prime power, got " +
                              std::to_string(s.params[0]));
      }
      if (s.params[0] <= 2) {
        throw ConstraintError("GL2 requires field size > 2 (GL(2,2) has trivial center)");
      }
      return;
    }
    case FamilyKind::PSL2: {
      auto pp = prime_power(s.params[0]);
      if (!pp || pp->first != 2 || pp->second < 2) {
        throw ConstraintError(
            "PSL2 field size must be 2^k with k >= 2, got " +
            std::to_string(s.params[0]));
      }
      return;
    }
    case FamilyKind::HanakiTheta:
      if (s.params[0] < 2) {
        throw ConstraintError("ATheta parameter n must be >= 2, got " +
                              std::to_string(s.params[0]));
      }
      return;
    case FamilyKind::HanakiP:
      if (s.params[0] < 1) throw ConstraintError("AP parameter n must be >= 1");
      if (!is_prime(s.params[1])) {
        throw ConstraintError("AP parameter p must be prime, got " +
                              std::to_string(s.params[1]));
      }
      return;
    case FamilyKind::PQ: {
      std::uint64_t p = s.params[0], q = s.params[1];
      if (!is_prime(p) || !is_prime(q)) {
        throw ConstraintError("PQ parameters must both be prime");
      }
      if (p == q || (q - 1) % p != 0) {
        throw ConstraintError("PQ requires p to divide q-1 for a non-abelian product");
      }
      return;
    }
    case FamilyKind::Order16:
      return;
    case FamilyKind::Cyclic:
      if (s.params[0] < 1) throw ConstraintError("cyclic order must be >= 1");
      return;
    case FamilyKind::Abelian:
      if (s.params.empty()) throw ConstraintError("abelian spec needs at least one factor");
      for (std::uint64_t f : s.params) {
        if (f < 1) throw ConstraintError("abelian factor orders must be >= 1");
      }
      return;
    case FamilyKind::Sym:
      if (s.params[0] < 1) throw ConstraintError("symmetric degree must be >= 1");
      return;
    case FamilyKind::Product:
      if (s.factors.size() != 2) {
        throw InternalError("product spec must have exactly two factors");
      }
      validate(s.factors[0]);
      validate(s.factors[1]);
      return;
  }
  throw InternalError("unknown family kind");
}

inline FiniteGroup construct(const FamilySpec& s,
                             const ConstructOptions& opt = {}) {
  validate(s);
  std::uint64_t n = order_of(s);
  if (n > opt.max_order) {
    throw CapError("group order " + std::to_string(n) +
                   " exceeds the order cap of " + std::to_string(opt.max_order));
  }
  switch (s.kind) {
    case FamilyKind::Dihedral: return detail::make_dihedral(s.params[0], opt);
    case FamilyKind::Dicyclic: return detail::make_dicyclic(s.params[0], opt);
    case FamilyKind::Quasidihedral:
      return detail::make_quasidihedral(s.params[0], opt);
    case FamilyKind::Metacyclic:
      return detail::make_metacyclic(s.params[0], s.params[1], opt);
    case FamilyKind::U6n: return detail::make_u6n(s.params[0], opt);
    case FamilyKind::Sz2: return detail::make_sz2(opt);
    case FamilyKind::GL2:
      return detail::make_matrix_group(s.params[0], false,
                                       display_name(s), opt);
    case FamilyKind::PSL2:
      return detail::make_matrix_group(s.params[0], true, display_name(s), opt);
    case FamilyKind::HanakiTheta:
      return detail::make_hanaki_theta(s.params[0], opt);
    case FamilyKind::HanakiP:
      return detail::make_hanaki_p(s.params[0], s.params[1], opt);
    case FamilyKind::PQ: return detail::make_pq(s.params[0], s.params[1], opt);
    case FamilyKind::Order16:
      switch (s.which16) {
        case Order16Kind::Z2xD8:
          return direct_product(detail::make_cyclic(2, opt),
                                detail::make_dihedral(4, opt), opt.max_order);
        case Order16Kind::Z2xQ8:
          return direct_product(detail::make_cyclic(2, opt),
                                detail::make_dicyclic(2, opt), opt.max_order);
        case Order16Kind::M16:
          return closure(detail::two_gen_rule(8, 2, 5, "M_16", "a", "b"),
                         opt.max_order);
        case Order16Kind::Z4rZ4:
          return closure(detail::two_gen_rule(4, 4, 3, "Z_4:Z_4", "a", "b"),
                         opt.max_order);
        case Order16Kind::D8sZ4: return detail::make_d8sz4(opt);
        case Order16Kind::SG16_3: return detail::make_sg16_3(opt);
      }
      throw InternalError("unknown order-16 member");
    case FamilyKind::Cyclic: return detail::make_cyclic(s.params[0], opt);
    case FamilyKind::Abelian: return detail::make_abelian(s.params, opt);
    case FamilyKind::Sym: return detail::make_sym(s.params[0], opt);
    case FamilyKind::Product:
      return direct_product(construct(s.factors[0], opt),
                            construct(s.factors[1], opt), opt.max_order);
  }
  throw InternalError("unknown family kind");
}

}  // namespace commute
