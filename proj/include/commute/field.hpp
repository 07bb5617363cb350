#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "commute/arith.hpp"
#include "commute/errors.hpp"

namespace commute {

namespace detail {

// Polynomials over Z_p, little-endian coefficient vectors (index i holds the
// coefficient of x^i).  All helpers trim trailing zeros.
inline void poly_trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<std::uint32_t> poly_add(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  std::vector<std::uint32_t> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  poly_trim(r);
  return r;
}

inline std::vector<std::uint32_t> poly_sub(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  std::vector<std::uint32_t> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint32_t av = i < a.size() ? a[i] : 0;
    std::uint32_t bv = i < b.size() ? b[i] : 0;
    r[i] = (av + p - bv) % p;
  }
  poly_trim(r);
  return r;
}

inline std::vector<std::uint32_t> poly_mul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
  }
  std::vector<std::uint32_t> r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    r[i] = static_cast<std::uint32_t>(acc[i] % p);
  }
  poly_trim(r);
  return r;
}

// Division with remainder by a nonzero divisor; returns {quotient, remainder}.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
poly_divmod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
            std::uint32_t p) {
  if (b.empty()) throw InternalError("polynomial division by zero");
  std::vector<std::uint32_t> q;
  poly_trim(a);
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  // Inverse of the leading coefficient of b in Z_p (Fermat).
  std::uint32_t lead_inv =
      static_cast<std::uint32_t>(pow_mod(b.back(), p - 2, p));
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    if (a.size() < shift + b.size()) continue;
    std::uint32_t coeff =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(
                                        a[shift + b.size() - 1]) *
                                    lead_inv) %
                                   p);
    if (coeff == 0) continue;
    q[shift] = coeff;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = (static_cast<std::uint64_t>(coeff) * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - static_cast<std::uint32_t>(sub)) % p);
    }
    poly_trim(a);
  }
  return {q, a};
}

inline std::vector<std::uint32_t> poly_mod(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& m,
                                           std::uint32_t p) {
  return poly_divmod(a, m, p).second;
}

// Extended Euclid: returns g (monic gcd) and u with u*a == g (mod m).
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
poly_ext_gcd_coeff(std::vector<std::uint32_t> a, std::vector<std::uint32_t> m,
                   std::uint32_t p) {
  std::vector<std::uint32_t> r0 = std::move(a), r1 = std::move(m);
  std::vector<std::uint32_t> u0 = {1}, u1 = {};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1, p);
    auto u2 = poly_sub(u0, poly_mul(q, u1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (!r0.empty() && r0.back() != 1) {
    std::uint32_t inv = static_cast<std::uint32_t>(pow_mod(r0.back(), p - 2, p));
    r0 = poly_mul(r0, {inv}, p);
    u0 = poly_mul(u0, {inv}, p);
  }
  return {r0, u0};
}

inline bool poly_is_irreducible(const std::vector<std::uint32_t>& f,
                                std::uint32_t p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  if (f.size() < 2) return false;
  std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // Odometer over the d non-leading coefficients of a monic divisor.
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && g[i] == p - 1) {
        g[i] = 0;
        ++i;
      }
      if (i == d) break;
      ++g[i];
    }
  }
  return true;
}

}  // namespace detail

// Arithmetic in the finite field GF(p^n).
//
// Elements are indexed 0..p^n-1.  The element with index k has coefficient
// vector (c_0, ..., c_{n-1}) given by the base-p digits of k (c_0 least
// significant), representing c_0 + c_1 x + ... + c_{n-1} x^{n-1} modulo a
// fixed monic irreducible modulus of degree n.  Index 0 is zero, index 1 is
// one, and for n > 1 index p is the generator x.
//
// The modulus is chosen deterministically: among monic irreducible
// polynomials of degree n, the one whose coefficient vector c_0, c_1, ...
// (constant term first) is lexicographically smallest.  For n = 1 the
// modulus is x and arithmetic is plain arithmetic modulo p.
//
// For small fields (order <= 256) full operation tables are materialized;
// larger fields compute polynomial arithmetic per call.  Field objects are
// cheap shared handles.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1u << 16;
  static constexpr std::uint64_t kTableLimit = 256;

  Field(std::uint64_t p, std::uint32_t n) {
    if (!is_prime(p)) {
      throw ConstraintError("field characteristic must be prime, got " +
                            std::to_string(p));
    }
    if (n < 1) throw ConstraintError("field degree must be >= 1");
    std::uint64_t q = checked_pow(p, n);
    if (q > kMaxOrder) {
      throw CapError("field order " + std::to_string(q) + " exceeds cap " +
                     std::to_string(kMaxOrder));
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->n = n;
    d->q = q;
    d->modulus = find_modulus(static_cast<std::uint32_t>(p), n);
    if (q <= kTableLimit) build_tables(*d);
    d_ = std::move(d);
  }

  std::uint64_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->n; }
  std::uint64_t order() const { return d_->q; }

  // Monic modulus, little-endian, length degree()+1 (top coefficient 1).
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  bool same_field(const Field& o) const {
    return d_ == o.d_ ||
           (d_->p == o.d_->p && d_->n == o.d_->n && d_->modulus == o.d_->modulus);
  }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    check_index(a);
    check_index(b);
    if (d_->tables) return d_->add_t[a * d_->q + b];
    return encode(detail::poly_add(decode(a), decode(b), pc()));
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    check_index(a);
    check_index(b);
    if (d_->tables) return d_->add_t[a * d_->q + d_->neg_t[b]];
    return encode(detail::poly_sub(decode(a), decode(b), pc()));
  }

  std::uint32_t neg(std::uint32_t a) const {
    check_index(a);
    if (d_->tables) return d_->neg_t[a];
    return encode(detail::poly_sub({}, decode(a), pc()));
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    check_index(a);
    check_index(b);
    if (d_->tables) return d_->mul_t[a * d_->q + b];
    return encode(detail::poly_mod(detail::poly_mul(decode(a), decode(b), pc()),
                                   d_->modulus, pc()));
  }

  std::uint32_t inv(std::uint32_t a) const {
    check_index(a);
    if (a == 0) throw ConstraintError("division by zero in field");
    if (d_->tables) return d_->inv_t[a];
    auto [g, u] = detail::poly_ext_gcd_coeff(decode(a), d_->modulus, pc());
    if (g.size() != 1 || g[0] != 1) {
      throw InternalError("field modulus is not irreducible");
    }
    return encode(detail::poly_mod(u, d_->modulus, pc()));
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    check_index(a);
    std::uint32_t r = 1;
    std::uint32_t base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // x -> x^2, defined only in characteristic 2.
  std::uint32_t frobenius(std::uint32_t a) const {
    if (d_->p != 2) {
      throw ConstraintError("frobenius square is only provided for characteristic 2");
    }
    return mul(a, a);
  }

  // Base-p digits of the index, little-endian, length degree().
  std::vector<std::uint32_t> coefficients(std::uint32_t a) const {
    check_index(a);
    std::vector<std::uint32_t> c(d_->n, 0);
    std::uint64_t v = a;
    for (std::uint32_t i = 0; i < d_->n; ++i) {
      c[i] = static_cast<std::uint32_t>(v % d_->p);
      v /= d_->p;
    }
    return c;
  }

  std::string label(std::uint32_t a) const {
    check_index(a);
    if (d_->n == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto c = coefficients(a);
    std::string s;
    for (std::uint32_t i = d_->n; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(c[i]);
      } else {
        if (c[i] != 1) s += std::to_string(c[i]);
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

  std::string modulus_label() const {
    std::string s;
    const auto& m = d_->modulus;
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(m[i]);
      } else {
        if (m[i] != 1) s += std::to_string(m[i]);
        s += "x";
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  struct Data {
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> add_t, mul_t, neg_t, inv_t;
    bool tables = false;
  };

  std::uint32_t pc() const { return static_cast<std::uint32_t>(d_->p); }

  void check_index(std::uint32_t a) const {
    if (a >= d_->q) {
      throw ConstraintError("field element index " + std::to_string(a) +
                            " out of range for field of order " +
                            std::to_string(d_->q));
    }
  }

  std::vector<std::uint32_t> decode(std::uint32_t a) const {
    std::vector<std::uint32_t> c;
    std::uint64_t v = a;
    while (v > 0) {
      c.push_back(static_cast<std::uint32_t>(v % d_->p));
      v /= d_->p;
    }
    return c;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * d_->p + c[i];
    return static_cast<std::uint32_t>(v);
  }

  static std::vector<std::uint32_t> find_modulus(std::uint32_t p,
                                                 std::uint32_t n) {
    if (n == 1) return {0, 1};  // x
    // Enumerate monic degree-n candidates by their non-leading coefficients
    // (c_0, ..., c_{n-1}) in lexicographic order (c_0 most significant) and
    // return the first irreducible one.
    std::vector<std::uint32_t> c(n, 0);
    while (true) {
      std::vector<std::uint32_t> f(c);
      f.push_back(1);
      if (detail::poly_is_irreducible(f, p)) return f;
      std::size_t i = n;
      while (i > 0 && c[i - 1] == p - 1) {
        c[i - 1] = 0;
        --i;
      }
      if (i == 0) throw InternalError("no irreducible polynomial found");
      ++c[i - 1];
    }
  }

  static void build_tables(Data& d) {
    std::uint32_t q = static_cast<std::uint32_t>(d.q);
    std::uint32_t p = static_cast<std::uint32_t>(d.p);
    auto decode = [&](std::uint32_t a) {
      std::vector<std::uint32_t> c;
      std::uint32_t v = a;
      while (v > 0) {
        c.push_back(v % p);
        v /= p;
      }
      return c;
    };
    auto encode = [&](const std::vector<std::uint32_t>& c) {
      std::uint64_t v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
      return static_cast<std::uint32_t>(v);
    };
    d.add_t.resize(static_cast<std::size_t>(q) * q);
    d.mul_t.resize(static_cast<std::size_t>(q) * q);
    d.neg_t.resize(q);
    d.inv_t.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto pa = decode(a);
      d.neg_t[a] = encode(detail::poly_sub({}, pa, p));
      for (std::uint32_t b = 0; b < q; ++b) {
        auto pb = decode(b);
        d.add_t[static_cast<std::size_t>(a) * q + b] =
            encode(detail::poly_add(pa, pb, p));
        std::uint32_t prod = encode(
            detail::poly_mod(detail::poly_mul(pa, pb, p), d.modulus, p));
        d.mul_t[static_cast<std::size_t>(a) * q + b] = prod;
        if (prod == 1) d.inv_t[a] = b;
      }
    }
    d.tables = true;
  }

  std::shared_ptr<const Data> d_;
};

// A field element bound to its field; mixing elements of different fields
// throws FieldMismatchError.
class FieldElement {
 public:
  FieldElement(Field f, std::uint32_t index) : f_(std::move(f)), i_(index) {
    if (i_ >= f_.order()) {
      throw ConstraintError("field element index out of range");
    }
  }

  const Field& field() const { return f_; }
  std::uint32_t index() const { return i_; }
  std::vector<std::uint32_t> coefficients() const { return f_.coefficients(i_); }
  std::string label() const { return f_.label(i_); }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return {f_, f_.add(i_, o.i_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return {f_, f_.sub(i_, o.i_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return {f_, f_.mul(i_, o.i_)};
  }
  FieldElement operator-() const { return {f_, f_.neg(i_)}; }
  FieldElement inverse() const { return {f_, f_.inv(i_)}; }
  FieldElement frobenius() const { return {f_, f_.frobenius(i_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(i_, e)}; }

  bool operator==(const FieldElement& o) const {
    return f_.same_field(o.f_) && i_ == o.i_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  void check(const FieldElement& o) const {
    if (!f_.same_field(o.f_)) {
      throw FieldMismatchError("operands belong to different fields");
    }
  }

  Field f_;
  std::uint32_t i_;
};

}  // namespace commute
