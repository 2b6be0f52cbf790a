#pragma once

// Arithmetic in GF(q^3), q = p^k, backed by discrete-log (Zech) tables.
//
// An element is stored as a single integer: 0 is the zero element and
// v >= 1 stands for tau^(v-1), tau being the fixed multiplicative generator.
// Multiplication, inversion, Frobenius and norm become exponent arithmetic;
// addition goes through the Zech table zech[e] = 1 + tau^e.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace figplane {

/// Raised when an argument violates an operation's precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised for field parameters that cannot be built (non-prime p, too large).
struct FieldConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Elem {
  std::uint32_t v = 0;

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over GF(p), coefficient i multiplies x^i.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t c =
        static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = std::uint64_t{c} * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                        std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m,
                        std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1u) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f of degree n is irreducible iff x^(p^n) = x mod f and
// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  std::vector<Poly> frob(n + 1);  // frob[d] = x^(p^d) mod f
  frob[0] = x;
  for (std::size_t d = 1; d <= n; ++d)
    frob[d] = poly_powmod(frob[d - 1], p, f, p);
  if (poly_sub(frob[n], x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(n)) {
    Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline std::uint32_t poly_to_code(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

inline Poly code_to_poly(std::uint32_t code, std::uint32_t p) {
  Poly a;
  while (code) {
    a.push_back(code % p);
    code /= p;
  }
  return a;
}

}  // namespace detail

/// The tower GF(p) < GF(q) < GF(q^3) with fixed modulus and generator.
///
/// Immutable after construction; every member function is const and pure,
/// so one context can be shared freely between threads.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultTableBound = std::uint64_t{1} << 21;

  FieldCtx(std::uint32_t p, std::uint32_t k,
           std::uint64_t table_bound = kDefaultTableBound);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Number of elements of GF(q^3).
  std::uint32_t size() const { return n_; }
  /// Multiplicative order q^3 - 1.
  std::uint32_t order() const { return n_ - 1; }
  /// q^2 + q + 1; also the index of GF(q)* in GF(q^3)*.
  std::uint32_t norm_exponent() const { return q_ * q_ + q_ + 1; }

  /// Monic modulus over GF(p), coefficients c0..c_{3k}.
  const std::vector<std::uint32_t>& irreducible() const { return modulus_; }
  /// Polynomial-basis code (base-p digits, c0 least significant) of tau.
  std::uint32_t generator_code() const { return generator_code_; }

  /// False for q < 3; the Figueroa construction needs q > 2.
  bool figueroa_capable() const { return q_ >= 3; }

  Elem tau() const { return Elem{2}; }
  Elem tau_pow(std::int64_t e) const {
    const std::int64_t m = order();
    return Elem{static_cast<std::uint32_t>(((e % m) + m) % m) + 1};
  }
  /// Discrete log of a nonzero element.
  std::uint32_t log(Elem a) const {
    if (a.is_zero()) throw PreconditionError("log of zero");
    return a.v - 1;
  }
  /// Polynomial-basis code of an element (0 for zero).
  std::uint32_t code(Elem a) const { return a.is_zero() ? 0 : exp_code_[a.v - 1]; }
  Elem from_code(std::uint32_t c) const {
    return c == 0 ? kZero : Elem{log_of_code_[c] + 1};
  }
  /// Embeds an element of the prime field GF(p).
  Elem from_prime_field(std::uint32_t c) const { return from_code(c % p_); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    std::uint32_t e = (a.v - 1) + (b.v - 1);
    if (e >= order()) e -= order();
    return Elem{e + 1};
  }
  Elem inv(Elem a) const {
    if (a.is_zero()) throw PreconditionError("inverse of zero");
    const std::uint32_t e = a.v - 1;
    return Elem{(e == 0 ? 0 : order() - e) + 1};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t n) const {
    if (a.is_zero()) {
      if (n < 0) throw PreconditionError("negative power of zero");
      return n == 0 ? kOne : kZero;
    }
    const std::int64_t m = order();
    const std::int64_t e = (static_cast<std::int64_t>(a.v - 1) * (n % m)) % m;
    return Elem{static_cast<std::uint32_t>((e + m) % m) + 1};
  }
  Elem add(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // a + b = a (1 + b/a)
    std::uint32_t d = b.v >= a.v ? b.v - a.v : b.v + order() - a.v;
    return mul(a, zech_[d]);
  }
  Elem neg(Elem a) const { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem minus_one() const { return minus_one_; }

  /// x^(q^i) for i in {0,1,2} (any i is accepted and reduced mod 3).
  Elem frobenius(Elem a, unsigned i) const {
    if (a.is_zero()) return a;
    return Elem{static_cast<std::uint32_t>(
                    (std::uint64_t{a.v - 1} * q_pow_[i % 3]) % order()) +
                1};
  }
  /// Relative norm x^(q^2+q+1) onto GF(q).
  Elem norm(Elem a) const { return pow(a, norm_exponent()); }
  bool in_base_subfield(Elem a) const {
    return a.is_zero() || (a.v - 1) % norm_exponent() == 0;
  }
  bool is_nonzero_square(Elem a) const {
    if (a.is_zero()) return false;
    return p_ == 2 || (a.v - 1) % 2 == 0;
  }

  /// Generator of GF(q)*, namely tau^(q^2+q+1).
  Elem base_generator() const { return tau_pow(norm_exponent()); }

  /// All elements in table order: 0, tau^0, tau^1, ...
  std::vector<Elem> elements() const {
    std::vector<Elem> out(n_);
    for (std::uint32_t i = 0; i < n_; ++i) out[i] = Elem{i};
    return out;
  }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_ &&
           a.generator_code_ == b.generator_code_ && a.exp_code_ == b.exp_code_ &&
           a.zech_ == b.zech_;
  }

 private:
  std::uint32_t p_, k_, q_, n_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_code_ = 0;
  std::vector<std::uint32_t> exp_code_;     // exp_code_[e] = code(tau^e)
  std::vector<std::uint32_t> log_of_code_;  // inverse of exp_code_
  std::vector<Elem> zech_;                  // zech_[e] = 1 + tau^e
  Elem minus_one_;
  std::uint64_t q_pow_[3];
};

inline FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t k,
                          std::uint64_t table_bound)
    : p_(p), k_(k) {
  if (!detail::is_prime(p))
    throw FieldConfigError("p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw FieldConfigError("k must be positive");
  const std::uint32_t deg = 3 * k;
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    n *= p;
    if (n > table_bound)
      throw FieldConfigError("field of order " + std::to_string(p) + "^" +
                             std::to_string(deg) + " exceeds the table bound " +
                             std::to_string(table_bound));
  }
  n_ = static_cast<std::uint32_t>(n);
  q_ = 1;
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  q_pow_[0] = 1;
  q_pow_[1] = q_;
  q_pow_[2] = std::uint64_t{q_} * q_;

  // Smallest monic irreducible, coefficient vectors compared c0 first.
  // Counting through (c0, ..., c_{deg-1}) with c0 as the most significant
  // digit visits candidates in exactly that order.
  const std::uint64_t candidates = n;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    detail::Poly f(deg + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = deg; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[deg] = 1;
    if (detail::is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) throw FieldConfigError("no irreducible modulus found");

  // Smallest code of full multiplicative order.
  const std::uint64_t ord = n_ - 1;
  const auto factors = detail::prime_factors(ord);
  for (std::uint32_t c = 2; c < n_; ++c) {
    const detail::Poly g = detail::code_to_poly(c, p);
    bool full = true;
    for (std::uint64_t r : factors) {
      if (detail::poly_powmod(g, ord / r, modulus_, p) == detail::Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_code_ = c;
      break;
    }
  }
  if (ord == 1) generator_code_ = 1;  // GF(2) only; unreachable for deg >= 3
  if (generator_code_ == 0) throw FieldConfigError("no generator found");

  exp_code_.resize(ord);
  log_of_code_.assign(n_, 0);
  const detail::Poly g = detail::code_to_poly(generator_code_, p);
  detail::Poly cur{1};
  for (std::uint32_t e = 0; e < ord; ++e) {
    const std::uint32_t c = detail::poly_to_code(cur, p);
    exp_code_[e] = c;
    log_of_code_[c] = e;
    cur = detail::poly_mulmod(cur, g, modulus_, p);
  }

  // Digitwise addition of codes gives 1 + tau^e.
  auto add_codes = [p](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0, place = 1;
    while (a || b) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  };
  zech_.resize(ord);
  for (std::uint32_t e = 0; e < ord; ++e) zech_[e] = from_code(add_codes(1, exp_code_[e]));
  minus_one_ = from_code(p - 1);
}

/// Builds GF(q^3) for q = p^k.
inline FieldCtx build_field_tower(std::uint32_t p, std::uint32_t k,
                                  std::uint64_t table_bound =
                                      FieldCtx::kDefaultTableBound) {
  return FieldCtx(p, k, table_bound);
}

/// Splits a prime power q into (p, k); nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(
    std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), k};
}

}  // namespace figplane
