// Exact scalar domains: arbitrary-precision rationals (GMP) and small prime fields.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace wildbraid {

using Int = mpz_class;
using Rat = mpq_class;

// Raised for invalid configuration (bad type/rank, malformed class string, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an enumeration would exceed its budget.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised for inputs outside the exact-arithmetic family the module supports.
struct UnsupportedInput : std::runtime_error {
  explicit UnsupportedInput(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_of_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ConfigError("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline long floor_div_long(const Rat& a) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (!q.fits_slong_p()) throw ConfigError("rational floor out of range");
  return q.get_si();
}

// a mod m for rationals, result in [0, m).
inline Rat rat_mod(const Rat& a, const Rat& m) {
  Rat q = a / m;
  Rat r = a - Rat(floor_div_long(q)) * m;
  r.canonicalize();
  return r;
}

// Non-negative residue of an arbitrary-precision integer.
inline long mod_long(const Int& v, long m) {
  Int r, mm(m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  return r.get_si();
}

// Exact integer nth root when it exists.
inline std::optional<Int> int_nth_root(const Int& v, unsigned n) {
  if (sgn(v) < 0 && n % 2 == 0) return std::nullopt;
  Int root;
  int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return root;
}

// Rational nth roots; returns all of them that live in Q (0, 1, or 2 values).
inline std::vector<Rat> rat_nth_roots(const Rat& v, unsigned n) {
  std::vector<Rat> out;
  auto num = int_nth_root(Int(v.get_num()), n);
  auto den = int_nth_root(Int(v.get_den()), n);
  if (!num || !den) return out;
  Rat r(*num, *den);
  r.canonicalize();
  out.push_back(r);
  if (n % 2 == 0 && sgn(r) != 0) out.push_back(-r);
  return out;
}

// ---------------------------------------------------------------------------
// Field contexts.  Linear algebra is written against this interface so that
// the same code runs over Q and over F_p.

struct QField {
  using Elem = Rat;
  static constexpr long characteristic = 0;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in Q");
    return Elem(1 / a);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  std::string str(const Elem& a) const { return a.get_str(); }
  // All field elements of Q cannot be enumerated.
  long order() const { return 0; }
};

struct FpField {
  using Elem = long;
  long p;

  explicit FpField(long prime) : p(prime) {
    if (p < 2) throw ConfigError("field characteristic must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw ConfigError("field size is not prime: " + std::to_string(p));
  }

  long characteristic_value() const { return p; }
  Elem reduce(long v) const {
    long r = v % p;
    return r < 0 ? r + p : r;
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_long(long v) const { return reduce(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
  Elem neg(const Elem& a) const { return reduce(-a); }
  Elem pow(Elem b, long e) const {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p - 2);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  std::string str(const Elem& a) const { return std::to_string(a); }
  long order() const { return p; }

  std::vector<Elem> nth_roots_of_unity(long n) const {
    std::vector<Elem> out;
    for (Elem x = 1; x < p; ++x)
      if (pow(x, n) == 1) out.push_back(x);
    return out;
  }
};

}  // namespace wildbraid
