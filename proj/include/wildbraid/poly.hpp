// Sparse multivariate polynomials over Q, just enough for symbolic section
// matrices and characteristic-polynomial coefficient matching.
#pragma once

#include "wildbraid/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace wildbraid {

struct MPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

  static MPoly constant(int nvars, const Rat& c) {
    MPoly p;
    p.nvars = nvars;
    if (sgn(c) != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
  }
  static MPoly variable(int nvars, int i) {
    MPoly p;
    p.nvars = nvars;
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms[e] = 1;
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && terms.begin()->first == std::vector<int>(nvars, 0));
  }
  Rat constant_term() const {
    auto it = terms.find(std::vector<int>(nvars, 0));
    return it == terms.end() ? Rat(0) : it->second;
  }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = sgn(it->second) == 0 ? terms.erase(it) : std::next(it);
  }

  long total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms) {
      long t = 0;
      for (int x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }

  Rat eval(const std::vector<Rat>& point) const {
    Rat out(0);
    for (const auto& [e, c] : terms) {
      Rat term = c;
      for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      out += term;
    }
    out.canonicalize();
    return out;
  }

  bool operator==(const MPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

inline MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms) r.terms[e] += c;
  r.prune();
  return r;
}

inline MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

inline MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

inline MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.nvars = a.nvars;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.terms[e] += ca * cb;
    }
  r.prune();
  return r;
}

// Ring context so the division-free matrix kernels run on MPoly entries.
struct MPolyRing {
  using Elem = MPoly;
  int nvars = 0;

  Elem zero() const { return MPoly::constant(nvars, Rat(0)); }
  Elem one() const { return MPoly::constant(nvars, Rat(1)); }
  Elem from_long(long v) const { return MPoly::constant(nvars, Rat(v)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem&) const { throw std::domain_error("MPoly has no inverses"); }
  Elem div(const Elem&, const Elem&) const { throw std::domain_error("MPoly has no division"); }
  std::string str(const Elem& a) const;
};

std::string mpoly_to_string(const MPoly& p, const std::string& varname = "z");

}  // namespace wildbraid
