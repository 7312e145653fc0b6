// Exact matrix realizations of SL_n / GL_n / PGL_n over Q and prime fields:
// fixed conventions B = upper triangular, T = diagonal, U = strictly upper
// unipotent, s_i lift = [[0,-1],[1,0]] block, b_i(z) = x_i(z) s_i.
#pragma once

#include "wildbraid/linalg.hpp"
#include "wildbraid/rootdata.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wildbraid::matgroup {

enum class Family { SL, GL, PGL };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct FieldSpec {
  long characteristic = 0;  // 0 = rationals, otherwise a prime
};

struct GroupSpec {
  Family family = Family::SL;
  int n = 2;
  FieldSpec field;
};

struct ClassSpec {
  enum class Kind { RegularByCharpoly, ExplicitRepresentative };
  Kind kind = Kind::RegularByCharpoly;
  std::vector<Rat> charpoly;  // monic, low degree first, length n+1
  std::optional<Mat<Rat>> representative;
};

// Parses "x^2-3x+1" (integer or a/b coefficients) into a monic charpoly.
ClassSpec parse_class(const std::string& text, const GroupSpec& spec);
std::string class_to_string(const ClassSpec& c);

// Reduce the rational charpoly into a field.
template <class K>
std::vector<typename K::Elem> reduce_charpoly(const K& f, const std::vector<Rat>& coeffs) {
  std::vector<typename K::Elem> out;
  out.reserve(coeffs.size());
  for (const Rat& c : coeffs) {
    if constexpr (std::is_same_v<K, QField>) {
      out.push_back(c);
    } else {
      long num = mod_long(Int(c.get_num()), f.p);
      long den = mod_long(Int(c.get_den()), f.p);
      out.push_back(f.div(num, den));
    }
  }
  return out;
}

// --- elementary matrices -------------------------------------------------

template <class K>
Mat<typename K::Elem> elementary_unipotent(const K& f, int n, int i, typename K::Elem z) {
  Mat<typename K::Elem> m = mat_identity(f, n);
  m.at(i - 1, i) = z;
  return m;
}

template <class K>
Mat<typename K::Elem> simple_reflection_lift(const K& f, int n, int i) {
  Mat<typename K::Elem> m = mat_identity(f, n);
  m.at(i - 1, i - 1) = f.zero();
  m.at(i, i) = f.zero();
  m.at(i - 1, i) = f.neg(f.one());
  m.at(i, i - 1) = f.one();
  return m;
}

template <class K>
Mat<typename K::Elem> b_matrix(const K& f, int n, int i, typename K::Elem z) {
  return mat_mul(f, elementary_unipotent(f, n, i, z), simple_reflection_lift(f, n, i));
}

template <class K>
Mat<typename K::Elem> weyl_lift(const K& f, int n, const rootdata::WeylElement& w) {
  Mat<typename K::Elem> m = mat_identity(f, n);
  for (int i : w.word) m = mat_mul(f, m, simple_reflection_lift(f, n, i));
  return m;
}

template <class K>
Mat<typename K::Elem> diagonal(const K& f, const std::vector<typename K::Elem>& entries) {
  Mat<typename K::Elem> m(static_cast<int>(entries.size()), static_cast<int>(entries.size()),
                          f.zero());
  for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

// PGL canonical scalar normalization: first nonzero entry (row-major) = 1.
template <class K>
Mat<typename K::Elem> pgl_canonicalize(const K& f, Mat<typename K::Elem> m) {
  for (const auto& v : m.a) {
    if (!f.is_zero(v)) {
      typename K::Elem s = f.inv(v);
      for (auto& x : m.a) x = f.mul(x, s);
      return m;
    }
  }
  throw ConfigError("zero matrix cannot represent a PGL element");
}

template <class K>
Mat<typename K::Elem> canonicalize(const K& f, const GroupSpec& spec,
                                   Mat<typename K::Elem> m) {
  if (spec.family == Family::PGL) return pgl_canonicalize(f, std::move(m));
  return m;
}

// --- flags and Bruhat cells ----------------------------------------------

// Canonical coset representative for gB: column-reduced with bottom-most unit
// pivots and zeros at earlier pivot rows.
template <class K>
Mat<typename K::Elem> borel_canonical(const K& f, Mat<typename K::Elem> m,
                                      std::vector<int>* pivots_out = nullptr) {
  int n = m.rows;
  std::vector<int> pivots(n, -1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      typename K::Elem c = m.at(pivots[i], j);
      if (f.is_zero(c)) continue;
      for (int r = 0; r < n; ++r) m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(r, i)));
    }
    int p = -1;
    for (int r = n - 1; r >= 0; --r)
      if (!f.is_zero(m.at(r, j))) {
        p = r;
        break;
      }
    if (p < 0) throw ConfigError("flag representative is singular");
    pivots[j] = p;
    typename K::Elem s = f.inv(m.at(p, j));
    for (int r = 0; r < n; ++r) m.at(r, j) = f.mul(m.at(r, j), s);
  }
  if (pivots_out) *pivots_out = pivots;
  return m;
}

template <class K>
struct BorelPoint {
  Mat<typename K::Elem> rep;
};

template <class K>
BorelPoint<K> borel_point(const K& f, Mat<typename K::Elem> g) {
  return BorelPoint<K>{borel_canonical(f, std::move(g))};
}

rootdata::WeylElement weyl_from_permutation(const rootdata::RootSystem& rs_a,
                                            const std::vector<int>& perm);
std::vector<int> permutation_from_weyl(const rootdata::RootSystem& rs_a,
                                       const rootdata::WeylElement& w);

// The unique w with g in BwB, from the pivot pattern of the column echelon form.
template <class K>
rootdata::WeylElement bruhat_position(const K& f, const rootdata::RootSystem& rs_a,
                                      Mat<typename K::Elem> g) {
  std::vector<int> pivots;
  borel_canonical(f, std::move(g), &pivots);
  return weyl_from_permutation(rs_a, pivots);
}

template <class K>
rootdata::WeylElement relative_position(const K& f, const rootdata::RootSystem& rs_a,
                                        const BorelPoint<K>& f1, const BorelPoint<K>& f2) {
  Mat<typename K::Elem> rel = mat_mul(f, mat_inverse(f, f1.rep), f2.rep);
  return bruhat_position(f, rs_a, std::move(rel));
}

// --- regularity and conjugacy classes ------------------------------------

template <class K>
bool is_regular_element(const K& f, const GroupSpec& spec, const Mat<typename K::Elem>& g) {
  (void)spec;
  return mat_is_regular(f, g);
}

// Scalar-twisted charpoly: coefficients of char(kA) from char(A).
template <class K>
std::vector<typename K::Elem> twist_charpoly(const K& f,
                                             const std::vector<typename K::Elem>& coeffs,
                                             typename K::Elem k) {
  int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<typename K::Elem> out(coeffs.size(), f.zero());
  typename K::Elem pw = f.one();
  for (int j = n; j >= 0; --j) {
    out[j] = f.mul(coeffs[j], pw);
    pw = f.mul(pw, k);
  }
  return out;
}

template <class K>
bool class_membership(const K& f, const GroupSpec& spec, const Mat<typename K::Elem>& g,
                      const ClassSpec& cls) {
  std::vector<typename K::Elem> target;
  if (cls.kind == ClassSpec::Kind::ExplicitRepresentative) {
    if (!cls.representative) throw ConfigError("explicit class without representative");
    QField q;
    Mat<Rat> rep = *cls.representative;
    std::vector<Rat> cp = mat_charpoly(q, rep);
    target = reduce_charpoly(f, cp);
  } else {
    target = reduce_charpoly(f, cls.charpoly);
  }
  if (static_cast<int>(target.size()) != g.rows + 1)
    throw ConfigError("class charpoly degree does not match group rank");
  if (!mat_is_regular(f, g)) return false;
  std::vector<typename K::Elem> cp = mat_charpoly(f, g);

  auto eq_poly = [&](const std::vector<typename K::Elem>& a,
                     const std::vector<typename K::Elem>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (!f.eq(a[i], b[i])) return false;
    return true;
  };

  if (spec.family != Family::PGL) return eq_poly(cp, target);

  // PGL: membership up to a scalar twist of the charpoly.
  if constexpr (std::is_same_v<K, QField>) {
    int n = g.rows;
    Rat a0 = cp[0], b0 = target[0];
    if (sgn(a0) == 0 || sgn(b0) == 0) throw ConfigError("singular class data");
    for (const Rat& k : rat_nth_roots(Rat(b0 / a0), static_cast<unsigned>(n))) {
      if (eq_poly(twist_charpoly(f, cp, k), target)) return true;
    }
    return false;
  } else {
    for (long k = 1; k < f.p; ++k)
      if (eq_poly(twist_charpoly(f, cp, k), target)) return true;
    return false;
  }
}

// --- fixed tori ------------------------------------------------------------

template <class K>
struct TorusFixed {
  bool finite = true;
  std::vector<Mat<typename K::Elem>> elements;
  std::string description;  // set when infinite
};

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);

// T^w: diagonal (PGL: diagonal mod scalars) elements fixed by Ad of the lift of w.
template <class K>
TorusFixed<K> torus_fixed_points(const K& f, const GroupSpec& spec,
                                 const rootdata::RootSystem& rs_a,
                                 const rootdata::WeylElement& w);

nlohmann::json group_spec_to_json(const GroupSpec& spec);

template <class K>
nlohmann::json matrix_to_json(const K& f, const Mat<typename K::Elem>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(f.str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wildbraid::matgroup
