#include "wildbraid/matgroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wildbraid::matgroup {

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::GL: return "GL";
    case Family::PGL: return "PGL";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "SL") return Family::SL;
  if (s == "GL") return Family::GL;
  if (s == "PGL") return Family::PGL;
  throw ConfigError("unknown group family: " + s);
}

namespace {

// Recursive-descent-free scanner for expanded polynomials in x.
std::vector<Rat> parse_poly_terms(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ConfigError("empty class polynomial");

  std::vector<std::pair<long, Rat>> terms;  // (degree, coefficient)
  size_t pos = 0;
  while (pos < s.size()) {
    Rat sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= s.size()) throw ConfigError("dangling sign in polynomial");

    // coefficient (optional), possibly a/b
    std::string digits;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      digits.push_back(s[pos++]);
    Rat coeff = digits.empty() ? Rat(1) : rat_of_string(digits);
    coeff *= sign;

    long degree = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          d.push_back(s[pos++]);
        if (d.empty()) throw ConfigError("missing exponent after '^'");
        degree = std::stol(d);
      }
    } else if (digits.empty()) {
      throw ConfigError("unexpected character in polynomial: '" + std::string(1, s[pos]) + "'");
    }
    terms.emplace_back(degree, coeff);
  }

  long max_deg = 0;
  for (auto& [d, c] : terms) max_deg = std::max(max_deg, d);
  std::vector<Rat> coeffs(max_deg + 1, Rat(0));
  for (auto& [d, c] : terms) coeffs[d] += c;
  for (auto& c : coeffs) c.canonicalize();
  return coeffs;
}

}  // namespace

ClassSpec parse_class(const std::string& text, const GroupSpec& spec) {
  ClassSpec c;
  c.kind = ClassSpec::Kind::RegularByCharpoly;
  c.charpoly = parse_poly_terms(text);
  if (static_cast<int>(c.charpoly.size()) != spec.n + 1)
    throw ConfigError("class polynomial degree must be " + std::to_string(spec.n));
  if (cmp(c.charpoly.back(), Rat(1)) != 0)
    throw ConfigError("class polynomial must be monic");
  Rat constant = c.charpoly.front();
  if (spec.family == Family::SL) {
    Rat expected = (spec.n % 2 == 0) ? Rat(1) : Rat(-1);
    if (cmp(constant, expected) != 0)
      throw ConfigError("SL class polynomial must have constant term (-1)^n");
  } else if (sgn(constant) == 0) {
    throw ConfigError("class polynomial must have nonzero constant term");
  }
  return c;
}

std::string class_to_string(const ClassSpec& c) {
  std::ostringstream out;
  int n = static_cast<int>(c.charpoly.size()) - 1;
  bool first = true;
  for (int d = n; d >= 0; --d) {
    const Rat& coeff = c.charpoly[d];
    if (sgn(coeff) == 0) continue;
    Rat abs_coeff = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(coeff) < 0 ? "-" : "+");
    }
    bool unit = cmp(abs_coeff, Rat(1)) == 0;
    if (d == 0 || !unit) out << abs_coeff.get_str();
    if (d >= 1) {
      out << "x";
      if (d >= 2) out << "^" << d;
    }
  }
  if (first) out << "0";
  return out.str();
}

rootdata::WeylElement weyl_from_permutation(const rootdata::RootSystem& rs_a,
                                            const std::vector<int>& perm) {
  int n = rs_a.rank + 1;
  if (static_cast<int>(perm.size()) != n) throw ConfigError("permutation size mismatch");

  // pair (i,j), 1 <= i < j <= n maps to the root with ones in [i-1, j-2].
  auto pair_index = [&](int i, int j) {
    std::vector<long> coords(rs_a.rank, 0);
    for (int k = i - 1; k <= j - 2; ++k) coords[k] = 1;
    int idx = rs_a.root_index(coords);
    if (idx < 0) throw ConfigError("pair has no matching root");
    return idx;
  };

  std::vector<rootdata::SignedRoot> action(rs_a.num_positive_roots());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int a = perm[i - 1] + 1, b = perm[j - 1] + 1;
      int from = pair_index(i, j);
      action[from] = a < b ? pair_index(a, b) + 1 : -(pair_index(b, a) + 1);
    }
  }
  return rootdata::from_root_action(rs_a, std::move(action));
}

std::vector<int> permutation_from_weyl(const rootdata::RootSystem& rs_a,
                                       const rootdata::WeylElement& w) {
  int n = rs_a.rank + 1;
  auto pair_of_index = [&](int idx) {
    const auto& coords = rs_a.positive_roots[idx];
    int i = 0;
    while (i < rs_a.rank && coords[i] == 0) ++i;
    int j = i;
    while (j < rs_a.rank && coords[j] == 1) ++j;
    return std::pair<int, int>(i + 1, j + 1);  // root e_i - e_j with j = last+1
  };

  std::vector<int> perm(n, -1);
  for (int i = 1; i < n; ++i) {
    std::vector<long> e(rs_a.rank, 0);
    e[i - 1] = 1;
    int idx = rs_a.root_index(e);
    rootdata::SignedRoot img = w.root_action[idx];
    auto [a, b] = pair_of_index(std::abs(img) - 1);
    int wi = img > 0 ? a : b;
    int wi1 = img > 0 ? b : a;
    if (perm[i - 1] >= 0 && perm[i - 1] != wi - 1)
      throw ConfigError("inconsistent permutation reconstruction");
    perm[i - 1] = wi - 1;
    perm[i] = wi1 - 1;
  }
  if (n == 1) perm[0] = 0;
  return perm;
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> used(perm.size(), false);
  for (size_t s = 0; s < perm.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> cyc;
    size_t cur = s;
    while (!used[cur]) {
      used[cur] = true;
      cyc.push_back(static_cast<int>(cur));
      cur = static_cast<size_t>(perm[cur]);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

namespace {

template <class K>
void emit_sl_gl_fixed(const K& f, const GroupSpec& spec,
                      const std::vector<std::vector<int>>& cycles, TorusFixed<K>& out);

template <>
void emit_sl_gl_fixed(const FpField& f, const GroupSpec& spec,
                      const std::vector<std::vector<int>>& cycles, TorusFixed<FpField>& out) {
  int n = spec.n;
  size_t num_cycles = cycles.size();
  std::vector<long> choice(num_cycles, 1);
  while (true) {
    std::vector<long> diag(n);
    long det = 1;
    for (size_t c = 0; c < num_cycles; ++c) {
      for (int pos : cycles[c]) diag[pos] = choice[c];
      for (size_t k = 0; k < cycles[c].size(); ++k) det = f.mul(det, choice[c]);
    }
    if (spec.family == Family::GL || det == 1) out.elements.push_back(diagonal(f, diag));
    size_t c = 0;
    while (c < num_cycles && choice[c] == f.p - 1) choice[c++] = 1;
    if (c == num_cycles) break;
    ++choice[c];
  }
}

template <>
void emit_sl_gl_fixed(const QField& f, const GroupSpec& spec,
                      const std::vector<std::vector<int>>& cycles, TorusFixed<QField>& out) {
  // Over Q the only roots of unity are +-1.
  int n = spec.n;
  size_t num_cycles = cycles.size();
  if (spec.family == Family::GL) {
    out.finite = false;
    out.description = "rank-" + std::to_string(num_cycles) + " torus (one unit per cycle)";
    return;
  }
  if (num_cycles > 1) {
    out.finite = false;
    out.description = "positive-dimensional: " + std::to_string(num_cycles) +
                      " cycles give a torus of rank " + std::to_string(num_cycles - 1) +
                      " after the determinant condition";
    return;
  }
  for (Rat c : {Rat(1), Rat(-1)}) {
    Rat det = 1;
    for (int k = 0; k < n; ++k) det *= c;
    if (cmp(det, Rat(1)) == 0)
      out.elements.push_back(diagonal(f, std::vector<Rat>(n, c)));
  }
}

}  // namespace

template <class K>
TorusFixed<K> torus_fixed_points(const K& f, const GroupSpec& spec,
                                 const rootdata::RootSystem& rs_a,
                                 const rootdata::WeylElement& w) {
  TorusFixed<K> out;
  std::vector<int> perm = permutation_from_weyl(rs_a, w);
  auto cycles = permutation_cycles(perm);
  int n = spec.n;

  if (spec.family != Family::PGL) {
    emit_sl_gl_fixed(f, spec, cycles, out);
    return out;
  }

  // PGL: Ad_w(t) = t mod scalars, i.e. t_{perm[j]} = lambda t_j for a single lambda.
  if constexpr (std::is_same_v<K, QField>) {
    if (cycles.size() > 1) {
      out.finite = false;
      out.description = "positive-dimensional fixed torus (non-elliptic element)";
      return out;
    }
    for (Rat lambda : {Rat(1), Rat(-1)}) {
      Rat pw = 1;
      bool ok = true;
      std::vector<Rat> diag(n, Rat(0));
      const auto& cyc = cycles[0];
      for (size_t k = 0; k < cyc.size(); ++k) {
        diag[cyc[k]] = pw;
        pw *= lambda;
      }
      if (cmp(pw, Rat(1)) != 0) ok = false;  // lambda^n = 1
      if (ok) out.elements.push_back(pgl_canonicalize(f, diagonal(f, diag)));
    }
    return out;
  } else {
    std::vector<long> t(n, 1);
    // scalar gauge: t_0 = 1; enumerate the rest.
    std::vector<long> idx(n - 1, 1);
    while (true) {
      for (int k = 0; k < n - 1; ++k) t[k + 1] = idx[k];
      long lambda = t[perm[0]];  // t_0 = 1
      bool ok = true;
      for (int j = 0; j < n && ok; ++j)
        if (t[perm[j]] != f.mul(lambda, t[j])) ok = false;
      if (ok) out.elements.push_back(diagonal(f, t));
      int c = 0;
      while (c < n - 1 && idx[c] == f.p - 1) idx[c++] = 1;
      if (c == n - 1) break;
      ++idx[c];
    }
    return out;
  }
}

template TorusFixed<QField> torus_fixed_points<QField>(const QField&, const GroupSpec&,
                                                       const rootdata::RootSystem&,
                                                       const rootdata::WeylElement&);
template TorusFixed<FpField> torus_fixed_points<FpField>(const FpField&, const GroupSpec&,
                                                         const rootdata::RootSystem&,
                                                         const rootdata::WeylElement&);

nlohmann::json group_spec_to_json(const GroupSpec& spec) {
  std::string field = spec.field.characteristic == 0
                          ? "Q"
                          : "F" + std::to_string(spec.field.characteristic);
  return nlohmann::json{{"family", family_name(spec.family)}, {"n", spec.n}, {"field", field}};
}

}  // namespace wildbraid::matgroup
