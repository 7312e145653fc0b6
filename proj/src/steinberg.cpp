#include "wildbraid/steinberg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wildbraid::steinberg {

using matgroup::ClassSpec;
using matgroup::Family;
using matgroup::GroupSpec;
using rootdata::RootSystem;
using rootdata::WeylElement;

SteinbergSection section(const GroupSpec& spec, const RootSystem& rs_a, const WeylElement& w) {
  if (rs_a.type_label != 'A' || rs_a.rank != spec.n - 1)
    throw ConfigError("section requires the A_(n-1) root system of the group");
  SteinbergSection s;
  s.spec = spec;
  s.w = w;
  s.word = w.word;

  // Roots of U cap wU^-w^{-1} in chart order: beta_k = s_{i1}...s_{i(k-1)}(alpha_{ik}).
  WeylElement prefix = rootdata::identity_element(rs_a);
  for (size_t k = 0; k < s.word.size(); ++k) {
    std::vector<long> alpha(rs_a.rank, 0);
    alpha[s.word[k] - 1] = 1;
    s.coordinate_roots.push_back(rootdata::apply_to_coords(rs_a, prefix, alpha));
    prefix = rootdata::multiply(rs_a, prefix, rootdata::simple_reflection(rs_a, s.word[k]));
  }

  // Sanity: the chart roots are exactly { alpha > 0 : w^{-1}(alpha) < 0 }.
  WeylElement winv = rootdata::inverse(rs_a, w);
  std::set<std::vector<long>> expected;
  for (int k = 0; k < rs_a.num_positive_roots(); ++k)
    if (winv.root_action[k] < 0) expected.insert(rs_a.positive_roots[k]);
  std::set<std::vector<long>> got(s.coordinate_roots.begin(), s.coordinate_roots.end());
  if (expected != got) throw ConfigError("section chart roots disagree with inversions");
  return s;
}

Mat<MPoly> evaluate_symbolic(const SteinbergSection& s) {
  int r = static_cast<int>(s.word.size());
  MPolyRing ring{r};
  Mat<MPoly> m = mat_identity(ring, s.spec.n);
  for (int k = 0; k < r; ++k) {
    Mat<MPoly> b = mat_identity(ring, s.spec.n);
    int i = s.word[k];
    // x_i(z_k) * s_i block
    b.at(i - 1, i - 1) = MPoly::variable(r, k);
    b.at(i - 1, i) = ring.from_long(-1);
    b.at(i, i - 1) = ring.one();
    b.at(i, i) = ring.zero();
    m = mat_mul(ring, m, b);
  }
  return m;
}

std::vector<std::vector<Rat>> intersect_with_class_q(const SteinbergSection& s,
                                                     const ClassSpec& cls) {
  if (s.spec.field.characteristic != 0)
    throw ConfigError("rational intersection requested for a finite-field group");
  if (s.spec.family == Family::PGL)
    throw UnsupportedInput("closed-form intersection over Q is implemented for SL/GL only");

  int n = s.spec.n;
  int r = static_cast<int>(s.word.size());
  MPolyRing ring{r};
  Mat<MPoly> m = evaluate_symbolic(s);
  std::vector<MPoly> cp = mat_charpoly(ring, m);  // low degree first

  std::vector<Rat> target = cls.charpoly;
  if (cls.kind == ClassSpec::Kind::ExplicitRepresentative) {
    QField q;
    if (!cls.representative) throw ConfigError("explicit class without representative");
    if (!mat_is_regular(q, *cls.representative))
      throw ConfigError("class representative is not regular (min poly < char poly)");
    target = mat_charpoly(q, *cls.representative);
  }
  if (static_cast<int>(target.size()) != n + 1)
    throw ConfigError("class polynomial degree mismatch");

  // Coefficients of x^(n-1), x^(n-2), ... must be triangular in z_1, z_2, ...
  std::vector<Rat> sol(r, Rat(0));
  for (int k = 1; k <= r; ++k) {
    if (n - k < 0) throw UnsupportedInput("more chart coordinates than matchable coefficients");
    MPoly p = cp[n - k];
    Rat linear_coeff(0);
    MPoly rest = MPoly::constant(r, Rat(0));
    for (const auto& [e, c] : p.terms) {
      bool only_earlier = true;
      for (int v = k - 1; v < r; ++v) only_earlier &= e[v] == 0;
      if (only_earlier) {
        MPoly mono;
        mono.nvars = r;
        mono.terms[e] = c;
        rest = rest + mono;
        continue;
      }
      std::vector<int> zk(r, 0);
      zk[k - 1] = 1;
      if (e == zk) {
        linear_coeff = c;
        continue;
      }
      throw UnsupportedInput("coefficient system is not triangular in the chart variables");
    }
    if (sgn(linear_coeff) == 0)
      throw UnsupportedInput("coefficient system is not triangular in the chart variables");
    Rat value = (target[n - k] - rest.eval(sol)) / linear_coeff;
    value.canonicalize();
    sol[k - 1] = value;
  }

  // Verify every coefficient at the solution, then regularity.
  for (int d = 0; d <= n; ++d)
    if (cmp(cp[d].eval(sol), target[d]) != 0) return {};
  QField q;
  std::vector<Rat> coords(sol.begin(), sol.end());
  Mat<Rat> point = evaluate(q, s, coords);
  ClassSpec by_poly;
  by_poly.kind = ClassSpec::Kind::RegularByCharpoly;
  by_poly.charpoly = target;
  if (!matgroup::class_membership(q, s.spec, point, by_poly)) return {};
  return {sol};
}

std::vector<std::vector<long>> intersect_with_class_fp(const FpField& f,
                                                       const SteinbergSection& s,
                                                       const ClassSpec& cls, size_t budget) {
  if (cls.kind == ClassSpec::Kind::ExplicitRepresentative) {
    QField q;
    if (!cls.representative) throw ConfigError("explicit class without representative");
    if (!mat_is_regular(q, *cls.representative))
      throw ConfigError("class representative is not regular (min poly < char poly)");
  }
  int r = static_cast<int>(s.word.size());
  double size = 1;
  for (int k = 0; k < r; ++k) size *= static_cast<double>(f.p);
  if (size > static_cast<double>(budget))
    throw ResourceError("coordinate-space enumeration exceeds budget");

  std::vector<std::vector<long>> found;
  std::vector<long> z(r, 0);
  while (true) {
    Mat<long> point = evaluate(f, s, z);
    if (matgroup::class_membership(f, s.spec, point, cls)) found.push_back(z);
    int k = 0;
    while (k < r && z[k] == f.p - 1) z[k++] = 0;
    if (k == r) break;
    ++z[k];
  }
  return found;
}

template <class K>
std::vector<std::vector<int>> tw_orbit_partition(
    const K& f, const SteinbergSection& s,
    const std::vector<std::vector<typename K::Elem>>& points,
    const std::vector<Mat<typename K::Elem>>& torus) {
  int np = static_cast<int>(points.size());
  std::vector<Mat<typename K::Elem>> mats;
  mats.reserve(np);
  for (const auto& z : points) mats.push_back(evaluate(f, s, z));

  auto find_point = [&](const Mat<typename K::Elem>& g) {
    for (int i = 0; i < np; ++i)
      if (mat_eq(f, mats[i], g)) return i;
    return -1;
  };

  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& t : torus) {
    Mat<typename K::Elem> tinv = mat_inverse(f, t);
    for (int i = 0; i < np; ++i) {
      Mat<typename K::Elem> conj =
          matgroup::canonicalize(f, s.spec, mat_mul(f, mat_mul(f, t, mats[i]), tinv));
      int j = find_point(conj);
      if (j < 0)
        throw ConfigError("conjugate left the section point list (incomplete input)");
      parent[find(i)] = find(j);
    }
  }

  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < np; ++i) blocks[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, blk] : blocks) out.push_back(std::move(blk));
  return out;
}

template std::vector<std::vector<int>> tw_orbit_partition<QField>(
    const QField&, const SteinbergSection&, const std::vector<std::vector<Rat>>&,
    const std::vector<Mat<Rat>>&);
template std::vector<std::vector<int>> tw_orbit_partition<FpField>(
    const FpField&, const SteinbergSection&, const std::vector<std::vector<long>>&,
    const std::vector<Mat<long>>&);

template <class K>
typename K::Elem delta_map(const K& f, int n, const WeylElement& w,
                           const Mat<typename K::Elem>& t_pgl) {
  typename K::Elem det = mat_det(f, t_pgl);

  // determinant-1 lift: scale by c with c^n = det^{-1}
  typename K::Elem scale;
  bool have = false;
  if constexpr (std::is_same_v<K, QField>) {
    for (const Rat& c : rat_nth_roots(Rat(1 / det), static_cast<unsigned>(n))) {
      scale = c;
      have = true;
      break;
    }
  } else {
    for (long c = 1; c < f.p; ++c)
      if (f.eq(f.mul(f.pow(c, n), det), f.one())) {
        scale = c;
        have = true;
        break;
      }
  }
  if (!have) throw UnsupportedInput("no determinant-1 lift over this field");

  Mat<typename K::Elem> lift = mat_scale(f, t_pgl, scale);
  Mat<typename K::Elem> wl = matgroup::weyl_lift(f, n, w);
  Mat<typename K::Elem> winv = mat_inverse(f, wl);
  Mat<typename K::Elem> delta =
      mat_mul(f, mat_mul(f, mat_mul(f, winv, mat_inverse(f, lift)), wl), lift);

  // must be scalar
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && !f.eq(delta.at(i, i), delta.at(0, 0)))
        throw ConfigError("delta image is not scalar");
      if (i != j && !f.is_zero(delta.at(i, j)))
        throw ConfigError("delta image is not scalar");
    }
  return delta.at(0, 0);
}

template QField::Elem delta_map<QField>(const QField&, int, const WeylElement&,
                                        const Mat<Rat>&);
template FpField::Elem delta_map<FpField>(const FpField&, int, const WeylElement&,
                                          const Mat<long>&);

IsogenyContext make_isogeny_context(int n, const matgroup::FieldSpec& field) {
  if (field.characteristic != 0 && (field.characteristic - 1) % n != 0)
    throw ConfigError("kernel of SL_" + std::to_string(n) +
                      " -> PGL needs p = 1 mod n; got p = " +
                      std::to_string(field.characteristic));
  IsogenyContext ctx;
  ctx.source = matgroup::GroupSpec{matgroup::Family::SL, n, field};
  ctx.target = matgroup::GroupSpec{matgroup::Family::PGL, n, field};
  ctx.kernel_order = n;
  return ctx;
}

std::vector<long> kernel_scalars(const FpField& f, int n) {
  return f.nth_roots_of_unity(n);
}

bool sl_conjugate(const FpField& f, const Mat<long>& a, const Mat<long>& b) {
  int n = a.rows;
  // Solve g a = b g as a linear system in the entries of g.
  Mat<long> sys(n * n, n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int row = i * n + j;
      for (int k = 0; k < n; ++k) {
        // (g a)_{ij} contributes g_{ik} a_{kj}; (b g)_{ij} contributes b_{ik} g_{kj}.
        sys.at(row, i * n + k) = f.add(sys.at(row, i * n + k), a.at(k, j));
        sys.at(row, k * n + j) = f.sub(sys.at(row, k * n + j), b.at(i, k));
      }
    }

  // Row reduce; read off the nullspace basis.
  Mat<long> m = sys;
  int rows = n * n, cols = n * n;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    long s = f.inv(m.at(rank, col));
    for (int j = 0; j < cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), s);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      long c = m.at(r, col);
      for (int j = 0; j < cols; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(rank, j)));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<int> free_cols;
  {
    std::set<int> pivots(pivot_col.begin(), pivot_col.end());
    for (int c = 0; c < cols; ++c)
      if (!pivots.count(c)) free_cols.push_back(c);
  }
  int dim = static_cast<int>(free_cols.size());
  if (dim == 0) return false;
  if (dim > 6) throw ResourceError("conjugacy nullspace too large to enumerate");

  std::vector<std::vector<long>> basis;
  for (int fc : free_cols) {
    std::vector<long> v(cols, 0);
    v[fc] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(m.at(r, fc));
    basis.push_back(std::move(v));
  }

  // Search the span for a determinant-1 witness.
  std::vector<long> coeff(dim, 0);
  while (true) {
    int k = 0;
    while (k < dim && coeff[k] == f.p - 1) coeff[k++] = 0;
    if (k == dim) break;
    ++coeff[k];
    Mat<long> g(n, n, 0);
    for (int d = 0; d < dim; ++d) {
      if (coeff[d] == 0) continue;
      for (int e = 0; e < cols; ++e)
        g.a[e] = f.add(g.a[e], f.mul(coeff[d], basis[d][e]));
    }
    if (mat_det(f, g) == 1) return true;
  }
  return false;
}

std::vector<long> kernel_class_stabilizer(const FpField& f, int n, const Mat<long>& x1) {
  std::vector<long> out;
  for (long k : kernel_scalars(f, n)) {
    Mat<long> kx = mat_scale(f, x1, k);
    if (k == 1 || sl_conjugate(f, kx, x1)) out.push_back(k);
  }
  return out;
}

namespace {

std::vector<long> mat_key(const Mat<long>& m) { return m.a; }

std::vector<Mat<long>> enumerate_unipotent_upper(const FpField& f, int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Mat<long>> out;
  std::vector<long> v(slots.size(), 0);
  while (true) {
    Mat<long> m = mat_identity(f, n);
    for (size_t k = 0; k < slots.size(); ++k) m.at(slots[k].first, slots[k].second) = v[k];
    out.push_back(std::move(m));
    size_t k = 0;
    while (k < slots.size() && v[k] == f.p - 1) v[k++] = 0;
    if (k == slots.size()) break;
    ++v[k];
  }
  return out;
}

}  // namespace

HLCheckResult hl_exhaustive_check(const FpField& f, int n, const RootSystem& rs_a) {
  HLCheckResult res;
  WeylElement cox = rootdata::coxeter_element(rs_a);
  GroupSpec spec{Family::SL, n, matgroup::FieldSpec{f.p}};
  SteinbergSection s = section(spec, rs_a, cox);

  std::vector<Mat<long>> u_all = enumerate_unipotent_upper(f, n);
  Mat<long> wl = matgroup::weyl_lift(f, n, cox);

  // UwU as a deduped point set.
  std::map<std::vector<long>, int> ambient;  // matrix -> orbit id (-1 = unassigned)
  for (const auto& u1 : u_all)
    for (const auto& u2 : u_all) {
      Mat<long> g = mat_mul(f, mat_mul(f, u1, wl), u2);
      ambient.emplace(mat_key(g), -1);
    }
  res.ambient_count = static_cast<long>(ambient.size());

  // Section points.
  std::set<std::vector<long>> section_set;
  int r = static_cast<int>(s.word.size());
  std::vector<long> z(r, 0);
  while (true) {
    section_set.insert(mat_key(evaluate(f, s, z)));
    int k = 0;
    while (k < r && z[k] == f.p - 1) z[k++] = 0;
    if (k == r) break;
    ++z[k];
  }
  res.section_point_count = static_cast<long>(section_set.size());

  std::vector<Mat<long>> u_inv;
  u_inv.reserve(u_all.size());
  for (const auto& u : u_all) u_inv.push_back(mat_inverse(f, u));

  res.free_action = true;
  res.unique_meeting = true;
  int orbit_id = 0;
  for (auto& [key, id] : ambient) {
    if (id != -1) continue;
    Mat<long> base(n, n, 0);
    base.a = key;
    std::set<std::vector<long>> orbit;
    long meets = 0;
    for (size_t ui = 0; ui < u_all.size(); ++ui) {
      Mat<long> conj = mat_mul(f, mat_mul(f, u_all[ui], base), u_inv[ui]);
      auto ck = mat_key(conj);
      if (orbit.insert(ck).second && section_set.count(ck)) ++meets;
    }
    if (orbit.size() != u_all.size()) res.free_action = false;
    if (meets != 1) res.unique_meeting = false;
    for (const auto& k2 : orbit) {
      auto it = ambient.find(k2);
      if (it == ambient.end()) throw ConfigError("orbit escaped UwU");
      it->second = orbit_id;
    }
    ++orbit_id;
  }
  res.orbit_count = orbit_id;
  return res;
}

}  // namespace wildbraid::steinberg
