#include "wildbraid/braidvariety.hpp"

#include "wildbraid/poly.hpp"
#include "wildbraid/steinberg.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>

namespace wildbraid::braidvariety {

using matgroup::ClassSpec;
using matgroup::Family;
using matgroup::GroupSpec;
using rootdata::RootSystem;
using rootdata::WeylElement;

nlohmann::json CountReport::to_json() const {
  return nlohmann::json{{"q", q},
                        {"raw_count", raw_count},
                        {"constrained_count", constrained_count},
                        {"orbit_estimate", orbit_estimate},
                        {"elapsed_seconds", elapsed_seconds}};
}

nlohmann::json ModuliAnswer::to_json() const {
  return nlohmann::json{
      {"point_count_over_closure_surrogate", point_count_over_closure_surrogate},
      {"torus_orbit_count", torus_orbit_count},
      {"stabilizer_order", stabilizer_order},
      {"rigid", rigid}};
}

int expected_dimension(const RootSystem& rs, const braid::BraidWord& word) {
  WeylElement dem = braid::demazure_product(rs, word);
  return word.letter_count() - rootdata::length(rs, dem);
}

int stabilizer_fixed_space(const RootSystem& rs, const braid::BraidWord& word,
                           const WeylElement& target) {
  WeylElement image = rootdata::from_word(rs, word.letters);
  WeylElement v = rootdata::multiply(rs, image, rootdata::inverse(rs, target));
  return rootdata::fixed_space_dim(rs, v);
}

std::vector<std::vector<long>> torus_weights(int n, const braid::BraidWord& word) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<long>> weights;
  for (int letter : word.letters) {
    std::vector<long> w(n, 0);
    w[sigma[letter - 1]] += 1;
    w[sigma[letter]] -= 1;
    weights.push_back(std::move(w));
    std::swap(sigma[letter - 1], sigma[letter]);
  }
  return weights;
}

size_t enumeration_budget_from_env(size_t fallback) {
  if (const char* env = std::getenv("WILDBRAID_ENUM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
  }
  return fallback;
}

namespace {

long primitive_root(const FpField& f) {
  for (long g = 2; g < f.p; ++g) {
    long x = g;
    long order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    if (order == f.p - 1) return g;
  }
  return 1;  // p = 2
}

std::vector<std::vector<long>> torus_generators(const FpField& f, const GroupSpec& spec) {
  long g = primitive_root(f);
  std::vector<std::vector<long>> gens;
  if (spec.family == Family::SL) {
    for (int i = 0; i + 1 < spec.n; ++i) {
      std::vector<long> t(spec.n, 1);
      t[i] = g;
      t[i + 1] = f.inv(g);
      gens.push_back(std::move(t));
    }
  } else {
    for (int i = 0; i < spec.n; ++i) {
      std::vector<long> t(spec.n, 1);
      t[i] = g;
      gens.push_back(std::move(t));
    }
  }
  return gens;
}

long long count_torus_orbits(const FpField& f, const BraidVarietySpec& spec,
                             const std::vector<std::vector<long>>& points) {
  if (points.empty()) return 0;
  std::map<std::vector<long>, int> index;
  for (size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
  std::vector<int> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto gens = torus_generators(f, spec.group);
  for (const auto& t : gens) {
    for (size_t i = 0; i < points.size(); ++i) {
      std::vector<long> moved = torus_action(f, spec.group.n, spec.word, t, points[i]);
      auto it = index.find(moved);
      if (it == index.end())
        throw ConfigError("torus action left the counted point set");
      parent[find(static_cast<int>(i))] = find(it->second);
    }
  }
  long long blocks = 0;
  for (size_t i = 0; i < points.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++blocks;
  return blocks;
}

}  // namespace

CountOutput count_points(const FpField& f, const BraidVarietySpec& spec,
                         const std::optional<ClassSpec>& class_constraint, size_t budget,
                         bool collect_points, size_t collect_cap, bool estimate_orbits) {
  auto start = std::chrono::steady_clock::now();
  int r = spec.word.letter_count();
  int n = spec.group.n;

  double space = 1;
  for (int k = 0; k < r; ++k) {
    space *= static_cast<double>(f.p);
    if (space > static_cast<double>(budget))
      throw ResourceError("coordinate-space size q^r exceeds the enumeration budget");
  }

  std::optional<Mat<long>> winv;
  if (spec.target)
    winv = mat_inverse(f, matgroup::weyl_lift(f, n, *spec.target));

  CountOutput out;
  out.report.q = f.p;
  out.points_complete = true;

  std::vector<Mat<long>> prefix(r + 1, mat_identity(f, n));
  std::vector<long> z(r, 0);

  std::function<void(int)> rec = [&](int k) {
    if (k == r) {
      const Mat<long>& m = prefix[r];
      bool member = true;
      if (winv) member = mat_is_upper_triangular(f, mat_mul(f, *winv, m));
      if (!member) return;
      ++out.report.raw_count;
      bool counted = true;
      if (class_constraint) {
        counted = matgroup::class_membership(f, spec.group, m, *class_constraint);
        if (counted) ++out.report.constrained_count;
      }
      if (counted && collect_points) {
        if (out.points.size() < collect_cap)
          out.points.push_back(z);
        else
          out.points_complete = false;
      }
      return;
    }
    for (long v = 0; v < f.p; ++v) {
      z[k] = v;
      prefix[k + 1] = mat_mul(f, prefix[k], matgroup::b_matrix(f, n, spec.word.letters[k], v));
      rec(k + 1);
    }
    z[k] = 0;
  };
  rec(0);
  if (!class_constraint) out.report.constrained_count = out.report.raw_count;

  // The full torus preserves the flag condition but not a monodromy-class
  // constraint (only the fixed subtorus does), so orbits are estimated on
  // unconstrained point sets only.
  if (estimate_orbits && out.points_complete && !class_constraint)
    out.report.orbit_estimate = count_torus_orbits(f, spec, out.points);

  out.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<Rat> polynomial_fit(const std::vector<std::pair<long, long long>>& samples) {
  // Lagrange interpolation, exact.
  size_t n = samples.size();
  std::vector<Rat> acc(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    // numerator polynomial prod_{j != i} (x - x_j), coefficients low-first
    std::vector<Rat> num{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(num.size() + 1, Rat(0));
      for (size_t k = 0; k < num.size(); ++k) {
        next[k] += num[k] * Rat(-samples[j].first);
        next[k + 1] += num[k];
      }
      num = std::move(next);
      denom *= Rat(samples[i].first - samples[j].first);
    }
    Rat scale = Rat(static_cast<long>(samples[i].second)) / denom;
    for (size_t k = 0; k < num.size(); ++k) {
      acc[k] += num[k] * scale;
      acc[k].canonicalize();
    }
  }
  return acc;
}

int poly_degree(const std::vector<Rat>& coeffs) {
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
    if (sgn(coeffs[d]) != 0) return d;
  return -1;
}

namespace {

nlohmann::json coords_to_json_q(const std::vector<std::vector<Rat>>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p) row.push_back(c.get_str());
    out.push_back(row);
  }
  return out;
}

nlohmann::json coords_to_json_fp(const std::vector<std::vector<long>>& pts) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pts) out.push_back(p);
  return out;
}

// First prime for which the class polynomial reduces (no denominator hits 0).
long good_reduction_prime(const ClassSpec& cls) {
  for (long p : {13L, 17L, 19L, 23L, 29L, 31L}) {
    bool ok = true;
    for (const Rat& c : cls.charpoly)
      if (mod_long(Int(c.get_den()), p) == 0) ok = false;
    if (ok) return p;
  }
  throw ConfigError("class polynomial has no small prime of good reduction");
}

template <class K>
long long stabilizer_via_partition(const matgroup::TorusFixed<K>& tw,
                                   const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) return 0;
  size_t orbit = blocks[0].size();
  for (const auto& b : blocks)
    if (std::find(b.begin(), b.end(), 0) != b.end()) orbit = b.size();
  return static_cast<long long>(tw.elements.size() / orbit);
}

}  // namespace

ModuliAnswer kloosterman_verify(const GroupSpec& group, const ClassSpec& cls,
                                std::vector<report::CheckRecord>& records) {
  if (group.n > 4) throw ConfigError("Kloosterman verifier supports n <= 4");
  RootSystem rs_a = rootdata::build_root_system('A', group.n - 1);
  WeylElement cox = rootdata::coxeter_element(rs_a);
  braid::BraidWord cox_braid = braid::kloosterman_braid(rs_a);

  ModuliAnswer ans;
  nlohmann::json base_inputs{{"group", matgroup::group_spec_to_json(group)},
                             {"class", matgroup::class_to_string(cls)},
                             {"braid", cox_braid.letters}};

  if (group.field.characteristic == 0) {
    QField q;
    steinberg::SteinbergSection s = steinberg::section(group, rs_a, cox);
    auto pts = steinberg::intersect_with_class_q(s, cls);
    ans.point_count_over_closure_surrogate = static_cast<long long>(pts.size());

    nlohmann::json point_matrix;
    if (!pts.empty())
      point_matrix = matgroup::matrix_to_json(q, steinberg::evaluate(q, s, pts.front()));
    records.push_back({"the cross-section meets the regular class in a unique point",
                       base_inputs,
                       nlohmann::json{{"points", coords_to_json_q(pts)},
                                      {"matrix", point_matrix},
                                      {"count", pts.size()}},
                       pts.size() == 1});

    auto tw = matgroup::torus_fixed_points(q, group, rs_a, cox);
    auto blocks = steinberg::tw_orbit_partition(q, s, pts, tw.elements);
    ans.torus_orbit_count = static_cast<long long>(blocks.size());
    ans.stabilizer_order = stabilizer_via_partition(tw, blocks);
    records.push_back({"the fixed torus acts transitively on the intersection",
                       base_inputs,
                       nlohmann::json{{"torus_order", tw.elements.size()},
                                      {"orbit_count", blocks.size()}},
                       blocks.size() == 1});

    // Cross-check through the braid-variety chart over a prime of good reduction.
    long p = good_reduction_prime(cls);
    FpField fp(p);
    GroupSpec modp = group;
    modp.field.characteristic = p;
    BraidVarietySpec bspec{modp, cox_braid, std::nullopt};
    CountOutput count = count_points(fp, bspec, cls, enumeration_budget_from_env());
    records.push_back(
        {"the chart points with monodromy in the class match the intersection",
         base_inputs,
         nlohmann::json{{"q", p}, {"constrained_count", count.report.constrained_count}},
         count.report.constrained_count == static_cast<long long>(pts.size())});
  } else {
    FpField fp(group.field.characteristic);
    steinberg::SteinbergSection s = steinberg::section(group, rs_a, cox);
    auto pts = steinberg::intersect_with_class_fp(fp, s, cls);
    ans.point_count_over_closure_surrogate = static_cast<long long>(pts.size());

    auto tw = matgroup::torus_fixed_points(fp, group, rs_a, cox);
    auto blocks = steinberg::tw_orbit_partition(fp, s, pts, tw.elements);
    ans.torus_orbit_count = static_cast<long long>(blocks.size());
    ans.stabilizer_order = stabilizer_via_partition(tw, blocks);
    nlohmann::json point_matrix;
    if (!pts.empty())
      point_matrix = matgroup::matrix_to_json(fp, steinberg::evaluate(fp, s, pts.front()));
    records.push_back({"the fixed torus acts transitively on the intersection",
                       base_inputs,
                       nlohmann::json{{"points", coords_to_json_fp(pts)},
                                      {"matrix", point_matrix},
                                      {"torus_order", tw.elements.size()},
                                      {"orbit_count", blocks.size()}},
                       !pts.empty() && blocks.size() == 1});

    BraidVarietySpec bspec{group, cox_braid, std::nullopt};
    CountOutput count = count_points(fp, bspec, cls, enumeration_budget_from_env());
    records.push_back(
        {"the chart points with monodromy in the class match the intersection",
         base_inputs,
         nlohmann::json{{"q", fp.p}, {"constrained_count", count.report.constrained_count},
                        {"intersection", pts.size()}},
         count.report.constrained_count == static_cast<long long>(pts.size())});
  }

  ans.rigid = ans.torus_orbit_count == 1;
  return ans;
}

ModuliAnswer airy_verify(const RootSystem& rs, const GroupSpec& group,
                         std::vector<report::CheckRecord>& records) {
  ModuliAnswer ans;
  size_t first_record = records.size();
  braid::BraidWord cox_braid = braid::kloosterman_braid(rs);
  braid::BraidWord delta = braid::positive_lift(rs, rootdata::longest_element(rs));
  braid::BraidWord beta_prime = braid::concat(cox_braid, delta);
  braid::BraidWord beta_nu = braid::airy_braid(rs);
  WeylElement w0 = rootdata::longest_element(rs);
  int l_w0 = rootdata::length(rs, w0);

  nlohmann::json base_inputs{{"type", std::string(1, rs.type_label)},
                             {"rank", rs.rank},
                             {"coxeter_number", rs.coxeter_number}};

  WeylElement dem = braid::demazure_product(rs, beta_prime);
  records.push_back({"the Demazure product of the reduced Airy braid is the longest element",
                     base_inputs,
                     nlohmann::json{{"dem_word", dem.word}, {"w0_word", w0.word}},
                     dem == w0});

  int dim = expected_dimension(rs, beta_prime);
  bool length_identity = beta_nu.letter_count() - 2 * l_w0 == rs.rank;
  records.push_back({"the braid variety dimension equals the rank",
                     base_inputs,
                     nlohmann::json{{"dimension", dim},
                                    {"length_beta_nu", beta_nu.letter_count()},
                                    {"length_w0", l_w0}},
                     dim == rs.rank && length_identity});

  int fixed = stabilizer_fixed_space(rs, beta_prime, w0);
  records.push_back({"the torus action has finite stabilizers (elliptic test)",
                     base_inputs, nlohmann::json{{"fixed_space_dim", fixed}}, fixed == 0});

  bool full_check = rs.type_label == 'A' && rs.rank <= 2 && group.family == Family::SL;
  ans.torus_orbit_count = 1;
  ans.stabilizer_order = 0;

  if (full_check && rs.rank == 1) {
    // Symbolic solve of X(sigma^2, s1): the flag condition is one polynomial.
    MPolyRing ring{2};
    Mat<MPoly> m = mat_identity(ring, 2);
    for (int k = 0; k < 2; ++k) {
      Mat<MPoly> b(2, 2, ring.zero());
      b.at(0, 0) = MPoly::variable(2, k);
      b.at(0, 1) = ring.from_long(-1);
      b.at(1, 0) = ring.one();
      m = mat_mul(ring, m, b);
    }
    // s^{-1} = [[0,1],[-1,0]]
    Mat<MPoly> sinv(2, 2, ring.zero());
    sinv.at(0, 1) = ring.one();
    sinv.at(1, 0) = ring.from_long(-1);
    Mat<MPoly> cond = mat_mul(ring, sinv, m);
    MPoly lower = cond.at(1, 0);
    MPoly expect = ring.one() - MPoly::variable(2, 0) * MPoly::variable(2, 1);
    bool eqn_ok = lower == expect || lower == -expect;
    records.push_back({"the flag condition solves to z1 z2 = 1",
                       base_inputs,
                       nlohmann::json{{"polynomial", mpoly_to_string(lower)}},
                       eqn_ok});

    auto weights = torus_weights(2, braid::BraidWord{{1, 1}});
    // On the SL2 torus diag(a, a^{-1}) the coordinate weights are a^{+-2}.
    long e1 = weights[0][0] - weights[0][1];
    long e2 = weights[1][0] - weights[1][1];
    bool transitive = e1 != 0;
    long long stab = (e1 != 0 && e2 != 0) ? std::gcd(std::abs(e1), std::abs(e2)) : 0;
    ans.stabilizer_order = stab;
    records.push_back({"the torus acts transitively with stabilizer of order 2",
                       base_inputs,
                       nlohmann::json{{"weight_z1", e1}, {"weight_z2", e2},
                                      {"stabilizer_order", stab}},
                       transitive && stab == 2});

    for (long p : {5L, 7L, 11L, 13L}) {
      FpField fp(p);
      GroupSpec modp = group;
      modp.field.characteristic = p;
      BraidVarietySpec bspec{modp, braid::BraidWord{{1, 1}},
                             rootdata::simple_reflection(rs, 1)};
      CountOutput c = count_points(fp, bspec, std::nullopt);
      records.push_back({"the point count over F_q equals q - 1",
                         nlohmann::json{{"q", p}},
                         nlohmann::json{{"count", c.report.raw_count}},
                         c.report.raw_count == p - 1});
      ans.point_count_over_closure_surrogate = c.report.raw_count;
    }
  } else if (full_check && rs.rank == 2) {
    std::vector<std::pair<long, long long>> samples;
    std::vector<std::vector<long>> last_points;
    long last_p = 0;
    for (long p : {5L, 7L, 11L, 13L}) {
      FpField fp(p);
      GroupSpec modp = group;
      modp.field.characteristic = p;
      BraidVarietySpec bspec{modp, beta_prime, w0};
      CountOutput c = count_points(fp, bspec, std::nullopt);
      samples.emplace_back(p, c.report.raw_count);
      last_points = c.points;
      last_p = p;
    }
    std::vector<Rat> fit = polynomial_fit(samples);
    bool monic_deg2 = poly_degree(fit) == 2 && cmp(fit[2], Rat(1)) == 0;
    nlohmann::json fit_json = nlohmann::json::array();
    for (const Rat& c : fit) fit_json.push_back(c.get_str());
    nlohmann::json counts_json = nlohmann::json::array();
    for (auto& [qv, cv] : samples) counts_json.push_back(nlohmann::json{{"q", qv}, {"count", cv}});
    records.push_back({"the point counts fit a monic polynomial of degree rank",
                       base_inputs,
                       nlohmann::json{{"counts", counts_json}, {"fit", fit_json}},
                       monic_deg2});
    ans.point_count_over_closure_surrogate =
        samples.empty() ? 0 : samples.back().second;

    // Pointwise stabilizer over the largest tested field.
    if (!last_points.empty()) {
      FpField fp(last_p);
      const auto& z0 = last_points.front();
      long long stab = 0;
      std::vector<long> t(3, 1);
      for (long a = 1; a < fp.p; ++a)
        for (long b = 1; b < fp.p; ++b) {
          t[0] = a;
          t[1] = b;
          t[2] = fp.inv(fp.mul(a, b));
          if (torus_action(fp, 3, beta_prime, t, z0) == z0) ++stab;
        }
      ans.stabilizer_order = stab;
    }
  }

  ans.rigid = true;
  for (size_t k = first_record; k < records.size(); ++k)
    if (!records[k].pass) ans.rigid = false;
  if (!ans.rigid) ans.torus_orbit_count = 0;
  return ans;
}

}  // namespace wildbraid::braidvariety
