#include "wildbraid/verify.hpp"

#include "wildbraid/braidvariety.hpp"
#include "wildbraid/steinberg.hpp"
#include "wildbraid/stokes.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace wildbraid::verify {

using braidvariety::BraidVarietySpec;
using matgroup::ClassSpec;
using matgroup::Family;
using matgroup::GroupSpec;
using report::CheckRecord;
using report::Report;
using rootdata::RootSystem;
using rootdata::WeylElement;

namespace {

// Every report embeds the fixed convention set.
nlohmann::json conventions_json() {
  return nlohmann::json{
      {"borel", "upper-triangular"},
      {"torus", "diagonal"},
      {"simple_reflection_lift", "[[0,-1],[1,0]] block"},
      {"b_matrix", "x_i(z) * s_i"},
      {"coxeter_word", "ascending index order"},
      {"base_direction", "midpoint of the first non-Stokes interval after angle 0"}};
}

// --- class sampling over Q -------------------------------------------------

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(static_cast<long>(k)));
  return d;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  auto deg = [](const std::vector<Rat>& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
      if (sgn(p[d]) != 0) return d;
    return -1;
  };
  int db = deg(b);
  if (db < 0) throw ConfigError("polynomial modulus is zero");
  while (deg(a) >= db) {
    int da = deg(a);
    Rat c = a[da] / b[db];
    for (int k = 0; k <= db; ++k) {
      a[da - db + k] -= c * b[k];
      a[da - db + k].canonicalize();
    }
  }
  a.resize(std::max(db, 1));
  return a;
}

bool poly_squarefree(const std::vector<Rat>& p) {
  // gcd(p, p') constant <=> squarefree
  std::vector<Rat> a = p, b = poly_derivative(p);
  auto deg = [](const std::vector<Rat>& x) {
    for (int d = static_cast<int>(x.size()) - 1; d >= 0; --d)
      if (sgn(x[d]) != 0) return d;
    return -1;
  };
  while (deg(b) > 0) {
    std::vector<Rat> r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return deg(b) == 0;  // nonzero constant remainder
}

ClassSpec random_rs_class_q(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-25, 25);
  while (true) {
    std::vector<Rat> p(n + 1, Rat(0));
    p[n] = 1;
    p[0] = (n % 2 == 0) ? Rat(1) : Rat(-1);
    for (int k = 1; k < n; ++k) p[k] = Rat(coeff(rng));
    if (!poly_squarefree(p)) continue;
    ClassSpec c;
    c.kind = ClassSpec::Kind::RegularByCharpoly;
    c.charpoly = p;
    return c;
  }
}

// (x-1)^n: the regular unipotent class.
ClassSpec unipotent_class(int n) {
  std::vector<Rat> p{Rat(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> q(p.size() + 1, Rat(0));
    for (size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j] * Rat(-1);
      q[j + 1] += p[j];
    }
    for (auto& c : q) c.canonicalize();
    p = std::move(q);
  }
  ClassSpec c;
  c.kind = ClassSpec::Kind::RegularByCharpoly;
  c.charpoly = p;
  return c;
}

// A regular class with a repeated eigenvalue but nontrivial Jordan structure.
ClassSpec mixed_regular_class(int n) {
  // n=2: (x+1)^2; n=3: (x+1)^2 (x-1); n=4: (x-1)^2 (x+1)^2
  auto mul_linear = [](std::vector<Rat> p, long root) {
    std::vector<Rat> q(p.size() + 1, Rat(0));
    for (size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j] * Rat(-root);
      q[j + 1] += p[j];
    }
    for (auto& c : q) c.canonicalize();
    return q;
  };
  std::vector<Rat> p{Rat(1)};
  if (n == 2) {
    p = mul_linear(mul_linear(p, -1), -1);
  } else if (n == 3) {
    p = mul_linear(mul_linear(mul_linear(p, -1), -1), 1);
  } else if (n == 4) {
    p = mul_linear(mul_linear(mul_linear(mul_linear(p, -1), -1), 1), 1);
  } else {
    throw ConfigError("mixed class defined for n in {2,3,4}");
  }
  ClassSpec c;
  c.kind = ClassSpec::Kind::RegularByCharpoly;
  c.charpoly = p;
  return c;
}

// Random regular semisimple class over F_p with det-1 lift (constant (-1)^n).
ClassSpec random_rs_class_fp(int n, const FpField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(0, f.p - 1);
  while (true) {
    std::vector<Rat> p(n + 1, Rat(0));
    p[n] = 1;
    p[0] = (n % 2 == 0) ? Rat(1) : Rat(-1);
    for (int k = 1; k < n; ++k) p[k] = Rat(coeff(rng));
    // squarefree mod p: companion matrix regular semisimple <=> gcd(f, f') unit.
    // Check over F_p via the resultant-free route: reuse the Q test after lifting
    // coefficients; a false negative only causes a resample.
    std::vector<long> red;
    for (const Rat& c : p) red.push_back(mod_long(Int(c.get_num()), f.p));
    // derivative and gcd over F_p
    std::vector<long> a = red, b;
    for (size_t k = 1; k < red.size(); ++k)
      b.push_back(f.mul(red[k], f.from_long(static_cast<long>(k))));
    auto degf = [](const std::vector<long>& x) {
      for (int d2 = static_cast<int>(x.size()) - 1; d2 >= 0; --d2)
        if (x[d2] != 0) return d2;
      return -1;
    };
    while (degf(b) > 0) {
      std::vector<long> r = a;
      int db = degf(b);
      while (degf(r) >= db) {
        int dr = degf(r);
        long c = f.div(r[dr], b[db]);
        for (int k2 = 0; k2 <= db; ++k2)
          r[dr - db + k2] = f.sub(r[dr - db + k2], f.mul(c, b[k2]));
      }
      a = b;
      b = r;
      b.resize(std::max(degf(b) + 1, 1));
    }
    if (degf(b) != 0) continue;  // not squarefree mod p
    ClassSpec c;
    c.kind = ClassSpec::Kind::RegularByCharpoly;
    c.charpoly = p;
    return c;
  }
}

nlohmann::json charpoly_json(const ClassSpec& c) {
  return matgroup::class_to_string(c);
}

}  // namespace

report::Report kloosterman_sweep_q(int n, int samples, const Options& opt) {
  Report rep;
  rep.config = {{"suite", "kloosterman_sweep_q"}, {"n", n}, {"samples", samples},
                {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(n));

  std::vector<ClassSpec> classes;
  std::set<std::vector<std::string>> seen;
  while (static_cast<int>(classes.size()) < samples) {
    ClassSpec c = random_rs_class_q(n, rng);
    std::vector<std::string> key;
    for (const Rat& x : c.charpoly) key.push_back(x.get_str());
    if (seen.insert(key).second) classes.push_back(std::move(c));
  }
  classes.push_back(unipotent_class(n));
  classes.push_back(mixed_regular_class(n));

  GroupSpec group{Family::SL, n, matgroup::FieldSpec{0}};
  for (const ClassSpec& c : classes) {
    std::vector<CheckRecord> records;
    braidvariety::ModuliAnswer ans = braidvariety::kloosterman_verify(group, c, records);
    for (auto& r : records) rep.checks.push_back(std::move(r));
    rep.checks.push_back({"the moduli answer is rigid",
                          nlohmann::json{{"class", charpoly_json(c)}, {"n", n}},
                          ans.to_json(), ans.rigid});
  }
  return rep;
}

report::Report kloosterman(const std::string& family, int n, const std::string& cls,
                           std::optional<long> q, const Options& opt) {
  Report rep;
  GroupSpec group{matgroup::family_from_name(family), n,
                  matgroup::FieldSpec{q.value_or(0)}};
  rep.config = {{"suite", "kloosterman"},
                {"group", matgroup::group_spec_to_json(group)},
                {"class", cls},
                {"seed", opt.seed},
                {"conventions", conventions_json()}};

  std::vector<ClassSpec> classes;
  if (!cls.empty()) {
    classes.push_back(matgroup::parse_class(cls, group));
  } else if (group.field.characteristic == 0) {
    std::mt19937_64 rng(opt.seed);
    for (int k = 0; k < 5; ++k) classes.push_back(random_rs_class_q(n, rng));
  } else {
    std::mt19937_64 rng(opt.seed);
    FpField f(group.field.characteristic);
    for (int k = 0; k < 5; ++k) classes.push_back(random_rs_class_fp(n, f, rng));
  }

  for (const ClassSpec& c : classes) {
    std::vector<CheckRecord> records;
    braidvariety::ModuliAnswer ans = braidvariety::kloosterman_verify(group, c, records);
    for (auto& r : records) rep.checks.push_back(std::move(r));
    rep.checks.push_back({"the moduli answer is rigid",
                          nlohmann::json{{"class", charpoly_json(c)}},
                          ans.to_json(), ans.rigid});
  }
  return rep;
}

report::Report tw_transitivity(int n, long q, int samples, const Options& opt) {
  Report rep;
  rep.config = {{"suite", "tw_transitivity"}, {"n", n}, {"q", q}, {"samples", samples},
                {"seed", opt.seed}};
  FpField f(q);
  std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(100 * n + q));
  GroupSpec pgl{Family::PGL, n, matgroup::FieldSpec{q}};
  GroupSpec sl{Family::SL, n, matgroup::FieldSpec{q}};
  RootSystem rs_a = rootdata::build_root_system('A', n - 1);
  WeylElement cox = rootdata::coxeter_element(rs_a);

  // Sampling with repetition: tiny fields can carry fewer distinct classes
  // than requested draws.
  std::vector<ClassSpec> classes;
  while (static_cast<int>(classes.size()) < samples)
    classes.push_back(random_rs_class_fp(n, f, rng));

  steinberg::SteinbergSection pgl_section = steinberg::section(pgl, rs_a, cox);
  steinberg::SteinbergSection sl_section = steinberg::section(sl, rs_a, cox);
  auto tw = matgroup::torus_fixed_points(f, pgl, rs_a, cox);
  std::vector<long> kernel = steinberg::kernel_scalars(f, n);

  for (const ClassSpec& c : classes) {
    auto pts = steinberg::intersect_with_class_fp(f, pgl_section, c);
    nlohmann::json inputs{{"class", charpoly_json(c)}, {"n", n}, {"q", q}};
    if (pts.empty()) {
      rep.checks.push_back({"the fixed torus acts transitively on the intersection",
                            inputs, nlohmann::json{{"points", 0}}, false});
      continue;
    }
    auto blocks = steinberg::tw_orbit_partition(f, pgl_section, pts, tw.elements);
    rep.checks.push_back({"the fixed torus acts transitively on the intersection",
                          inputs,
                          nlohmann::json{{"points", pts.size()},
                                         {"orbit_count", blocks.size()},
                                         {"torus_order", tw.elements.size()}},
                          blocks.size() == 1});

    Mat<long> x1 = steinberg::evaluate(f, sl_section, pts.front());
    auto kx1 = steinberg::kernel_class_stabilizer(f, n, x1);
    bool size_ok =
        pts.size() * kx1.size() == kernel.size();
    rep.checks.push_back({"the intersection size equals |K| / |K(x1)|",
                          inputs,
                          nlohmann::json{{"points", pts.size()},
                                         {"kernel_order", kernel.size()},
                                         {"stabilizer_order", kx1.size()}},
                          size_ok});
  }
  return rep;
}

report::Report delta_surjectivity(int n, long p) {
  Report rep;
  rep.config = {{"suite", "delta_surjectivity"}, {"n", n}, {"p", p}};
  steinberg::IsogenyContext ctx =
      steinberg::make_isogeny_context(n, matgroup::FieldSpec{p});
  FpField f(p);
  GroupSpec pgl = ctx.target;
  RootSystem rs_a = rootdata::build_root_system('A', n - 1);
  WeylElement cox = rootdata::coxeter_element(rs_a);

  auto tw = matgroup::torus_fixed_points(f, pgl, rs_a, cox);
  std::vector<long> kernel = steinberg::kernel_scalars(f, n);
  std::set<long> image;
  bool homomorphic = true;
  long skipped = 0;  // elements without a determinant-1 lift in the field
  std::vector<Mat<long>> liftable;
  std::vector<long> deltas;
  for (const auto& t : tw.elements) {
    try {
      long d = steinberg::delta_map(f, ctx, cox, t);
      image.insert(d);
      liftable.push_back(t);
      deltas.push_back(d);
    } catch (const UnsupportedInput&) {
      ++skipped;
    }
  }
  // homomorphism spot check on all liftable pairs
  for (size_t i = 0; i < liftable.size(); ++i)
    for (size_t j = 0; j < liftable.size(); ++j) {
      Mat<long> prod =
          matgroup::pgl_canonicalize(f, mat_mul(f, liftable[i], liftable[j]));
      long dp = steinberg::delta_map(f, ctx, cox, prod);
      if (dp != f.mul(deltas[i], deltas[j])) homomorphic = false;
    }

  std::set<long> kernel_set(kernel.begin(), kernel.end());
  rep.checks.push_back({"delta maps the fixed torus onto the kernel",
                        nlohmann::json{{"n", n}, {"p", p}},
                        nlohmann::json{{"torus_order", tw.elements.size()},
                                       {"kernel_order", kernel.size()},
                                       {"image_order", image.size()},
                                       {"lift_warnings", skipped}},
                        image == kernel_set});
  rep.checks.push_back({"delta is a homomorphism",
                        nlohmann::json{{"n", n}, {"p", p}},
                        nlohmann::json{{"pairs", liftable.size() * liftable.size()}},
                        homomorphic});
  return rep;
}

report::Report center_table() {
  Report rep;
  rep.config = {{"suite", "center_table"}};
  struct Row {
    char type;
    int rank;
  };
  // covers all ten table rows (both D parities included)
  std::vector<Row> rows{{'A', 1}, {'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'D', 5},
                        {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (const Row& row : rows) {
    RootSystem rs = rootdata::build_root_system(row.type, row.rank);
    rootdata::CenterData cd = rootdata::center_group(rs);
    bool divides = rootdata::exponent_divides_coxeter(rs);
    rep.checks.push_back({"the center exponent divides the Coxeter number",
                          nlohmann::json{{"type", std::string(1, row.type)},
                                         {"rank", row.rank}},
                          nlohmann::json{{"cyclic_orders", cd.cyclic_orders},
                                         {"exponent", cd.exponent},
                                         {"coxeter_number", rs.coxeter_number}},
                          divides});
  }
  return rep;
}

report::Report full_twist_check(char type, int rank, bool bfs_crosscheck) {
  Report rep;
  rep.config = {{"suite", "full_twist"}, {"type", std::string(1, type)}, {"rank", rank}};
  RootSystem rs = rootdata::build_root_system(type, rank);
  braid::BraidWord lhs = braid::power(braid::kloosterman_braid(rs), rs.coxeter_number);
  braid::BraidWord rhs = braid::full_twist(rs);
  bool equal = braid::braid_equal(rs, lhs, rhs);
  rep.checks.push_back({"the h-th power of the Coxeter lift is the full twist",
                        nlohmann::json{{"type", std::string(1, type)}, {"rank", rank}},
                        nlohmann::json{{"letters", lhs.letter_count()},
                                       {"delta_sq_letters", rhs.letter_count()}},
                        equal});
  if (bfs_crosscheck) {
    bool reach = braid::rewriting_reachable(rs, lhs, rhs);
    rep.checks.push_back({"bounded rewriting confirms the full-twist identity",
                          nlohmann::json{{"type", std::string(1, type)}, {"rank", rank}},
                          nlohmann::json{{"reachable", reach}}, reach});
  }
  return rep;
}

report::Report airy(char type, int rank) {
  Report rep;
  rep.config = {{"suite", "airy"}, {"type", std::string(1, type)}, {"rank", rank},
                {"conventions", conventions_json()}};
  RootSystem rs = rootdata::build_root_system(type, rank);
  GroupSpec group{Family::SL, rank + 1, matgroup::FieldSpec{0}};
  std::vector<CheckRecord> records;
  braidvariety::ModuliAnswer ans = braidvariety::airy_verify(rs, group, records);
  for (auto& r : records) rep.checks.push_back(std::move(r));
  rep.checks.push_back({"the moduli answer is rigid",
                        nlohmann::json{{"type", std::string(1, type)}, {"rank", rank}},
                        ans.to_json(), ans.rigid});
  return rep;
}

report::Report stokes_braid(char type, int rank, long d, long m) {
  Report rep;
  rep.config = {{"suite", "stokes_braid"}, {"type", std::string(1, type)}, {"rank", rank},
                {"slope", std::to_string(d) + "/" + std::to_string(m)},
                {"conventions", conventions_json()}};
  RootSystem rs = rootdata::build_root_system(type, rank);
  auto spec = stokes::build_irregular_class(rs, d, m, stokes::default_labels(rs));
  stokes::StokesDiagram diagram = stokes::compute_diagram(spec);
  rep.config["diagram"] = stokes::diagram_to_json(diagram);

  braid::BraidWord expected = braid::power(braid::kloosterman_braid(rs),
                                           static_cast<int>(d));
  bool cyclic = braid::cyclically_equivalent(rs, diagram.braid, expected);
  rep.checks.push_back({"the extracted braid is a cyclic shift of the d-th Coxeter power",
                        nlohmann::json{{"slope", std::to_string(d) + "/" + std::to_string(m)}},
                        nlohmann::json{{"braid", diagram.braid.letters},
                                       {"expected", expected.letters}},
                        cyclic});

  long expected_letters = d * rs.rank;
  rep.checks.push_back({"the letter count equals d times the rank",
                        nlohmann::json{{"d", d}, {"rank", rs.rank}},
                        nlohmann::json{{"letters", diagram.braid.letter_count()}},
                        diagram.braid.letter_count() == expected_letters});

  // base-direction independence (cyclic-shift invariance)
  bool shift_ok = true;
  int tried = 0;
  for (const auto& entry : diagram.stokes_directions) {
    if (tried >= 3) break;
    Rat alt = entry.angle + rat(1, 1000);
    bool is_stokes = false;
    for (const auto& e2 : diagram.stokes_directions)
      if (cmp(e2.angle, rat_mod(alt, Rat(2))) == 0) is_stokes = true;
    if (is_stokes) continue;
    braid::BraidWord other = stokes::braid_from_irregular_class(spec, alt);
    if (!braid::cyclically_equivalent(rs, other, diagram.braid)) shift_ok = false;
    ++tried;
  }
  rep.checks.push_back({"changing the base direction only shifts the braid cyclically",
                        nlohmann::json{{"bases_tried", tried}},
                        nlohmann::json{{"ok", shift_ok}}, shift_ok});
  return rep;
}

report::Report dimension_sweep(int samples, const Options& opt) {
  Report rep;
  rep.config = {{"suite", "dimension_sweep"}, {"samples", samples}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed);

  for (int s = 0; s < samples; ++s) {
    int rank = (s % 2 == 0) ? 1 : 2;
    RootSystem rs = rootdata::build_root_system('A', rank);
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> letter_dist(1, rank);
    braid::BraidWord word;
    int len = len_dist(rng);
    for (int k = 0; k < len; ++k) word.letters.push_back(letter_dist(rng));

    WeylElement dem = braid::demazure_product(rs, word);
    int expected = braidvariety::expected_dimension(rs, word);

    // A degree-d fit needs d+1 interpolation points; six letters can reach
    // dimension five, so extend the pinned prime list when necessary.
    std::vector<long> qs{3, 5, 7, 11, 13};
    for (long extra : {17L, 19L}) {
      if (static_cast<int>(qs.size()) >= expected + 1) break;
      qs.push_back(extra);
    }

    std::vector<std::pair<long, long long>> sample_counts;
    for (long q : qs) {
      FpField f(q);
      GroupSpec group{Family::SL, rank + 1, matgroup::FieldSpec{q}};
      BraidVarietySpec spec{group, word, dem};
      auto out = braidvariety::count_points(f, spec, std::nullopt,
                                            braidvariety::enumeration_budget_from_env(),
                                            false);
      sample_counts.emplace_back(q, out.report.raw_count);
    }
    std::vector<Rat> fit = braidvariety::polynomial_fit(sample_counts);
    int degree = braidvariety::poly_degree(fit);
    nlohmann::json counts = nlohmann::json::array();
    for (auto& [qv, cv] : sample_counts)
      counts.push_back(nlohmann::json{{"q", qv}, {"count", cv}});
    rep.checks.push_back({"the point-count degree equals letters minus Demazure length",
                          nlohmann::json{{"letters", word.letters}, {"rank", rank}},
                          nlohmann::json{{"expected_dimension", expected},
                                         {"fit_degree", degree},
                                         {"counts", counts}},
                          degree == expected});
  }
  return rep;
}

report::Report finite_stabilizers(int samples, const Options& opt) {
  Report rep;
  rep.config = {{"suite", "finite_stabilizers"}, {"samples", samples}, {"seed", opt.seed}};
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  FpField f(11);

  int produced = 0;
  int attempts = 0;
  while (produced < samples && attempts < 200) {
    ++attempts;
    int rank = (produced % 2 == 0) ? 1 : 2;
    int n = rank + 1;
    RootSystem rs = rootdata::build_root_system('A', rank);
    std::uniform_int_distribution<int> len_dist(2, 6);
    std::uniform_int_distribution<int> letter_dist(1, rank);
    braid::BraidWord word;
    int len = len_dist(rng);
    for (int k = 0; k < len; ++k) word.letters.push_back(letter_dist(rng));

    // pick an elliptic v and set w = v^{-1} pi(beta)
    WeylElement cox = rootdata::coxeter_element(rs);
    WeylElement v = cox;
    if (rank == 2 && (rng() & 1)) v = rootdata::multiply(rs, cox, cox);
    WeylElement image = rootdata::from_word(rs, word.letters);
    WeylElement w = rootdata::multiply(rs, rootdata::inverse(rs, v), image);
    if (braidvariety::stabilizer_fixed_space(rs, word, w) != 0) continue;

    GroupSpec group{Family::SL, n, matgroup::FieldSpec{11}};
    BraidVarietySpec spec{group, word, w};
    auto out = braidvariety::count_points(f, spec, std::nullopt,
                                          braidvariety::enumeration_budget_from_env(),
                                          true, 5000);
    if (out.points.empty()) continue;
    ++produced;

    // permutation of v for the T^v membership test
    std::vector<int> perm = matgroup::permutation_from_weyl(rs, v);
    bool all_in_tv = true;
    long long max_stab = 0;
    int points_checked = 0;
    for (size_t pi = 0; pi < out.points.size() && points_checked < 5; ++pi, ++points_checked) {
      const auto& z = out.points[pi];
      // enumerate T(F_11) for SL_n: (q-1)^(n-1) tuples
      std::vector<long> t(n, 1);
      std::vector<long> idx(n - 1, 1);
      long long stab = 0;
      while (true) {
        for (int k = 0; k + 1 < n; ++k) t[k] = idx[k];
        long prod = 1;
        for (int k = 0; k + 1 < n; ++k) prod = f.mul(prod, idx[k]);
        t[n - 1] = f.inv(prod);
        if (braidvariety::torus_action(f, n, word, t, z) == z) {
          ++stab;
          for (int j = 0; j < n; ++j)
            if (t[perm[j]] != t[j]) all_in_tv = false;
        }
        int c = 0;
        while (c < n - 1 && idx[c] == f.p - 1) idx[c++] = 1;
        if (c == n - 1) break;
        ++idx[c];
      }
      max_stab = std::max(max_stab, stab);
    }
    rep.checks.push_back(
        {"point stabilizers are torsion inside the twisted fixed torus",
         nlohmann::json{{"letters", word.letters}, {"target", w.word}, {"rank", rank}},
         nlohmann::json{{"points_checked", points_checked},
                        {"max_stabilizer_order", max_stab},
                        {"inside_fixed_torus", all_in_tv}},
         all_in_tv});
  }
  if (produced < samples)
    rep.checks.push_back({"sampled enough elliptic pairs with rational points",
                          nlohmann::json{{"requested", samples}},
                          nlohmann::json{{"produced", produced}}, false});
  return rep;
}

report::Report he_lusztig(int n, long q) {
  Report rep;
  rep.config = {{"suite", "he_lusztig"}, {"n", n}, {"q", q}};
  FpField f(q);
  RootSystem rs_a = rootdata::build_root_system('A', n - 1);
  steinberg::HLCheckResult res = steinberg::hl_exhaustive_check(f, n, rs_a);
  nlohmann::json outputs{{"ambient", res.ambient_count},
                         {"orbits", res.orbit_count},
                         {"section_points", res.section_point_count}};
  rep.checks.push_back({"conjugation by the unipotent radical acts freely",
                        nlohmann::json{{"n", n}, {"q", q}}, outputs, res.free_action});
  rep.checks.push_back({"every unipotent-conjugation orbit meets the section once",
                        nlohmann::json{{"n", n}, {"q", q}}, outputs, res.unique_meeting});
  return rep;
}

report::Report count_command(const std::string& family, int n, long q,
                             const std::vector<int>& letters, const std::string& target_mode,
                             const std::string& cls) {
  Report rep;
  GroupSpec group{matgroup::family_from_name(family), n, matgroup::FieldSpec{q}};
  RootSystem rs_a = rootdata::build_root_system('A', n - 1);
  braid::BraidWord word{letters};

  std::optional<WeylElement> target;
  if (target_mode == "auto") {
    target = braid::demazure_product(rs_a, word);
  } else if (target_mode == "none") {
    target = std::nullopt;
  } else {
    std::vector<int> tw;
    std::string cur;
    for (char c : target_mode + ",") {
      if (c == ',') {
        if (!cur.empty()) tw.push_back(std::stoi(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    target = rootdata::from_word(rs_a, tw);
  }

  std::optional<ClassSpec> constraint;
  if (!cls.empty()) constraint = matgroup::parse_class(cls, group);

  FpField f(q);
  BraidVarietySpec spec{group, word, target};
  auto out = braidvariety::count_points(f, spec, constraint,
                                        braidvariety::enumeration_budget_from_env(),
                                        true, 200000, true);
  rep.config = {{"suite", "count"},
                {"group", matgroup::group_spec_to_json(group)},
                {"letters", letters},
                {"target", target ? nlohmann::json(target->word) : nlohmann::json()},
                {"class", cls},
                {"expected_dimension", braidvariety::expected_dimension(rs_a, word)}};
  rep.timings = {{"elapsed_seconds", out.report.elapsed_seconds}};
  rep.checks.push_back({"point count computed within budget",
                        rep.config, out.report.to_json(), true});
  return rep;
}

}  // namespace wildbraid::verify
