#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wildbraid/braidvariety.hpp"
#include "wildbraid/steinberg.hpp"

#include <algorithm>
#include <random>

using namespace wildbraid;
using namespace wildbraid::braidvariety;
using braid::BraidWord;
using matgroup::ClassSpec;
using matgroup::Family;
using matgroup::FieldSpec;
using matgroup::GroupSpec;
using rootdata::RootSystem;
using rootdata::WeylElement;

namespace {

GroupSpec sl(int n, long p = 0) { return GroupSpec{Family::SL, n, FieldSpec{p}}; }

}  // namespace

TEST_CASE("membership") {
  QField q;
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  WeylElement s1 = rootdata::simple_reflection(rs1, 1);

  BraidVarietySpec one{sl(2), BraidWord{{1}}, s1};
  CHECK(membership(q, one, {Rat(0)}));
  CHECK_FALSE(membership(q, one, {Rat(1)}));

  BraidVarietySpec two{sl(2), BraidWord{{1, 1}}, s1};
  CHECK(membership(q, two, {Rat(2), Rat(1, 2)}));
  CHECK_FALSE(membership(q, two, {Rat(2), Rat(3)}));

  BraidVarietySpec empty{sl(2), BraidWord{}, rootdata::identity_element(rs1)};
  CHECK(membership(q, empty, {}));
}

TEST_CASE("monodromy products") {
  QField q;
  Mat<Rat> m = monodromy(q, 2, BraidWord{{1}}, {Rat(3)});
  CHECK(cmp(m.at(0, 0), Rat(3)) == 0);
  CHECK(cmp(m.at(0, 1), Rat(-1)) == 0);

  Mat<Rat> m2 = monodromy(q, 2, BraidWord{{1, 1}}, {Rat(1), Rat(1)});
  CHECK(cmp(m2.at(0, 0), Rat(0)) == 0);
  CHECK(cmp(m2.at(0, 1), Rat(-1)) == 0);
  CHECK(cmp(m2.at(1, 0), Rat(1)) == 0);
  CHECK(cmp(m2.at(1, 1), Rat(-1)) == 0);

  Mat<Rat> m0 = monodromy(q, 2, BraidWord{}, {});
  CHECK(mat_eq(q, m0, mat_identity(q, 2)));
}

TEST_CASE("expected dimension") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  CHECK(expected_dimension(rs1, BraidWord{{1, 1}}) == 1);

  RootSystem rs2 = rootdata::build_root_system('A', 2);
  BraidWord beta_prime = braid::concat(braid::kloosterman_braid(rs2),
                                       braid::positive_lift(rs2, rootdata::longest_element(rs2)));
  CHECK(expected_dimension(rs2, beta_prime) == 2);

  for (const auto& w : rootdata::enumerate_weyl_group(rs2))
    CHECK(expected_dimension(rs2, braid::positive_lift(rs2, w)) == 0);
}

TEST_CASE("count points") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  WeylElement s1 = rootdata::simple_reflection(rs1, 1);
  FpField f7(7);

  BraidVarietySpec two{sl(2, 7), BraidWord{{1, 1}}, s1};
  CHECK(count_points(f7, two, std::nullopt).report.raw_count == 6);

  BraidVarietySpec one{sl(2, 7), BraidWord{{1}}, s1};
  CHECK(count_points(f7, one, std::nullopt).report.raw_count == 1);

  GroupSpec g = sl(2, 7);
  ClassSpec cls = matgroup::parse_class("x^2-3x+1", g);
  BraidVarietySpec klo{g, BraidWord{{1}}, std::nullopt};
  auto out = count_points(f7, klo, cls);
  CHECK(out.report.raw_count == 7);
  CHECK(out.report.constrained_count == 1);
  CHECK(out.points.size() == 1);
  CHECK(out.points[0][0] == 3);

  // orbit estimates apply to unconstrained sets only
  auto constrained =
      count_points(f7, klo, cls, 100000000, true, 200000, true);
  CHECK(constrained.report.orbit_estimate == -1);
  BraidVarietySpec two7{g, BraidWord{{1, 1}}, rootdata::simple_reflection(rs1, 1)};
  auto est = count_points(f7, two7, std::nullopt, 100000000, true, 200000, true);
  CHECK(est.report.orbit_estimate == 2);  // squares and non-squares in F_7*
}

TEST_CASE("budget enforcement") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  FpField f13(13);
  BraidVarietySpec big{sl(2, 13), BraidWord{{1, 1, 1, 1, 1, 1}},
                       rootdata::simple_reflection(rs1, 1)};
  CHECK_THROWS_AS(count_points(f13, big, std::nullopt, 1000), ResourceError);
}

TEST_CASE("torus action") {
  FpField f7(7);
  // t = diag(2, 2^{-1}): z1 -> 4 z1, z2 -> 4^{-1} z2
  std::vector<long> t{2, f7.inv(2)};
  auto moved = torus_action(f7, 2, BraidWord{{1, 1}}, t, {3, 5});
  CHECK(moved[0] == f7.mul(4, 3));
  CHECK(moved[1] == f7.mul(f7.inv(4), 5));

  // membership is invariant under the torus action
  std::mt19937_64 rng(31);
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  for (long p : {5L, 7L, 11L}) {
    FpField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      BraidWord word;
      int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k) word.letters.push_back(1 + static_cast<int>(rng() % 2));
      WeylElement target = braid::demazure_product(rs2, word);
      BraidVarietySpec spec{sl(3, p), word, target};
      std::vector<long> z;
      for (int k = 0; k < len; ++k) z.push_back(static_cast<long>(rng() % p));
      std::vector<long> torus{1 + static_cast<long>(rng() % (p - 1)),
                              1 + static_cast<long>(rng() % (p - 1)), 0};
      torus[2] = f.inv(f.mul(torus[0], torus[1]));
      CHECK(membership(f, spec, z) ==
            membership(f, spec, torus_action(f, 3, word, torus, z)));
    }
  }
}

TEST_CASE("stabilizer fixed space") {
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  BraidWord beta_prime = braid::concat(braid::kloosterman_braid(rs2),
                                       braid::positive_lift(rs2, rootdata::longest_element(rs2)));
  CHECK(stabilizer_fixed_space(rs2, beta_prime, rootdata::longest_element(rs2)) == 0);
  CHECK(stabilizer_fixed_space(rs2, BraidWord{{1}}, rootdata::identity_element(rs2)) == 1);
}

TEST_CASE("counts are braid invariants") {
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  for (long p : {3L, 5L, 7L}) {
    FpField f(p);
    BraidWord a{{1, 2, 1}}, b{{2, 1, 2}};
    WeylElement w0 = rootdata::longest_element(rs2);
    BraidVarietySpec sa{sl(3, p), a, w0}, sb{sl(3, p), b, w0};
    CHECK(count_points(f, sa, std::nullopt).report.raw_count ==
          count_points(f, sb, std::nullopt).report.raw_count);
  }
}

TEST_CASE("positive lifts give one-point varieties") {
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  for (long p : {3L, 5L}) {
    FpField f(p);
    for (const auto& w : rootdata::enumerate_weyl_group(rs2)) {
      BraidVarietySpec spec{sl(3, p), braid::positive_lift(rs2, w), w};
      CHECK(count_points(f, spec, std::nullopt).report.raw_count == 1);
    }
  }
}

TEST_CASE("kloosterman coherence: the chart matches the section pointwise") {
  for (int n : {2, 3}) {
    FpField f7(7);
    RootSystem rs = rootdata::build_root_system('A', n - 1);
    GroupSpec g = sl(n, 7);
    ClassSpec cls = matgroup::parse_class(n == 2 ? "x^2-3x+1" : "x^3-2x^2+2x-1", g);
    BraidVarietySpec spec{g, braid::kloosterman_braid(rs), std::nullopt};
    auto chart = count_points(f7, spec, cls);

    steinberg::SteinbergSection s =
        steinberg::section(g, rs, rootdata::coxeter_element(rs));
    auto section_pts = steinberg::intersect_with_class_fp(f7, s, cls);

    auto sorted = [](std::vector<std::vector<long>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(chart.points) == sorted(section_pts));
  }
}

TEST_CASE("polynomial fit") {
  std::vector<std::pair<long, long long>> samples{{3, 4}, {5, 16}, {7, 36}, {11, 100}};
  std::vector<Rat> fit = polynomial_fit(samples);  // (q-1)^2
  CHECK(poly_degree(fit) == 2);
  CHECK(cmp(fit[2], Rat(1)) == 0);
  CHECK(cmp(fit[1], Rat(-2)) == 0);
  CHECK(cmp(fit[0], Rat(1)) == 0);
}

TEST_CASE("kloosterman verifier end to end") {
  std::vector<report::CheckRecord> records;
  GroupSpec g = sl(2);
  ModuliAnswer ans =
      kloosterman_verify(g, matgroup::parse_class("x^2-3x+1", g), records);
  CHECK(ans.rigid);
  CHECK(ans.point_count_over_closure_surrogate == 1);
  CHECK(ans.stabilizer_order == 2);
  for (const auto& r : records) CHECK(r.pass);

  // SL3 with a mixed-coefficient class
  records.clear();
  GroupSpec g3 = sl(3);
  ModuliAnswer a3 =
      kloosterman_verify(g3, matgroup::parse_class("x^3-2x^2+2x-1", g3), records);
  CHECK(a3.rigid);
  CHECK(a3.point_count_over_closure_surrogate == 1);
  for (const auto& r : records) CHECK(r.pass);

  // PGL2 over F13 with the diag(2, 2^{-1}) class
  records.clear();
  GroupSpec pgl{Family::PGL, 2, FieldSpec{13}};
  ModuliAnswer p = kloosterman_verify(pgl, matgroup::parse_class("x^2-9x+1", pgl), records);
  CHECK(p.rigid);
  CHECK(p.point_count_over_closure_surrogate == 2);
  CHECK(p.torus_orbit_count == 1);
  for (const auto& r : records) CHECK(r.pass);
}

TEST_CASE("airy verifier end to end") {
  for (auto [t, rank] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}}) {
    std::vector<report::CheckRecord> records;
    RootSystem rs = rootdata::build_root_system(t, rank);
    ModuliAnswer ans = airy_verify(rs, sl(rank + 1), records);
    CAPTURE(t);
    CHECK(ans.rigid);
    for (const auto& r : records) CHECK(r.pass);
  }
}
