#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wildbraid/steinberg.hpp"

#include <random>
#include <set>

using namespace wildbraid;
using namespace wildbraid::steinberg;
using matgroup::ClassSpec;
using matgroup::Family;
using matgroup::FieldSpec;
using matgroup::GroupSpec;
using rootdata::RootSystem;
using rootdata::WeylElement;

TEST_CASE("section charts") {
  QField q;
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  GroupSpec sl2{Family::SL, 2, FieldSpec{0}};
  SteinbergSection s = section(sl2, rs1, rootdata::coxeter_element(rs1));
  CHECK(s.coordinate_roots.size() == 1);
  Mat<Rat> pt = evaluate(q, s, {Rat(5)});
  CHECK(cmp(pt.at(0, 0), Rat(5)) == 0);
  CHECK(cmp(pt.at(0, 1), Rat(-1)) == 0);
  CHECK(cmp(pt.at(1, 0), Rat(1)) == 0);
  CHECK(cmp(pt.at(1, 1), Rat(0)) == 0);

  RootSystem rs2 = rootdata::build_root_system('A', 2);
  GroupSpec sl3{Family::SL, 3, FieldSpec{0}};
  CHECK(section(sl3, rs2, rootdata::coxeter_element(rs2)).coordinate_roots.size() == 2);
  CHECK(section(sl3, rs2, rootdata::longest_element(rs2)).coordinate_roots.size() == 3);
}

TEST_CASE("section points lie in Uw and wU^-") {
  FpField f(7);
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  GroupSpec sl3{Family::SL, 3, FieldSpec{7}};
  std::mt19937_64 rng(2);
  for (const WeylElement& w :
       {rootdata::coxeter_element(rs2), rootdata::longest_element(rs2),
        rootdata::simple_reflection(rs2, 2)}) {
    SteinbergSection s = section(sl3, rs2, w);
    Mat<long> wl = matgroup::weyl_lift(f, 3, w);
    Mat<long> wl_inv = mat_inverse(f, wl);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long> z;
      for (size_t k = 0; k < s.word.size(); ++k) z.push_back(static_cast<long>(rng() % 7));
      Mat<long> pt = evaluate(f, s, z);
      CHECK(mat_is_unipotent_upper(f, mat_mul(f, pt, wl_inv)));
      CHECK(mat_is_unipotent_lower(f, mat_mul(f, wl_inv, pt)));
    }
  }
}

TEST_CASE("closed-form intersection over Q") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  GroupSpec sl2{Family::SL, 2, FieldSpec{0}};
  SteinbergSection s2 = section(sl2, rs1, rootdata::coxeter_element(rs1));

  auto pts = intersect_with_class_q(s2, matgroup::parse_class("x^2-3x+1", sl2));
  REQUIRE(pts.size() == 1);
  CHECK(cmp(pts[0][0], Rat(3)) == 0);

  pts = intersect_with_class_q(s2, matgroup::parse_class("x^2-2x+1", sl2));
  REQUIRE(pts.size() == 1);
  CHECK(cmp(pts[0][0], Rat(2)) == 0);

  RootSystem rs2 = rootdata::build_root_system('A', 2);
  GroupSpec sl3{Family::SL, 3, FieldSpec{0}};
  SteinbergSection s3 = section(sl3, rs2, rootdata::coxeter_element(rs2));
  auto pts3 = intersect_with_class_q(s3, matgroup::parse_class("x^3-1", sl3));
  CHECK(pts3.size() == 1);

  // sampled uniqueness for SL4
  GroupSpec sl4{Family::SL, 4, FieldSpec{0}};
  RootSystem rs3 = rootdata::build_root_system('A', 3);
  SteinbergSection s4 = section(sl4, rs3, rootdata::coxeter_element(rs3));
  CHECK(intersect_with_class_q(s4, matgroup::parse_class("x^4-2x^3+3x-x^2+1", sl4)).size() == 1);
}

TEST_CASE("finite-field intersection and the fixed-torus orbits (PGL2/F13)") {
  FpField f(13);
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  GroupSpec pgl2{Family::PGL, 2, FieldSpec{13}};
  GroupSpec sl2{Family::SL, 2, FieldSpec{13}};
  WeylElement cox = rootdata::coxeter_element(rs1);
  SteinbergSection s = section(pgl2, rs1, cox);
  SteinbergSection s_sl = section(sl2, rs1, cox);

  // class of diag(2, 2^{-1}) mod scalars: trace 9, det 1 lift
  ClassSpec c2 = matgroup::parse_class("x^2-9x+1", pgl2);
  auto pts = intersect_with_class_fp(f, s, c2);
  REQUIRE(pts.size() == 2);
  std::set<long> zs{pts[0][0], pts[1][0]};
  CHECK(zs == std::set<long>{4, 9});

  auto tw = matgroup::torus_fixed_points(f, pgl2, rs1, cox);
  auto blocks = tw_orbit_partition(f, s, pts, tw.elements);
  CHECK(blocks.size() == 1);

  // |C cap Sigma| = |K| / |K(x1)|
  Mat<long> x1 = evaluate(f, s_sl, pts.front());
  CHECK(kernel_scalars(f, 2).size() == 2);
  CHECK(kernel_class_stabilizer(f, 2, x1).size() == 1);

  // lambda = 5: lambda^2 = -1, the two lifted classes coincide
  ClassSpec c5 = matgroup::parse_class("x^2+1", pgl2);
  auto pts5 = intersect_with_class_fp(f, s, c5);
  REQUIRE(pts5.size() == 1);
  CHECK(pts5[0][0] == 0);
  Mat<long> x15 = evaluate(f, s_sl, pts5.front());
  CHECK(kernel_class_stabilizer(f, 2, x15).size() == 2);
  CHECK(tw_orbit_partition(f, s, pts5, tw.elements).size() == 1);
}

TEST_CASE("delta map") {
  FpField f(13);
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  WeylElement cox = rootdata::coxeter_element(rs1);

  Mat<long> ident = mat_identity(f, 2);
  CHECK(delta_map(f, 2, cox, ident) == 1);

  Mat<long> t(2, 2, 0);
  t.at(0, 0) = 1;
  t.at(1, 1) = 12;  // diag(1, -1)
  CHECK(delta_map(f, 2, cox, t) == 12);  // the nontrivial element of K = {+-1}

  // PGL3 over F_7: an order-3 fixed torus element maps to a generator of mu_3
  FpField f7(7);
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  GroupSpec pgl3{Family::PGL, 3, FieldSpec{7}};
  WeylElement cox3 = rootdata::coxeter_element(rs2);
  auto tw = matgroup::torus_fixed_points(f7, pgl3, rs2, cox3);
  std::set<long> image;
  for (const auto& el : tw.elements) image.insert(delta_map(f7, 3, cox3, el));
  std::vector<long> mu3_list = kernel_scalars(f7, 3);
  std::set<long> mu3(mu3_list.begin(), mu3_list.end());
  CHECK(image == mu3);

  // homomorphism property on the computed fixed torus
  std::vector<long> deltas;
  for (const auto& el : tw.elements) deltas.push_back(delta_map(f7, 3, cox3, el));
  for (size_t i = 0; i < tw.elements.size(); ++i)
    for (size_t j = 0; j < tw.elements.size(); ++j) {
      Mat<long> prod =
          matgroup::pgl_canonicalize(f7, mat_mul(f7, tw.elements[i], tw.elements[j]));
      CHECK(delta_map(f7, 3, cox3, prod) == f7.mul(deltas[i], deltas[j]));
    }
}

TEST_CASE("isogeny context") {
  auto ctx = make_isogeny_context(3, matgroup::FieldSpec{7});
  CHECK(ctx.kernel_order == 3);
  CHECK(ctx.source.family == Family::SL);
  CHECK(ctx.target.family == Family::PGL);
  CHECK_THROWS_AS(make_isogeny_context(3, matgroup::FieldSpec{5}), ConfigError);

  FpField f(13);
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  rootdata::WeylElement cox = rootdata::coxeter_element(rs1);
  Mat<long> t(2, 2, 0);
  t.at(0, 0) = 1;
  t.at(1, 1) = 12;
  auto ctx2 = make_isogeny_context(2, matgroup::FieldSpec{13});
  CHECK(delta_map(f, ctx2, cox, t) == delta_map(f, 2, cox, t));
}

TEST_CASE("delta over Q needs the roots of unity") {
  QField q;
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  rootdata::WeylElement cox = rootdata::coxeter_element(rs1);
  CHECK(cmp(delta_map(q, 2, cox, mat_identity(q, 2)), Rat(1)) == 0);

  Mat<Rat> t(2, 2, Rat(0));
  t.at(0, 0) = 1;
  t.at(1, 1) = -1;  // det -1 has no rational square root
  CHECK_THROWS_AS(delta_map(q, 2, cox, t), UnsupportedInput);
}

TEST_CASE("sl conjugacy search") {
  FpField f(13);
  // companion matrices with equal charpoly are SL-conjugate
  Mat<long> a(2, 2, 0);
  a.at(0, 1) = 12;
  a.at(1, 0) = 1;
  a.at(1, 1) = 9;  // b(9) transposed-ish; just a regular matrix
  Mat<long> b = a;
  CHECK(sl_conjugate(f, a, b));

  Mat<long> c = mat_scale(f, a, 12);  // -a has different charpoly here
  CHECK_FALSE(sl_conjugate(f, a, c));
}

TEST_CASE("intersection error paths") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  GroupSpec sl2{Family::SL, 2, FieldSpec{0}};
  SteinbergSection s = section(sl2, rs1, rootdata::coxeter_element(rs1));

  // explicit representative that is not regular is rejected with a diagnostic
  ClassSpec bad;
  bad.kind = ClassSpec::Kind::ExplicitRepresentative;
  bad.representative = mat_identity(QField{}, 2);
  CHECK_THROWS_AS(intersect_with_class_q(s, bad), ConfigError);

  FpField f13(13);
  GroupSpec sl2p{Family::SL, 2, FieldSpec{13}};
  SteinbergSection sp = section(sl2p, rs1, rootdata::coxeter_element(rs1));
  CHECK_THROWS_AS(intersect_with_class_fp(f13, sp, bad), ConfigError);

  // enumeration budget is enforced
  ClassSpec fine = matgroup::parse_class("x^2-3x+1", sl2p);
  CHECK_THROWS_AS(intersect_with_class_fp(f13, sp, fine, 5), ResourceError);
}

TEST_CASE("He-Lusztig exhaustive checks at small q") {
  RootSystem rs1 = rootdata::build_root_system('A', 1);
  RootSystem rs2 = rootdata::build_root_system('A', 2);
  for (long q : {3L, 5L, 7L}) {
    FpField f(q);
    HLCheckResult r = hl_exhaustive_check(f, 2, rs1);
    CHECK(r.free_action);
    CHECK(r.unique_meeting);
    CHECK(r.section_point_count == q);  // q^l(w), l = 1
    CHECK(r.orbit_count == q);
    CHECK(r.ambient_count == q * q);    // |U| q^l

    HLCheckResult r3 = hl_exhaustive_check(f, 3, rs2);
    CHECK(r3.free_action);
    CHECK(r3.unique_meeting);
    CHECK(r3.section_point_count == q * q);
    CHECK(r3.orbit_count == q * q);
    CHECK(r3.ambient_count == q * q * q * q * q);
  }
}
