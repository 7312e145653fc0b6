// Steinberg / He-Lusztig cross-sections in type A: the coordinate chart
// point(z) = x_{i1}(z1) s_{i1} ... x_{ir}(zr) s_{ir}, intersections with
// regular classes, the T^w conjugation action, and the delta: T^w -> K map
// for SL_n -> PGL_n.
#pragma once

#include "wildbraid/matgroup.hpp"
#include "wildbraid/poly.hpp"

#include <vector>

namespace wildbraid::steinberg {

struct SteinbergSection {
  matgroup::GroupSpec spec;
  rootdata::WeylElement w;
  std::vector<int> word;                            // reduced word fixing the chart order
  std::vector<std::vector<long>> coordinate_roots;  // one positive root per coordinate
};

SteinbergSection section(const matgroup::GroupSpec& spec, const rootdata::RootSystem& rs_a,
                         const rootdata::WeylElement& w);

template <class K>
Mat<typename K::Elem> evaluate(const K& f, const SteinbergSection& s,
                               const std::vector<typename K::Elem>& coords) {
  if (static_cast<int>(coords.size()) != static_cast<int>(s.word.size()))
    throw ConfigError("coordinate count does not match section dimension");
  Mat<typename K::Elem> m = mat_identity(f, s.spec.n);
  for (size_t k = 0; k < s.word.size(); ++k)
    m = mat_mul(f, m, matgroup::b_matrix(f, s.spec.n, s.word[k], coords[k]));
  return matgroup::canonicalize(f, s.spec, std::move(m));
}

// Symbolic section matrix over Q with one variable per coordinate.
Mat<MPoly> evaluate_symbolic(const SteinbergSection& s);

// Closed-form intersection over Q via triangular charpoly-coefficient matching.
// Requires the coefficient system to be triangular in the chart variables
// (true for Coxeter sections); throws UnsupportedInput otherwise.
std::vector<std::vector<Rat>> intersect_with_class_q(const SteinbergSection& s,
                                                     const matgroup::ClassSpec& cls);

// Exhaustive intersection over F_p (budget on the coordinate-space size).
std::vector<std::vector<long>> intersect_with_class_fp(const FpField& f,
                                                       const SteinbergSection& s,
                                                       const matgroup::ClassSpec& cls,
                                                       size_t budget = 10000000);

// Partition of section points (given by coordinates) into Ad(T^w)-orbits.
// Conjugates must land back on listed points; anything else is an error.
template <class K>
std::vector<std::vector<int>> tw_orbit_partition(
    const K& f, const SteinbergSection& s,
    const std::vector<std::vector<typename K::Elem>>& points,
    const std::vector<Mat<typename K::Elem>>& torus);

// The central isogeny SL_n -> PGL_n with kernel K = mu_n (scalar matrices).
struct IsogenyContext {
  matgroup::GroupSpec source;  // SL_n
  matgroup::GroupSpec target;  // PGL_n
  int kernel_order = 1;
};

// Over a prime field this insists on p = 1 mod n so the kernel is fully
// realized by scalars of the field.
IsogenyContext make_isogeny_context(int n, const matgroup::FieldSpec& field);

// delta(t) = Ad_{w^{-1}}(t~^{-1}) t~ for a determinant-1 lift t~ of t in SL_n.
// Returns the scalar; throws UnsupportedInput when no lift exists in the field.
template <class K>
typename K::Elem delta_map(const K& f, int n, const rootdata::WeylElement& w,
                           const Mat<typename K::Elem>& t_pgl);

template <class K>
typename K::Elem delta_map(const K& f, const IsogenyContext& ctx,
                           const rootdata::WeylElement& w,
                           const Mat<typename K::Elem>& t_pgl) {
  return delta_map(f, ctx.source.n, w, t_pgl);
}

// Scalar subgroup mu_n(F_p) (the kernel K of SL_n -> PGL_n).
std::vector<long> kernel_scalars(const FpField& f, int n);

// K(x1) = { k in mu_n | k x1 is SL_n-conjugate to x1 }.
std::vector<long> kernel_class_stabilizer(const FpField& f, int n, const Mat<long>& x1);

bool sl_conjugate(const FpField& f, const Mat<long>& a, const Mat<long>& b);

// Exhaustive He-Lusztig verification over F_q for SL_n, w = Coxeter:
// the Ad(U)-action on UwU is free and every orbit meets the section once.
struct HLCheckResult {
  bool free_action = false;
  bool unique_meeting = false;
  long orbit_count = 0;
  long section_point_count = 0;
  long ambient_count = 0;  // |UwU(F_q)|
};
HLCheckResult hl_exhaustive_check(const FpField& f, int n, const rootdata::RootSystem& rs_a);

}  // namespace wildbraid::steinberg
