// Affine braid varieties X(beta, w) in the chart
//   X(beta, w) = { z in A^r : w^{-1} b_{i1}(z1) ... b_{ir}(zr) in B },
// their monodromy product, torus action, finite-field point counts, and the
// Kloosterman / Airy rigidity verifiers built on top of the section module.
#pragma once

#include "wildbraid/braid.hpp"
#include "wildbraid/matgroup.hpp"
#include "wildbraid/report.hpp"

#include <optional>

namespace wildbraid::braidvariety {

struct BraidVarietySpec {
  matgroup::GroupSpec group;
  braid::BraidWord word;
  // Flag condition B_{r+1} = w B_1.  Empty target = monodromy gauge: no flag
  // condition, the full coordinate space with its monodromy map (the chart of
  // the braid stack used by the Kloosterman verifier).
  std::optional<rootdata::WeylElement> target;
};

struct CountReport {
  long q = 0;
  long long raw_count = 0;
  long long constrained_count = 0;
  long long orbit_estimate = -1;  // -1 = not computed
  double elapsed_seconds = 0;

  nlohmann::json to_json() const;
};

struct CountOutput {
  CountReport report;
  std::vector<std::vector<long>> points;  // counted points (class-constrained if any)
  bool points_complete = false;
};

struct ModuliAnswer {
  long long point_count_over_closure_surrogate = 0;
  long long torus_orbit_count = 0;
  long long stabilizer_order = 0;
  bool rigid = false;

  nlohmann::json to_json() const;
};

template <class K>
Mat<typename K::Elem> monodromy(const K& f, int n, const braid::BraidWord& word,
                                const std::vector<typename K::Elem>& z) {
  Mat<typename K::Elem> m = mat_identity(f, n);
  for (size_t k = 0; k < word.letters.size(); ++k)
    m = mat_mul(f, m, matgroup::b_matrix(f, n, word.letters[k], z[k]));
  return m;
}

template <class K>
bool membership(const K& f, const BraidVarietySpec& spec,
                const std::vector<typename K::Elem>& z) {
  if (static_cast<int>(z.size()) != spec.word.letter_count())
    throw ConfigError("coordinate count does not match braid length");
  Mat<typename K::Elem> m = monodromy(f, spec.group.n, spec.word, z);
  if (!spec.target) return true;
  Mat<typename K::Elem> wl = matgroup::weyl_lift(f, spec.group.n, *spec.target);
  return mat_is_upper_triangular(f, mat_mul(f, mat_inverse(f, wl), m));
}

int expected_dimension(const rootdata::RootSystem& rs, const braid::BraidWord& word);

// dim of the fixed space of pi(beta) w^{-1} on the Cartan algebra; 0 means the
// torus action on X(beta, w) is guaranteed to have finite stabilizers.
int stabilizer_fixed_space(const rootdata::RootSystem& rs, const braid::BraidWord& word,
                           const rootdata::WeylElement& target);

// Exponent vectors: coordinate z_k scales by prod_j t_j^(weights[k][j]) under
// the diagonal torus pushed through the product left to right.
std::vector<std::vector<long>> torus_weights(int n, const braid::BraidWord& word);

template <class K>
std::vector<typename K::Elem> torus_action(const K& f, int n, const braid::BraidWord& word,
                                           const std::vector<typename K::Elem>& torus_diag,
                                           const std::vector<typename K::Elem>& z) {
  (void)n;
  std::vector<typename K::Elem> cur = torus_diag;
  std::vector<typename K::Elem> out = z;
  for (size_t k = 0; k < word.letters.size(); ++k) {
    int i = word.letters[k];
    typename K::Elem alpha = f.div(cur[i - 1], cur[i]);
    out[k] = f.mul(alpha, z[k]);
    std::swap(cur[i - 1], cur[i]);
  }
  return out;
}

// Exhaustive point count over F_q; optionally constrained to monodromy in a
// class.  Budget counts coordinate-space size q^r.
CountOutput count_points(const FpField& f, const BraidVarietySpec& spec,
                         const std::optional<matgroup::ClassSpec>& class_constraint,
                         size_t budget = 100000000, bool collect_points = true,
                         size_t collect_cap = 200000, bool estimate_orbits = false);

size_t enumeration_budget_from_env(size_t fallback = 100000000);

// Exact rational interpolation through (q, count) samples; low-degree-first.
std::vector<Rat> polynomial_fit(const std::vector<std::pair<long, long long>>& samples);
int poly_degree(const std::vector<Rat>& coeffs);

// Rigidity verifiers.  Both append one record per checked claim.
ModuliAnswer kloosterman_verify(const matgroup::GroupSpec& group,
                                const matgroup::ClassSpec& cls,
                                std::vector<report::CheckRecord>& records);

ModuliAnswer airy_verify(const rootdata::RootSystem& rs, const matgroup::GroupSpec& group,
                         std::vector<report::CheckRecord>& records);

}  // namespace wildbraid::braidvariety
