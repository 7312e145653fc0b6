// Root systems and Weyl groups for the simple types A-G: Cartan data, the
// faithful action on roots, lengths, Coxeter elements, ellipticity, and the
// centers / Coxeter numbers of the simply connected groups.
#pragma once

#include "wildbraid/numeric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wildbraid::rootdata {

// Positive roots are indexed 0..N-1; a signed root is +(k+1) or -(k+1).
using SignedRoot = int;

struct RootSystem {
  char type_label = 'A';
  int rank = 0;
  std::vector<std::vector<long>> cartan;          // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<long>> positive_roots;  // simple-root coordinates
  int coxeter_number = 0;

  // simple_action[i][k]: signed image of positive root k under s_{i+1}
  std::vector<std::vector<SignedRoot>> simple_action;

  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
  int root_index(const std::vector<long>& coords) const;  // -1 if absent

  // Coxeter matrix entry m(i,j) for 1-based generator indices.
  int coxeter_m(int i, int j) const;
};

struct WeylElement {
  std::vector<int> word;              // canonical reduced word, 1-based generator indices
  std::vector<SignedRoot> root_action;  // image of each positive root

  bool operator==(const WeylElement& o) const { return root_action == o.root_action; }
};

struct CenterData {
  std::vector<long> cyclic_orders;  // empty = trivial group
  long exponent = 1;
  long order() const;
};

RootSystem build_root_system(char type_label, int rank);

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& letters);
WeylElement from_root_action(const RootSystem& rs, std::vector<SignedRoot> action);

SignedRoot apply_to_root(const RootSystem& rs, const WeylElement& w, SignedRoot r);
std::vector<long> apply_to_coords(const RootSystem& rs, const WeylElement& w,
                                  const std::vector<long>& coords);

int length(const RootSystem& rs, const WeylElement& w);
bool is_identity(const WeylElement& w);
int element_order(const RootSystem& rs, const WeylElement& w);

WeylElement coxeter_element(const RootSystem& rs);
WeylElement longest_element(const RootSystem& rs);

// Dimension of the fixed subspace of w in the reflection representation.
int fixed_space_dim(const RootSystem& rs, const WeylElement& w);
bool is_elliptic(const RootSystem& rs, const WeylElement& w);

CenterData center_group(const RootSystem& rs);
bool exponent_divides_coxeter(const RootSystem& rs);

// Full group enumeration (BFS over generators); refuses beyond max_size.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs,
                                              size_t max_size = 1000000);

// The unique v with v(standard positive system) = P, where P is given as the
// set of signed roots forming a positive system.
WeylElement from_positive_system(const RootSystem& rs, const std::vector<SignedRoot>& P);

nlohmann::json root_system_to_json(const RootSystem& rs);
nlohmann::json weyl_to_json(const WeylElement& w);

}  // namespace wildbraid::rootdata
