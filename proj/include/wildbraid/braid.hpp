// Positive braid monoid over (W,S): Demazure products, canonical left-greedy
// (Garside) normal forms, braid equality, cyclic-shift equivalence, and the
// twist constructions used by the rigidity checks.
#pragma once

#include "wildbraid/rootdata.hpp"

#include <json.hpp>

#include <vector>

namespace wildbraid::braid {

struct BraidWord {
  std::vector<int> letters;  // 1-based generator indices

  int letter_count() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord& o) const { return letters == o.letters; }
};

struct GarsideNormalForm {
  int delta_power = 0;
  std::vector<rootdata::WeylElement> simple_factors;  // none equals identity or w0
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& a, int k);
BraidWord rotate(const BraidWord& a, int k);

rootdata::WeylElement demazure_product(const rootdata::RootSystem& rs, const BraidWord& w);
BraidWord positive_lift(const rootdata::RootSystem& rs, const rootdata::WeylElement& w);

GarsideNormalForm normal_form(const rootdata::RootSystem& rs, const BraidWord& w);
bool braid_equal(const rootdata::RootSystem& rs, const BraidWord& a, const BraidWord& b);
bool cyclically_equivalent(const rootdata::RootSystem& rs, const BraidWord& a,
                           const BraidWord& b);

BraidWord full_twist(const rootdata::RootSystem& rs);        // Delta^2
BraidWord kloosterman_braid(const rootdata::RootSystem& rs); // lift of the Coxeter element
BraidWord airy_braid(const rootdata::RootSystem& rs);        // c~^(h+1)

// Independent word-problem oracle: bounded BFS over single braid-relation
// rewrites.  Intended for small ranks / short words in tests.
bool rewriting_reachable(const rootdata::RootSystem& rs, const BraidWord& a,
                         const BraidWord& b, size_t max_states = 2000000);

nlohmann::json braid_to_json(const BraidWord& w);
nlohmann::json normal_form_to_json(const GarsideNormalForm& nf);

}  // namespace wildbraid::braid
