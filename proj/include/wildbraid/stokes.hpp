// Stokes geometry of isoclinic irregular classes in type A with exact angles:
// Stokes/singular directions, dominance chambers, and the braid extracted
// from the chamber walk around the boundary circle.
//
// All angles are rational multiples of pi, stored as the rational factor.
// Leading eigenvalue labels are exact-polar numbers r e^{i pi a}; inputs whose
// pairwise differences do not point along exact rational-pi rays are rejected.
#pragma once

#include "wildbraid/braid.hpp"
#include "wildbraid/rootdata.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace wildbraid::stokes {

struct PolarLabel {
  Rat radius;  // > 0
  Rat angle;   // in units of pi, normalized to [0, 2)

  bool operator==(const PolarLabel& o) const {
    return cmp(radius, o.radius) == 0 && cmp(angle, o.angle) == 0;
  }
};

PolarLabel make_label(const Rat& radius, const Rat& angle_over_pi);

// Direction of u - v in units of pi; nullopt when u == v.
std::optional<Rat> ray_of_difference(const PolarLabel& u, const PolarLabel& v);

struct IrregularClassSpec {
  rootdata::RootSystem rs;  // type A only
  long d = 1, m = 1;        // slope d/m in lowest terms
  std::vector<PolarLabel> labels;        // rank+1 pairwise distinct eigenvalue labels
  std::vector<int> deck_label_perm;      // label i continues to label perm[i]
  rootdata::WeylElement deck_twist;      // induced Weyl element, order m
  std::vector<Rat> positive_root_rays;   // ray angle of a_root per positive root

  Rat slope() const { return rat(d, m); }
};

// Builds the spec, derives the deck twist from the labels, and validates all
// invariants (distinct labels, nonzero root values, deck order m).
IrregularClassSpec build_irregular_class(const rootdata::RootSystem& rs, long d, long m,
                                         const std::vector<PolarLabel>& labels);

// h-th roots of unity: the standard regular semisimple leading term.
std::vector<PolarLabel> default_labels(const rootdata::RootSystem& rs);

long parse_slope(const std::string& text, long& m_out);  // "d/m" -> d, m

struct DirectionEntry {
  Rat angle;  // in units of pi, [0, 2)
  std::vector<rootdata::SignedRoot> roots;
};

struct StokesDiagram {
  std::vector<DirectionEntry> stokes_directions;
  std::vector<DirectionEntry> singular_directions;
  Rat base_direction;
  std::vector<std::vector<rootdata::SignedRoot>> chamber_sequence;
  std::vector<rootdata::WeylElement> relative_positions;
  braid::BraidWord braid;
};

std::vector<DirectionEntry> stokes_directions(const IrregularClassSpec& spec);
std::vector<DirectionEntry> singular_directions(const IrregularClassSpec& spec);

// Positive-weight set at a non-Stokes angle; throws ConfigError on a Stokes angle.
std::vector<rootdata::SignedRoot> dominance_chamber(const IrregularClassSpec& spec,
                                                    const Rat& theta);

StokesDiagram compute_diagram(const IrregularClassSpec& spec,
                              std::optional<Rat> base_direction = std::nullopt);

braid::BraidWord braid_from_irregular_class(const IrregularClassSpec& spec,
                                            std::optional<Rat> base_direction = std::nullopt);

// Lemma check: the extracted braid is a cyclic shift of c~^d (requires m = h).
bool verify_isoclinic_braid(const IrregularClassSpec& spec);

std::string render_ascii(const StokesDiagram& diagram);
nlohmann::json diagram_to_json(const StokesDiagram& diagram);

}  // namespace wildbraid::stokes
