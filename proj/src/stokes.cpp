#include "wildbraid/stokes.hpp"

#include "wildbraid/matgroup.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wildbraid::stokes {

using rootdata::RootSystem;
using rootdata::SignedRoot;
using rootdata::WeylElement;

namespace {

Rat norm2(const Rat& a) { return rat_mod(a, Rat(2)); }

// sin(pi s) sign from the rational s.
int sin_sign(const Rat& s) {
  Rat r = norm2(s);
  if (sgn(r) == 0 || cmp(r, Rat(1)) == 0) return 0;
  return cmp(r, Rat(1)) < 0 ? 1 : -1;
}

}  // namespace

PolarLabel make_label(const Rat& radius, const Rat& angle_over_pi) {
  if (sgn(radius) <= 0) throw ConfigError("label radius must be positive");
  PolarLabel l;
  l.radius = radius;
  l.angle = norm2(angle_over_pi);
  return l;
}

std::optional<Rat> ray_of_difference(const PolarLabel& u, const PolarLabel& v) {
  Rat du = norm2(u.angle), dv = norm2(v.angle);
  if (cmp(du, dv) == 0) {
    // colinear, same direction
    int c = cmp(u.radius, v.radius);
    if (c == 0) return std::nullopt;
    return c > 0 ? du : norm2(du + 1);
  }
  if (cmp(norm2(du - dv), Rat(1)) == 0) return du;  // opposite directions
  if (cmp(u.radius, v.radius) == 0) {
    // equal radii: r e^{iA} - r e^{iB} = 2 r sin((A-B)/2) e^{i((A+B)/2 + 1/2)}
    Rat half_diff = (du - dv) / 2;
    Rat ray = (du + dv) / 2 + rat(1, 2);
    if (sin_sign(half_diff) < 0) ray += 1;
    return norm2(ray);
  }
  throw UnsupportedInput(
      "difference of labels is not along an exact rational-pi ray; "
      "choose colinear or equal-radius labels");
}

std::vector<PolarLabel> default_labels(const RootSystem& rs) {
  if (rs.type_label != 'A') throw ConfigError("default labels exist for type A only");
  int n = rs.rank + 1;
  std::vector<PolarLabel> labels;
  for (int k = 0; k < n; ++k) labels.push_back(make_label(Rat(1), rat(2 * k, n)));
  return labels;
}

long parse_slope(const std::string& text, long& m_out) {
  auto pos = text.find('/');
  if (pos == std::string::npos) throw ConfigError("slope must be of the form d/m");
  long d = std::stol(text.substr(0, pos));
  long m = std::stol(text.substr(pos + 1));
  m_out = m;
  return d;
}

namespace {

std::pair<int, int> signed_to_pair(const RootSystem& rs, SignedRoot r) {
  const auto& coords = rs.positive_roots[std::abs(r) - 1];
  int i = 0;
  while (i < rs.rank && coords[i] == 0) ++i;
  int j = i;
  while (j < rs.rank && coords[j] == 1) ++j;
  std::pair<int, int> p{i + 1, j + 1};
  if (r < 0) std::swap(p.first, p.second);
  return p;
}

// ray of the root value a_rho for a signed root rho
Rat root_ray(const IrregularClassSpec& spec, SignedRoot rho) {
  int idx = std::abs(rho) - 1;
  Rat a = spec.positive_root_rays[idx];
  return rho > 0 ? a : norm2(a + 1);
}

// direction of a_rho e^{-i nu theta} in units of pi, normalized mod 2
Rat value_direction(const IrregularClassSpec& spec, SignedRoot rho, const Rat& theta) {
  return norm2(root_ray(spec, rho) - spec.slope() * theta);
}

bool is_oscillatory(const Rat& dir) {
  return cmp(dir, rat(1, 2)) == 0 || cmp(dir, rat(3, 2)) == 0;
}
bool is_dominance_positive(const Rat& dir) {
  return cmp(dir, rat(1, 2)) > 0 && cmp(dir, rat(3, 2)) < 0;
}

// Solutions theta in [0, 2) of ray - nu*theta == target (mod step).
std::vector<Rat> solve_angles(const IrregularClassSpec& spec, const Rat& ray,
                              const Rat& target, const Rat& step) {
  Rat nu = spec.slope();
  // theta = (ray - target - k*step)/nu with theta in [0, 2):
  //   k*step <= ray - target   and   k*step > ray - target - 2*nu
  Rat upper = (ray - target) / step;           // inclusive
  Rat lower = (ray - target - 2 * nu) / step;  // exclusive
  std::vector<Rat> out;
  for (long k = floor_div_long(lower) + 1; ; ++k) {
    Rat kk(k);
    if (cmp(kk, upper) > 0) break;
    Rat theta = (ray - target - kk * step) / nu;
    theta.canonicalize();
    out.push_back(theta);
  }
  return out;
}

std::vector<DirectionEntry> collect_directions(const IrregularClassSpec& spec,
                                               const Rat& target, const Rat& step) {
  std::map<Rat, std::set<SignedRoot>> hits;
  int num_pos = spec.rs.num_positive_roots();
  for (int idx = 0; idx < num_pos; ++idx) {
    for (SignedRoot rho : {idx + 1, -(idx + 1)}) {
      for (const Rat& theta : solve_angles(spec, root_ray(spec, rho), target, step))
        hits[theta].insert(rho);
    }
  }
  std::vector<DirectionEntry> out;
  for (auto& [angle, roots] : hits)
    out.push_back({angle, std::vector<SignedRoot>(roots.begin(), roots.end())});
  return out;
}

}  // namespace

IrregularClassSpec build_irregular_class(const RootSystem& rs, long d, long m,
                                         const std::vector<PolarLabel>& labels) {
  if (rs.type_label != 'A')
    throw ConfigError("isoclinic classes are modeled by eigenvalue labels (type A only)");
  if (d < 1 || m < 1 || std::gcd(d, m) != 1)
    throw ConfigError("slope d/m must be in lowest terms with d >= 1");
  if (static_cast<int>(labels.size()) != rs.rank + 1)
    throw ConfigError("expected rank+1 eigenvalue labels");

  IrregularClassSpec spec;
  spec.rs = rs;
  spec.d = d;
  spec.m = m;
  spec.labels = labels;
  for (const auto& l : labels)
    if (sgn(l.radius) <= 0) throw ConfigError("labels must be nonzero");

  int n = rs.rank + 1;
  // distinct labels <=> regular semisimple leading term
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j])
        throw ConfigError("leading term is not regular semisimple (equal labels)");

  // rays of a_(i,j) = u_i - u_j for positive roots (i < j)
  spec.positive_root_rays.resize(rs.num_positive_roots());
  for (int idx = 0; idx < rs.num_positive_roots(); ++idx) {
    auto [i, j] = signed_to_pair(rs, idx + 1);
    auto ray = ray_of_difference(labels[i - 1], labels[j - 1]);
    if (!ray) throw ConfigError("zero root value");
    spec.positive_root_rays[idx] = *ray;
  }

  // deck permutation: u_i e^{-2 pi i nu} = u_{perm[i]}
  Rat rot = norm2(Rat(0) - rat(2 * d, m));
  spec.deck_label_perm.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    PolarLabel moved = make_label(labels[i].radius, norm2(labels[i].angle + rot));
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (labels[j] == moved) found = j;
    if (found < 0)
      throw ConfigError("labels are not closed under the formal monodromy rotation");
    spec.deck_label_perm[i] = found;
  }
  spec.deck_twist = matgroup::weyl_from_permutation(rs, spec.deck_label_perm);
  if (rootdata::element_order(rs, spec.deck_twist) != m &&
      !(m == 1 && rootdata::is_identity(spec.deck_twist)))
    throw ConfigError("deck twist does not have order m");
  return spec;
}

std::vector<DirectionEntry> stokes_directions(const IrregularClassSpec& spec) {
  return collect_directions(spec, rat(1, 2), Rat(1));
}

std::vector<DirectionEntry> singular_directions(const IrregularClassSpec& spec) {
  return collect_directions(spec, Rat(1), Rat(2));
}

std::vector<SignedRoot> dominance_chamber(const IrregularClassSpec& spec, const Rat& theta) {
  std::vector<SignedRoot> out;
  for (int idx = 0; idx < spec.rs.num_positive_roots(); ++idx) {
    Rat dir = value_direction(spec, idx + 1, theta);
    if (is_oscillatory(dir))
      throw ConfigError("chamber requested at a Stokes direction");
    out.push_back(is_dominance_positive(dir) ? idx + 1 : -(idx + 1));
  }
  return out;
}

StokesDiagram compute_diagram(const IrregularClassSpec& spec, std::optional<Rat> base) {
  StokesDiagram diagram;
  diagram.stokes_directions = stokes_directions(spec);
  diagram.singular_directions = singular_directions(spec);
  const auto& sd = diagram.stokes_directions;

  if (sd.empty()) {
    diagram.base_direction = base.value_or(Rat(0));
    diagram.chamber_sequence.push_back(dominance_chamber(spec, diagram.base_direction));
    return diagram;
  }

  if (base) {
    diagram.base_direction = norm2(*base);
    for (const auto& e : sd)
      if (cmp(e.angle, diagram.base_direction) == 0)
        throw ConfigError("base direction is a Stokes direction");
  } else {
    // midpoint of the first interval between Stokes directions after angle 0
    Rat first = sd.front().angle;
    Rat second = sd.size() > 1 ? sd[1].angle : first + 2;
    diagram.base_direction = norm2((first + second) / 2);
  }

  // crossings in (base, base + 2), in walk order
  std::vector<Rat> crossings;
  for (const auto& e : sd) {
    Rat a = e.angle;
    if (cmp(a, diagram.base_direction) <= 0) a += 2;
    crossings.push_back(a);
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });

  // chambers at the base and between consecutive crossings
  std::vector<Rat> sample_angles{diagram.base_direction};
  for (size_t k = 0; k + 1 < crossings.size(); ++k)
    sample_angles.push_back((crossings[k] + crossings[k + 1]) / 2);
  sample_angles.push_back((crossings.back() + diagram.base_direction + 2) / 2);

  for (const Rat& theta : sample_angles)
    diagram.chamber_sequence.push_back(dominance_chamber(spec, theta));

  // relative positions and field braid
  for (size_t k = 0; k + 1 < diagram.chamber_sequence.size(); ++k) {
    WeylElement v_prev = rootdata::from_positive_system(spec.rs, diagram.chamber_sequence[k]);
    WeylElement v_next =
        rootdata::from_positive_system(spec.rs, diagram.chamber_sequence[k + 1]);
    WeylElement w =
        rootdata::multiply(spec.rs, rootdata::inverse(spec.rs, v_prev), v_next);
    if (rootdata::is_identity(w))
      throw ConfigError("trivial relative position across a Stokes direction");
    diagram.relative_positions.push_back(w);
    diagram.braid =
        braid::concat(diagram.braid, braid::positive_lift(spec.rs, w));
  }

  // closure: the final chamber must be the deck-twisted initial chamber
  const auto& c0 = diagram.chamber_sequence.front();
  const auto& cn = diagram.chamber_sequence.back();
  std::set<SignedRoot> start(c0.begin(), c0.end());
  for (SignedRoot rho : cn) {
    SignedRoot moved = rootdata::apply_to_root(spec.rs, spec.deck_twist, rho);
    if (!start.count(moved))
      throw ConfigError("chamber walk does not close up under the deck twist");
  }
  return diagram;
}

braid::BraidWord braid_from_irregular_class(const IrregularClassSpec& spec,
                                            std::optional<Rat> base) {
  return compute_diagram(spec, base).braid;
}

bool verify_isoclinic_braid(const IrregularClassSpec& spec) {
  if (spec.m != spec.rs.coxeter_number)
    throw ConfigError("the braid identity is checked for slope denominators m = h");
  braid::BraidWord extracted = braid_from_irregular_class(spec);
  braid::BraidWord expected =
      braid::power(braid::kloosterman_braid(spec.rs), static_cast<int>(spec.d));
  return braid::cyclically_equivalent(spec.rs, extracted, expected);
}

std::string render_ascii(const StokesDiagram& diagram) {
  std::ostringstream out;
  auto put = [&](const char* name, const std::vector<DirectionEntry>& list) {
    out << name << " (" << list.size() << "):\n";
    for (const auto& e : list) {
      out << "  " << e.angle.get_str() << "*pi  [";
      for (size_t k = 0; k < e.roots.size(); ++k) {
        if (k) out << " ";
        out << e.roots[k];
      }
      out << "]\n";
    }
  };
  put("Stokes directions", diagram.stokes_directions);
  put("singular directions", diagram.singular_directions);
  out << "base direction: " << diagram.base_direction.get_str() << "*pi\n";
  out << "braid:";
  for (int l : diagram.braid.letters) out << " s" << l;
  out << "\n";
  return out.str();
}

nlohmann::json diagram_to_json(const StokesDiagram& diagram) {
  auto entries = [](const std::vector<DirectionEntry>& list) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : list)
      out.push_back(nlohmann::json{{"angle_over_pi", e.angle.get_str()}, {"roots", e.roots}});
    return out;
  };
  nlohmann::json chambers = nlohmann::json::array();
  for (const auto& c : diagram.chamber_sequence) chambers.push_back(c);
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& w : diagram.relative_positions) rels.push_back(w.word);
  return nlohmann::json{{"stokes_directions", entries(diagram.stokes_directions)},
                        {"singular_directions", entries(diagram.singular_directions)},
                        {"base_direction_over_pi", diagram.base_direction.get_str()},
                        {"chambers", chambers},
                        {"relative_positions", rels},
                        {"braid", diagram.braid.letters}};
}

}  // namespace wildbraid::stokes
