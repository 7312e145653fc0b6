#include "wildbraid/rootdata.hpp"

#include "wildbraid/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wildbraid::rootdata {

namespace {

void check_valid(char t, int rank) {
  bool ok = false;
  switch (t) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw ConfigError(std::string("invalid simple type ") + t + std::to_string(rank));
}

// cartan[i][j] = <alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
std::vector<std::vector<long>> cartan_matrix(char t, int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-based
  switch (t) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7-8), branch node 4 carries 2.
      link(0, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      link(0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

long height(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

int RootSystem::root_index(const std::vector<long>& coords) const {
  for (int k = 0; k < num_positive_roots(); ++k)
    if (positive_roots[k] == coords) return k;
  return -1;
}

int RootSystem::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  long prod = cartan[i - 1][j - 1] * cartan[j - 1][i - 1];
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw ConfigError("unexpected Cartan product");
}

long CenterData::order() const {
  long o = 1;
  for (long c : cyclic_orders) o *= c;
  return o;
}

RootSystem build_root_system(char type_label, int rank) {
  check_valid(type_label, rank);
  RootSystem rs;
  rs.type_label = type_label;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type_label, rank);

  // Close the simple roots under the simple reflections.
  std::set<std::vector<long>> all;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<long> e(rank, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<long> v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      long c = 0;
      for (int j = 0; j < rank; ++j) c += rs.cartan[i][j] * v[j];
      std::vector<long> img = v;
      img[i] -= c;
      if (all.insert(img).second) queue.push_back(img);
    }
  }
  for (const auto& v : all) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
    if (nonneg) rs.positive_roots.push_back(v);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const std::vector<long>& x, const std::vector<long>& y) {
              long hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });

  int num_pos = rs.num_positive_roots();
  if (static_cast<int>(all.size()) != 2 * num_pos)
    throw ConfigError("root enumeration produced a non-symmetric system");

  rs.simple_action.assign(rank, std::vector<SignedRoot>(num_pos, 0));
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < num_pos; ++k) {
      const auto& v = rs.positive_roots[k];
      long c = 0;
      for (int j = 0; j < rank; ++j) c += rs.cartan[i][j] * v[j];
      std::vector<long> img = v;
      img[i] -= c;
      bool nonneg = std::all_of(img.begin(), img.end(), [](long x) { return x >= 0; });
      if (nonneg) {
        int idx = rs.root_index(img);
        if (idx < 0) throw ConfigError("reflection left the root system");
        rs.simple_action[i][k] = idx + 1;
      } else {
        for (auto& x : img) x = -x;
        int idx = rs.root_index(img);
        if (idx < 0) throw ConfigError("reflection left the root system");
        rs.simple_action[i][k] = -(idx + 1);
      }
    }
  }

  rs.coxeter_number = 2 * num_pos / rank;
  if (2 * num_pos % rank != 0)
    throw ConfigError("rank does not divide twice the number of positive roots");
  return rs;
}

namespace {

std::vector<SignedRoot> identity_action(const RootSystem& rs) {
  std::vector<SignedRoot> act(rs.num_positive_roots());
  for (int k = 0; k < rs.num_positive_roots(); ++k) act[k] = k + 1;
  return act;
}

SignedRoot act_simple(const RootSystem& rs, int i, SignedRoot r) {
  int k = std::abs(r) - 1;
  SignedRoot img = rs.simple_action[i - 1][k];
  return r > 0 ? img : -img;
}

// action of (a then b applied after): compose[k] = b(a(k))
std::vector<SignedRoot> compose(const std::vector<SignedRoot>& a,
                                const std::vector<SignedRoot>& b) {
  std::vector<SignedRoot> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    SignedRoot mid = a[k];
    int idx = std::abs(mid) - 1;
    r[k] = mid > 0 ? b[idx] : -b[idx];
  }
  return r;
}

int action_length(const std::vector<SignedRoot>& act) {
  int len = 0;
  for (SignedRoot r : act)
    if (r < 0) ++len;
  return len;
}

// Canonical reduced word: repeatedly peel the smallest left descent.
// i is a left descent of w iff w^{-1}(alpha_i) < 0; with the action stored for
// w, that is checked on the inverse action.
std::vector<SignedRoot> invert_action(const std::vector<SignedRoot>& act) {
  std::vector<SignedRoot> inv(act.size());
  for (size_t k = 0; k < act.size(); ++k) {
    int idx = std::abs(act[k]) - 1;
    inv[idx] = act[k] > 0 ? static_cast<int>(k) + 1 : -(static_cast<int>(k) + 1);
  }
  return inv;
}

std::vector<int> canonical_word(const RootSystem& rs, std::vector<SignedRoot> act) {
  std::vector<int> word;
  // simple root alpha_i sits at index root_index(e_i); cache those indices.
  std::vector<int> simple_idx(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<long> e(rs.rank, 0);
    e[i] = 1;
    simple_idx[i] = rs.root_index(e);
  }
  while (action_length(act) > 0) {
    std::vector<SignedRoot> inv = invert_action(act);
    int chosen = -1;
    for (int i = 1; i <= rs.rank; ++i) {
      if (inv[simple_idx[i - 1]] < 0) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) throw ConfigError("no descent found for non-identity element");
    word.push_back(chosen);
    // act <- (s_chosen * w) action: apply act first? w = s_i * w' => w' = s_i w.
    // Action of s_i w as a map: first s_i, then w... composition convention:
    // our action vectors map root k to w(k). For w' = s_i w (apply w after s_i? no:
    // group product s_i * w' means first w' then s_i as functions).  We need
    // w' = s_i * w (functions: w' (x) = s_i(w(x))).
    std::vector<SignedRoot> si(act.size());
    for (size_t k = 0; k < act.size(); ++k) si[k] = rs.simple_action[chosen - 1][k];
    act = compose(act, si);
  }
  return word;
}

WeylElement from_action(const RootSystem& rs, std::vector<SignedRoot> act) {
  WeylElement w;
  w.word = canonical_word(rs, act);
  w.root_action = std::move(act);
  return w;
}

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  WeylElement w;
  w.root_action = identity_action(rs);
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw ConfigError("generator index out of range");
  WeylElement w;
  w.word = {i};
  w.root_action = rs.simple_action[i - 1];
  return w;
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  // (a*b)(x) = a(b(x)): apply b first.
  return from_action(rs, compose(b.root_action, a.root_action));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  return from_action(rs, invert_action(w.root_action));
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& letters) {
  WeylElement w = identity_element(rs);
  for (int i : letters) w = multiply(rs, w, simple_reflection(rs, i));
  return w;
}

WeylElement from_root_action(const RootSystem& rs, std::vector<SignedRoot> action) {
  return from_action(rs, std::move(action));
}

SignedRoot apply_to_root(const RootSystem& rs, const WeylElement& w, SignedRoot r) {
  (void)rs;
  int idx = std::abs(r) - 1;
  return r > 0 ? w.root_action[idx] : -w.root_action[idx];
}

std::vector<long> apply_to_coords(const RootSystem& rs, const WeylElement& w,
                                  const std::vector<long>& coords) {
  // Decompose over the positive roots is unnecessary: the action is linear, so
  // push each simple-root coordinate through via the stored images.
  std::vector<long> out(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i) {
    if (coords[i] == 0) continue;
    std::vector<long> e(rs.rank, 0);
    e[i] = 1;
    int idx = rs.root_index(e);
    SignedRoot img = w.root_action[idx];
    const auto& v = rs.positive_roots[std::abs(img) - 1];
    long sign = img > 0 ? 1 : -1;
    for (int j = 0; j < rs.rank; ++j) out[j] += sign * coords[i] * v[j];
  }
  return out;
}

int length(const RootSystem& rs, const WeylElement& w) {
  (void)rs;
  return action_length(w.root_action);
}

bool is_identity(const WeylElement& w) {
  for (size_t k = 0; k < w.root_action.size(); ++k)
    if (w.root_action[k] != static_cast<int>(k) + 1) return false;
  return true;
}

int element_order(const RootSystem& rs, const WeylElement& w) {
  WeylElement acc = w;
  int n = 1;
  while (!is_identity(acc)) {
    acc = multiply(rs, acc, w);
    ++n;
    if (n > 10000) throw ConfigError("element order exceeds sanity bound");
  }
  return n;
}

WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> word(rs.rank);
  for (int i = 0; i < rs.rank; ++i) word[i] = i + 1;
  return from_word(rs, word);
}

WeylElement longest_element(const RootSystem& rs) {
  // Greedy ascent: multiply by any generator increasing length until stuck.
  WeylElement w = identity_element(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rs.rank; ++i) {
      WeylElement cand = multiply(rs, w, simple_reflection(rs, i));
      if (length(rs, cand) > length(rs, w)) {
        w = cand;
        grew = true;
        break;
      }
    }
  }
  return w;
}

int fixed_space_dim(const RootSystem& rs, const WeylElement& w) {
  QField f;
  Mat<Rat> m(rs.rank, rs.rank, f.zero());
  for (int j = 0; j < rs.rank; ++j) {
    std::vector<long> e(rs.rank, 0);
    e[j] = 1;
    std::vector<long> img = apply_to_coords(rs, w, e);
    for (int i = 0; i < rs.rank; ++i) m.at(i, j) = Rat(img[i]) - (i == j ? Rat(1) : Rat(0));
  }
  return rs.rank - mat_rank(f, m);
}

bool is_elliptic(const RootSystem& rs, const WeylElement& w) {
  return fixed_space_dim(rs, w) == 0;
}

CenterData center_group(const RootSystem& rs) {
  CenterData c;
  switch (rs.type_label) {
    case 'A': c.cyclic_orders = {static_cast<long>(rs.rank) + 1}; break;
    case 'B':
    case 'C': c.cyclic_orders = {2}; break;
    case 'D':
      if (rs.rank % 2 == 0)
        c.cyclic_orders = {2, 2};
      else
        c.cyclic_orders = {4};
      break;
    case 'E':
      if (rs.rank == 6) c.cyclic_orders = {3};
      else if (rs.rank == 7) c.cyclic_orders = {2};
      break;  // E8 trivial
    case 'F':
    case 'G': break;  // trivial
  }
  c.cyclic_orders.erase(std::remove(c.cyclic_orders.begin(), c.cyclic_orders.end(), 1L),
                        c.cyclic_orders.end());
  c.exponent = 1;
  for (long o : c.cyclic_orders) c.exponent = std::lcm(c.exponent, o);
  return c;
}

bool exponent_divides_coxeter(const RootSystem& rs) {
  return rs.coxeter_number % center_group(rs).exponent == 0;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs, size_t max_size) {
  std::set<std::vector<SignedRoot>> seen;
  std::vector<WeylElement> out;
  std::vector<WeylElement> frontier{identity_element(rs)};
  seen.insert(frontier[0].root_action);
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= rs.rank; ++i) {
        WeylElement x = multiply(rs, w, simple_reflection(rs, i));
        if (seen.insert(x.root_action).second) {
          if (out.size() >= max_size)
            throw ResourceError("Weyl group enumeration exceeds budget");
          out.push_back(x);
          next.push_back(std::move(x));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

WeylElement from_positive_system(const RootSystem& rs, const std::vector<SignedRoot>& P) {
  int num_pos = rs.num_positive_roots();
  if (static_cast<int>(P.size()) != num_pos)
    throw ConfigError("positive system has wrong cardinality");
  std::set<SignedRoot> cur(P.begin(), P.end());
  for (SignedRoot r : cur)
    if (cur.count(-r)) throw ConfigError("positive system contains an opposite pair");

  std::vector<int> simple_idx(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<long> e(rs.rank, 0);
    e[i] = 1;
    simple_idx[i] = rs.root_index(e);
  }

  std::vector<int> word;
  int guard = 0;
  while (true) {
    int missing = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (!cur.count(simple_idx[i] + 1)) {
        missing = i;
        break;
      }
    }
    if (missing < 0) break;
    // v = s_i v'; replace P by s_i(P).
    word.push_back(missing + 1);
    std::set<SignedRoot> nxt;
    for (SignedRoot r : cur) nxt.insert(act_simple(rs, missing + 1, r));
    cur = std::move(nxt);
    if (++guard > num_pos + 1)
      throw ConfigError("set is not a positive system (no descent progress)");
  }
  return from_word(rs, word);
}

nlohmann::json root_system_to_json(const RootSystem& rs) {
  return nlohmann::json{{"type", std::string(1, rs.type_label)},
                        {"rank", rs.rank},
                        {"coxeter_number", rs.coxeter_number},
                        {"num_positive_roots", rs.num_positive_roots()}};
}

nlohmann::json weyl_to_json(const WeylElement& w) {
  return nlohmann::json{{"word", w.word}};
}

}  // namespace wildbraid::rootdata
