#include "wildbraid/braid.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace wildbraid::braid {

using rootdata::RootSystem;
using rootdata::WeylElement;

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord power(const BraidWord& a, int k) {
  BraidWord r;
  for (int i = 0; i < k; ++i) r = concat(r, a);
  return r;
}

BraidWord rotate(const BraidWord& a, int k) {
  if (a.letters.empty()) return a;
  int n = a.letter_count();
  k = ((k % n) + n) % n;
  BraidWord r;
  r.letters.insert(r.letters.end(), a.letters.begin() + k, a.letters.end());
  r.letters.insert(r.letters.end(), a.letters.begin(), a.letters.begin() + k);
  return r;
}

WeylElement demazure_product(const RootSystem& rs, const BraidWord& w) {
  WeylElement acc = rootdata::identity_element(rs);
  for (int i : w.letters) {
    WeylElement next = rootdata::multiply(rs, acc, rootdata::simple_reflection(rs, i));
    if (rootdata::length(rs, next) > rootdata::length(rs, acc)) acc = std::move(next);
  }
  return acc;
}

BraidWord positive_lift(const RootSystem& rs, const WeylElement& w) {
  (void)rs;
  return BraidWord{w.word};
}

namespace {

bool is_left_descent(const RootSystem& rs, const WeylElement& w, int i) {
  // l(s_i w) < l(w)  <=>  w^{-1}(alpha_i) < 0.
  WeylElement inv = rootdata::inverse(rs, w);
  std::vector<long> e(rs.rank, 0);
  e[i - 1] = 1;
  int idx = rs.root_index(e);
  return inv.root_action[idx] < 0;
}

bool is_right_ascent(const RootSystem& rs, const WeylElement& w, int i) {
  // l(w s_i) > l(w)  <=>  w(alpha_i) > 0.
  std::vector<long> e(rs.rank, 0);
  e[i - 1] = 1;
  int idx = rs.root_index(e);
  return w.root_action[idx] > 0;
}

// Left-greedy local move: shift descents of v into u while u can grow.
// Returns true if anything moved.
bool local_slide(const RootSystem& rs, WeylElement& u, WeylElement& v) {
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= rs.rank; ++i) {
      if (is_left_descent(rs, v, i) && is_right_ascent(rs, u, i)) {
        u = rootdata::multiply(rs, u, rootdata::simple_reflection(rs, i));
        v = rootdata::multiply(rs, rootdata::simple_reflection(rs, i), v);
        moved = progress = true;
        break;
      }
    }
  }
  return moved;
}

}  // namespace

GarsideNormalForm normal_form(const RootSystem& rs, const BraidWord& w) {
  std::vector<WeylElement> factors;
  factors.reserve(w.letters.size());
  for (int i : w.letters) factors.push_back(rootdata::simple_reflection(rs, i));

  // Bubble local slides until the sequence is left-weighted.
  bool changed = true;
  size_t guard = 0;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < factors.size(); ++k) {
      if (local_slide(rs, factors[k], factors[k + 1])) changed = true;
      if (rootdata::is_identity(factors[k + 1])) {
        factors.erase(factors.begin() + k + 1);
        --k;
      }
    }
    if (++guard > (w.letters.size() + 2) * (w.letters.size() + 2))
      throw ConfigError("normal form did not stabilize");
  }
  factors.erase(std::remove_if(factors.begin(), factors.end(),
                               [](const WeylElement& f) { return rootdata::is_identity(f); }),
                factors.end());

  GarsideNormalForm nf;
  WeylElement w0 = rootdata::longest_element(rs);
  size_t lead = 0;
  while (lead < factors.size() && factors[lead] == w0) ++lead;
  nf.delta_power = static_cast<int>(lead);
  nf.simple_factors.assign(factors.begin() + lead, factors.end());
  return nf;
}

bool braid_equal(const RootSystem& rs, const BraidWord& a, const BraidWord& b) {
  if (a.letter_count() != b.letter_count()) return false;
  GarsideNormalForm na = normal_form(rs, a);
  GarsideNormalForm nb = normal_form(rs, b);
  if (na.delta_power != nb.delta_power) return false;
  if (na.simple_factors.size() != nb.simple_factors.size()) return false;
  for (size_t k = 0; k < na.simple_factors.size(); ++k)
    if (!(na.simple_factors[k] == nb.simple_factors[k])) return false;
  return true;
}

bool cyclically_equivalent(const RootSystem& rs, const BraidWord& a, const BraidWord& b) {
  if (a.letter_count() != b.letter_count()) return false;
  if (a.letters.empty()) return true;
  for (int k = 0; k < a.letter_count(); ++k)
    if (braid_equal(rs, rotate(a, k), b)) return true;
  return false;
}

BraidWord full_twist(const RootSystem& rs) {
  BraidWord delta = positive_lift(rs, rootdata::longest_element(rs));
  return power(delta, 2);
}

BraidWord kloosterman_braid(const RootSystem& rs) {
  return positive_lift(rs, rootdata::coxeter_element(rs));
}

BraidWord airy_braid(const RootSystem& rs) {
  return power(kloosterman_braid(rs), rs.coxeter_number + 1);
}

bool rewriting_reachable(const RootSystem& rs, const BraidWord& a, const BraidWord& b,
                         size_t max_states) {
  if (a.letter_count() != b.letter_count()) return false;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(a.letters);
  queue.push_back(a.letters);
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    if (cur == b.letters) return true;
    for (size_t pos = 0; pos + 1 < cur.size(); ++pos) {
      // Candidate rewrite: alternating block of i,j at pos with length m(i,j).
      int i = cur[pos], j = cur[pos + 1];
      if (i == j) continue;
      int m = rs.coxeter_m(i, j);
      if (pos + m > cur.size()) continue;
      bool alternating = true;
      for (int t = 0; t < m; ++t) {
        int expect = (t % 2 == 0) ? i : j;
        if (cur[pos + t] != expect) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      std::vector<int> next = cur;
      for (int t = 0; t < m; ++t) next[pos + t] = (t % 2 == 0) ? j : i;
      if (seen.insert(next).second) {
        if (seen.size() > max_states)
          throw ResourceError("rewriting BFS exceeded state budget");
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

nlohmann::json braid_to_json(const BraidWord& w) {
  return nlohmann::json{{"letters", w.letters}};
}

nlohmann::json normal_form_to_json(const GarsideNormalForm& nf) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : nf.simple_factors) factors.push_back(f.word);
  return nlohmann::json{{"delta_power", nf.delta_power}, {"factors", factors}};
}

}  // namespace wildbraid::braid
