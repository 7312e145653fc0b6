#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wildbraid/rootdata.hpp"

#include <algorithm>
#include <set>

using namespace wildbraid;
using namespace wildbraid::rootdata;

namespace {

// Independent oracle for A2: close {a1, a2} under root addition.
std::set<std::vector<long>> a2_roots_by_closure() {
  std::set<std::vector<long>> roots{{1, 0}, {0, 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : roots)
      for (const auto& y : roots) {
        std::vector<long> s{x[0] + y[0], x[1] + y[1]};
        // in A2 the only positive-root sum that is again a root is a1+a2
        if (s[0] <= 1 && s[1] <= 1 && !(s == x) && !(s == y))
          if (roots.insert(s).second) grew = true;
      }
  }
  return roots;
}

}  // namespace

TEST_CASE("coxeter numbers and root counts match the table") {
  struct Row {
    char type;
    int rank;
    int h;
  };
  for (const Row& r : {Row{'A', 1, 2}, Row{'A', 2, 3}, Row{'A', 4, 5}, Row{'B', 3, 6},
                       Row{'C', 3, 6}, Row{'D', 4, 6}, Row{'D', 5, 8}, Row{'E', 6, 12},
                       Row{'E', 7, 18}, Row{'E', 8, 30}, Row{'F', 4, 12}, Row{'G', 2, 6}}) {
    RootSystem rs = build_root_system(r.type, r.rank);
    CAPTURE(r.type);
    CAPTURE(r.rank);
    CHECK(rs.coxeter_number == r.h);
    CHECK(2 * rs.num_positive_roots() == rs.rank * rs.coxeter_number);
    CHECK(element_order(rs, coxeter_element(rs)) == r.h);
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < rs.rank; ++j)
        if (i != j) CHECK(rs.cartan[i][j] <= 0);
    }
  }
}

TEST_CASE("basic construction examples") {
  RootSystem a1 = build_root_system('A', 1);
  CHECK(a1.rank == 1);
  CHECK(a1.coxeter_number == 2);
  CHECK(a1.num_positive_roots() == 1);

  RootSystem g2 = build_root_system('G', 2);
  CHECK(g2.coxeter_number == 6);
  CHECK(g2.num_positive_roots() == 6);

  RootSystem a2 = build_root_system('A', 2);
  CHECK(a2.num_positive_roots() == 3);
  std::set<std::vector<long>> got(a2.positive_roots.begin(), a2.positive_roots.end());
  CHECK(got == a2_roots_by_closure());
  // deterministic order: height first, lexicographic inside a height level
  CHECK(a2.positive_roots ==
        std::vector<std::vector<long>>{{0, 1}, {1, 0}, {1, 1}});

  CHECK_THROWS_AS(build_root_system('D', 3), ConfigError);
  CHECK_THROWS_AS(build_root_system('E', 9), ConfigError);
  CHECK_THROWS_AS(build_root_system('X', 2), ConfigError);
}

TEST_CASE("coxeter element words and orders") {
  RootSystem a1 = build_root_system('A', 1);
  WeylElement c1 = coxeter_element(a1);
  CHECK(c1.word == std::vector<int>{1});
  CHECK(element_order(a1, c1) == 2);

  RootSystem a2 = build_root_system('A', 2);
  WeylElement c2 = coxeter_element(a2);
  CHECK(c2.word == std::vector<int>{1, 2});
  CHECK(element_order(a2, c2) == 3);
  CHECK(length(a2, c2) == 2);

  RootSystem g2 = build_root_system('G', 2);
  CHECK(element_order(g2, coxeter_element(g2)) == 6);
}

TEST_CASE("ellipticity") {
  RootSystem a2 = build_root_system('A', 2);
  CHECK(is_elliptic(a2, coxeter_element(a2)));
  CHECK_FALSE(is_elliptic(a2, simple_reflection(a2, 1)));

  // brute force over all 6 elements: w0 is the unique length-3 element
  auto all = enumerate_weyl_group(a2);
  CHECK(all.size() == 6);
  int elliptic_count = 0;
  for (const auto& w : all) {
    if (length(a2, w) == 3) CHECK_FALSE(is_elliptic(a2, w));
    if (is_elliptic(a2, w)) ++elliptic_count;
  }
  CHECK(elliptic_count == 2);  // the two 3-cycles

  for (char t : {'A', 'B', 'D', 'G'}) {
    int rank = t == 'A' ? 3 : (t == 'B' ? 3 : (t == 'D' ? 4 : 2));
    RootSystem rs = build_root_system(t, rank);
    CHECK(is_elliptic(rs, coxeter_element(rs)));
  }
}

TEST_CASE("longest element lengths by brute force") {
  RootSystem a1 = build_root_system('A', 1);
  CHECK(length(a1, longest_element(a1)) == 1);

  for (auto [t, rank, order, lw0] :
       {std::tuple{'A', 2, 6, 3}, std::tuple{'B', 2, 8, 4}, std::tuple{'G', 2, 12, 6}}) {
    RootSystem rs = build_root_system(t, rank);
    auto all = enumerate_weyl_group(rs);
    CHECK(static_cast<int>(all.size()) == order);
    int max_len = 0;
    for (const auto& w : all) max_len = std::max(max_len, length(rs, w));
    CHECK(max_len == lw0);
    CHECK(length(rs, longest_element(rs)) == lw0);
  }

  RootSystem a2 = build_root_system('A', 2);
  CHECK(longest_element(a2).word == std::vector<int>{1, 2, 1});
}

TEST_CASE("length equals inversion count and is symmetric") {
  for (char t : {'A', 'B'}) {
    RootSystem rs = build_root_system(t, t == 'A' ? 3 : 2);
    for (const auto& w : enumerate_weyl_group(rs)) {
      int inv = 0;
      for (int k = 0; k < rs.num_positive_roots(); ++k)
        if (w.root_action[k] < 0) ++inv;
      CHECK(length(rs, w) == inv);
      CHECK(length(rs, w) == length(rs, inverse(rs, w)));
      CHECK(static_cast<int>(w.word.size()) == inv);
    }
  }
}

TEST_CASE("centers") {
  RootSystem d5 = build_root_system('D', 5);
  CenterData cd5 = center_group(d5);
  CHECK(cd5.cyclic_orders == std::vector<long>{4});
  CHECK(cd5.exponent == 4);
  CHECK(d5.coxeter_number == 8);
  CHECK(exponent_divides_coxeter(d5));

  RootSystem e6 = build_root_system('E', 6);
  CHECK(center_group(e6).cyclic_orders == std::vector<long>{3});
  CHECK(e6.coxeter_number == 12);
  CHECK(exponent_divides_coxeter(e6));

  RootSystem e8 = build_root_system('E', 8);
  CHECK(center_group(e8).cyclic_orders.empty());
  CHECK(center_group(e8).exponent == 1);

  RootSystem d4 = build_root_system('D', 4);
  CHECK(center_group(d4).cyclic_orders == std::vector<long>{2, 2});
  CHECK(center_group(d4).order() == 4);
  CHECK(center_group(d4).exponent == 2);

  for (auto [t, rank] : {std::pair{'A', 4}, {'B', 3}, {'C', 2}, {'D', 4}, {'D', 5},
                         {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}}) {
    CHECK(exponent_divides_coxeter(build_root_system(t, rank)));
  }
}

TEST_CASE("group structure sanity: distinct actions, faithful multiplication") {
  RootSystem b2 = build_root_system('B', 2);
  auto all = enumerate_weyl_group(b2);
  std::set<std::vector<SignedRoot>> actions;
  for (const auto& w : all) actions.insert(w.root_action);
  CHECK(actions.size() == all.size());

  // multiplication agrees with action composition through generators
  for (const auto& w : all)
    for (int i = 1; i <= 2; ++i) {
      WeylElement ws = multiply(b2, w, simple_reflection(b2, i));
      WeylElement again = from_word(b2, [&] {
        std::vector<int> word = w.word;
        word.push_back(i);
        return word;
      }());
      CHECK(ws == again);
    }
}

TEST_CASE("from_positive_system inverts the action on positive systems") {
  for (char t : {'A', 'B'}) {
    RootSystem rs = build_root_system(t, 2);
    for (const auto& w : enumerate_weyl_group(rs)) {
      std::vector<SignedRoot> image;
      for (int k = 0; k < rs.num_positive_roots(); ++k) image.push_back(w.root_action[k]);
      WeylElement back = from_positive_system(rs, image);
      CHECK(back == w);
    }
  }
}
