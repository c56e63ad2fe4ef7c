#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cat0/tree.hpp"

using namespace cat0;

namespace {

// Brute-force wing oracle: count caret positions on the two spines.
std::pair<std::int64_t, std::int64_t> wings_by_positions(const Tree& t) {
  std::int64_t lw = 0, rw = 0;
  for (const CaretPosition& p : caret_positions(t)) {
    if (p.index == 1) ++lw;
    if (p.index == (1ull << p.depth)) ++rw;
  }
  return {lw, rw};
}

}  // namespace

TEST_CASE("grammar round trip") {
  CHECK(Tree::wedge().str() == "(**)");
  CHECK(left_snake(2).str() == "((**)*)");
  CHECK(Tree::parse("((**)*)") == left_snake(2));
  CHECK(Tree::parse("*") == Tree());
  for (int n = 0; n <= 5; ++n)
    for (const Tree& t : all_trees(n)) CHECK(Tree::parse(t.str()) == t);
  CHECK_THROWS(Tree::parse("(*"));
  CHECK_THROWS(Tree::parse("(**)*"));
}

TEST_CASE("glue basics") {
  CHECK(glue(Tree(), {1}, {Tree::wedge()}) == Tree::wedge());
  for (int k = 1; k <= 6; ++k) {
    CHECK(glue_caret(left_snake(k - 1), 1) == left_snake(k));
    std::vector<int> all;
    for (int i = 1; i <= (1 << (k - 1)); ++i) all.push_back(i);
    CHECK(glue_carets(full_tree(k - 1), all) == full_tree(k));
  }
  for (const Tree& t : all_trees(4)) {
    CHECK(glue(Tree::wedge(), {1, 2}, {t.left(), t.right()}) == t);
  }
  CHECK_THROWS_AS(glue_caret(Tree::wedge(), 3), std::out_of_range);
}

TEST_CASE("wings against the position oracle") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(left_wing(left_snake(n)) == n);
    CHECK(right_wing(left_snake(n)) == 1);
    CHECK(left_wing(full_tree(n)) == n);
    CHECK(right_wing(full_tree(n)) == n);
  }
  Tree t = glue_caret(right_snake(2), 2);  // R_2 ⊕^2
  auto [lw, rw] = wings_by_positions(t);
  CHECK(left_wing(t) == lw);
  CHECK(right_wing(t) == rw);
  for (const Tree& u : all_trees(5)) {
    auto [l, r] = wings_by_positions(u);
    CHECK(left_wing(u) == l);
    CHECK(right_wing(u) == r);
  }
}

TEST_CASE("free and blocked carets") {
  for (int n = 1; n <= 8; ++n)
    for (const Tree& t : all_trees(n)) CHECK(free_caret_count(t) == blocked_caret_count(t) + 1);
  CHECK(free_caret_count(Tree()) == 0);
}

TEST_CASE("truncate") {
  CHECK(LongSnake::leftmost().truncate(3) == left_snake(3));
  for (int k = 0; k <= 5; ++k) CHECK(truncate(full_tree(9), k) == full_tree(k));
  Tree lr2 = tree_union(left_snake(2), right_snake(2));
  ClosedTree quad = ClosedTree::from_snakes({LongSnake::leftmost(), LongSnake::rightmost()});
  CHECK(quad.truncate(2) == lr2);
  CHECK(quad.truncate(2).size() == 3);
  // Truncation of a long snake has exactly k carets.
  LongSnake alt({}, {Dir::L, Dir::R});
  for (int k = 0; k <= 9; ++k) {
    CHECK(alt.truncate(k).size() == k);
    CHECK(free_caret_count(alt.truncate(k)) <= 1);
  }
}

TEST_CASE("drop_head shifts the defining word") {
  CHECK(LongSnake::leftmost().drop_head(0) == LongSnake::leftmost());
  CHECK(LongSnake::leftmost().drop_head(5) == LongSnake::leftmost());
  LongSnake alt({}, {Dir::L, Dir::R});
  LongSnake shifted = alt.drop_head(1);
  for (int d = 0; d < 8; ++d) CHECK(shifted.step(d) == alt.step(d + 1));
}

TEST_CASE("long snake word grammar") {
  CHECK(LongSnake::parse("L*") == LongSnake::leftmost());
  CHECK(LongSnake::parse("(LR)*").str() == "(LR)*");
  CHECK(LongSnake::parse("LRL*").prefix().size() == 2);
  CHECK(LongSnake::parse("LLL*") == LongSnake::leftmost());
  CHECK_THROWS(LongSnake::parse("LR"));
}

TEST_CASE("tree to partition") {
  CHECK(tree_to_partition(Tree()) == std::vector<Dyadic>{Dyadic(0), Dyadic(1)});
  CHECK(tree_to_partition(Tree::wedge()) == std::vector<Dyadic>{Dyadic(0), Dyadic(1, 1), Dyadic(1)});
  CHECK(tree_to_partition(left_snake(2)) ==
        std::vector<Dyadic>{Dyadic(0), Dyadic(1, 2), Dyadic(1, 1), Dyadic(1)});
  for (int n = 0; n <= 8; ++n)
    for (const Tree& t : all_trees(n)) CHECK(tree_from_partition(tree_to_partition(t)) == t);
  CHECK_THROWS(tree_from_partition({Dyadic(0), Dyadic(3, 2), Dyadic(1)}));
}

TEST_CASE("positions round trip and gluing validation") {
  for (int n = 0; n <= 6; ++n)
    for (const Tree& t : all_trees(n)) CHECK(tree_from_positions(caret_positions(t)) == t);
  // An orphan caret at depth 1 without its parent violates the gluing rule.
  CHECK_THROWS(tree_from_positions({CaretPosition{1, 1}}));
  CHECK(full_tree(3) ==
        tree_from_positions({{0, 1}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {2, 4}}));
}

TEST_CASE("termination") {
  std::vector<Tree> stars{Tree(), Tree(), Tree()};
  CHECK(termination(stars) == stars);
  std::vector<Tree> wedge_star{Tree::wedge(), Tree()};
  CHECK(termination(wedge_star) == wedge_star);
  CHECK(termination({left_snake(2), right_snake(2)}) ==
        std::vector<Tree>{Tree::wedge(), Tree(), Tree(), Tree::wedge()});

  // Oracle: leaves k,k+1 share a caret in the output iff they do in the input.
  auto shares = [](const std::vector<Tree>& seq) {
    std::set<int> out;
    int base = 0;
    for (const Tree& t : seq) {
      for (int p : free_caret_leaf_pairs(t)) out.insert(base + p);
      base += static_cast<int>(t.leaf_count());
    }
    return out;
  };
  for (const Tree& a : all_trees(3))
    for (const Tree& b : all_trees(2)) {
      std::vector<Tree> seq{a, b};
      auto term = termination(seq);
      CHECK(shares(term) == shares(seq));
      for (const Tree& t : term) CHECK(t.size() <= 1);
    }
}

TEST_CASE("left approximation") {
  auto a = left_approximation(left_snake(5));
  CHECK(a.steps == 1);
  CHECK(a.chain == std::vector<Tree>{left_snake(5)});

  Tree l4p = glue_all(left_snake(4));  // L_4 ⊕
  auto b = left_approximation(l4p);
  CHECK(b.steps == 2);
  CHECK(b.chain == std::vector<Tree>{left_snake(5), l4p});

  auto c = right_approximation(l4p);
  CHECK(c.steps == 5);
  CHECK(c.chain.front() == right_snake(2));
  CHECK(c.chain[1] == full_tree(2));
  CHECK(c.chain.back() == l4p);

  // Chain invariants: strictly increasing, inside T, at most doubling.
  for (const Tree& t : all_trees(6)) {
    auto ch = left_approximation(t);
    CHECK(ch.chain.back() == t);
    for (size_t i = 0; i + 1 < ch.chain.size(); ++i) {
      CHECK(tree_subset(ch.chain[i], ch.chain[i + 1]));
      CHECK(ch.chain[i].size() < ch.chain[i + 1].size());
      CHECK(tree_subset(ch.chain[i + 1], t));
      CHECK(ch.chain[i + 1].size() <= 2 * ch.chain[i].size());
    }
  }
}

TEST_CASE("median and set algebra") {
  for (const Tree& t : all_trees(3))
    for (const Tree& u : all_trees(2)) {
      CHECK(tree_median(t, t, u) == t);
      CHECK(tree_subset(tree_intersect(t, u), tree_union(t, u)));
      CHECK(sym_diff_size(t, u) == t.size() + u.size() - 2 * tree_intersect(t, u).size());
    }
  CHECK(tree_median(left_snake(2), right_snake(2), Tree::wedge()) == Tree::wedge());
}

TEST_CASE("closed trees") {
  ClosedTree full = ClosedTree::full();
  for (int k = 0; k <= 4; ++k) CHECK(full.truncate(k) == full_tree(k));
  ClosedTree sub = ClosedTree::full_minus({{Dir::R, Dir::L}});
  CHECK(sub.contains({}));
  CHECK(sub.contains({Dir::L, Dir::L, Dir::L}));
  CHECK(!sub.contains({Dir::R, Dir::L}));
  CHECK(!sub.contains({Dir::R, Dir::L, Dir::R}));
  CHECK(sub.contains({Dir::R, Dir::R}));
  // Truncations of a closed tree never expose the deleted region.
  Tree t3 = sub.truncate(3);
  CHECK(!contains_position(t3, position_of_path({Dir::R, Dir::L})));
  CHECK(contains_position(t3, position_of_path({Dir::R, Dir::R})));
}

TEST_CASE("deep trees refuse positional enumeration") {
  Tree t = left_snake(80);
  CHECK(t.size() == 80);
  CHECK(left_wing(t) == 80);
  CHECK_THROWS_AS(caret_positions(t), std::domain_error);
}
