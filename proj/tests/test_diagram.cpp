#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cat0/diagram.hpp"

using namespace cat0;

namespace {

// Deterministic pool of group elements: random short products of the
// standard generators and their inverses.
std::vector<Diagram> element_pool(int count, unsigned seed, int max_len = 6) {
  std::mt19937 rng(seed);
  std::vector<Diagram> gens{gen_x0(), invert(gen_x0()), gen_x1(), invert(gen_x1())};
  std::vector<Diagram> out;
  while (static_cast<int>(out.size()) < count) {
    Diagram acc = Diagram::identity();
    int len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i) acc = compose(gens[rng() % gens.size()], acc);
    out.push_back(reduce(acc));
  }
  return out;
}

std::vector<Diagram> all_degree1(int carets) {
  std::vector<Diagram> out;
  for (const Tree& t : all_trees(carets))
    for (const Tree& s : all_trees(carets)) out.emplace_back(t, std::vector<Tree>{s});
  return out;
}

}  // namespace

TEST_CASE("construction validates leaf balance and caret counting") {
  CHECK_THROWS(Diagram(Tree::wedge(), {Tree()}));
  Diagram d(full_tree(2), {Tree(), Tree::wedge(), Tree()});
  // |head| = (n-1) + sum |parts|
  CHECK(d.head().size() == d.degree() - 1 + 1);
  for (const Diagram& g : element_pool(10, 7)) {
    std::int64_t parts = 0;
    for (const Tree& p : g.parts()) parts += p.size();
    CHECK(g.head().size() == g.degree() - 1 + parts);
  }
}

TEST_CASE("reduce removes the removable pair") {
  CHECK(reduce(Diagram(Tree::wedge(), {Tree::wedge()})) == Diagram::identity());
  for (const Diagram& g : element_pool(20, 11)) {
    CHECK(reduce(reduce(g)) == reduce(g));
    CHECK(reduce(g).is_reduced());
  }
}

TEST_CASE("reduce is confluent: adding a caret anywhere and reducing returns the original") {
  for (const Tree& t : all_trees(3)) {
    for (const Tree& s : all_trees(3)) {
      Diagram d = reduce(Diagram(t, {s}));
      for (int k = 1; k <= d.head().leaf_count(); ++k) CHECK(reduce(add_caret(d, k)) == d);
    }
  }
}

TEST_CASE("reduce is confluent under arbitrary removal orders") {
  // Exhaustively peel removable pairs in every order on small diagrams and
  // compare against reduce(); diagrams with <= 8 carets from padded pool.
  std::function<void(const Diagram&, const Diagram&)> peel = [&](const Diagram& d, const Diagram& target) {
    bool any = false;
    auto head_pairs = free_caret_leaf_pairs(d.head());
    for (int k : head_pairs) {
      // A removable pair needs leaves (k, k+1) to be a free caret on both sides.
      auto [part, local] = d.locate_right_leaf(k);
      auto [part2, local2] = d.locate_right_leaf(k + 1);
      if (part != part2) continue;
      auto rp = free_caret_leaf_pairs(d.parts()[static_cast<size_t>(part - 1)]);
      if (std::find(rp.begin(), rp.end(), local) == rp.end()) continue;
      any = true;
      // Remove this pair by rebuilding both sides from partitions of the cut.
      Diagram cutd = reduce(d);
      (void)cutd;
      // Direct surgery: glue the pair away via tree reconstruction.
      auto peel_pair = [&](const Tree& tree, int leaf) {
        auto leaves = leaf_positions(tree);
        auto pos = leaves[static_cast<size_t>(leaf - 1)].parent();
        auto carets = caret_positions(tree);
        carets.erase(std::remove(carets.begin(), carets.end(), pos), carets.end());
        return tree_from_positions(carets);
      };
      std::vector<Tree> parts = d.parts();
      parts[static_cast<size_t>(part - 1)] = peel_pair(parts[static_cast<size_t>(part - 1)], local);
      Diagram next(peel_pair(d.head(), k), std::move(parts));
      peel(next, target);
    }
    if (!any) CHECK(d == target);
  };
  for (const Diagram& raw : all_degree1(2)) {
    Diagram padded = add_caret(raw, 1);
    peel(padded, reduce(padded));
  }
}

TEST_CASE("compose basics") {
  Diagram g = elem_sqrt5();
  CHECK(compose(Diagram::identity(), g) == reduce(g));
  CHECK(compose(g, invert(g)) == Diagram::identity());
  for (const Diagram& f : element_pool(15, 3)) {
    CHECK(compose(f, invert(f)) == Diagram::identity());
    CHECK(invert(invert(f)) == f);
  }
  CHECK(invert(Diagram::identity()) == Diagram::identity());
  CHECK(invert(gen_x0()) == Diagram(right_snake(2), {left_snake(2)}));
}

TEST_CASE("composition agrees with exact PL composition") {
  // g o f as diagrams vs exact PL arithmetic, on every pair from a pool.
  auto pool = element_pool(12, 19);
  for (const Diagram& f : pool)
    for (const Diagram& g : pool) {
      Diagram comp = compose(f, g);
      PLMap expect = pl_compose(to_pl(reduce(f)), to_pl(reduce(g)));
      CHECK(to_pl(comp) == expect);
      CHECK(diagram_from_pl(expect) == comp);
    }
}

TEST_CASE("composition result is independent of padding") {
  Diagram f = gen_x0(), g = gen_x1();
  Diagram base = compose(f, g);
  for (int k = 1; k <= f.head().leaf_count(); ++k)
    for (int l = 1; l <= g.head().leaf_count(); ++l)
      CHECK(compose(add_caret(f, k), add_caret(g, l)) == base);
}

TEST_CASE("cut") {
  Diagram d(left_snake(7), {right_snake(3), Tree::wedge(), Tree::wedge()});
  Diagram c = cut(d, {1, 3});
  CHECK(c == Diagram(left_snake(7), {Tree(), right_snake(2), Tree::wedge(), Tree(), Tree()}));

  Diagram d2(full_tree(2), {Tree(), Tree::wedge(), Tree()});
  Diagram c2 = cut(d2, {1, 2});
  CHECK(c2 == Diagram(glue_caret(full_tree(2), 1), {Tree(), Tree(), Tree(), Tree(), Tree()}));

  CHECK(cut(d, {}) == d);
  CHECK_THROWS_AS(cut(d, {4}), std::out_of_range);
  // Degree grows by |J|.
  CHECK(c.degree() == d.degree() + 2);
}

TEST_CASE("cut matches the slope-doubling composition") {
  for (const Diagram& g : element_pool(8, 23)) {
    int n = g.degree();
    std::vector<std::vector<int>> choices{{1}, {n}, {}};
    if (n >= 2) choices.push_back({1, 2});
    for (const auto& js : choices) {
      if (js.empty() && n < 1) continue;
      PLMap lhs = to_pl(cut(g, js));
      PLMap rhs = pl_compose(to_pl(g), slope_doubling_map(n, js));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("to_pl and end slopes") {
  CHECK(to_pl(Diagram::identity()) == PLMap::identity());
  CHECK(end_slopes(Diagram::identity()) == std::pair<std::int64_t, std::int64_t>{0, 0});

  PLMap m = to_pl(gen_x0());
  // slopes 2, 1, 1/2 over [0,1/4],[1/4,1/2],[1/2,1]
  CHECK(m(Dyadic(1, 2)) == Dyadic(1, 1));
  CHECK(m(Dyadic(1, 1)) == Dyadic(3, 2));
  CHECK(end_slopes(gen_x0()) == std::pair<std::int64_t, std::int64_t>{1, -1});

  // Degree-3 example: [0,1/4]->[0,1], [1/4,1/2]->[1,3/2], [1/2,3/4]->[3/2,2], [3/4,1]->[2,3]
  Diagram fig(full_tree(2), {Tree(), Tree::wedge(), Tree()});
  PLMap fm = to_pl(fig);
  CHECK(fm(Dyadic(1, 2)) == Dyadic(1));
  CHECK(fm(Dyadic(1, 1)) == Dyadic(3, 1));
  CHECK(fm(Dyadic(3, 2)) == Dyadic(2));
  CHECK(diagram_from_pl(fm) == reduce(fig));
}

TEST_CASE("diagram_from_pl round trips") {
  CHECK(diagram_from_pl(PLMap::identity()) == Diagram::identity());
  for (const Diagram& g : element_pool(30, 29)) {
    CHECK(diagram_from_pl(to_pl(g)) == g);
  }
  CHECK_THROWS(diagram_from_pl(PLMap({Dyadic(0), Dyadic(1, 2), Dyadic(1)},
                                     {Dyadic(0), Dyadic(3, 2), Dyadic(1)})));
}

TEST_CASE("is_irreducible") {
  CHECK(!is_irreducible(Diagram::identity()));
  CHECK(is_irreducible(gen_x0()));
  CHECK(is_irreducible(elem_sqrt5()));
  // x1 is supported on [0,1/2] (identity on [1/2,1]); mirror fixes [0,1/2].
  CHECK(!is_irreducible(gen_x1()));
  CHECK(fixes_interval(gen_x1(), Dyadic(1, 1), Dyadic(1)));
  Diagram block(right_snake(3), {glue_caret(right_snake(2), 2)});
  CHECK(!is_irreducible(block));
  CHECK(fixes_interval(block, Dyadic(0), Dyadic(1, 1)));
}

TEST_CASE("power") {
  Diagram g = elem_sqrt5();
  CHECK(power(g, 0) == Diagram::identity());
  CHECK(power(g, 1) == g);
  CHECK(power(g, -1) == invert(g));
  // g^n = (L_{2n+1}, R_{n+1} plus carets at leaves 2..n+1)
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> leaves;
    for (int i = 2; i <= n + 1; ++i) leaves.push_back(i);
    Diagram expect(left_snake(2 * n + 1), {glue_carets(right_snake(n + 1), leaves)});
    CHECK(power(g, n) == expect);
  }
  // end_slopes are additive along powers for irreducible elements.
  auto [a, b] = end_slopes(g);
  for (int n = 1; n <= 20; ++n) {
    auto [an, bn] = end_slopes(power(g, n));
    CHECK(an == n * a);
    CHECK(bn == n * b);
  }
  // The unreduced iteration keeps the same function.
  for (int n = 1; n <= 4; ++n) CHECK(reduce(power_unreduced(g, n)) == power(g, n));
}

TEST_CASE("norms") {
  CHECK(norms(Diagram::identity()).total == 0);
  Norms n = norms(gen_x0());
  CHECK(n.total == 4);
  CHECK(n.left == 2);
  CHECK(n.right == 2);
  CHECK_THROWS(norms(Diagram(Tree::wedge(), {Tree::wedge()})));
  for (const Diagram& g : element_pool(10, 31)) {
    Norms m = norms(g);
    CHECK(m.total == m.left + m.right);
  }
}

TEST_CASE("end slopes of g and invert(g) are negatives") {
  for (const Diagram& g : element_pool(20, 37)) {
    auto [a, b] = end_slopes(g);
    auto [ia, ib] = end_slopes(invert(g));
    CHECK(a == -ia);
    CHECK(b == -ib);
  }
}

TEST_CASE("diagram text form") {
  Diagram d(left_snake(2), {Tree(), Tree::wedge()});
  CHECK(Diagram::parse(d.str()) == d);
  CHECK(Diagram::parse("[ ((**)*) | * , (**) ]") == d);
  CHECK_THROWS(Diagram::parse("((**)*)"));
}
