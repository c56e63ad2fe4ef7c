#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cat0/dyadic.hpp"

namespace cat0 {

/// Position of a caret in the full binary tree: depth k >= 0, index in [1, 2^k].
/// Ordered lexicographically by (depth, index). Only usable at desk scale
/// (depth <= 62); deep trees keep the structural form and never enumerate
/// positions.
struct CaretPosition {
  int depth = 0;
  std::uint64_t index = 1;

  friend bool operator==(const CaretPosition&, const CaretPosition&) = default;
  friend auto operator<=>(const CaretPosition&, const CaretPosition&) = default;

  CaretPosition left_child() const { return {depth + 1, 2 * index - 1}; }
  CaretPosition right_child() const { return {depth + 1, 2 * index}; }
  CaretPosition parent() const { return {depth - 1, (index + 1) / 2}; }
  bool is_root() const { return depth == 0; }
  std::string str() const;
};

/// Finite rooted ordered binary tree, stored structurally as a set of carets.
/// Immutable value type; empty tree is "*", the one-caret tree is "^".
/// Subtrees are shared, so unions/compositions of large trees stay cheap.
class Tree {
 public:
  Tree() = default;  // the empty tree *

  static Tree caret(Tree left, Tree right);
  static Tree leaf() { return Tree(); }
  /// The one-caret tree ^.
  static Tree wedge() { return caret(Tree(), Tree()); }

  bool empty() const { return node_ == nullptr; }
  /// |T|: number of carets.
  std::int64_t size() const;
  std::int64_t leaf_count() const { return size() + 1; }
  int depth() const;

  const Tree& left() const;
  const Tree& right() const;

  std::size_t hash() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
  /// Total order (structural); used for canonical sorting, not geometry.
  friend bool operator<(const Tree& a, const Tree& b);

  /// Text grammar: leaf = "*", caret = "(" Tree Tree ")".
  std::string str() const;
  static Tree parse(const std::string& text);

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct TreeHash {
  std::size_t operator()(const Tree& t) const { return t.hash(); }
};

// ---- named trees -----------------------------------------------------------

/// Leftmost snake of depth n.
Tree left_snake(int n);
/// Rightmost snake of depth n.
Tree right_snake(int n);
/// Full tree of depth n.
Tree full_tree(int n);

// ---- set algebra on caret sets (all aligned at the root) -------------------

Tree tree_union(const Tree& a, const Tree& b);
Tree tree_intersect(const Tree& a, const Tree& b);
bool tree_subset(const Tree& a, const Tree& b);
std::int64_t sym_diff_size(const Tree& a, const Tree& b);
/// (T ∩ S) ∪ (T ∩ U) ∪ (S ∩ U): the median of three trees.
Tree tree_median(const Tree& t, const Tree& s, const Tree& u);

// ---- leaves and gluing ------------------------------------------------------

/// Attach Bs[i] at the leaf of A indexed by the i-th element of I (1-based,
/// strictly increasing). Throws on out-of-range indices.
Tree glue(const Tree& a, const std::vector<int>& leaves, const std::vector<Tree>& bs);
/// Attach one caret at each leaf in I.
Tree glue_carets(const Tree& a, const std::vector<int>& leaves);
/// Attach one caret at leaf k.
Tree glue_caret(const Tree& a, int leaf);
/// T ⊕: attach a caret at every leaf.
Tree glue_all(const Tree& a);

/// Subtree of T rooted at the given leaf of the base tree `base` (base ⊆ T).
/// Component k (1-based) of the lantern decomposition.
Tree subtree_at_leaf(const Tree& t, const Tree& base, int leaf);

/// Number of free carets ||T|| (both children leaves).
std::int64_t free_caret_count(const Tree& t);
/// Number of blocked carets (no child a leaf).
std::int64_t blocked_caret_count(const Tree& t);
/// 1-based leaf index pairs (k, k+1) that are the two children of a free
/// caret, in left-to-right order.
std::vector<int> free_caret_leaf_pairs(const Tree& t);

/// Left wing size |T ∩ L_inf| and right wing size |T ∩ R_inf|.
std::int64_t left_wing(const Tree& t);
std::int64_t right_wing(const Tree& t);

/// τ ∩ T_k: drop all carets at depth >= k.
Tree truncate(const Tree& t, int k);

// ---- positions (desk scale only) -------------------------------------------

/// Sorted caret positions. Throws if depth(t) > 62.
std::vector<CaretPosition> caret_positions(const Tree& t);
/// Leaf positions (vertices of the full tree), left to right. The i-th entry
/// is the vertex of the i-th leaf. Throws if depth(t) > 61.
std::vector<CaretPosition> leaf_positions(const Tree& t);
/// Rebuild a tree from caret positions, validating the gluing condition.
Tree tree_from_positions(const std::vector<CaretPosition>& positions);
/// Whether position p is a caret of t.
bool contains_position(const Tree& t, const CaretPosition& p);

// ---- partitions (Lemma-style bijection with standard partitions) -----------

/// Breakpoints 0 = x_0 < ... < x_{n+1} = 1 of the standard partition whose
/// intervals correspond to T's leaves.
std::vector<Dyadic> tree_to_partition(const Tree& t);
/// Inverse of tree_to_partition; validates that the input is a standard
/// partition of [0,1].
Tree tree_from_partition(const std::vector<Dyadic>& breakpoints);

// ---- sequences --------------------------------------------------------------

/// Termination of a sequence of trees: each entry * or ^, preserving exactly
/// which adjacent leaves share a caret.
std::vector<Tree> termination(const std::vector<Tree>& seq);

struct ApproximationChain {
  std::vector<Tree> chain;  // strictly increasing, last = T
  int steps = 0;            // m = chain.size()
};
/// Approximation from the left wing: T_1 = T ∩ L_inf, then greedy maximal
/// caret batches inside T.
ApproximationChain left_approximation(const Tree& t);
/// Mirror variant starting from the right wing.
ApproximationChain right_approximation(const Tree& t);

// ---- long snakes and closed trees -------------------------------------------

enum class Dir : std::uint8_t { L = 0, R = 1 };

/// Eventually periodic infinite descent word: an infinite tree with exactly
/// one caret per depth.
class LongSnake {
 public:
  LongSnake(std::vector<Dir> prefix, std::vector<Dir> period);

  /// Constant words L_inf / R_inf.
  static LongSnake leftmost() { return LongSnake({}, {Dir::L}); }
  static LongSnake rightmost() { return LongSnake({}, {Dir::R}); }

  Dir step(std::int64_t depth) const;
  const std::vector<Dir>& prefix() const { return prefix_; }
  const std::vector<Dir>& period() const { return period_; }

  /// σ ∩ T_k: the snake with k carets along the word.
  Tree truncate(int k) const;
  /// σ[[k]]: the long snake below the first k carets.
  LongSnake drop_head(std::int64_t k) const;

  /// Depth of the deepest caret shared with T, i.e. |T ∩ σ|.
  std::int64_t shared_carets(const Tree& t) const;

  friend bool operator==(const LongSnake& a, const LongSnake& b);

  /// Word grammar: prefix over {L,R}, optional periodic tail "(word)*" or a
  /// single trailing "X*". "L*" is the leftmost long snake.
  std::string str() const;
  static LongSnake parse(const std::string& text);

 private:
  void canonicalize();
  std::vector<Dir> prefix_, period_;
};

/// Infinite tree with no free caret, as a finite union of generators:
/// long snakes, and "cones" (a full subtree hanging below a vertex, together
/// with the path from the root). Closed under everything the boundary
/// machinery produces (profiles of finite-frontier flows, deleted-subtree
/// complements).
class ClosedTree {
 public:
  struct Cone {
    std::vector<Dir> path;  // vertex below which the full subtree is kept
  };

  static ClosedTree from_snakes(std::vector<LongSnake> snakes);
  static ClosedTree full() { return from_cones({Cone{{}}}); }
  static ClosedTree from_cones(std::vector<Cone> cones);
  /// Full tree minus the subtrees rooted at the given vertices.
  static ClosedTree full_minus(const std::vector<std::vector<Dir>>& deleted_roots);

  ClosedTree& add_snake(LongSnake s);
  ClosedTree& add_cone(Cone c);

  bool contains(const std::vector<Dir>& vertex_path) const;
  Tree truncate(int k) const;
  const std::vector<LongSnake>& snakes() const { return snakes_; }
  const std::vector<Cone>& cones() const { return cones_; }

 private:
  std::vector<LongSnake> snakes_;
  std::vector<Cone> cones_;
};

/// Path from the root to a caret position (desk scale).
std::vector<Dir> path_of_position(const CaretPosition& p);
CaretPosition position_of_path(const std::vector<Dir>& path);

/// Enumerate every tree with exactly n carets (Catalan many); test and
/// search utility.
std::vector<Tree> all_trees(int n);

}  // namespace cat0
