#pragma once

#include <string>
#include <vector>

#include "cat0/dyadic.hpp"
#include "cat0/tree.hpp"

namespace cat0 {

/// Tree-list diagram (T, T_1, ..., T_n): a head tree whose leaf count equals
/// the total leaf count of the parts. Degree n = parts.size(). Degree-1
/// diagrams are the elements of Thompson's group F; the identity is (*, *).
class Diagram {
 public:
  Diagram(Tree head, std::vector<Tree> parts);

  static Diagram identity() { return Diagram(Tree(), {Tree()}); }
  /// A tree T viewed as the vertex (T, *, ..., *) with |T|+1 empty parts.
  static Diagram from_tree(const Tree& t);

  const Tree& head() const { return head_; }
  const std::vector<Tree>& parts() const { return parts_; }
  int degree() const { return static_cast<int>(parts_.size()); }

  /// Total carets |head| + sum |parts|.
  std::int64_t total_carets() const;

  /// 1-based part index and 1-based local leaf for a global right-side leaf.
  std::pair<int, int> locate_right_leaf(int leaf) const;
  /// Global right-side leaf index of the first leaf of part i (1-based).
  int part_first_leaf(int part) const;

  bool is_tree_vertex() const;  // all parts empty
  bool is_reduced() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.head_ == b.head_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b);

  std::size_t hash() const;

  /// "[ HEAD | PART , PART , ... ]" in the tree grammar.
  std::string str() const;
  static Diagram parse(const std::string& text);

 private:
  Tree head_;
  std::vector<Tree> parts_;
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const { return d.hash(); }
};

/// The unique reduced representative of the diagram's equivalence class.
Diagram reduce(const Diagram& d);

/// Add a caret at global leaf k on both sides (equivalence move (a)).
Diagram add_caret(const Diagram& d, int leaf);

/// Diagram of g∘f in graphical order: pad f = (T,S) and g's head to the
/// union tree, then join. f must have degree 1.
Diagram compose(const Diagram& f, const Diagram& g);

/// (T,S) -> (S,T); degree 1 only.
Diagram invert(const Diagram& f);

/// Simultaneous cutting Δ(J); J is 1-based and strictly increasing.
Diagram cut(const Diagram& d, const std::vector<int>& js);

/// Gluing at positions (k, k+1): parts k and k+1 are joined under a new
/// caret (the reverse move of cutting). Result may be unreduced.
Diagram glue_parts(const Diagram& d, int k);

/// Reduced diagram of g^n (negative n via invert). power_unreduced skips the
/// final reduction and matches the raw iteration shapes.
Diagram power(const Diagram& g, std::int64_t n);
Diagram power_unreduced(const Diagram& g, std::int64_t n);

struct Norms {
  std::int64_t total = 0, left = 0, right = 0;
};
/// Caret counts of a reduced diagram (throws if not reduced).
Norms norms(const Diagram& d);

// ---- the piecewise-linear view ----------------------------------------------

/// Piecewise linear homeomorphism [0, a] -> [0, b] with dyadic breakpoints
/// and power-of-two slopes, in exact arithmetic.
class PLMap {
 public:
  PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images);

  static PLMap identity(const Dyadic& upto = Dyadic(1));

  const std::vector<Dyadic>& breakpoints() const { return xs_; }
  const std::vector<Dyadic>& images() const { return ys_; }
  Dyadic domain_end() const { return xs_.back(); }
  Dyadic range_end() const { return ys_.back(); }

  Dyadic operator()(const Dyadic& x) const;
  /// log2 of the slope on the segment containing x in its interior (or the
  /// first/last segment at the endpoints).
  int slope_log2_at_segment(size_t i) const;
  size_t segment_count() const { return xs_.size() - 1; }

  /// Drop breakpoints where consecutive segments share a slope.
  PLMap canonical() const;

  friend bool operator==(const PLMap& a, const PLMap& b);

  std::string str() const;
  static PLMap parse(const std::string& text);

 private:
  std::vector<Dyadic> xs_, ys_;
};

/// Exact composition g∘f (f's range must equal g's domain).
PLMap pl_compose(const PLMap& f, const PLMap& g);

/// The Thompson-like function of a diagram: k-th head leaf interval maps
/// linearly onto the k-th right-side leaf interval.
PLMap to_pl(const Diagram& d);

/// (log2 g'(0), log2 g'(1)) read combinatorially off the wings.
std::pair<std::int64_t, std::int64_t> end_slopes(const Diagram& d);

/// Interval-splitting construction of a diagram from a Thompson-like map;
/// reduce() of the result is canonical. Throws if the map is not
/// Thompson-like (non-dyadic breakpoints, slopes not powers of 2).
Diagram diagram_from_pl(const PLMap& m);

/// The slope-doubling bijection s_{n,J} : [0,n] -> [0,n+|J|] with slope 2 on
/// [j-1, j] for j in J and slope 1 elsewhere.
PLMap slope_doubling_map(int n, const std::vector<int>& js);

/// True iff the degree-1 map fixes no point of (0,1); exact per-segment
/// fixed-point solve.
bool is_irreducible(const Diagram& f);

/// Whether the degree-1 element acts as the identity on [lo, hi].
bool fixes_interval(const Diagram& f, const Dyadic& lo, const Dyadic& hi);

// ---- named elements ----------------------------------------------------------

/// First standard generator (L_2, R_2).
Diagram gen_x0();
/// Second standard generator (L_3, L_2 ⊕^2).
Diagram gen_x1();
/// The element (L_3, R_2 ⊕^2) with translation length sqrt5.
Diagram elem_sqrt5();

}  // namespace cat0
