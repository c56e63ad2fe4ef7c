#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cat0/diagram.hpp"
#include "cat0/tree.hpp"

namespace cat0 {

/// Floating-point tolerance used throughout the geometry: combinatorial data
/// is exact, only lengths carry square roots.
inline constexpr double kGeomEps = 1e-12;

/// A point of the cube complex: a diagram plus one coordinate in [0,1] per
/// right-side slot. Normal form has the diagram reduced and all coordinates
/// strictly below 1 (coordinate-1 slots are promoted through cutting).
struct Point {
  Diagram diagram = Diagram::identity();
  std::vector<double> coords;  // size == diagram.degree()

  static Point vertex(const Diagram& d);
  static Point tree_vertex(const Tree& t);
  /// T[t_1, ..., t_{|T|+1}] — a generalized tree.
  static Point tree_point(const Tree& mother, std::vector<double> coords);
  static Point origin() { return vertex(Diagram::identity()); }

  bool in_trees() const { return diagram.is_tree_vertex(); }
  bool is_vertex(double eps = kGeomEps) const;
  /// Mother of a point of 𝒯 (the head tree of the normal form).
  const Tree& mother() const { return diagram.head(); }

  Point normalized(double eps = kGeomEps) const;
  bool same_point(const Point& other, double eps = kGeomEps) const;

  std::string str() const;
  static Point parse(const std::string& text);
};

// ---- exact metric on the Trees subcomplex -----------------------------------

/// Exact CAT(0) distance between two points of 𝒯, by lantern recursion plus
/// the root-caret wedge formula d(*[t], y) = (1-t) + sqrt(d(O,y_l)^2 + d(O,y_r)^2).
/// Throws if either point is not in 𝒯.
double tree_distance(const Point& x, const Point& y);

/// d(O, T) for a tree vertex.
double origin_distance(const Tree& t);

/// sqrt(sum d(A_k, B_k)^2) over the |T|+1 leaves of the lantern base.
double lantern_distance(const Tree& base, const std::vector<Point>& as, const std::vector<Point>& bs);

// ---- 1-skeleton combinatorics -----------------------------------------------

/// Median (combinatorial) distance in Trees: |T Δ S|.
std::int64_t tree_median_distance(const Tree& t, const Tree& s);

struct SearchResult {
  std::int64_t distance = -1;
  bool budget_exceeded = false;
  std::int64_t expanded = 0;
};

/// Lazy best-first search over the implicit 1-skeleton of X (vertices are
/// reduced diagrams, edges cut/glue moves). The priority uses the admissible
/// one-caret-per-move bound between tree vertices and plain breadth order
/// otherwise.
SearchResult median_distance_search(const Diagram& a, const Diagram& b, std::int64_t budget = 1000000);

/// Same search restricted to the subcomplex 𝒯 (add a caret / remove a free
/// caret).
SearchResult tree_graph_search(const Tree& a, const Tree& b, std::int64_t budget = 1000000);

/// The 2n-1 neighbors of a reduced degree-n vertex: n cuts, n-1 gluings.
std::vector<Diagram> neighbors(const Diagram& v);

/// Neighbors of T inside 𝒯: add a caret at each leaf, remove each free caret.
std::vector<Tree> tree_neighbors(const Tree& t);

// ---- cubes and links ----------------------------------------------------------

/// Maximal cube C(g) of a reduced degree-n diagram: 2^n vertices g[J].
struct MaximalCube {
  Diagram base;
  int dim = 0;
  /// Vertex at characteristic vector J (1-based positions, increasing).
  Diagram vertex(const std::vector<int>& j) const;
  /// Face C(g | I1, I2): all g[J] with I1 ⊆ J ⊆ I2.
  std::vector<Diagram> face(const std::vector<int>& i1, const std::vector<int>& i2) const;
  std::vector<Diagram> all_vertices() const;
};
MaximalCube maximal_cube(const Diagram& g);

/// An edge at a vertex of the link: a cut e_j or a gluing e_{k,k+1}.
struct LinkEdge {
  bool is_glue = false;
  int index = 1;  // j for cuts, k for gluings (covers positions k, k+1)
};

/// Lemma-style link condition: the edges span a simplex iff their subscript
/// sets are pairwise disjoint in [n].
bool link_simplex_check(const Diagram& v, const std::vector<LinkEdge>& edges);

/// Room separation inside a cube with respect to an interior point x.
struct RoomReport {
  bool separated = false;
  std::string label_u, label_v;  // one of "<= >="; per coordinate
};
RoomReport rooms(std::span<const double> x, std::span<const double> u, std::span<const double> v);

// ---- rays, embeddings, projections --------------------------------------------

/// Point at arc length t >= 0 along the snake geodesic of σ.
Point snake_point(const LongSnake& s, double t);

/// Hyperplane coordinates of a point of 𝒯: carets of the mother map to 1,
/// fractional leaf slots to their coordinate, everything else 0.
std::map<CaretPosition, double> embed_l2(const Point& x);
double embed_distance(const std::map<CaretPosition, double>& a, const std::map<CaretPosition, double>& b);

/// Visual projection of any point of X onto 𝒯.
Point project_to_trees(const Point& x);

/// Projection of a point of 𝒯 onto the snake ray of σ.
Point project_to_snake(const Point& x, const LongSnake& s);

/// Certified bounds from the wing lemmas: an upper bound for d(O, T) via the
/// left-wing approximation chain, and the lower bound
/// sqrt(lw(T)^2 + rw(S)^2) for a reduced degree-1 vertex (T, S).
double wing_distance_upper(const Tree& t);
double wing_distance_lower(const Diagram& d);

// ---- certified distance brackets ----------------------------------------------

struct DistanceBracket {
  double lower = 0;
  double upper = 0;
  int level = 0;        // subdivision refinement level reached
  bool converged = true;
  double width() const { return upper - lower; }
  bool contains(double v, double slack = 1e-9) const { return lower - slack <= v && v <= upper + slack; }
};

/// Certified enclosure of d(x, y). Exact (zero width) when both points lie in
/// 𝒯; otherwise the lower bound is the Euclidean distance of hyperplane
/// embeddings over Conv[x,y] and the upper bound a shortest path through the
/// k-subdivision grid of its cubes, with k doubling per refinement until the
/// width reaches tol or the node budget is exhausted (flagged).
DistanceBracket distance_bracket(const Point& x, const Point& y, double tol = 1e-3,
                                 std::int64_t budget = 1000000, bool trees_only = false);

}  // namespace cat0
