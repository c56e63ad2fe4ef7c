#include "cat0/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cat0 {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  std::size_t h = a;
  h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::string CaretPosition::str() const {
  return "(" + std::to_string(depth) + "," + std::to_string(index) + ")";
}

struct Tree::Node {
  Tree left, right;
  std::int64_t size;
  int depth;
  std::size_t hash;
};

std::int64_t Tree::size() const { return node_ ? node_->size : 0; }
int Tree::depth() const { return node_ ? node_->depth : 0; }
std::size_t Tree::hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ull; }

Tree Tree::caret(Tree left, Tree right) {
  auto n = std::make_shared<Node>();
  n->size = left.size() + right.size() + 1;
  n->depth = std::max(left.depth(), right.depth()) + 1;
  n->hash = mix(mix(0x51ed270b, left.hash()), right.hash());
  n->left = std::move(left);
  n->right = std::move(right);
  return Tree(std::move(n));
}

const Tree& Tree::left() const {
  if (!node_) throw std::logic_error("left() on the empty tree");
  return node_->left;
}

const Tree& Tree::right() const {
  if (!node_) throw std::logic_error("right() on the empty tree");
  return node_->right;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return a.left() == b.left() && a.right() == b.right();
}

bool operator<(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return false;
  if (!a.node_) return true;
  if (!b.node_) return false;
  if (a.left() != b.left()) return a.left() < b.left();
  return a.right() < b.right();
}

std::string Tree::str() const {
  if (empty()) return "*";
  return "(" + left().str() + right().str() + ")";
}

namespace {

Tree parse_tree_at(const std::string& s, size_t& i) {
  if (i >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
  if (s[i] == '*') {
    ++i;
    return Tree();
  }
  if (s[i] != '(') throw std::invalid_argument("expected '*' or '(' at position " + std::to_string(i));
  ++i;
  Tree l = parse_tree_at(s, i);
  Tree r = parse_tree_at(s, i);
  if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected ')' at position " + std::to_string(i));
  ++i;
  return Tree::caret(std::move(l), std::move(r));
}

}  // namespace

Tree Tree::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  size_t i = 0;
  Tree t = parse_tree_at(s, i);
  if (i != s.size()) throw std::invalid_argument("trailing characters in tree literal");
  return t;
}

Tree left_snake(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = Tree::caret(t, Tree());
  return t;
}

Tree right_snake(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = Tree::caret(Tree(), t);
  return t;
}

Tree full_tree(int n) {
  Tree t;
  for (int i = 0; i < n; ++i) t = Tree::caret(t, t);
  return t;
}

Tree tree_union(const Tree& a, const Tree& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a == b) return a;
  return Tree::caret(tree_union(a.left(), b.left()), tree_union(a.right(), b.right()));
}

Tree tree_intersect(const Tree& a, const Tree& b) {
  if (a.empty() || b.empty()) return Tree();
  if (a == b) return a;
  return Tree::caret(tree_intersect(a.left(), b.left()), tree_intersect(a.right(), b.right()));
}

bool tree_subset(const Tree& a, const Tree& b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  if (a == b) return true;
  return tree_subset(a.left(), b.left()) && tree_subset(a.right(), b.right());
}

std::int64_t sym_diff_size(const Tree& a, const Tree& b) {
  if (a == b) return 0;
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  return sym_diff_size(a.left(), b.left()) + sym_diff_size(a.right(), b.right());
}

Tree tree_median(const Tree& t, const Tree& s, const Tree& u) {
  return tree_union(tree_union(tree_intersect(t, s), tree_intersect(t, u)), tree_intersect(s, u));
}

namespace {

// Attach bs[i] under the leaves listed in `leaves` (1-based, increasing).
// `next` walks the leaf numbering; `k` walks the attachment list.
Tree glue_walk(const Tree& t, const std::vector<int>& leaves, const std::vector<Tree>& bs, int& next,
               size_t& k) {
  if (t.empty()) {
    int this_leaf = next++;
    if (k < leaves.size() && leaves[k] == this_leaf) return bs[k++];
    return Tree();
  }
  Tree l = glue_walk(t.left(), leaves, bs, next, k);
  Tree r = glue_walk(t.right(), leaves, bs, next, k);
  return Tree::caret(std::move(l), std::move(r));
}

}  // namespace

Tree glue(const Tree& a, const std::vector<int>& leaves, const std::vector<Tree>& bs) {
  if (leaves.size() != bs.size()) throw std::invalid_argument("glue: |I| != |Bs|");
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] < 1 || leaves[i] > a.leaf_count()) throw std::out_of_range("glue: leaf index out of range");
    if (i > 0 && leaves[i] <= leaves[i - 1]) throw std::invalid_argument("glue: indices must increase");
  }
  int next = 1;
  size_t k = 0;
  return glue_walk(a, leaves, bs, next, k);
}

Tree glue_carets(const Tree& a, const std::vector<int>& leaves) {
  return glue(a, leaves, std::vector<Tree>(leaves.size(), Tree::wedge()));
}

Tree glue_caret(const Tree& a, int leaf) { return glue_carets(a, {leaf}); }

Tree glue_all(const Tree& a) {
  if (a.empty()) return Tree::wedge();
  return Tree::caret(glue_all(a.left()), glue_all(a.right()));
}

namespace {

const Tree* find_subtree(const Tree& t, const Tree& base, int target_leaf, int& next) {
  if (base.empty()) {
    int this_leaf = next++;
    if (this_leaf == target_leaf) return &t;
    return nullptr;
  }
  if (t.empty()) throw std::invalid_argument("subtree_at_leaf: base is not a subset of t");
  if (const Tree* r = find_subtree(t.left(), base.left(), target_leaf, next)) return r;
  return find_subtree(t.right(), base.right(), target_leaf, next);
}

}  // namespace

Tree subtree_at_leaf(const Tree& t, const Tree& base, int leaf) {
  if (leaf < 1 || leaf > base.leaf_count()) throw std::out_of_range("subtree_at_leaf: leaf out of range");
  int next = 1;
  const Tree* r = find_subtree(t, base, leaf, next);
  return r ? *r : Tree();
}

std::int64_t free_caret_count(const Tree& t) {
  if (t.empty()) return 0;
  if (t.left().empty() && t.right().empty()) return 1;
  return free_caret_count(t.left()) + free_caret_count(t.right());
}

std::int64_t blocked_caret_count(const Tree& t) {
  if (t.empty()) return 0;
  std::int64_t self = (!t.left().empty() && !t.right().empty()) ? 1 : 0;
  return self + blocked_caret_count(t.left()) + blocked_caret_count(t.right());
}

namespace {

void free_pairs_walk(const Tree& t, int& next, std::vector<int>& out) {
  if (t.empty()) {
    ++next;
    return;
  }
  if (t.left().empty() && t.right().empty()) {
    out.push_back(next);
    next += 2;
    return;
  }
  free_pairs_walk(t.left(), next, out);
  free_pairs_walk(t.right(), next, out);
}

}  // namespace

std::vector<int> free_caret_leaf_pairs(const Tree& t) {
  std::vector<int> out;
  int next = 1;
  free_pairs_walk(t, next, out);
  return out;
}

std::int64_t left_wing(const Tree& t) {
  std::int64_t n = 0;
  Tree cur = t;
  while (!cur.empty()) {
    ++n;
    cur = cur.left();
  }
  return n;
}

std::int64_t right_wing(const Tree& t) {
  std::int64_t n = 0;
  Tree cur = t;
  while (!cur.empty()) {
    ++n;
    cur = cur.right();
  }
  return n;
}

Tree truncate(const Tree& t, int k) {
  if (t.empty() || k <= 0) return Tree();
  if (t.depth() <= k) return t;
  return Tree::caret(truncate(t.left(), k - 1), truncate(t.right(), k - 1));
}

namespace {

void positions_walk(const Tree& t, CaretPosition p, std::vector<CaretPosition>& out) {
  if (t.empty()) return;
  out.push_back(p);
  positions_walk(t.left(), p.left_child(), out);
  positions_walk(t.right(), p.right_child(), out);
}

void check_desk_scale(const Tree& t, int slack) {
  if (t.depth() > 62 - slack) throw std::domain_error("tree too deep for positional enumeration");
}

}  // namespace

std::vector<CaretPosition> caret_positions(const Tree& t) {
  check_desk_scale(t, 0);
  std::vector<CaretPosition> out;
  positions_walk(t, {0, 1}, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void leaves_walk(const Tree& t, CaretPosition p, std::vector<CaretPosition>& out) {
  if (t.empty()) {
    out.push_back(p);
    return;
  }
  leaves_walk(t.left(), p.left_child(), out);
  leaves_walk(t.right(), p.right_child(), out);
}

}  // namespace

std::vector<CaretPosition> leaf_positions(const Tree& t) {
  check_desk_scale(t, 1);
  std::vector<CaretPosition> out;
  leaves_walk(t, {0, 1}, out);
  return out;
}

Tree tree_from_positions(const std::vector<CaretPosition>& positions) {
  std::map<CaretPosition, std::pair<Tree, Tree>> children;  // filled bottom-up
  auto sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate caret position");
  std::map<CaretPosition, Tree> built;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    const CaretPosition& p = *it;
    if (p.index < 1 || (p.depth < 63 && p.index > (1ull << p.depth)))
      throw std::invalid_argument("caret index out of range at " + p.str());
    Tree l, r;
    if (auto f = built.find(p.left_child()); f != built.end()) {
      l = f->second;
      built.erase(f);
    }
    if (auto f = built.find(p.right_child()); f != built.end()) {
      r = f->second;
      built.erase(f);
    }
    built.emplace(p, Tree::caret(l, r));
  }
  if (built.empty()) return Tree();
  if (built.size() != 1 || built.begin()->first != CaretPosition{0, 1})
    throw std::invalid_argument("gluing condition violated: orphan carets");
  return built.begin()->second;
}

bool contains_position(const Tree& t, const CaretPosition& p) {
  Tree cur = t;
  for (Dir d : path_of_position(p)) {
    if (cur.empty()) return false;
    cur = d == Dir::L ? cur.left() : cur.right();
  }
  return !cur.empty();
}

namespace {

void partition_walk(const Tree& t, const Dyadic& lo, const Dyadic& hi, std::vector<Dyadic>& out) {
  if (t.empty()) {
    out.push_back(hi);
    return;
  }
  Dyadic mid = (lo + hi) * Dyadic(1, 1);
  partition_walk(t.left(), lo, mid, out);
  partition_walk(t.right(), mid, hi, out);
}

}  // namespace

std::vector<Dyadic> tree_to_partition(const Tree& t) {
  std::vector<Dyadic> out{Dyadic(0)};
  partition_walk(t, Dyadic(0), Dyadic(1), out);
  return out;
}

namespace {

Tree tree_from_partition_range(const std::vector<Dyadic>& xs, size_t lo, size_t hi, const Dyadic& a,
                               const Dyadic& b) {
  if (hi == lo + 1) {
    if (xs[lo] != a || xs[hi] != b) throw std::invalid_argument("not a standard partition");
    return Tree();
  }
  Dyadic mid = (a + b) * Dyadic(1, 1);
  auto it = std::lower_bound(xs.begin() + lo, xs.begin() + hi + 1, mid);
  if (it == xs.begin() + hi + 1 || *it != mid)
    throw std::invalid_argument("not a standard partition: missing midpoint " + mid.str());
  size_t m = static_cast<size_t>(it - xs.begin());
  return Tree::caret(tree_from_partition_range(xs, lo, m, a, mid), tree_from_partition_range(xs, m, hi, mid, b));
}

}  // namespace

Tree tree_from_partition(const std::vector<Dyadic>& breakpoints) {
  if (breakpoints.size() < 2) throw std::invalid_argument("partition needs at least two breakpoints");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
    throw std::invalid_argument("breakpoints must increase");
  return tree_from_partition_range(breakpoints, 0, breakpoints.size() - 1, Dyadic(0), Dyadic(1));
}

std::vector<Tree> termination(const std::vector<Tree>& seq) {
  std::vector<Tree> out;
  for (const Tree& t : seq) {
    // Free-caret leaf pairs within t become ^, everything else *.
    auto pairs = free_caret_leaf_pairs(t);
    std::int64_t leaves = t.leaf_count();
    size_t k = 0;
    for (std::int64_t leaf = 1; leaf <= leaves;) {
      if (k < pairs.size() && pairs[k] == leaf) {
        out.push_back(Tree::wedge());
        leaf += 2;
        ++k;
      } else {
        out.push_back(Tree());
        ++leaf;
      }
    }
  }
  return out;
}

namespace {

Tree wing_seed(const Tree& t, bool from_left) {
  std::int64_t n = from_left ? left_wing(t) : right_wing(t);
  return from_left ? left_snake(static_cast<int>(n)) : right_snake(static_cast<int>(n));
}

// One greedy step: attach every caret of `target` sitting at a leaf of `cur`.
Tree approx_step(const Tree& cur, const Tree& target) {
  if (cur.empty()) {
    if (target.empty()) return Tree();
    return Tree::caret(Tree(), Tree());  // target has a caret here; take just it
  }
  return Tree::caret(approx_step(cur.left(), target.empty() ? Tree() : target.left()),
                     approx_step(cur.right(), target.empty() ? Tree() : target.right()));
}

ApproximationChain approximation(const Tree& t, bool from_left) {
  ApproximationChain out;
  if (t.empty()) {
    out.chain.push_back(t);
    out.steps = 1;
    return out;
  }
  Tree cur = wing_seed(t, from_left);
  out.chain.push_back(cur);
  while (cur != t) {
    cur = approx_step(cur, t);
    out.chain.push_back(cur);
  }
  out.steps = static_cast<int>(out.chain.size());
  return out;
}

}  // namespace

ApproximationChain left_approximation(const Tree& t) { return approximation(t, true); }
ApproximationChain right_approximation(const Tree& t) { return approximation(t, false); }

// ---- long snakes ------------------------------------------------------------

LongSnake::LongSnake(std::vector<Dir> prefix, std::vector<Dir> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("long snake needs a nonempty period");
  canonicalize();
}

void LongSnake::canonicalize() {
  // Minimal rotation-free form: shrink the period to its primitive root, then
  // absorb prefix characters that merely rotate the period.
  for (size_t d = 1; d <= period_.size() / 2; ++d) {
    if (period_.size() % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < period_.size() && ok; ++i) ok = period_[i] == period_[i % d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.begin(), period_.end() - 1, period_.end());
    prefix_.pop_back();
  }
}

Dir LongSnake::step(std::int64_t depth) const {
  if (depth < static_cast<std::int64_t>(prefix_.size())) return prefix_[static_cast<size_t>(depth)];
  return period_[static_cast<size_t>((depth - prefix_.size()) % period_.size())];
}

Tree LongSnake::truncate(int k) const {
  Tree t;
  for (int d = k - 1; d >= 0; --d) {
    t = step(d) == Dir::L ? Tree::caret(t, Tree()) : Tree::caret(Tree(), t);
  }
  return t;
}

LongSnake LongSnake::drop_head(std::int64_t k) const {
  std::vector<Dir> p = prefix_, q = period_;
  if (k <= static_cast<std::int64_t>(p.size())) {
    p.erase(p.begin(), p.begin() + static_cast<size_t>(k));
  } else {
    std::int64_t r = (k - p.size()) % static_cast<std::int64_t>(q.size());
    p.clear();
    std::rotate(q.begin(), q.begin() + static_cast<size_t>(r), q.end());
  }
  return LongSnake(std::move(p), std::move(q));
}

std::int64_t LongSnake::shared_carets(const Tree& t) const {
  Tree cur = t;
  std::int64_t n = 0;
  while (!cur.empty()) {
    cur = step(n) == Dir::L ? cur.left() : cur.right();
    ++n;
  }
  return n;
}

bool operator==(const LongSnake& a, const LongSnake& b) {
  return a.prefix_ == b.prefix_ && a.period_ == b.period_;
}

std::string LongSnake::str() const {
  std::string s;
  for (Dir d : prefix_) s.push_back(d == Dir::L ? 'L' : 'R');
  if (period_.size() == 1) {
    s.push_back(period_[0] == Dir::L ? 'L' : 'R');
    s.push_back('*');
  } else {
    s.push_back('(');
    for (Dir d : period_) s.push_back(d == Dir::L ? 'L' : 'R');
    s += ")*";
  }
  return s;
}

LongSnake LongSnake::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s.back() != '*') throw std::invalid_argument("long snake word must end with '*'");
  s.pop_back();
  auto to_dirs = [](const std::string& w) {
    std::vector<Dir> out;
    for (char c : w) {
      if (c == 'L' || c == 'l')
        out.push_back(Dir::L);
      else if (c == 'R' || c == 'r')
        out.push_back(Dir::R);
      else
        throw std::invalid_argument("long snake letters must be L or R");
    }
    return out;
  };
  if (!s.empty() && s.back() == ')') {
    auto open = s.rfind('(');
    if (open == std::string::npos) throw std::invalid_argument("unbalanced ')' in long snake word");
    return LongSnake(to_dirs(s.substr(0, open)), to_dirs(s.substr(open + 1, s.size() - open - 2)));
  }
  if (s.empty()) throw std::invalid_argument("long snake word needs a periodic letter");
  std::vector<Dir> all = to_dirs(s);
  std::vector<Dir> period{all.back()};
  all.pop_back();
  return LongSnake(std::move(all), std::move(period));
}

// ---- closed trees -----------------------------------------------------------

ClosedTree ClosedTree::from_snakes(std::vector<LongSnake> snakes) {
  ClosedTree ct;
  ct.snakes_ = std::move(snakes);
  if (ct.snakes_.empty()) throw std::invalid_argument("closed tree needs at least one generator");
  return ct;
}

ClosedTree ClosedTree::from_cones(std::vector<Cone> cones) {
  ClosedTree ct;
  ct.cones_ = std::move(cones);
  if (ct.cones_.empty()) throw std::invalid_argument("closed tree needs at least one generator");
  return ct;
}

ClosedTree& ClosedTree::add_snake(LongSnake s) {
  snakes_.push_back(std::move(s));
  return *this;
}

ClosedTree& ClosedTree::add_cone(Cone c) {
  cones_.push_back(std::move(c));
  return *this;
}

ClosedTree ClosedTree::full_minus(const std::vector<std::vector<Dir>>& deleted_roots) {
  // Complement of finitely many deleted subtrees = union of cones at the
  // off-path siblings of every deletion, plus cones covering untouched parts.
  // Build recursively on the trie of deleted roots.
  struct Builder {
    std::vector<ClosedTree::Cone> cones;
    void walk(std::vector<Dir>& here, std::vector<std::vector<Dir>> roots) {
      if (roots.empty()) {
        cones.push_back({here});
        return;
      }
      for (const auto& r : roots)
        if (r.empty()) return;  // whole subtree deleted
      std::vector<std::vector<Dir>> ls, rs;
      for (auto& r : roots) {
        std::vector<Dir> tail(r.begin() + 1, r.end());
        (r[0] == Dir::L ? ls : rs).push_back(std::move(tail));
      }
      here.push_back(Dir::L);
      walk(here, std::move(ls));
      here.back() = Dir::R;
      walk(here, std::move(rs));
      here.pop_back();
    }
  } b;
  std::vector<Dir> here;
  b.walk(here, deleted_roots);
  if (b.cones.empty()) throw std::invalid_argument("every caret deleted; not a closed tree");
  return from_cones(std::move(b.cones));
}

bool ClosedTree::contains(const std::vector<Dir>& p) const {
  for (const LongSnake& s : snakes_) {
    bool on = true;
    for (size_t i = 0; i < p.size() && on; ++i) on = s.step(static_cast<std::int64_t>(i)) == p[i];
    if (on) return true;
  }
  for (const Cone& c : cones_) {
    size_t common = 0;
    while (common < c.path.size() && common < p.size() && c.path[common] == p[common]) ++common;
    if (common == c.path.size() || common == p.size()) return true;
  }
  return false;
}

Tree ClosedTree::truncate(int k) const {
  Tree acc;
  for (const LongSnake& s : snakes_) acc = tree_union(acc, s.truncate(k));
  for (const Cone& c : cones_) {
    // Path carets down to the cone vertex, then the full subtree to depth k.
    int pd = static_cast<int>(c.path.size());
    Tree part = full_tree(std::max(0, k - pd));
    for (int i = pd - 1; i >= 0 && i < k; --i)
      part = c.path[static_cast<size_t>(i)] == Dir::L ? Tree::caret(part, Tree()) : Tree::caret(Tree(), part);
    if (pd >= k) part = LongSnake(c.path, {Dir::L}).truncate(k);  // only the handle survives
    acc = tree_union(acc, part);
  }
  return acc;
}

std::vector<Dir> path_of_position(const CaretPosition& p) {
  std::vector<Dir> out(static_cast<size_t>(p.depth));
  std::uint64_t idx = p.index - 1;  // 0-based
  for (int d = p.depth - 1; d >= 0; --d) {
    out[static_cast<size_t>(d)] = (idx & 1) ? Dir::R : Dir::L;
    idx >>= 1;
  }
  return out;
}

CaretPosition position_of_path(const std::vector<Dir>& path) {
  if (path.size() > 62) throw std::domain_error("path too deep for positional form");
  CaretPosition p{static_cast<int>(path.size()), 1};
  std::uint64_t idx = 0;
  for (Dir d : path) idx = idx * 2 + (d == Dir::R ? 1 : 0);
  p.index = idx + 1;
  return p;
}

std::vector<Tree> all_trees(int n) {
  static std::vector<std::vector<Tree>> memo{{Tree()}};
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    std::vector<Tree> layer;
    for (int l = 0; l < m; ++l)
      for (const Tree& a : memo[static_cast<size_t>(l)])
        for (const Tree& b : memo[static_cast<size_t>(m - 1 - l)]) layer.push_back(Tree::caret(a, b));
    memo.push_back(std::move(layer));
  }
  return memo[static_cast<size_t>(n)];
}

}  // namespace cat0
