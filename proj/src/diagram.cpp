#include "cat0/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cat0 {

namespace mp = boost::multiprecision;

Diagram::Diagram(Tree head, std::vector<Tree> parts) : head_(std::move(head)), parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("diagram needs at least one part");
  std::int64_t right_leaves = 0;
  for (const Tree& p : parts_) right_leaves += p.leaf_count();
  if (head_.leaf_count() != right_leaves)
    throw std::invalid_argument("leaf balance violated: head has " + std::to_string(head_.leaf_count()) +
                                " leaves, parts have " + std::to_string(right_leaves));
}

Diagram Diagram::from_tree(const Tree& t) {
  return Diagram(t, std::vector<Tree>(static_cast<size_t>(t.leaf_count()), Tree()));
}

std::int64_t Diagram::total_carets() const {
  std::int64_t n = head_.size();
  for (const Tree& p : parts_) n += p.size();
  return n;
}

std::pair<int, int> Diagram::locate_right_leaf(int leaf) const {
  int at = 1;
  for (size_t i = 0; i < parts_.size(); ++i) {
    int cnt = static_cast<int>(parts_[i].leaf_count());
    if (leaf < at + cnt) return {static_cast<int>(i) + 1, leaf - at + 1};
    at += cnt;
  }
  throw std::out_of_range("right leaf index out of range");
}

int Diagram::part_first_leaf(int part) const {
  int at = 1;
  for (int i = 1; i < part; ++i) at += static_cast<int>(parts_[static_cast<size_t>(i - 1)].leaf_count());
  return at;
}

bool Diagram::is_tree_vertex() const {
  for (const Tree& p : parts_)
    if (!p.empty()) return false;
  return true;
}

bool operator<(const Diagram& a, const Diagram& b) {
  if (a.head_ != b.head_) return a.head_ < b.head_;
  if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size();
  for (size_t i = 0; i < a.parts_.size(); ++i)
    if (a.parts_[i] != b.parts_[i]) return a.parts_[i] < b.parts_[i];
  return false;
}

std::size_t Diagram::hash() const {
  std::size_t h = head_.hash();
  for (const Tree& p : parts_) h ^= p.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::string Diagram::str() const {
  std::string s = "[ " + head_.str() + " |";
  for (size_t i = 0; i < parts_.size(); ++i) {
    s += (i ? " , " : " ") + parts_[i].str();
  }
  return s + " ]";
}

Diagram Diagram::parse(const std::string& text) {
  auto lb = text.find('[');
  auto rb = text.rfind(']');
  auto bar = text.find('|');
  if (lb == std::string::npos || rb == std::string::npos || bar == std::string::npos || !(lb < bar && bar < rb))
    throw std::invalid_argument("diagram literal must look like [ TREE | TREE , ... ]");
  Tree head = Tree::parse(text.substr(lb + 1, bar - lb - 1));
  std::vector<Tree> parts;
  std::string rest = text.substr(bar + 1, rb - bar - 1);
  size_t start = 0;
  while (true) {
    auto comma = rest.find(',', start);
    parts.push_back(Tree::parse(rest.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Diagram(std::move(head), std::move(parts));
}

// ---- reduction ---------------------------------------------------------------

namespace {

// Mutable arena form of one side of a diagram, for worklist reduction.
struct Arena {
  struct MNode {
    int l = -1, r = -1, parent = -1;
  };
  std::vector<MNode> nodes;

  int build(const Tree& t, int parent) {
    int id = static_cast<int>(nodes.size());
    nodes.push_back({-1, -1, parent});
    if (!t.empty()) {
      int l = build(t.left(), id);
      int r = build(t.right(), id);
      nodes[static_cast<size_t>(id)].l = l;
      nodes[static_cast<size_t>(id)].r = r;
    }
    return id;
  }

  void leaves_of(int id, std::vector<int>& out) const {
    const MNode& n = nodes[static_cast<size_t>(id)];
    if (n.l < 0) {
      out.push_back(id);
      return;
    }
    leaves_of(n.l, out);
    leaves_of(n.r, out);
  }

  Tree to_tree(int id) const {
    const MNode& n = nodes[static_cast<size_t>(id)];
    if (n.l < 0) return Tree();
    return Tree::caret(to_tree(n.l), to_tree(n.r));
  }
};

}  // namespace

Diagram reduce(const Diagram& d) {
  Arena head, right;
  int head_root = head.build(d.head(), -1);
  std::vector<int> part_roots;
  for (const Tree& p : d.parts()) part_roots.push_back(right.build(p, -1));

  std::vector<int> hleaves, rleaves, rpart;
  head.leaves_of(head_root, hleaves);
  for (size_t i = 0; i < part_roots.size(); ++i) {
    std::vector<int> tmp;
    right.leaves_of(part_roots[i], tmp);
    for (int id : tmp) {
      rleaves.push_back(id);
      rpart.push_back(static_cast<int>(i));
    }
  }

  // Slots = aligned leaf pairs, in a doubly linked list so removals are local.
  int m = static_cast<int>(hleaves.size());
  std::vector<int> prev(static_cast<size_t>(m)), next(static_cast<size_t>(m));
  std::vector<char> dead(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    prev[static_cast<size_t>(i)] = i - 1;
    next[static_cast<size_t>(i)] = i + 1 < m ? i + 1 : -1;
  }

  auto removable = [&](int a) -> bool {
    int b = next[static_cast<size_t>(a)];
    if (b < 0 || dead[static_cast<size_t>(a)] || dead[static_cast<size_t>(b)]) return false;
    if (rpart[static_cast<size_t>(a)] != rpart[static_cast<size_t>(b)]) return false;
    int hp = head.nodes[static_cast<size_t>(hleaves[static_cast<size_t>(a)])].parent;
    if (hp < 0 || hp != head.nodes[static_cast<size_t>(hleaves[static_cast<size_t>(b)])].parent) return false;
    if (head.nodes[static_cast<size_t>(hp)].l != hleaves[static_cast<size_t>(a)]) return false;
    int rp = right.nodes[static_cast<size_t>(rleaves[static_cast<size_t>(a)])].parent;
    if (rp < 0 || rp != right.nodes[static_cast<size_t>(rleaves[static_cast<size_t>(b)])].parent) return false;
    if (right.nodes[static_cast<size_t>(rp)].l != rleaves[static_cast<size_t>(a)]) return false;
    return true;
  };

  std::deque<int> work;
  for (int i = 0; i < m; ++i)
    if (removable(i)) work.push_back(i);

  while (!work.empty()) {
    int a = work.front();
    work.pop_front();
    if (dead[static_cast<size_t>(a)] || !removable(a)) continue;
    int b = next[static_cast<size_t>(a)];
    int hp = head.nodes[static_cast<size_t>(hleaves[static_cast<size_t>(a)])].parent;
    int rp = right.nodes[static_cast<size_t>(rleaves[static_cast<size_t>(a)])].parent;
    head.nodes[static_cast<size_t>(hp)].l = head.nodes[static_cast<size_t>(hp)].r = -1;
    right.nodes[static_cast<size_t>(rp)].l = right.nodes[static_cast<size_t>(rp)].r = -1;
    // Slot a becomes the merged leaf; slot b dies.
    hleaves[static_cast<size_t>(a)] = hp;
    rleaves[static_cast<size_t>(a)] = rp;
    dead[static_cast<size_t>(b)] = 1;
    int nb = next[static_cast<size_t>(b)];
    next[static_cast<size_t>(a)] = nb;
    if (nb >= 0) prev[static_cast<size_t>(nb)] = a;
    if (prev[static_cast<size_t>(a)] >= 0 && removable(prev[static_cast<size_t>(a)]))
      work.push_back(prev[static_cast<size_t>(a)]);
    if (removable(a)) work.push_back(a);
  }

  std::vector<Tree> parts;
  parts.reserve(part_roots.size());
  for (int r : part_roots) parts.push_back(right.to_tree(r));
  return Diagram(head.to_tree(head_root), std::move(parts));
}

bool Diagram::is_reduced() const { return reduce(*this) == *this; }

Diagram add_caret(const Diagram& d, int leaf) {
  auto [part, local] = d.locate_right_leaf(leaf);
  std::vector<Tree> parts = d.parts();
  parts[static_cast<size_t>(part - 1)] = glue_caret(parts[static_cast<size_t>(part - 1)], local);
  return Diagram(glue_caret(d.head(), leaf), std::move(parts));
}

namespace {

// Attach, at every leaf of `base`, the subtree that `target` carries there.
// Applied to a tree paired with `base` this realizes repeated caret addition.
std::vector<Tree> hanging_subtrees(const Tree& target, const Tree& base) {
  std::vector<Tree> out;
  out.reserve(static_cast<size_t>(base.leaf_count()));
  for (int i = 1; i <= base.leaf_count(); ++i) out.push_back(subtree_at_leaf(target, base, i));
  return out;
}

std::vector<int> all_leaves(const Tree& t) {
  std::vector<int> out(static_cast<size_t>(t.leaf_count()));
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i) + 1;
  return out;
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.degree() != 1) throw std::invalid_argument("compose: left factor must have degree 1");
  const Tree& s = f.parts()[0];
  const Tree& h = g.head();
  Tree u = tree_union(s, h);

  // Pad f so its right tree becomes u; mirrored carets land on the head.
  Tree fh = f.head();
  if (u != s) {
    auto hang = hanging_subtrees(u, s);
    fh = glue(fh, all_leaves(fh), hang);
  }

  // Pad g so its head becomes u; mirrored carets land inside the parts.
  std::vector<Tree> parts = g.parts();
  if (u != h) {
    auto hang = hanging_subtrees(u, h);
    size_t at = 0;
    for (Tree& p : parts) {
      size_t cnt = static_cast<size_t>(p.leaf_count());
      std::vector<Tree> bs(hang.begin() + static_cast<std::ptrdiff_t>(at),
                           hang.begin() + static_cast<std::ptrdiff_t>(at + cnt));
      p = glue(p, all_leaves(p), bs);
      at += cnt;
    }
  }
  return reduce(Diagram(std::move(fh), std::move(parts)));
}

Diagram invert(const Diagram& f) {
  if (f.degree() != 1) throw std::invalid_argument("invert: degree must be 1");
  return Diagram(f.parts()[0], {f.head()});
}

Diagram cut(const Diagram& d, const std::vector<int>& js) {
  for (size_t i = 0; i < js.size(); ++i) {
    if (js[i] < 1 || js[i] > d.degree()) throw std::out_of_range("cut: part index out of range");
    if (i > 0 && js[i] <= js[i - 1]) throw std::invalid_argument("cut: indices must increase");
  }
  std::vector<int> head_additions;
  for (int j : js)
    if (d.parts()[static_cast<size_t>(j - 1)].empty()) head_additions.push_back(d.part_first_leaf(j));
  std::vector<Tree> parts;
  size_t k = 0;
  for (int j = 1; j <= d.degree(); ++j) {
    const Tree& p = d.parts()[static_cast<size_t>(j - 1)];
    if (k < js.size() && js[k] == j) {
      ++k;
      if (p.empty()) {
        parts.push_back(Tree());
        parts.push_back(Tree());
      } else {
        parts.push_back(p.left());
        parts.push_back(p.right());
      }
    } else {
      parts.push_back(p);
    }
  }
  return Diagram(glue_carets(d.head(), head_additions), std::move(parts));
}

Diagram glue_parts(const Diagram& d, int k) {
  if (k < 1 || k + 1 > d.degree()) throw std::out_of_range("glue_parts: position out of range");
  std::vector<Tree> parts;
  for (int j = 1; j <= d.degree(); ++j) {
    if (j == k) {
      parts.push_back(Tree::caret(d.parts()[static_cast<size_t>(j - 1)], d.parts()[static_cast<size_t>(j)]));
      ++j;
    } else {
      parts.push_back(d.parts()[static_cast<size_t>(j - 1)]);
    }
  }
  return Diagram(d.head(), std::move(parts));
}

Diagram power(const Diagram& g, std::int64_t n) {
  if (n == 0) return Diagram::identity();
  if (n < 0) return power(invert(g), -n);
  if (n > 1 && g.degree() != 1) throw std::invalid_argument("power: degree must be 1");
  if (n == 1) return reduce(g);
  Diagram half = power(g, n / 2);
  Diagram full = compose(half, half);
  return n % 2 ? compose(reduce(g), full) : full;
}

Diagram power_unreduced(const Diagram& g, std::int64_t n) {
  if (n == 0) return Diagram::identity();
  if (n < 0) return power_unreduced(invert(g), -n);
  Diagram acc = g;
  for (std::int64_t i = 1; i < n; ++i) {
    // Same padding as compose, but no final reduction.
    const Tree& s = g.parts()[0];
    const Tree& h = acc.head();
    Tree u = tree_union(s, h);
    Tree fh = g.head();
    if (u != s) fh = glue(fh, all_leaves(fh), hanging_subtrees(u, s));
    std::vector<Tree> parts = acc.parts();
    if (u != h) {
      auto hang = hanging_subtrees(u, h);
      size_t at = 0;
      for (Tree& p : parts) {
        size_t cnt = static_cast<size_t>(p.leaf_count());
        std::vector<Tree> bs(hang.begin() + static_cast<std::ptrdiff_t>(at),
                             hang.begin() + static_cast<std::ptrdiff_t>(at + cnt));
        p = glue(p, all_leaves(p), bs);
        at += cnt;
      }
    }
    acc = Diagram(std::move(fh), std::move(parts));
  }
  return acc;
}

Norms norms(const Diagram& d) {
  if (!d.is_reduced()) throw std::invalid_argument("norms: diagram must be reduced");
  Norms n;
  n.left = d.head().size();
  for (const Tree& p : d.parts()) n.right += p.size();
  n.total = n.left + n.right;
  return n;
}

// ---- PL maps -----------------------------------------------------------------

namespace {

int slope_log2(const Dyadic& dx, const Dyadic& dy) {
  // dy/dx must be a power of two: odd parts of the numerators must agree.
  auto odd_shift = [](const Dyadic& v) {
    std::int64_t n = v.numerator();
    int tz = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++tz;
    }
    return std::pair<std::int64_t, int>{n, tz - v.exponent()};
  };
  auto [ox, px] = odd_shift(dx);
  auto [oy, py] = odd_shift(dy);
  if (ox != oy) throw std::invalid_argument("slope is not a power of two");
  return py - px;
}

}  // namespace

PLMap::PLMap(std::vector<Dyadic> breakpoints, std::vector<Dyadic> images)
    : xs_(std::move(breakpoints)), ys_(std::move(images)) {
  if (xs_.size() != ys_.size() || xs_.size() < 2) throw std::invalid_argument("PL map needs matching breakpoint/image lists");
  if (!(xs_.front() == Dyadic(0)) || !(ys_.front() == Dyadic(0)))
    throw std::invalid_argument("PL map must send 0 to 0");
  for (size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i]) || !(ys_[i - 1] < ys_[i]))
      throw std::invalid_argument("PL breakpoints/images must strictly increase");
    slope_log2(xs_[i] - xs_[i - 1], ys_[i] - ys_[i - 1]);  // validates
  }
}

PLMap PLMap::identity(const Dyadic& upto) { return PLMap({Dyadic(0), upto}, {Dyadic(0), upto}); }

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (x < xs_.front() || xs_.back() < x) throw std::out_of_range("PL map evaluated outside domain");
  size_t i = static_cast<size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  if (i == xs_.size()) return ys_.back();
  --i;
  if (i == xs_.size() - 1) return ys_.back();
  int p = slope_log2(xs_[i + 1] - xs_[i], ys_[i + 1] - ys_[i]);
  return ys_[i] + (x - xs_[i]).scale_pow2(p);
}

int PLMap::slope_log2_at_segment(size_t i) const {
  return slope_log2(xs_[i + 1] - xs_[i], ys_[i + 1] - ys_[i]);
}

PLMap PLMap::canonical() const {
  std::vector<Dyadic> xs{xs_[0]}, ys{ys_[0]};
  for (size_t i = 1; i + 1 < xs_.size(); ++i) {
    if (slope_log2_at_segment(i - 1) != slope_log2_at_segment(i)) {
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  xs.push_back(xs_.back());
  ys.push_back(ys_.back());
  return PLMap(std::move(xs), std::move(ys));
}

bool operator==(const PLMap& a, const PLMap& b) {
  PLMap ca = a.canonical(), cb = b.canonical();
  return ca.xs_ == cb.xs_ && ca.ys_ == cb.ys_;
}

std::string PLMap::str() const {
  std::string s;
  for (size_t i = 0; i < xs_.size(); ++i) {
    if (i) s += " ";
    s += xs_[i].str() + ":" + ys_[i].str();
  }
  return s;
}

PLMap PLMap::parse(const std::string& text) {
  std::vector<Dyadic> xs, ys;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string pair = text.substr(i, j - i);
    auto colon = pair.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("PL pair needs a ':'");
    xs.push_back(Dyadic::parse(pair.substr(0, colon)));
    ys.push_back(Dyadic::parse(pair.substr(colon + 1)));
    i = j;
  }
  return PLMap(std::move(xs), std::move(ys));
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  if (!(f.range_end() == g.domain_end())) throw std::invalid_argument("pl_compose: ranges do not chain");
  std::vector<Dyadic> xs = f.breakpoints();
  // Pull g's breakpoints back through f.
  for (const Dyadic& b : g.breakpoints()) {
    size_t i = 0;
    const auto& fy = f.images();
    while (i + 1 < fy.size() && fy[i + 1] < b) ++i;
    if (i + 1 >= fy.size()) continue;
    int p = slope_log2(f.breakpoints()[i + 1] - f.breakpoints()[i], fy[i + 1] - fy[i]);
    xs.push_back(f.breakpoints()[i] + (b - fy[i]).scale_pow2(-p));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Dyadic> ys;
  ys.reserve(xs.size());
  for (const Dyadic& x : xs) ys.push_back(g(f(x)));
  return PLMap(std::move(xs), std::move(ys)).canonical();
}

PLMap to_pl(const Diagram& d) {
  std::vector<Dyadic> xs = tree_to_partition(d.head());
  std::vector<Dyadic> ys;
  for (int i = 0; i < d.degree(); ++i) {
    auto part = tree_to_partition(d.parts()[static_cast<size_t>(i)]);
    for (size_t k = (i == 0 ? 0 : 1); k < part.size(); ++k) ys.push_back(part[k] + Dyadic(i));
  }
  return PLMap(std::move(xs), std::move(ys));
}

std::pair<std::int64_t, std::int64_t> end_slopes(const Diagram& d) {
  std::int64_t alpha = left_wing(d.head()) - left_wing(d.parts().front());
  std::int64_t beta = right_wing(d.head()) - right_wing(d.parts().back());
  return {alpha, beta};
}

namespace {

void split_standard(const PLMap& m, const Dyadic& a, const Dyadic& b, std::vector<Dyadic>& cuts, int depth) {
  if (depth > 70) throw std::invalid_argument("map is not Thompson-like (splitting does not terminate)");
  // Linear on [a,b] with a standard image?
  bool linear = true;
  for (const Dyadic& x : m.breakpoints())
    if (a < x && x < b) {
      linear = false;
      break;
    }
  if (linear) {
    Dyadic fa = m(a), fb = m(b);
    Dyadic len = fb - fa;
    // Standard interval: length 2^-u (u >= 0) and aligned start.
    if (len.numerator() == 1 && !(Dyadic(1) < len)) {
      int u = len.exponent();
      Dyadic scaled = fa.scale_pow2(u);
      if (scaled.is_integer()) {
        cuts.push_back(b);
        return;
      }
    }
  }
  Dyadic mid = (a + b) * Dyadic(1, 1);
  split_standard(m, a, mid, cuts, depth + 1);
  split_standard(m, mid, b, cuts, depth + 1);
}

}  // namespace

Diagram diagram_from_pl(const PLMap& m) {
  if (!(m.domain_end() == Dyadic(1))) throw std::invalid_argument("diagram_from_pl: domain must be [0,1]");
  Dyadic n = m.range_end();
  if (!n.is_integer() || n.numerator() < 1) throw std::invalid_argument("diagram_from_pl: range must be [0,n]");
  std::vector<Dyadic> cuts{Dyadic(0)};
  split_standard(m, Dyadic(0), Dyadic(1), cuts, 0);
  Tree head = tree_from_partition(cuts);
  // Images form a standard partition of [0,n]; slice it per unit interval.
  std::vector<Tree> parts;
  std::vector<Dyadic> ys;
  for (const Dyadic& x : cuts) ys.push_back(m(x));
  size_t i = 0;
  for (std::int64_t unit = 0; unit < n.numerator(); ++unit) {
    std::vector<Dyadic> local;
    while (i < ys.size() && !(Dyadic(unit + 1) < ys[i])) {
      local.push_back(ys[i] - Dyadic(unit));
      ++i;
    }
    --i;  // unit boundary is shared with the next slice
    parts.push_back(tree_from_partition(local));
  }
  return reduce(Diagram(std::move(head), std::move(parts)));
}

PLMap slope_doubling_map(int n, const std::vector<int>& js) {
  std::vector<Dyadic> xs, ys;
  Dyadic y(0);
  xs.push_back(Dyadic(0));
  ys.push_back(y);
  size_t k = 0;
  for (int j = 1; j <= n; ++j) {
    bool doubled = k < js.size() && js[k] == j;
    if (doubled) ++k;
    y = y + Dyadic(doubled ? 2 : 1);
    xs.push_back(Dyadic(j));
    ys.push_back(y);
  }
  return PLMap(std::move(xs), std::move(ys));
}

bool is_irreducible(const Diagram& f) {
  if (f.degree() != 1) throw std::invalid_argument("is_irreducible: degree must be 1");
  PLMap m = to_pl(reduce(f));
  using Rat = mp::cpp_rational;
  auto rat = [](const Dyadic& d) { return Rat(d.numerator(), mp::cpp_int(1) << d.exponent()); };
  // Fixed breakpoints strictly inside (0,1).
  const auto& xs = m.breakpoints();
  const auto& ys = m.images();
  for (size_t i = 1; i + 1 < xs.size(); ++i)
    if (xs[i] == ys[i]) return false;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    int p = m.slope_log2_at_segment(i);
    Rat x0 = rat(xs[i]), x1 = rat(xs[i + 1]), y0 = rat(ys[i]);
    if (p == 0) {
      if (y0 == x0) return false;  // identity segment fixes its interior
      continue;
    }
    Rat slope = p > 0 ? Rat(mp::cpp_int(1) << p) : Rat(1, mp::cpp_int(1) << (-p));
    Rat fix = (y0 - x0 * slope) / (Rat(1) - slope);
    if (x0 < fix && fix < x1 && Rat(0) < fix && fix < Rat(1)) return false;
  }
  return true;
}

bool fixes_interval(const Diagram& f, const Dyadic& lo, const Dyadic& hi) {
  PLMap m = to_pl(reduce(f));
  const auto& xs = m.breakpoints();
  const auto& ys = m.images();
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(xs[i] < hi) || !(lo < xs[i + 1])) continue;  // segment misses (lo,hi)
    if (m.slope_log2_at_segment(i) != 0 || !(ys[i] == xs[i])) return false;
  }
  return true;
}

Diagram gen_x0() { return Diagram(left_snake(2), {right_snake(2)}); }
Diagram gen_x1() { return Diagram(left_snake(3), {glue_caret(left_snake(2), 2)}); }
Diagram elem_sqrt5() { return Diagram(left_snake(3), {glue_caret(right_snake(2), 2)}); }

}  // namespace cat0
