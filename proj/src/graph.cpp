#include "hyperbernardi/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hb {

const char* color_name(Color c) { return c == Color::Emerald ? "emerald" : "violet"; }

std::vector<int> edges_of(EdgeMask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

int RibbonGraph::add_node(const std::string& name, Color c) {
  if (find_node(name) >= 0) throw InputError("duplicate node name '" + name + "'");
  names_.push_back(name);
  colors_.push_back(colored_ ? c : Color::Violet);
  rot_.emplace_back();
  finalized_ = false;
  return node_count() - 1;
}

int RibbonGraph::add_edge(const std::string& name, int a, int b) {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
    throw InputError("edge '" + name + "' has an unknown endpoint");
  if (a == b) throw InputError("edge '" + name + "' is a loop");
  if (find_edge(name) >= 0) throw InputError("duplicate edge id '" + name + "'");
  if (edge_count() >= kMaxEdges) throw InputError("more than 64 edges");
  if (colored_) {
    if (colors_[a] == colors_[b]) throw InputError("edge '" + name + "' joins two nodes of the same color");
    if (colors_[a] == Color::Violet) std::swap(a, b);
  }
  edge_names_.push_back(name);
  ends_.push_back({a, b});
  finalized_ = false;
  return edge_count() - 1;
}

void RibbonGraph::set_rotation(int node, std::vector<int> edges) {
  rot_.at(node) = std::move(edges);
  finalized_ = false;
}

void RibbonGraph::set_base(int node, int edge) {
  base_node_ = node;
  base_edge_ = edge;
}

int RibbonGraph::find_node(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int RibbonGraph::find_edge(const std::string& name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  return it == edge_names_.end() ? -1 : static_cast<int>(it - edge_names_.begin());
}

EdgeMask RibbonGraph::all_edges() const {
  return edge_count() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << edge_count()) - 1;
}

void RibbonGraph::finalize() {
  const int n = node_count();
  const int m = edge_count();
  if (n < 2 || m < 1) throw InputError("graph needs at least one edge");

  std::vector<std::vector<int>> inc(n);
  for (int e = 0; e < m; ++e) {
    inc[ends_[e][0]].push_back(e);
    inc[ends_[e][1]].push_back(e);
  }
  for (int x = 0; x < n; ++x) {
    if (inc[x].empty()) throw InputError("node '" + names_[x] + "' is isolated (graph disconnected)");
    if (rot_[x].empty()) {
      rot_[x] = inc[x];
      continue;
    }
    std::vector<int> a = rot_[x];
    std::sort(a.begin(), a.end());
    if (a != inc[x])
      throw InputError("rotation at '" + names_[x] + "' is not a permutation of its incident edges");
  }

  slot_.assign(m, {-1, -1});
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < static_cast<int>(rot_[x].size()); ++i) {
      int e = rot_[x][i];
      slot_[e][ends_[e][0] == x ? 0 : 1] = i;
    }

  classes_[0].clear();
  classes_[1].clear();
  class_index_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    auto& cls = classes_[static_cast<int>(colors_[x])];
    class_index_[x] = static_cast<int>(cls.size());
    cls.push_back(x);
  }

  if (base_node_ < 0) {
    base_node_ = ends_[0][0];
    base_edge_ = 0;
  }
  if (base_node_ >= n || base_edge_ < 0 || base_edge_ >= m) throw InputError("base out of range");
  if (!incident(base_edge_, base_node_))
    throw InputError("base edge is not incident to the base node");
  finalized_ = true;
  if (!connected(*this, all_edges())) throw InputError("graph is disconnected");
}

int RibbonGraph::position(int x, int e) const {
  if (ends_[e][0] == x) return slot_[e][0];
  if (ends_[e][1] == x) return slot_[e][1];
  return -1;
}

int RibbonGraph::degree(int x, EdgeMask live) const {
  int d = 0;
  for (int e : rot_[x]) d += has(live, e);
  return d;
}

int RibbonGraph::next_live(int x, int e, EdgeMask live) const {
  const auto& r = rot_[x];
  const int k = static_cast<int>(r.size());
  const int p = position(x, e);
  for (int i = 1; i <= k; ++i) {
    int f = r[(p + i) % k];
    if (has(live, f)) return f;
  }
  return -1;
}

int RibbonGraph::prev_live(int x, int e, EdgeMask live) const {
  const auto& r = rot_[x];
  const int k = static_cast<int>(r.size());
  const int p = position(x, e);
  for (int i = 1; i <= k; ++i) {
    int f = r[((p - i) % k + k) % k];
    if (has(live, f)) return f;
  }
  return -1;
}

static void check_live_incident(const RibbonGraph& g, EdgeMask live, int x, int e) {
  if (e < 0 || e >= g.edge_count() || x < 0 || x >= g.node_count()) throw InputError("id out of range");
  if (!g.incident(e, x)) throw InputError("edge " + g.edge_name(e) + " is not incident to " + g.node_name(x));
  if (!has(live, e)) throw InputError("edge " + g.edge_name(e) + " is not live");
}

int next_edge(const RibbonGraph& g, EdgeMask live, int x, int e) {
  check_live_incident(g, live, x, e);
  return g.next_live(x, e, live);
}

int prev_edge(const RibbonGraph& g, EdgeMask live, int x, int e) {
  check_live_incident(g, live, x, e);
  return g.prev_live(x, e, live);
}

namespace {

RibbonGraph copy_structure(const RibbonGraph& g, bool swap_colors) {
  RibbonGraph h(g.colored());
  for (int x = 0; x < g.node_count(); ++x)
    h.add_node(g.node_name(x), swap_colors ? opposite(g.color(x)) : g.color(x));
  for (int e = 0; e < g.edge_count(); ++e) h.add_edge(g.edge_name(e), g.ends(e)[0], g.ends(e)[1]);
  for (int x = 0; x < g.node_count(); ++x) h.set_rotation(x, g.rotation(x));
  h.set_base(g.base_node(), g.base_edge());
  return h;
}

}  // namespace

RibbonGraph transpose(const RibbonGraph& g) {
  RibbonGraph h = copy_structure(g, g.colored());
  h.finalize();
  return h;
}

RibbonGraph reversed_setup(const RibbonGraph& g) {
  RibbonGraph h = copy_structure(g, false);
  for (int x = 0; x < g.node_count(); ++x) {
    std::vector<int> r = g.rotation(x);
    std::reverse(r.begin(), r.end());
    h.set_rotation(x, r);
  }
  h.set_base(g.base_node(), prev_edge(g, g.base_node(), g.base_edge()));
  h.finalize();
  return h;
}

RibbonGraph with_base(const RibbonGraph& g, int node, int edge) {
  RibbonGraph h = copy_structure(g, false);
  h.set_base(node, edge);
  h.finalize();
  return h;
}

RibbonGraph with_rotations(const RibbonGraph& g, const std::vector<std::vector<int>>& rot) {
  RibbonGraph h = copy_structure(g, false);
  for (int x = 0; x < g.node_count(); ++x) h.set_rotation(x, rot.at(x));
  h.finalize();
  return h;
}

Subdivision subdivide(const RibbonGraph& g) {
  Subdivision s{RibbonGraph(true), {}};
  for (int x = 0; x < g.node_count(); ++x) s.bip.add_node(g.node_name(x), Color::Violet);
  std::vector<int> mid(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) mid[e] = s.bip.add_node(g.edge_name(e), Color::Emerald);
  s.half.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    for (int k = 0; k < 2; ++k) {
      int x = g.ends(e)[k];
      s.half[e][k] = s.bip.add_edge(g.edge_name(e) + "-" + g.node_name(x), mid[e], x);
    }
  for (int x = 0; x < g.node_count(); ++x) {
    std::vector<int> r;
    for (int e : g.rotation(x)) r.push_back(s.half[e][g.ends(e)[0] == x ? 0 : 1]);
    s.bip.set_rotation(x, r);
  }
  for (int e = 0; e < g.edge_count(); ++e) s.bip.set_rotation(mid[e], {s.half[e][0], s.half[e][1]});
  int b = g.base_node();
  int be = g.base_edge();
  s.bip.set_base(b, s.half[be][g.ends(be)[0] == b ? 0 : 1]);
  s.bip.finalize();
  return s;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

bool connected(const RibbonGraph& g, EdgeMask live) {
  UnionFind uf(g.node_count());
  int comps = g.node_count();
  for (int e : edges_of(live))
    if (uf.unite(g.ends(e)[0], g.ends(e)[1])) --comps;
  return comps == 1;
}

bool is_forest(const RibbonGraph& g, EdgeMask edges) {
  UnionFind uf(g.node_count());
  for (int e : edges_of(edges))
    if (!uf.unite(g.ends(e)[0], g.ends(e)[1])) return false;
  return true;
}

bool is_spanning_tree(const RibbonGraph& g, EdgeMask edges) {
  if ((edges & ~g.all_edges()) != 0) return false;
  return popcount(edges) == g.node_count() - 1 && is_forest(g, edges);
}

int tree_degree(const RibbonGraph& g, EdgeMask tree, int x) { return g.degree(x, tree); }

Tour tour_of_tree(const RibbonGraph& g, EdgeMask tree) {
  if (!is_spanning_tree(g, tree)) throw InputError("tour requested for a non spanning tree");
  Tour t;
  const Dart start{g.base_node(), g.base_edge()};
  Dart cur = start;
  const int limit = 2 * g.edge_count();
  do {
    bool in = has(tree, cur.edge);
    t.push_back({cur.node, cur.edge, in});
    if (in) {
      int y = g.other_end(cur.edge, cur.node);
      cur = {y, g.next_live(y, cur.edge, g.all_edges())};
    } else {
      cur = {cur.node, g.next_live(cur.node, cur.edge, g.all_edges())};
    }
    if (static_cast<int>(t.size()) > limit) throw TheoremViolation("tour longer than twice the edge count");
  } while (!(cur == start));
  if (static_cast<int>(t.size()) != limit) throw TheoremViolation("tour does not visit every incident pair");
  return t;
}

std::vector<int> edge_order_from_tour(const Tour& t, int edge_count) {
  std::vector<char> seen(edge_count, 0);
  std::vector<int> order;
  for (const auto& s : t)
    if (!seen[s.edge]) {
      seen[s.edge] = 1;
      order.push_back(s.edge);
    }
  return order;
}

std::vector<int> ranks(const std::vector<int>& order, int size) {
  std::vector<int> r(size, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) r[order[i]] = i;
  return r;
}

std::vector<EdgeMask> spanning_trees(const RibbonGraph& g) {
  std::vector<EdgeMask> out;
  const int m = g.edge_count();
  const int need = g.node_count() - 1;
  // Include-first search over edges in id order.
  auto rec = [&](auto&& self, int e, EdgeMask chosen, EdgeMask excluded) -> void {
    int have = popcount(chosen);
    if (have == need) {
      out.push_back(chosen);
      return;
    }
    if (e == m || m - e < need - have) return;
    if (!connected(g, g.all_edges() & ~excluded)) return;
    EdgeMask with = chosen | bit(e);
    if (is_forest(g, with)) self(self, e + 1, with, excluded);
    self(self, e + 1, chosen, excluded | bit(e));
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long count_spanning_trees(const RibbonGraph& g) {
  const int n = g.node_count() - 1;
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n, 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.ends(e)[0] - 1;
    int v = g.ends(e)[1] - 1;
    if (u >= 0) a[u][u] += 1;
    if (v >= 0) a[v][v] += 1;
    if (u >= 0 && v >= 0) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

std::vector<char> tree_side(const RibbonGraph& g, EdgeMask tree, int e, int root) {
  std::vector<char> side(g.node_count(), 0);
  EdgeMask rest = tree & ~bit(e);
  std::vector<int> stack{root};
  side[root] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int f : g.rotation(x))
      if (has(rest, f)) {
        int y = g.other_end(f, x);
        if (!side[y]) {
          side[y] = 1;
          stack.push_back(y);
        }
      }
  }
  return side;
}

EdgeMask fundamental_cut(const RibbonGraph& g, EdgeMask tree, int e) {
  if (!has(tree, e)) throw InputError("fundamental cut needs a tree edge");
  auto side = tree_side(g, tree, e, g.ends(e)[0]);
  EdgeMask cut = 0;
  for (int f = 0; f < g.edge_count(); ++f)
    if (side[g.ends(f)[0]] != side[g.ends(f)[1]]) cut |= bit(f);
  return cut;
}

EdgeMask fundamental_cycle(const RibbonGraph& g, EdgeMask tree, int e) {
  if (has(tree, e)) throw InputError("fundamental cycle needs a non-tree edge");
  EdgeMask cyc = bit(e);
  for (int f : edges_of(tree)) {
    auto side = tree_side(g, tree, f, g.ends(f)[0]);
    if (side[g.ends(e)[0]] != side[g.ends(e)[1]]) cyc |= bit(f);
  }
  return cyc;
}

Faces faces_of_embedding(const RibbonGraph& g) {
  Faces f;
  f.face_of.assign(g.edge_count(), {-1, -1});
  auto slot = [&](Dart d) -> int& { return f.face_of[d.edge][g.ends(d.edge)[0] == d.node ? 0 : 1]; };
  for (int e = 0; e < g.edge_count(); ++e)
    for (int k = 0; k < 2; ++k) {
      Dart d{g.ends(e)[k], e};
      if (slot(d) >= 0) continue;
      int id = static_cast<int>(f.walks.size());
      f.walks.emplace_back();
      Dart cur = d;
      do {
        slot(cur) = id;
        f.walks.back().push_back(cur);
        int y = g.other_end(cur.edge, cur.node);
        cur = {y, g.next_live(y, cur.edge, g.all_edges())};
      } while (!(cur == d));
    }
  int chi = g.node_count() - g.edge_count() + static_cast<int>(f.walks.size());
  f.genus = (2 - chi) / 2;
  return f;
}

}  // namespace hb
