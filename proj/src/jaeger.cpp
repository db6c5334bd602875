#include "hyperbernardi/jaeger.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hb {

bool is_jaeger_tree(const RibbonGraph& g, EdgeMask tree, Color cut) {
  if (!is_spanning_tree(g, tree)) return false;
  EdgeMask seen = 0;
  for (const auto& s : tour_of_tree(g, tree)) {
    if (s.traversed || has(seen, s.edge)) continue;
    seen |= bit(s.edge);
    if (g.color(s.node) != cut) return false;
  }
  return true;
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

struct Enumerator {
  const RibbonGraph& g;
  Color cut;
  std::vector<EdgeMask> out;
  int steps_total;

  void explore(EdgeMask in, EdgeMask out_edges, UnionFind uf, Dart cur, int steps) {
    const Dart start{g.base_node(), g.base_edge()};
    while (steps < steps_total) {
      if (steps > 0 && cur == start) return;  // tour closed early: not spanning
      const int e = cur.edge;
      const int x = cur.node;
      if (!has(in | out_edges, e)) {
        if (g.color(x) == cut) {
          const EdgeMask cut_mask = out_edges | bit(e);
          if (connected(g, g.all_edges() & ~cut_mask))
            explore(in, cut_mask, uf, {x, g.next_live(x, e, g.all_edges())}, steps + 1);
          if (!uf.unite(g.ends(e)[0], g.ends(e)[1])) return;
          in |= bit(e);
        } else {
          if (!uf.unite(g.ends(e)[0], g.ends(e)[1])) return;
          in |= bit(e);
        }
      }
      if (has(in, e)) {
        const int y = g.other_end(e, x);
        cur = {y, g.next_live(y, e, g.all_edges())};
      } else {
        cur = {x, g.next_live(x, e, g.all_edges())};
      }
      ++steps;
    }
    if (cur == start && (in | out_edges) == g.all_edges() && popcount(in) == g.node_count() - 1) out.push_back(in);
  }
};

Tour tour_in(const RibbonGraph& g, EdgeMask tree, Color cut, Color flavor) {
  return flavor == cut ? tour_of_tree(g, tree) : tour_of_tree(reversed_setup(g), tree);
}

}  // namespace

std::vector<EdgeMask> enumerate_jaeger_trees(const RibbonGraph& g, Color cut) {
  Enumerator en{g, cut, {}, 2 * g.edge_count()};
  en.explore(0, 0, UnionFind(g.node_count()), {g.base_node(), g.base_edge()}, 0);
  return en.out;
}

std::vector<EdgeMask> jaeger_trees_by_recognition(const RibbonGraph& g, Color cut) {
  std::vector<EdgeMask> out;
  for (EdgeMask t : spanning_trees(g))
    if (is_jaeger_tree(g, t, cut)) out.push_back(t);
  return out;
}

Tour flavored_tour(const RibbonGraph& g, EdgeMask tree, Color cut, Color flavor) {
  return tour_in(g, tree, cut, flavor);
}

int first_divergence(const RibbonGraph& g, EdgeMask t1, EdgeMask t2, Color cut, Color flavor) {
  if (t1 == t2) return -1;
  const RibbonGraph h = flavor == cut ? g : reversed_setup(g);
  // Walk both tours in lockstep; they agree until an edge is in exactly one tree.
  const Dart start{h.base_node(), h.base_edge()};
  Dart cur = start;
  for (int i = 0; i < 2 * h.edge_count(); ++i) {
    const int e = cur.edge;
    if (has(t1, e) != has(t2, e)) return e;
    const int x = has(t1, e) ? h.other_end(e, cur.node) : cur.node;
    cur = {x, h.next_live(x, e, h.all_edges())};
  }
  throw TheoremViolation("distinct spanning trees with identical tours");
}

int compare_trees(const RibbonGraph& g, EdgeMask t1, EdgeMask t2, Color cut, Color flavor) {
  int e = first_divergence(g, t1, t2, cut, flavor);
  if (e < 0) return 0;
  return has(t2, e) ? -1 : 1;
}

TOrder t_order_from_ranks(const RibbonGraph& g, Color flavor, const std::vector<int>& edge_sequence) {
  TOrder o;
  o.flavor = flavor;
  o.edges = edge_sequence;
  o.rank = ranks(edge_sequence, g.edge_count());
  for (Color c : {Color::Emerald, Color::Violet}) {
    std::vector<int> nodes = g.class_nodes(c);
    std::vector<int> key(g.node_count(), g.edge_count());
    for (int x : nodes)
      for (int e : g.rotation(x)) key[x] = std::min(key[x], o.rank[e]);
    std::stable_sort(nodes.begin(), nodes.end(), [&](int a, int b) { return key[a] < key[b]; });
    (c == Color::Emerald ? o.emerald : o.violet) = nodes;
  }
  return o;
}

TOrder t_order(const RibbonGraph& g, EdgeMask tree, Color cut, Color flavor) {
  std::vector<int> seq;
  for (const auto& s : tour_in(g, tree, cut, flavor))
    if (g.color(s.node) == flavor) seq.push_back(s.edge);
  return t_order_from_ranks(g, flavor, seq);
}

EdgeMask semi_passive_edges(const RibbonGraph& g, EdgeMask tree, const std::vector<int>& rank) {
  EdgeMask out = 0;
  for (int e : edges_of(tree)) {
    EdgeMask cut = fundamental_cut(g, tree, e);
    int best = -1;
    for (int f : edges_of(cut))
      if (best < 0 || rank[f] < rank[best]) best = f;
    if (best == e) continue;
    // Opposite: the side holding e's emerald end holds best's violet end.
    auto side = tree_side(g, tree, e, g.emerald_end(e));
    if (side[g.violet_end(best)] && !side[g.emerald_end(best)]) out |= bit(e);
  }
  return out;
}

bool base_cut_order_holds(const RibbonGraph& g, EdgeMask tree) {
  const TOrder tv = t_order(g, tree, Color::Violet, Color::Violet);
  for (int e : edges_of(tree)) {
    auto side = tree_side(g, tree, e, g.base_node());
    std::vector<int> violet_base, emerald_base;
    for (int f : edges_of(fundamental_cut(g, tree, e)))
      (side[g.violet_end(f)] ? violet_base : emerald_base).push_back(f);
    for (int a : violet_base) {
      if (tv.rank[a] > tv.rank[e]) return false;
      for (int b : emerald_base)
        if (tv.rank[a] >= tv.rank[b]) return false;
    }
  }
  return true;
}

bool EdgeCharacterization::agree() const {
  return std::all_of(conditions.begin(), conditions.end(), [&](bool b) { return b == conditions[0]; });
}

std::vector<EdgeCharacterization> characterize_tree(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                                    size_t index) {
  const EdgeMask t = trees.at(index);
  const TOrder te = t_order(g, t, Color::Violet, Color::Emerald);
  const TOrder tv = t_order(g, t, Color::Violet, Color::Violet);
  const EdgeMask sp = semi_passive_edges(g, t, te.rank);
  const HypertreeSet be(g, Color::Emerald);
  const Hypertree fe = degree_vector(g, t, Color::Emerald);
  std::vector<int> inactive = internally_inactive(g, be, fe, te.emerald);
  std::set<int> inactive_set(inactive.begin(), inactive.end());

  EdgeMask first_diffs = 0;
  for (size_t j = 0; j < index; ++j) {
    int e = first_divergence(g, trees[j], t, Color::Violet, Color::Violet);
    if (e >= 0 && has(t, e) && !has(trees[j], e)) first_diffs |= bit(e);
  }

  std::vector<EdgeCharacterization> out;
  for (int e : edges_of(t)) {
    auto side = tree_side(g, t, e, g.base_node());
    const EdgeMask cut = fundamental_cut(g, t, e);
    const bool violet_base = side[g.violet_end(e)];
    int largest = e;
    bool emerald_in_base = false;
    for (int f : edges_of(cut)) {
      if (tv.rank[f] > tv.rank[largest]) largest = f;
      if (side[g.emerald_end(f)]) emerald_in_base = true;
    }
    EdgeCharacterization c{e, {}};
    c.conditions[0] = has(first_diffs, e);
    c.conditions[1] = has(sp, e);
    c.conditions[2] = violet_base && inactive_set.count(g.emerald_end(e)) > 0;
    c.conditions[3] = largest != e;
    c.conditions[4] = violet_base && emerald_in_base;
    out.push_back(c);
  }
  return out;
}

bool JaegerBijection::injective_on_both_sides() const {
  std::set<Hypertree> a(emerald.begin(), emerald.end()), b(violet.begin(), violet.end());
  return a.size() == emerald.size() && b.size() == violet.size();
}

JaegerBijection hypertree_pairs(const RibbonGraph& g, const std::vector<EdgeMask>& trees) {
  JaegerBijection r;
  for (EdgeMask t : trees) {
    r.emerald.push_back(degree_vector(g, t, Color::Emerald));
    r.violet.push_back(degree_vector(g, t, Color::Violet));
  }
  return r;
}

MatchingReport graph_activity_matching(const RibbonGraph& bip, EdgeMask tree) {
  MatchingReport r;
  const TOrder tv = t_order(bip, tree, Color::Violet, Color::Violet);
  r.semi_passive = semi_passive_edges(bip, tree, tv.rank);
  const HypertreeSet be(bip, Color::Emerald), bv(bip, Color::Violet);
  r.inactive_emerald = internally_inactive(bip, be, degree_vector(bip, tree, Color::Emerald), tv.emerald);
  r.inactive_violet = internally_inactive(bip, bv, degree_vector(bip, tree, Color::Violet), tv.violet);
  r.counts_equal = r.inactive_emerald.size() == r.inactive_violet.size();
  std::vector<int> ends_e, ends_v;
  for (int e : edges_of(r.semi_passive)) {
    ends_e.push_back(bip.emerald_end(e));
    ends_v.push_back(bip.violet_end(e));
  }
  auto same_set = [](std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end() && a == b;
  };
  r.matches = same_set(ends_e, r.inactive_emerald) && same_set(ends_v, r.inactive_violet);
  return r;
}

}  // namespace hb
