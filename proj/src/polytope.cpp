#include "hyperbernardi/polytope.hpp"

#include <algorithm>
#include <set>

#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/random.hpp"

namespace hb {

void require_simple(const RibbonGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto p = std::minmax(g.ends(e)[0], g.ends(e)[1]);
    if (!seen.insert(p).second) throw InputError("root polytope operations need a graph without parallel edges");
  }
}

RationalPoint vertex_point(const RibbonGraph& g, int edge) {
  RationalPoint p{std::vector<Rational>(g.node_count(), 0)};
  p.x[g.ends(edge)[0]] = 1;
  p.x[g.ends(edge)[1]] = 1;
  return p;
}

RationalPoint marker(const RibbonGraph& g, const Hypertree& f) {
  const Color s = f.side;
  const Color o = opposite(s);
  const long ns = g.class_size(s), no = g.class_size(o);
  RationalPoint p{std::vector<Rational>(g.node_count(), 0)};
  const auto& nodes = g.class_nodes(s);
  for (size_t i = 0; i < nodes.size(); ++i)
    p.x[nodes[i]] = Rational(static_cast<long>(f.values[i]), no) + Rational(1, ns * no);
  for (int y : g.class_nodes(o)) p.x[y] = Rational(1, no);
  for (auto& c : p.x) c.canonicalize();
  return p;
}

std::optional<std::vector<Rational>> barycentric(const RibbonGraph& g, EdgeMask forest, const RationalPoint& p) {
  if (!is_forest(g, forest)) throw InputError("barycentric coordinates need a forest");
  // Peel leaves: a leaf's coordinate is carried by its only forest edge.
  std::vector<Rational> r = p.x;
  std::vector<int> deg(g.node_count(), 0);
  for (int e : edges_of(forest)) {
    ++deg[g.ends(e)[0]];
    ++deg[g.ends(e)[1]];
  }
  const std::vector<int> es = edges_of(forest);
  std::vector<Rational> lambda(es.size());
  EdgeMask left = forest;
  bool progress = true;
  while (left && progress) {
    progress = false;
    for (int x = 0; x < g.node_count(); ++x) {
      if (deg[x] != 1) continue;
      int e = -1;
      for (int f : g.rotation(x))
        if (has(left, f)) e = f;
      int y = g.other_end(e, x);
      size_t idx = std::find(es.begin(), es.end(), e) - es.begin();
      lambda[idx] = r[x];
      r[y] -= r[x];
      r[x] = 0;
      left &= ~bit(e);
      --deg[x];
      --deg[y];
      progress = true;
    }
  }
  for (const auto& v : r)
    if (v != 0) return std::nullopt;
  Rational total = 0;
  for (const auto& l : lambda) total += l;
  if (total != 1) return std::nullopt;
  return lambda;
}

bool simplex_contains(const RibbonGraph& g, EdgeMask tree, const RationalPoint& p, bool strict) {
  auto lam = barycentric(g, tree, p);
  if (!lam) return false;
  for (const auto& l : *lam)
    if (strict ? l <= 0 : l < 0) return false;
  return true;
}

bool trees_compatible(const RibbonGraph& g, EdgeMask t1, EdgeMask t2) {
  // Arcs: t1 edges emerald -> violet, t2 edges violet -> emerald (shared edges both ways).
  // A directed cycle of length >= 4 is an alternating cycle.
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> arcs;
  for (int e : edges_of(t1)) arcs.insert({g.emerald_end(e), g.violet_end(e)});
  for (int e : edges_of(t2)) arcs.insert({g.violet_end(e), g.emerald_end(e)});
  for (auto [a, b] : arcs) adj[a].push_back(b);

  // Tarjan SCC.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  int counter = 0, ncomp = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = 1;
    for (int w : adj[v]) {
      if (index[w] < 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on[w] = 0;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] < 0) dfs(dfs, v);

  // Each strongly connected piece must be a tree of 2-cycles.
  std::vector<int> size(ncomp, 0), links(ncomp, 0);
  for (int v = 0; v < n; ++v) ++size[comp[v]];
  for (auto [a, b] : arcs) {
    if (comp[a] != comp[b]) continue;
    if (!arcs.count({b, a})) return false;
    if (a < b) ++links[comp[a]];
  }
  for (int c = 0; c < ncomp; ++c)
    if (links[c] != size[c] - 1) return false;
  return true;
}

std::vector<std::pair<int, int>> incompatible_pairs(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                                    Exec exec) {
  const int n = static_cast<int>(trees.size());
  std::vector<std::vector<std::pair<int, int>>> per(n);
  auto row = [&](int i) {
    for (int j = i + 1; j < n; ++j)
      if (!trees_compatible(g, trees[i], trees[j])) per[i].push_back({i, j});
  };
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) row(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) row(i);
  }
  std::vector<std::pair<int, int>> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

int tour_divergence(const RibbonGraph& g, EdgeMask t1, EdgeMask t2) {
  Dart cur{g.base_node(), g.base_edge()};
  for (int i = 0; i < 2 * g.edge_count(); ++i) {
    const int e = cur.edge;
    if (has(t1, e) != has(t2, e)) return e;
    const int x = has(t1, e) ? g.other_end(e, cur.node) : cur.node;
    cur = {x, g.next_live(x, e, g.all_edges())};
  }
  return -1;
}

int functional_value(const RibbonGraph& g, const std::vector<int>& k, int e) {
  return k[g.ends(e)[0]] + k[g.ends(e)[1]];
}

}  // namespace

std::optional<std::vector<int>> separating_functional(const RibbonGraph& g, EdgeMask t1, EdgeMask t2) {
  const int e = tour_divergence(g, t1, t2);
  if (e < 0) return std::nullopt;
  const EdgeMask ta = has(t1, e) ? t1 : t2;
  const EdgeMask tb = has(t1, e) ? t2 : t1;
  auto side = tree_side(g, ta, e, g.violet_end(e));
  std::vector<int> k(g.node_count());
  for (int x = 0; x < g.node_count(); ++x) {
    bool em = g.color(x) == Color::Emerald;
    k[x] = side[x] ? (em ? -1 : 1) : (em ? 1 : -1);
  }
  bool a_pos = false, b_neg = false;
  for (int f : edges_of(ta)) {
    int v = functional_value(g, k, f);
    if (v < 0) return std::nullopt;
    a_pos = a_pos || v > 0;
  }
  for (int f : edges_of(tb)) {
    int v = functional_value(g, k, f);
    if (v > 0) return std::nullopt;
    b_neg = b_neg || v < 0;
  }
  if (!a_pos || !b_neg) return std::nullopt;
  // Normalize so that the functional is >= 0 on t2.
  if (ta != t2)
    for (auto& v : k) v = -v;
  return k;
}

DissectionReport verify_dissection(const RibbonGraph& g, const std::vector<EdgeMask>& trees, Exec exec,
                                   int pairwise_max_edges) {
  require_simple(g);
  DissectionReport r;
  const auto be = enumerate_hypertrees(g, Color::Emerald);
  const auto bv = enumerate_hypertrees(g, Color::Violet);
  r.trees = trees.size();
  r.emerald_hypertrees = be.size();
  r.violet_hypertrees = bv.size();
  r.counts_ok = trees.size() == be.size() && be.size() == bv.size();
  if (!r.counts_ok)
    r.witnesses.push_back("counts differ: " + std::to_string(trees.size()) + " simplices, " +
                          std::to_string(be.size()) + " emerald and " + std::to_string(bv.size()) +
                          " violet hypertrees");

  std::vector<const Hypertree*> all;
  for (auto& f : be) all.push_back(&f);
  for (auto& f : bv) all.push_back(&f);
  const int nm = static_cast<int>(all.size());
  std::vector<int> hits(nm, 0);
  auto count = [&](int i) {
    RationalPoint p = marker(g, *all[i]);
    for (EdgeMask t : trees) hits[i] += simplex_contains(g, t, p, true);
  };
  if (exec == Exec::Serial) {
    for (int i = 0; i < nm; ++i) count(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nm; ++i) count(i);
  }
  r.markers_ok = true;
  for (int i = 0; i < nm; ++i)
    if (hits[i] != 1) {
      r.markers_ok = false;
      r.witnesses.push_back(std::string(color_name(all[i]->side)) + " marker " + format_hypertree(g, *all[i]) +
                            " lies strictly inside " + std::to_string(hits[i]) + " simplices");
    }

  if (g.edge_count() <= pairwise_max_edges) {
    r.pairwise_checked = true;
    for (size_t i = 0; i < trees.size(); ++i)
      for (size_t j = i + 1; j < trees.size(); ++j)
        if (!separating_functional(g, trees[i], trees[j])) {
          r.pairwise_ok = false;
          r.witnesses.push_back("no separation certificate for trees #" + std::to_string(i) + " and #" +
                                std::to_string(j));
        }
  }
  return r;
}

TriangulationReport verify_triangulation(const RibbonGraph& g, const std::vector<EdgeMask>& trees, Exec exec) {
  TriangulationReport r;
  r.dissection = verify_dissection(g, trees, exec);
  r.incompatible = incompatible_pairs(g, trees, exec);
  return r;
}

std::vector<long long> shelling_h_vector(const RibbonGraph& g, const std::vector<EdgeMask>& trees) {
  std::vector<long long> h;
  for (EdgeMask t : trees) {
    const TOrder te = t_order(g, t, Color::Violet, Color::Emerald);
    int k = popcount(semi_passive_edges(g, t, te.rank));
    if (static_cast<int>(h.size()) <= k) h.resize(k + 1, 0);
    ++h[k];
  }
  return h;
}

ShellingReport geometric_shelling_check(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                        int samples_per_facet, std::uint64_t seed) {
  require_simple(g);
  ShellingReport r;
  r.h = shelling_h_vector(g, trees);
  Rng rng(seed);
  std::vector<long long> geometric_h;
  for (size_t i = 0; i < trees.size(); ++i) {
    const EdgeMask t = trees[i];
    const TOrder te = t_order(g, t, Color::Violet, Color::Emerald);
    const EdgeMask sp = semi_passive_edges(g, t, te.rank);
    int covered = 0;
    for (int e : edges_of(t)) {
      ++r.facets_checked;
      const EdgeMask facet = t & ~bit(e);
      const std::vector<int> fv = edges_of(facet);
      if (has(sp, e)) {
        ++covered;
        for (int s = 0; s < samples_per_facet; ++s) {
          // Positive rational weights on the facet's vertices.
          std::vector<long> w(fv.size());
          long total = 0;
          for (auto& x : w) total += (x = 1 + static_cast<long>(rng.below(997)));
          RationalPoint p{std::vector<Rational>(g.node_count(), 0)};
          for (size_t k = 0; k < fv.size(); ++k) {
            Rational c(w[k], total);
            c.canonicalize();
            p.x[g.ends(fv[k])[0]] += c;
            p.x[g.ends(fv[k])[1]] += c;
          }
          bool inside = false;
          for (size_t j = 0; j < i && !inside; ++j) inside = simplex_contains(g, trees[j], p, false);
          ++r.samples_checked;
          if (!inside) {
            r.ok = false;
            r.witnesses.push_back("tree #" + std::to_string(i) + ": facet opposite " + g.edge_name(e) +
                                  " has a sample point outside the earlier simplices");
            break;
          }
        }
      } else {
        for (size_t j = 0; j < i; ++j) {
          auto k = separating_functional(g, trees[j], t);
          bool ok = k.has_value();
          if (ok) {
            bool positive = false;
            for (int f : fv) positive = positive || functional_value(g, *k, f) > 0;
            ok = positive;
          }
          if (!ok) {
            r.ok = false;
            r.witnesses.push_back("tree #" + std::to_string(i) + ": facet opposite " + g.edge_name(e) +
                                  " not separated from tree #" + std::to_string(j));
            break;
          }
        }
      }
    }
    if (i == 0 && covered != 0) {
      r.ok = false;
      r.witnesses.push_back("first tree has semi-passive edges");
    }
    if (static_cast<int>(geometric_h.size()) <= covered) geometric_h.resize(covered + 1, 0);
    ++geometric_h[covered];
  }
  if (geometric_h != r.h) r.ok = false;
  return r;
}

Rational simplex_gram_determinant(const RibbonGraph& g, EdgeMask tree) {
  const std::vector<int> es = edges_of(tree);
  const int k = static_cast<int>(es.size()) - 1;
  if (k <= 0) return 1;
  std::vector<std::vector<int>> d(k, std::vector<int>(g.node_count(), 0));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < 2; ++c) {
      d[i][g.ends(es[i + 1])[c]] += 1;
      d[i][g.ends(es[0])[c]] -= 1;
    }
  }
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long s = 0;
      for (int x = 0; x < g.node_count(); ++x) s += d[i][x] * d[j][x];
      m[i][j] = s;
    }
  Rational det = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && m[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r2 = c + 1; r2 < k; ++r2) {
      if (m[r2][c] == 0) continue;
      Rational f = m[r2][c] / m[c][c];
      for (int j = c; j < k; ++j) m[r2][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace hb
