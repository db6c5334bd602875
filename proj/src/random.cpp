#include <algorithm>
#include <cmath>
#include <set>

#include "hyperbernardi/harness.hpp"

namespace hb {

RibbonGraph generate_random_instance(std::uint64_t seed, const Bounds& b) {
  if (b.max_emerald < 1 || b.max_violet < 1 || b.max_edges < 1) throw InputError("bounds must allow one edge");
  Rng rng(seed);
  int ne = rng.uniform(1, b.max_emerald);
  int nv = rng.uniform(1, b.max_violet);
  while (ne + nv - 1 > b.max_edges) (ne > nv ? ne : nv)--;
  const int lo = ne + nv - 1;
  const int hi = std::min(b.max_edges, ne * nv);
  const int m = rng.uniform(lo, hi);

  RibbonGraph g(true);
  for (int i = 0; i < ne; ++i) g.add_node("e" + std::to_string(i), Color::Emerald);
  for (int j = 0; j < nv; ++j) g.add_node("v" + std::to_string(j), Color::Violet);
  std::set<std::pair<int, int>> used;
  auto add = [&](int i, int j) {
    used.insert({i, j});
    g.add_edge("a" + std::to_string(g.edge_count()), i, ne + j);
  };
  // Random spanning tree: attach each new node to a random earlier one of the other color.
  std::vector<int> order(ne + nv);
  for (int i = 0; i < ne + nv; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<int> placed_e, placed_v;
  auto place = [&](int x) { (x < ne ? placed_e : placed_v).push_back(x); };
  place(order[0]);
  std::vector<int> pending(order.begin() + 1, order.end());
  while (!pending.empty()) {
    // Pick a pending node that has a placed partner of the other color.
    size_t k = 0;
    for (; k < pending.size(); ++k) {
      bool em = pending[k] < ne;
      if (!(em ? placed_v : placed_e).empty()) break;
    }
    int x = pending[k];
    pending.erase(pending.begin() + k);
    if (x < ne) {
      int y = placed_v[rng.below(placed_v.size())];
      add(x, y - ne);
    } else {
      int y = placed_e[rng.below(placed_e.size())];
      add(y, x - ne);
    }
    place(x);
  }
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < nv; ++j)
      if (!used.count({i, j})) free.push_back({i, j});
  rng.shuffle(free);
  for (int k = 0; g.edge_count() < m; ++k) add(free[k].first, free[k].second);
  g.finalize();
  return random_setup(g, rng);
}

RibbonGraph random_setup(const RibbonGraph& g, Rng& rng) {
  std::vector<std::vector<int>> rot(g.node_count());
  for (int x = 0; x < g.node_count(); ++x) {
    rot[x] = g.rotation(x);
    rng.shuffle(rot[x]);
  }
  RibbonGraph h = with_rotations(g, rot);
  int x = static_cast<int>(rng.below(g.node_count()));
  int e = h.rotation(x)[rng.below(h.rotation(x).size())];
  return with_base(h, x, e);
}

RibbonGraph generate_random_ordinary(std::uint64_t seed, int max_vertices, int max_edges) {
  if (max_vertices < 2 || max_edges < max_vertices - 1) throw InputError("infeasible bounds for an ordinary graph");
  Rng rng(seed);
  const int n = rng.uniform(2, max_vertices);
  const int m = rng.uniform(n - 1, max_edges);
  RibbonGraph g(false);
  for (int i = 0; i < n; ++i) g.add_node("u" + std::to_string(i));
  for (int i = 1; i < n; ++i) g.add_edge("c" + std::to_string(g.edge_count()), static_cast<int>(rng.below(i)), i);
  while (g.edge_count() < m) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n - 1));
    if (b >= a) ++b;
    g.add_edge("c" + std::to_string(g.edge_count()), a, b);
  }
  g.finalize();
  return random_setup(g, rng);
}

RibbonGraph rotations_from_drawing(const RibbonGraph& g, const std::vector<std::array<double, 2>>& pos,
                                   const std::vector<bool>& ccw) {
  std::vector<std::vector<int>> rot(g.node_count());
  for (int x = 0; x < g.node_count(); ++x) {
    std::vector<std::pair<double, int>> a;
    for (int e : g.rotation(x)) {
      int y = g.other_end(e, x);
      double ang = std::atan2(pos[y][1] - pos[x][1], pos[y][0] - pos[x][0]);
      a.push_back({ccw[x] ? ang : -ang, e});
    }
    std::sort(a.begin(), a.end());
    for (auto& p : a) rot[x].push_back(p.second);
  }
  return with_rotations(g, rot);
}

}  // namespace hb
