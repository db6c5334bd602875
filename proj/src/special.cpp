#include <algorithm>
#include <functional>

#include "hyperbernardi/harness.hpp"
#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/polytope.hpp"

namespace hb {

RibbonGraph generate_noncrossing_setup(int m, int n) {
  if (m < 0 || n < 0) throw InputError("noncrossing setup needs m, n >= 0");
  if ((m + 1) * (n + 1) > kMaxEdges) throw InputError("noncrossing setup too large");
  RibbonGraph g(true);
  std::vector<std::array<double, 2>> pos;
  for (int i = 0; i <= m; ++i) {
    g.add_node("e" + std::to_string(i), Color::Emerald);
    pos.push_back({double(i), 0.0});
  }
  for (int j = 0; j <= n; ++j) {
    g.add_node("v" + std::to_string(j), Color::Violet);
    pos.push_back({double(j), 1.0});
  }
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) g.add_edge("e" + std::to_string(i) + "v" + std::to_string(j), i, m + 1 + j);
  g.finalize();
  RibbonGraph k = rotations_from_drawing(g, pos, std::vector<bool>(g.node_count(), true));
  return with_base(k, 0, k.find_edge("e0v" + std::to_string(n)));
}

bool is_noncrossing_tree(const RibbonGraph& k, EdgeMask tree) {
  // Two segments between the lines cross iff their endpoint orders disagree.
  auto coord = [&](int x) { return k.class_index(x); };
  std::vector<int> es = edges_of(tree);
  for (size_t a = 0; a < es.size(); ++a)
    for (size_t b = a + 1; b < es.size(); ++b) {
      int de = coord(k.emerald_end(es[a])) - coord(k.emerald_end(es[b]));
      int dv = coord(k.violet_end(es[a])) - coord(k.violet_end(es[b]));
      if (static_cast<long long>(de) * dv < 0) return false;
    }
  return true;
}

NoncrossingReport check_noncrossing(int m, int n) {
  RibbonGraph k = generate_noncrossing_setup(m, n);
  NoncrossingReport r;
  std::vector<EdgeMask> jt = enumerate_jaeger_trees(k, Color::Emerald);
  std::vector<EdgeMask> nc;
  for (EdgeMask t : spanning_trees(k))
    if (is_noncrossing_tree(k, t)) nc.push_back(t);
  r.jaeger = jt.size();
  r.noncrossing = nc.size();
  r.expected = binomial(m + n, m);
  std::vector<EdgeMask> sorted = jt;
  std::sort(sorted.begin(), sorted.end());
  std::sort(nc.begin(), nc.end());
  r.sets_equal = sorted == nc;
  std::vector<Hypertree> fs;
  for (EdgeMask t : jt) fs.push_back(degree_vector(k, t, Color::Emerald));
  r.lex_ascending = std::is_sorted(fs.begin(), fs.end()) &&
                    std::adjacent_find(fs.begin(), fs.end()) == fs.end();
  r.lex_descending = std::is_sorted(fs.rbegin(), fs.rend()) &&
                     std::adjacent_find(fs.begin(), fs.end()) == fs.end();
  return r;
}

ArborescenceReport verify_arborescence_duality(const RibbonGraph& g) {
  Faces faces = faces_of_embedding(g);
  ArborescenceReport r;
  r.genus = faces.genus;
  if (faces.genus != 0) throw InputError("arborescence duality needs a planar embedding");
  const int b0 = g.base_node(), base = g.base_edge();
  if (g.color(b0) != Color::Violet) throw InputError("arborescence duality needs a violet base node");
  r.root_face = faces.face_of[base][g.ends(base)[0] == b0 ? 0 : 1];

  // Dual arc of e runs from the face right of (v, e) to the face right of (e, e), which
  // leaves the violet end on its left.
  const int nf = static_cast<int>(faces.walks.size());
  std::vector<std::vector<int>> incoming(nf);
  std::vector<std::array<int, 2>> arc(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    arc[e] = {faces.face_of[e][1], faces.face_of[e][0]};
    if (arc[e][0] != arc[e][1]) incoming[arc[e][1]].push_back(e);
  }

  std::vector<EdgeMask> duals;
  std::vector<int> parent_arc(nf, -1);
  std::function<void(int)> choose = [&](int f) {
    if (f == nf) {
      // Every face must reach the root through chosen arcs.
      for (int s = 0; s < nf; ++s) {
        int x = s, steps = 0;
        while (x != r.root_face && steps <= nf) {
          x = arc[parent_arc[x]][0];
          ++steps;
        }
        if (x != r.root_face) return;
      }
      EdgeMask a = 0;
      for (int s = 0; s < nf; ++s)
        if (s != r.root_face) a |= bit(parent_arc[s]);
      duals.push_back(g.all_edges() & ~a);
      return;
    }
    if (f == r.root_face) return choose(f + 1);
    for (int e : incoming[f]) {
      parent_arc[f] = e;
      choose(f + 1);
    }
    parent_arc[f] = -1;
  };
  choose(0);
  r.arborescences = duals.size();
  std::vector<EdgeMask> jt = enumerate_jaeger_trees(g, Color::Violet);
  r.jaeger = jt.size();
  std::sort(duals.begin(), duals.end());
  std::sort(jt.begin(), jt.end());
  r.equal = duals == jt;
  return r;
}

}  // namespace hb
