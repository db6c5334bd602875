#include "hyperbernardi/bernardi.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace hb {

static int g_jobs = 0;

void set_jobs(int jobs) {
  g_jobs = jobs;
  if (jobs > 0) omp_set_num_threads(jobs);
}

int jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }

Color hypertree_side(Variant v) {
  return v == Variant::HtE_CutV || v == Variant::HtE_CutE ? Color::Emerald : Color::Violet;
}

Color cut_side(Variant v) { return v == Variant::HtE_CutV || v == Variant::HtV_CutV ? Color::Violet : Color::Emerald; }

Variant make_variant(Color hypertree, Color cut) {
  if (hypertree == Color::Emerald) return cut == Color::Violet ? Variant::HtE_CutV : Variant::HtE_CutE;
  return cut == Color::Violet ? Variant::HtV_CutV : Variant::HtV_CutE;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::HtE_CutV: return "htE-cutV";
    case Variant::HtE_CutE: return "htE-cutE";
    case Variant::HtV_CutV: return "htV-cutV";
    case Variant::HtV_CutE: return "htV-cutE";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (Variant v : kVariants)
    if (variant_name(v) == s) return v;
  throw InputError("unknown variant '" + s + "' (expected htE-cutV, htE-cutE, htV-cutV or htV-cutE)");
}

namespace {

// Hypertree on the emerald class, cutting at nodes of color `cut`.
BernardiRun run_emerald(const RibbonGraph& g, const std::vector<int>& values, Color cut) {
  const int m = g.edge_count();
  HypertreeOracle oracle(g, Color::Emerald, values);
  EdgeMask live = g.all_edges();
  if (!oracle.feasible(live)) throw InputError("input vector is not a hypertree");

  BernardiRun run;
  run.first_reached.assign(g.node_count(), -2);
  EdgeMask pinned = 0;
  std::array<EdgeMask, 2> trav{0, 0};  // indexed by the color of the node traversed from
  std::vector<int> times_current(m, 0);

  auto fail = [](const std::string& why) { return TheoremViolation("Bernardi run: " + why); };
  auto reach = [&](int x, int step) {
    if (run.first_reached[x] == -2) run.first_reached[x] = step;
  };
  auto traverse = [&](int e, int from, std::vector<Traversal>& log) {
    int c = static_cast<int>(g.color(from));
    if (has(trav[c], e)) return false;
    trav[c] |= bit(e);
    log.push_back({e, from});
    if (!is_forest(g, trav[0] | trav[1])) throw fail("traversed edges contain a cycle");
    return true;
  };

  const int b0 = g.base_node();
  const int base = g.base_edge();
  Dart cur{b0, base};
  reach(b0, -1);
  if (g.color(b0) != cut) {
    traverse(base, b0, run.initial);
    int b1 = g.other_end(base, b0);
    reach(b1, -1);
    cur = {b1, g.next_live(b1, base, live)};
  }

  for (int guard = 0;; ++guard) {
    if (guard > m) throw fail("more steps than edges");
    const int x = cur.node;
    const int e = cur.edge;
    if (times_current[e] > 0) {
      // The only legal way back to an examined edge is the final re-traversal.
      if (has(trav[static_cast<int>(cut)], e)) break;
      throw fail("edge " + g.edge_name(e) + " became current twice");
    }
    ++times_current[e];
    run.current_order.push_back(e);
    const int step = static_cast<int>(run.steps.size());
    BernardiStep s{e, x, popcount(live), Decision::Kept, {}};
    if (oracle.feasible(live & ~bit(e), pinned)) {
      if (has(pinned, e) || has(trav[0] | trav[1], e)) throw fail("kept or traversed edge removed");
      live &= ~bit(e);
      s.decision = Decision::Removed;
      run.steps.push_back(s);
      int nx = g.next_live(x, e, live);
      if (nx < 0) throw fail("current node lost all its edges");
      cur = {x, nx};
      continue;
    }
    pinned |= bit(e);
    if (!traverse(e, x, s.traversals)) throw fail("first examination of an edge already traversed from the cut side");
    const int y = g.other_end(e, x);
    reach(y, step);
    const int e2 = g.next_live(y, e, live);
    bool stop = !traverse(e2, y, s.traversals);
    run.steps.push_back(s);
    if (stop) break;
    const int z = g.other_end(e2, y);
    reach(z, step);
    cur = {z, g.next_live(z, e2, live)};
  }

  for (int e = 0; e < m; ++e)
    if (times_current[e] != 1) throw fail("edge " + g.edge_name(e) + " was current " + std::to_string(times_current[e]) + " times");
  if (!is_spanning_tree(g, live)) throw fail("final current graph is not a spanning tree");
  if (degree_vector(g, live, Color::Emerald).values != values) throw fail("result does not realize the hypertree");
  run.tree = live;
  run.feasibility_searches = oracle.searches();
  return run;
}

}  // namespace

BernardiRun run_bernardi(const RibbonGraph& g, const Hypertree& f, Variant v) {
  if (f.side != hypertree_side(v)) throw InputError("hypertree side does not match the variant");
  if (!g.colored()) throw InputError("Bernardi processes need a bipartite graph");
  BernardiRun run;
  if (f.side == Color::Emerald) {
    run = run_emerald(g, f.values, cut_side(v));
  } else {
    // Swap the classes: the violet hypertree becomes emerald, and the cut color flips with it.
    run = run_emerald(transpose(g), f.values, opposite(cut_side(v)));
  }
  run.variant = v;
  run.f = f;
  return run;
}

std::vector<BernardiRun> run_all_bernardi(const RibbonGraph& g, const std::vector<Hypertree>& fs, Variant v,
                                          Exec exec) {
  std::vector<BernardiRun> out(fs.size());
  const int n = static_cast<int>(fs.size());
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) out[i] = run_bernardi(g, fs[i], v);
    return out;
  }
  std::string error;
  bool violation = false;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = run_bernardi(g, fs[i], v);
    } catch (const std::exception& ex) {
#pragma omp critical
      {
        if (error.empty()) {
          error = ex.what();
          violation = dynamic_cast<const TheoremViolation*>(&ex) != nullptr;
        }
      }
    }
  }
  if (!error.empty()) {
    if (violation) throw TheoremViolation(error);
    throw InputError(error);
  }
  return out;
}

NodeOrder induced_class_order(const RibbonGraph& g, const BernardiRun& run, Color cls) {
  auto rank = ranks(run.current_order, g.edge_count());
  NodeOrder o = g.class_nodes(cls);
  std::vector<int> key(g.node_count(), g.edge_count());
  for (int x : o)
    for (int e : g.rotation(x)) key[x] = std::min(key[x], rank[e]);
  std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return key[a] < key[b]; });
  return o;
}

NodeOrder reached_class_order(const RibbonGraph& g, const BernardiRun& run, Color cls) {
  NodeOrder o = g.class_nodes(cls);
  auto key = [&](int x) { return run.first_reached[x] == -2 ? 1 << 30 : run.first_reached[x]; };
  std::stable_sort(o.begin(), o.end(), [&](int a, int b) { return key(a) < key(b); });
  return o;
}

bool consecutive_current_arcs(const RibbonGraph& g, const BernardiRun& run) {
  const Color cut = cut_side(run.variant);
  std::vector<std::vector<int>> at(g.node_count());
  for (const auto& s : run.steps) at[s.node].push_back(s.edge);
  for (int x = 0; x < g.node_count(); ++x) {
    if (g.color(x) != cut) {
      if (!at[x].empty()) return false;
      continue;
    }
    const auto& seq = at[x];
    if (static_cast<int>(seq.size()) != g.degree(x)) return false;
    const int d = g.degree(x);
    const int p0 = g.position(x, seq[0]);
    for (int i = 1; i < d; ++i)
      if (g.position(x, seq[i]) != (p0 + i) % d) return false;
  }
  return true;
}

Inactivities embedding_inactivities(const RibbonGraph& g, const HypertreeSet& b, const BernardiRun& run) {
  NodeOrder o = induced_class_order(g, run, run.f.side);
  return {static_cast<int>(internally_inactive(g, b, run.f, o).size()),
          static_cast<int>(externally_inactive(g, b, run.f, o).size())};
}

Inactivities embedding_inactivities(const RibbonGraph& g, const Hypertree& f, Variant v) {
  HypertreeSet b(g, f.side);
  return embedding_inactivities(g, b, run_bernardi(g, f, v));
}

namespace {

IntegerPolynomial bernardi_poly(const RibbonGraph& g, Variant v, Exec exec, bool interior) {
  HypertreeSet b(g, hypertree_side(v));
  auto runs = run_all_bernardi(g, b.all(), v, exec);
  IntegerPolynomial p;
  for (const auto& r : runs) {
    auto in = embedding_inactivities(g, b, r);
    p.add_term(interior ? in.internal : in.external);
  }
  return p;
}

}  // namespace

IntegerPolynomial bernardi_interior(const RibbonGraph& g, Variant v, Exec exec) {
  return bernardi_poly(g, v, exec, true);
}

IntegerPolynomial bernardi_exterior(const RibbonGraph& g, Variant v, Exec exec) {
  return bernardi_poly(g, v, exec, false);
}

CompositionReport check_composition(const RibbonGraph& g, const Hypertree& f) {
  if (f.side != Color::Emerald) throw InputError("check_composition takes a hypertree on the emerald class");
  CompositionReport r;
  const EdgeMask t = run_bernardi(g, f, Variant::HtE_CutV).tree;
  const Hypertree fv = degree_vector(g, t, Color::Violet);
  r.vcut_roundtrip = run_bernardi(g, fv, Variant::HtV_CutV).tree == t;
  const RibbonGraph rev = reversed_setup(g);
  r.reversed_ecut = run_bernardi(rev, f, Variant::HtE_CutE).tree == t;
  r.reversed_htv_ecut = run_bernardi(rev, fv, Variant::HtV_CutE).tree == t;
  return r;
}

ConjectureReport check_conjectures(const RibbonGraph& g) {
  ConjectureReport r;
  r.interior = interior_polynomial(g, Color::Emerald);
  r.exterior = exterior_polynomial(g, Color::Emerald);
  r.interior_cut_v = bernardi_interior(g, Variant::HtE_CutV);
  r.exterior_cut_e = bernardi_exterior(g, Variant::HtE_CutE);
  r.exterior_cut_v = bernardi_exterior(g, Variant::HtE_CutV);
  return r;
}

bool graph_specialization_check(const RibbonGraph& ordinary, EdgeMask tree) {
  if (ordinary.colored()) throw InputError("graph_specialization_check expects an ordinary graph");
  const std::vector<int> expected = edge_order_from_tour(tour_of_tree(ordinary, tree), ordinary.edge_count());
  Subdivision s = subdivide(ordinary);
  Hypertree f{Color::Emerald, std::vector<int>(s.bip.class_size(Color::Emerald), 0)};
  for (int e = 0; e < ordinary.edge_count(); ++e) {
    int mid = s.bip.emerald_end(s.half[e][0]);
    f.values[s.bip.class_index(mid)] = has(tree, e) ? 1 : 0;
  }
  for (Variant v : {Variant::HtE_CutE, Variant::HtE_CutV}) {
    NodeOrder o = induced_class_order(s.bip, run_bernardi(s.bip, f, v), Color::Emerald);
    std::vector<int> got;
    for (int mid : o) got.push_back(ordinary.find_edge(s.bip.node_name(mid)));
    if (got != expected) return false;
  }
  return true;
}

}  // namespace hb
