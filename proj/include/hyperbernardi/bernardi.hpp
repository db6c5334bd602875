#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperbernardi/exec.hpp"
#include "hyperbernardi/graph.hpp"
#include "hyperbernardi/hypertree.hpp"

namespace hb {

enum class Variant { HtE_CutV, HtE_CutE, HtV_CutV, HtV_CutE };
constexpr std::array<Variant, 4> kVariants{Variant::HtE_CutV, Variant::HtE_CutE, Variant::HtV_CutV,
                                           Variant::HtV_CutE};

Color hypertree_side(Variant v);
Color cut_side(Variant v);
Variant make_variant(Color hypertree, Color cut);
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

enum class Decision { Removed, Kept };

struct Traversal {
  int edge;
  int from;  // node the edge was traversed from
};

struct BernardiStep {
  int edge;        // current edge
  int node;        // current node, always of the cut color
  int live_edges;  // size of the current graph when the edge is examined
  Decision decision;
  std::vector<Traversal> traversals;
};

struct BernardiRun {
  Variant variant;
  Hypertree f;
  std::vector<Traversal> initial;  // base edge traversed before the first step, if any
  std::vector<BernardiStep> steps;
  EdgeMask tree = 0;
  std::vector<int> current_order;  // edges in the order they became current
  std::vector<int> first_reached;  // per node: step index at which the walk first stood there (-1: start)
  long long feasibility_searches = 0;
};

// Throws InputError if f is not a hypertree, TheoremViolation if any of the run invariants
// (each edge current once, acyclic traversed subgraph, no removal after keep or traversal,
// result realizes f) fails.
BernardiRun run_bernardi(const RibbonGraph& g, const Hypertree& f, Variant v);

std::vector<BernardiRun> run_all_bernardi(const RibbonGraph& g, const std::vector<Hypertree>& fs, Variant v,
                                          Exec exec = Exec::Serial);

// Nodes of one class ordered by their earliest incident current edge.
NodeOrder induced_class_order(const RibbonGraph& g, const BernardiRun& run, Color cls);
// Nodes of one class ordered by the moment the walk first stood at them (diagnostic only).
NodeOrder reached_class_order(const RibbonGraph& g, const BernardiRun& run, Color cls);

// At every node of the cut color, the edges current there occupy a run of consecutive
// rotation slots, shorter than a full turn.
bool consecutive_current_arcs(const RibbonGraph& g, const BernardiRun& run);

struct Inactivities {
  int internal = 0;
  int external = 0;
  bool operator==(const Inactivities&) const = default;
};
Inactivities embedding_inactivities(const RibbonGraph& g, const Hypertree& f, Variant v);
Inactivities embedding_inactivities(const RibbonGraph& g, const HypertreeSet& b, const BernardiRun& run);

IntegerPolynomial bernardi_interior(const RibbonGraph& g, Variant v, Exec exec = Exec::Serial);
IntegerPolynomial bernardi_exterior(const RibbonGraph& g, Variant v, Exec exec = Exec::Serial);

struct CompositionReport {
  bool vcut_roundtrip = false;     // htE-cutV then htV-cutV on f_V(T) gives T
  bool reversed_ecut = false;      // htE-cutE on the reversed setup gives T
  bool reversed_htv_ecut = false;  // htV-cutE on f_V(T) with the reversed setup gives T
  bool all() const { return vcut_roundtrip && reversed_ecut && reversed_htv_ecut; }
};
CompositionReport check_composition(const RibbonGraph& g, const Hypertree& f);

struct ConjectureReport {
  IntegerPolynomial interior;
  IntegerPolynomial interior_cut_v;  // Bernardi interior from htE-cutV
  IntegerPolynomial exterior;
  IntegerPolynomial exterior_cut_e;
  IntegerPolynomial exterior_cut_v;
  bool interior_cut_v_holds() const { return interior == interior_cut_v; }
  bool exterior_holds() const { return exterior == exterior_cut_e && exterior == exterior_cut_v; }
};
ConjectureReport check_conjectures(const RibbonGraph& g);

// Induced orders on E(Bip G) of htE-cutE and htE-cutV, run on the characteristic vector of a
// spanning tree of G, must both equal the edge order of the tour of that tree in G.
bool graph_specialization_check(const RibbonGraph& ordinary, EdgeMask tree);

}  // namespace hb
