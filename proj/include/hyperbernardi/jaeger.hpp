#pragma once

#include <array>
#include <vector>

#include "hyperbernardi/graph.hpp"
#include "hyperbernardi/hypertree.hpp"

namespace hb {

// A spanning tree is a Jaeger tree for cut color c if its tour first skips every
// non-tree edge at the endpoint of color c.
bool is_jaeger_tree(const RibbonGraph& g, EdgeMask tree, Color cut);

// Branching tour search: an undecided edge met at a node of the cut color is first
// skipped, then kept; met at the other color it must be kept. The output order is the
// tree order of the cut color (the violet order for violet cut trees).
std::vector<EdgeMask> enumerate_jaeger_trees(const RibbonGraph& g, Color cut);
// Recognition over all spanning trees; slow reference for the enumeration.
std::vector<EdgeMask> jaeger_trees_by_recognition(const RibbonGraph& g, Color cut);

// The tour used for `flavor` orders of trees of cut color `cut`: the given structure when
// the two colors agree, otherwise the reversed setup.
Tour flavored_tour(const RibbonGraph& g, EdgeMask tree, Color cut, Color flavor);

// -1 if t1 comes first, 1 if t2 comes first, 0 if equal. The first edge at which the two
// tours differ belongs to the later tree.
int compare_trees(const RibbonGraph& g, EdgeMask t1, EdgeMask t2, Color cut, Color flavor);
// Edge at which the two tours first differ, or -1 when equal.
int first_divergence(const RibbonGraph& g, EdgeMask t1, EdgeMask t2, Color cut, Color flavor);

struct TOrder {
  Color flavor;
  std::vector<int> edges;       // smallest first
  std::vector<int> rank;        // rank[e]
  std::vector<int> emerald;     // induced order on the emerald class
  std::vector<int> violet;      // induced order on the violet class
  const std::vector<int>& on(Color c) const { return c == Color::Emerald ? emerald : violet; }
};
// Edges in the order they appear in the flavored tour with their flavor-colored end as
// current node. Node orders come from the smallest incident edge.
TOrder t_order(const RibbonGraph& g, EdgeMask tree, Color cut, Color flavor);
TOrder t_order_from_ranks(const RibbonGraph& g, Color flavor, const std::vector<int>& edge_sequence);

// Tree edges whose endpoints have the opposite colors, on each side of the cut, to those
// of the smallest edge of their fundamental cut.
EdgeMask semi_passive_edges(const RibbonGraph& g, EdgeMask tree, const std::vector<int>& rank);

// For every tree edge: cut edges whose violet end lies on the base side precede, in the
// violet T-order, those whose emerald end does, and none of the former exceeds the edge.
bool base_cut_order_holds(const RibbonGraph& g, EdgeMask vcut_tree);

struct EdgeCharacterization {
  int edge;
  std::array<bool, 5> conditions;
  bool agree() const;
};
// The five conditions for every edge of trees[index]; trees must be the violet cut trees in
// violet order. Condition (i) scans the earlier trees.
std::vector<EdgeCharacterization> characterize_tree(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                                    size_t index);

// The emerald and violet hypertrees realized by each tree.
struct JaegerBijection {
  std::vector<Hypertree> emerald;
  std::vector<Hypertree> violet;
  bool injective_on_both_sides() const;
};
JaegerBijection hypertree_pairs(const RibbonGraph& g, const std::vector<EdgeMask>& trees);

struct MatchingReport {
  EdgeMask semi_passive = 0;
  std::vector<int> inactive_emerald;
  std::vector<int> inactive_violet;
  bool counts_equal = false;  // internal embedding inactivity on E equals that on V
  bool matches = false;       // semi-passive edges biject onto both inactive sets via their ends
};
// bip is the subdivision of an ordinary ribbon graph, tree a violet cut Jaeger tree of it.
MatchingReport graph_activity_matching(const RibbonGraph& bip, EdgeMask tree);

}  // namespace hb
