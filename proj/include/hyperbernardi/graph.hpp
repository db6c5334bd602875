#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hb {

enum class Color : std::uint8_t { Emerald = 0, Violet = 1 };

inline Color opposite(Color c) { return c == Color::Emerald ? Color::Violet : Color::Emerald; }
const char* color_name(Color c);

// Edge subsets. Bit i is edge i.
using EdgeMask = std::uint64_t;
constexpr int kMaxEdges = 64;

inline EdgeMask bit(int e) { return EdgeMask{1} << e; }
inline bool has(EdgeMask m, int e) { return (m >> e) & 1U; }
inline int popcount(EdgeMask m) { return __builtin_popcountll(m); }
std::vector<int> edges_of(EdgeMask m);

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computed object contradicts a proven statement.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Dart {
  int node;
  int edge;
  bool operator==(const Dart&) const = default;
};

// Multigraph with a rotation system, a base node and a base edge.
// Colored graphs are bipartite: ends(e)[0] is the emerald end, ends(e)[1] the violet end.
// Uncolored graphs are ordinary ribbon graphs (used for Bernardi's original tour and Bip).
class RibbonGraph {
 public:
  explicit RibbonGraph(bool colored = true) : colored_(colored) {}

  int add_node(const std::string& name, Color c = Color::Violet);
  int add_edge(const std::string& name, int a, int b);
  void set_rotation(int node, std::vector<int> edges);
  void set_base(int node, int edge);
  // Fills default rotations, validates, and builds lookup tables.
  void finalize();

  bool colored() const { return colored_; }
  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edge_names_.size()); }
  EdgeMask all_edges() const;

  const std::string& node_name(int x) const { return names_[x]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int find_node(const std::string& name) const;
  int find_edge(const std::string& name) const;

  Color color(int x) const { return colors_[x]; }
  const std::vector<int>& class_nodes(Color c) const { return classes_[static_cast<int>(c)]; }
  int class_size(Color c) const { return static_cast<int>(class_nodes(c).size()); }
  int class_index(int x) const { return class_index_[x]; }

  const std::array<int, 2>& ends(int e) const { return ends_[e]; }
  int emerald_end(int e) const { return ends_[e][0]; }
  int violet_end(int e) const { return ends_[e][1]; }
  int end_of_color(int e, Color c) const { return ends_[e][static_cast<int>(c)]; }
  int other_end(int e, int x) const { return ends_[e][0] == x ? ends_[e][1] : ends_[e][0]; }
  bool incident(int e, int x) const { return ends_[e][0] == x || ends_[e][1] == x; }

  const std::vector<int>& rotation(int x) const { return rot_[x]; }
  int position(int x, int e) const;
  int degree(int x) const { return static_cast<int>(rot_[x].size()); }
  int degree(int x, EdgeMask live) const;

  // Successor / predecessor of e at x among live edges. e itself need not be live;
  // the scan starts from its rotation slot. Returns -1 if no live edge is incident to x.
  int next_live(int x, int e, EdgeMask live) const;
  int prev_live(int x, int e, EdgeMask live) const;

  int base_node() const { return base_node_; }
  int base_edge() const { return base_edge_; }

 private:
  bool colored_;
  std::vector<std::string> names_;
  std::vector<Color> colors_;
  std::vector<std::string> edge_names_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::array<int, 2>> slot_;  // slot_[e][k] = position of e in rot_[ends_[e][k]]
  std::array<std::vector<int>, 2> classes_;
  std::vector<int> class_index_;
  int base_node_ = -1;
  int base_edge_ = -1;
  bool finalized_ = false;
};

// xy+ / xy- in the view (parent restricted to live edges). Throws InputError if e is not
// live or not incident to x. Returns e itself when x has degree 1 in the view.
int next_edge(const RibbonGraph& g, EdgeMask live, int x, int e);
int prev_edge(const RibbonGraph& g, EdgeMask live, int x, int e);
inline int next_edge(const RibbonGraph& g, int x, int e) { return next_edge(g, g.all_edges(), x, e); }
inline int prev_edge(const RibbonGraph& g, int x, int e) { return prev_edge(g, g.all_edges(), x, e); }

RibbonGraph parse_graph(const std::string& document);
RibbonGraph load_graph(const std::string& path);
std::string write_graph(const RibbonGraph& g);

// Same graph with colors swapped (edge ids, rotations and base are unchanged).
RibbonGraph transpose(const RibbonGraph& g);
// All rotations reversed, same base node, base edge = predecessor of the base edge in g.
RibbonGraph reversed_setup(const RibbonGraph& g);
RibbonGraph with_base(const RibbonGraph& g, int node, int edge);
RibbonGraph with_rotations(const RibbonGraph& g, const std::vector<std::vector<int>>& rot);

// Bipartite subdivision of an ordinary ribbon graph: violet nodes are the vertices, emerald
// nodes the edge midpoints. half[e][k] is the half-edge joining edge e to ends(e)[k].
struct Subdivision {
  RibbonGraph bip;
  std::vector<std::array<int, 2>> half;
};
Subdivision subdivide(const RibbonGraph& g);

bool connected(const RibbonGraph& g, EdgeMask live);
bool is_forest(const RibbonGraph& g, EdgeMask edges);
bool is_spanning_tree(const RibbonGraph& g, EdgeMask edges);
int tree_degree(const RibbonGraph& g, EdgeMask tree, int x);

struct TourStep {
  int node;
  int edge;
  bool traversed;
  bool operator==(const TourStep&) const = default;
};
using Tour = std::vector<TourStep>;

Tour tour_of_tree(const RibbonGraph& g, EdgeMask tree);
// Edges in order of first occurrence as current edge.
std::vector<int> edge_order_from_tour(const Tour& t, int edge_count);
// rank[e] = position of e in the order.
std::vector<int> ranks(const std::vector<int>& order, int size);

// All spanning trees as ascending masks.
std::vector<EdgeMask> spanning_trees(const RibbonGraph& g);
// Kirchhoff count (exact Bareiss elimination).
long long count_spanning_trees(const RibbonGraph& g);

EdgeMask fundamental_cut(const RibbonGraph& g, EdgeMask tree, int e);
EdgeMask fundamental_cycle(const RibbonGraph& g, EdgeMask tree, int e);
// side[x] is true for nodes in the component of tree - e that contains root.
std::vector<char> tree_side(const RibbonGraph& g, EdgeMask tree, int e, int root);

struct Faces {
  std::vector<std::vector<Dart>> walks;
  std::vector<std::array<int, 2>> face_of;  // face_of[e][k]: face of the dart (ends(e)[k], e)
  int genus = 0;
};
// Orbits of (x, e) -> (y, next(y, e)) where y is the far end of e.
Faces faces_of_embedding(const RibbonGraph& g);

}  // namespace hb
