#pragma once

#include <array>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "hyperbernardi/graph.hpp"
#include "hyperbernardi/polynomial.hpp"

namespace hb {

class Rng;

// values[i] belongs to g.class_nodes(side)[i].
struct Hypertree {
  Color side = Color::Emerald;
  std::vector<int> values;
  bool operator==(const Hypertree&) const = default;
  auto operator<=>(const Hypertree&) const = default;
};

Hypertree degree_vector(const RibbonGraph& g, EdgeMask tree, Color side);

// Decides whether a degree vector on one class is realized by a spanning tree inside a
// live edge set. Exact backtracking: each class node picks f(x)+1 live edges, union-find
// keeps the choice acyclic, and branches die when the chosen edges plus the edges of the
// unprocessed nodes no longer connect the graph. Results are memoized per instance, so an
// instance must not be shared between threads.
class HypertreeOracle {
 public:
  HypertreeOracle(const RibbonGraph& g, Color side, std::vector<int> values);

  // pinned edges are forced into the tree. Callers may only pin edges that lie in every
  // realizing tree of `live`, so the answer is the same as without pins.
  bool feasible(EdgeMask live, EdgeMask pinned = 0);
  std::optional<EdgeMask> realize(EdgeMask live, EdgeMask pinned = 0) const;
  long long searches() const { return searches_; }

 private:
  bool quick_reject(EdgeMask live, EdgeMask pinned) const;

  const RibbonGraph& g_;
  Color side_;
  std::vector<int> values_;
  bool sum_ok_;
  struct KeyHash {
    size_t operator()(const std::pair<EdgeMask, EdgeMask>& k) const {
      return std::hash<EdgeMask>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };
  std::unordered_map<std::pair<EdgeMask, EdgeMask>, bool, KeyHash> memo_;
  long long searches_ = 0;
};

bool is_hypertree(const RibbonGraph& g, Color side, const std::vector<int>& values);
bool is_hypertree(const RibbonGraph& g, Color side, const std::vector<int>& values, EdgeMask live);

// Sorted, deduplicated degree vectors of all spanning trees.
std::vector<Hypertree> enumerate_hypertrees(const RibbonGraph& g, Color side);

// Membership table for activity computations.
class HypertreeSet {
 public:
  HypertreeSet(const RibbonGraph& g, Color side);
  HypertreeSet(Color side, const std::vector<Hypertree>& all);
  bool contains(const std::vector<int>& values) const { return set_.count(values) > 0; }
  const std::vector<Hypertree>& all() const { return all_; }
  Color side() const { return side_; }
  size_t size() const { return all_.size(); }

 private:
  Color side_;
  std::vector<Hypertree> all_;
  std::set<std::vector<int>> set_;
};

// Node ids of one class, smallest first.
using NodeOrder = std::vector<int>;
NodeOrder default_order(const RibbonGraph& g, Color side);
NodeOrder random_order(const RibbonGraph& g, Color side, Rng& rng);

// from, to are node ids in f's class. False when f(from) == 0.
bool can_transfer(const RibbonGraph& g, const Hypertree& f, int from, int to);
bool can_transfer(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f, int from, int to);

// Nodes that can pass valence to some smaller node.
std::vector<int> internally_inactive(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f,
                                     const NodeOrder& order);
// Nodes that can receive valence from some smaller node.
std::vector<int> externally_inactive(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f,
                                     const NodeOrder& order);
int internal_inactivity(const RibbonGraph& g, const Hypertree& f, const NodeOrder& order);
int external_inactivity(const RibbonGraph& g, const Hypertree& f, const NodeOrder& order);

IntegerPolynomial interior_polynomial(const RibbonGraph& g, Color side, const NodeOrder& order);
IntegerPolynomial exterior_polynomial(const RibbonGraph& g, Color side, const NodeOrder& order);
inline IntegerPolynomial interior_polynomial(const RibbonGraph& g, Color side) {
  return interior_polynomial(g, side, default_order(g, side));
}
inline IntegerPolynomial exterior_polynomial(const RibbonGraph& g, Color side) {
  return exterior_polynomial(g, side, default_order(g, side));
}

// "e0=1,e1=0"; names resolved against g, every class node must appear once.
Hypertree parse_hypertree(const RibbonGraph& g, const std::string& literal);
std::string format_hypertree(const RibbonGraph& g, const Hypertree& f);

// Tutte polynomial of a loopy multigraph by deletion and contraction. c[i][j] multiplies x^i y^j.
struct TuttePolynomial {
  std::vector<std::vector<long long>> c;
  long long at(int i, int j) const;
  IntegerPolynomial at_y1() const;  // T(x, 1)
};
TuttePolynomial tutte_polynomial(int vertices, const std::vector<std::array<int, 2>>& edges);
TuttePolynomial tutte_polynomial(const RibbonGraph& ordinary);

// x^{n-1} T(1/x, 1) for an ordinary graph on n vertices.
IntegerPolynomial interior_from_tutte(const RibbonGraph& ordinary);
// Compares interior_from_tutte with the interior polynomial of the subdivision on its emerald side.
bool tutte_check(const RibbonGraph& ordinary);

// { z : d - 1 - z is a hypertree on V(Bip G) }, indexed like g's vertices, sorted.
std::vector<std::vector<int>> break_divisors(const RibbonGraph& ordinary);

}  // namespace hb
