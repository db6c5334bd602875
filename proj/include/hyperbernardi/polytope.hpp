#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbernardi/exec.hpp"
#include "hyperbernardi/graph.hpp"
#include "hyperbernardi/hypertree.hpp"

namespace hb {

using Rational = mpq_class;

// Coordinates indexed by node id.
struct RationalPoint {
  std::vector<Rational> x;
  bool operator==(const RationalPoint&) const = default;
};

// Root polytope operations identify a tree with its vertex set, so they need a graph
// without parallel edges.
void require_simple(const RibbonGraph& g);

RationalPoint vertex_point(const RibbonGraph& g, int edge);
// Emerald markers (1/|V|) f + 1/(|E||V|) i_E + (1/|V|) i_V, and the mirror image for violet.
RationalPoint marker(const RibbonGraph& g, const Hypertree& f);

// Coefficients of p over the vertices of a forest (indexed like edges_of(forest)), or nullopt
// when p is outside the affine hull of those vertices.
std::optional<std::vector<Rational>> barycentric(const RibbonGraph& g, EdgeMask forest, const RationalPoint& p);
bool simplex_contains(const RibbonGraph& g, EdgeMask tree, const RationalPoint& p, bool strict);

// Two trees' simplices meet in a common face iff there is no cycle whose edges alternate
// between the trees.
bool trees_compatible(const RibbonGraph& g, EdgeMask t1, EdgeMask t2);
std::vector<std::pair<int, int>> incompatible_pairs(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                                    Exec exec = Exec::Serial);

// Linear functional (by node) built from the first tour divergence of the two trees: +-1
// on the classes split by the fundamental cut at the divergent edge. Returns it when it
// weakly separates the two simplices and is nonzero on both, else nullopt.
std::optional<std::vector<int>> separating_functional(const RibbonGraph& g, EdgeMask t1, EdgeMask t2);

struct MarkerHit {
  int marker;
  Color color;
  int hits;
};

struct DissectionReport {
  size_t trees = 0;
  size_t emerald_hypertrees = 0;
  size_t violet_hypertrees = 0;
  bool counts_ok = false;
  bool markers_ok = false;
  bool pairwise_checked = false;
  bool pairwise_ok = true;
  std::vector<std::string> witnesses;
  bool ok() const { return counts_ok && markers_ok && pairwise_ok; }
};
// Pairwise separation certificates are built when the graph has at most pairwise_max_edges edges.
DissectionReport verify_dissection(const RibbonGraph& g, const std::vector<EdgeMask>& trees, Exec exec = Exec::Serial,
                                   int pairwise_max_edges = 8);

struct TriangulationReport {
  DissectionReport dissection;
  std::vector<std::pair<int, int>> incompatible;
  bool is_triangulation() const { return dissection.ok() && incompatible.empty(); }
};
TriangulationReport verify_triangulation(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                         Exec exec = Exec::Serial);

// a_i = number of trees with exactly i semi-passive edges under their emerald T-order.
// trees: violet cut Jaeger trees in violet order.
std::vector<long long> shelling_h_vector(const RibbonGraph& g, const std::vector<EdgeMask>& trees);

struct ShellingReport {
  std::vector<long long> h;
  int facets_checked = 0;
  int samples_checked = 0;
  bool ok = true;
  std::vector<std::string> witnesses;
};
// For each tree and each facet (tree minus one edge): semi-passive facets must be covered by
// the earlier simplices (tested on exact rational sample points of the facet interior),
// the others must be separated from every earlier simplex by an exact certificate.
ShellingReport geometric_shelling_check(const RibbonGraph& g, const std::vector<EdgeMask>& trees,
                                        int samples_per_facet = 12, std::uint64_t seed = 1);

// Gram determinant of edge vectors of the simplex; equal for all maximal simplices.
Rational simplex_gram_determinant(const RibbonGraph& g, EdgeMask tree);

// epsilon(k) for k = 0..kmax: number of distinct degree vectors of k-edge multisets.
std::vector<long long> ehrhart_values(const RibbonGraph& g, int kmax);
// Unit-triangular solve of values(k) = sum_i a_i C(d+k-i, d); returns a_0..a_d (fewer if
// fewer values). Throws TheoremViolation on a negative coefficient, on a nonzero one past d,
// or, when max_degree >= 0, a nonzero coefficient beyond it.
std::vector<long long> fit_binomial_coefficients(const std::vector<long long>& values, int d, int max_degree = -1);
// Series coefficients of I(x) / (1-x)^{d+1} up to order n.
std::vector<long long> kato_series(const IntegerPolynomial& interior, int d, int n);
bool kato_series_check(const IntegerPolynomial& interior, const RibbonGraph& g, int n);

long long binomial(long long n, long long k);

}  // namespace hb
