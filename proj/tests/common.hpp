#pragma once

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "hyperbernardi/harness.hpp"

namespace testing {

inline hb::Fixture fixture_meta(const std::string& name) {
  return hb::load_fixture(std::string(FIXTURE_DIR) + "/" + name + ".graph");
}
inline hb::RibbonGraph fixture(const std::string& name) { return fixture_meta(name).graph(); }

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (std::getline(ss, w, sep))
    if (!w.empty()) out.push_back(w);
  return out;
}

inline hb::EdgeMask mask(const hb::RibbonGraph& g, const std::string& csv) {
  hb::EdgeMask m = 0;
  for (const auto& id : split(csv)) {
    int e = g.find_edge(id);
    REQUIRE_MESSAGE(e >= 0, "unknown edge " << id);
    m |= hb::bit(e);
  }
  return m;
}

inline std::string names(const hb::RibbonGraph& g, const std::vector<int>& xs, bool edges = true) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + (edges ? g.edge_name(x) : g.node_name(x));
  return s;
}

inline std::string expected(const hb::Fixture& fx, const std::string& key) {
  const hb::Expectation* e = fx.find(key);
  REQUIRE_MESSAGE(e != nullptr, "fixture " << fx.name << " lacks " << key);
  return e->value;
}

inline hb::RibbonGraph doc(const std::string& text) { return hb::parse_graph(text); }

// e0 - v0 - e1: the smallest graph with a nontrivial tour and a single spanning tree.
inline hb::RibbonGraph path3() {
  return doc("hyperbernardi-graph v1\nemerald: e0 e1\nviolet: v0\nedges:\n p e0 v0\n q e1 v0\nbase: v0 p\n");
}

inline hb::RibbonGraph single_edge() {
  return doc("hyperbernardi-graph v1\nemerald: e0\nviolet: v0\nedges:\n p e0 v0\nbase: v0 p\n");
}

// Random setups of the running example plus random small graphs; the shared sweep.
inline std::vector<hb::RibbonGraph> sweep(int setups, int graphs, std::uint64_t seed, hb::Bounds b = {5, 5, 14}) {
  std::vector<hb::RibbonGraph> out;
  hb::RibbonGraph a = fixture("fixa_plane");
  hb::Rng rng(seed);
  for (int i = 0; i < setups; ++i) out.push_back(hb::random_setup(a, rng));
  for (int i = 0; i < graphs; ++i) out.push_back(hb::generate_random_instance(seed * 1000 + i, b));
  return out;
}

}  // namespace testing
