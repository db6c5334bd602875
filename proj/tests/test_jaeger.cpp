#include "common.hpp"
#include "hyperbernardi/bernardi.hpp"
#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/polytope.hpp"
#include "oracles.hpp"

using namespace hb;
using testing::expected;
using testing::fixture;
using testing::mask;

namespace {

std::vector<EdgeMask> sorted(std::vector<EdgeMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Direct from the definition: the first time the tour meets a non-tree edge it stands at the cut color.
bool jaeger_by_definition(const RibbonGraph& g, EdgeMask t, Color cut) {
  std::set<int> met;
  for (const auto& s : tour_of_tree(g, t)) {
    if (has(t, s.edge) || met.count(s.edge)) continue;
    met.insert(s.edge);
    if (g.color(s.node) != cut) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("jaeger") {
  TEST_CASE("running example: a cut E tree and a non-Jaeger tree") {
    auto fx = testing::fixture_meta("fixa_plane");
    RibbonGraph g = fx.graph();
    EdgeMask left = mask(g, expected(fx, "left_tree")), right = mask(g, expected(fx, "right_tree"));
    CHECK(is_jaeger_tree(g, left, Color::Emerald));
    CHECK_FALSE(is_jaeger_tree(g, right, Color::Emerald));
    CHECK_FALSE(is_jaeger_tree(g, right, Color::Violet));
    TOrder o = t_order(g, left, Color::Emerald, Color::Emerald);
    CHECK(testing::names(g, o.edges) == expected(fx, "left_emerald_t_order"));
    CHECK(testing::names(g, o.emerald, false) == expected(fx, "left_emerald_order"));
    CHECK(testing::names(g, t_order(g, left, Color::Emerald, Color::Violet).violet, false) ==
          expected(fx, "left_violet_order"));
    EdgeMask sp = semi_passive_edges(g, left, o.rank);
    CHECK(sp == mask(g, expected(fx, "left_semi_passive_emerald")));
  }

  TEST_CASE("C4 recognition and ordering") {
    RibbonGraph g = fixture("c4");
    CHECK(is_jaeger_tree(g, mask(g, "c1,c2,c4"), Color::Violet));
    CHECK_FALSE(is_jaeger_tree(g, mask(g, "c1,c2,c3"), Color::Violet));
    CHECK(is_jaeger_tree(g, mask(g, "c1,c2,c3"), Color::Emerald));
    auto v = enumerate_jaeger_trees(g, Color::Violet);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == mask(g, "c2,c3,c4"));
    CHECK(v[1] == mask(g, "c1,c2,c4"));
    CHECK(compare_trees(g, v[0], v[1], Color::Violet, Color::Violet) < 0);
    CHECK(compare_trees(g, v[0], v[0], Color::Violet, Color::Violet) == 0);
    // one semi-passive edge in the emerald order of the second tree
    TOrder o = t_order(g, v[1], Color::Violet, Color::Emerald);
    CHECK(popcount(semi_passive_edges(g, v[1], o.rank)) == 1);
  }

  TEST_CASE("torus example: seven trees in shelling order") {
    auto fx = testing::fixture_meta("fixa_torus");
    RibbonGraph g = fx.graph();
    auto trees = enumerate_jaeger_trees(g, Color::Violet);
    CHECK(trees.size() == std::stoul(expected(fx, "vcut_jaeger_count")));
    auto want = testing::split(expected(fx, "vcut_jaeger_trees"), ';');
    REQUIRE(want.size() == trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
      std::string w = want[i];
      std::replace(w.begin(), w.end(), '.', ',');
      CHECK_MESSAGE(trees[i] == mask(g, w), "tree " << i + 1);
    }
    for (size_t i = 0; i + 1 < trees.size(); ++i)
      CHECK(compare_trees(g, trees[i], trees[i + 1], Color::Violet, Color::Violet) < 0);
  }

  TEST_CASE("enumeration equals recognition equals the definition") {
    std::vector<RibbonGraph> gs = testing::sweep(8, 40, 17, {4, 4, 11});
    gs.push_back(fixture("fixa_torus"));
    gs.push_back(subdivide(fixture("matching_small")).bip);
    for (const RibbonGraph& g : gs)
      for (Color cut : {Color::Emerald, Color::Violet}) {
        auto en = enumerate_jaeger_trees(g, cut);
        std::vector<EdgeMask> def;
        for (EdgeMask t : oracle::spanning_trees(g))
          if (jaeger_by_definition(g, t, cut)) def.push_back(t);
        CHECK(sorted(en) == def);
        CHECK(sorted(jaeger_trees_by_recognition(g, cut)) == def);
        CHECK(std::adjacent_find(en.begin(), en.end()) == en.end());
        // the enumeration comes out in the cut color's order
        for (size_t i = 0; i + 1 < en.size(); ++i) CHECK(compare_trees(g, en[i], en[i + 1], cut, cut) < 0);
        // cut E trees of a setup are the cut V trees of the reversed setup
        if (cut == Color::Violet) CHECK(sorted(en) == sorted(enumerate_jaeger_trees(reversed_setup(g), Color::Emerald)));
        // unique realization: each hypertree on each side exactly once
        JaegerBijection b = hypertree_pairs(g, en);
        CHECK(b.injective_on_both_sides());
        CHECK(en.size() == oracle::hypertrees(g, Color::Emerald).size());
      }
  }

  TEST_CASE("base cut order in cut V trees") {
    for (const RibbonGraph& g : testing::sweep(5, 30, 23, {4, 4, 10}))
      for (EdgeMask t : enumerate_jaeger_trees(g, Color::Violet)) CHECK(base_cut_order_holds(g, t));
  }

  TEST_CASE("five-way characterization") {
    std::vector<RibbonGraph> gs = {fixture("fixa_torus"), fixture("c4"), fixture("fixa_plane")};
    for (const RibbonGraph& g : testing::sweep(4, 30, 29, {4, 4, 10})) gs.push_back(g);
    for (const RibbonGraph& g : gs) {
      auto trees = enumerate_jaeger_trees(g, Color::Violet);
      for (size_t i = 0; i < trees.size(); ++i)
        for (const auto& c : characterize_tree(g, trees, i)) {
          CHECK(c.agree());
          if (i == 0) CHECK_FALSE(c.conditions[0]);
        }
    }
  }

  TEST_CASE("subdivided graph: T-order, semi-passive edges and the matching") {
    auto fx = testing::fixture_meta("matching_small");
    RibbonGraph bip = subdivide(fx.graph()).bip;
    EdgeMask t = bip.all_edges() & ~mask(bip, "ad-a,bc-c");
    REQUIRE(is_jaeger_tree(bip, t, Color::Violet));
    TOrder o = t_order(bip, t, Color::Violet, Color::Violet);
    CHECK(testing::names(bip, o.edges) == expected(fx, "violet_t_order"));
    CHECK(semi_passive_edges(bip, t, o.rank) == mask(bip, expected(fx, "semi_passive_violet")));
    MatchingReport m = graph_activity_matching(bip, t);
    CHECK(m.matches);
    CHECK(m.counts_equal);
    auto sorted_names = [&](std::vector<int> xs) {
      std::vector<std::string> s;
      for (int x : xs) s.push_back(bip.node_name(x));
      std::sort(s.begin(), s.end());
      std::string r;
      for (auto& x : s) r += (r.empty() ? "" : ",") + x;
      return r;
    };
    CHECK(sorted_names(m.inactive_emerald) == expected(fx, "inactive_emerald"));
    CHECK(sorted_names(m.inactive_violet) == expected(fx, "inactive_violet"));
  }

  TEST_CASE("matching on doubled edges, trees and random graphs") {
    RibbonGraph d = subdivide(testing::doc("hyperbernardi-graph v1\nvertices: a b\nedges:\n p a b\n q a b\nbase: a p\n")).bip;
    auto trees = enumerate_jaeger_trees(d, Color::Violet);
    REQUIRE(trees.size() == 2);
    int with_one = 0;
    for (EdgeMask t : trees) {
      MatchingReport m = graph_activity_matching(d, t);
      CHECK(m.matches);
      with_one += popcount(m.semi_passive) == 1 && m.inactive_emerald.size() == 1 && m.inactive_violet.size() == 1;
    }
    CHECK(with_one == 1);
    RibbonGraph path = subdivide(testing::doc("hyperbernardi-graph v1\nvertices: a b c\nedges:\n p a b\n q b c\n")).bip;
    MatchingReport m = graph_activity_matching(path, path.all_edges());
    CHECK(m.semi_passive == 0);
    CHECK(m.inactive_emerald.empty());
    for (std::uint64_t s = 1; s <= 30; ++s) {
      RibbonGraph bip = subdivide(generate_random_ordinary(s, 6, 9)).bip;
      for (EdgeMask t : enumerate_jaeger_trees(bip, Color::Violet)) CHECK(graph_activity_matching(bip, t).matches);
    }
  }

  TEST_CASE("non-crossing trees") {
    const std::pair<int, int> sizes[] = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {0, 2}};
    for (auto [m, n] : sizes) {
      NoncrossingReport r = check_noncrossing(m, n);
      CHECK(r.expected == binomial(m + n, m));
      CHECK(r.jaeger == static_cast<size_t>(r.expected));
      CHECK(r.noncrossing == static_cast<size_t>(r.expected));
      CHECK(r.sets_equal);
    }
    CHECK(check_noncrossing(1, 1).jaeger == 2);
    CHECK(check_noncrossing(1, 2).jaeger == 3);
    CHECK(check_noncrossing(2, 2).jaeger == 6);
  }

  TEST_CASE("arborescence duality") {
    // the running example, plane drawing, violet base on the chosen root face
    ArborescenceReport a = verify_arborescence_duality(fixture("fixa_plane"));
    CHECK(a.genus == 0);
    CHECK(a.equal);
    CHECK(a.arborescences == a.jaeger);
    ArborescenceReport c = verify_arborescence_duality(fixture("c4"));
    CHECK(c.equal);
    CHECK(c.arborescences == 2);
    ArborescenceReport p = verify_arborescence_duality(testing::path3());
    CHECK(p.arborescences == 1);
    CHECK(p.jaeger == 1);
    CHECK_THROWS_AS(verify_arborescence_duality(fixture("fixa_torus")), InputError);  // genus 1
    // every violet base dart of a plane drawing
    RibbonGraph f = fixture("fixa_plane");
    for (int v : f.class_nodes(Color::Violet))
      for (int e : f.rotation(v)) CHECK(verify_arborescence_duality(with_base(f, v, e)).equal);
  }

  TEST_CASE("incompatible K5 pair") {
    auto fx = testing::fixture_meta("k5_pair");
    RibbonGraph bip = subdivide(fx.graph()).bip;
    EdgeMask t1 = mask(bip, expected(fx, "tree1")), t2 = mask(bip, expected(fx, "tree2"));
    CHECK(is_jaeger_tree(bip, t1, Color::Violet));
    CHECK(is_jaeger_tree(bip, t2, Color::Violet));
    CHECK_FALSE(trees_compatible(bip, t1, t2));
    CHECK_FALSE(oracle::compatible(bip, t1, t2));
  }
}
