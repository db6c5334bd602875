// The oracles checked against hand values and against each other before anything else leans on them.
#include "common.hpp"
#include "oracles.hpp"

using namespace hb;
using testing::fixture;

TEST_CASE("oracle spanning trees and Kirchhoff agree") {
  RibbonGraph a = fixture("fixa_plane");
  CHECK(oracle::spanning_trees(a).size() == 50);
  CHECK(oracle::kirchhoff(a) == 50);
  CHECK(oracle::spanning_trees(fixture("c4")).size() == 4);
  for (std::uint64_t s = 1; s <= 30; ++s) {
    RibbonGraph g = generate_random_instance(s, {4, 4, 10});
    CHECK(static_cast<long long>(oracle::spanning_trees(g).size()) == oracle::kirchhoff(g));
  }
}

TEST_CASE("oracle hypertrees: running example has 7 on each side") {
  RibbonGraph a = fixture("fixa_plane");
  CHECK(oracle::hypertrees(a, Color::Emerald).size() == 7);
  CHECK(oracle::hypertrees(a, Color::Violet).size() == 7);
  auto c4 = oracle::hypertrees(fixture("c4"), Color::Emerald);
  CHECK(c4 == std::set<std::vector<int>>{{1, 0}, {0, 1}});
}

TEST_CASE("Hall description matches realizability") {
  for (std::uint64_t s = 1; s <= 25; ++s) {
    RibbonGraph g = generate_random_instance(s, {4, 3, 9});
    for (Color c : {Color::Emerald, Color::Violet}) {
      auto b = oracle::hypertrees(g, c);
      const int k = g.class_size(c), total = g.class_size(opposite(c)) - 1;
      // every vector with the right sum and entries in [0, total]
      std::vector<int> f(k, 0);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == k - 1) {
          f[i] = left;
          CHECK(oracle::hall_hypertree(g, c, f) == (b.count(f) > 0));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          f[i] = v;
          rec(i + 1, left - v);
        }
      };
      rec(0, total);
    }
  }
}

TEST_CASE("oracle interior polynomial on hand examples") {
  RibbonGraph a = fixture("fixa_plane");
  IntegerPolynomial want({1, 3, 3});
  CHECK(oracle::interior(a, Color::Emerald, a.class_nodes(Color::Emerald)) == want);
  CHECK(oracle::interior(a, Color::Violet, a.class_nodes(Color::Violet)) == want);
  RibbonGraph c4 = fixture("c4");
  CHECK(oracle::interior(c4, Color::Emerald, c4.class_nodes(Color::Emerald)) == IntegerPolynomial({1, 1}));
}

TEST_CASE("oracle faces obey Euler on plane drawings") {
  CHECK(oracle::face_count(fixture("fixa_plane")) == 4);
  CHECK(oracle::face_count(fixture("c4")) == 2);
  CHECK(oracle::face_count(fixture("tour_small")) == 3);
}

TEST_CASE("oracle lattice scan on the square") {
  RibbonGraph c4 = fixture("c4");
  CHECK(oracle::lattice_count(c4, 0) == 1);
  CHECK(oracle::lattice_count(c4, 1) == 4);
  CHECK(oracle::lattice_count(c4, 2) == 9);
}

TEST_CASE("oracle Tutte T(x,1)") {
  // triangle: T = x^2 + x + y, so T(x,1) = x^2 + x + 1
  RibbonGraph tri = testing::doc("hyperbernardi-graph v1\nvertices: a b c\nedges:\n p a b\n q b c\n r c a\n");
  CHECK(oracle::tutte_x1(tri) == std::vector<long long>{1, 1, 1});
  RibbonGraph path = testing::doc("hyperbernardi-graph v1\nvertices: a b c\nedges:\n p a b\n q b c\n");
  CHECK(oracle::tutte_x1(path) == std::vector<long long>{0, 0, 1});
}

TEST_CASE("oracle compatibility: alternating square") {
  RibbonGraph c4 = fixture("c4");
  using testing::mask;
  // the two triangles use crossing diagonals of the square
  CHECK_FALSE(oracle::compatible(c4, mask(c4, "c1,c2,c3"), mask(c4, "c2,c3,c4")));
  CHECK(oracle::compatible(c4, mask(c4, "c1,c2,c4"), mask(c4, "c1,c2,c4")));
  CHECK(oracle::compatible(c4, mask(c4, "c2,c3,c4"), mask(c4, "c1,c2,c4")));
}
