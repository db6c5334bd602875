#include <algorithm>
#include <numeric>

#include "hyperbernardi/hypertree.hpp"

namespace hb {

long long TuttePolynomial::at(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  if (j < 0 || j >= static_cast<int>(c[i].size())) return 0;
  return c[i][j];
}

IntegerPolynomial TuttePolynomial::at_y1() const {
  std::vector<long long> out(c.size(), 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (long long v : c[i]) out[i] += v;
  return IntegerPolynomial(out);
}

namespace {

using Poly2 = std::vector<std::vector<long long>>;

void add_shifted(Poly2& acc, const Poly2& p, int dx, int dy) {
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j) {
      if (p[i][j] == 0) continue;
      size_t a = i + dx, b = j + dy;
      if (acc.size() <= a) acc.resize(a + 1);
      if (acc[a].size() <= b) acc[a].resize(b + 1, 0);
      acc[a][b] += p[i][j];
    }
}

bool joined_without(int n, const std::vector<std::array<int, 2>>& edges, size_t skip) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto find = [&](int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (size_t i = 0; i < edges.size(); ++i)
    if (i != skip) p[find(edges[i][0])] = find(edges[i][1]);
  return find(edges[skip][0]) == find(edges[skip][1]);
}

Poly2 tutte_rec(int n, std::vector<std::array<int, 2>> edges) {
  // Strip loops first: each contributes a factor y.
  int loops = 0;
  std::vector<std::array<int, 2>> rest;
  for (auto& e : edges) {
    if (e[0] == e[1]) ++loops;
    else rest.push_back(e);
  }
  Poly2 out;
  if (rest.empty()) {
    add_shifted(out, Poly2{{1}}, 0, loops);
    return out;
  }
  const size_t k = rest.size() - 1;
  auto [a, b] = rest[k];
  std::vector<std::array<int, 2>> contracted;
  for (size_t i = 0; i < k; ++i) {
    auto e = rest[i];
    for (int& v : e)
      if (v == b) v = a;
    contracted.push_back(e);
  }
  Poly2 c = tutte_rec(n, contracted);
  if (!joined_without(n, rest, k)) {
    add_shifted(out, c, 1, loops);
    return out;
  }
  std::vector<std::array<int, 2>> deleted(rest.begin(), rest.begin() + k);
  Poly2 d = tutte_rec(n, deleted);
  add_shifted(out, d, 0, loops);
  add_shifted(out, c, 0, loops);
  return out;
}

}  // namespace

TuttePolynomial tutte_polynomial(int vertices, const std::vector<std::array<int, 2>>& edges) {
  return TuttePolynomial{tutte_rec(vertices, edges)};
}

TuttePolynomial tutte_polynomial(const RibbonGraph& ordinary) {
  std::vector<std::array<int, 2>> edges;
  for (int e = 0; e < ordinary.edge_count(); ++e) edges.push_back(ordinary.ends(e));
  return tutte_polynomial(ordinary.node_count(), edges);
}

IntegerPolynomial interior_from_tutte(const RibbonGraph& ordinary) {
  IntegerPolynomial t = tutte_polynomial(ordinary).at_y1();
  const int n1 = ordinary.node_count() - 1;
  std::vector<long long> out(n1 + 1, 0);
  for (int i = 0; i <= t.degree(); ++i) {
    if (i > n1) throw TheoremViolation("T(x,1) has degree above |V|-1");
    out[n1 - i] = t.at(i);
  }
  return IntegerPolynomial(out);
}

bool tutte_check(const RibbonGraph& ordinary) {
  if (ordinary.colored()) throw InputError("tutte_check expects an ordinary graph");
  Subdivision s = subdivide(ordinary);
  return interior_from_tutte(ordinary) == interior_polynomial(s.bip, Color::Emerald);
}

std::vector<std::vector<int>> break_divisors(const RibbonGraph& ordinary) {
  if (ordinary.colored()) throw InputError("break_divisors expects an ordinary graph");
  Subdivision s = subdivide(ordinary);
  std::vector<std::vector<int>> out;
  for (const auto& h : enumerate_hypertrees(s.bip, Color::Violet)) {
    std::vector<int> z(ordinary.node_count());
    for (int x = 0; x < ordinary.node_count(); ++x) {
      int bx = s.bip.find_node(ordinary.node_name(x));
      z[x] = ordinary.degree(x) - 1 - h.values[s.bip.class_index(bx)];
    }
    out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hb
