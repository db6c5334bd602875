#include "hyperbernardi/hypertree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyperbernardi/random.hpp"

namespace hb {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

Hypertree degree_vector(const RibbonGraph& g, EdgeMask tree, Color side) {
  Hypertree f{side, {}};
  for (int x : g.class_nodes(side)) f.values.push_back(g.degree(x, tree) - 1);
  return f;
}

HypertreeOracle::HypertreeOracle(const RibbonGraph& g, Color side, std::vector<int> values)
    : g_(g), side_(side), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != g.class_size(side))
    throw InputError("hypertree vector has the wrong length for the " + std::string(color_name(side)) + " class");
  long long s = 0;
  bool nonneg = true;
  for (int v : values_) {
    s += v;
    nonneg = nonneg && v >= 0;
  }
  sum_ok_ = nonneg && s == g.class_size(opposite(side)) - 1;
}

bool HypertreeOracle::quick_reject(EdgeMask live, EdgeMask pinned) const {
  const auto& nodes = g_.class_nodes(side_);
  const int k = static_cast<int>(nodes.size());
  std::vector<EdgeMask> nbr(k, 0);  // opposite class indices reachable by live edges, as bits
  for (int i = 0; i < k; ++i) {
    int x = nodes[i];
    int pins = 0;
    for (int e : g_.rotation(x)) {
      if (has(live, e)) nbr[i] |= bit(g_.class_index(g_.other_end(e, x)));
      pins += has(pinned, e);
    }
    if (popcount(nbr[i]) < values_[i] + 1 || pins > values_[i] + 1) return true;
  }
  if (k <= 12) {
    for (unsigned s = 1; s < (1u << k); ++s) {
      EdgeMask gam = 0;
      int sum = 0;
      for (int i = 0; i < k; ++i)
        if (s >> i & 1u) {
          gam |= nbr[i];
          sum += values_[i];
        }
      if (sum > popcount(gam) - 1) return true;
    }
  }
  return false;
}

std::optional<EdgeMask> HypertreeOracle::realize(EdgeMask live, EdgeMask pinned) const {
  if (!sum_ok_ || (pinned & ~live) != 0) return std::nullopt;
  if (quick_reject(live, pinned)) return std::nullopt;

  const auto& nodes = g_.class_nodes(side_);
  const int k = static_cast<int>(nodes.size());
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> livedeg(k);
  for (int i = 0; i < k; ++i) livedeg[i] = g_.degree(nodes[i], live);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return livedeg[a] - values_[a] < livedeg[b] - values_[b]; });

  std::vector<EdgeMask> at(k, 0);
  for (int i = 0; i < k; ++i)
    for (int e : g_.rotation(nodes[i]))
      if (has(live, e)) at[i] |= bit(e);
  std::vector<EdgeMask> suffix(k + 1, 0);
  for (int i = k - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | at[order[i]];

  std::optional<EdgeMask> found;
  auto rec = [&](auto&& self, int i, EdgeMask chosen, const UnionFind& uf) -> bool {
    if (i == k) {
      found = chosen;
      return true;
    }
    const int idx = order[i];
    const int need = values_[idx] + 1;
    UnionFind base = uf;
    EdgeMask fixed = at[idx] & pinned;
    for (int e : edges_of(fixed))
      if (!base.unite(g_.ends(e)[0], g_.ends(e)[1])) return false;
    const int r = need - popcount(fixed);
    std::vector<int> cand = edges_of(at[idx] & ~pinned);
    const int c = static_cast<int>(cand.size());
    if (r < 0 || r > c) return false;
    // r-subsets of cand in lexicographic index order
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      UnionFind u = base;
      bool ok = true;
      EdgeMask sel = fixed;
      for (int j : pick) {
        int e = cand[j];
        if (!u.unite(g_.ends(e)[0], g_.ends(e)[1])) {
          ok = false;
          break;
        }
        sel |= bit(e);
      }
      if (ok && connected(g_, chosen | sel | suffix[i + 1]) && self(self, i + 1, chosen | sel, u)) return true;
      int j = r - 1;
      while (j >= 0 && pick[j] == c - r + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
    }
    return false;
  };
  if (!connected(g_, live)) return std::nullopt;
  rec(rec, 0, 0, UnionFind(g_.node_count()));
  return found;
}

bool HypertreeOracle::feasible(EdgeMask live, EdgeMask pinned) {
  auto key = std::make_pair(live, pinned);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  ++searches_;
  bool r = realize(live, pinned).has_value();
  memo_.emplace(key, r);
  return r;
}

bool is_hypertree(const RibbonGraph& g, Color side, const std::vector<int>& values) {
  return is_hypertree(g, side, values, g.all_edges());
}

bool is_hypertree(const RibbonGraph& g, Color side, const std::vector<int>& values, EdgeMask live) {
  if (static_cast<int>(values.size()) != g.class_size(side))
    throw InputError("hypertree vector has the wrong length");
  return HypertreeOracle(g, side, values).realize(live).has_value();
}

std::vector<Hypertree> enumerate_hypertrees(const RibbonGraph& g, Color side) {
  std::set<Hypertree> s;
  for (EdgeMask t : spanning_trees(g)) s.insert(degree_vector(g, t, side));
  return {s.begin(), s.end()};
}

HypertreeSet::HypertreeSet(const RibbonGraph& g, Color side) : HypertreeSet(side, enumerate_hypertrees(g, side)) {}

HypertreeSet::HypertreeSet(Color side, const std::vector<Hypertree>& all) : side_(side), all_(all) {
  for (const auto& f : all_) set_.insert(f.values);
}

NodeOrder default_order(const RibbonGraph& g, Color side) { return g.class_nodes(side); }

NodeOrder random_order(const RibbonGraph& g, Color side, Rng& rng) {
  NodeOrder o = g.class_nodes(side);
  rng.shuffle(o);
  return o;
}

namespace {

std::vector<int> moved(const RibbonGraph& g, const Hypertree& f, int from, int to) {
  if (g.color(from) != f.side || g.color(to) != f.side || from == to)
    throw InputError("transfer endpoints must be two distinct nodes of the hypertree's class");
  std::vector<int> v = f.values;
  --v[g.class_index(from)];
  ++v[g.class_index(to)];
  return v;
}

}  // namespace

bool can_transfer(const RibbonGraph& g, const Hypertree& f, int from, int to) {
  auto v = moved(g, f, from, to);
  if (v[g.class_index(from)] < 0) return false;
  return is_hypertree(g, f.side, v);
}

bool can_transfer(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f, int from, int to) {
  auto v = moved(g, f, from, to);
  if (v[g.class_index(from)] < 0) return false;
  return b.contains(v);
}

std::vector<int> internally_inactive(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f,
                                     const NodeOrder& order) {
  std::vector<int> out;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (can_transfer(g, b, f, order[i], order[j])) {
        out.push_back(order[i]);
        break;
      }
  return out;
}

std::vector<int> externally_inactive(const RibbonGraph& g, const HypertreeSet& b, const Hypertree& f,
                                     const NodeOrder& order) {
  std::vector<int> out;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (can_transfer(g, b, f, order[j], order[i])) {
        out.push_back(order[i]);
        break;
      }
  return out;
}

int internal_inactivity(const RibbonGraph& g, const Hypertree& f, const NodeOrder& order) {
  HypertreeSet b(g, f.side);
  return static_cast<int>(internally_inactive(g, b, f, order).size());
}

int external_inactivity(const RibbonGraph& g, const Hypertree& f, const NodeOrder& order) {
  HypertreeSet b(g, f.side);
  return static_cast<int>(externally_inactive(g, b, f, order).size());
}

IntegerPolynomial interior_polynomial(const RibbonGraph& g, Color side, const NodeOrder& order) {
  HypertreeSet b(g, side);
  IntegerPolynomial p;
  for (const auto& f : b.all()) p.add_term(static_cast<int>(internally_inactive(g, b, f, order).size()));
  return p;
}

IntegerPolynomial exterior_polynomial(const RibbonGraph& g, Color side, const NodeOrder& order) {
  HypertreeSet b(g, side);
  IntegerPolynomial p;
  for (const auto& f : b.all()) p.add_term(static_cast<int>(externally_inactive(g, b, f, order).size()));
  return p;
}

Hypertree parse_hypertree(const RibbonGraph& g, const std::string& literal) {
  std::stringstream ss(literal);
  std::string item;
  std::optional<Color> side;
  std::vector<int> values;
  std::vector<char> seen;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("hypertree item '" + item + "' lacks '='");
    std::string name = item.substr(0, eq);
    int x = g.find_node(name);
    if (x < 0) throw InputError("hypertree names unknown node '" + name + "'");
    if (!side) {
      side = g.color(x);
      values.assign(g.class_size(*side), 0);
      seen.assign(g.class_size(*side), 0);
    }
    if (g.color(x) != *side) throw InputError("hypertree mixes both color classes");
    int i = g.class_index(x);
    if (seen[i]) throw InputError("node '" + name + "' given twice");
    seen[i] = 1;
    try {
      size_t used = 0;
      values[i] = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("bad value in '" + item + "'");
    }
    if (values[i] < 0) throw InputError("negative value in '" + item + "'");
  }
  if (!side) throw InputError("empty hypertree literal");
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InputError("hypertree literal must assign every node of its class");
  return {*side, values};
}

std::string format_hypertree(const RibbonGraph& g, const Hypertree& f) {
  std::string out;
  const auto& nodes = g.class_nodes(f.side);
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ',';
    out += g.node_name(nodes[i]) + "=" + std::to_string(f.values[i]);
  }
  return out;
}

}  // namespace hb
