#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "hyperbernardi/bernardi.hpp"
#include "hyperbernardi/harness.hpp"
#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/polytope.hpp"

using namespace hb;
using nlohmann::json;

namespace {

struct Globals {
  std::string graph;
  bool json = false;
  std::uint64_t seed = 1;
  int max_edges = 14;
  int jobs = 0;
};

Color parse_color(const std::string& s) {
  if (s == "E" || s == "emerald") return Color::Emerald;
  if (s == "V" || s == "violet") return Color::Violet;
  throw InputError("color must be E or V, got '" + s + "'");
}

std::string tree_string(const RibbonGraph& g, EdgeMask t) {
  std::string s = "{";
  bool first = true;
  for (int e : edges_of(t)) {
    s += (first ? "" : ",") + g.edge_name(e);
    first = false;
  }
  return s + "}";
}

json tree_json(const RibbonGraph& g, EdgeMask t) {
  json a = json::array();
  for (int e : edges_of(t)) a.push_back(g.edge_name(e));
  return a;
}

json names_json(const RibbonGraph& g, const std::vector<int>& xs, bool edges) {
  json a = json::array();
  for (int x : xs) a.push_back(edges ? g.edge_name(x) : g.node_name(x));
  return a;
}

std::string names(const RibbonGraph& g, const std::vector<int>& xs, bool edges) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + (edges ? g.edge_name(x) : g.node_name(x));
  return s;
}

RibbonGraph load(const Globals& gl) {
  if (gl.graph.empty()) throw InputError("--graph FILE is required");
  RibbonGraph g = load_graph(gl.graph);
  if (g.edge_count() > gl.max_edges)
    throw InputError("graph has " + std::to_string(g.edge_count()) + " edges, above --max-edges " +
                     std::to_string(gl.max_edges));
  return g;
}

// Ordinary graphs are handled through their subdivision.
RibbonGraph load_bipartite(const Globals& gl) {
  RibbonGraph g = load(gl);
  return g.colored() ? g : subdivide(g).bip;
}

Exec exec_of(const Globals& gl) { return gl.jobs == 1 ? Exec::Serial : Exec::Parallel; }

void emit(const Globals& gl, const json& j, const std::string& text) {
  if (gl.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_info(const Globals& gl) {
  RibbonGraph g = load(gl);
  Faces f = faces_of_embedding(g);
  json j{{"colored", g.colored()},
         {"nodes", g.node_count()},
         {"edges", g.edge_count()},
         {"faces", f.walks.size()},
         {"genus", f.genus},
         {"spanning_trees", count_spanning_trees(g)},
         {"base", {g.node_name(g.base_node()), g.edge_name(g.base_edge())}},
         {"input_hash", input_hash(g)}};
  if (g.colored()) j["classes"] = {{"emerald", g.class_size(Color::Emerald)}, {"violet", g.class_size(Color::Violet)}};
  std::ostringstream os;
  os << (g.colored() ? "bipartite" : "ordinary") << " ribbon graph: " << g.node_count() << " nodes, "
     << g.edge_count() << " edges\n";
  if (g.colored())
    os << "classes: " << g.class_size(Color::Emerald) << " emerald, " << g.class_size(Color::Violet) << " violet\n";
  os << "faces: " << f.walks.size() << ", genus " << f.genus << "\n";
  os << "spanning trees: " << count_spanning_trees(g) << "\n";
  os << "base: " << g.node_name(g.base_node()) << " " << g.edge_name(g.base_edge()) << "\n";
  emit(gl, j, os.str());
  return 0;
}

int cmd_tour(const Globals& gl, const std::string& tree_lit) {
  RibbonGraph g = load(gl);
  EdgeMask t = 0;
  std::stringstream ss(tree_lit);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int e = g.find_edge(item);
    if (e < 0) throw InputError("unknown edge '" + item + "'");
    t |= bit(e);
  }
  if (!is_spanning_tree(g, t)) throw InputError("edges do not form a spanning tree");
  Tour tour = tour_of_tree(g, t);
  json steps = json::array();
  std::ostringstream os;
  for (const auto& s : tour) {
    steps.push_back({{"node", g.node_name(s.node)}, {"edge", g.edge_name(s.edge)}, {"traversed", s.traversed}});
    os << g.node_name(s.node) << " " << g.edge_name(s.edge) << (s.traversed ? "  traverse" : "  skip") << "\n";
  }
  std::vector<int> order = edge_order_from_tour(tour, g.edge_count());
  os << "edge order: " << names(g, order, true) << "\n";
  emit(gl, {{"tour", steps}, {"edge_order", names_json(g, order, true)}}, os.str());
  return 0;
}

int cmd_hypertrees(const Globals& gl, const std::string& side) {
  RibbonGraph g = load_bipartite(gl);
  Color c = parse_color(side);
  auto hs = enumerate_hypertrees(g, c);
  json a = json::array();
  std::ostringstream os;
  for (const auto& h : hs) {
    a.push_back(format_hypertree(g, h));
    os << format_hypertree(g, h) << "\n";
  }
  os << hs.size() << " hypertrees on " << color_name(c) << "\n";
  emit(gl, {{"side", color_name(c)}, {"count", hs.size()}, {"hypertrees", a}}, os.str());
  return 0;
}

int cmd_polynomial(const Globals& gl, bool interior, const std::string& side, const std::string& order,
                   const std::string& variant) {
  RibbonGraph g = load(gl);
  json j;
  std::ostringstream os;
  if (!g.colored() && interior) {
    IntegerPolynomial t = interior_from_tutte(g);
    j["from_tutte"] = t.coeffs;
    os << "from Tutte: " << to_string(t) << "\n";
    g = subdivide(g).bip;
  } else if (!g.colored()) {
    g = subdivide(g).bip;
  }
  Color c = parse_color(side);
  NodeOrder o = default_order(g, c);
  if (!order.empty()) {
    o.clear();
    std::stringstream ss(order);
    std::string w;
    while (std::getline(ss, w, ',')) {
      int x = g.find_node(w);
      if (x < 0 || g.color(x) != c) throw InputError("order names '" + w + "' which is not in the class");
      o.push_back(x);
    }
    std::vector<int> a = o, b = g.class_nodes(c);
    std::sort(a.begin(), a.end());
    if (a != b) throw InputError("order must list every node of the class once");
  }
  IntegerPolynomial p = interior ? interior_polynomial(g, c, o) : exterior_polynomial(g, c, o);
  j["side"] = color_name(c);
  j[interior ? "interior" : "exterior"] = p.coeffs;
  os << (interior ? "interior" : "exterior") << " polynomial: " << to_string(p) << "\n";
  if (!variant.empty()) {
    Variant v = parse_variant(variant);
    if (hypertree_side(v) != c) throw InputError("variant works with hypertrees on the other class");
    IntegerPolynomial q = interior ? bernardi_interior(g, v, exec_of(gl)) : bernardi_exterior(g, v, exec_of(gl));
    j["bernardi"] = {{"variant", variant_name(v)}, {"polynomial", q.coeffs}};
    os << "embedding activities (" << variant_name(v) << "): " << to_string(q) << "\n";
  }
  emit(gl, j, os.str());
  return 0;
}

int cmd_bernardi(const Globals& gl, const std::string& lit, const std::string& variant, bool trace) {
  RibbonGraph g = load_bipartite(gl);
  Variant v = parse_variant(variant);
  Hypertree f = parse_hypertree(g, lit);
  if (f.side != hypertree_side(v)) throw InputError("hypertree lives on the wrong class for " + variant_name(v));
  BernardiRun r = run_bernardi(g, f, v);
  HypertreeSet b(g, f.side);
  Inactivities in = embedding_inactivities(g, b, r);
  json steps = json::array();
  std::ostringstream os;
  auto trav = [&](const std::vector<Traversal>& ts) {
    std::string s;
    json a = json::array();
    for (const auto& t : ts) {
      s += " " + g.edge_name(t.edge) + " from " + g.node_name(t.from) + ";";
      a.push_back({{"edge", g.edge_name(t.edge)}, {"from", g.node_name(t.from)}});
    }
    return std::make_pair(s, a);
  };
  if (trace) {
    if (!r.initial.empty()) os << "start: traverse" << trav(r.initial).first << "\n";
    int k = 1;
    for (const auto& s : r.steps) {
      auto [ts, ta] = trav(s.traversals);
      os << k++ << ". at " << g.node_name(s.node) << " current " << g.edge_name(s.edge) << " (" << s.live_edges
         << " edges): " << (s.decision == Decision::Removed ? "remove" : "keep");
      if (!ts.empty()) os << ", traverse" << ts;
      os << "\n";
    }
  }
  for (const auto& s : r.steps) {
    steps.push_back({{"node", g.node_name(s.node)},
                     {"edge", g.edge_name(s.edge)},
                     {"live_edges", s.live_edges},
                     {"decision", s.decision == Decision::Removed ? "remove" : "keep"},
                     {"traversals", trav(s.traversals).second}});
  }
  NodeOrder o = induced_class_order(g, r, f.side);
  os << "tree: " << tree_string(g, r.tree) << "\n";
  os << "current order: " << names(g, r.current_order, true) << "\n";
  os << "induced order on " << color_name(f.side) << ": " << names(g, o, false) << "\n";
  os << "embedding inactivity: internal " << in.internal << ", external " << in.external << "\n";
  json j{{"variant", variant_name(v)},
         {"hypertree", format_hypertree(g, f)},
         {"initial", trav(r.initial).second},
         {"steps", steps},
         {"tree", tree_json(g, r.tree)},
         {"current_order", names_json(g, r.current_order, true)},
         {"induced_order", names_json(g, o, false)},
         {"reached_order", names_json(g, reached_class_order(g, r, f.side), false)},
         {"internal_inactivity", in.internal},
         {"external_inactivity", in.external}};
  emit(gl, j, os.str());
  return 0;
}

int cmd_jaeger(const Globals& gl, const std::string& cut_s, bool list, bool orders, bool characterize) {
  RibbonGraph g = load_bipartite(gl);
  Color cut = parse_color(cut_s);
  auto trees = enumerate_jaeger_trees(g, cut);
  json a = json::array();
  std::ostringstream os;
  int bad = 0;
  for (size_t i = 0; i < trees.size(); ++i) {
    EdgeMask t = trees[i];
    json x{{"edges", tree_json(g, t)},
           {"emerald_hypertree", format_hypertree(g, degree_vector(g, t, Color::Emerald))},
           {"violet_hypertree", format_hypertree(g, degree_vector(g, t, Color::Violet))}};
    if (list || !orders) os << tree_string(g, t) << "\n";
    if (orders) {
      TOrder tv = t_order(g, t, cut, Color::Violet), te = t_order(g, t, cut, Color::Emerald);
      x["violet_t_order"] = names_json(g, tv.edges, true);
      x["emerald_t_order"] = names_json(g, te.edges, true);
      x["semi_passive_emerald"] = tree_json(g, semi_passive_edges(g, t, te.rank));
      x["semi_passive_violet"] = tree_json(g, semi_passive_edges(g, t, tv.rank));
      os << tree_string(g, t) << "\n  violet T-order: " << names(g, tv.edges, true)
         << "\n  emerald T-order: " << names(g, te.edges, true)
         << "\n  semi-passive (emerald order): " << tree_string(g, semi_passive_edges(g, t, te.rank)) << "\n";
    }
    if (characterize && cut == Color::Violet) {
      json cs = json::array();
      for (const auto& c : characterize_tree(g, trees, i)) {
        cs.push_back({{"edge", g.edge_name(c.edge)}, {"conditions", c.conditions}, {"agree", c.agree()}});
        if (!c.agree()) ++bad;
      }
      x["characterization"] = cs;
    }
    a.push_back(x);
  }
  os << trees.size() << " " << color_name(cut) << "-cut Jaeger trees\n";
  if (characterize) {
    if (cut != Color::Violet) throw InputError("--characterize applies to violet cut trees");
    os << "five-way characterization: " << (bad ? std::to_string(bad) + " disagreements" : "all agree") << "\n";
  }
  emit(gl, {{"cut", color_name(cut)}, {"count", trees.size()}, {"trees", a}}, os.str());
  if (bad) throw TheoremViolation("five-way characterization disagrees");
  return 0;
}

int cmd_polytope(const Globals& gl, const std::string& what, const std::string& cut_s, int kmax) {
  RibbonGraph g = load_bipartite(gl);
  Color cut = parse_color(cut_s);
  auto trees = enumerate_jaeger_trees(g, cut);
  json j{{"verify", what}};
  std::ostringstream os;
  bool ok = true;
  if (what == "dissection" || what == "triangulation") {
    TriangulationReport t = verify_triangulation(g, trees, exec_of(gl));
    const auto& d = t.dissection;
    ok = d.ok();
    json inc = json::array();
    for (auto [a, b] : t.incompatible) inc.push_back({tree_json(g, trees[a]), tree_json(g, trees[b])});
    j["dissection"] = d.ok();
    j["pairwise_checked"] = d.pairwise_checked;
    j["triangulation"] = t.is_triangulation();
    j["incompatible_pairs"] = inc;
    j["witnesses"] = d.witnesses;
    os << "dissection: " << (d.ok() ? "yes" : "no") << (d.pairwise_checked ? " (pairwise certified)" : "") << "\n";
    os << "triangulation: " << (t.is_triangulation() ? "yes" : "no") << "\n";
    for (auto [a, b] : t.incompatible)
      os << "  incompatible: " << tree_string(g, trees[a]) << " " << tree_string(g, trees[b]) << "\n";
    for (const auto& w : d.witnesses) os << "  " << w << "\n";
  } else if (what == "shelling") {
    if (cut != Color::Violet) trees = enumerate_jaeger_trees(transpose(g), Color::Violet);
    const RibbonGraph& h = g;
    ShellingReport s = geometric_shelling_check(cut == Color::Violet ? h : transpose(h), trees, 12, gl.seed);
    j["h_vector"] = s.h;
    j["facets_checked"] = s.facets_checked;
    j["samples_checked"] = s.samples_checked;
    j["ok"] = s.ok;
    j["witnesses"] = s.witnesses;
    ok = s.ok;
    os << "h-vector:";
    for (long long x : s.h) os << " " << x;
    os << "\ngeometric check: " << (s.ok ? "ok" : "FAILED") << " (" << s.facets_checked << " facets, "
       << s.samples_checked << " samples)\n";
    for (const auto& w : s.witnesses) os << "  " << w << "\n";
  } else if (what == "ehrhart" || what == "kato") {
    const int d = g.node_count() - 2;
    if (kmax < 0) kmax = d + 5;
    auto vals = ehrhart_values(g, kmax);
    auto a = fit_binomial_coefficients(vals, d, std::min(g.class_size(Color::Emerald), g.class_size(Color::Violet)) - 1);
    IntegerPolynomial ie = interior_polynomial(g, Color::Emerald);
    j["values"] = vals;
    j["binomial_coefficients"] = a;
    j["interior"] = ie.coeffs;
    os << "ehrhart values:";
    for (long long x : vals) os << " " << x;
    os << "\nbinomial coefficients:";
    for (long long x : a) os << " " << x;
    os << "\ninterior polynomial: " << to_string(ie) << "\n";
    std::vector<long long> pad = ie.coeffs;
    pad.resize(a.size(), 0);
    ok = a == pad;
    if (what == "kato") {
      bool k = kato_series_check(ie, g, kmax);
      j["kato"] = k;
      os << "kato series: " << (k ? "matches" : "MISMATCH") << "\n";
      ok = ok && k;
    }
  } else {
    throw InputError("--verify must be dissection, triangulation, shelling, ehrhart or kato");
  }
  j["ok"] = ok;
  emit(gl, j, os.str());
  return ok ? 0 : 1;
}

int report_out(const Globals& gl, const CampaignReport& r, bool timing) {
  if (gl.json)
    std::cout << r.to_json(timing).dump(2) << "\n";
  else {
    std::cout << r.summary();
    if (timing) std::cout << "time: " << r.seconds << " s\n";
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernardi processes, Jaeger trees and root polytopes of ribbon bipartite graphs"};
  app.set_version_flag("--version", HB_VERSION);
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--graph", gl.graph, "graph document")->check(CLI::ExistingFile);
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--seed", gl.seed, "random seed");
  app.add_option("--max-edges", gl.max_edges, "refuse larger graphs");
  app.add_option("--jobs", gl.jobs, "OpenMP threads (1 = serial reference)");
  for (auto* o : app.get_options()) o->configurable(false);
  app.fallthrough();

  auto* info = app.add_subcommand("info", "summary of a graph document");
  std::string tree_lit;
  auto* tour = app.add_subcommand("tour", "tour of a spanning tree");
  tour->add_option("--tree", tree_lit, "comma separated edge ids")->required();

  std::string side = "E", order, variant;
  auto* hyp = app.add_subcommand("hypertrees", "list hypertrees");
  hyp->add_option("--side", side, "E or V");
  auto* interior = app.add_subcommand("interior", "interior polynomial");
  auto* exterior = app.add_subcommand("exterior", "exterior polynomial");
  for (auto* c : {interior, exterior}) {
    c->add_option("--side", side, "E or V");
    c->add_option("--order", order, "comma separated node order");
    c->add_option("--variant", variant, "also compute embedding activities for this process");
  }

  std::string lit;
  bool trace = false;
  auto* bern = app.add_subcommand("bernardi", "run one Bernardi process");
  bern->add_option("--hypertree", lit, "e.g. e0=1,e1=0")->required();
  bern->add_option("--variant", variant, "htE-cutV|htE-cutE|htV-cutV|htV-cutE")->required();
  bern->add_flag("--trace", trace, "print the step table");

  std::string cut = "V";
  bool list = false, orders = false, characterize = false;
  auto* jae = app.add_subcommand("jaeger", "Jaeger trees");
  jae->add_option("--cut", cut, "V or E");
  jae->add_flag("--list", list, "list trees");
  jae->add_flag("--orders", orders, "T-orders and semi-passive edges");
  jae->add_flag("--characterize", characterize, "five-way edge characterization");

  std::string what;
  int kmax = -1;
  auto* poly = app.add_subcommand("polytope", "root polytope checks");
  poly->add_option("--verify", what, "dissection|triangulation|shelling|ehrhart|kato")->required();
  poly->add_option("--cut", cut, "V or E");
  poly->add_option("--kmax", kmax, "largest dilation for ehrhart and kato");

  bool timing = false;
  int pairwise = 8;
  auto* ver = app.add_subcommand("verify", "run every check on one graph");
  ver->add_flag("--timing", timing, "report wall time");
  ver->add_option("--pairwise-max-edges", pairwise, "size limit for pairwise certificates");

  FuzzOptions fz;
  auto* fuzz = app.add_subcommand("fuzz", "conjecture fuzzing over seeded random instances");
  fuzz->add_option("--count", fz.count, "number of instances");
  fuzz->add_option("--max-emerald", fz.bounds.max_emerald);
  fuzz->add_option("--max-violet", fz.bounds.max_violet);
  fuzz->add_option("--bound-edges", fz.bounds.max_edges, "edge bound for generated instances");
  fuzz->add_flag("--graphs-only", fz.graphs_only, "subdivisions of random ordinary graphs");
  fuzz->add_option("--max-vertices", fz.max_vertices, "vertex bound in graphs-only mode");
  fuzz->add_flag("--timing", timing, "report wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gl.jobs > 0) set_jobs(gl.jobs);
    if (*info) return cmd_info(gl);
    if (*tour) return cmd_tour(gl, tree_lit);
    if (*hyp) return cmd_hypertrees(gl, side);
    if (*interior) return cmd_polynomial(gl, true, side, order, variant);
    if (*exterior) return cmd_polynomial(gl, false, side, order, variant);
    if (*bern) return cmd_bernardi(gl, lit, variant, trace);
    if (*jae) return cmd_jaeger(gl, cut, list, orders, characterize);
    if (*poly) return cmd_polytope(gl, what, cut, kmax);
    if (*ver) {
      RibbonGraph g = load(gl);
      CampaignOptions opt;
      opt.max_edges = gl.max_edges;
      opt.seed = gl.seed;
      opt.pairwise_max_edges = pairwise;
      opt.exec = exec_of(gl);
      CampaignReport r = g.colored() ? campaign_verify_all(g, opt) : campaign_verify_ordinary(g, opt);
      return report_out(gl, r, timing);
    }
    if (*fuzz) {
      fz.first_seed = gl.seed;
      fz.exec = exec_of(gl);
      return report_out(gl, fuzz_conjectures(fz), timing);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
