#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "hyperbernardi/bernardi.hpp"
#include "hyperbernardi/harness.hpp"
#include "hyperbernardi/jaeger.hpp"
#include "hyperbernardi/polytope.hpp"

#ifndef HB_VERSION
#define HB_VERSION "dev"
#endif

namespace hb {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Conjecture: return "CONJECTURE-COUNTEREXAMPLE?";
    case Status::Skipped: return "SKIP";
  }
  return "?";
}

void CampaignReport::add(const std::string& name, bool ok, const std::string& detail) {
  add(name, ok ? Status::Pass : Status::Fail, detail);
}

void CampaignReport::add(const std::string& name, Status s, const std::string& detail) {
  checks.push_back({name, s, detail});
}

bool CampaignReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; });
}

bool CampaignReport::conjecture_flag() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == Status::Conjecture; });
}

int CampaignReport::exit_code() const {
  if (failed()) return 1;
  if (conjecture_flag()) return 3;
  return 0;
}

nlohmann::json CampaignReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["tool"] = "hyperbernardi";
  j["version"] = tool_version;
  j["seed"] = seed;
  j["input_hash"] = input_hash;
  j["status"] = failed() ? "fail" : conjecture_flag() ? "conjecture-flag" : "pass";
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json x{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    arr.push_back(x);
  }
  if (!data.is_null()) j["data"] = data;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string CampaignReport::summary() const {
  std::ostringstream os;
  int counts[4] = {0, 0, 0, 0};
  for (const auto& c : checks) {
    ++counts[static_cast<int>(c.status)];
    os << status_name(c.status) << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " flagged, " << counts[3]
     << " skipped\n";
  return os.str();
}

std::string input_hash(const RibbonGraph& g) {
  // FNV-1a over the canonical document.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : write_graph(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs a check; a thrown TheoremViolation or InputError becomes a failure with its message.
template <class F>
void guarded(CampaignReport& rep, const std::string& name, F&& f) {
  try {
    f();
  } catch (const TheoremViolation& ex) {
    rep.add(name, Status::Fail, std::string("theorem violation: ") + ex.what());
  } catch (const InputError& ex) {
    rep.add(name, Status::Fail, std::string("input error: ") + ex.what());
  }
}

std::vector<EdgeMask> sorted(std::vector<EdgeMask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<long long> padded(const IntegerPolynomial& p, size_t n) {
  std::vector<long long> c = p.coeffs;
  c.resize(std::max(n, c.size()), 0);
  return c;
}

std::vector<long long> strip(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string poly(const IntegerPolynomial& p) { return to_string(p); }

void record_header(CampaignReport& rep, const RibbonGraph& g, std::uint64_t seed) {
  rep.tool_version = HB_VERSION;
  rep.seed = seed;
  rep.input_hash = input_hash(g);
}

// Conjecture comparison with re-verification: a mismatch is recomputed with an independent
// node order and a serial run before it is reported.
void conjecture_checks(CampaignReport& rep, const RibbonGraph& g, std::uint64_t seed, bool graph_theorem,
                       nlohmann::json* witnesses) {
  ConjectureReport c = check_conjectures(g);
  auto confirm = [&](bool holds, const char* which) {
    if (holds) return true;
    Rng rng(seed ^ 0x5bd1e995ULL);
    NodeOrder o = random_order(g, Color::Emerald, rng);
    IntegerPolynomial i2 = interior_polynomial(g, Color::Emerald, o);
    IntegerPolynomial x2 = exterior_polynomial(g, Color::Emerald, o);
    bool still = std::string(which) == "interior-cut-v"
                     ? i2 != bernardi_interior(g, Variant::HtE_CutV, Exec::Serial)
                     : (x2 != bernardi_exterior(g, Variant::HtE_CutE, Exec::Serial) ||
                        x2 != bernardi_exterior(g, Variant::HtE_CutV, Exec::Serial));
    if (!still) throw TheoremViolation(std::string("unstable recomputation for ") + which);
    if (witnesses)
      witnesses->push_back({{"conjecture", which},
                            {"graph", write_graph(g)},
                            {"interior", c.interior.coeffs},
                            {"interior_cut_v", c.interior_cut_v.coeffs},
                            {"exterior", c.exterior.coeffs},
                            {"exterior_cut_e", c.exterior_cut_e.coeffs},
                            {"exterior_cut_v", c.exterior_cut_v.coeffs}});
    return false;
  };
  bool in_ok = confirm(c.interior_cut_v_holds(), "interior-cut-v");
  bool ex_ok = confirm(c.exterior_holds(), "exterior");
  std::string d1 = "I = " + poly(c.interior) + ", htE-cutV gives " + poly(c.interior_cut_v);
  if (graph_theorem)
    rep.add("interior-cut-v (graph case, proven)", in_ok, d1);
  else
    rep.add("conjecture: interior-cut-v", in_ok ? Status::Pass : Status::Conjecture, d1);
  rep.add("conjecture: exterior", ex_ok ? Status::Pass : Status::Conjecture,
          "X = " + poly(c.exterior) + ", cutE " + poly(c.exterior_cut_e) + ", cutV " + poly(c.exterior_cut_v));
}

}  // namespace

CampaignReport campaign_verify_all(const RibbonGraph& g, const CampaignOptions& opt) {
  if (!g.colored()) throw InputError("campaign_verify_all needs a bipartite graph; use the ordinary campaign");
  if (g.edge_count() > opt.max_edges)
    throw InputError("graph has " + std::to_string(g.edge_count()) + " edges, above the limit " +
                     std::to_string(opt.max_edges) + " (raise it with --max-edges)");
  const auto t0 = Clock::now();
  CampaignReport rep;
  record_header(rep, g, opt.seed);
  const Color E = Color::Emerald, V = Color::Violet;

  HypertreeSet be(g, E), bv(g, V);
  const IntegerPolynomial ie = interior_polynomial(g, E), iv = interior_polynomial(g, V);
  const IntegerPolynomial xe = exterior_polynomial(g, E), xv = exterior_polynomial(g, V);
  rep.data["hypertrees"] = {{"emerald", be.size()}, {"violet", bv.size()}};
  rep.data["interior"] = ie.coeffs;
  rep.data["exterior"] = xe.coeffs;
  rep.data["spanning_trees"] = count_spanning_trees(g);

  rep.add("hypertree counts agree", be.size() == bv.size(),
          std::to_string(be.size()) + " vs " + std::to_string(bv.size()));
  rep.add("interior polynomial same on both classes", ie == iv, poly(ie) + " vs " + poly(iv));
  const int deg_bound = std::min(g.class_size(E), g.class_size(V)) - 1;
  rep.add("interior polynomial shape", ie.at(0) == 1 && ie.sum() == static_cast<long long>(be.size()) &&
                                           ie.degree() <= deg_bound && iv.degree() <= deg_bound);
  {
    Rng rng(opt.seed);
    bool same = true;
    for (int k = 0; k < opt.orders && same; ++k)
      for (Color c : {E, V}) {
        NodeOrder o = random_order(g, c, rng);
        same = same && interior_polynomial(g, c, o) == (c == E ? ie : iv) &&
               exterior_polynomial(g, c, o) == (c == E ? xe : xv);
      }
    rep.add("order independence", same, std::to_string(opt.orders) + " random orders per class");
  }

  // Bernardi processes: the runs assert their own invariants online.
  std::map<Variant, std::vector<BernardiRun>> runs;
  guarded(rep, "bernardi runs well defined", [&] {
    bool arcs = true;
    for (Variant v : kVariants) {
      const HypertreeSet& b = hypertree_side(v) == E ? be : bv;
      runs[v] = run_all_bernardi(g, b.all(), v, opt.exec);
      for (const auto& r : runs[v]) arcs = arcs && consecutive_current_arcs(g, r);
    }
    rep.add("bernardi runs well defined", true, "4 variants");
    rep.add("current edges in consecutive arcs", arcs);
  });
  const bool have_runs = runs.size() == kVariants.size();

  guarded(rep, "bernardi interior equals interior", [&] {
    IntegerPolynomial be_e = bernardi_interior(g, Variant::HtE_CutE, opt.exec);
    IntegerPolynomial bv_v = bernardi_interior(g, Variant::HtV_CutV, opt.exec);
    rep.add("bernardi interior equals interior", be_e == ie && bv_v == iv,
            "htE-cutE " + poly(be_e) + ", htV-cutV " + poly(bv_v));
  });

  std::vector<EdgeMask> vj = enumerate_jaeger_trees(g, V);
  std::vector<EdgeMask> ej = enumerate_jaeger_trees(g, E);
  rep.data["jaeger"] = {{"violet_cut", vj.size()}, {"emerald_cut", ej.size()}};
  {
    bool rec = sorted(vj) == sorted(jaeger_trees_by_recognition(g, V)) &&
               sorted(ej) == sorted(jaeger_trees_by_recognition(g, E));
    rep.add("jaeger enumeration equals recognition", rec);
  }
  if (have_runs) {
    bool eq = true;
    for (Variant v : kVariants) {
      std::vector<EdgeMask> out;
      for (const auto& r : runs[v]) out.push_back(r.tree);
      eq = eq && sorted(out) == sorted(cut_side(v) == V ? vj : ej);
    }
    rep.add("bernardi outcomes equal jaeger trees", eq);

    bool orders = true;
    for (Variant v : kVariants)
      for (const auto& r : runs[v]) orders = orders && r.current_order == t_order(g, r.tree, cut_side(v), cut_side(v)).edges;
    rep.add("current edges follow the T-order", orders);
  }
  {
    JaegerBijection jv = hypertree_pairs(g, vj), je = hypertree_pairs(g, ej);
    bool ok = jv.injective_on_both_sides() && je.injective_on_both_sides() && vj.size() == be.size() &&
              ej.size() == be.size();
    rep.add("unique realization and hypertree bijection", ok);
  }
  rep.add("reversal duality", sorted(vj) == sorted(enumerate_jaeger_trees(reversed_setup(g), E)));
  {
    bool orderly = true;
    bool sorted_v = true;
    for (size_t i = 0; i < vj.size(); ++i) {
      orderly = orderly && base_cut_order_holds(g, vj[i]);
      if (i > 0) sorted_v = sorted_v && compare_trees(g, vj[i - 1], vj[i], V, V) < 0;
    }
    rep.add("base cut order", orderly);
    rep.add("violet order strictly increasing", sorted_v);
  }
  guarded(rep, "five-way characterization", [&] {
    int bad = 0, edges = 0;
    for (size_t i = 0; i < vj.size(); ++i)
      for (const auto& c : characterize_tree(g, vj, i)) {
        ++edges;
        if (!c.agree()) ++bad;
      }
    rep.add("five-way characterization", bad == 0,
            std::to_string(edges) + " tree edges, " + std::to_string(bad) + " disagreements");
  });
  guarded(rep, "composition", [&] {
    int bad = 0;
    for (const auto& f : be.all())
      if (!check_composition(g, f).all()) ++bad;
    rep.add("composition", bad == 0, std::to_string(bad) + " failures");
  });

  // Geometry needs a simple graph.
  bool simple = true;
  try {
    require_simple(g);
  } catch (const InputError&) {
    simple = false;
  }
  if (!simple) {
    rep.add("dissection", Status::Skipped, "parallel edges");
  } else {
    guarded(rep, "dissection", [&] {
      DissectionReport dv = verify_dissection(g, vj, opt.exec, opt.pairwise_max_edges);
      DissectionReport de = verify_dissection(g, ej, opt.exec, opt.pairwise_max_edges);
      std::string d = dv.pairwise_checked ? "markers and pairwise certificates" : "markers";
      for (const auto& w : dv.witnesses) d += "; " + w;
      for (const auto& w : de.witnesses) d += "; " + w;
      rep.add("dissection", dv.ok() && de.ok(), d);
      rep.data["triangulation"] = incompatible_pairs(g, vj, opt.exec).empty();
    });
    guarded(rep, "equal simplex volumes", [&] {
      if (g.edge_count() > opt.pairwise_max_edges) {
        rep.add("equal simplex volumes", Status::Skipped, "size");
        return;
      }
      bool eq = true;
      Rational d0 = simplex_gram_determinant(g, vj.front());
      for (EdgeMask t : spanning_trees(g)) eq = eq && simplex_gram_determinant(g, t) == d0;
      rep.add("equal simplex volumes", eq);
    });
  }
  {
    std::vector<long long> h = shelling_h_vector(g, vj);
    rep.data["h_vector"] = h;
    rep.add("shelling h-vector equals interior", strip(h) == ie.coeffs);
  }
  if (simple && g.edge_count() <= opt.geometric_shelling_max_edges) {
    guarded(rep, "geometric shelling", [&] {
      ShellingReport s = geometric_shelling_check(g, vj, 12, opt.seed);
      std::string d = std::to_string(s.facets_checked) + " facets, " + std::to_string(s.samples_checked) + " samples";
      for (const auto& w : s.witnesses) d += "; " + w;
      rep.add("geometric shelling", s.ok && strip(s.h) == ie.coeffs, d);
    });
  } else {
    rep.add("geometric shelling", Status::Skipped, simple ? "size" : "parallel edges");
  }
  guarded(rep, "ehrhart fit and kato series", [&] {
    const int d = g.node_count() - 2;
    std::vector<long long> vals = ehrhart_values(g, d + 5);
    std::vector<long long> a = fit_binomial_coefficients(vals, d, deg_bound);
    rep.data["ehrhart"] = vals;
    rep.add("ehrhart fit and kato series", a == padded(ie, a.size()) && kato_series_check(ie, g, d + 5));
  });

  conjecture_checks(rep, g, opt.seed, false, nullptr);
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

CampaignReport campaign_verify_ordinary(const RibbonGraph& g, const CampaignOptions& opt) {
  if (g.colored()) throw InputError("campaign_verify_ordinary needs an ordinary graph");
  if (g.edge_count() > opt.max_edges)
    throw InputError("graph has " + std::to_string(g.edge_count()) + " edges, above the limit " +
                     std::to_string(opt.max_edges) + " (raise it with --max-edges)");
  const auto t0 = Clock::now();
  CampaignReport rep;
  record_header(rep, g, opt.seed);
  Subdivision s = subdivide(g);

  guarded(rep, "tutte identity", [&] {
    rep.add("tutte identity", tutte_check(g), poly(interior_from_tutte(g)));
  });
  guarded(rep, "tour specialization", [&] {
    bool ok = true;
    for (EdgeMask t : spanning_trees(g)) ok = ok && graph_specialization_check(g, t);
    rep.add("tour specialization", ok);
  });
  guarded(rep, "activity matching", [&] {
    bool ok = true;
    for (EdgeMask t : enumerate_jaeger_trees(s.bip, Color::Violet)) {
      MatchingReport m = graph_activity_matching(s.bip, t);
      ok = ok && m.counts_equal && m.matches;
    }
    rep.add("activity matching", ok);
  });
  guarded(rep, "break divisors", [&] {
    auto bd = break_divisors(g);
    rep.add("break divisors", static_cast<long long>(bd.size()) == count_spanning_trees(g),
            std::to_string(bd.size()) + " divisors");
  });
  conjecture_checks(rep, s.bip, opt.seed, true, nullptr);
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

CampaignReport fuzz_conjectures(const FuzzOptions& opt) {
  const auto t0 = Clock::now();
  CampaignReport rep;
  rep.tool_version = HB_VERSION;
  rep.seed = opt.first_seed;
  {
    std::ostringstream cfg;
    cfg << opt.first_seed << ":" << opt.count << ":" << opt.bounds.max_emerald << ":" << opt.bounds.max_violet << ":"
        << opt.bounds.max_edges << ":" << opt.graphs_only << ":" << opt.max_vertices;
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : cfg.str()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    rep.input_hash = buf;
  }

  struct Item {
    CampaignReport r;
    nlohmann::json witnesses = nlohmann::json::array();
    std::string error;
    int edges = 0;
  };
  const int n = opt.count;
  std::vector<Item> items(n);
  auto work = [&](int i) {
    const std::uint64_t seed = opt.first_seed + i;
    Item& it = items[i];
    try {
      RibbonGraph g = opt.graphs_only
                          ? subdivide(generate_random_ordinary(seed, opt.max_vertices, opt.bounds.max_edges / 2)).bip
                          : generate_random_instance(seed, opt.bounds);
      it.edges = g.edge_count();
      // The proven part of the picture rides along as a sanity check.
      it.r.add("interior theorem", bernardi_interior(g, Variant::HtE_CutE) == interior_polynomial(g, Color::Emerald));
      conjecture_checks(it.r, g, seed, opt.graphs_only, &it.witnesses);
    } catch (const std::exception& ex) {
      it.error = ex.what();
    }
  };
  if (opt.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) work(i);
  } else {
    for (int i = 0; i < n; ++i) work(i);
  }

  // Aggregate in seed order.
  std::map<std::string, std::array<int, 4>> tally;
  nlohmann::json witnesses = nlohmann::json::array();
  int errors = 0;
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) {
    ++sizes[items[i].edges];
    if (!items[i].error.empty()) {
      ++errors;
      rep.add("seed " + std::to_string(opt.first_seed + i), false, items[i].error);
      continue;
    }
    for (const auto& c : items[i].r.checks) {
      ++tally[c.name][static_cast<int>(c.status)];
      if (c.status == Status::Fail)
        rep.add(c.name + " (seed " + std::to_string(opt.first_seed + i) + ")", false, c.detail);
    }
    for (auto w : items[i].witnesses) {
      w["seed"] = opt.first_seed + i;
      witnesses.push_back(w);
    }
  }
  for (const auto& [name, t] : tally) {
    Status s = t[1] ? Status::Fail : t[2] ? Status::Conjecture : Status::Pass;
    rep.add(name, s,
            std::to_string(t[0]) + "/" + std::to_string(n) + " pass" +
                (t[2] ? ", " + std::to_string(t[2]) + " flagged" : ""));
  }
  rep.data["instances"] = n;
  rep.data["errors"] = errors;
  for (auto [m, k] : sizes) rep.data["edge_histogram"][std::to_string(m)] = k;
  rep.data["counterexamples"] = witnesses;
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace hb
