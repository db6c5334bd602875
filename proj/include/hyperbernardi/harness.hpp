#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>
#include "hyperbernardi/exec.hpp"
#include "hyperbernardi/graph.hpp"
#include "hyperbernardi/random.hpp"

namespace hb {

struct Bounds {
  int max_emerald = 3;
  int max_violet = 3;
  int max_edges = 8;
};

// Simple connected bipartite graph with random rotations and base; deterministic in seed.
RibbonGraph generate_random_instance(std::uint64_t seed, const Bounds& bounds);
// Connected loopless ordinary multigraph with random rotations and base vertex.
RibbonGraph generate_random_ordinary(std::uint64_t seed, int max_vertices, int max_edges);
// Same graph, fresh random rotations, base node and base edge.
RibbonGraph random_setup(const RibbonGraph& g, Rng& rng);
// Rotations read off a drawing: counterclockwise by angle, or clockwise where ccw[x] is false.
RibbonGraph rotations_from_drawing(const RibbonGraph& g, const std::vector<std::array<double, 2>>& pos,
                                   const std::vector<bool>& ccw);

// Complete bipartite graph on (m+1) emerald and (n+1) violet nodes drawn on two horizontal
// lines (emerald below), counterclockwise rotations, base e0 with base edge e0-v_n.
RibbonGraph generate_noncrossing_setup(int m, int n);
bool is_noncrossing_tree(const RibbonGraph& k, EdgeMask tree);

struct NoncrossingReport {
  size_t jaeger = 0;
  size_t noncrossing = 0;
  long long expected = 0;
  bool sets_equal = false;
  bool lex_ascending = false;   // emerald order of E-cut trees = ascending lex order of f_E
  bool lex_descending = false;  // ... descending
};
NoncrossingReport check_noncrossing(int m, int n);

struct ArborescenceReport {
  int genus = 0;
  int root_face = -1;
  size_t arborescences = 0;
  size_t jaeger = 0;
  bool equal = false;
};
// g must be embedded with genus 0 and a violet base node; the root face is the face on the
// right of the first step of the tour.
ArborescenceReport verify_arborescence_duality(const RibbonGraph& g);

enum class Provenance { PaperExact, FigureTranscription, Derived };
std::string provenance_name(Provenance p);

struct Expectation {
  std::string key;
  std::string value;
  Provenance tag;
};

// Graph document plus '#@' metadata lines:
//   #@ fixture NAME
//   #@ provenance paper-exact|figure-transcription|derived
//   #@ expect KEY = VALUE [paper-exact|figure-transcription|derived]
//   #@ note free text
struct Fixture {
  std::string name;
  std::string document;
  Provenance provenance = Provenance::Derived;
  std::vector<Expectation> expected;
  std::vector<std::string> notes;
  RibbonGraph graph() const { return parse_graph(document); }
  const Expectation* find(const std::string& key) const;
};
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

enum class Status { Pass, Fail, Conjecture, Skipped };
std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

struct CampaignReport {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::string input_hash;
  std::vector<CheckResult> checks;
  nlohmann::json data;
  double seconds = 0;  // wall time; left out of the JSON unless asked, so replays stay byte-identical
  void add(const std::string& name, bool ok, const std::string& detail = "");
  void add(const std::string& name, Status s, const std::string& detail = "");
  bool failed() const;
  bool conjecture_flag() const;
  int exit_code() const;  // 0 pass, 1 theorem failure, 3 conjecture flag
  nlohmann::json to_json(bool with_timing = false) const;
  std::string summary() const;
};

std::string input_hash(const RibbonGraph& g);

struct CampaignOptions {
  int max_edges = 14;
  int pairwise_max_edges = 8;
  int geometric_shelling_max_edges = 8;
  int orders = 10;
  std::uint64_t seed = 1;
  Exec exec = Exec::Serial;
};

// Every check of every module on one bipartite graph. Throws InputError above max_edges.
CampaignReport campaign_verify_all(const RibbonGraph& g, const CampaignOptions& opt);
// Graph-only checks (Tutte identity, tour specialization, activity matching, break divisors)
// on an ordinary ribbon graph.
CampaignReport campaign_verify_ordinary(const RibbonGraph& g, const CampaignOptions& opt);

struct FuzzOptions {
  std::uint64_t first_seed = 1;
  int count = 500;
  Bounds bounds{4, 4, 10};
  bool graphs_only = false;  // subdivisions of random ordinary graphs
  int max_vertices = 5;
  Exec exec = Exec::Serial;
};
CampaignReport fuzz_conjectures(const FuzzOptions& opt);

}  // namespace hb
