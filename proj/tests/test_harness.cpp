#include "common.hpp"
#include "hyperbernardi/jaeger.hpp"

using namespace hb;
using testing::fixture;

TEST_SUITE("harness") {
  TEST_CASE("generator is deterministic and connected") {
    CHECK(write_graph(generate_random_instance(1, {3, 3, 8})) == write_graph(generate_random_instance(1, {3, 3, 8})));
    for (std::uint64_t s = 1; s <= 1000; ++s) {
      RibbonGraph g = generate_random_instance(s, {4, 4, 10});
      CHECK(connected(g, g.all_edges()));
      CHECK(g.edge_count() <= 10);
      CHECK(g.class_size(Color::Emerald) <= 4);
      CHECK(g.class_size(Color::Violet) <= 4);
    }
    RibbonGraph one = generate_random_instance(5, {1, 1, 1});
    CHECK(one.edge_count() == 1);
    CHECK(one.node_count() == 2);
    CHECK_THROWS_AS(generate_random_instance(1, {0, 1, 1}), InputError);
    for (std::uint64_t s = 1; s <= 200; ++s) {
      RibbonGraph o = generate_random_ordinary(s, 6, 9);
      CHECK_FALSE(o.colored());
      CHECK(connected(o, o.all_edges()));
      CHECK(o.edge_count() <= 9);
    }
  }

  TEST_CASE("fixtures carry provenance") {
    for (const char* name : {"c4", "fixa_plane", "fixa_torus", "fixb", "tour_small", "k5_pair", "matching_small"}) {
      Fixture fx = testing::fixture_meta(name);
      CHECK_FALSE(fx.name.empty());
      CHECK_FALSE(fx.expected.empty());
    }
    CHECK(testing::fixture_meta("k5_pair").provenance == Provenance::FigureTranscription);
    CHECK(testing::fixture_meta("fixb").provenance == Provenance::Derived);
    const std::string body = "hyperbernardi-graph v1\nemerald: e\nviolet: v\nedges:\n p e v\n";
    CHECK_NOTHROW(parse_fixture("#@ fixture x\n#@ provenance derived\n#@ expect n = 1 [derived]\n" + body));
    CHECK_THROWS_AS(parse_fixture("#@ fixture x\n#@ provenance derived\n#@ expect n = 1\n" + body), InputError);
    CHECK_THROWS_AS(parse_fixture("#@ fixture x\n#@ expect n = 1 [derived]\n" + body), InputError);
    CHECK_THROWS_AS(parse_fixture("#@ fixture x\n#@ provenance derived\n#@ expect n = 1 [guess]\n" + body), InputError);
    CHECK_THROWS_AS(parse_fixture("#@ fixture x\n#@ provenance derived\n#@ expect n = 1 [derived]\n"
                                  "#@ expect n = 2 [derived]\n" + body),
                    InputError);
    CHECK_THROWS_AS(parse_fixture("#@ fixture x\n#@ provenance derived\n#@ colour green\n" + body), InputError);
  }

  TEST_CASE("campaign on the small examples") {
    CampaignOptions opt;
    for (const char* name : {"c4", "fixa_torus", "fixa_plane", "fixb"}) {
      CampaignReport r = campaign_verify_all(fixture(name), opt);
      CHECK_MESSAGE(r.exit_code() == 0, name << "\n" << r.summary());
    }
    CampaignReport r = campaign_verify_all(fixture("fixa_torus"), opt);
    CHECK(r.data["h_vector"] == nlohmann::json({1, 3, 3}));
    CampaignReport o = campaign_verify_ordinary(fixture("matching_small"), opt);
    CHECK(o.exit_code() == 0);
    opt.max_edges = 5;
    CHECK_THROWS_AS(campaign_verify_all(fixture("fixa_plane"), opt), InputError);
  }

  TEST_CASE("reports: version, seed, hash; byte-identical replay") {
    CampaignOptions opt;
    opt.seed = 9;
    CampaignReport a = campaign_verify_all(fixture("fixa_torus"), opt);
    CampaignReport b = campaign_verify_all(fixture("fixa_torus"), opt);
    CHECK(a.to_json().dump() == b.to_json().dump());
    auto j = a.to_json();
    CHECK(j["version"] == HB_VERSION);
    CHECK(j["seed"] == 9);
    CHECK(j["input_hash"] == input_hash(fixture("fixa_torus")));
    CHECK(input_hash(fixture("fixa_torus")) != input_hash(fixture("fixa_plane")));
    CHECK_FALSE(j.contains("seconds"));
    CHECK(a.to_json(true).contains("seconds"));
    FuzzOptions f;
    f.count = 60;
    CHECK(fuzz_conjectures(f).to_json().dump() == fuzz_conjectures(f).to_json().dump());
  }

  TEST_CASE("exit codes") {
    CampaignReport r;
    r.add("a", true);
    CHECK(r.exit_code() == 0);
    r.add("b", Status::Conjecture, "flagged");
    CHECK(r.exit_code() == 3);
    r.add("c", false);
    CHECK(r.exit_code() == 1);
    CHECK(status_name(Status::Conjecture) == "CONJECTURE-COUNTEREXAMPLE?");
  }

  TEST_CASE("fuzz modes") {
    FuzzOptions f;
    f.count = 150;
    CampaignReport r = fuzz_conjectures(f);
    CHECK(r.data["errors"] == 0);
    CHECK_FALSE(r.failed());
    f.graphs_only = true;
    CampaignReport g = fuzz_conjectures(f);
    CHECK(g.exit_code() == 0);  // the graph case is a theorem, so never flagged
  }
}
