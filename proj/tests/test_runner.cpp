#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "oracles.hpp"
#include "signless/runner.hpp"

using namespace signless;

namespace {

std::string report_of(int n, unsigned jobs) {
  RunConfig config;
  config.jobs = jobs;
  std::ostringstream out;
  io::write_report_header(out, io::ReportFormat::Csv);
  enumerate_labeled(n, false, config, [&](GraphResult&& r) {
    for (const auto& rec : r.records) io::write_report_record(out, {r.locator, rec}, io::ReportFormat::Csv);
  });
  return out.str();
}

const BoundReport* find_bound(const GraphResult& r, BoundId id, std::optional<double> k = std::nullopt) {
  for (const auto& rec : r.records) {
    const auto* b = std::get_if<BoundReport>(&rec);
    if (b && b->bound == id && (!k || b->k == k)) return b;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("evaluate_graph on K3") {
  const auto r = evaluate_graph(complete_graph(3), "k3", RunConfig{});
  const auto* eq5 = find_bound(r, BoundId::EQ5, 1.0);
  REQUIRE(eq5);
  CHECK(eq5->equality);
  CHECK(find_bound(r, BoundId::EQ12));
  CHECK(find_bound(r, BoundId::EQ22));
  CHECK(find_bound(r, BoundId::EQ28));
  CHECK_FALSE(find_bound(r, BoundId::EQ4));

  SweepSummary summary;
  summary.add(r);
  CHECK(summary.failures() == 0);
  CHECK(summary.diagnostic_failures() > 0);  // the q_1-based Kober form fails on K_n
}

TEST_CASE("evaluate_graph marks unmet hypotheses as not applicable") {
  const auto r = evaluate_graph(empty_graph(3), "e3", RunConfig{});
  const auto* eq4 = find_bound(r, BoundId::EQ4);
  REQUIRE(eq4);
  CHECK_FALSE(eq4->applicable());
  const auto* eq9 = find_bound(r, BoundId::EQ9);
  REQUIRE(eq9);
  CHECK_FALSE(eq9->applicable());
  const auto* eq16 = find_bound(r, BoundId::EQ16);
  REQUIRE(eq16);
  CHECK_FALSE(eq16->applicable());

  const auto k1 = evaluate_graph(empty_graph(1), "k1", RunConfig{});
  const auto* eq2 = find_bound(k1, BoundId::EQ2);
  REQUIRE(eq2);
  CHECK_FALSE(eq2->applicable());
}

TEST_CASE("explicit k list") {
  RunConfig config;
  config.k = {false, {2.0, 0.5}};
  const auto r = evaluate_graph(cycle_graph(5), "c5", config);
  CHECK(find_bound(r, BoundId::EQ5, 2.0));
  CHECK_FALSE(find_bound(r, BoundId::EQ5, 1.0));
  CHECK(find_bound(r, BoundId::EQ17, 0.5));
  CHECK_FALSE(find_bound(r, BoundId::EQ17, 0.0));
}

TEST_CASE("enumeration counts") {
  for (int n = 2; n <= 5; ++n) {
    long connected = 0, all = 0;
    enumerate_labeled(n, true, RunConfig{}, [&](GraphResult&&) { ++connected; });
    enumerate_labeled(n, false, RunConfig{}, [&](GraphResult&&) { ++all; });
    CHECK(connected == oracle::connected_labeled_count(n));
    CHECK(all == 1L << pair_count(n));
  }
}

TEST_CASE("enumeration locators carry the mask and graph6") {
  std::vector<std::string> locators;
  enumerate_labeled(3, true, RunConfig{}, [&](GraphResult&& r) { locators.push_back(r.locator); });
  CHECK(locators == std::vector<std::string>{"n3#3:Bo", "n3#5:Bg", "n3#6:BW", "n3#7:Bw"});
}

TEST_CASE("reports do not depend on the worker count") {
  const auto one = report_of(5, 1);
  CHECK(one == report_of(5, 3));
  CHECK(one == report_of(5, 8));
}

TEST_CASE("run_batch keeps index order across blocks and skips") {
  RunConfig config;
  config.jobs = 4;
  config.include_invariants = false;
  std::vector<std::string> seen;
  run_batch(
      5000,
      [](std::size_t i) -> std::optional<GraphInput> {
        if (i % 7 == 0) return std::nullopt;
        return GraphInput{std::to_string(i), path_graph(2)};
      },
      config, [&](GraphResult&& r) { seen.push_back(r.locator); });
  REQUIRE(seen.size() == 5000 - 715);
  std::size_t expect = 0;
  for (const auto& s : seen) {
    if (expect % 7 == 0) ++expect;
    CHECK(s == std::to_string(expect));
    ++expect;
  }
}

TEST_CASE("run_batch rethrows worker errors") {
  RunConfig config;
  config.jobs = 3;
  auto make = [](std::size_t i) -> std::optional<GraphInput> {
    if (i == 17) throw std::runtime_error("boom");
    return GraphInput{"g", path_graph(3)};
  };
  CHECK_THROWS_WITH(run_batch(40, make, config, [](GraphResult&&) {}), "boom");
}

TEST_CASE("family expectations") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(family_expectations(Family::Complete, evaluate_graph(complete_graph(n), "k", RunConfig{})).empty());
    CHECK(family_expectations(Family::Star, evaluate_graph(star_graph(n), "s", RunConfig{})).empty());
    CHECK(family_expectations(Family::Empty, evaluate_graph(empty_graph(n), "e", RunConfig{})).empty());
  }
  for (int n : {5, 7}) CHECK(family_expectations(Family::Cycle, evaluate_graph(cycle_graph(n), "c", RunConfig{})).empty());
  CHECK(family_expectations(Family::DoubleStar, evaluate_graph(double_star_graph(8), "d", RunConfig{})).empty());
  CHECK(family_expectations(Family::CompleteBipartite, evaluate_graph(complete_bipartite_graph(3, 4), "b", RunConfig{}))
            .empty());
  // A path is not a star, so the star expectations must report misses.
  CHECK_FALSE(family_expectations(Family::Star, evaluate_graph(path_graph(5), "p", RunConfig{})).empty());
}

TEST_CASE("summary counts") {
  SweepSummary summary;
  enumerate_labeled(4, true, RunConfig{}, [&](GraphResult&& r) { summary.add(r); });
  CHECK(summary.graphs() == 38);
  const auto& eq2 = summary.bounds().at(BoundId::EQ2);
  CHECK(eq2.evaluated == 38);
  CHECK(eq2.failures == 0);
  CHECK(eq2.equalities == 4 + 1);  // four labeled stars plus K4
  const auto& top = summary.lemmas().at(LemmaId::SignlessTop);
  CHECK(top.fail == 0);
  CHECK(top.equalities == 4);
  std::ostringstream out;
  summary.print(out);
  CHECK(out.str().rfind("graphs 38\n", 0) == 0);
}

TEST_CASE("tolerance from the environment") {
  setenv("SIGNLESS_TOL", "1e-7", 1);
  CHECK(tolerance_from_env() == 1e-7);
  setenv("SIGNLESS_TOL", "junk", 1);
  CHECK_FALSE(tolerance_from_env().has_value());
  unsetenv("SIGNLESS_TOL");
  CHECK_FALSE(tolerance_from_env().has_value());
}
