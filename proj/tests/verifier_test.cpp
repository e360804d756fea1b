#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "gridlink/verifier.hpp"

using namespace gridlink;

namespace {

std::uint64_t weighted(const std::vector<LemmaInstance>& xs) {
  std::uint64_t n = 0;
  for (const auto& x : xs) n += x.weight;
  return n;
}

}  // namespace

TEST_CASE("instance counts") {
  const Strategy all{StrategyKind::Exhaustive};
  CHECK(enumerate_instances("L1", all).size() == 9 * 105 + 36 * 7 * 15);
  CHECK(enumerate_instances("L2", all).size() == 84 * (15 + 45));
  CHECK(enumerate_instances("L3", all).size() == 36 * 35);
  CHECK(enumerate_instances("L4", all).size() == 9);
  CHECK(enumerate_instances("L5", all).size() == 162);
  CHECK(enumerate_instances("L6", all).size() == 252);
  CHECK(enumerate_instances("L7", all).size() == 84 + 168);
  CHECK(enumerate_instances("L8", all).size() == 224 + 729 + 132);
  CHECK(enumerate_instances("L9", all).size() == 9 + 2 * 36 + 3 * 84 + 4 * 126);
  CHECK(enumerate_instances("L10", all).size() == 26244);
  CHECK_THROWS_AS(enumerate_instances("L11", all), std::invalid_argument);
}

TEST_CASE("reduced enumeration covers each orbit once") {
  for (const auto& id : lemma_ids()) {
    const auto full = enumerate_instances(id, {StrategyKind::Exhaustive});
    const auto reduced = enumerate_instances(id, {StrategyKind::Reduced});
    CHECK(weighted(reduced) == full.size());
    CHECK(reduced.size() <= full.size());
  }
  CHECK(enumerate_instances("L5", {StrategyKind::Reduced}).size() == 90);
}

TEST_CASE("reduced and exhaustive runs agree") {
  for (const char* id : {"L5", "L7", "L9"}) {
    const auto a = verify_lemma(id, {StrategyKind::Exhaustive});
    const auto b = verify_lemma(id, {StrategyKind::Reduced});
    CHECK(a.instances_checked == b.instances_checked);
    CHECK(a.feasible == b.feasible);
    CHECK(a.ok() == b.ok());
  }
}

TEST_CASE("random strategy") {
  const Strategy s{StrategyKind::Random, 40, 99};
  const auto a = enumerate_instances("L10", s);
  CHECK(a.size() == 40);
  CHECK(a == enumerate_instances("L10", s));
  CHECK(a != enumerate_instances("L10", {StrategyKind::Random, 40, 100}));
  CHECK_THROWS_AS(enumerate_instances("L10", {StrategyKind::Random, 0, 1}), std::invalid_argument);
  const auto r = verify_lemma("L7", {StrategyKind::Random, 30, 5});
  CHECK(r.instances_checked == 30);
  CHECK(report_body(r).find("seed: 5\n") != std::string::npos);
}

TEST_CASE("reports") {
  const auto r = verify_lemma("L4", {StrategyKind::Exhaustive});
  CHECK(r.ok());
  CHECK(r.instances_checked == 9);
  CHECK(r.counters.at("weakly_2_linked") == 8);
  const std::string text = format_report(r);
  CHECK(text.starts_with(report_body(r)));
  CHECK(text.substr(report_body(r).size()).starts_with("elapsed_ms: "));
  CHECK(text.find("status: pass\n") != std::string::npos);
}

TEST_CASE("worker count does not change the report") {
  const auto one = verify_lemma("L8", {StrategyKind::Exhaustive}, 1);
  const auto three = verify_lemma("L8", {StrategyKind::Exhaustive}, 3);
  CHECK(report_body(one) == report_body(three));
}

TEST_CASE("projection lemma names both exceptional sets") {
  const auto r = verify_lemma("L9", {StrategyKind::Exhaustive});
  CHECK(r.ok());
  const std::string body = report_body(r);
  CHECK(body.find("exceptional_set: T1 {(1,1),(2,1),(3,1)} admissible {(1,1),(2,1)}") != std::string::npos);
  CHECK(body.find("exceptional_set: T2 {(1,1),(1,2),(1,3),(2,3)} admissible {(1,3),(2,3)}") != std::string::npos);
  CHECK(body.find("exceptional_family_matches: yes") != std::string::npos);
  CHECK(r.counters.at("oracle_mismatches") == 0);
}

TEST_CASE("pairability samples") {
  const auto a = pairability_sample(1, 17);
  const auto b = pairability_sample(1, 17);
  CHECK(a.terminals == b.terminals);
  std::set<Vertex> seen(a.terminals.begin(), a.terminals.end());
  CHECK(seen.size() == 8);
  for (Vertex v : a.terminals) CHECK((v.row >= 1 && v.row <= 6 && v.col >= 1 && v.col <= 6));
  CHECK(pairability_sample(2, 17).terminals != a.terminals);
}

TEST_CASE("pairability handpicked instances") {
  const GridGraph g = GridGraph::full(6, 6);
  Instance adjacent{g, {}, {}};
  for (int i = 1; i <= 4; ++i) adjacent.demands.push_back(Demand::pair({i, 1}, {i, 2}));
  const auto r = solve(adjacent);
  REQUIRE(r);
  for (const Path& p : r->paths) CHECK(p.size() == 2);

  const Instance crossing{g,
                          {},
                          {Demand::pair({1, 1}, {6, 6}), Demand::pair({1, 6}, {6, 1}),
                           Demand::pair({3, 3}, {3, 4}), Demand::pair({4, 3}, {4, 4})}};
  const auto c = solve(crossing);
  REQUIRE(c);
  CHECK(verify(crossing, *c).ok);
}

TEST_CASE("pairability campaigns") {
  PairabilityOptions opt;
  opt.samples = 200;
  opt.seed = 11;
  const auto a = pairability_check(opt);
  CHECK(a.ok());
  CHECK(a.instances_checked == 200);
  opt.workers = 3;
  CHECK(report_body(pairability_check(opt)) == report_body(a));

  PairabilityOptions sweep;
  sweep.exhaustive_reduced = true;
  sweep.limit = 300;
  const auto s = pairability_check(sweep);
  CHECK(s.ok());
  CHECK(s.evaluated == 300);
  CHECK(s.instances_checked >= 300);
  CHECK(report_body(s).find("complete: no") != std::string::npos);
}

TEST_CASE("trail enumeration agrees with the router") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    GridGraph g = GridGraph::full(2 + static_cast<int>(rng() % 2), 3);
    std::vector<Edge> drop;
    for (const Edge& e : g.edges()) {
      if (rng() % 6 == 0) drop.push_back(e);
    }
    g = g.without_edges(drop);
    const auto vs = g.vertices();
    Instance inst{g, {}, {}};
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      const Vertex s = vs[rng() % vs.size()];
      if (rng() % 2) {
        inst.demands.push_back(Demand::pair(s, vs[rng() % vs.size()]));
      } else {
        inst.demands.push_back(Demand::escape(s, {vs[rng() % vs.size()], vs[rng() % vs.size()]}, 0));
      }
    }
    CHECK(brute_force_feasible(inst) == solve(inst).has_value());
  }
}
