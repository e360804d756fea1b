// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownFailures, whose failure is expected and explained in the README.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include "gridlink/verifier.hpp"

using namespace gridlink;

namespace {

// L10 (pair plus escorted singletons): the 100 placements with both
// singletons on one vertex and too few edges there have no solution.
const std::set<int> kKnownFailures{6};

struct Verdict {
  bool pass = false;
  std::string detail;
};

int workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

LemmaReport run(const std::string& id) { return verify_lemma(id, {StrategyKind::Exhaustive}, workers()); }

std::string counter(const LemmaReport& r, const std::string& key) {
  const auto it = r.counters.find(key);
  return std::to_string(it == r.counters.end() ? 0 : it->second);
}

std::string note(const LemmaReport& r, const std::string& key) {
  for (const auto& n : r.notes) {
    if (n.starts_with(key + ": ")) return n.substr(key.size() + 2);
  }
  return "";
}

std::string summary(const LemmaReport& r) {
  return r.lemma_id + " " + std::to_string(r.instances_checked) + " instances, " +
         std::to_string(r.defects.size()) + " defects";
}

}  // namespace

int main() {
  LemmaReport l8, l9;
  LemmaReport pair_a;
  PairabilityOptions popt;
  popt.samples = 100000;
  popt.seed = 1;
  popt.workers = workers();

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"weak 2-linkage of P3 x Pk, L-shapes and P1 x P3", [] {
         const auto r = run("L4");
         return Verdict{r.ok() && r.instances_checked == 9 && r.elapsed_ms < 60e3, summary(r)};
       }},
      {"frames for all 162 placements avoid C1 edges", [] {
         const auto r = run("L5");
         return Verdict{r.ok() && r.instances_checked == 162 && r.elapsed_ms < 10e3, summary(r)};
       }},
      {"framed triples and corner matings", [] {
         const auto a = run("L6");
         const auto b = run("L7");
         return Verdict{a.ok() && b.ok() && a.elapsed_ms + b.elapsed_ms < 60e3,
                        summary(a) + "; " + summary(b)};
       }},
      {"escapes into A (Q1-Q4, link and escape, distinct exits)", [&] {
         l8 = run("L8");
         return Verdict{l8.ok() && l8.instances_checked == 1085 && l8.elapsed_ms < 120e3, summary(l8)};
       }},
      {"projection exceptional family is exactly {T1, T2}", [&] {
         l9 = run("L9");
         return Verdict{l9.ok() && note(l9, "exceptional_family_matches") == "yes" && l9.elapsed_ms < 300e3,
                        summary(l9) + ", " + std::to_string(l9.exceptional.size()) + " refusals"};
       }},
      {"pair plus two escorted singletons, and clamp matching audit", [] {
         const auto a = run("L10");
         const auto b = run("P1-matching");
         return Verdict{a.ok() && b.ok() && a.elapsed_ms + b.elapsed_ms < 600e3,
                        summary(a) + " (distinct terminals: " + counter(a, "defects_distinct_terminals") +
                            ", coincident singletons: " + counter(a, "defects_coincident_singletons") +
                            ", confirmed infeasible: " + counter(a, "confirmed_infeasible") + "); " +
                            summary(b) + ", " + counter(b, "clamp_configurations") + " clamp configurations"};
       }},
      {"crowded quadrants with 8, 7, 6 and 5 terminals", [] {
         const auto a = run("L1");
         const auto b = run("L2");
         const auto c = run("L3");
         return Verdict{a.ok() && b.ok() && c.ok() && a.elapsed_ms + b.elapsed_ms + c.elapsed_ms < 1800e3,
                        summary(a) + "; " + summary(b) + "; " + summary(c)};
       }},
      {"4-pair routing on the 6x6 grid, 100000 seeded samples", [&] {
         pair_a = pairability_check(popt);
         return Verdict{pair_a.ok() && pair_a.instances_checked == 100000 && pair_a.elapsed_ms < 3600e3,
                        std::to_string(pair_a.instances_checked) + " samples, " +
                            std::to_string(pair_a.defects.size()) + " counterexamples"};
       }},
      {"router and flow agree on every all-escape instance", [&] {
         const auto checks = l8.counters["oracle_checks"] + l9.counters["oracle_checks"];
         const auto bad = l8.counters["oracle_mismatches"] + l9.counters["oracle_mismatches"];
         return Verdict{checks > 0 && bad == 0,
                        std::to_string(checks) + " comparisons, " + std::to_string(bad) + " mismatches"};
       }},
      {"pairability report is reproducible", [&] {
         PairabilityOptions again = popt;
         again.workers = popt.workers == 1 ? 2 : 1;
         const auto b = pairability_check(again);
         const bool same = report_body(pair_a) == report_body(b);
         return Verdict{same, std::string("rerun with ") + std::to_string(again.workers) +
                                  " workers: " + (same ? "identical" : "different") + " report body"};
       }},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    const Verdict v = criteria[i].second();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool known = kKnownFailures.count(id) != 0;
    std::printf("criterion %2d %s: %s (%s; %.1f s)%s\n", id, v.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), v.detail.c_str(), s,
                !v.pass && known ? " [known]" : "");
    std::fflush(stdout);
    if (!v.pass && !known) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
