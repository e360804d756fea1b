#pragma once

// Campaigns over lemma instance spaces and the 4-pair routing check on the
// 6x6 grid. Instances are checked in parallel; reports depend only on the
// lemma, the strategy and the seed.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/routing.hpp"

namespace gridlink {

enum class StrategyKind { Exhaustive, Reduced, Random };

std::string to_string(StrategyKind k);

struct Strategy {
  StrategyKind kind = StrategyKind::Exhaustive;
  std::uint64_t samples = 0;  // random only
  std::uint64_t seed = 0;     // random only
};

// Lemma ids accepted by enumerate_instances / verify_lemma.
const std::vector<std::string>& lemma_ids();

// One point of a lemma's quantified domain. The meaning of `terminals` and
// `params` is per lemma; `label()` spells it out.
struct LemmaInstance {
  std::string lemma;
  std::string part;
  std::vector<Vertex> terminals;
  std::vector<int> params;
  std::uint64_t weight = 1;  // instances this one stands for (reduced strategy)

  std::string label() const;
  bool operator==(const LemmaInstance&) const = default;
};

// Every instance once (exhaustive), one per transpose orbit (reduced; parts
// without that symmetry are listed in full), or `samples` seeded draws with
// replacement (random). Throws std::invalid_argument for an unknown id or a
// random strategy without samples.
std::vector<LemmaInstance> enumerate_instances(const std::string& lemma_id, const Strategy& s);

struct LemmaReport {
  std::string lemma_id;
  Strategy strategy;
  std::uint64_t instances_checked = 0;  // weighted by orbit size
  std::uint64_t evaluated = 0;          // instances actually run
  std::uint64_t feasible = 0;
  std::vector<std::string> exceptional;
  std::vector<std::string> defects;
  std::map<std::string, std::uint64_t> counters;  // per-lemma tallies
  std::vector<std::string> notes;                 // extra `key: value` lines
  double elapsed_ms = 0;

  bool ok() const { return defects.empty(); }
};

// Report text. Every line is `key: value`; the last line is `elapsed_ms`,
// which is the only run-dependent field.
std::string format_report(const LemmaReport& r);
// format_report without the timing line.
std::string report_body(const LemmaReport& r);

LemmaReport verify_lemma(const std::string& lemma_id, const Strategy& s, int workers = 1);

// Eight distinct vertices; terminals[2i], terminals[2i + 1] form pair i.
struct PairabilityInstance {
  std::array<Vertex, 8> terminals;
};

// Sample `index` of a random campaign: a function of (seed, index) alone.
PairabilityInstance pairability_sample(std::uint64_t seed, std::uint64_t index);

struct PairabilityOptions {
  bool exhaustive_reduced = false;  // orbit representatives under the grid's 8 symmetries
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t limit = 0;  // exhaustive: stop after this many representatives, 0 = all
  int workers = 1;
};

LemmaReport pairability_check(const PairabilityOptions& opt);

// Independent feasibility oracle for tiny instances: enumerates edge-simple
// trails demand by demand. Used to double-check infeasibility claims.
bool brute_force_feasible(const Instance& inst);

}  // namespace gridlink
