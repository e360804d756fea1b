// gridlink: solve and check routing instances, run lemma campaigns and the
// 6x6 pairability check.
//
// Exit codes: 0 success, 1 infeasible / invalid certificate / defects found,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gridlink/files.hpp"
#include "gridlink/verifier.hpp"

using namespace gridlink;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) {
  try {
    return parse_instance(slurp(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int emit_report(const LemmaReport& r, const std::string& out_path) {
  const std::string text = format_report(r);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return r.ok() ? kOk : kFail;
}

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint routing on small grids"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string cert_path;
  auto* solve_cmd = app.add_subcommand("solve", "Route an instance file and print a certificate");
  solve_cmd->add_option("instance", instance_path, "Instance file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  verify_cmd->add_option("instance", instance_path, "Instance file")->required();
  verify_cmd->add_option("certificate", cert_path, "Certificate file")->required();

  std::string lemma_id;
  std::string strategy = "exhaustive";
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  int workers = default_workers();
  std::string report_path;
  auto* lemma_cmd = app.add_subcommand("lemma", "Check a lemma over its instance space");
  lemma_cmd->add_option("id", lemma_id, "Lemma id")
      ->required()
      ->check(CLI::IsMember(lemma_ids()));
  lemma_cmd->add_option("--strategy", strategy, "Instance selection")
      ->check(CLI::IsMember({"exhaustive", "reduced", "random"}));
  lemma_cmd->add_option("--samples", samples, "Draws for --strategy random");
  auto* lemma_seed = lemma_cmd->add_option("--seed", seed, "Seed for --strategy random");
  lemma_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 256));
  lemma_cmd->add_option("--report", report_path, "Also write the report here");

  PairabilityOptions popt;
  popt.workers = workers;
  auto* pair_cmd = app.add_subcommand("pairability", "Route 4 pairs on the 6x6 grid");
  auto* samples_opt = pair_cmd->add_option("--samples", popt.samples, "Random instances")
                          ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  auto* seed_opt = pair_cmd->add_option("--seed", popt.seed, "Campaign seed");
  auto* exh_opt = pair_cmd->add_flag("--exhaustive-reduced", popt.exhaustive_reduced,
                                     "All pairings up to grid symmetry (about 3e9 / 8)");
  auto* limit_opt =
      pair_cmd->add_option("--limit", popt.limit, "Stop after this many orbit representatives");
  pair_cmd->add_option("--workers", popt.workers, "Worker threads")->check(CLI::Range(1, 256));
  pair_cmd->add_option("--report", report_path, "Also write the report here");
  exh_opt->excludes(samples_opt)->excludes(seed_opt);
  limit_opt->needs(exh_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) {
      const Instance inst = load_instance(instance_path);
      const auto paths = solve(inst);
      std::cout << write_certificate(paths);
      return paths ? kOk : kFail;
    }
    if (*verify_cmd) {
      const Instance inst = load_instance(instance_path);
      std::optional<PathSystem> cert;
      try {
        cert = parse_certificate(slurp(cert_path));
      } catch (const ParseError& e) {
        throw UsageError(cert_path + ": " + e.what());
      }
      if (!cert) {
        // An infeasibility claim is checked by searching again.
        if (solve(inst)) {
          std::cout << "invalid: instance is feasible\n";
          return kFail;
        }
        std::cout << "ok\n";
        return kOk;
      }
      const VerifyReport r = verify(inst, *cert);
      std::cout << (r ? "ok" : "invalid: " + r.message) << "\n";
      return r ? kOk : kFail;
    }
    if (*lemma_cmd) {
      Strategy s;
      if (strategy == "reduced") s.kind = StrategyKind::Reduced;
      if (strategy == "random") {
        if (samples == 0) throw UsageError("--strategy random needs --samples >= 1");
        if (lemma_seed->count() == 0) throw UsageError("--strategy random needs an explicit --seed");
        s = {StrategyKind::Random, samples, seed};
      }
      return emit_report(verify_lemma(lemma_id, s, workers), report_path);
    }
    return emit_report(pairability_check(popt), report_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
