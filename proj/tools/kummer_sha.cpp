// kummer-sha: Tate-Shafarevich groups of multinorm one tori of Kummer type.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "kummer/errors.hpp"
#include "kummer/generator.hpp"
#include "kummer/instance_io.hpp"
#include "kummer/oracle.hpp"
#include "kummer/report.hpp"

namespace {

using namespace kummer;

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kDisagreement = 3, kOutOfRange = 4 };

struct RunConfig {
  std::string input;
  std::string mode = "all";
  std::string format = "table";
  bool oracle = false;
  u64 max_oracle_order = OracleBounds{}.max_group_order;
  std::size_t max_oracle_rank = OracleBounds{}.max_rank;
  std::size_t batch = 0;
  u64 seed = 1;
  std::vector<u64> primes_p{2};
  std::vector<unsigned> exponents_n{1};
  std::vector<int> factor_counts{1, 2, 3};
  std::optional<u64> l1;
  std::optional<u64> l2;
  unsigned jobs = 0;
  bool hermite_rule = false;

  bool wants_oracle() const { return oracle || mode == "oracle-check"; }
  OracleBounds bounds() const { return OracleBounds{max_oracle_order, max_oracle_rank}; }
  EngineOptions engine() const {
    return EngineOptions{hermite_rule ? LocalCyclicityRule::kHermiteCoordinates : LocalCyclicityRule::kQuotientImage};
  }
  ReportSections sections() const {
    if (mode == "invariants") return {true, false, false};
    if (mode == "sha") return {false, false, true};
    if (mode == "sha-omega") return {false, true, false};
    return {};
  }
};

struct Outcome {
  std::string text;
  int code = kOk;
  bool checked = false;  // oracle ran
};

Outcome run_one(const TowerSpec& spec, const RunConfig& cfg, std::optional<u64> seed, int indent) {
  Outcome out;
  const Computation comp = compute(spec, cfg.engine(), true);
  ReportContext ctx{seed, std::nullopt};
  if (cfg.wants_oracle()) {
    try {
      ctx.oracle = sha_oracle(spec, cfg.bounds());
      out.checked = true;
      if (!(ctx.oracle->sha_omega == comp.groups.sha_omega) || !(ctx.oracle->sha == comp.groups.sha))
        out.code = kDisagreement;
    } catch (const OracleOutOfRange& e) {
      out.code = kOutOfRange;
      if (cfg.format == "json") {
        nlohmann::ordered_json err{{"error", "oracle-out-of-range"}, {"message", e.what()},
                                   {"instance", nlohmann::json::parse(emit_instance(spec))}};
        out.text = err.dump(indent) + "\n";
      } else {
        out.text = "error: oracle-out-of-range: " + std::string(e.what()) + "\n  instance " + emit_instance(spec) + "\n";
      }
      return out;
    }
  }
  const ReportSections sections = out.code == kDisagreement ? ReportSections{} : cfg.sections();
  out.text = cfg.format == "json" ? render_json(spec, comp, sections, ctx, indent) + "\n"
                                  : render_table(spec, comp, sections, ctx);
  return out;
}

int run_single(const RunConfig& cfg) {
  std::string text;
  if (cfg.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(cfg.input);
    if (!in) {
      std::cerr << "error: cannot open " << cfg.input << "\n";
      return kUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const TowerSpec spec = parse_instance(text);
  const Outcome out = run_one(spec, cfg, std::nullopt, 2);
  (out.code == kOutOfRange ? std::cerr : std::cout) << out.text;
  if (out.code == kDisagreement) std::cerr << "error: engine and oracle disagree\n";
  return out.code;
}

int run_batch(const RunConfig& cfg) {
  GeneratorConfig gen_cfg;
  gen_cfg.primes_p = cfg.primes_p;
  gen_cfg.exponents_n = cfg.exponents_n;
  gen_cfg.factor_counts = cfg.factor_counts;
  gen_cfg.l1 = cfg.l1;
  gen_cfg.l2 = cfg.l2;
  InstanceGenerator gen(gen_cfg, cfg.seed);
  std::vector<TowerSpec> specs;
  specs.reserve(cfg.batch);
  for (std::size_t i = 0; i < cfg.batch; ++i) specs.push_back(gen.next());

  std::vector<Outcome> outcomes(specs.size());
  std::atomic<std::size_t> cursor{0};
  const unsigned workers =
      std::max(1U, std::min<unsigned>(cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = cursor++; i < specs.size(); i = cursor++) outcomes[i] = run_one(specs[i], cfg, cfg.seed, -1);
    });
  }
  for (auto& t : pool) t.join();

  std::size_t agree = 0;
  std::size_t checked = 0;
  int code = kOk;
  for (const auto& o : outcomes) {
    std::cout << o.text;
    if (o.checked) ++checked;
    if (o.checked && o.code == kOk) ++agree;
    if (o.code == kDisagreement) code = kDisagreement;
    if (o.code == kOutOfRange && code == kOk) code = kOutOfRange;
  }
  const auto& rej = gen.rejections();
  std::cerr << "batch: " << specs.size() << " instances, seed " << cfg.seed << ", rejected draws " << rej.total()
            << " (zero pair " << rej.zero_pair << ", intersection " << rej.intersection << ", eps0 minimality "
            << rej.eps0_minimal << ")\n";
  if (cfg.wants_oracle()) std::cerr << agree << "/" << specs.size() << " agree\n";
  (void)checked;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Tate-Shafarevich groups of multinorm one tori of Kummer type"};
  app.add_option("--input", cfg.input, "Instance document (JSON), '-' for stdin");
  app.add_option("--mode", cfg.mode, "What to compute")
      ->check(CLI::IsMember({"invariants", "sha", "sha-omega", "all", "oracle-check"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--oracle", cfg.oracle, "Cross-check against the cohomology oracle");
  app.add_option("--max-oracle-order", cfg.max_oracle_order, "Largest |G| the oracle accepts");
  app.add_option("--max-oracle-rank", cfg.max_oracle_rank, "Largest lattice rank the oracle accepts");
  auto* batch = app.add_option("--batch", cfg.batch, "Number of random instances");
  app.add_option("--seed", cfg.seed, "Random seed for --batch");
  app.add_option("--p", cfg.primes_p, "Primes p to draw from")->expected(1, -1);
  app.add_option("--n", cfg.exponents_n, "Exponents n to draw from")->expected(1, -1);
  app.add_option("--m", cfg.factor_counts, "Values of m to draw from")->expected(1, -1);
  app.add_option("--l1", cfg.l1, "Fixed l1 (random prime otherwise)");
  app.add_option("--l2", cfg.l2, "Fixed l2 (random prime otherwise)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for --batch (0 = all cores)");
  app.add_flag("--hermite-rule", cfg.hermite_rule, "Decide local cyclicity from Hermite coordinates");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (cfg.input.empty() == (batch->count() == 0)) {
    std::cerr << "error: give exactly one of --input or --batch\n";
    return kUsage;
  }
  try {
    return cfg.input.empty() ? run_batch(cfg) : run_single(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line() > 0) std::cerr << " at line " << e.line() << ", column " << e.column();
    std::cerr << ": " << e.what() << "\n";
    return kValidation;
  } catch (const InvalidInstance& e) {
    std::cerr << "invalid instance [" << e.hypothesis() << "]: " << e.what() << "\n";
    return kValidation;
  } catch (const OracleOutOfRange& e) {
    std::cerr << "error: oracle-out-of-range: " << e.what() << "\n";
    return kOutOfRange;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
