#include "lingres/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lingres/error.hpp"
#include "lingres/frontend.hpp"
#include "lingres/oracle.hpp"
#include "lingres/proof_export.hpp"

namespace lingres::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadOption, "cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct OracleOutcome {
  nlohmann::json report;
  bool agrees = true;
};

OracleOutcome run_oracle(const Problem& problem, const std::vector<ReliableClause>& seeds,
                         const std::optional<Term>& refutation, MergeMode merge,
                         std::size_t max_interpretations, std::size_t max_steps) {
  const auto& sig = problem.signature;
  oracle::Caps caps;
  caps.max_interpretations = max_interpretations;
  caps.max_steps = max_steps;

  std::vector<Clause> clauses;
  for (const auto& rc : seeds) clauses.push_back(rc.clause);
  const auto brute = oracle::brute_unsat(sig, clauses, caps);
  const auto agreement = oracle::max_reliability_agrees(sig, seeds, caps, merge);
  const auto closure = oracle::naive_saturate_all(sig, seeds, caps, merge);

  std::optional<Term> best_empty;
  if (auto it = closure.find(Clause{}); it != closure.end()) best_empty = it->second;

  const bool verdict_agrees = (brute.verdict == oracle::Verdict::Unsat) == refutation.has_value();
  const bool reliability_agrees = best_empty == refutation;

  OracleOutcome out;
  out.agrees = verdict_agrees && reliability_agrees && agreement.agrees;
  out.report = nlohmann::json{
      {"brute_force", oracle::to_json(sig, brute)},
      {"verdict_agrees", verdict_agrees},
      {"refutation_reliability_agrees", reliability_agrees},
      {"max_reliability", oracle::to_json(sig, agreement)},
      {"agrees", out.agrees},
  };
  return out;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Problem problem;
  std::vector<ReliableClause> seeds;
  Strategy strategy = Strategy::Alpha;
  SaturationOptions options;
  try {
    problem = parse_problem(read_file(config.input));
    seeds = problem.seed_clauses();
    const auto& d = problem.directives;
    if (config.strategy) {
      strategy = *config.strategy;
    } else if (d.contains("strategy")) {
      strategy = strategy_from_string(d.at("strategy"));
    }
    if (config.merge) {
      options.merge = *config.merge;
    } else if (d.contains("merge_duplicates")) {
      options.merge = merge_mode_from_string(d.at("merge_duplicates"));
    }
    if (config.max_steps) {
      options.limits.max_steps = *config.max_steps;
    } else if (d.contains("max_steps")) {
      options.limits.max_steps = std::stoull(d.at("max_steps"));
    }
    if (options.limits.max_steps == 0 || config.max_interpretations == 0) {
      throw Error(ErrorCode::BadOption, "caps must be positive");
    }
  } catch (const Error& e) {
    err << config.input << ": " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  }

  const auto& sig = problem.signature;
  ClauseStore store = ClauseStore::seeded(sig, strategy, seeds);
  const auto result = saturate(store, options);
  if (result.status == SaturationResult::Status::StepLimit) {
    err << "resource limit: saturation stopped after " << result.steps << " steps\n";
    return kResourceLimit;
  }
  const auto proof = refute(store);
  std::optional<Term> reliability;
  if (proof) reliability = proof->root().rc.reliability;

  const std::string verdict = proof ? "UNSAT reliability=" + format_term(sig, *reliability)
                                    : std::string("SATURATED (no refutation)");

  std::optional<OracleOutcome> oracle_outcome;
  if (config.check_oracle) {
    try {
      oracle_outcome = run_oracle(problem, seeds, reliability, options.merge,
                                  config.max_interpretations, options.limits.max_steps);
    } catch (const Error& e) {
      err << "resource limit: oracle: " << e.what() << '\n';
      return kResourceLimit;
    }
  }

  switch (config.format) {
    case Format::Text:
      out << verdict << '\n';
      if (proof) out << proof_to_text(sig, *proof);
      if (oracle_outcome) {
        out << "ORACLE " << (oracle_outcome->agrees ? "AGREES" : "DISAGREES") << '\n';
        out << oracle_outcome->report.dump(2) << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::json j{
          {"verdict", verdict},
          {"refuted", proof.has_value()},
          {"reliability", reliability ? nlohmann::json(format_term(sig, *reliability))
                                      : nlohmann::json(nullptr)},
          {"steps", result.steps},
          {"proof", proof ? proof_to_json(sig, *proof) : nlohmann::json(nullptr)},
      };
      if (oracle_outcome) j["oracle"] = oracle_outcome->report;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Dot:
      out << "// " << verdict << '\n';
      if (proof) out << proof_to_dot(sig, *proof);
      if (oracle_outcome) {
        out << "// ORACLE " << (oracle_outcome->agrees ? "AGREES" : "DISAGREES") << '\n';
      }
      break;
  }

  if (oracle_outcome && !oracle_outcome->agrees) return kOracleDisagreement;
  return proof ? kRefuted : kSaturated;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolution prover for linguistic-valued propositional logic"};
  RunConfig config;
  std::string strategy;
  std::string merge;
  std::size_t max_steps = 0;
  std::string format = "text";

  app.add_option("--input,input", config.input, "problem file")->required();
  app.add_option("--strategy", strategy, "alpha or naive")
      ->check(CLI::IsMember({"alpha", "naive"}));
  app.add_option("--merge-duplicates", merge, "off or max_label")
      ->check(CLI::IsMember({"off", "max_label"}));
  app.add_option("--max-steps", max_steps, "saturation step cap")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--check-oracle", config.check_oracle,
               "cross-check the verdict and reliabilities by brute force");
  app.add_option("--max-interpretations", config.max_interpretations,
                 "oracle interpretation cap")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  if (!strategy.empty()) config.strategy = strategy_from_string(strategy);
  if (!merge.empty()) config.merge = merge_mode_from_string(merge);
  if (max_steps > 0) config.max_steps = max_steps;
  config.format = format == "json" ? Format::Json : format == "dot" ? Format::Dot : Format::Text;
  return run(config, out, err);
}

}  // namespace lingres::cli
