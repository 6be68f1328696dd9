#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cli_common.hpp"
#include "sdsearch/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Self-dual code searches under prescribed automorphism groups"};
  app.require_subcommand(1);
  std::uint64_t budget = 0;
  app.add_option("--budget", budget, "Cap on items per enumeration (overrides SDSEARCH_BUDGET)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "core, golay, counts, lemma-repr or d8-socle")->required();

  cli::S3Options s3;
  auto* s3_cmd = app.add_subcommand("s3", "Check additive codes for an S3 action");
  s3_cmd->add_option("--dataset", s3.dataset, "Additive record file")->required();
  s3_cmd->add_option("--shard", s3.shard, "Shard i/N");
  s3_cmd->add_option("--min-dx", s3.min_dx, "Required minimum distance of X");
  s3_cmd->add_option("--cap", s3.cap, "Distance of phi(X) counted as a contradiction");
  s3_cmd->add_flag("--text", s3.text, "Plain report instead of JSON lines");

  cli::OrbitsOptions orbits;
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit representatives of the defining set");
  orbits_cmd->add_option("--codes", orbits.codes, "Code file or directory")->required();
  orbits_cmd->add_option("--group", orbits.group, "a4 or d8")->required();
  orbits_cmd->add_option("--scale", orbits.scale, "Number of blocks for a desk-scale configuration");
  orbits_cmd->add_option("--distance", orbits.distance, "Distance filter for the candidate codes E");
  orbits_cmd->add_option("--out", orbits.out, "Directory for representative files");

  cli::ExtendOptions extend;
  auto* extend_cmd = app.add_subcommand("extend", "Overcode searches above the candidate codes");
  extend_cmd->add_option("--reps", extend.reps, "Representative file or directory")->required();
  extend_cmd->add_option("--group", extend.group, "a4 or d8")->required();
  extend_cmd->add_option("--shard", extend.shard, "Shard i/N");
  extend_cmd->add_option("--scale", extend.scale, "Number of blocks for a desk-scale configuration");
  extend_cmd->add_option("--distance", extend.distance, "Target minimum distance");

  cli::IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate a dataset");
  ingest_cmd->add_option("path", ingest.path, "File or directory")->required();
  ingest_cmd->add_flag("--additive", ingest.additive, "Additive record format");
  ingest_cmd->add_option("--length", ingest.length, "Required length");
  ingest_cmd->add_option("--distance", ingest.distance, "Required minimum distance");

  std::size_t length = 0;
  bool additive = false, conjugation = false;
  auto* classify = app.add_subcommand("classify", "Classify self-dual codes of a length");
  classify->add_option("--length", length, "Code length")->required();
  classify->add_flag("--additive", additive, "Trace-Hermitian additive codes over GF(4)");
  classify->add_flag("--conjugation", conjugation, "Allow coordinate conjugation in the equivalence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kDone : cli::kInput;
  }

  try {
    if (budget > 0) sdsearch::budget::set_limit(budget);
    if (*verify) return cli::cmd_verify(suite);
    if (*s3_cmd) return cli::cmd_s3(s3);
    if (*orbits_cmd) return cli::cmd_orbits(orbits);
    if (*extend_cmd) return cli::cmd_extend(extend);
    if (*ingest_cmd) return cli::cmd_ingest(ingest);
    if (*classify) return cli::cmd_classify(length, additive, conjugation);
  } catch (const sdsearch::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::kInput;
  } catch (const sdsearch::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return cli::kBudget;
  } catch (const sdsearch::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return cli::kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInvariant;
  }
  return cli::kDone;
}
