// Command-line front end for the double-plane classification engine.

#include <CLI11.hpp>

#include "dblplane/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"classification of minimal double planes with pg=0, K^2=8"};
  app.require_subcommand(1);

  dblplane::RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--bounds-n", config.bounds_n, "dihedral/cyclic order bound");
    cmd->add_option("--r-cap", config.r_cap, "branch point cap");
    cmd->add_option("--order-cap", config.order_cap, "group order guard");
    cmd->add_option("--seed", config.seed, "generic-coordinate seed");
    cmd->add_option("--format", config.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", config.out, "output file (default stdout)");
    cmd->add_option("--threads", config.threads, "worker threads");
  };

  auto* classify = app.add_subcommand("classify", "run the full search");
  add_common(classify);
  classify->add_option("--write-candidates", config.write_candidates,
                       "emit a candidate file per record into this directory");

  auto* verify = app.add_subcommand("verify", "check one candidate file");
  add_common(verify);
  verify->add_option("file", config.input, "candidate file")->required();

  auto* plane = app.add_subcommand("plane-model", "branch-curve invariants");
  add_common(plane);
  plane->add_option("spec", config.input, "I, II, or a branch spec file")->required();

  auto* moduli = app.add_subcommand("moduli", "dimension table");
  add_common(moduli);

  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (classify->parsed()) config.command = dblplane::Command::Classify;
  if (verify->parsed()) config.command = dblplane::Command::Verify;
  if (plane->parsed()) config.command = dblplane::Command::PlaneModel;
  if (moduli->parsed()) config.command = dblplane::Command::Moduli;
  if (selftest->parsed()) config.command = dblplane::Command::Selftest;

  return dblplane::run(config);
}
