#include <iostream>

#include <CLI11.hpp>

#include "fockbound/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fockbound: numerical checks for quadratic bosonic operators"};
  app.require_subcommand(1);

  fockbound::CommandOptions options;
  std::string out_dir;
  std::uint64_t seed = 0;

  const auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", options.config, "Experiment config (YAML)")->required();
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--seed", seed, "Master seed override");
    sub->add_flag("--quiet", options.quiet, "Suppress per-check output");
    return sub;
  };
  CLI::App* verify = add("verify", "Run the full verification suite");
  CLI::App* converge = add("converge", "Partial-sum convergence tables");
  CLI::App* diverge = add("diverge", "Divergence witness tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fockbound::kExitConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--out") > 0) options.out_dir = out_dir;
  if (sub->count("--seed") > 0) options.seed = seed;

  if (sub == verify) return fockbound::cmd_verify(options, std::cout, std::cerr);
  if (sub == converge) return fockbound::cmd_converge(options, std::cout, std::cerr);
  if (sub == diverge) return fockbound::cmd_diverge(options, std::cout, std::cerr);
  return fockbound::kExitConfigError;
}
