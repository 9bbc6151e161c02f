#include <iostream>

#include <CLI11.hpp>

#include "dirac8/app.hpp"

int main(int argc, char** argv) {
  using namespace dirac8::app;
  CLI::App cli{"dirac8: eight-component Dirac form of Maxwell's equations"};
  cli.require_subcommand(1);

  Invocation inv;
  std::string config;
  std::string out = ".";
  std::size_t threads = 1;
  for (Command c : all_commands()) {
    auto* sub = cli.add_subcommand(to_string(c));
    sub->add_option("--config", config, "JSON configuration")->required();
    sub->add_option("--out", out, "output directory");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->callback([&inv, c] { inv.command = c; });
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  inv.config = config;
  inv.out = out;
  inv.threads = threads;
  return run(inv, std::cerr);
}
