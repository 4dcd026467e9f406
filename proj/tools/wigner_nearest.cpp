// wigner-nearest <command> --config <path|-> [--threads N] [--output DIR]

#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Closest Wigner function to a real phase-space symbol"};
  app.set_version_flag("--version", std::string(WNEAR_VERSION));

  wnear::cli::Invocation inv;
  std::string command;
  std::size_t threads = 0;
  std::string kernel;

  app.add_option("command", command, "closest | radial | dispersive | schatten | gram-check")
      ->required()
      ->check(CLI::IsMember(wnear::cli::kCommands));
  app.add_option("--config", inv.config_path, "JSON run configuration, '-' for stdin")->required();
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (default: all cores)");
  app.add_option("--output", inv.output_dir, "output directory")->capture_default_str();
  auto* kernel_opt = app.add_option("--kernel", kernel, "force a kernel backend: scalar | avx2 | neon");
  app.add_flag("--timings", inv.timings, "record wall-clock timings in report.json");

  CLI11_PARSE(app, argc, argv);

  inv.command = command;
  if (threads_opt->count() > 0) inv.threads = threads;
  if (kernel_opt->count() > 0) inv.kernel = kernel;
  return wnear::cli::run(inv, std::cin, std::cerr);
}
