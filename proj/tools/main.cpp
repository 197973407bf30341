#include <CLI11.hpp>

#include "runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"segray: line-segment energy of symmetric tensor fields, "
               "derivative-identity checks and log-concavity verification"};
  app.require_subcommand(1);

  struct Args {
    std::string config;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
  };

  std::vector<std::pair<CLI::App*, std::shared_ptr<Args>>> subs;
  for (const char* name : segray::cli::kExperiments) {
    auto args = std::make_shared<Args>();
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--config", args->config, "experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out-dir", args->out_dir, "report output directory");
    sub->add_option("--seed", args->seed, "override the sampling seed")
        ->each([args](const std::string&) { args->seed_set = true; });
    subs.emplace_back(sub, args);
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, args] : subs) {
    if (sub->parsed()) {
      segray::cli::RunRequest req;
      req.experiment = sub->get_name();
      req.config_path = args->config;
      req.out_dir = args->out_dir;
      if (args->seed_set) req.seed_override = args->seed;
      return segray::cli::run(req);
    }
  }
  return 2;
}
