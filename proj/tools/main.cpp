#include <iostream>
#include <stdexcept>

#include "commands.hpp"
#include "rgs/graph.hpp"
#include "rgs/subgraphs.hpp"

int main(int argc, char** argv) {
  using namespace rgs::cli;
  CLI::App app{"Random graph-state statistics"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  rgs::Seed seed = rgs::kDefaultSeed;
  unsigned threads = 1;
  std::string format, out;
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", format, "csv or json (default depends on the command)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out, "write output here instead of stdout");

  auto& commands = register_commands(app);
  for (auto& cmd : commands) cmd.app->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    RunConfig config;
    config.command = cmd.app->get_name();
    for (const auto& [name, value] : cmd.params) config.params.emplace_back(name, value());
    std::sort(config.params.begin(), config.params.end());
    config.seed = seed;
    config.threads = threads;
    config.out = out;
    try {
      Result result = cmd.run(config);
      if (format.empty()) {
        config.format = result.default_format;
      } else {
        config.format = format == "csv" ? Format::csv : Format::json;
      }
      emit(config, render(config, result));
      return result.check_failed ? 1 : 0;
    } catch (const CheckFailure& e) {
      std::cerr << "check failed: " << e.what() << "\n";
      return 1;
    } catch (const rgs::SamplingBudgetExhausted& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return 2;
}
