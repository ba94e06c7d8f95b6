#pragma once

#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "output.hpp"

namespace rgs::cli {

/// What a command produces: scalar fields plus an optional table.
struct Result {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  std::string table_key = "rows";
  Format default_format = Format::json;
  bool check_failed = false;
};

std::string render(const RunConfig& config, const Result& result);

/// Option values after parsing, in registration order.
using ParamList = std::vector<std::pair<std::string, std::function<std::string()>>>;

struct Command {
  CLI::App* app = nullptr;
  ParamList params;
  std::function<Result(const RunConfig&)> run;
};

/// Adds every subcommand to `app`. The returned objects hold references into
/// option storage owned by the registry, so they must outlive parsing.
std::vector<Command>& register_commands(CLI::App& app);

std::uint64_t parse_samples(const std::string& text);

Result run_crosscheck(const std::string& suite, std::uint64_t samples, const RunConfig& config);

}  // namespace rgs::cli
