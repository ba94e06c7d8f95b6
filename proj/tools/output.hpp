#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rgs/random.hpp"

namespace rgs::cli {

enum class Format { csv, json };

/// Everything that determines a run's output. `threads` and `out` only affect
/// wall time and destination, so they are not part of the hash.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // sorted by name
  Seed seed = kDefaultSeed;
  unsigned threads = 1;
  Format format = Format::json;
  std::string out;

  std::string canonical() const;
  std::uint64_t hash() const;  // FNV-1a of canonical()
  std::string hash_hex() const;
};

/// Raised for bad user input; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a check fails; maps to exit code 1.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string version();

/// "# rgs version=... config_hash=... seed=..." for CSV and text output.
std::string csv_header(const RunConfig& config);
nlohmann::ordered_json json_meta(const RunConfig& config);

/// %.17g, enough to round-trip a double.
std::string format_double(double x);

std::string csv_escape(const std::string& field);

/// Writes `text` to config.out, or stdout when it is empty.
void emit(const RunConfig& config, const std::string& text);

/// A JSON document: {"meta": ..., <body fields>}.
std::string json_document(const RunConfig& config, const nlohmann::ordered_json& body);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Bare SVG line chart of the given series with a dashed reference line.
std::string svg_line_chart(const std::vector<Series>& series, const std::vector<double>& reference_levels,
                           const std::string& x_label, const std::string& y_label);

}  // namespace rgs::cli
