#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rgs::cli {

std::string RunConfig::canonical() const {
  std::string s = "command=" + command + ";format=" + (format == Format::csv ? "csv" : "json") +
                  ";seed=" + std::to_string(seed);
  for (const auto& [k, v] : params) s += ";" + k + "=" + v;
  return s;
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunConfig::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

std::string version() { return RGS_VERSION; }

std::string csv_header(const RunConfig& config) {
  return "# rgs version=" + version() + " command=" + config.command + " config_hash=" + config.hash_hex() +
         " seed=" + std::to_string(config.seed) + "\n";
}

nlohmann::ordered_json json_meta(const RunConfig& config) {
  nlohmann::ordered_json meta;
  meta["version"] = version();
  meta["command"] = config.command;
  meta["config_hash"] = config.hash_hex();
  meta["seed"] = config.seed;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config.params) params[k] = v;
  meta["params"] = params;
  return meta;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const RunConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + config.out);
  file << text;
}

std::string json_document(const RunConfig& config, const nlohmann::ordered_json& body) {
  nlohmann::ordered_json doc;
  doc["meta"] = json_meta(config);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

std::string svg_line_chart(const std::vector<Series>& series, const std::vector<double>& reference_levels,
                           const std::string& x_label, const std::string& y_label) {
  const double width = 640, height = 400, margin = 50;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  for (double r : reference_levels) y0 = std::min(y0, r), y1 = std::max(y1, r);
  if (x0 > x1) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text x=\"15\" y=\"" << height / 2 << "\" transform=\"rotate(-90 15 " << height / 2
      << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
  svg << "<text x=\"" << margin << "\" y=\"" << height - margin + 15 << "\" font-size=\"10\">" << format_double(x0)
      << "</text>\n";
  svg << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 15
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_double(x1) << "</text>\n";
  svg << "<text x=\"" << margin - 5 << "\" y=\"" << py(y0) << "\" font-size=\"10\" text-anchor=\"end\">"
      << format_double(y0) << "</text>\n";
  svg << "<text x=\"" << margin - 5 << "\" y=\"" << py(y1) << "\" font-size=\"10\" text-anchor=\"end\">"
      << format_double(y1) << "</text>\n";
  for (double r : reference_levels)
    svg << "<line x1=\"" << margin << "\" y1=\"" << py(r) << "\" x2=\"" << width - margin << "\" y2=\"" << py(r)
        << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : series[i].points) svg << px(x) << "," << py(y) << " ";
    svg << "\"/>\n";
    svg << "<text x=\"" << width - margin - 5 << "\" y=\"" << margin + 15 * (i + 1)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << color << "\">" << series[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rgs::cli
