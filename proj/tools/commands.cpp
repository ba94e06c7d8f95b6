#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "rgs/entanglement.hpp"
#include "rgs/graph_json.hpp"
#include "rgs/krawtchouk.hpp"
#include "rgs/moments.hpp"
#include "rgs/subgraphs.hpp"

namespace rgs::cli {

using nlohmann::ordered_json;

namespace {

std::string param_string(const std::string& v) { return v; }
std::string param_string(double v) { return format_double(v); }
std::string param_string(bool v) { return v ? "true" : "false"; }
template <typename T>
  requires std::is_integral_v<T>
std::string param_string(T v) {
  return std::to_string(v);
}

template <typename T>
CLI::Option* add(Command& cmd, const std::string& name, T& var, const std::string& desc) {
  cmd.params.emplace_back(name, [&var] { return param_string(var); });
  return cmd.app->add_option("--" + name, var, desc)->capture_default_str();
}

std::string cell_to_csv(const ordered_json& v) {
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_null()) return "";
  return csv_escape(v.dump());
}

ordered_json rational_json(const Rational& q) {
  return {{"num", to_string(q.get_num())}, {"den", to_string(q.get_den())}, {"value", to_double(q)}};
}

ordered_json estimate_json(const MomentEstimate& e) {
  return {{"mean", e.mean}, {"stderr", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}

void merge(ordered_json& into, const ordered_json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct NRange {
  std::int64_t lo = 0, hi = 0;
};

NRange parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoll(text);
      return {n, n};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("bad n range '" + text + "', expected A..B");
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

MomentModel parse_moment_model(const std::string& name) {
  if (name == "pairing") return MomentModel::pairing;
  if (name == "matching") return MomentModel::matching;
  throw UsageError("model must be pairing or matching, got '" + name + "'");
}

const char* moment_model_name(MomentModel m) { return m == MomentModel::pairing ? "pairing" : "matching"; }

/// Empty string when (n, d) is inside the exact evaluator's domain.
std::string exact_domain_error(MomentModel model, std::int64_t n, std::int64_t d) {
  if (n < 1 || n > static_cast<std::int64_t>(kMaxExactVertices)) return "n outside 1..64";
  if (d < 1 || d > static_cast<std::int64_t>(kMaxExactDegree)) return "d outside 1..8";
  if (model == MomentModel::pairing && (n * d) % 2 != 0) return "n*d odd";
  if (model == MomentModel::matching && n % 2 != 0) return "n odd";
  return "";
}

Rational exact_avg(MomentModel model, std::int64_t n, std::int64_t d, unsigned threads) {
  return model == MomentModel::pairing ? exact_avg_m2_pairing(n, d, threads) : exact_avg_m2_matching(n, d, threads);
}

EnsembleSpec ensemble(const std::string& model, std::size_t n, std::size_t d, double p, Seed seed) {
  EnsembleSpec spec;
  try {
    spec.model = parse_ensemble_model(model);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.n = n;
  spec.degree = d;
  spec.edge_probability = p;
  spec.seed = seed;
  spec.validate();
  return spec;
}

void cmd_sample(Command& cmd) {
  struct Opts {
    std::string model = "pairing";
    std::size_t n = 10, d = 3;
    double p = 0.5;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "model", o->model, "pairing, matching, uniform-regular or erdos-renyi");
  add(cmd, "n", o->n, "vertices");
  add(cmd, "d", o->d, "degree");
  add(cmd, "p", o->p, "edge probability (erdos-renyi)");
  cmd.run = [o](const RunConfig& c) {
    const auto spec = ensemble(o->model, o->n, o->d, o->p, c.seed);
    Rng rng = make_rng(c.seed);
    Result r;
    r.fields["model"] = to_string(spec.model);
    if (spec.model == EnsembleModel::pairing || spec.model == EnsembleModel::matching) {
      const Multigraph mg = spec.model == EnsembleModel::pairing ? sample_pairing(o->n, o->d, rng)
                                                                 : sample_matching_model(o->n, o->d, rng);
      r.fields["simple"] = is_simple(mg);
      r.fields["multigraph"] = ordered_json::parse(multigraph_to_json(mg));
      r.fields["graph"] = ordered_json::parse(graph_to_json(simplify(mg)));
    } else {
      r.fields["graph"] = ordered_json::parse(graph_to_json(sample_graph(spec, rng)));
    }
    return r;
  };
}

void cmd_m2_exact(Command& cmd) {
  struct Opts {
    std::string model = "pairing";
    std::int64_t d = 3;
    std::string n_range = "4..16";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "model", o->model, "pairing or matching");
  add(cmd, "d", o->d, "degree");
  add(cmd, "n-range", o->n_range, "A..B (inclusive)");
  cmd.run = [o](const RunConfig& c) {
    const auto model = parse_moment_model(o->model);
    const auto range = parse_n_range(o->n_range);
    if (range.lo < 1 || range.hi > static_cast<std::int64_t>(kMaxExactVertices) || range.lo > range.hi)
      throw UsageError("n range must lie within 1..64");
    if (o->d < 1 || o->d > static_cast<std::int64_t>(kMaxExactDegree)) throw UsageError("d must lie within 1..8");
    Result r;
    r.default_format = Format::csv;
    r.columns = {"model", "n", "d", "num", "den", "float_value"};
    for (auto n = range.lo; n <= range.hi; ++n) {
      if (!exact_domain_error(model, n, o->d).empty()) continue;
      const Rational q = exact_avg(model, n, o->d, c.threads);
      r.rows.push_back({moment_model_name(model), n, o->d, to_string(q.get_num()), to_string(q.get_den()),
                        to_double(q)});
    }
    return r;
  };
}

void cmd_m2_mc(Command& cmd) {
  struct Opts {
    std::string model = "pairing", mode = "statmech";
    std::size_t n = 10, d = 3;
    double p = 0.5;
    std::string samples = "1000";
    std::uint64_t angle_samples = 1;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "model", o->model, "pairing, matching, uniform-regular or erdos-renyi");
  add(cmd, "n", o->n, "vertices");
  add(cmd, "d", o->d, "degree");
  add(cmd, "p", o->p, "edge probability (erdos-renyi)");
  add(cmd, "samples", o->samples, "graph samples");
  add(cmd, "mode", o->mode, "statmech or statevector");
  add(cmd, "angle-samples", o->angle_samples, "angle draws per graph in statevector mode");
  cmd.run = [o](const RunConfig& c) {
    const auto spec = ensemble(o->model, o->n, o->d, o->p, c.seed);
    M2Mode mode;
    if (o->mode == "statmech") {
      mode = M2Mode::statmech;
    } else if (o->mode == "statevector") {
      mode = M2Mode::statevector;
    } else {
      throw UsageError("mode must be statmech or statevector");
    }
    const auto samples = parse_samples(o->samples);
    Result r;
    r.fields = estimate_json(mc_avg_m2(spec, samples, mode, o->angle_samples, c.threads));
    return r;
  };
}

void cmd_m2_brute(Command& cmd) {
  struct Opts {
    std::string graph, model = "pairing";
    std::size_t n = 6, d = 3;
    double p = 0.5;
    std::uint64_t angle_samples = 0;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "graph", o->graph, "graph JSON file (otherwise one graph is sampled)");
  add(cmd, "model", o->model, "ensemble for the sampled graph");
  add(cmd, "n", o->n, "vertices of the sampled graph");
  add(cmd, "d", o->d, "degree of the sampled graph");
  add(cmd, "p", o->p, "edge probability (erdos-renyi)");
  add(cmd, "angle-samples", o->angle_samples, "also estimate by state-vector angle Monte Carlo");
  cmd.run = [o](const RunConfig& c) {
    Graph g;
    if (!o->graph.empty()) {
      g = graph_from_json(read_file(o->graph));
    } else {
      Rng rng = make_rng(c.seed);
      g = sample_graph(ensemble(o->model, o->n, o->d, o->p, c.seed), rng);
    }
    if (g.num_vertices() > kMaxStatmechVertices) throw UsageError("m2-brute needs n <= 16");
    Result r;
    r.fields["graph"] = ordered_json::parse(graph_to_json(g));
    r.fields["m2"] = rational_json(m2_statmech(g));
    if (o->angle_samples > 0) {
      if (g.num_vertices() > kMaxStateVectorQubits) throw UsageError("angle Monte Carlo needs n <= 14");
      r.fields["angle_mc"] = estimate_json(mc_angle_m2(g, o->angle_samples, derive_seed(c.seed, 1), c.threads));
    }
    return r;
  };
}

void cmd_krawtchouk(Command& cmd) {
  struct Opts {
    std::int64_t i = 0, N = 0, x = 0;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "i", o->i, "degree")->required();
  add(cmd, "N", o->N, "length")->required();
  add(cmd, "x", o->x, "evaluation point")->required();
  cmd.run = [o](const RunConfig&) {
    if (o->N < 0 || o->i < 0 || o->i > o->N || o->x < 0 || o->x > o->N)
      throw UsageError("need 0 <= i <= N and 0 <= x <= N");
    Result r;
    r.default_format = Format::csv;
    r.columns = {"i", "N", "x", "value"};
    r.rows.push_back({o->i, o->N, o->x, to_string(krawtchouk(o->i, o->N, o->x))});
    return r;
  };
}

void cmd_rank_dist(Command& cmd) {
  struct Opts {
    std::size_t n = 8;
    std::string mc = "0";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "n", o->n, "matrix size")->required();
  add(cmd, "mc", o->mc, "also sample this many matrices");
  cmd.run = [o](const RunConfig& c) {
    if (o->n > kMaxRankDistribution) throw UsageError("rank-dist needs n <= 200");
    const auto dist = rank_distribution_exact(o->n);
    const auto probs = rank_probabilities(dist);
    const auto samples = parse_samples(o->mc);
    Result r;
    r.default_format = Format::csv;
    r.columns = {"h", "rank", "deficiency", "num", "den", "probability"};
    std::vector<std::uint64_t> hist;
    if (samples > 0) {
      if (o->n > 64) throw UsageError("sampling needs n <= 64");
      hist = sample_rank_histogram(o->n, samples, c.seed, c.threads);
      r.columns.push_back("empirical");
      std::vector<double> observed(hist.begin(), hist.end()), expected;
      for (double p : probs) expected.push_back(p * static_cast<double>(samples));
      const auto chi = chi_square_test(observed, expected);
      r.fields["samples"] = samples;
      r.fields["chi2"] = chi.statistic;
      r.fields["dof"] = chi.dof;
      r.fields["p_value"] = chi.p_value;
    }
    for (std::size_t h = 0; h < dist.probs.size(); ++h) {
      std::vector<ordered_json> row{h, 2 * h, o->n - 2 * h, to_string(dist.probs[h].get_num()),
                                    to_string(dist.probs[h].get_den()), probs[h]};
      if (samples > 0) row.emplace_back(static_cast<double>(hist[h]) / static_cast<double>(samples));
      r.rows.push_back(std::move(row));
    }
    return r;
  };
}

void cmd_deficiency(Command& cmd) {
  struct Opts {
    std::size_t n = 10, d = 3;
    double p = 0.5;
    std::string model = "erdos-renyi", mode = "exhaustive", samples = "100";
    std::uint64_t budget = 0;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "n", o->n, "vertices")->required();
  add(cmd, "model", o->model, "pairing, matching, uniform-regular or erdos-renyi");
  add(cmd, "d", o->d, "degree for the regular models");
  add(cmd, "p", o->p, "edge probability (erdos-renyi)");
  add(cmd, "samples", o->samples, "graphs");
  add(cmd, "mode", o->mode, "exhaustive or heuristic");
  add(cmd, "budget", o->budget, "heuristic restarts (0 = 4n)");
  cmd.run = [o](const RunConfig& c) {
    const auto spec = ensemble(o->model, o->n, o->d, o->p, c.seed);
    SearchMode mode;
    try {
      mode = parse_search_mode(o->mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (mode == SearchMode::exhaustive && o->n > kMaxExhaustiveDeficiency)
      throw UsageError("exhaustive search needs n <= 22");
    const auto samples = parse_samples(o->samples);
    std::vector<double> values(samples);
    parallel_for(samples, c.threads, [&](std::size_t i) {
      Rng rng = make_rng(derive_seed(c.seed, i));
      const Graph g = sample_graph(spec, rng);
      values[i] = static_cast<double>(max_rank_deficiency(g, mode, o->budget, derive_seed(c.seed, i, 1)).deficiency);
    });
    std::vector<std::uint64_t> hist(o->n + 1, 0);
    for (double v : values) ++hist[static_cast<std::size_t>(v)];
    while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
    const auto est = summarize(values, c.seed);
    Result r;
    r.fields = estimate_json(est);
    r.fields["mode"] = to_string(mode);
    r.fields["histogram"] = hist;
    r.fields["mean_entanglement_bound"] = static_cast<double>(o->n) - est.mean;
    return r;
  };
}

void cmd_markov(Command& cmd) {
  struct Opts {
    std::size_t k = 10, r0 = 0, m0 = 0;
    std::string samples = "100000";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "k", o->k, "rows appended");
  add(cmd, "samples", o->samples, "matrices grown");
  add(cmd, "r0", o->r0, "rank of the seed matrix (even)");
  add(cmd, "m0", o->m0, "size of the seed matrix");
  cmd.run = [o](const RunConfig& c) {
    const auto samples = parse_samples(o->samples);
    const auto cmp = markov_evolve_vs_growth(o->r0, o->m0, o->k, samples, c.seed, c.threads);
    Result r;
    r.default_format = Format::csv;
    r.fields["tv"] = cmp.tv;
    r.columns = {"deficiency", "chain", "empirical"};
    for (std::size_t i = 0; i < cmp.chain.size(); ++i) r.rows.push_back({i, cmp.chain[i], cmp.empirical[i]});
    return r;
  };
}

ordered_json pattern_json(const PatternGraph& p) {
  ordered_json j{{"name", p.name}, {"v", p.v}, {"e", p.e}};
  if (p.aut) j["aut"] = *p.aut;
  if (p.density) j["density"] = to_string(*p.density);
  return j;
}

PatternGraph pattern_arg(const std::string& spec) {
  try {
    return parse_pattern(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void cmd_induced_count(Command& cmd) {
  struct Opts {
    std::string host, pattern = "c4";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "host", o->host, "host graph JSON file")->required();
  add(cmd, "pattern", o->pattern, "c4, grid:L, sparsegrid:L, ... or a graph JSON file");
  cmd.run = [o](const RunConfig&) {
    const Graph host = graph_from_json(read_file(o->host));
    const auto pattern = pattern_arg(o->pattern);
    Result r;
    r.fields["pattern"] = pattern_json(pattern);
    r.fields["host_n"] = host.num_vertices();
    r.fields["count"] = count_induced(host, pattern);
    return r;
  };
}

void cmd_induced_mc(Command& cmd) {
  struct Opts {
    std::size_t n = 60, d = 3;
    std::string pattern = "c4", samples = "200";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "n", o->n, "vertices");
  add(cmd, "d", o->d, "degree");
  add(cmd, "pattern", o->pattern, "pattern on at most 4 vertices");
  add(cmd, "samples", o->samples, "graphs");
  cmd.run = [o](const RunConfig& c) {
    const auto pattern = pattern_arg(o->pattern);
    const auto est = mc_induced_count(o->n, o->d, pattern, parse_samples(o->samples), c.seed, c.threads);
    const double expected = expected_induced_count(o->n, o->d, pattern);
    Result r;
    r.fields = estimate_json(est);
    r.fields["pattern"] = pattern_json(pattern);
    r.fields["expected"] = expected;
    r.fields["ratio"] = expected != 0.0 ? est.mean / expected : 0.0;
    return r;
  };
}

void cmd_fig1(Command& cmd) {
  struct Opts {
    std::string d_list = "3,4", model = "both", svg;
    std::int64_t n_min = 4, n_max = 64;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "d-list", o->d_list, "comma-separated degrees");
  add(cmd, "n-min", o->n_min, "smallest n");
  add(cmd, "n-max", o->n_max, "largest n");
  add(cmd, "model", o->model, "pairing, matching or both");
  add(cmd, "svg", o->svg, "also write an SVG line chart here");
  cmd.run = [o](const RunConfig& c) {
    std::vector<MomentModel> models;
    if (o->model == "both") {
      models = {MomentModel::pairing, MomentModel::matching};
    } else {
      models = {parse_moment_model(o->model)};
    }
    const auto degrees = parse_int_list(o->d_list);
    if (o->n_min > o->n_max) throw UsageError("n-min exceeds n-max");
    Result r;
    r.default_format = Format::csv;
    r.columns = {"model", "d", "n", "num", "den", "float_value", "asymptote", "status"};
    std::vector<Series> series;
    std::vector<double> levels;
    for (const auto model : models) {
      for (const auto d : degrees) {
        const double asymptote = d % 2 == 0 ? 3.0 : 2.0;
        if (std::find(levels.begin(), levels.end(), asymptote) == levels.end()) levels.push_back(asymptote);
        Series s{std::string(moment_model_name(model)) + " d=" + std::to_string(d), {}};
        for (auto n = o->n_min; n <= o->n_max; ++n) {
          const auto error = exact_domain_error(model, n, d);
          if (!error.empty()) {
            r.rows.push_back({moment_model_name(model), d, n, nullptr, nullptr, nullptr, asymptote, error});
            continue;
          }
          const Rational q = exact_avg(model, n, d, c.threads);
          r.rows.push_back({moment_model_name(model), d, n, to_string(q.get_num()), to_string(q.get_den()),
                            to_double(q), asymptote, "ok"});
          s.points.emplace_back(static_cast<double>(n), to_double(q));
        }
        series.push_back(std::move(s));
      }
    }
    if (!o->svg.empty()) {
      std::ofstream f(o->svg, std::ios::binary);
      if (!f) throw UsageError("cannot write " + o->svg);
      f << svg_line_chart(series, levels, "n", "E[m2]");
    }
    return r;
  };
}

void cmd_crosscheck(Command& cmd) {
  struct Opts {
    std::string suite = "ranks", samples = "0";
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "suite", o->suite, "moments, ranks, markov or subgraphs")->required();
  add(cmd, "samples", o->samples, "Monte Carlo samples (0 = suite default)");
  cmd.run = [o](const RunConfig& c) { return run_crosscheck(o->suite, parse_samples(o->samples), c); };
}

void cmd_reduce_sparsegrid(Command& cmd) {
  struct Opts {
    std::size_t L = 2;
    std::string graph;
  };
  auto o = std::make_shared<Opts>();
  add(cmd, "L", o->L, "grid side")->required();
  add(cmd, "graph", o->graph, "reduce this graph instead of sparsified_grid(L)");
  cmd.run = [o](const RunConfig&) {
    if (o->L < 2 || o->L > 6) throw UsageError("L must lie within 2..6");
    const Graph g = o->graph.empty() ? sparsified_grid_graph(o->L) : graph_from_json(read_file(o->graph));
    const auto red = reduce_sparsified_grid(g, o->L);
    Result r;
    r.fields["L"] = o->L;
    r.fields["input_n"] = g.num_vertices();
    r.fields["isomorphic_to_grid"] = red.isomorphic_to_grid;
    r.fields["y_sequence"] = red.y_sequence;
    r.fields["reduced"] = ordered_json::parse(graph_to_json(red.reduced));
    return r;
  };
}

}  // namespace

std::uint64_t parse_samples(const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size() || !(v >= 0) || v > 1e15 || v != std::floor(v)) throw std::invalid_argument(text);
    return static_cast<std::uint64_t>(v);
  } catch (const std::logic_error&) {
    throw UsageError("bad sample count '" + text + "'");
  }
}

std::string render(const RunConfig& config, const Result& result) {
  if (config.format == Format::json) {
    ordered_json body = result.fields;
    if (!result.columns.empty()) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : result.rows) {
        ordered_json obj;
        for (std::size_t i = 0; i < result.columns.size(); ++i) obj[result.columns[i]] = row[i];
        rows.push_back(std::move(obj));
      }
      body[result.table_key] = std::move(rows);
    }
    return json_document(config, body);
  }
  std::string out = csv_header(config);
  auto join = [](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
    return line + "\n";
  };
  if (result.columns.empty()) {
    std::vector<std::string> keys, values;
    for (const auto& [k, v] : result.fields.items()) {
      keys.push_back(csv_escape(k));
      values.push_back(cell_to_csv(v));
    }
    return out + join(keys) + join(values);
  }
  for (const auto& [k, v] : result.fields.items()) out += "# " + k + "=" + (v.is_string() ? v.get<std::string>() : cell_to_csv(v)) + "\n";
  out += join(result.columns);
  for (const auto& row : result.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_to_csv(v));
    out += join(cells);
  }
  return out;
}

std::vector<Command>& register_commands(CLI::App& app) {
  static std::vector<Command> commands;
  commands.clear();
  commands.reserve(16);
  const std::vector<std::tuple<const char*, const char*, void (*)(Command&)>> table{
      {"sample", "Sample a graph from an ensemble", cmd_sample},
      {"m2-exact", "Exact ensemble average of m2 over a range of n", cmd_m2_exact},
      {"m2-mc", "Monte Carlo ensemble average of m2", cmd_m2_mc},
      {"m2-brute", "Exact angle average of m2 for one graph", cmd_m2_brute},
      {"krawtchouk", "Exact Krawtchouk polynomial value", cmd_krawtchouk},
      {"rank-dist", "Rank law of random symmetric GF(2) matrices", cmd_rank_dist},
      {"deficiency", "Maximal rank deficiency over random graphs", cmd_deficiency},
      {"markov", "Rank-deficiency chain against matrix growth", cmd_markov},
      {"induced-count", "Count induced copies of a pattern", cmd_induced_count},
      {"induced-mc", "Monte Carlo induced counts in random regular graphs", cmd_induced_mc},
      {"fig1", "Exact E[m2] curves for several degrees", cmd_fig1},
      {"crosscheck", "Run an oracle cross-check suite", cmd_crosscheck},
      {"reduce-sparsegrid", "Y-measurement reduction of a sparsified grid", cmd_reduce_sparsegrid},
  };
  for (const auto& [name, help, setup] : table) {
    Command& cmd = commands.emplace_back();
    cmd.app = app.add_subcommand(name, help);
    setup(cmd);
  }
  return commands;
}

}  // namespace rgs::cli
