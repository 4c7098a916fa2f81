// graphbits command-line front end: sample, analyze, census, covers,
// enumerate, bounds. Every report embeds the full run configuration and
// renders deterministically: identical configuration, identical bytes.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "graphbits/blockstats.hpp"
#include "graphbits/census.hpp"
#include "graphbits/compress.hpp"
#include "graphbits/covers.hpp"
#include "graphbits/enumeration.hpp"
#include "graphbits/formats.hpp"
#include "graphbits/graph.hpp"
#include "graphbits/report.hpp"
#include "graphbits/topology.hpp"

namespace {

using graphbits::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct RunConfig {
  std::string command;
  int nodes = 0;
  int k = 0;
  std::uint64_t seed = 1;
  int samples = 1;
  double c_const = 0.0;
  double ck_const = 0.0;
  std::string compressor = "zlib";
  std::string format = "json";
  int limit_enum = graphbits::kDefaultEnumLimit;
  std::string alpha_variant = "subgraph";
  std::string in_path;
  std::string out_path;
  bool covers_enabled = true;

  ordered_json to_json() const {
    ordered_json j;
    j["command"] = command;
    j["nodes"] = nodes;
    j["k"] = k;
    j["seed"] = seed;
    j["samples"] = samples;
    j["c_const"] = graphbits::fp17(c_const);
    j["ck_const"] = graphbits::fp17(ck_const);
    j["compressor"] = compressor;
    j["format"] = format;
    j["limit_enum"] = limit_enum;
    j["alpha_variant"] = alpha_variant;
    j["generator"] = graphbits::Xoshiro256StarStar::kGeneratorId;
    return j;
  }
};

void emit(const RunConfig& config, const std::string& payload) {
  if (config.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + config.out_path);
  out << payload;
}

graphbits::Graph read_graph_text(const std::string& text, const std::string& format) {
  std::string trimmed = text;
  while (!trimmed.empty() && (trimmed.back() == '\n' || trimmed.back() == '\r' ||
                              trimmed.back() == ' '))
    trimmed.pop_back();
  if (format == "native") return graphbits::from_native(trimmed);
  if (format == "graph6") return graphbits::from_graph6(trimmed);
  // auto: native when it looks like "<digits>:"
  const std::size_t colon = trimmed.find(':');
  if (colon != std::string::npos &&
      trimmed.find_first_not_of("0123456789") == colon)
    return graphbits::from_native(trimmed);
  return graphbits::from_graph6(trimmed);
}

graphbits::Graph read_graph_file(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_graph_text(buffer.str(), format);
}

std::string render_graph(const graphbits::Graph& g, const RunConfig& config) {
  if (config.format == "native") return graphbits::to_native(g) + "\n";
  if (config.format == "graph6") return graphbits::to_graph6(g) + "\n";
  if (config.format == "json") {
    ordered_json j;
    j["config"] = config.to_json();
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    j["native"] = graphbits::to_native(g);
    j["graph6"] = graphbits::to_graph6(g);
    return j.dump(2) + "\n";
  }
  throw std::invalid_argument("gen: unsupported format " + config.format);
}

graphbits::AlphaVariant parse_variant(const std::string& name) {
  if (name == "subgraph") return graphbits::AlphaVariant::kSubgraphForm;
  if (name == "block") return graphbits::AlphaVariant::kBlockForm;
  throw std::invalid_argument("unknown alpha variant: " + name);
}

int cmd_gen(const RunConfig& config) {
  emit(config, render_graph(graphbits::random_graph(config.nodes, config.seed), config));
  return 0;
}

int cmd_analyze(const RunConfig& config) {
  const graphbits::Graph g = read_graph_file(config.in_path, config.format);
  ordered_json j;
  j["config"] = config.to_json();

  j["graph"]["n"] = g.n();
  j["graph"]["edges"] = g.edge_count();
  j["graph"]["native"] = graphbits::to_native(g);
  j["graph"]["graph6"] = graphbits::to_graph6(g);

  const std::vector<int> degrees = graphbits::degree_sequence(g);
  int dmin = g.n(), dmax = 0;
  double dtotal = 0;
  for (int d : degrees) {
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
    dtotal += d;
  }
  j["degrees"]["min"] = dmin;
  j["degrees"]["max"] = dmax;
  j["degrees"]["mean"] = graphbits::fp17(dtotal / g.n());
  j["degrees"]["sequence"] = degrees;

  const graphbits::DeficiencyEstimate est =
      graphbits::estimate_deficiency(g, config.compressor);
  j["deficiency"]["n"] = est.n;
  j["deficiency"]["encoded_len"] = est.encoded_len;
  j["deficiency"]["compressed_len"] = est.compressed_len;
  j["deficiency"]["calibration_offset"] = graphbits::fp17(est.calibration_offset);
  j["deficiency"]["delta_hat"] = graphbits::fp17(est.delta_hat);
  j["deficiency"]["compressor_id"] = est.compressor_id;

  if (g.n() >= 2) {
    int tmin = g.n(), tmax = 0;
    double ttotal = 0;
    std::int64_t pairs = 0;
    for (int i = 1; i <= g.n(); ++i)
      for (int jn = i + 1; jn <= g.n(); ++jn) {
        const int c = graphbits::two_path_count(g, i, jn).count;
        tmin = std::min(tmin, c);
        tmax = std::max(tmax, c);
        ttotal += c;
        ++pairs;
      }
    j["two_paths"]["pairs"] = pairs;
    j["two_paths"]["min"] = tmin;
    j["two_paths"]["max"] = tmax;
    j["two_paths"]["mean"] = graphbits::fp17(ttotal / double(pairs));

    const auto diam = graphbits::diameter(g);
    if (diam.has_value())
      j["diameter"] = *diam;
    else
      j["diameter"] = "disconnected";
    j["connectivity"] = graphbits::node_connectivity(g);
  } else {
    j["diameter"] = 0;
    j["connectivity"] = nullptr;
  }
  j["max_clique"] = graphbits::max_clique(g);

  if (g.n() <= graphbits::kDefaultAutLimit) {
    const graphbits::AutReport aut = graphbits::automorphisms(g);
    j["automorphisms"]["aut_size"] = aut.aut_size;
    j["automorphisms"]["moved"] = aut.moved;
    j["automorphisms"]["rigid"] = aut.rigid;
    j["automorphisms"]["orbit_size"] = aut.orbit_size;
  } else {
    j["automorphisms"] = nullptr;
  }

  const graphbits::RigidityCheck rigidity =
      graphbits::rigidity_deficiency_check(g, est.delta_hat);
  j["rigidity"]["rigid"] = rigidity.rigid;
  j["rigidity"]["delta_hat"] = graphbits::fp17(rigidity.delta_hat);
  j["rigidity"]["threshold"] = graphbits::fp17(rigidity.threshold);
  j["rigidity"]["within_threshold"] = rigidity.within_threshold;
  j["rigidity"]["falsification_candidate"] = rigidity.falsification_candidate;

  emit(config, j.dump(2) + "\n");
  return 0;
}

int cmd_census(const RunConfig& config) {
  const int n = config.nodes;
  const int k = config.k;
  const bool use_covers = config.covers_enabled;
  if (use_covers && n % k != 0)
    throw std::length_error("census: cover mode needs k dividing n");
  const graphbits::AlphaVariant variant = parse_variant(config.alpha_variant);
  const double K_H = graphbits::pattern_k_surrogate(k, config.ck_const);

  std::optional<graphbits::CoverFamily> family;
  if (use_covers) family = graphbits::baranyai_covers(n, k);

  struct Accumulator {
    double total = 0;
    std::int64_t within = 0;
  };
  const std::size_t npatterns = std::size_t(1)
                                << graphbits::pair_count(k);
  std::vector<Accumulator> acc(npatterns);
  double expected = 0, bound = 0, p = 0;

  const bool single = !config.in_path.empty();
  const int samples = single ? 1 : config.samples;
  std::vector<graphbits::CensusResult> last_rows;
  for (int s = 0; s < samples; ++s) {
    const graphbits::Graph g =
        single ? read_graph_file(config.in_path, "auto")
               : graphbits::random_graph(n, config.seed, std::uint64_t(s));
    if (g.n() != n) throw std::length_error("census: graph file has wrong node count");
    auto rows = graphbits::census_all_patterns(
        g, k, family ? &*family : nullptr, K_H, 0.0, config.c_const, variant);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      acc[t].total += double(rows[t].total);
      acc[t].within += rows[t].within ? 1 : 0;
      expected = rows[t].expected;
      bound = rows[t].bound;
      p = rows[t].p;
    }
    if (s + 1 == samples) last_rows = std::move(rows);
  }

  if (config.format == "csv") {
    std::string csv =
        "pattern,mean_total,expected,bound,p,within_fraction\n";
    for (std::size_t t = 0; t < npatterns; ++t) {
      csv += last_rows[t].H.bits().to_string() + "," +
             graphbits::fp17(acc[t].total / samples) + "," +
             graphbits::fp17(expected) + "," + graphbits::fp17(bound) + "," +
             graphbits::fp17(p) + "," +
             graphbits::fp17(double(acc[t].within) / samples) + "\n";
    }
    emit(config, csv);
    return 0;
  }

  ordered_json j;
  j["config"] = config.to_json();
  j["n"] = n;
  j["k"] = k;
  j["covers_used"] = use_covers;
  j["h"] = family ? family->h : 0;
  j["K_H_surrogate"] = graphbits::fp17(K_H);
  j["patterns"] = ordered_json::array();
  for (std::size_t t = 0; t < npatterns; ++t) {
    ordered_json row;
    row["pattern"] = last_rows[t].H.bits().to_string();
    row["mean_total"] = graphbits::fp17(acc[t].total / samples);
    row["expected"] = graphbits::fp17(expected);
    row["bound"] = graphbits::fp17(bound);
    row["p"] = graphbits::fp17(p);
    row["within_fraction"] = graphbits::fp17(double(acc[t].within) / samples);
    if (samples == 1) {
      row["total"] = last_rows[t].total;
      row["within"] = last_rows[t].within;
      if (use_covers) {
        std::int64_t cover_sum = 0;
        for (std::int64_t c : last_rows[t].per_cover) cover_sum += c;
        row["per_cover_sum"] = cover_sum;
      }
    }
    j["patterns"].push_back(std::move(row));
  }
  emit(config, j.dump(2) + "\n");
  return 0;
}

int cmd_covers(const RunConfig& config) {
  const graphbits::CoverFamily family =
      graphbits::baranyai_covers(config.nodes, config.k);
  graphbits::validate_cover_family(family);
  ordered_json j;
  j["config"] = config.to_json();
  j["n"] = family.n;
  j["k"] = family.k;
  j["N"] = family.N;
  j["h"] = family.h;
  j["covers"] = family.covers;
  emit(config, j.dump(2) + "\n");
  return 0;
}

int cmd_enumerate(const RunConfig& config) {
  // graph6 format: one line per canonical representative at n = --nodes,
  // for cross-tool verification
  if (config.format == "graph6") {
    const graphbits::EnumerationResult result =
        graphbits::enumerate_unlabeled(config.nodes, config.limit_enum);
    std::string lines;
    for (const graphbits::Graph& rep : result.representatives)
      lines += graphbits::to_graph6(rep) + "\n";
    emit(config, lines);
    return 0;
  }

  ordered_json rows = ordered_json::array();
  for (int n = 1; n <= config.nodes; ++n) {
    ordered_json row;
    row["n"] = n;
    const mpz_class burnside = graphbits::burnside_g(n);
    row["g_burnside"] = graphbits::mpz_str(burnside);
    const graphbits::UnlabeledCounts bounds_only =
        graphbits::unlabeled_counts_from_g(n, burnside);
    row["E_n"] = graphbits::mpq_str(bounds_only.E_n);
    row["E_n_decimal"] = graphbits::fp17(bounds_only.E_n.get_d());
    row["lower"] = graphbits::mpq_str(bounds_only.lower);
    row["upper"] = graphbits::mpq_str(bounds_only.upper);
    row["within_bounds"] =
        bounds_only.lower <= mpq_class(bounds_only.g_n) &&
        mpq_class(bounds_only.g_n) <= bounds_only.upper;
    if (n <= config.limit_enum) {
      const graphbits::EnumerationResult result =
          graphbits::enumerate_unlabeled(n, config.limit_enum);
      row["g_enumerated"] = graphbits::mpz_str(result.counts.g_n);
      row["oracles_agree"] = result.counts.g_n == burnside;
      // labeled-graph histogram over the moved-node classes, via orbit sizes
      const graphbits::PermTable table(n);
      std::map<int, std::uint64_t> histogram;
      for (const graphbits::Graph& rep : result.representatives) {
        const auto stats = table.aut_stats(graphbits::mbits_from_graph(rep));
        histogram[stats.max_moved] +=
            graphbits::factorial_u64(n) / stats.aut_size;
      }
      ordered_json hist;
      for (const auto& [m, count] : histogram)
        hist[std::to_string(m)] = count;
      row["per_m_histogram"] = std::move(hist);
    } else {
      row["g_enumerated"] = nullptr;
      row["oracles_agree"] = nullptr;
      row["per_m_histogram"] = nullptr;
    }
    rows.push_back(std::move(row));
  }

  if (config.format == "csv") {
    std::string csv = "n,g_enumerated,g_burnside,oracles_agree,E_n,lower,upper\n";
    for (const auto& row : rows) {
      csv += row["n"].dump() + "," +
             (row["g_enumerated"].is_null() ? "" : row["g_enumerated"].get<std::string>()) +
             "," + row["g_burnside"].get<std::string>() + "," +
             row["oracles_agree"].dump() + "," + row["E_n"].get<std::string>() +
             "," + row["lower"].get<std::string>() + "," +
             row["upper"].get<std::string>() + "\n";
    }
    emit(config, csv);
    return 0;
  }
  ordered_json j;
  j["config"] = config.to_json();
  j["rows"] = std::move(rows);
  emit(config, j.dump(2) + "\n");
  return 0;
}

struct BoundArgs {
  std::string kind;
  std::uint64_t len_n = 0;
  std::uint64_t l = 1;
  double ky = -1.0;  // negative means "use the surrogate"
  double kh = -1.0;
  double delta = 0.0;
  int m = 0;
};

int cmd_bounds(const RunConfig& config, const BoundArgs& args) {
  ordered_json j;
  j["config"] = config.to_json();
  j["kind"] = args.kind;
  if (args.kind == "block") {
    graphbits::BlockStatParams params;
    params.n = args.len_n;
    params.l = args.l;
    params.K_y = args.ky >= 0 ? args.ky
                              : graphbits::block_k_surrogate(args.l, config.ck_const);
    params.delta = args.delta;
    params.c = config.c_const;
    const graphbits::BlockBound bound = graphbits::block_deviation_bound(params);
    j["params"]["n"] = params.n;
    j["params"]["l"] = params.l;
    j["params"]["K_y"] = graphbits::fp17(params.K_y);
    j["params"]["delta"] = graphbits::fp17(params.delta);
    j["params"]["c"] = graphbits::fp17(params.c);
    j["params"]["p"] = graphbits::fp17(params.p());
    j["alpha"] = graphbits::fp17(bound.alpha);
    j["value"] = graphbits::fp17(bound.value);
    j["precondition_violated"] = bound.precondition_violated;
  } else if (args.kind == "frequency") {
    const double kh = args.kh >= 0
                          ? args.kh
                          : graphbits::pattern_k_surrogate(config.k, config.ck_const);
    const graphbits::FrequencyBound bound = graphbits::frequency_bound(
        config.nodes, config.k, kh, args.delta, config.c_const,
        parse_variant(config.alpha_variant));
    j["params"]["n"] = config.nodes;
    j["params"]["k"] = config.k;
    j["params"]["K_H"] = graphbits::fp17(kh);
    j["params"]["delta"] = graphbits::fp17(args.delta);
    j["params"]["c"] = graphbits::fp17(config.c_const);
    j["params"]["alpha_variant"] = config.alpha_variant;
    j["h"] = bound.h;
    j["p"] = graphbits::fp17(bound.p);
    j["alpha"] = graphbits::fp17(bound.alpha);
    j["value"] = graphbits::fp17(bound.value);
  } else if (args.kind == "fraction") {
    j["params"]["delta"] = graphbits::fp17(args.delta);
    j["value"] = graphbits::fp17(graphbits::random_fraction_bound(args.delta));
  } else if (args.kind == "aut-size") {
    j["params"]["n"] = config.nodes;
    j["params"]["m"] = args.m;
    j["value"] = graphbits::mpz_str(graphbits::aut_bound(config.nodes, args.m));
  } else if (args.kind == "class-prob") {
    const graphbits::ProbClassBound bound =
        graphbits::prob_class_bound(config.nodes, args.m);
    j["params"]["n"] = config.nodes;
    j["params"]["m"] = args.m;
    j["value"] = graphbits::fp17(bound.value);
    j["vacuous"] = bound.vacuous;
  } else {
    throw std::invalid_argument("bounds: unknown kind " + args.kind);
  }
  emit(config, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphbits: bitstring graph codec, statistics, and enumeration"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("GRAPHBITS_LIMIT_ENUM"))
    config.limit_enum = std::atoi(env);

  BoundArgs bound_args;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.out_path, "output path (default stdout)");
    cmd->add_option("--format", config.format, "output format");
  };

  CLI::App* gen = app.add_subcommand("gen", "sample a seeded random graph");
  gen->add_option("--nodes", config.nodes, "node count")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", config.seed, "RNG seed");
  add_common(gen);
  gen->callback([&] { config.command = "gen"; });

  CLI::App* analyze = app.add_subcommand("analyze", "full report for one graph");
  analyze->add_option("--in", config.in_path, "graph file (native or graph6)")
      ->required();
  analyze->add_option("--compressor", config.compressor, "compressor id");
  analyze->add_option("--c-const", config.c_const, "O(1) constant c");
  analyze->add_option("--ck-const", config.ck_const, "K-surrogate constant");
  add_common(analyze);
  analyze->callback([&] {
    config.command = "analyze";
    if (config.format == "json") config.format = "auto";
  });

  CLI::App* census = app.add_subcommand("census", "subgraph pattern census");
  census->add_option("--nodes", config.nodes, "node count")
      ->required()
      ->check(CLI::PositiveNumber);
  census->add_option("--k", config.k, "pattern size")
      ->required()
      ->check(CLI::PositiveNumber);
  census->add_option("--seed", config.seed, "RNG seed");
  census->add_option("--samples", config.samples, "number of sampled graphs")
      ->check(CLI::PositiveNumber);
  census->add_option("--graph", config.in_path, "census this graph file instead");
  census->add_option("--c-const", config.c_const, "O(1) constant c");
  census->add_option("--ck-const", config.ck_const, "K-surrogate constant");
  census->add_option("--alpha-variant", config.alpha_variant,
                     "subgraph | block");
  census->add_flag("!--no-covers", config.covers_enabled,
                   "skip the Baranyai per-cover counts");
  add_common(census);
  census->callback([&] { config.command = "census"; });

  CLI::App* covers = app.add_subcommand("covers", "Baranyai cover partition");
  covers->add_option("--nodes", config.nodes, "node count")
      ->required()
      ->check(CLI::PositiveNumber);
  covers->add_option("--k", config.k, "subset size")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(covers);
  covers->callback([&] { config.command = "covers"; });

  CLI::App* enumerate = app.add_subcommand("enumerate", "unlabeled census table");
  enumerate->add_option("--nodes", config.nodes, "enumerate up to this n")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--limit-enum", config.limit_enum,
                        "exhaustive enumeration cap");
  add_common(enumerate);
  enumerate->callback([&] { config.command = "enumerate"; });

  CLI::App* bounds = app.add_subcommand("bounds", "evaluate a deviation bound");
  bounds->add_option("--kind", bound_args.kind,
                     "block | frequency | fraction | aut-size | class-prob")
      ->required();
  bounds->add_option("--len-n", bound_args.len_n, "string length in bits");
  bounds->add_option("--l", bound_args.l, "block length in bits");
  bounds->add_option("--ky", bound_args.ky, "K(y|n) surrogate override");
  bounds->add_option("--kh", bound_args.kh, "K(H|n) surrogate override");
  bounds->add_option("--delta", bound_args.delta, "randomness deficiency");
  bounds->add_option("--m", bound_args.m, "moved-node count");
  bounds->add_option("--nodes", config.nodes, "node count");
  bounds->add_option("--k", config.k, "pattern size");
  bounds->add_option("--c-const", config.c_const, "O(1) constant c");
  bounds->add_option("--ck-const", config.ck_const, "K-surrogate constant");
  bounds->add_option("--alpha-variant", config.alpha_variant,
                     "subgraph | block");
  bounds->callback([&] { config.command = "bounds"; });
  add_common(bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(config);
    if (analyze->parsed()) return cmd_analyze(config);
    if (census->parsed()) return cmd_census(config);
    if (covers->parsed()) return cmd_covers(config);
    if (enumerate->parsed()) return cmd_enumerate(config);
    if (bounds->parsed()) return cmd_bounds(config, bound_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitUsage;
}
