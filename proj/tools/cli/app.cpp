#include "app.hpp"

#include <CLI11/CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "hetperc/bounds.hpp"
#include "hetperc/corpus.hpp"
#include "hetperc/edge_list_io.hpp"
#include "hetperc/fit.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/montecarlo.hpp"
#include "hetperc/rng.hpp"
#include "hetperc/spectral.hpp"
#include "hetperc/verification.hpp"
#include "json_report.hpp"
#include "manifest.hpp"
#include "reproduce.hpp"

namespace hetperc::cli {

namespace {

/// Malformed flag values detected after CLI11 parsing (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) parts.push_back(cur);
  }
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw UsageError(what + ": '" + text + "' is not a number");
  return v;
}

std::uint32_t parse_index(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-') {
    throw UsageError(what + ": '" + text + "' is not a non-negative integer");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<ClusterMode> parse_modes(const std::string& text) {
  std::vector<ClusterMode> modes;
  for (const std::string& m : split(text, ',')) {
    try {
      modes.push_back(cluster_mode_from_string(m));
    } catch (const std::exception&) {
      throw UsageError("--modes: unknown mode '" + m + "' (expected und, out, in, str)");
    }
  }
  if (modes.empty()) throw UsageError("--modes: no modes given");
  return modes;
}

std::vector<double> parse_grid(const std::string& range, const std::string& list) {
  std::vector<double> grid;
  if (!list.empty()) {
    for (const std::string& s : split(list, ',')) grid.push_back(parse_double(s, "--p-list"));
    return grid;
  }
  const auto parts = split(range, ':');
  if (parts.size() != 3) throw UsageError("--grid expects start:stop:step");
  const double start = parse_double(parts[0], "--grid start");
  const double stop = parse_double(parts[1], "--grid stop");
  const double step = parse_double(parts[2], "--grid step");
  if (!(step > 0) || stop < start) throw UsageError("--grid needs step > 0 and stop >= start");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    // Rounded to 12 decimals so 0.3 + 2 * 0.01 prints as 0.32.
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return grid;
}

/// Echo of every option of a subcommand except execution-only settings.
Json echo_parameters(const CLI::App& sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "workers") continue;
    const auto& res = opt->results();
    std::string value;
    if (res.empty()) {
      value = opt->get_default_str();
    } else {
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    }
    params[name] = value;
  }
  return params;
}

void emit(const std::string& output, const std::string& content, const Manifest& manifest,
          std::ostream& out) {
  if (output.empty() || output == "-") {
    out << content;
    return;
  }
  write_text_file(output, content);
  write_manifest(output, manifest);
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  std::uint32_t L = 0, d1 = 0, d2 = 0, D = 0, r = 0, d = 0, n = 0;
  std::string variant = "a";
  std::string dims;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, const CLI::App& sub, std::ostream& out) {
  GeneratorSpec spec;
  try {
    spec.family = family_from_string(a.family);
  } catch (const std::exception&) {
    throw UsageError("generate: unknown family '" + a.family + "'");
  }
  spec.L = a.L;
  spec.d1 = a.d1;
  spec.d2 = a.d2;
  spec.D = a.D;
  spec.r = a.r;
  spec.d = a.d;
  spec.n = a.n;
  spec.seed = a.seed;
  if (a.variant == "a") {
    spec.variant = TreeVariant::a;
  } else if (a.variant == "b") {
    spec.variant = TreeVariant::b;
  } else if (a.variant == "c") {
    spec.variant = TreeVariant::c;
  } else {
    throw UsageError("--variant must be a, b or c");
  }
  for (const std::string& s : split(a.dims, 'x')) {
    for (const std::string& t : split(s, ',')) spec.dims.push_back(parse_index(t, "--dims"));
  }
  const Digraph g = generate(spec);
  std::ostringstream text;
  write_edge_list(text, g);

  Manifest m;
  m.subcommand = "generate";
  m.parameters = echo_parameters(sub);
  m.seeds = {a.seed};
  m.outputs = {a.output};
  m.extra["graph"] = {{"vertices", g.vertex_count()}, {"arcs", g.arc_count()}};
  emit(a.output, text.str(), m, out);
  if (!a.output.empty() && a.output != "-") {
    out << "wrote " << a.output << ": " << g.vertex_count() << " vertices, " << g.arc_count()
        << " arcs\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string graph;
  std::string p;
  std::string pairs = "auto";
  std::size_t depth_cap = kDefaultReturnDepth;
  double tol = 1e-10;
  std::size_t max_iter = 0;
  std::string output;
};

std::vector<std::pair<VertexId, VertexId>> parse_pairs(const std::string& text, const Digraph& d) {
  if (text == "auto") return default_pairs(d);
  if (text == "all") return all_pairs(d.vertex_count());
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const std::string& item : split(text, ',')) {
    const auto uv = split(item, ':');
    if (uv.size() != 2) throw UsageError("--pairs expects u:v[,u:v...], 'auto' or 'all'");
    const VertexId u = parse_index(uv[0], "--pairs");
    const VertexId v = parse_index(uv[1], "--pairs");
    if (u >= d.vertex_count() || v >= d.vertex_count()) {
      throw GraphError("--pairs: vertex " + item + " outside the graph");
    }
    pairs.emplace_back(u, v);
  }
  return pairs;
}

int cmd_analyze(const AnalyzeArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const Digraph g = read_edge_list_file(a.graph);
  const SiteProbabilities p = parse_probability_spec(a.p, g.vertex_count());
  SpectralOptions spectral;
  spectral.tol = a.tol;
  spectral.max_iter = a.max_iter;
  const BoundReport report = analyze(g, p, parse_pairs(a.pairs, g), spectral, a.depth_cap);

  Json j = bound_report_json(report);
  Manifest m;
  m.subcommand = "analyze";
  m.parameters = echo_parameters(sub);
  m.inputs = {a.graph};
  if (std::filesystem::exists(a.p)) m.inputs.push_back(a.p);
  m.outputs = {a.output};
  emit(a.output, j.dump(2) + "\n", m, out);

  const bool converged = report.context.perron_a.converged && report.context.perron_h.converged;
  if (!converged) {
    err << "hetperc: error: spectral radius did not converge (A_p "
        << (report.context.perron_a.converged ? "ok" : "unconverged") << ", H_p "
        << (report.context.perron_h.converged ? "ok" : "unconverged") << ")\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string graph;
  std::string grid = "0.3:0.6:0.01";
  std::string p_list;
  std::string profile;
  std::size_t realizations = 120;
  std::string modes = "out";
  std::string probes;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::string output;
};

int cmd_simulate(const SimulateArgs& a, const CLI::App& sub, std::ostream& out) {
  const Digraph g = read_edge_list_file(a.graph);
  SweepSpec spec;
  spec.grid = parse_grid(a.grid, a.p_list);
  if (!a.profile.empty()) spec.profile = parse_probability_spec(a.profile, g.vertex_count());
  spec.realizations = a.realizations;
  spec.seed = a.seed;
  spec.modes = parse_modes(a.modes);
  spec.workers = a.workers;
  const SweepResult result = sweep(g, spec);

  std::ostringstream csv;
  csv << "p,mode,mean,se,sd,realizations,max_second_largest_str\n";
  for (const SweepPoint& pt : result.points) {
    for (ClusterMode mode : result.modes) {
      const Estimate& e = pt.largest[static_cast<std::size_t>(mode)];
      csv << format_double(pt.p) << ',' << to_string(mode) << ',' << format_double(e.mean) << ','
          << format_double(e.se) << ',' << format_double(e.sd) << ',' << result.realizations << ',';
      if (mode == ClusterMode::str) csv << pt.max_second_largest_str;
      csv << '\n';
    }
  }

  Manifest m;
  m.subcommand = "simulate";
  m.parameters = echo_parameters(sub);
  m.inputs = {a.graph};
  if (!a.profile.empty() && std::filesystem::exists(a.profile)) m.inputs.push_back(a.profile);
  m.seeds = {a.seed};
  m.outputs = {a.output};
  m.extra["rng_scheme"] = result.rng_scheme;
  m.extra["realizations"] = result.realizations;
  m.extra["heterogeneous_profile"] = result.heterogeneous_profile;
  m.extra["csv_columns"] =
      "p: grid value (probability, or scale factor with --profile); mode: cluster notion; "
      "mean, se, sd: largest-cluster size statistics over realizations (se = sd / sqrt(N)); "
      "max_second_largest_str: largest non-maximal strongly connected cluster seen (str only)";

  if (!a.probes.empty()) {
    EstimateRequest req;
    for (const std::string& s : split(a.probes, ',')) req.probes.push_back(parse_index(s, "--probes"));
    req.realizations = a.realizations;
    req.seed = a.seed;
    req.workers = a.workers;
    std::ostringstream pcsv;
    pcsv << "p,probe,mode,chi_mean,chi_se\n";
    for (double gp : spec.grid) {
      const SiteProbabilities pp = sweep_probabilities(spec, g.vertex_count(), gp);
      const ObservableEstimates est = estimate_observables(g, pp, req);
      for (std::size_t k = 0; k < req.probes.size(); ++k) {
        for (ClusterMode mode : result.modes) {
          const Estimate& e = est.chi[static_cast<std::size_t>(mode)][k];
          pcsv << format_double(gp) << ',' << req.probes[k] << ',' << to_string(mode) << ','
               << format_double(e.mean) << ',' << format_double(e.se) << '\n';
        }
      }
    }
    if (a.output.empty() || a.output == "-") {
      out << csv.str() << '\n' << pcsv.str();
      return kExitOk;
    }
    const std::string probe_path = a.output + ".probes.csv";
    m.outputs.push_back(probe_path);
    write_text_file(probe_path, pcsv.str());
  }
  emit(a.output, csv.str(), m, out);
  return kExitOk;
}

// --------------------------------------------------------------------- fit

struct FitArgs {
  std::vector<std::string> curves;
  std::string mode = "out";
  double fraction = 0.5;
  std::string run = "lowest";
  std::string output;
};

SweepCurve read_curve(const std::string& path, double L, ClusterMode mode) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw FormatError(path + ":1: missing CSV header");
  const auto header = split(line, ',');
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* need : {"p", "mode", "mean", "se", "sd"}) {
    if (!col.count(need)) throw FormatError(path + ":1: missing column '" + need + "'");
  }
  SweepCurve c;
  c.L = L;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() < header.size() - 1) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": too few columns");
    }
    if (cells[col["mode"]] != to_string(mode)) continue;
    auto num = [&](const char* name) {
      try {
        return std::stod(cells[col[name]]);
      } catch (const std::exception&) {
        throw FormatError(path + ":" + std::to_string(lineno) + ": bad number in column '" +
                          name + "'");
      }
    };
    c.p.push_back(num("p"));
    c.mean.push_back(num("mean"));
    c.se.push_back(num("se"));
    c.sd.push_back(num("sd"));
  }
  if (c.p.empty()) {
    throw FormatError(path + ": no rows for mode " + std::string(to_string(mode)));
  }
  return c;
}

int cmd_fit(const FitArgs& a, const CLI::App& sub, std::ostream& out) {
  ClusterMode mode;
  try {
    mode = cluster_mode_from_string(a.mode);
  } catch (const std::exception&) {
    throw UsageError("--mode: unknown mode '" + a.mode + "'");
  }
  if (a.run != "lowest" && a.run != "peak") throw UsageError("--window-run must be lowest or peak");
  std::vector<SweepCurve> curves;
  std::vector<std::string> inputs;
  for (const std::string& spec : a.curves) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--curve expects L=path, got '" + spec + "'");
    const double L = parse_double(spec.substr(0, eq), "--curve size");
    inputs.push_back(spec.substr(eq + 1));
    curves.push_back(read_curve(inputs.back(), L, mode));
  }
  const FitResult fit = fit_threshold(
      curves, sd_fraction_window(a.fraction, a.run == "lowest" ? RunChoice::lowest : RunChoice::peak));
  Json j = fit_result_json(fit);
  j["mode"] = a.mode;

  Manifest m;
  m.subcommand = "fit";
  m.parameters = echo_parameters(sub);
  m.inputs = inputs;
  m.outputs = {a.output};
  emit(a.output, j.dump(2) + "\n", m, out);
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::uint64_t corpus_seed = 1;
  std::size_t instances = 500;
  std::size_t max_n = 12;
  std::string output;
};

int cmd_verify(const VerifyArgs& a, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  if (a.max_n < 3 || a.max_n > kOracleMaxVertices) {
    throw UsageError("--max-n must lie in [3, " + std::to_string(kOracleMaxVertices) + "]");
  }
  const SoundnessSummary summary = soundness_suite(oracle_corpus(a.corpus_seed, a.instances, a.max_n));
  std::ostringstream table;
  table << std::left << std::setw(28) << "bound" << std::right << std::setw(12) << "applicable"
        << std::setw(13) << "comparisons" << std::setw(12) << "violations" << std::setw(13)
        << "worst ratio" << "  result\n";
  for (const BoundTally& t : summary.bounds) {
    std::ostringstream appl;
    appl << t.applicable << "/" << t.instances;
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(4) << t.worst_ratio;
    table << std::left << std::setw(28) << t.id << std::right << std::setw(12) << appl.str()
          << std::setw(13) << t.comparisons << std::setw(12) << t.violations << std::setw(13)
          << ratio.str() << "  " << (t.violations == 0 ? "PASS" : "FAIL") << '\n';
  }
  table << summary.instances << " instances, " << summary.total_violations() << " violations\n";
  out << table.str();

  if (!a.output.empty() && a.output != "-") {
    Manifest m;
    m.subcommand = "verify";
    m.parameters = echo_parameters(sub);
    m.seeds = {a.corpus_seed};
    m.outputs = {a.output};
    write_text_file(a.output, soundness_json(summary).dump(2) + "\n");
    write_manifest(a.output, m);
  }
  if (summary.total_violations() > 0) {
    err << "hetperc: error: " << summary.total_violations() << " bound violations\n";
    return kExitNumerical;
  }
  return kExitOk;
}

// --------------------------------------------------------------- reproduce

struct ReproduceArgs {
  std::string figure;
  std::size_t realizations = 120;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::string out_dir = ".";
};

int cmd_reproduce(const ReproduceArgs& a, const CLI::App& sub, std::ostream& out) {
  ReproduceOptions opts;
  opts.figure = a.figure;
  opts.realizations = a.realizations;
  opts.seed = a.seed;
  opts.workers = a.workers;
  const ReproduceOutcome r = reproduce(opts);

  std::filesystem::create_directories(a.out_dir);
  const std::string csv_path = (std::filesystem::path(a.out_dir) / (a.figure + "_curves.csv")).string();
  const std::string json_path = (std::filesystem::path(a.out_dir) / (a.figure + "_fit.json")).string();
  Manifest m;
  m.subcommand = "reproduce";
  m.parameters = echo_parameters(sub);
  m.seeds = {a.seed};
  m.outputs = {csv_path, json_path};
  m.workers = a.workers;
  write_text_file(csv_path, r.curves_csv);
  write_manifest(csv_path, m);
  write_text_file(json_path, r.report.dump(2) + "\n");
  write_manifest(json_path, m);

  out << a.figure << " (" << to_string(r.mode) << "): ";
  if (r.fit) {
    out << "p_c = " << format_double(r.fit->primary.p_c) << " +- "
        << format_double(r.fit->primary.p_c_se) << " (1/L extrapolation; 1/L^2 gives "
        << format_double(r.fit->alternative.p_c) << ")";
  } else {
    out << "fit failed: " << r.fit_error;
  }
  out << ", expected [" << format_double(r.lo) << ", " << format_double(r.hi) << "]";
  if (r.mode == ClusterMode::str) {
    out << ", largest non-maximal strong cluster " << r.max_second_largest_str;
  }
  out << " -> " << r.status << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and Monte Carlo estimates for heterogeneous site percolation on digraphs",
               "hetperc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HETPERC_VERSION);

  std::size_t workers = 0;

  GenerateArgs gen;
  CLI::App* g = app.add_subcommand("generate", "Write a generated digraph as an edge list");
  g->add_option("family", gen.family,
                "two-region | rooted-tree | tree-closed | torus | cycle | oriented-cycle | "
                "complete | random-regular")
      ->required();
  g->add_option("--L", gen.L, "two-region: ring length and half the number of rings");
  g->add_option("--d1", gen.d1, "two-region: degree parameter of the first region");
  g->add_option("--d2", gen.d2, "two-region: degree parameter of the second region");
  g->add_option("--D", gen.D, "rooted-tree: branching factor");
  g->add_option("--r", gen.r, "rooted-tree / tree-closed: depth");
  g->add_option("--d", gen.d, "tree-closed / random-regular: degree");
  g->add_option("--variant", gen.variant, "tree-closed variant: a, b or c")->capture_default_str();
  g->add_option("--dims", gen.dims, "torus side lengths, e.g. 64x64");
  g->add_option("--n", gen.n, "cycle / oriented-cycle / complete / random-regular: vertices");
  g->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  g->add_option("-o,--output", gen.output, "output edge-list file (stdout when omitted)");

  AnalyzeArgs an;
  CLI::App* a = app.add_subcommand("analyze", "Spectral quantities and every bound as JSON");
  a->add_option("graph", an.graph, "edge-list file")->required();
  a->add_option("--p", an.p, "probability: a scalar or a file with one value per vertex")
      ->required();
  a->add_option("--pairs", an.pairs, "connectivity pairs: auto, all, or u:v,u:v")
      ->capture_default_str();
  a->add_option("--depth-cap", an.depth_cap, "return-walk search depth in transitions")
      ->capture_default_str();
  a->add_option("--tol", an.tol, "relative width of the spectral-radius bracket")
      ->capture_default_str();
  a->add_option("--max-iter", an.max_iter, "power-iteration limit (0 = automatic)")
      ->capture_default_str();
  a->add_option("-o,--output", an.output, "output JSON file (stdout when omitted)");

  SimulateArgs sim;
  CLI::App* s = app.add_subcommand("simulate", "Monte Carlo sweep of largest-cluster sizes");
  s->add_option("graph", sim.graph, "edge-list file")->required();
  s->add_option("--grid", sim.grid, "probability grid start:stop:step")->capture_default_str();
  s->add_option("--p-list", sim.p_list, "explicit comma-separated grid (overrides --grid)");
  s->add_option("--profile", sim.profile,
                "heterogeneous profile (scalar or file); grid values then scale it");
  s->add_option("--realizations", sim.realizations, "realizations per grid point")
      ->capture_default_str();
  s->add_option("--modes", sim.modes, "comma-separated cluster modes: und,out,in,str")
      ->capture_default_str();
  s->add_option("--probes", sim.probes, "comma-separated probe vertices for per-vertex chi");
  s->add_option("--seed", sim.seed, "random seed")->capture_default_str();
  s->add_option("--workers", workers, "worker threads (0 = available parallelism)");
  s->add_option("-o,--output", sim.output, "output CSV file (stdout when omitted)");

  FitArgs fit;
  CLI::App* f = app.add_subcommand("fit", "Fit pseudo-critical points and extrapolate p_c");
  f->add_option("--curve", fit.curves, "L=path of a simulate CSV; give at least two")
      ->required();
  f->add_option("--mode", fit.mode, "cluster mode column to fit")->capture_default_str();
  f->add_option("--window-fraction", fit.fraction, "sd fraction defining the fit window")
      ->capture_default_str();
  f->add_option("--window-run", fit.run, "which qualifying run to fit: lowest or peak")
      ->capture_default_str();
  f->add_option("-o,--output", fit.output, "output JSON file (stdout when omitted)");

  VerifyArgs ver;
  CLI::App* v = app.add_subcommand("verify", "Check every bound against exact enumeration");
  v->add_option("--corpus-seed", ver.corpus_seed, "seed of the random corpus")
      ->capture_default_str();
  v->add_option("--instances", ver.instances, "number of (graph, p) instances")
      ->capture_default_str();
  v->add_option("--max-n", ver.max_n, "largest vertex count")->capture_default_str();
  v->add_option("-o,--output", ver.output, "optional JSON summary file");

  ReproduceArgs rep;
  CLI::App* r = app.add_subcommand("reproduce", "Threshold estimate on the two-region digraphs");
  r->add_option("figure", rep.figure, "fig2 (out-clusters) or figstr (strongly connected)")
      ->required();
  r->add_option("--realizations", rep.realizations, "realizations per grid point")
      ->capture_default_str();
  r->add_option("--seed", rep.seed, "random seed for graphs and sampling")->capture_default_str();
  r->add_option("--workers", workers, "worker threads (0 = available parallelism)");
  r->add_option("--out-dir", rep.out_dir, "directory for CSV and JSON outputs")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "hetperc: usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*g) return cmd_generate(gen, *g, out);
    if (*a) return cmd_analyze(an, *a, out, err);
    if (*s) {
      sim.workers = workers;
      return cmd_simulate(sim, *s, out);
    }
    if (*f) return cmd_fit(fit, *f, out);
    if (*v) return cmd_verify(ver, *v, out, err);
    if (*r) {
      rep.workers = workers;
      return cmd_reproduce(rep, *r, out);
    }
  } catch (const UsageError& e) {
    err << "hetperc: usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "hetperc: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "hetperc: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hetperc: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "hetperc: numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace hetperc::cli
