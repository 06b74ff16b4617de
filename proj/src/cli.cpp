#include "graphcurv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "graphcurv/cliques.hpp"
#include "graphcurv/einstein.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/extremal.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/geodesic.hpp"
#include "graphcurv/io.hpp"
#include "graphcurv/kernels.hpp"
#include "graphcurv/level_surface.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/random_er.hpp"

namespace graphcurv::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

struct Common {
  std::string graph_file;
  std::string generator;
  std::uint64_t seed = 0;
  std::string format = "text";
  unsigned threads = 1;
};

Format format_of(const Common& c) {
  if (c.format == "json") return Format::json;
  if (c.format == "csv") return Format::csv;
  return Format::text;
}

void add_common(CLI::App* sub, Common& c, bool with_graph) {
  if (with_graph) {
    auto* file = sub->add_option("--graph", c.graph_file, "Graph file (edge list or json)");
    auto* spec = sub->add_option("--generate", c.generator, "Generator spec such as cross_polytope(4)");
    file->excludes(spec);
  }
  sub->add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
}

Graph input_graph(const Common& c) {
  if (c.graph_file.empty() == c.generator.empty()) {
    throw InputError("exactly one of --graph or --generate is required");
  }
  return c.generator.empty() ? load_graph(c.graph_file) : gen::generate(c.generator);
}

VertexFunction input_function(const Graph& g, const std::string& values, std::uint64_t seed) {
  if (values.empty()) return sample_function(g, seed);
  std::vector<double> xs;
  std::stringstream stream(values);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad function value '" + item + "'");
    }
  }
  if (xs.size() != g.order()) {
    throw InputError("--values has " + std::to_string(xs.size()) + " entries for a graph with " +
                     std::to_string(g.order()) + " vertices");
  }
  return VertexFunction(std::move(xs));
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", x);
  return buffer;
}

Completion parse_completion(const std::string& s) {
  if (s == "stellation") return Completion::stellation;
  if (s == "chord_first") return Completion::chord_first;
  return Completion::chord_second;
}

// chi -----------------------------------------------------------------------

struct ChiArgs {
  Common common;
  std::string engine = "both";
};

void run_chi(const ChiArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  std::optional<std::int64_t> clique, ph;
  FVector f;
  if (a.engine != "ph") {
    f = f_vector(g);
    clique = alternating_sum(f);
  }
  if (a.engine != "clique") ph = euler_characteristic_ph(g);
  if (clique && ph && *clique != *ph) {
    throw ConsistencyError("clique engine gives " + std::to_string(*clique) + " but Poincare-Hopf engine gives " +
                           std::to_string(*ph));
  }
  const std::int64_t chi = clique ? *clique : *ph;
  switch (format_of(a.common)) {
    case Format::json: {
      ordered_json doc;
      doc["chi"] = chi;
      if (clique) doc["f_vector"] = f;
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "n,edges,chi\n" << g.order() << ',' << g.edge_count() << ',' << chi << '\n';
      break;
    case Format::text:
      out << chi << '\n';
      break;
  }
}

// curvature -----------------------------------------------------------------

struct CurvatureArgs {
  Common common;
  std::optional<Vertex> vertex;
  std::size_t samples = 0;
};

void run_curvature(const CurvatureArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  std::vector<Vertex> vertices;
  if (a.vertex) {
    require_vertex(g, *a.vertex);
    vertices.push_back(*a.vertex);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) vertices.push_back(v);
  }
  const Format fmt = format_of(a.common);

  if (a.samples > 0) {
    if (fmt == Format::csv) out << "vertex,exact,mean,stderr\n";
    ordered_json rows = ordered_json::array();
    for (Vertex v : vertices) {
      const Rational k = curvature(g, v);
      const Estimate e = curvature_expectation(g, v, a.samples, a.common.seed);
      if (fmt == Format::csv) {
        out << v << ',' << to_string(k) << ',' << format_double(e.mean) << ',' << format_double(e.stderr_) << '\n';
      } else if (fmt == Format::json) {
        rows.push_back({{"vertex", v}, {"exact", to_string(k)}, {"mean", e.mean}, {"stderr", e.stderr_}});
      } else {
        out << v << ' ' << to_string(k) << " mean " << format_double(e.mean) << " stderr " << format_double(e.stderr_)
            << '\n';
      }
    }
    if (fmt == Format::json) out << ordered_json{{"samples", a.samples}, {"vertices", rows}}.dump() << '\n';
    return;
  }

  Rational total = 0;
  std::vector<Rational> ks;
  for (Vertex v : vertices) {
    ks.push_back(curvature(g, v));
    total += ks.back();
  }
  if (!a.vertex) {
    const auto report = curvature_report(g);  // checks the Gauss-Bonnet total against chi
    total = report.total;
  }
  switch (fmt) {
    case Format::json: {
      ordered_json doc;
      ordered_json values = ordered_json::array();
      for (const auto& k : ks) values.push_back(to_string(k));
      doc["vertices"] = vertices;
      doc["curvature"] = values;
      doc["total"] = to_string(total);
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "vertex,curvature,decimal\n";
      for (std::size_t i = 0; i < vertices.size(); ++i)
        out << vertices[i] << ',' << to_string(ks[i]) << ',' << to_decimal(ks[i]) << '\n';
      break;
    case Format::text:
      for (std::size_t i = 0; i < vertices.size(); ++i) out << vertices[i] << ' ' << to_string(ks[i]) << '\n';
      if (!a.vertex) out << "total " << to_string(total) << '\n';
      break;
  }
}

// index ---------------------------------------------------------------------

struct IndexArgs {
  Common common;
  std::string values;
  std::optional<Vertex> vertex;
};

void run_index(const IndexArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  const VertexFunction f = input_function(g, a.values, a.common.seed);
  std::vector<Vertex> vertices;
  if (a.vertex) {
    require_vertex(g, *a.vertex);
    vertices.push_back(*a.vertex);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) vertices.push_back(v);
  }
  std::vector<std::int64_t> is;
  std::vector<Rational> js;
  for (Vertex v : vertices) {
    is.push_back(index(g, f, v));
    js.push_back(symmetric_index(g, f, v));
  }
  std::optional<std::int64_t> sum;
  if (!a.vertex) sum = poincare_hopf_sum(g, f);
  switch (format_of(a.common)) {
    case Format::json: {
      ordered_json doc;
      ordered_json jv = ordered_json::array();
      for (const auto& j : js) jv.push_back(to_string(j));
      doc["vertices"] = vertices;
      doc["index"] = is;
      doc["symmetric_index"] = jv;
      if (sum) doc["sum"] = *sum;
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "vertex,f,index,symmetric_index\n";
      for (std::size_t k = 0; k < vertices.size(); ++k)
        out << vertices[k] << ',' << format_double(f[vertices[k]]) << ',' << is[k] << ',' << to_string(js[k]) << '\n';
      break;
    case Format::text:
      for (std::size_t k = 0; k < vertices.size(); ++k)
        out << vertices[k] << " i " << is[k] << " j " << to_string(js[k]) << '\n';
      if (sum) out << "sum " << *sum << '\n';
      break;
  }
}

// levelset ------------------------------------------------------------------

struct LevelsetArgs {
  Common common;
  std::string values;
  std::optional<Vertex> vertex;
  std::optional<double> threshold;
  std::string completion = "stellation";
};

void run_levelset(const LevelsetArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  const VertexFunction f = input_function(g, a.values, a.common.seed);
  const Format fmt = format_of(a.common);
  if (a.threshold) {
    if (a.vertex) throw InputError("--threshold and --vertex are alternatives");
    const LevelSurface s = hypersurface(g, f, *a.threshold);
    if (fmt == Format::json) {
      out << serialize_graph(s.graph, GraphFormat::json) << '\n';
    } else {
      out << "chi " << euler_characteristic(s.graph) << '\n' << serialize_graph(s.graph, GraphFormat::edge_list);
    }
    return;
  }
  if (!a.vertex) throw InputError("levelset needs --vertex or --threshold");
  require_vertex(g, *a.vertex);
  const CompletedSurface s = center_surface(g, f, *a.vertex, parse_completion(a.completion));
  if (fmt == Format::json) {
    out << to_json(s) << '\n';
    return;
  }
  out << "chi " << euler_characteristic(s.graph) << '\n';
  out << "completed " << (s.completed ? "true" : "false") << '\n';
  if (s.sphere_dimension) {
    const auto record = genus_lemma_check(g, f, *a.vertex, *s.sphere_dimension + 1);
    out << "symmetric_index " << to_string(record.symmetric_index) << '\n';
    out << "genus_lemma " << (record.holds() ? "holds" : "fails") << '\n';
  }
  out << serialize_graph(s.graph, GraphFormat::edge_list);
}

// einstein ------------------------------------------------------------------

struct EinsteinArgs {
  Common common;
  std::optional<std::size_t> max_rim;
  std::string scalar_mode = "incident_ricci";
};

void run_einstein(const EinsteinArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  EinsteinOptions options;
  options.max_rim = a.max_rim;
  options.scalar_mode = a.scalar_mode == "wheel_mean" ? ScalarMode::wheel_mean : ScalarMode::incident_ricci;
  const EinsteinReport r = is_einstein(g, options);
  switch (format_of(a.common)) {
    case Format::json:
      out << to_json(r) << '\n';
      break;
    case Format::csv:
      out << "vertex,u,v,tensor\n";
      for (const auto& t : r.tensor) out << t.vertex << ',' << t.edge.u << ',' << t.edge.v << ',' << to_string(t.value) << '\n';
      break;
    case Format::text:
      out << "einstein " << (r.is_einstein ? "true" : "false") << '\n';
      out << "max_abs_tensor " << to_string(r.max_abs_tensor) << '\n';
      if (r.approximate) out << "approximate true\n";
      break;
  }
}

// er-expect / er-sweep ------------------------------------------------------

struct ErExpectArgs {
  Common common;
  std::size_t n = 0;
  std::string p;
  bool terms = false;
  std::size_t samples = 0;
  std::size_t mc_max_order = 64;
  std::string mc_max_p = "7/10";
};

void run_er_expect(const ErExpectArgs& a, std::ostream& out) {
  const Rational p = parse_rational(a.p);
  const ErExpectation e = expected_chi_exact(a.n, p, a.terms);
  std::optional<Estimate> mc;
  if (a.samples > 0) mc = expected_chi_mc(a.n, p, a.samples, a.common.seed, {a.mc_max_order, parse_rational(a.mc_max_p)});
  switch (format_of(a.common)) {
    case Format::json: {
      ordered_json doc;
      doc["n"] = a.n;
      doc["p"] = to_string(p);
      doc["expected_chi"] = to_string(e.value);
      doc["decimal"] = to_decimal(e.value, 15);
      doc["log_pm"] = log_pm(e.value);
      if (a.terms) {
        ordered_json t = ordered_json::array();
        for (const auto& x : e.terms) t.push_back(to_string(x));
        doc["terms"] = t;
      }
      if (mc) doc["monte_carlo"] = {{"samples", a.samples}, {"mean", mc->mean}, {"stderr", mc->stderr_}};
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv: {
      const SweepRow row{a.n, p, e.value};
      write_sweep_csv(out, std::span(&row, 1));
      break;
    }
    case Format::text:
      out << to_string(e.value) << '\n' << to_decimal(e.value, 15) << '\n';
      if (a.terms) {
        for (std::size_t k = 0; k < e.terms.size(); ++k) out << "term " << k + 1 << ' ' << to_string(e.terms[k]) << '\n';
      }
      if (mc) out << "monte_carlo " << format_double(mc->mean) << " stderr " << format_double(mc->stderr_) << '\n';
      break;
  }
}

struct ErSweepArgs {
  Common common;
  std::size_t n_max = 0;
  std::vector<std::string> p;
  std::size_t grid = 0;
};

void run_er_sweep(const ErSweepArgs& a, std::ostream& out) {
  std::vector<Rational> ps;
  for (const auto& s : a.p) ps.push_back(parse_rational(s));
  if (a.grid > 0) {
    const auto grid = interior_grid(a.grid);
    ps.insert(ps.end(), grid.begin(), grid.end());
  }
  if (ps.empty()) throw InputError("er-sweep needs --p values or --grid");
  const auto rows = sweep(a.n_max, ps, a.common.threads);
  if (format_of(a.common) == Format::json) {
    ordered_json doc = ordered_json::array();
    for (const auto& r : rows) {
      doc.push_back({{"n", r.n}, {"p", to_string(r.p)}, {"expected_chi", to_decimal(r.value, 15)}, {"log_pm", log_pm(r.value)}});
    }
    out << doc.dump() << '\n';
  } else {
    write_sweep_csv(out, rows);
  }
}

// extremal ------------------------------------------------------------------

struct ExtremalArgs {
  Common common;
  std::size_t n = 0;
  std::string mode = "both";
  bool connected = false;
  bool all_graphs = false;
  std::string method = "auto";
  std::size_t steps = 100000;
  double t0 = 2.0;
  double t1 = 0.05;
  std::size_t chains = 1;
  bool einstein = false;
  bool monotonicity = false;
};

void print_search(const SearchResult& r, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    out << to_json(r) << '\n';
    return;
  }
  out << to_string(r.mode) << ' ' << r.best_value << '\n';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    out << "witness " << i + 1;
    if (i < r.einstein.size() && r.einstein[i]) out << (*r.einstein[i] ? " einstein" : " not-einstein");
    out << '\n' << serialize_graph(r.witnesses[i], GraphFormat::edge_list);
  }
}

void run_extremal(const ExtremalArgs& a, std::ostream& out) {
  const Format fmt = format_of(a.common);
  if (a.monotonicity) {
    const auto report = monotonicity_report(a.n, a.common.threads);
    if (fmt == Format::json) {
      out << to_json(report) << '\n';
    } else {
      out << "n,min,max\n";
      for (const auto& row : report.rows) out << row.n << ',' << row.min << ',' << row.max << '\n';
      if (fmt == Format::text) out << "monotone " << (report.holds() ? "true" : "false") << '\n';
    }
    return;
  }
  const bool connected = !a.all_graphs;
  const bool exhaustive = a.method == "exhaustive" || (a.method == "auto" && a.n <= kExhaustiveMaxOrder);
  std::vector<SearchResult> results;
  if (exhaustive) {
    const auto pair = exhaustive_extremal(a.n, connected, a.common.threads);
    if (a.mode != "max") results.push_back(pair.min);
    if (a.mode != "min") results.push_back(pair.max);
  } else {
    const AnnealSchedule schedule{a.steps, a.t0, a.t1};
    for (ExtremeMode m : {ExtremeMode::min, ExtremeMode::max}) {
      if (a.mode != "both" && parse_extreme_mode(a.mode) != m) continue;
      results.push_back(anneal_extremal(a.n, m, schedule, connected, a.common.seed, a.chains, a.common.threads));
    }
  }
  if (a.einstein) {
    for (auto& r : results) r = einstein_filter(std::move(r));
  }
  if (fmt == Format::json && results.size() == 2) {
    out << "[" << to_json(results[0]) << ",\n" << to_json(results[1]) << "]\n";
    return;
  }
  for (const auto& r : results) print_search(r, fmt, out);
}

// geodesic ------------------------------------------------------------------

struct GeodesicArgs {
  Common common;
  Vertex from = 0;
  std::optional<Vertex> to;
  std::string metric = "hop";
  std::string parameter = "0";
  std::string endpoints = "half";
  bool radius = false;
  std::size_t max_paths = 100000;
};

PathMetricConfig metric_of(const GeodesicArgs& a) {
  const Rational p = parse_rational(a.parameter);
  const EndpointWeight w = a.endpoints == "full" ? EndpointWeight::full : EndpointWeight::half;
  if (a.metric == "curvature2d") return PathMetricConfig::curvature2d(p, w);
  if (a.metric == "genus4d") return PathMetricConfig::genus4d(p, w);
  return PathMetricConfig::hop();
}

void run_geodesic(const GeodesicArgs& a, std::ostream& out) {
  const Graph g = input_graph(a.common);
  const PathMetricConfig config = metric_of(a);
  const Format fmt = format_of(a.common);
  if (a.radius) {
    const std::size_t r = injectivity_radius(g, a.from, config);
    if (fmt == Format::json) {
      out << ordered_json{{"vertex", a.from}, {"injectivity_radius", r}}.dump() << '\n';
    } else {
      out << r << '\n';
    }
    return;
  }
  if (!a.to) throw InputError("geodesic needs --to (or --radius)");
  const Rational d = distance(g, a.from, *a.to, config);
  const auto paths = minimal_geodesics(g, a.from, *a.to, config, a.max_paths);
  if (fmt == Format::json) {
    out << to_json(d, paths) << '\n';
    return;
  }
  out << "distance " << to_string(d) << '\n';
  out << "geodesics " << paths.size() << '\n';
  for (const Path& p : paths) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
}

// generate ------------------------------------------------------------------

void run_generate(const Common& c, std::ostream& out) {
  const Graph g = input_graph(c);
  if (format_of(c) == Format::json) {
    out << serialize_graph(g, GraphFormat::json) << '\n';
  } else {
    out << serialize_graph(g, GraphFormat::edge_list);
  }
}

// bench ---------------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::size_t repeat = 20;
};

const std::vector<std::string>& bench_corpus() {
  static const std::vector<std::string> corpus = {
      "icosahedron",           "cross_polytope(4)",        "cross_polytope(6)",       "torus_triangulation(6,6)",
      "complete_bipartite(8,8)", "erdos_renyi(30,2/5,1)",   "erdos_renyi(40,3/10,0)",  "erdos_renyi(40,3/10,1)",
      "erdos_renyi(60,1/5,2)", "erdos_renyi(40,1/2,3)"};
  return corpus;
}

template <class F>
double best_seconds(std::size_t repeat, F&& f) {
  double best = 0.0;
  for (std::size_t r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r == 0 || s < best) best = s;
  }
  return best;
}

void run_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<std::string> specs;
  if (!a.common.graph_file.empty() || !a.common.generator.empty()) {
    specs.push_back(a.common.generator.empty() ? a.common.graph_file : a.common.generator);
  } else {
    specs = bench_corpus();
  }
  const std::size_t repeat = std::max<std::size_t>(a.repeat, 1);
  out << "graph,n,edges,chi,clique_seconds,ph_seconds,ratio\n";
  for (const std::string& spec : specs) {
    const Graph g = spec == a.common.graph_file ? load_graph(spec) : gen::generate(spec);
    std::int64_t clique = 0, ph = 0;
    const double tc = best_seconds(repeat, [&] { clique = euler_characteristic(g); });
    const double tp = best_seconds(repeat, [&] { ph = euler_characteristic_ph(g); });
    if (clique != ph) throw ConsistencyError("engines disagree on " + spec);
    out << '"' << spec << "\"," << g.order() << ',' << g.edge_count() << ',' << clique << ',' << format_double(tc)
        << ',' << format_double(tp) << ',' << format_double(tp > 0 ? tc / tp : 0.0) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature, indices and Euler characteristics of finite simple graphs", "graphcurv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  ChiArgs chi;
  auto* chi_cmd = app.add_subcommand("chi", "euler_characteristic and euler_characteristic_ph (euler_topology)");
  add_common(chi_cmd, chi.common, true);
  chi_cmd->add_option("--engine", chi.engine, "clique, ph, or both (cross-checked)")
      ->check(CLI::IsMember({"clique", "ph", "both"}))
      ->capture_default_str();

  CurvatureArgs curv;
  auto* curv_cmd = app.add_subcommand("curvature", "exact_index_expectation and curvature_expectation (morse)");
  add_common(curv_cmd, curv.common, true);
  curv_cmd->add_option("--vertex", curv.vertex, "Single vertex");
  curv_cmd->add_option("--samples", curv.samples, "Monte Carlo samples of i_f (0 = exact only)");

  IndexArgs idx;
  auto* idx_cmd = app.add_subcommand("index", "index, symmetric_index and poincare_hopf_sum (morse)");
  add_common(idx_cmd, idx.common, true);
  idx_cmd->add_option("--values", idx.values, "Comma-separated f values; default is a seeded random function");
  idx_cmd->add_option("--vertex", idx.vertex, "Single vertex");

  LevelsetArgs lvl;
  auto* lvl_cmd = app.add_subcommand("levelset", "hypersurface and center_surface with the genus lemma (level_surface)");
  add_common(lvl_cmd, lvl.common, true);
  lvl_cmd->add_option("--values", lvl.values, "Comma-separated f values; default is a seeded random function");
  lvl_cmd->add_option("--vertex", lvl.vertex, "Center vertex x of B_f(x)");
  lvl_cmd->add_option("--threshold", lvl.threshold, "Level c of the hypersurface {f = c} of the whole graph");
  lvl_cmd->add_option("--completion", lvl.completion, "Completion of 2-2 tetrahedra")
      ->check(CLI::IsMember({"stellation", "chord_first", "chord_second"}))
      ->capture_default_str();

  EinsteinArgs ein;
  auto* ein_cmd = app.add_subcommand("einstein", "is_einstein with Ricci, scalar and tensor values (einstein)");
  add_common(ein_cmd, ein.common, true);
  ein_cmd->add_option("--max-rim", ein.max_rim, "Longest wheel rim considered");
  ein_cmd->add_option("--scalar-mode", ein.scalar_mode, "Scalar curvature definition")
      ->check(CLI::IsMember({"incident_ricci", "wheel_mean"}))
      ->capture_default_str();

  ErExpectArgs erx;
  auto* erx_cmd = app.add_subcommand("er-expect", "expected_chi_exact and expected_chi_mc (random_er)");
  add_common(erx_cmd, erx.common, false);
  erx_cmd->add_option("--n", erx.n, "Order")->required();
  erx_cmd->add_option("--p", erx.p, "Edge probability as a fraction or decimal")->required();
  erx_cmd->add_flag("--terms", erx.terms, "Also print the terms of the alternating sum");
  erx_cmd->add_option("--samples", erx.samples, "Monte Carlo samples (0 = none)");
  erx_cmd->add_option("--mc-max-order", erx.mc_max_order, "Monte Carlo order limit")->capture_default_str();
  erx_cmd->add_option("--mc-max-p", erx.mc_max_p, "Monte Carlo probability limit")->capture_default_str();

  ErSweepArgs ers;
  auto* ers_cmd = app.add_subcommand("er-sweep", "sweep of expected_chi_exact with log_pm (random_er)");
  add_common(ers_cmd, ers.common, false);
  ers_cmd->add_option("--n-max", ers.n_max, "Largest order")->required();
  ers_cmd->add_option("--p", ers.p, "Probabilities")->delimiter(',');
  ers_cmd->add_option("--grid", ers.grid, "Add this many evenly spaced interior probabilities");

  ExtremalArgs ext;
  auto* ext_cmd = app.add_subcommand("extremal", "exhaustive_extremal, anneal_extremal and monotonicity_report (extremal)");
  add_common(ext_cmd, ext.common, false);
  ext_cmd->add_option("--n", ext.n, "Order (n_max with --monotonicity)")->required();
  ext_cmd->add_option("--mode", ext.mode, "Which extreme")->check(CLI::IsMember({"min", "max", "both"}))->capture_default_str();
  auto* conn = ext_cmd->add_flag("--connected", ext.connected, "Connected graphs only (default)");
  ext_cmd->add_flag("--all", ext.all_graphs, "Include disconnected graphs")->excludes(conn);
  ext_cmd->add_option("--method", ext.method, "Search method")
      ->check(CLI::IsMember({"auto", "exhaustive", "anneal"}))
      ->capture_default_str();
  ext_cmd->add_option("--steps", ext.steps, "Annealing steps")->capture_default_str();
  ext_cmd->add_option("--t0", ext.t0, "Initial temperature")->capture_default_str();
  ext_cmd->add_option("--t1", ext.t1, "Final temperature")->capture_default_str();
  ext_cmd->add_option("--chains", ext.chains, "Independent annealing chains")->capture_default_str();
  ext_cmd->add_flag("--einstein", ext.einstein, "Annotate witnesses with is_einstein (einstein_filter)");
  ext_cmd->add_flag("--monotonicity", ext.monotonicity, "Table of connected extrema for 2..n");

  GeodesicArgs geo;
  auto* geo_cmd = app.add_subcommand("geodesic", "distance, minimal_geodesics and injectivity_radius (geodesic)");
  add_common(geo_cmd, geo.common, true);
  geo_cmd->add_option("--from", geo.from, "Start vertex")->required();
  geo_cmd->add_option("--to", geo.to, "End vertex");
  geo_cmd->add_option("--metric", geo.metric, "Path metric")
      ->check(CLI::IsMember({"hop", "curvature2d", "genus4d"}))
      ->capture_default_str();
  geo_cmd->add_option("--param", geo.parameter, "c for curvature2d, epsilon for genus4d")->capture_default_str();
  geo_cmd->add_option("--endpoints", geo.endpoints, "Endpoint weighting")
      ->check(CLI::IsMember({"half", "full"}))
      ->capture_default_str();
  geo_cmd->add_flag("--radius", geo.radius, "Print the injectivity radius of --from");
  geo_cmd->add_option("--max-paths", geo.max_paths, "Limit on enumerated geodesics")->capture_default_str();

  Common gen_common;
  auto* gen_cmd = app.add_subcommand("generate", "graph generators and serialization (graph_core)");
  add_common(gen_cmd, gen_common, true);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "times euler_characteristic against euler_characteristic_ph over a generator corpus (euler_topology)");
  add_common(bench_cmd, bench.common, true);
  bench_cmd->add_option("--repeat", bench.repeat, "Timed repetitions per engine (best is kept)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* failing = &app;
    for (CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return input_error;
  }

  try {
    if (chi_cmd->parsed()) run_chi(chi, out);
    else if (curv_cmd->parsed()) run_curvature(curv, out);
    else if (idx_cmd->parsed()) run_index(idx, out);
    else if (lvl_cmd->parsed()) run_levelset(lvl, out);
    else if (ein_cmd->parsed()) run_einstein(ein, out);
    else if (erx_cmd->parsed()) run_er_expect(erx, out);
    else if (ers_cmd->parsed()) run_er_sweep(ers, out);
    else if (ext_cmd->parsed()) run_extremal(ext, out);
    else if (geo_cmd->parsed()) run_geodesic(geo, out);
    else if (gen_cmd->parsed()) run_generate(gen_common, out);
    else if (bench_cmd->parsed()) run_bench(bench, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return input_error;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return domain_error;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return capacity_error;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return consistency_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return ok;
}

}  // namespace graphcurv::cli
