// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "graphcurv/cli.hpp"
#include "graphcurv/einstein.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/extremal.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/geodesic.hpp"
#include "graphcurv/level_surface.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/random_er.hpp"
#include "oracles.hpp"

using namespace graphcurv;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    } else if (!condition) {
      ok = false;
    }
  }
};

const std::vector<std::string>& generator_specs() {
  static const std::vector<std::string> specs = {
      "edgeless(1)",          "edgeless(4)",          "path(2)",           "path(6)",
      "cycle(3)",             "cycle(4)",             "cycle(5)",          "cycle(9)",
      "complete(2)",          "complete(5)",          "complete(8)",       "complete_bipartite(2,3)",
      "complete_bipartite(3,3)", "complete_bipartite(5,5)", "complete_multipartite(2,3,4)", "star(1)",
      "star(5)",              "wheel(4)",             "wheel(5)",          "wheel(8)",
      "cross_polytope(1)",    "cross_polytope(2)",    "cross_polytope(3)", "cross_polytope(4)",
      "octahedron",           "icosahedron",          "kite",              "two_star(3)",
      "two_star(5)",          "torus_triangulation(4,4)", "torus_triangulation(5,6)", "erdos_renyi(12,1/2,3)"};
  return specs;
}

std::vector<Graph> generator_graphs() {
  std::vector<Graph> out;
  for (const auto& s : generator_specs()) out.push_back(gen::generate(s));
  return out;
}

std::vector<Graph> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_order) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_order;
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    out.push_back(oracle::random_graph(rng, n, p));
  }
  return out;
}

Check gauss_bonnet() {
  Check c;
  auto graphs = generator_graphs();
  for (auto& g : random_corpus(1, 200, 25)) graphs.push_back(std::move(g));
  for (const Graph& g : graphs) {
    Rational total = 0;
    for (Vertex x = 0; x < g.order(); ++x) total += curvature(g, x);
    c.require(total == euler_characteristic(g), "sum of curvatures differs from chi");
  }
  c.detail = c.ok ? std::to_string(graphs.size()) + " graphs" : c.detail;
  return c;
}

Check poincare_hopf() {
  Check c;
  std::mt19937_64 rng(2);
  for (int pair = 0; pair < 200; ++pair) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 20, 0.45);
    const VertexFunction f = sample_function(g, rng());
    const std::int64_t chi = euler_characteristic(g);
    std::int64_t isum = 0;
    Rational jsum = 0;
    for (Vertex x = 0; x < g.order(); ++x) {
      isum += index(g, f, x);
      jsum += symmetric_index(g, f, x);
    }
    c.require(isum == chi && jsum == chi, "index sum differs from chi");
  }
  c.detail = c.ok ? "200 (G, f) pairs" : c.detail;
  return c;
}

Check engine_equivalence() {
  Check c;
  auto graphs = generator_graphs();
  for (auto& g : random_corpus(3, 200, 25)) graphs.push_back(std::move(g));
  for (std::uint64_t s = 0; s < 100; ++s) graphs.push_back(gen::erdos_renyi(30, make_rational(2, 5), s));
  for (const Graph& g : graphs) {
    c.require(euler_characteristic_ph(g) == euler_characteristic(g), "engines disagree");
    c.require(euler_characteristic_ph(g, 17) == euler_characteristic(g), "shuffled engine disagrees");
  }
  std::ostringstream out, err;
  const int code = cli::run({"bench", "--generate", "erdos_renyi(40,3/10,0)", "--repeat", "200"}, out, err);
  c.require(code == 0, "bench failed: " + err.str());
  std::string ratio = "?";
  if (code == 0) {
    const std::string text = out.str();
    const auto line_end = text.find_last_of('\n', text.size() - 2);
    const std::string row = text.substr(line_end + 1);
    ratio = row.substr(row.find_last_of(',') + 1);
    while (!ratio.empty() && ratio.back() == '\n') ratio.pop_back();
  }
  if (c.ok) c.detail = std::to_string(graphs.size()) + " graphs; bench erdos_renyi(40,3/10): clique/ph time ratio " + ratio;
  return c;
}

Check named_values() {
  Check c;
  c.require(euler_characteristic(gen::complete_bipartite(3, 3)) == -3, "chi(K33)");
  for (long n = 1; n <= 10; ++n) {
    c.require(euler_characteristic(gen::complete_bipartite(n, n)) == 2 * n - n * n, "chi(Knn)");
  }
  const Graph oct = gen::octahedron();
  for (Vertex x = 0; x < 6; ++x) c.require(curvature(oct, x) == make_rational(1, 3), "octahedron curvature");
  const Graph ico = gen::icosahedron();
  for (Vertex x = 0; x < 12; ++x) {
    c.require(curvature(ico, x) == make_rational(1, 6), "icosahedron curvature");
    c.require(scalar(ico, x) == make_rational(1, 6), "icosahedron scalar");
  }
  for (const Edge& e : ico.edges()) c.require(ricci(ico, e) == make_rational(1, 6), "icosahedron ricci");
  for (std::size_t k = 3; k <= 8; ++k) c.require(curvature(gen::star(k), 0) == 1 - make_rational(k, 2), "star center");
  c.require(curvature(gen::two_star(3), 0) == make_rational(-1, 2), "star-center curvature -1/2");
  c.require(euler_characteristic(gen::two_star(3)) == -1, "chi(T_2)");
  c.require(is_einstein(ico).is_einstein, "icosahedron Einstein");
  std::vector<Graph> einstein = {gen::complete_bipartite(3, 3), gen::cycle(4), oct};
  for (std::size_t n = 3; n <= 9; ++n) einstein.push_back(gen::cycle(n));
  for (std::size_t n = 1; n <= 7; ++n) einstein.push_back(gen::star(n));
  for (std::size_t n = 1; n <= 7; ++n) einstein.push_back(gen::complete(n));
  for (const Graph& g : einstein) c.require(is_einstein(g).is_einstein, "expected an Einstein graph");
  return c;
}

Check genus_lemma() {
  Check c;
  const Graph g = gen::cross_polytope(4);
  c.require(g.order() == 10 && euler_characteristic(g) == 2 && is_geometric(g, 4).is_geometric, "cross_polytope(4)");
  const CenterSurfaces surfaces(g);
  for (std::uint64_t s = 0; s < 100; ++s) {
    const VertexFunction f = sample_function(g, s);
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto record = genus_lemma_check(surfaces, f, x, 4);
      c.require(record.holds(), "genus lemma fails");
      c.require(record.symmetric_index == 1 - make_rational(record.surface_chi, 2), "j = 1 - chi(B)/2");
      const std::int64_t stellated = euler_characteristic(surfaces.build(f, x, Completion::stellation).graph);
      for (Completion mode : {Completion::chord_first, Completion::chord_second}) {
        c.require(euler_characteristic(surfaces.build(f, x, mode).graph) == stellated, "completion changes chi(B)");
      }
    }
  }
  c.detail = c.ok ? "100 functions x 10 vertices" : c.detail;
  return c;
}

Check hilbert_einstein() {
  Check c;
  const Graph g = gen::cross_polytope(4);
  const CenterSurfaces surfaces(g);
  const std::size_t samples = 10000;
  std::vector<std::vector<double>> values(g.order());
  for (std::size_t s = 0; s < samples; ++s) {
    const VertexFunction f = sample_function(g, sample_seed(11, s));
    for (Vertex x = 0; x < g.order(); ++x) {
      const auto chi_b = euler_characteristic(surfaces.build(f, x).graph);
      values[x].push_back(1.0 - static_cast<double>(chi_b) / 2.0);
    }
    c.require(glued_surface_characteristic(surfaces, f) == -2, "glued surface chi != -2");
  }
  double worst = 0.0;
  for (Vertex x = 0; x < g.order(); ++x) {
    const Estimate e = summarize(values[x]);
    const double k = to_double(curvature(g, x));
    const double z = e.stderr_ > 0 ? std::fabs(e.mean - k) / e.stderr_ : (e.mean == k ? 0.0 : INFINITY);
    worst = std::max(worst, z);
    c.require(z <= 4.0, "estimate outside 4 standard errors");
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "10^4 samples, largest |mean - K|/stderr = %.2f", worst);
  if (c.ok) c.detail = buffer;
  return c;
}

Check odd_dimension() {
  Check c;
  const Graph cp3 = gen::cross_polytope(3);
  for (Vertex x = 0; x < cp3.order(); ++x) c.require(curvature(cp3, x) == 0, "cross_polytope(3) curvature");
  for (std::size_t n = 4; n <= 20; ++n) {
    const Graph cn = gen::cycle(n);
    for (Vertex x = 0; x < n; ++x) c.require(curvature(cn, x) == 0, "cycle curvature");
  }
  const CenterSurfaces surfaces(cp3);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const VertexFunction f = sample_function(cp3, s);
    for (Vertex x = 0; x < cp3.order(); ++x) {
      const Graph b = surfaces.build(f, x).graph;
      c.require(euler_characteristic(b) == 0, "chi(B) != 0");
      for (Vertex v = 0; v < b.order(); ++v) c.require(b.degree(v) == 2, "surface vertex degree != 2");
    }
  }
  return c;
}

Check erdos_renyi() {
  Check c;
  for (std::size_t n = 1; n <= 4; ++n) {
    c.require(oracle::er_polynomial(n) == oracle::er_formula_polynomial(n), "symbolic identity");
    for (long k = 0; k <= 12; ++k) {
      const Rational p = make_rational(k, 12);
      c.require(expected_chi_exact(n, p).value == oracle::evaluate(oracle::er_polynomial(n), p), "exact value");
    }
  }
  const Estimate mc = expected_chi_mc(8, make_rational(1, 2), 10000, 21);
  const double exact = expected_chi_exact(8, make_rational(1, 2)).approx;
  c.require(std::fabs(mc.mean - exact) <= 4.0 * mc.stderr_, "Monte Carlo outside 4 standard errors");
  c.require(expected_chi_exact(300, make_rational(1, 2)).value < -22200, "E(300, 1/2) < -22200");
  const auto start = std::chrono::steady_clock::now();
  const auto dense = expected_chi_exact(400, make_rational(9, 10));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(dense.value > 400, "E(400, 9/10) > 400");
  c.require(seconds < 60.0, "n = 400 evaluation slower than 60 s");
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "MC %.4f +- %.4f vs %.4f; E(400,9/10) in %.3f s", mc.mean, mc.stderr_, exact,
                seconds);
  if (c.ok) c.detail = buffer;
  return c;
}

bool has_isomorphic(const std::vector<Graph>& list, const Graph& g) {
  for (const Graph& h : list)
    if (oracle::isomorphic(g, h)) return true;
  return false;
}

Check extremal() {
  Check c;
  const auto six = exhaustive_extremal(6, true);
  c.require(six.min.best_value == -3 && six.max.best_value == 2, "n = 6 extrema");
  c.require(has_isomorphic(six.min.witnesses, gen::complete_bipartite(3, 3)), "K33 witness");
  c.require(has_isomorphic(six.max.witnesses, gen::octahedron()), "octahedron witness");
  const auto five = exhaustive_extremal(5, true);
  c.require(five.min.best_value == -1 && has_isomorphic(five.min.witnesses, gen::two_star(3)), "n = 5 minimum");
  const auto four = exhaustive_extremal(4, true);
  c.require(four.min.best_value == 0 && has_isomorphic(four.min.witnesses, gen::cycle(4)), "n = 4 minimum");
  c.require(monotonicity_report(6).holds(), "monotonicity");
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (anneal_extremal(6, ExtremeMode::min, {100000, 2.0, 0.05}, true, seed).best_value == six.min.best_value) ++hits;
  }
  c.require(hits >= 95, "annealing recovered the optimum in " + std::to_string(hits) + "/100 runs");
  if (c.ok) c.detail = "annealing recovered -3 in " + std::to_string(hits) + "/100 runs";
  return c;
}

Check conservation() {
  Check c;
  auto graphs = generator_graphs();
  for (auto& g : random_corpus(5, 100, 14)) graphs.push_back(std::move(g));
  for (const Graph& g : graphs) {
    const auto report = is_einstein(g);
    std::vector<Rational> sum(g.order(), Rational(0));
    for (const auto& t : report.tensor) sum[t.vertex] += t.value;
    for (const auto& s : sum) c.require(s == 0, "tensor does not sum to zero");
  }
  if (c.ok) c.detail = std::to_string(graphs.size()) + " graphs";
  return c;
}

Check geodesics() {
  Check c;
  const Graph kite = gen::kite();
  const auto hop = PathMetricConfig::hop();
  const auto kite_paths = minimal_geodesics(kite, 2, 3, hop);
  c.require(distance(kite, 2, 3, hop) == 2 && kite_paths.size() == 2, "kite geodesics");
  for (const auto& p : kite_paths) c.require(p.size() == 3, "kite geodesic length");

  const std::vector<PathMetricConfig> configs = {
      hop, PathMetricConfig::curvature2d(make_rational(1, 3)), PathMetricConfig::curvature2d(make_rational(3, 4)),
      PathMetricConfig::genus4d(make_rational(1, 10)), PathMetricConfig::curvature2d(Rational(0))};
  std::size_t checked = 0;
  for (const Graph& g : generator_graphs()) {
    for (const auto& config : configs) {
      try {
        config.validate(g);
      } catch (const InputError&) {
        continue;
      }
      ++checked;
      std::vector<std::vector<std::optional<Rational>>> d;
      for (Vertex a = 0; a < g.order(); ++a) d.push_back(distances_from(g, a, config));
      for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = 0; b < g.order(); ++b) {
          c.require(d[a][b].has_value() == d[b][a].has_value(), "reachability asymmetric");
          if (!d[a][b]) continue;
          c.require(*d[a][b] >= 0 && ((*d[a][b] == 0) == (a == b)) && *d[a][b] == *d[b][a], "metric axiom");
          for (Vertex x = 0; x < g.order(); ++x) {
            if (d[b][x]) c.require(*d[a][x] <= *d[a][b] + *d[b][x], "triangle inequality");
          }
        }
      }
    }
    const auto zero = PathMetricConfig::curvature2d(Rational(0));
    for (Vertex a = 0; a < g.order(); ++a) {
      const auto hops = distances_from(g, a, hop);
      const auto flat = distances_from(g, a, zero);
      c.require(hops == flat, "c = 0 differs from hop distance");
    }
  }
  if (c.ok) c.detail = std::to_string(checked) + " (graph, config) pairs";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"Gauss-Bonnet identity", gauss_bonnet},
      {"Poincare-Hopf identity", poincare_hopf},
      {"engine equivalence and benchmark ratio", engine_equivalence},
      {"named exact values", named_values},
      {"genus lemma on cross_polytope(4)", genus_lemma},
      {"curvature as expected surface genus on cross_polytope(4)", hilbert_einstein},
      {"odd-dimension flatness", odd_dimension},
      {"Erdos-Renyi expectation", erdos_renyi},
      {"extremal search", extremal},
      {"Einstein tensor conservation", conservation},
      {"geodesic metrics", geodesics},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!result.ok) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!result.detail.empty()) std::cout << " (" << result.detail << ")";
    std::cout << " [" << timing << "]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
