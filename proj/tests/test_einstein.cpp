#include <doctest.h>

#include <random>
#include <set>

#include <json.hpp>

#include "graphcurv/einstein.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/morse.hpp"
#include "oracles.hpp"

using namespace graphcurv;

namespace {

// Hamiltonian cycle count of the subgraph induced on `mask` (Held-Karp over
// paths starting at the lowest vertex), halved for direction.
std::uint64_t hamiltonian_cycles(const Graph& s, std::uint32_t mask) {
  const int k = std::popcount(mask);
  if (k < 3) return 0;
  const int start = std::countr_zero(mask);
  const std::size_t n = s.order();
  std::vector<std::vector<std::uint64_t>> paths(std::size_t{1} << n, std::vector<std::uint64_t>(n, 0));
  paths[std::uint32_t{1} << start][static_cast<std::size_t>(start)] = 1;
  for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << n); ++sub) {
    if ((sub & mask) != sub || !((sub >> start) & 1u)) continue;
    for (std::size_t end = 0; end < n; ++end) {
      const auto count = paths[sub][end];
      if (count == 0) continue;
      for (Vertex next : s.neighbors(static_cast<Vertex>(end))) {
        if (!((mask >> next) & 1u) || ((sub >> next) & 1u)) continue;
        paths[sub | (std::uint32_t{1} << next)][next] += count;
      }
    }
  }
  std::uint64_t closed = 0;
  for (Vertex end : s.neighbors(static_cast<Vertex>(start))) {
    if ((mask >> end) & 1u) closed += paths[mask][end];
  }
  return closed / 2;
}

std::uint64_t brute_cycle_count(const Graph& s) {
  std::uint64_t total = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s.order()); ++mask) total += hamiltonian_cycles(s, mask);
  return total;
}

Graph join(std::initializer_list<Graph> parts) {
  std::vector<Edge> e;
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  for (const Graph& g : parts) {
    offset.push_back(n);
    for (const Edge& x : g.edges()) e.push_back({static_cast<Vertex>(x.u + n), static_cast<Vertex>(x.v + n)});
    n += g.order();
  }
  std::size_t i = 0;
  for (const Graph& a : parts) {
    std::size_t j = 0;
    for (const Graph& b : parts) {
      if (j > i) {
        for (Vertex u = 0; u < a.order(); ++u)
          for (Vertex v = 0; v < b.order(); ++v)
            e.push_back({static_cast<Vertex>(offset[i] + u), static_cast<Vertex>(offset[j] + v)});
      }
      ++j;
    }
    ++i;
  }
  return Graph::from_edges(n, e);
}

// Two octahedra joined by a single bridging edge.
Graph bridged_octahedra() {
  std::vector<Edge> e = gen::octahedron().edges();
  for (const Edge& x : gen::octahedron().edges()) e.push_back({x.u + 6, x.v + 6});
  e.push_back({0, 6});
  return Graph::from_edges(12, e);
}

}  // namespace

TEST_CASE("enumerate_wheels examples") {
  for (Vertex c = 0; c < 12; ++c) {
    const auto w = enumerate_wheels(gen::icosahedron(), c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].rim.size() == 5);
    CHECK(w[0].center == c);
  }
  for (Vertex c = 0; c < 6; ++c) {
    const auto w = enumerate_wheels(gen::octahedron(), c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].rim.size() == 4);
  }
  for (Vertex c = 0; c < 6; ++c) CHECK(enumerate_wheels(gen::complete_bipartite(3, 3), c).empty());

  // Canonical rim: smallest vertex first, then its smaller neighbor.
  const auto w = enumerate_wheels(gen::wheel(5), 0);
  REQUIRE(w.size() == 1);
  CHECK(w[0].rim == std::vector<Vertex>{1, 2, 3, 4, 5});

  // K5: sphere K4 has 4 triangles and 3 four-cycles.
  const auto k5 = enumerate_wheels(gen::complete(5), 0);
  CHECK(k5.size() == 7);
  CHECK(enumerate_wheels(gen::complete(5), 0, Vertex{1}).size() == 6);
  CHECK(enumerate_wheels(gen::complete(5), 0, std::nullopt, 3).size() == 4);
  CHECK(std::is_sorted(k5.begin(), k5.end()));
  CHECK_THROWS_AS(enumerate_wheels(gen::complete(5), 9), InputError);
}

TEST_CASE("wheel enumeration matches Hamiltonian-cycle counting for spheres up to 10 vertices") {
  std::mt19937_64 rng(21);
  std::vector<Graph> graphs = {gen::complete(8), gen::complete(11), gen::icosahedron(), gen::cross_polytope(3),
                               gen::cross_polytope(4), gen::wheel(7)};
  for (int trial = 0; trial < 40; ++trial) graphs.push_back(oracle::random_graph(rng, 6 + rng() % 8, 0.45));
  for (const Graph& g : graphs) {
    for (Vertex c = 0; c < g.order(); ++c) {
      const Graph s = unit_sphere(g, c).graph;
      if (s.order() > 10) continue;
      const auto wheels = enumerate_wheels(g, c);
      REQUIRE(wheels.size() == brute_cycle_count(s));
      std::set<std::vector<Vertex>> distinct;
      bool valid = true;
      for (const Wheel& w : wheels) {
        distinct.insert(w.rim);
        for (std::size_t i = 0; i < w.rim.size(); ++i) {
          valid = valid && g.adjacent(c, w.rim[i]) && g.adjacent(w.rim[i], w.rim[(i + 1) % w.rim.size()]);
        }
        valid = valid && w.rim[0] == *std::min_element(w.rim.begin(), w.rim.end()) && w.rim[1] < w.rim.back();
      }
      CHECK(valid);
      CHECK(distinct.size() == wheels.size());
    }
  }
}

TEST_CASE("wheel_curvature") {
  CHECK(wheel_curvature(5) == make_rational(1, 6));
  CHECK(wheel_curvature(4) == make_rational(1, 3));
  CHECK(wheel_curvature(6) == 0);
  // Matches the hub curvature of a wheel graph once the rim is at least a square.
  for (std::size_t n = 4; n <= 9; ++n) CHECK(wheel_curvature(n) == curvature(gen::wheel(n), 0));
}

TEST_CASE("ricci, scalar and tensor examples") {
  const Graph ico = gen::icosahedron();
  for (const Edge& e : ico.edges()) CHECK(ricci(ico, e) == make_rational(1, 6));
  for (Vertex v = 0; v < 12; ++v) CHECK(scalar(ico, v) == make_rational(1, 6));
  for (Vertex v = 0; v < 12; ++v)
    for (Vertex u : ico.neighbors(v)) CHECK(einstein_tensor(ico, v, {v, u}) == 0);

  const Graph oct = gen::octahedron();
  for (const Edge& e : oct.edges()) CHECK(ricci(oct, e) == make_rational(1, 3));
  for (Vertex v = 0; v < 6; ++v) CHECK(scalar(oct, v) == make_rational(1, 3));

  for (const Edge& e : gen::cycle(5).edges()) CHECK(ricci(gen::cycle(5), e) == 0);
  CHECK(scalar(gen::star(3), 0) == 0);
  CHECK(scalar(gen::edgeless(2), 0) == 0);

  CHECK_THROWS_AS(ricci(gen::cycle(5), {0, 2}), InputError);
  CHECK_THROWS_AS(einstein_tensor(gen::cycle(5), 3, {0, 1}), InputError);

  // Kite: no sphere contains a cycle, so every wheel average is empty.
  const Graph kite = gen::kite();
  for (Vertex c = 0; c < 4; ++c) CHECK(brute_cycle_count(unit_sphere(kite, c).graph) == 0);
  CHECK(einstein_tensor(kite, 0, {0, 1}) == 0);
}

TEST_CASE("ricci on a vertex with mixed wheels") {
  // Wheel W5 plus a chord from the hub's rim making a 3-wheel and 4-wheel.
  // Center 0, rim 1..5, plus chord (1,3). S(0) = C5 + chord: cycles 0-> {1,2,3}, {1,3,4,5}, {1,2,3,4,5}.
  std::vector<Edge> e = gen::wheel(5).edges();
  e.push_back({1, 3});
  const Graph g = Graph::from_edges(6, e);
  const auto w = enumerate_wheels(g, 0);
  REQUIRE(w.size() == 3);
  // Spoke {0,2}: center 0 through 2 -> rims {1,2,3} and {1..5}; center 2 through 0:
  // S(2) = {0,1,3} with edges 0-1, 0-3, 1-3: one triangle.
  const Rational expect = (wheel_curvature(3) + wheel_curvature(5) + wheel_curvature(3)) / 3;
  CHECK(ricci(g, {0, 2}) == expect);
}

TEST_CASE("complete graphs, cycles, stars and small spheres are Einstein") {
  std::vector<Graph> einstein = {gen::icosahedron(), gen::octahedron(), gen::complete_bipartite(3, 3),
                                 gen::cycle(4), gen::two_star(3)};
  for (std::size_t n = 3; n <= 9; ++n) einstein.push_back(gen::cycle(n));
  for (std::size_t n = 1; n <= 7; ++n) einstein.push_back(gen::complete(n));
  for (std::size_t k = 1; k <= 6; ++k) einstein.push_back(gen::star(k));
  for (const Graph& g : einstein) {
    const auto r = is_einstein(g);
    CHECK(r.is_einstein);
    CHECK(r.max_abs_tensor == 0);
  }
  CHECK_FALSE(is_einstein(gen::wheel(5)).is_einstein);
  CHECK(is_einstein(gen::kite()).is_einstein);
}

TEST_CASE("conservation law on every test graph") {
  std::mt19937_64 rng(10);
  std::vector<Graph> graphs = {gen::wheel(5), gen::wheel(7), gen::kite(), gen::cross_polytope(3), bridged_octahedra()};
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(oracle::random_graph(rng, 3 + rng() % 10, 0.5));
  for (const Graph& g : graphs) {
    const auto r = is_einstein(g);
    std::vector<Rational> balance(g.order(), Rational(0));
    for (const auto& t : r.tensor) balance[t.vertex] += t.value;
    for (const auto& b : balance) CHECK(b == 0);
  }
}

TEST_CASE("report agrees with the pointwise operations") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + rng() % 7, 0.55);
    for (auto mode : {ScalarMode::incident_ricci, ScalarMode::wheel_mean}) {
      const EinsteinOptions options{std::nullopt, mode};
      const auto r = is_einstein(g, options);
      for (const auto& [e, value] : r.ricci) CHECK(ricci(g, e, options) == value);
      for (Vertex v = 0; v < g.order(); ++v) CHECK(scalar(g, v, options) == r.scalar[v]);
      for (const auto& t : r.tensor) CHECK(einstein_tensor(g, t.vertex, t.edge, options) == t.value);
    }
  }
}

TEST_CASE("2-dimensional geometric graphs: ricci is the mean endpoint curvature") {
  for (const Graph& g : {gen::icosahedron(), gen::octahedron(), gen::torus_triangulation(4, 5),
                         join({gen::cycle(5), gen::edgeless(2)}), join({gen::cycle(7), gen::edgeless(2)})}) {
    REQUIRE(is_geometric(g, 2).is_geometric);
    for (const Edge& e : g.edges()) CHECK(ricci(g, e) == (curvature(g, e.u) + curvature(g, e.v)) / 2);
  }
}

TEST_CASE("constant wheel curvature implies Einstein when every edge is a spoke") {
  for (const Graph& g : {gen::icosahedron(), gen::octahedron(), gen::torus_triangulation(4, 4),
                         gen::cross_polytope(3), gen::wheel(4)}) {
    std::set<Rational> ks;
    std::set<Edge> spokes;
    for (Vertex c = 0; c < g.order(); ++c) {
      for (const Wheel& w : enumerate_wheels(g, c)) {
        ks.insert(wheel_curvature(w));
        for (Vertex r : w.rim) spokes.insert({std::min(c, r), std::max(c, r)});
      }
    }
    if (ks.size() == 1 && spokes.size() == g.edge_count()) CHECK(is_einstein(g).is_einstein);
  }
  // With the empty-average convention an edge in no wheel breaks the
  // equivalence even though every vertex has a wheel of curvature 1/3.
  const Graph b = bridged_octahedra();
  for (Vertex c = 0; c < b.order(); ++c) CHECK_FALSE(enumerate_wheels(b, c).empty());
  CHECK(ricci(b, {0, 6}) == 0);
  CHECK_FALSE(is_einstein(b).is_einstein);
}

TEST_CASE("wheel_mean scalar mode") {
  const EinsteinOptions options{std::nullopt, ScalarMode::wheel_mean};
  CHECK(scalar(gen::icosahedron(), 3, options) == make_rational(1, 6));
  CHECK(is_einstein(gen::icosahedron(), options).is_einstein);
  CHECK(scalar(gen::star(3), 0, options) == 0);
}

TEST_CASE("rim cap marks the report approximate") {
  const EinsteinOptions capped{std::size_t{3}, ScalarMode::incident_ricci};
  const auto r = is_einstein(gen::complete(6), capped);
  CHECK(r.approximate);
  CHECK(r.ricci.front().second == make_rational(1, 2));
  CHECK_FALSE(is_einstein(gen::complete(6)).approximate);
}

TEST_CASE("EinsteinReport json") {
  const auto doc = nlohmann::json::parse(to_json(is_einstein(gen::octahedron())));
  CHECK(doc["einstein"] == true);
  CHECK(doc["ricci"].size() == 12);
  CHECK(doc["ricci"][0][2] == "1/3");
  CHECK(doc["scalar"][0] == "1/3");
}
