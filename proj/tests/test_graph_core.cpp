#include <doctest.h>

#include <random>

#include "graphcurv/cliques.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/io.hpp"
#include "graphcurv/spanning.hpp"
#include "oracles.hpp"

using namespace graphcurv;

TEST_CASE("build_graph") {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3 == gen::complete(3));
  CHECK(k3.edge_count() == 3);

  const Graph one = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(one.edge_count() == 1);
  CHECK(one.adjacent(1, 0));

  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), InputError);
}

TEST_CASE("generators") {
  const Graph oct = gen::cross_polytope(2);
  CHECK(oct.order() == 6);
  CHECK(oct.edge_count() == 12);
  CHECK(oracle::f_vector(oct) == FVector{6, 12, 8});
  CHECK(oct == gen::octahedron());
  CHECK(oct == gen::generate("complete_multipartite(2,2,2)"));

  CHECK(gen::two_star(3) == gen::complete_bipartite(2, 3));
  CHECK(oracle::isomorphic(gen::cycle(4), gen::complete_bipartite(2, 2)));
  CHECK_FALSE(oracle::isomorphic(gen::cycle(4), gen::path(4)));

  const Graph ico = gen::icosahedron();
  CHECK(ico.edge_count() == 30);
  for (Vertex v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);

  const Graph torus = gen::torus_triangulation(4, 5);
  CHECK(torus.order() == 20);
  CHECK(torus.edge_count() == 60);

  CHECK(gen::generate("wheel(5)").edge_count() == 10);
  CHECK(gen::generate(" kite ") == gen::kite());
  CHECK(gen::generate("erdos_renyi(20,1/2,7)") == gen::erdos_renyi(20, make_rational(1, 2), 7));
  CHECK(gen::generate("erdos_renyi(20,0.5,7)") == gen::erdos_renyi(20, make_rational(1, 2), 7));
  CHECK(gen::erdos_renyi(15, 0, 3).edge_count() == 0);
  CHECK(gen::erdos_renyi(15, 1, 3).edge_count() == 105);

  CHECK_THROWS_AS(gen::generate("dodecahedron"), InputError);
  CHECK_THROWS_AS(gen::generate("cycle(2)"), InputError);
  CHECK_THROWS_AS(gen::generate("torus_triangulation(3,4)"), InputError);
  CHECK_THROWS_AS(gen::generate("cycle(4"), InputError);
  CHECK_THROWS_AS(gen::generate("erdos_renyi(5,3/2,1)"), InputError);
  CHECK_THROWS_AS(gen::generate("cross_polytope(x)"), InputError);
}

TEST_CASE("erdos_renyi edge frequency tracks p") {
  const Graph g = gen::erdos_renyi(200, make_rational(3, 10), 99);
  const double density = static_cast<double>(g.edge_count()) / (200.0 * 199.0 / 2.0);
  CHECK(density == doctest::Approx(0.3).epsilon(0.03));
}

TEST_CASE("unit_sphere") {
  const Graph oct = gen::octahedron();
  for (Vertex v = 0; v < 6; ++v) {
    const Subgraph s = unit_sphere(oct, v);
    CHECK(s.graph.order() == 4);
    CHECK(s.graph.edge_count() == 4);
    for (Vertex u = 0; u < 4; ++u) CHECK(s.graph.degree(u) == 2);
  }
  const Graph ico = gen::icosahedron();
  for (Vertex v = 0; v < 12; ++v) {
    const Graph s = unit_sphere(ico, v).graph;
    CHECK(s.order() == 5);
    CHECK(s.edge_count() == 5);
    CHECK(is_connected(s));
    for (Vertex u = 0; u < 5; ++u) CHECK(s.degree(u) == 2);
  }
  const Subgraph rays = unit_sphere(gen::star(3), 0);
  CHECK(rays.graph == gen::edgeless(3));
  CHECK(rays.to_host == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(unit_sphere(gen::star(3), 4), InputError);
}

TEST_CASE("induced_subgraph") {
  const std::vector<Vertex> s012 = {2, 0, 1};
  CHECK(induced_subgraph(gen::complete(4), s012).graph == gen::complete(3));
  const std::vector<Vertex> s02 = {0, 2};
  const Subgraph two = induced_subgraph(gen::cycle(5), s02);
  CHECK(two.graph == gen::edgeless(2));
  CHECK(two.to_host == std::vector<Vertex>{0, 2});
  CHECK(induced_subgraph(gen::cycle(5), std::vector<Vertex>{}).graph.order() == 0);
  CHECK_THROWS_AS(induced_subgraph(gen::cycle(5), std::vector<Vertex>{7}), InputError);
}

TEST_CASE("enumerate_cliques") {
  CHECK(enumerate_cliques(gen::complete(4)).f_vector == FVector{4, 6, 4, 1});
  CHECK(enumerate_cliques(gen::octahedron()).f_vector == FVector{6, 12, 8});
  CHECK(enumerate_cliques(gen::cycle(5)).f_vector == FVector{5, 5});
  CHECK(enumerate_cliques(Graph{}).f_vector.empty());
  CHECK(f_vector(gen::complete(5), 2) == FVector{5, 10, 10});

  const auto k4 = enumerate_cliques(gen::complete(4));
  const std::vector<std::vector<Vertex>> triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(k4.cliques.by_dimension[2] == triangles);
  CHECK(k4.cliques.total() == 15);

  CHECK_THROWS_AS(enumerate_cliques(gen::complete(10), std::nullopt, 100), CapacityError);
}

TEST_CASE("clique lists are complete, sorted and duplicate free") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 12, 0.5);
    const auto e = enumerate_cliques(g);
    for (const auto& dim : e.cliques.by_dimension) {
      CHECK(std::is_sorted(dim.begin(), dim.end()));
      CHECK(std::adjacent_find(dim.begin(), dim.end()) == dim.end());
      for (const auto& c : dim) {
        CHECK(std::is_sorted(c.begin(), c.end()));
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(g.adjacent(c[i], c[j]));
      }
    }
  }
}

TEST_CASE("f-vector equals brute-force subset scan for n <= 8") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = rng() % 9;
    const double p = (rng() % 10) / 9.0;
    const Graph g = oracle::random_graph(rng, n, p);
    const auto expect = oracle::f_vector(g);
    CHECK(f_vector(g) == expect);
    CHECK(enumerate_cliques(g).f_vector == expect);
  }
}

TEST_CASE("f-vector of a vertex subset matches the induced subgraph") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 70, 0.4);
    VertexSet s(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 2) s.insert(v);
    CHECK(f_vector(g, s) == f_vector(induced_subgraph(g, s).graph));
  }
}

TEST_CASE("unit sphere order equals degree") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 30, 0.3);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(unit_sphere(g, v).graph.order() == g.degree(v));
  }
}

TEST_CASE("spanning_tree_count") {
  CHECK(spanning_tree_count(gen::complete(3)).count == 3);
  CHECK(spanning_tree_count(gen::complete(4)).count == 16);
  CHECK(spanning_tree_count(gen::cycle(4)).count == 4);
  CHECK(spanning_tree_count(gen::complete(1)).count == 1);
  CHECK(spanning_tree_count(gen::complete(12)).count == BigInt("61917364224"));  // 12^10

  const auto split = spanning_tree_count(gen::edgeless(3));
  CHECK(split.disconnected);
  CHECK(split.count == 0);
  CHECK_THROWS_AS(spanning_tree_count(Graph{}), InputError);
}

TEST_CASE("spanning_tree_count agrees with exhaustive enumeration for n <= 6") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 150) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 6, 0.6);
    if (!is_connected(g)) continue;
    ++checked;
    CHECK(spanning_tree_count(g).count == oracle::spanning_trees(g));
  }
}

TEST_CASE("parse_graph examples") {
  const Graph p3 = parse_graph("0 1\n1 2", GraphFormat::edge_list);
  CHECK(p3 == gen::path(3));
  CHECK(parse_graph(R"({"n":2,"edges":[[0,1]]})", GraphFormat::json) == gen::complete(2));
  CHECK(parse_graph("# comment\n\nn 5\n0 1\n", GraphFormat::edge_list).order() == 5);
  CHECK(parse_graph("", GraphFormat::edge_list).order() == 0);

  try {
    parse_graph("0 1\n0 0\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  try {
    parse_graph("0 1\n2 x\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_graph("0 1 2", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph("n 2\n0 5", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,1]])", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,2]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,1]]})", GraphFormat::json), ParseError);
  CHECK_THROWS_AS(parse_format("graphml"), InputError);
}

TEST_CASE("serialize/parse round trip on 1000 seeded graphs") {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(rng, rng() % 21, (rng() % 100) / 100.0);
    for (auto fmt : {GraphFormat::edge_list, GraphFormat::json}) {
      REQUIRE(parse_graph(serialize_graph(g, fmt), fmt) == g);
    }
  }
}
