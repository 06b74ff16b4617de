#include "graphcurv/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>

#include "graphcurv/errors.hpp"
#include "graphcurv/rng.hpp"

namespace graphcurv::gen {
namespace {

Vertex vx(std::size_t i) { return static_cast<Vertex>(i); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

Graph edgeless(std::size_t n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({vx(i), vx((i + 1) % n)});
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({vx(i), vx(i + 1)});
  return Graph::from_edges(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({vx(i), vx(j)});
  }
  return Graph::from_edges(n, e);
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  std::vector<std::size_t> part;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) part.insert(part.end(), part_sizes[p], p);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (part[i] != part[j]) e.push_back({vx(i), vx(j)});
    }
  }
  return Graph::from_edges(part.size(), e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  const std::size_t sizes[] = {a, b};
  return complete_multipartite(sizes);
}

Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= k; ++i) e.push_back({0, vx(i)});
  return Graph::from_edges(k + 1, e);
}

Graph wheel(std::size_t n) {
  require(n >= 3, "wheel requires a rim of length >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({0, vx(i + 1)});
    e.push_back({vx(i + 1), vx((i + 1) % n + 1)});
  }
  return Graph::from_edges(n + 1, e);
}

Graph cross_polytope(std::size_t d) {
  require(d >= 1, "cross_polytope requires d >= 1");
  const std::vector<std::size_t> sizes(d + 1, 2);
  return complete_multipartite(sizes);
}

Graph octahedron() { return cross_polytope(2); }

Graph icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    const Vertex up = vx(1 + i), up_next = vx(1 + (i + 1) % 5);
    const Vertex lo = vx(6 + i), lo_next = vx(6 + (i + 1) % 5);
    e.push_back({0, up});
    e.push_back({up, up_next});
    e.push_back({up, lo});
    e.push_back({up, lo_next});
    e.push_back({lo, lo_next});
    e.push_back({lo, 11});
  }
  return Graph::from_edges(12, e);
}

Graph kite() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

Graph two_star(std::size_t k) { return complete_bipartite(2, k); }

Graph torus_triangulation(std::size_t a, std::size_t b) {
  require(a >= 4 && b >= 4, "torus_triangulation requires a, b >= 4");
  auto id = [&](std::size_t i, std::size_t j) { return vx((i % a) * b + (j % b)); };
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      e.push_back({id(i, j), id(i + 1, j)});
      e.push_back({id(i, j), id(i, j + 1)});
      e.push_back({id(i, j), id(i + 1, j + 1)});
    }
  }
  return Graph::from_edges(a * b, e);
}

Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed) {
  require(p >= 0 && p <= 1, "erdos_renyi requires 0 <= p <= 1");
  // Edge present iff the top 53 hash bits fall below ceil(p * 2^53).
  Rational scaled = p * Rational(BigInt(1) << 53);
  BigInt threshold;
  mpz_cdiv_q(threshold.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const auto cut = static_cast<std::uint64_t>(threshold.get_d());
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if ((counter_hash(seed, u, v) >> 11) < cut) e.push_back({vx(u), vx(v)});
    }
  }
  return Graph::from_edges(n, e);
}

namespace {

struct Args {
  std::string family;
  std::vector<std::string> values;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Args split(std::string_view spec) {
  Args a;
  const std::string s = trim(spec);
  const auto open = s.find('(');
  if (open == std::string::npos) {
    a.family = s;
    return a;
  }
  if (s.back() != ')') throw InputError("generator spec '" + s + "' is missing ')'");
  a.family = trim(std::string_view(s).substr(0, open));
  const std::string inner = s.substr(open + 1, s.size() - open - 2);
  if (trim(inner).empty()) return a;
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    a.values.push_back(trim(std::string_view(inner).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return a;
}

std::uint64_t to_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw InputError("expected a nonnegative integer, got '" + s + "'");
  return v;
}

void arity(const Args& a, std::size_t lo, std::size_t hi) {
  if (a.values.size() < lo || a.values.size() > hi) {
    throw InputError("wrong number of parameters for generator '" + a.family + "'");
  }
}

using Builder = std::function<Graph(const Args&)>;

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r = {
      {"edgeless", [](const Args& a) { arity(a, 1, 1); return edgeless(to_u64(a.values[0])); }},
      {"cycle", [](const Args& a) { arity(a, 1, 1); return cycle(to_u64(a.values[0])); }},
      {"path", [](const Args& a) { arity(a, 1, 1); return path(to_u64(a.values[0])); }},
      {"complete", [](const Args& a) { arity(a, 1, 1); return complete(to_u64(a.values[0])); }},
      {"complete_multipartite",
       [](const Args& a) {
         arity(a, 1, 64);
         std::vector<std::size_t> sizes;
         for (const auto& v : a.values) sizes.push_back(to_u64(v));
         return complete_multipartite(sizes);
       }},
      {"complete_bipartite",
       [](const Args& a) { arity(a, 2, 2); return complete_bipartite(to_u64(a.values[0]), to_u64(a.values[1])); }},
      {"star", [](const Args& a) { arity(a, 1, 1); return star(to_u64(a.values[0])); }},
      {"wheel", [](const Args& a) { arity(a, 1, 1); return wheel(to_u64(a.values[0])); }},
      {"cross_polytope", [](const Args& a) { arity(a, 1, 1); return cross_polytope(to_u64(a.values[0])); }},
      {"octahedron", [](const Args& a) { arity(a, 0, 0); return octahedron(); }},
      {"icosahedron", [](const Args& a) { arity(a, 0, 0); return icosahedron(); }},
      {"kite", [](const Args& a) { arity(a, 0, 0); return kite(); }},
      {"two_star", [](const Args& a) { arity(a, 1, 1); return two_star(to_u64(a.values[0])); }},
      {"torus_triangulation",
       [](const Args& a) { arity(a, 2, 2); return torus_triangulation(to_u64(a.values[0]), to_u64(a.values[1])); }},
      {"erdos_renyi",
       [](const Args& a) {
         arity(a, 3, 3);
         return erdos_renyi(to_u64(a.values[0]), parse_rational(a.values[1]), to_u64(a.values[2]));
       }},
  };
  return r;
}

}  // namespace

Graph generate(std::string_view spec) {
  const Args a = split(spec);
  const auto& r = registry();
  const auto it = r.find(a.family);
  if (it == r.end()) throw InputError("unknown graph family '" + a.family + "'");
  return it->second(a);
}

std::vector<std::string> families() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

}  // namespace graphcurv::gen
