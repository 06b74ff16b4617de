#include "graphcurv/geodesic.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include <json.hpp>

#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/level_surface.hpp"

namespace graphcurv {
namespace {

struct SearchState {
  std::vector<std::optional<Rational>> dist;
  std::vector<std::size_t> hops;      // fewest edges among minimal paths
  std::vector<std::uint64_t> count;   // number of minimal paths, saturating
  std::vector<std::vector<Vertex>> parents;
};

Rational edge_weight(const std::vector<Rational>& t, EndpointWeight endpoints, Vertex u, Vertex v) {
  if (endpoints == EndpointWeight::half) return 1 + (t[u] + t[v]) / 2;
  return 1 + t[v];
}

// Dijkstra with exact weights, keeping every tight predecessor.
SearchState search(const Graph& g, Vertex a, const PathMetricConfig& config) {
  require_vertex(g, a);
  config.validate(g);
  const std::vector<Rational> t = vertex_terms(g, config);
  const std::size_t n = g.order();
  SearchState s{std::vector<std::optional<Rational>>(n), std::vector<std::size_t>(n, 0),
                std::vector<std::uint64_t>(n, 0), std::vector<std::vector<Vertex>>(n)};
  s.dist[a] = config.endpoints() == EndpointWeight::half ? Rational(0) : t[a];
  s.count[a] = 1;

  using Item = std::pair<Rational, Vertex>;
  auto greater = [](const Item& x, const Item& y) { return x.first > y.first || (x.first == y.first && x.second > y.second); };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> queue(greater);
  std::vector<bool> done(n, false);
  queue.push({*s.dist[a], a});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (done[u] || d != *s.dist[u]) continue;
    done[u] = true;
    for (Vertex v : g.neighbors(u)) {
      if (done[v]) continue;
      const Rational candidate = d + edge_weight(t, config.endpoints(), u, v);
      if (!s.dist[v] || candidate < *s.dist[v]) {
        s.dist[v] = candidate;
        s.parents[v] = {u};
        s.count[v] = s.count[u];
        s.hops[v] = s.hops[u] + 1;
        queue.push({candidate, v});
      } else if (candidate == *s.dist[v]) {
        s.parents[v].push_back(u);
        s.count[v] = std::min<std::uint64_t>(s.count[v] + s.count[u], UINT64_MAX / 2);
        s.hops[v] = std::min(s.hops[v], s.hops[u] + 1);
      }
    }
  }
  return s;
}

std::size_t surface_dimension_of(const Graph& g) {
  const auto d = geometric_dimension(g);
  if (!d || (*d != 3 && *d != 4)) {
    throw DomainError("the genus action needs a 3- or 4-dimensional geometric graph");
  }
  return *d;
}

}  // namespace

PathMetricConfig::PathMetricConfig(MetricMode mode, Rational parameter, EndpointWeight endpoints)
    : mode_(mode), parameter_(std::move(parameter)), endpoints_(endpoints) {
  if (parameter_ < 0) throw InputError("metric parameter must be nonnegative, got " + to_string(parameter_));
}

PathMetricConfig PathMetricConfig::hop() { return {MetricMode::hop, Rational(0), EndpointWeight::half}; }

PathMetricConfig PathMetricConfig::curvature2d(Rational c, EndpointWeight endpoints) {
  return {MetricMode::curvature2d, std::move(c), endpoints};
}

PathMetricConfig PathMetricConfig::genus4d(Rational epsilon, EndpointWeight endpoints) {
  return {MetricMode::genus4d, std::move(epsilon), endpoints};
}

std::vector<Rational> vertex_terms(const Graph& g, const PathMetricConfig& config) {
  std::vector<Rational> t(g.order(), Rational(0));
  if (config.mode() == MetricMode::hop || config.parameter() == 0) return t;
  const Rational scale = config.mode() == MetricMode::curvature2d ? Rational(-config.parameter())
                                                                  : Rational(2 * config.parameter());
  for (Vertex x = 0; x < g.order(); ++x) t[x] = scale * curvature(g, x);
  return t;
}

void PathMetricConfig::validate(const Graph& g) const {
  const auto t = vertex_terms(g, *this);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (1 + t[x] <= 0) {
      throw InputError("metric parameter " + to_string(parameter_) + " too large: vertex " + std::to_string(x) +
                       " has weight contribution 1 + (" + to_string(t[x]) + ") <= 0");
    }
  }
}

void require_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) throw InputError("empty path");
  for (Vertex v : path) require_vertex(g, v);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.adjacent(path[i], path[i + 1])) {
      throw InputError("not a path: " + std::to_string(path[i]) + " and " + std::to_string(path[i + 1]) +
                       " are not adjacent");
    }
  }
}

Rational genus_action(const Graph& g, std::span<const Vertex> path) {
  require_path(g, path);
  if (surface_dimension_of(g) == 3) return Rational(0);
  Rational total = 0;
  for (Vertex x : path) total += curvature(g, x);
  return 2 - 2 * total;
}

Estimate genus_action_sampled(const Graph& g, std::span<const Vertex> path, std::size_t samples, std::uint64_t seed) {
  require_path(g, path);
  if (samples == 0) throw InputError("genus_action_sampled requires at least one sample");
  const std::size_t d = surface_dimension_of(g);
  const CenterSurfaces surfaces(g);
  std::vector<double> values;
  values.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const VertexFunction f = sample_function(g, sample_seed(seed, s));
    std::int64_t chi_sum = 0;
    for (Vertex x : path) chi_sum += euler_characteristic(surfaces.build(f, x).graph);
    // genus(B) = 1 - chi(B)/2, so 2 - 2 sum genus = 2 - 2 len + sum chi(B).
    const double value = d == 4 ? 2.0 - 2.0 * static_cast<double>(path.size()) + static_cast<double>(chi_sum)
                                : static_cast<double>(chi_sum);
    values.push_back(value);
  }
  return summarize(values);
}

Rational genus_path_action(const Graph& g, std::span<const Vertex> path, const Rational& epsilon) {
  const Rational s = genus_action(g, path);
  return static_cast<long>(path.size() - 1) - epsilon * s;
}

Rational path_length(const Graph& g, std::span<const Vertex> path, const PathMetricConfig& config) {
  require_path(g, path);
  config.validate(g);
  const auto t = vertex_terms(g, config);
  Rational length = config.endpoints() == EndpointWeight::half ? Rational(0) : t[path[0]];
  for (std::size_t k = 0; k + 1 < path.size(); ++k) length += edge_weight(t, config.endpoints(), path[k], path[k + 1]);
  return length;
}

std::vector<std::optional<Rational>> distances_from(const Graph& g, Vertex a, const PathMetricConfig& config) {
  return search(g, a, config).dist;
}

Rational distance(const Graph& g, Vertex a, Vertex b, const PathMetricConfig& config) {
  require_vertex(g, b);
  const auto s = search(g, a, config);
  if (!s.dist[b]) {
    throw DomainError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not connected");
  }
  return *s.dist[b];
}

std::vector<Path> minimal_geodesics(const Graph& g, Vertex a, Vertex b, const PathMetricConfig& config,
                                    std::size_t max_paths) {
  require_vertex(g, b);
  auto s = search(g, a, config);
  if (!s.dist[b]) {
    throw DomainError("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not connected");
  }
  if (s.count[b] > max_paths) {
    throw CapacityError(std::to_string(s.count[b]) + " minimal geodesics exceed the limit of " +
                        std::to_string(max_paths));
  }
  std::vector<Path> out;
  Path reversed{b};
  auto unfold = [&](auto&& self, Vertex v) -> void {
    if (v == a) {
      out.emplace_back(reversed.rbegin(), reversed.rend());
      return;
    }
    for (Vertex p : s.parents[v]) {
      reversed.push_back(p);
      self(self, p);
      reversed.pop_back();
    }
  };
  unfold(unfold, b);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t injectivity_radius(const Graph& g, Vertex v, const PathMetricConfig& config) {
  const auto s = search(g, v, config);
  std::size_t eccentricity = 0;
  std::optional<std::size_t> first_tie;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!s.dist[w] || w == v) continue;
    eccentricity = std::max(eccentricity, s.hops[w]);
    if (s.count[w] >= 2) first_tie = std::min(first_tie.value_or(s.hops[w]), s.hops[w]);
  }
  return first_tie ? *first_tie - 1 : eccentricity;
}

std::string to_json(Rational distance_value, const std::vector<Path>& geodesics) {
  nlohmann::ordered_json doc;
  doc["distance"] = to_string(distance_value);
  doc["geodesics"] = geodesics;
  return doc.dump();
}

}  // namespace graphcurv
