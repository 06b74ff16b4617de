#include "graphcurv/einstein.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "graphcurv/errors.hpp"

namespace graphcurv {
namespace {

Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

void require_edge(const Graph& g, Edge e) {
  require_vertex(g, e.u);
  require_vertex(g, e.v);
  if (e.u == e.v || !g.adjacent(e.u, e.v)) {
    throw InputError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
}

// Sum and count of wheel curvatures per spoke and per vertex.
struct WheelTally {
  std::map<Edge, std::pair<Rational, std::size_t>> spoke;
  std::vector<std::pair<Rational, std::size_t>> vertex;
  bool approximate = false;
};

WheelTally tally(const Graph& g, std::optional<std::size_t> max_rim) {
  WheelTally t;
  t.vertex.assign(g.order(), {Rational(0), 0});
  for (Vertex c = 0; c < g.order(); ++c) {
    if (max_rim && g.degree(c) > *max_rim) t.approximate = true;
    for (const Wheel& w : enumerate_wheels(g, c, std::nullopt, max_rim)) {
      const Rational k = wheel_curvature(w);
      t.vertex[c].first += k;
      ++t.vertex[c].second;
      for (Vertex r : w.rim) {
        auto& s = t.spoke[normalized({c, r})];
        s.first += k;
        ++s.second;
        t.vertex[r].first += k;
        ++t.vertex[r].second;
      }
    }
  }
  return t;
}

Rational mean(const std::pair<Rational, std::size_t>& sum_count) {
  if (sum_count.second == 0) return 0;
  Rational m = sum_count.first / static_cast<unsigned long>(sum_count.second);
  m.canonicalize();
  return m;
}

Rational ricci_from(const WheelTally& t, Edge e) {
  const auto it = t.spoke.find(normalized(e));
  return it == t.spoke.end() ? Rational(0) : mean(it->second);
}

Rational scalar_from(const Graph& g, const WheelTally& t, Vertex v, ScalarMode mode) {
  if (mode == ScalarMode::wheel_mean) return mean(t.vertex[v]);
  if (g.degree(v) == 0) return 0;
  Rational sum = 0;
  for (Vertex u : g.neighbors(v)) sum += ricci_from(t, {v, u});
  sum /= static_cast<unsigned long>(g.degree(v));
  sum.canonicalize();
  return sum;
}

}  // namespace

std::vector<Wheel> enumerate_wheels(const Graph& g, Vertex center, std::optional<Vertex> through,
                                    std::optional<std::size_t> max_rim) {
  require_vertex(g, center);
  if (through) require_vertex(g, *through);
  const Subgraph sphere = unit_sphere(g, center);
  const Graph& s = sphere.graph;
  const std::size_t cap = max_rim.value_or(s.order());

  std::vector<Wheel> out;
  std::vector<Vertex> path;
  std::vector<char> on_path(s.order(), 0);
  // Cycles whose smallest vertex is `start`; a cycle is recorded once, in the
  // direction where its second vertex is smaller than its last.
  std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex v) {
    for (Vertex u : s.neighbors(v)) {
      if (u == start && path.size() >= 3 && path[1] < path.back()) {
        Wheel w{center, {}};
        for (Vertex p : path) w.rim.push_back(sphere.to_host[p]);
        if (!through || std::find(w.rim.begin(), w.rim.end(), *through) != w.rim.end()) out.push_back(std::move(w));
      }
      if (u <= start || on_path[u] || path.size() >= cap) continue;
      on_path[u] = 1;
      path.push_back(u);
      extend(start, u);
      path.pop_back();
      on_path[u] = 0;
    }
  };
  for (Vertex start = 0; start < s.order(); ++start) {
    path = {start};
    on_path[start] = 1;
    extend(start, start);
    on_path[start] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational wheel_curvature(std::size_t rim_length) {
  return 1 - make_rational(static_cast<long>(rim_length), 6);
}

Rational ricci(const Graph& g, Edge e, const EinsteinOptions& options) {
  require_edge(g, e);
  Rational sum = 0;
  std::size_t count = 0;
  for (const auto& [c, r] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    for (const Wheel& w : enumerate_wheels(g, c, r, options.max_rim)) {
      sum += wheel_curvature(w);
      ++count;
    }
  }
  return mean({sum, count});
}

Rational scalar(const Graph& g, Vertex v, const EinsteinOptions& options) {
  require_vertex(g, v);
  if (options.scalar_mode == ScalarMode::incident_ricci) {
    if (g.degree(v) == 0) return 0;
    Rational sum = 0;
    for (Vertex u : g.neighbors(v)) sum += ricci(g, {v, u}, options);
    sum /= static_cast<unsigned long>(g.degree(v));
    sum.canonicalize();
    return sum;
  }
  Rational sum = 0;
  std::size_t count = 0;
  for (const Wheel& w : enumerate_wheels(g, v, std::nullopt, options.max_rim)) {
    sum += wheel_curvature(w);
    ++count;
  }
  for (Vertex c : g.neighbors(v)) {
    for (const Wheel& w : enumerate_wheels(g, c, v, options.max_rim)) {
      sum += wheel_curvature(w);
      ++count;
    }
  }
  return mean({sum, count});
}

Rational einstein_tensor(const Graph& g, Vertex v, Edge e, const EinsteinOptions& options) {
  require_edge(g, e);
  if (e.u != v && e.v != v) {
    throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not incident to vertex " +
                     std::to_string(v));
  }
  Rational t = ricci(g, e, options) - scalar(g, v, options);
  t.canonicalize();
  return t;
}

EinsteinReport is_einstein(const Graph& g, const EinsteinOptions& options) {
  const WheelTally t = tally(g, options.max_rim);
  EinsteinReport r;
  r.approximate = t.approximate;
  r.max_abs_tensor = 0;
  for (const Edge& e : g.edges()) r.ricci.emplace_back(e, ricci_from(t, e));
  for (Vertex v = 0; v < g.order(); ++v) {
    r.scalar.push_back(scalar_from(g, t, v, options.scalar_mode));
    Rational balance = 0;
    for (Vertex u : g.neighbors(v)) {
      Rational value = ricci_from(t, {v, u}) - r.scalar.back();
      value.canonicalize();
      balance += value;
      if (value != 0) r.is_einstein = false;
      if (abs(value) > r.max_abs_tensor) r.max_abs_tensor = abs(value);
      r.tensor.push_back({v, normalized({v, u}), value});
    }
    if (options.scalar_mode == ScalarMode::incident_ricci && balance != 0) {
      throw ConsistencyError("Einstein tensor does not sum to zero at vertex " + std::to_string(v));
    }
  }
  return r;
}

std::string to_json(const EinsteinReport& r) {
  using nlohmann::json;
  json ricci = json::array(), scalar = json::array(), tensor = json::array();
  for (const auto& [e, value] : r.ricci) ricci.push_back({e.u, e.v, to_string(value)});
  for (const auto& s : r.scalar) scalar.push_back(to_string(s));
  for (const auto& t : r.tensor) tensor.push_back({t.vertex, t.edge.u, t.edge.v, to_string(t.value)});
  return json{{"ricci", ricci},
              {"scalar", scalar},
              {"tensor", tensor},
              {"einstein", r.is_einstein},
              {"max_abs_tensor", to_string(r.max_abs_tensor)},
              {"approximate", r.approximate}}
      .dump();
}

}  // namespace graphcurv
