#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

/// A center joined to a simple rim cycle inside its unit sphere. The rim is
/// stored in its lexicographically smallest rotation/reflection: smallest
/// vertex first, then the smaller of its two cycle neighbors.
struct Wheel {
  Vertex center = 0;
  std::vector<Vertex> rim;
  friend auto operator<=>(const Wheel&, const Wheel&) = default;
};

/// Every simple cycle (length >= 3) of S(center), optionally only those
/// through a given rim vertex and no longer than max_rim, sorted by rim.
std::vector<Wheel> enumerate_wheels(const Graph& g, Vertex center, std::optional<Vertex> through = std::nullopt,
                                    std::optional<std::size_t> max_rim = std::nullopt);

/// Curvature of a wheel center with rim length n: 1 - n/6.
Rational wheel_curvature(std::size_t rim_length);
inline Rational wheel_curvature(const Wheel& w) { return wheel_curvature(w.rim.size()); }

enum class ScalarMode {
  incident_ricci,  // mean of ricci over incident edges (default)
  wheel_mean       // mean of wheel curvature over wheels containing the vertex
};

struct EinsteinOptions {
  std::optional<std::size_t> max_rim;
  ScalarMode scalar_mode = ScalarMode::incident_ricci;
};

/// Mean wheel curvature over wheels having e as a spoke (centered at one
/// endpoint, rim through the other); 0 when there are none. Throws
/// InputError if e is not an edge.
Rational ricci(const Graph& g, Edge e, const EinsteinOptions& options = {});

/// Per the scalar mode; isolated vertices (or no wheels in wheel_mean mode)
/// give 0.
Rational scalar(const Graph& g, Vertex v, const EinsteinOptions& options = {});

/// ricci(e) - scalar(v) for an edge e incident to v; InputError otherwise.
Rational einstein_tensor(const Graph& g, Vertex v, Edge e, const EinsteinOptions& options = {});

struct TensorEntry {
  Vertex vertex;
  Edge edge;
  Rational value;
};

struct EinsteinReport {
  std::vector<std::pair<Edge, Rational>> ricci;  // g.edges() order
  std::vector<Rational> scalar;                   // by vertex
  std::vector<TensorEntry> tensor;                // by vertex, then edge
  bool is_einstein = true;
  Rational max_abs_tensor;
  /// Set when a rim cap may have hidden longer wheels.
  bool approximate = false;
};

/// Full report with exact arithmetic; Einstein iff every tensor entry is 0.
/// Throws ConsistencyError if the tensor fails to sum to zero at a vertex
/// (only possible in incident_ricci mode).
EinsteinReport is_einstein(const Graph& g, const EinsteinOptions& options = {});

/// {"ricci": [[u, v, "p/q"], ...], "scalar": ["p/q", ...], "tensor": [[v, u, w, "p/q"], ...],
///  "einstein": bool, "max_abs_tensor": "p/q", "approximate": bool}
std::string to_json(const EinsteinReport& r);

}  // namespace graphcurv
