#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

/// f-vector (v_0, v_1, ..., v_d): v_k counts the (k+1)-cliques. Trailing
/// zeros are never stored, so the empty graph has an empty f-vector.
using FVector = std::vector<std::uint64_t>;

/// Every clique of a graph grouped by dimension (size - 1). Each clique is a
/// sorted vertex list and each dimension's list is lexicographically sorted.
struct CliqueSet {
  std::vector<std::vector<std::vector<Vertex>>> by_dimension;

  std::size_t total() const noexcept {
    std::size_t t = 0;
    for (const auto& d : by_dimension) t += d.size();
    return t;
  }
};

struct CliqueEnumeration {
  CliqueSet cliques;
  FVector f_vector;
};

inline constexpr std::size_t kDefaultCliqueCapacity = 50'000'000;

/// Counts cliques without materializing them. max_dimension caps the largest
/// simplex dimension counted.
FVector f_vector(const Graph& g, std::optional<std::size_t> max_dimension = std::nullopt);

/// f-vector of the subgraph induced on subset (subset.universe() == order).
FVector f_vector(const Graph& g, const VertexSet& subset);

/// Lists every clique up to max_dimension in lexicographic order. Throws
/// CapacityError, carrying the partial counts in its message, once more than
/// capacity cliques would be stored.
CliqueEnumeration enumerate_cliques(const Graph& g,
                                    std::optional<std::size_t> max_dimension = std::nullopt,
                                    std::size_t capacity = kDefaultCliqueCapacity);

/// sum_k (-1)^k v_k.
std::int64_t alternating_sum(const FVector& f);

}  // namespace graphcurv
