#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcurv/graph.hpp"

namespace graphcurv {

enum class ExtremeMode { min, max };
enum class SearchMethod { exhaustive, anneal };

struct SearchResult {
  std::size_t order = 0;
  ExtremeMode mode = ExtremeMode::min;
  bool connected_only = true;
  std::int64_t best_value = 0;
  std::vector<Graph> witnesses;
  std::vector<std::optional<bool>> einstein;  // filled by einstein_filter
  SearchMethod method = SearchMethod::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
};

struct ExtremalPair {
  SearchResult min;
  SearchResult max;
};

inline constexpr std::size_t kExhaustiveMaxOrder = 7;
inline constexpr std::size_t kMaxWitnesses = 10;

/// Scans every labeled graph on n vertices. Witnesses are pairwise
/// non-isomorphic, in canonical labeling, ordered by the first labeled graph
/// of each class met in the scan; at most kMaxWitnesses per side. The result
/// does not depend on `threads`. Throws CapacityError for n > 7.
ExtremalPair exhaustive_extremal(std::size_t n, bool connected_only = true, unsigned threads = 1);

struct AnnealSchedule {
  std::size_t steps = 100000;
  double t0 = 2.0;
  double t1 = 0.05;
};

/// Simulated annealing over labeled graphs on n vertices with single edge-flip
/// proposals and temperature t0 (t1/t0)^(s/(steps-1)). Step 0 evaluates the
/// start state (a random spanning path plus G(n,1/2) edges when connected,
/// plain G(n,1/2) otherwise); every later step proposes one flip. Flips that
/// disconnect the graph are rejected when connected_only. Returns the
/// best state seen; its labeling is canonicalized for n <= 8.
SearchResult anneal_extremal(std::size_t n, ExtremeMode mode, const AnnealSchedule& schedule,
                             bool connected_only, std::uint64_t seed);

/// Independent chains with seeds counter_hash(seed, chain), run on up to
/// `threads` workers; returns the best chain (lowest chain index on ties)
/// with evaluations summed over all chains.
SearchResult anneal_extremal(std::size_t n, ExtremeMode mode, const AnnealSchedule& schedule,
                             bool connected_only, std::uint64_t seed, std::size_t chains, unsigned threads);

struct MonotonicityRow {
  std::size_t n;
  std::int64_t min;
  std::int64_t max;
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  bool min_nonincreasing = true;
  bool max_nondecreasing = true;
  bool holds() const { return min_nonincreasing && max_nondecreasing; }
};

/// Connected extrema for n = 2..n_max. Throws CapacityError for n_max > 7.
MonotonicityReport monotonicity_report(std::size_t n_max, unsigned threads = 1);

/// Fills result.einstein with is_einstein for every witness.
SearchResult einstein_filter(SearchResult result);

/// Relabeling whose edge set is lexicographically largest as a bit string
/// over pairs (0,1), (0,2), ..., (n-2,n-1). Isomorphic graphs share it.
/// Throws CapacityError for n > 9.
Graph canonical_form(const Graph& g);

std::string to_string(ExtremeMode mode);
ExtremeMode parse_extreme_mode(const std::string& text);

std::string to_json(const SearchResult& r);
std::string to_json(const MonotonicityReport& r);

}  // namespace graphcurv
