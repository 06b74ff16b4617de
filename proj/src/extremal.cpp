#include "graphcurv/extremal.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "graphcurv/einstein.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/euler.hpp"
#include "graphcurv/io.hpp"
#include "graphcurv/rng.hpp"

namespace graphcurv {
namespace {

// Graphs on at most 9 vertices as 9-bit adjacency rows.
using SmallRows = std::array<std::uint32_t, 9>;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Pair (u,v), u < v, in the order (0,1), (0,2), ..., (n-2,n-1).
std::vector<std::pair<Vertex, Vertex>> pair_list(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

SmallRows rows_of_mask(std::uint64_t mask, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  SmallRows rows{};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1u) {
      rows[pairs[i].first] |= 1u << pairs[i].second;
      rows[pairs[i].second] |= 1u << pairs[i].first;
    }
  }
  return rows;
}

bool small_connected(const SmallRows& rows, std::size_t n) {
  if (n == 0) return false;
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Alternating clique count: each clique on k vertices contributes (-1)^(k-1).
std::int64_t small_chi(const SmallRows& rows, std::uint32_t candidates, int sign) {
  std::int64_t total = 0;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += sign;
    total += small_chi(rows, candidates & rows[static_cast<std::size_t>(v)], -sign);
  }
  return total;
}

std::uint64_t canonical_code(const SmallRows& rows, std::size_t n) {
  const std::size_t bits = pair_count(n);
  std::array<Vertex, 9> perm{};
  std::iota(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n), Vertex{0});
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    std::size_t position = bits;
    for (std::size_t u = 0; u < n; ++u) {
      const std::uint32_t row = rows[perm[u]];
      for (std::size_t v = u + 1; v < n; ++v) {
        --position;
        if ((row >> perm[v]) & 1u) code |= std::uint64_t{1} << position;
      }
    }
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n)));
  return best;
}

Graph graph_of_code(std::uint64_t code, std::size_t n) {
  std::vector<Edge> edges;
  std::size_t position = pair_count(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      --position;
      if ((code >> position) & 1u) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

SmallRows small_rows(const Graph& g) {
  SmallRows rows{};
  for (const Edge& e : g.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  return rows;
}

// First kMaxWitnesses isomorphism classes at the best value, keyed by the
// smallest labeled mask seen for each.
struct SideTally {
  bool have = false;
  std::int64_t best = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;  // (first mask, canonical code)

  void offer(std::int64_t value, std::uint64_t mask, const SmallRows& rows, std::size_t n, bool minimize) {
    if (!have || (minimize ? value < best : value > best)) {
      have = true;
      best = value;
      classes.clear();
    } else if (value != best) {
      return;
    }
    if (classes.size() >= kMaxWitnesses) return;
    const std::uint64_t code = canonical_code(rows, n);
    for (const auto& c : classes) {
      if (c.second == code) return;
    }
    classes.emplace_back(mask, code);
  }

  void merge(const SideTally& other, bool minimize) {
    if (!other.have) return;
    if (!have || (minimize ? other.best < best : other.best > best)) {
      *this = other;
      return;
    }
    if (other.best != best) return;
    for (const auto& c : other.classes) {
      auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& x) { return x.second == c.second; });
      if (it == classes.end()) {
        classes.push_back(c);
      } else {
        it->first = std::min(it->first, c.first);
      }
    }
    std::sort(classes.begin(), classes.end());
    if (classes.size() > kMaxWitnesses) classes.resize(kMaxWitnesses);
  }
};

struct ChunkTally {
  SideTally min, max;
  std::uint64_t evaluations = 0;
};

template <class Body>
void run_workers(unsigned threads, std::size_t jobs, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::size_t j = next++; j < jobs && !failed; j = next++) body(j);
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

std::int64_t objective(std::int64_t chi, ExtremeMode mode) { return mode == ExtremeMode::min ? chi : -chi; }

// Edge-flip state for annealing.
class FlipState {
 public:
  FlipState(std::size_t n) : n_(n), adj_(n * n, 0) {}

  bool has(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  void flip(Vertex u, Vertex v) {
    adj_[u * n_ + v] ^= 1;
    adj_[v * n_ + u] ^= 1;
  }

  Graph graph() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (has(u, v)) edges.push_back({u, v});
    return Graph::from_edges(n_, edges);
  }

  bool connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v = 0; v < n_; ++v) {
        if (has(u, v) && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n_;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
};

}  // namespace

ExtremalPair exhaustive_extremal(std::size_t n, bool connected_only, unsigned threads) {
  if (n > kExhaustiveMaxOrder) {
    throw CapacityError("exhaustive_extremal supports n <= 7; use anneal_extremal for n = " + std::to_string(n));
  }
  if (n == 0) throw InputError("exhaustive_extremal requires n >= 1");
  const auto pairs = pair_list(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const std::size_t chunk_bits = pairs.size() > 12 ? pairs.size() - 8 : pairs.size();
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const std::size_t jobs = static_cast<std::size_t>(total / chunk);
  std::vector<ChunkTally> tallies(jobs);

  run_workers(threads, jobs, [&](std::size_t j) {
    ChunkTally& t = tallies[j];
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint64_t mask = j * chunk; mask < (j + 1) * chunk; ++mask) {
      const SmallRows rows = rows_of_mask(mask, pairs);
      if (connected_only && !small_connected(rows, n)) continue;
      ++t.evaluations;
      const std::int64_t chi = small_chi(rows, all, 1);
      t.min.offer(chi, mask, rows, n, true);
      t.max.offer(chi, mask, rows, n, false);
    }
  });

  ChunkTally merged;
  for (const ChunkTally& t : tallies) {
    merged.min.merge(t.min, true);
    merged.max.merge(t.max, false);
    merged.evaluations += t.evaluations;
  }

  auto finish = [&](const SideTally& side, ExtremeMode mode) {
    SearchResult r;
    r.order = n;
    r.mode = mode;
    r.connected_only = connected_only;
    r.best_value = side.best;
    r.method = SearchMethod::exhaustive;
    r.evaluations = merged.evaluations;
    for (const auto& c : side.classes) r.witnesses.push_back(graph_of_code(c.second, n));
    r.einstein.assign(r.witnesses.size(), std::nullopt);
    return r;
  };
  return {finish(merged.min, ExtremeMode::min), finish(merged.max, ExtremeMode::max)};
}

SearchResult anneal_extremal(std::size_t n, ExtremeMode mode, const AnnealSchedule& schedule, bool connected_only,
                             std::uint64_t seed) {
  if (n < 2) throw InputError("anneal_extremal requires n >= 2");
  if (schedule.steps == 0) throw InputError("anneal_extremal requires at least one step");
  if (!(schedule.t0 > 0.0) || !(schedule.t1 > 0.0)) throw InputError("annealing temperatures must be positive");

  CounterRng rng(seed, 0);
  FlipState state(n);
  if (connected_only) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i + 1 < n; ++i) state.flip(order[i], order[i + 1]);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!state.has(u, v) && rng.uniform() < 0.5) state.flip(u, v);

  SearchResult r;
  r.order = n;
  r.mode = mode;
  r.connected_only = connected_only;
  r.method = SearchMethod::anneal;
  r.seed = seed;

  std::int64_t current = euler_characteristic_ph(state.graph());
  r.evaluations = 1;
  std::int64_t best = current;
  FlipState best_state = state;

  const auto pairs = pair_list(n);
  const double ratio = schedule.t1 / schedule.t0;
  for (std::size_t step = 1; step < schedule.steps; ++step) {
    const double fraction = schedule.steps > 1 ? static_cast<double>(step) / static_cast<double>(schedule.steps - 1) : 1.0;
    const double temperature = schedule.t0 * std::pow(ratio, fraction);
    const auto [u, v] = pairs[rng.below(pairs.size())];
    const double u01 = rng.uniform();
    state.flip(u, v);
    if (connected_only && !state.has(u, v) && !state.connected()) {
      state.flip(u, v);
      continue;
    }
    const std::int64_t candidate = euler_characteristic_ph(state.graph());
    ++r.evaluations;
    const double delta = static_cast<double>(objective(candidate, mode) - objective(current, mode));
    if (delta <= 0.0 || u01 < std::exp(-delta / temperature)) {
      current = candidate;
      if (objective(current, mode) < objective(best, mode)) {
        best = current;
        best_state = state;
      }
    } else {
      state.flip(u, v);
    }
  }

  r.best_value = best;
  Graph witness = best_state.graph();
  if (n <= 8) witness = canonical_form(witness);
  r.witnesses.push_back(std::move(witness));
  r.einstein.assign(1, std::nullopt);
  return r;
}

SearchResult anneal_extremal(std::size_t n, ExtremeMode mode, const AnnealSchedule& schedule, bool connected_only,
                             std::uint64_t seed, std::size_t chains, unsigned threads) {
  if (chains == 0) throw InputError("anneal_extremal requires at least one chain");
  std::vector<SearchResult> results(chains);
  run_workers(threads, chains, [&](std::size_t c) {
    results[c] = anneal_extremal(n, mode, schedule, connected_only, counter_hash(seed, c));
  });
  std::size_t best = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t c = 0; c < chains; ++c) {
    evaluations += results[c].evaluations;
    if (objective(results[c].best_value, mode) < objective(results[best].best_value, mode)) best = c;
  }
  SearchResult r = std::move(results[best]);
  r.seed = seed;
  r.evaluations = evaluations;
  return r;
}

MonotonicityReport monotonicity_report(std::size_t n_max, unsigned threads) {
  if (n_max > kExhaustiveMaxOrder) throw CapacityError("monotonicity_report supports n_max <= 7");
  MonotonicityReport report;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const ExtremalPair e = exhaustive_extremal(n, true, threads);
    report.rows.push_back({n, e.min.best_value, e.max.best_value});
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    report.min_nonincreasing = report.min_nonincreasing && report.rows[i].min <= report.rows[i - 1].min;
    report.max_nondecreasing = report.max_nondecreasing && report.rows[i].max >= report.rows[i - 1].max;
  }
  return report;
}

SearchResult einstein_filter(SearchResult result) {
  result.einstein.clear();
  for (const Graph& w : result.witnesses) result.einstein.emplace_back(is_einstein(w).is_einstein);
  return result;
}

Graph canonical_form(const Graph& g) {
  if (g.order() > 9) throw CapacityError("canonical_form supports at most 9 vertices");
  if (g.order() < 2) return Graph::from_edges(g.order(), {});
  return graph_of_code(canonical_code(small_rows(g), g.order()), g.order());
}

std::string to_string(ExtremeMode mode) { return mode == ExtremeMode::min ? "min" : "max"; }

ExtremeMode parse_extreme_mode(const std::string& text) {
  if (text == "min") return ExtremeMode::min;
  if (text == "max") return ExtremeMode::max;
  throw InputError("mode must be 'min' or 'max', got '" + text + "'");
}

std::string to_json(const SearchResult& r) {
  nlohmann::ordered_json doc;
  doc["order"] = r.order;
  doc["mode"] = to_string(r.mode);
  doc["connected_only"] = r.connected_only;
  doc["best_value"] = r.best_value;
  doc["method"] = r.method == SearchMethod::exhaustive ? "exhaustive" : "anneal";
  doc["seed"] = r.seed;
  doc["evaluations"] = r.evaluations;
  auto witnesses = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    nlohmann::ordered_json w;
    w["edge_list"] = serialize_graph(r.witnesses[i], GraphFormat::edge_list);
    if (i < r.einstein.size() && r.einstein[i]) w["einstein"] = *r.einstein[i];
    witnesses.push_back(std::move(w));
  }
  doc["witnesses"] = std::move(witnesses);
  return doc.dump(2);
}

std::string to_json(const MonotonicityReport& r) {
  nlohmann::ordered_json doc;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) rows.push_back({{"n", row.n}, {"min", row.min}, {"max", row.max}});
  doc["rows"] = std::move(rows);
  doc["min_nonincreasing"] = r.min_nonincreasing;
  doc["max_nondecreasing"] = r.max_nondecreasing;
  return doc.dump(2);
}

}  // namespace graphcurv
