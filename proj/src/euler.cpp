#include "graphcurv/euler.hpp"

#include <algorithm>
#include <numeric>

#include "graphcurv/cliques.hpp"
#include "graphcurv/errors.hpp"
#include "graphcurv/kernels.hpp"
#include "graphcurv/rng.hpp"
#include "graphcurv/spanning.hpp"

namespace graphcurv {
namespace {

class PoincareHopfEngine {
 public:
  PoincareHopfEngine(const Graph& g, std::span<const std::uint32_t> rank)
      : words_(g.words()), lower_(g.order() * g.words(), 0), kt_(kernels::active()) {
    const std::size_t n = g.order();
    if (rank.size() != n) throw InputError("rank must have one entry per vertex");
    std::vector<char> seen(n, 0);
    for (auto r : rank) {
      if (r >= n || seen[r]) throw InputError("rank is not a permutation of 0..n-1");
      seen[r] = 1;
    }
    for (Vertex x = 0; x < n; ++x) {
      std::uint64_t* row = lower_.data() + static_cast<std::size_t>(x) * words_;
      for (Vertex y : g.neighbors(x)) {
        if (rank[y] < rank[x]) row[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
    }
  }

  std::int64_t run(std::span<const std::uint64_t> subset) {
    if (words_ == 0) return 0;
    ensure(0);
    std::copy(subset.begin(), subset.end(), scratch(0));
    return chi(0);
  }

 private:
  std::uint64_t* scratch(std::size_t depth) { return buffer_.data() + depth * words_; }
  void ensure(std::size_t depth) {
    if (buffer_.size() < (depth + 1) * words_) buffer_.resize((depth + 1) * words_);
  }

  // chi of the subgraph induced by scratch(depth).
  std::int64_t chi(std::size_t depth) {
    std::int64_t sum = 0;
    ensure(depth + 1);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = scratch(depth)[w];
      while (bits != 0) {
        const auto x = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::size_t below =
            kt_.and_popcount(scratch(depth), lower_.data() + x * words_, scratch(depth + 1), words_);
        // Empty lower sphere: index 1. Single lower neighbor: index 0.
        if (below == 0) sum += 1;
        else if (below > 1) sum += 1 - chi(depth + 1);
      }
    }
    return sum;
  }

  std::size_t words_;
  std::vector<std::uint64_t> lower_;
  std::vector<std::uint64_t> buffer_;
  const kernels::KernelTable& kt_;
};

std::vector<std::uint32_t> identity_rank(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

std::int64_t sphere_target(std::size_t d) { return d % 2 == 0 ? 0 : 2; }  // 1 - (-1)^d

}  // namespace

std::int64_t euler_characteristic(const Graph& g) { return alternating_sum(f_vector(g)); }

std::int64_t euler_characteristic(const Graph& g, const VertexSet& subset) {
  return alternating_sum(f_vector(g, subset));
}

std::int64_t euler_characteristic_ph(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  auto rank = identity_rank(g.order());
  if (shuffle_seed) {
    CounterRng rng(*shuffle_seed, 0x5eed);
    for (std::size_t i = rank.size(); i > 1; --i) std::swap(rank[i - 1], rank[rng.below(i)]);
  }
  return euler_characteristic_ph(g, rank);
}

std::int64_t euler_characteristic_ph(const Graph& g, std::span<const std::uint32_t> rank) {
  const VertexSet all = VertexSet::full(g.order());
  return euler_characteristic_ph(g, all, rank);
}

std::int64_t euler_characteristic_ph(const Graph& g, const VertexSet& subset,
                                     std::span<const std::uint32_t> rank) {
  if (subset.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  PoincareHopfEngine engine(g, rank);
  return engine.run(subset.words());
}

std::string_view describe(GeometricDefect d) noexcept {
  switch (d) {
    case GeometricDefect::empty_graph:
      return "graph is empty";
    case GeometricDefect::has_edges:
      return "dimension 0 requires an edgeless graph";
    case GeometricDefect::sphere_not_geometric:
      return "unit sphere is not geometric of dimension d-1";
    case GeometricDefect::sphere_characteristic:
      return "unit sphere has the wrong Euler characteristic";
  }
  return "unknown";
}

GeometricReport is_geometric(const Graph& g, std::size_t d) {
  GeometricReport report;
  report.claimed_dimension = d;
  if (g.order() == 0) {
    report.witnesses.push_back({std::nullopt, GeometricDefect::empty_graph});
    return report;
  }
  if (d == 0) {
    if (g.edge_count() != 0) report.witnesses.push_back({std::nullopt, GeometricDefect::has_edges});
    report.is_geometric = report.witnesses.empty();
    return report;
  }
  bool bad_sphere = false;
  bool bad_chi = false;
  for (Vertex x = 0; x < g.order() && !(bad_sphere && bad_chi); ++x) {
    const Graph sphere = unit_sphere(g, x).graph;
    if (!bad_chi && euler_characteristic(sphere) != sphere_target(d)) {
      bad_chi = true;
      report.witnesses.push_back({x, GeometricDefect::sphere_characteristic});
    }
    if (!bad_sphere && !is_geometric(sphere, d - 1).is_geometric) {
      bad_sphere = true;
      report.witnesses.push_back({x, GeometricDefect::sphere_not_geometric});
    }
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(), [](const auto& a, const auto& b) {
    return static_cast<int>(a.defect) < static_cast<int>(b.defect);
  });
  report.is_geometric = report.witnesses.empty();
  return report;
}

std::optional<std::size_t> geometric_dimension(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t d = f_vector(g).size() - 1;
  if (is_geometric(g, d).is_geometric) return d;
  return std::nullopt;
}

Rational genus(const Graph& g) { return Rational(1) - make_rational(euler_characteristic(g), 2); }

Rational tree_functional(const Graph& g) {
  if (g.order() == 0) throw DomainError("tree functional requires a nonempty graph");
  const SpanningTreeCount trees = spanning_tree_count(g);
  if (trees.disconnected) throw DomainError("tree functional requires a connected graph");
  return Rational(BigInt(euler_characteristic(g)) * trees.count);
}

}  // namespace graphcurv
