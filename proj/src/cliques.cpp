#include "graphcurv/cliques.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "graphcurv/errors.hpp"
#include "graphcurv/kernels.hpp"

namespace graphcurv {
namespace {

// Ordered branching over candidate sets: a clique C with maximum vertex v is
// extended only by candidates adjacent to all of C and larger than v, so each
// clique is reached exactly once and in lexicographic order.
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, std::size_t depth_cap)
      : g_(g), words_(g.words()), cap_(depth_cap), kt_(kernels::active()) {}

  template <typename Visit>
  void run(std::span<const std::uint64_t> start, Visit&& visit) {
    if (words_ == 0 || cap_ == 0) return;
    ensure(0);
    std::copy(start.begin(), start.end(), rest(0));
    walk(0, visit);
  }

 private:
  std::uint64_t* rest(std::size_t depth) { return buffer_.data() + depth * words_; }

  void ensure(std::size_t depth) {
    if (buffer_.size() < (depth + 1) * words_) buffer_.resize((depth + 1) * words_);
  }

  // rest(depth) holds the candidates; consumed in place.
  template <typename Visit>
  void walk(std::size_t depth, Visit& visit) {
    for (std::size_t w = 0; w < words_; ++w) {
      while (true) {
        std::uint64_t bits = rest(depth)[w];
        if (bits == 0) break;
        const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        rest(depth)[w] = bits & (bits - 1);
        visit(depth, v);
        if (depth + 1 >= cap_) continue;
        ensure(depth + 1);
        // ensure() may reallocate, so pointers are re-derived after it.
        const std::size_t next = kt_.and_popcount(rest(depth), g_.row(v).data(), rest(depth + 1), words_);
        if (next == 0) continue;
        walk(depth + 1, visit);
      }
    }
  }

  const Graph& g_;
  std::size_t words_;
  std::size_t cap_;
  const kernels::KernelTable& kt_;
  std::vector<std::uint64_t> buffer_;
};

std::size_t depth_cap(std::optional<std::size_t> max_dimension) {
  return max_dimension ? *max_dimension + 1 : std::numeric_limits<std::size_t>::max();
}

FVector count(const Graph& g, std::span<const std::uint64_t> start, std::size_t cap) {
  FVector f;
  CliqueWalker walker(g, cap);
  walker.run(start, [&](std::size_t depth, Vertex v) {
    (void)v;
    if (f.size() <= depth) f.resize(depth + 1, 0);
    ++f[depth];
  });
  return f;
}

}  // namespace

FVector f_vector(const Graph& g, std::optional<std::size_t> max_dimension) {
  const VertexSet all = VertexSet::full(g.order());
  return count(g, all.words(), depth_cap(max_dimension));
}

FVector f_vector(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order()) throw InputError("vertex set universe does not match graph order");
  return count(g, subset.words(), std::numeric_limits<std::size_t>::max());
}

CliqueEnumeration enumerate_cliques(const Graph& g, std::optional<std::size_t> max_dimension,
                                    std::size_t capacity) {
  CliqueEnumeration out;
  auto& dims = out.cliques.by_dimension;
  std::vector<Vertex> stack;
  std::size_t stored = 0;
  const VertexSet all = VertexSet::full(g.order());
  CliqueWalker walker(g, depth_cap(max_dimension));
  walker.run(all.words(), [&](std::size_t depth, Vertex v) {
    // A visit at depth d replaces the d-th stack entry.
    stack.resize(depth);
    stack.push_back(v);
    if (++stored > capacity) {
      std::string progress;
      for (const auto& d : dims) progress += (progress.empty() ? "" : ",") + std::to_string(d.size());
      throw CapacityError("clique capacity " + std::to_string(capacity) +
                          " exceeded; partial f-vector (" + progress + ")");
    }
    if (dims.size() <= depth) dims.resize(depth + 1);
    dims[depth].push_back(stack);
  });
  for (const auto& d : dims) out.f_vector.push_back(d.size());
  return out;
}

std::int64_t alternating_sum(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
  }
  return chi;
}

}  // namespace graphcurv
