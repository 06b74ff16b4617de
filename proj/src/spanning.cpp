#include "graphcurv/spanning.hpp"

#include <utility>
#include <vector>

#include "graphcurv/errors.hpp"

namespace graphcurv {

SpanningTreeCount spanning_tree_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("spanning tree count of the empty graph is undefined");
  if (!is_connected(g)) return {BigInt(0), true};
  const std::size_t m = n - 1;
  if (m == 0) return {BigInt(1), false};

  std::vector<BigInt> a(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * m + j]; };
  for (std::size_t i = 0; i < m; ++i) {
    at(i, i) = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)));
    for (Vertex u : g.neighbors(static_cast<Vertex>(i))) {
      if (u < m) at(i, u) = -1;
    }
  }

  // Bareiss: every intermediate division is exact.
  BigInt previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < m && at(pivot, k) == 0) ++pivot;
      if (pivot == m) return {BigInt(0), false};
      for (std::size_t j = 0; j < m; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j));
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = at(k, k);
  }
  BigInt det = at(m - 1, m - 1);
  if (negate) det = -det;
  return {det, false};
}

}  // namespace graphcurv
