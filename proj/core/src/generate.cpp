#include "overlay/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "overlay/error.hpp"

namespace overlay {
namespace {

/// First `count` entries of a Fisher-Yates shuffle of [0, n), sorted.
std::vector<int> sample(std::mt19937_64& rng, int n, int count) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < count; ++i) {
    auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i))) + i;
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

int uniform_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw PreconditionError("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

Hypergraph random_hypergraph(const RandomHypergraphParams& params, std::uint64_t seed) {
  if (params.vertices < 0 || params.hyperedges < 0 || params.min_size < 1 || params.min_size > params.max_size) {
    throw PreconditionError("bad random hypergraph parameters");
  }
  if (params.hyperedges > 0 && params.min_size > params.vertices) {
    throw PreconditionError("hyperedge size exceeds vertex count");
  }
  std::mt19937_64 rng(seed);
  const int top = std::min(params.max_size, params.vertices);
  std::vector<std::vector<int>> hyperedges;
  for (int i = 0; i < params.hyperedges; ++i) {
    hyperedges.push_back(sample(rng, params.vertices, uniform_in(rng, params.min_size, top)));
  }
  return Hypergraph(params.vertices, std::move(hyperedges));
}

Hypergraph random_uniform_hypergraph(int vertices, int hyperedges, int size, std::uint64_t seed) {
  return random_hypergraph({vertices, hyperedges, size, size}, seed);
}

Hypergraph sunflower(int petals, int core) {
  if (petals < 0 || core < 0) throw PreconditionError("sunflower needs non-negative petals and core");
  std::vector<int> base(static_cast<std::size_t>(core));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> hyperedges;
  for (int i = 0; i < petals; ++i) {
    hyperedges.push_back(base);
    hyperedges.back().push_back(core + i);
  }
  return Hypergraph(core + petals, std::move(hyperedges));
}

HittingSetInstance random_hitting_set(int n, int sets, int max_set_size, std::uint64_t seed) {
  if (n < 1 || sets < 0 || max_set_size < 1) throw PreconditionError("bad random hitting-set parameters");
  std::mt19937_64 rng(seed);
  HittingSetInstance hs;
  hs.universe_size = n;
  const int top = std::min(max_set_size, n);
  for (int i = 0; i < sets; ++i) hs.sets.push_back(sample(rng, n, uniform_in(rng, 1, top)));
  return hs;
}

EdgeSet random_pairs(int order, int count, std::uint64_t seed) {
  if (order < 0 || count < 0) throw PreconditionError("bad random pair parameters");
  std::vector<Edge> all;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) all.emplace_back(u, v);
  }
  std::mt19937_64 rng(seed);
  const int take = std::min<int>(count, static_cast<int>(all.size()));
  std::vector<int> picked = sample(rng, static_cast<int>(all.size()), take);
  std::vector<Edge> edges;
  for (int i : picked) edges.push_back(all[i]);
  return EdgeSet(order, edges);
}

}  // namespace overlay
