#pragma once

#include <cstdint>
#include <random>

#include "overlay/graph.hpp"
#include "overlay/hypergraph.hpp"
#include "overlay/reductions.hpp"

namespace overlay {

/// Uniform integer in [0, n) by rejection; stable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

struct RandomHypergraphParams {
  int vertices = 8;
  int hyperedges = 5;
  int min_size = 2;
  int max_size = 5;
};

Hypergraph random_hypergraph(const RandomHypergraphParams& params, std::uint64_t seed);
Hypergraph random_uniform_hypergraph(int vertices, int hyperedges, int size, std::uint64_t seed);

/// Core vertices [0, core) shared by `petals` hyperedges, each adding one private vertex.
Hypergraph sunflower(int petals, int core);

/// Each set gets 1..max_set_size distinct elements of [0, n).
HittingSetInstance random_hitting_set(int n, int sets, int max_set_size, std::uint64_t seed);

/// Random subset of the pairs of [0, order) with exactly min(count, C(order,2)) edges.
EdgeSet random_pairs(int order, int count, std::uint64_t seed);

}  // namespace overlay
