#pragma once

#include <optional>
#include <vector>

#include "overlay/graph.hpp"

namespace overlay {

struct GraphPredicates {
  bool connected = false;
  bool hamiltonian = false;
  int min_degree = 0;
  int edge_connectivity = 0;

  friend bool operator==(const GraphPredicates&, const GraphPredicates&) = default;
};

GraphPredicates graph_predicates(const Graph& g);

/// The empty graph is not connected; K_1 is.
bool is_connected(const Graph& g);

/// Vertex order of a Hamiltonian cycle (order >= 3), found by subset DP.
/// Throws CapExceeded above kHamiltonianCap.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);
bool is_hamiltonian(const Graph& g);

int min_degree(const Graph& g);

/// Minimum number of edges whose removal disconnects g; 0 when order < 2 or disconnected.
int edge_connectivity(const Graph& g);

/// Vertex mask of one side of a minimum edge cut. Requires a connected graph of order >= 2.
std::uint64_t min_cut_side(const Graph& g);

/// Edges of a maximum matching (exhaustive; intended for hyperedge-sized graphs).
std::vector<Edge> maximum_matching(const Graph& g);

/// Vertices surviving repeated deletion of vertices of degree < d.
std::uint64_t degree_core(const Graph& g, int d);

/// Edges of a BFS spanning tree; empty if g is disconnected.
std::vector<Edge> spanning_tree(const Graph& g);

}  // namespace overlay
