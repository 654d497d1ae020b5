#pragma once

#include <optional>
#include <span>
#include <vector>

#include "overlay/edge_set.hpp"
#include "overlay/graph.hpp"
#include "overlay/hypergraph.hpp"

namespace overlay {

/// G[S] relabeled to [0, |S|) following the ascending order of S.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Graph on [0, |S|) induced on the sorted vertex list S by an edge set.
Graph induced_subgraph(const EdgeSet& edges, std::span<const int> vertices);

/// Bijection phi (pattern vertex -> host vertex) with phi(E(pattern)) in E(host).
/// Requires equal orders; throws PreconditionError otherwise.
std::optional<std::vector<int>> find_spanning_embedding(const Graph& pattern, const Graph& host);
bool spanning_subgraph_iso(const Graph& pattern, const Graph& host);

/// Injective map carrying E(pattern) into E(host). Isolated pattern vertices are
/// placed on unused host vertices; none exists when order(pattern) > order(host).
std::optional<std::vector<int>> find_embedding(const Graph& pattern, const Graph& host);
bool contains_subgraph(const Graph& pattern, const Graph& host);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Uses iterated degree refinement, then tries every labeling that respects the
/// refined cells; meant for the small graphs that populate family slices.
Graph canonical_form(const Graph& g);

/// Pairs that co-occur in at least one hyperedge.
EdgeSet candidate_edges(const Hypergraph& h);

/// All graphs of order n up to isomorphism, as canonical forms sorted by
/// (edge count, edge list). Throws CapExceeded above kEnumerationCap.
const std::vector<Graph>& graphs_of_order(int n);

}  // namespace overlay
