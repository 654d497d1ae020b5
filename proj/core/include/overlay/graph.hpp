#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overlay/limits.hpp"

namespace overlay {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices [0, order), order <= 64.
///
/// Adjacency is one bitset word per vertex. The type is a plain value: copies are
/// independent and comparison is structural (same labeling), not up to isomorphism.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  static Graph complete(int n);
  static Graph edgeless(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Star of order n: vertex 0 joined to every other vertex.
  static Graph star(int n);
  /// c disjoint copies of K_2 on 2c vertices.
  static Graph matching(int c);

  int order() const { return order_; }
  int size() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(row(v)); }
  std::uint64_t vertex_mask() const;
  std::uint64_t isolated_mask() const;
  int non_isolated_count() const;
  /// Minimum degree over non-isolated vertices; 0 for an edgeless graph.
  int min_non_isolated_degree() const;
  std::vector<int> degree_sequence() const;

  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  /// Disjoint union with `extra` isolated vertices appended.
  Graph padded(int extra) const;
  /// Relabels vertex v to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Formats as the literal `<n>:<u>-<v>,...` with edges in ascending order.
std::string to_literal(const Graph& g);

/// Parses a graph literal. Throws ParseError on malformed input.
Graph parse_graph_literal(std::string_view text);

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

}  // namespace overlay
