#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "overlay/graph.hpp"

namespace overlay {

/// Set of unordered pairs over the vertex range [0, range).
///
/// Kept sorted and duplicate-free; every mutating operation checks endpoints.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int range);
  EdgeSet(int range, std::span<const Edge> edges);
  EdgeSet(int range, std::initializer_list<Edge> edges);

  int range() const { return range_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(Edge e) const;
  bool insert(Edge e);
  bool erase(Edge e);

  bool includes(const EdgeSet& other) const;
  EdgeSet united(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  void check(Edge e) const;

  int range_ = 0;
  std::vector<Edge> edges_;
};

/// Parses `u-v,u-v,...` (empty string allowed) into an edge set over [0, range).
EdgeSet parse_edge_list(std::string_view text, int range);
std::string format_edge_list(const EdgeSet& edges);

}  // namespace overlay
