#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace overlay {

/// Hypergraph on vertices [0, order). Each hyperedge is kept sorted ascending and
/// duplicate-free; the hyperedge list itself may repeat until normalized().
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int order, std::vector<std::vector<int>> hyperedges);

  int order() const { return order_; }
  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
  const std::vector<int>& hyperedge(std::size_t i) const { return hyperedges_[i]; }

  /// Copy with repeated hyperedges removed (first occurrence kept). Idempotent.
  Hypergraph normalized() const;
  bool is_uniform(int p) const;
  std::size_t max_hyperedge_size() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int order_ = 0;
  std::vector<std::vector<int>> hyperedges_;
};

/// Reads the `.hg` text format: `#` comments, a header line `n <N>`, then one
/// `e v1 ... vk` line per hyperedge.
Hypergraph parse_hg(std::string_view text);

/// Writes the `.hg` format. `comments` lines are emitted first, each prefixed by "# ".
std::string format_hg(const Hypergraph& h, const std::vector<std::string>& comments = {});

}  // namespace overlay
