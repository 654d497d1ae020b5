#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "overlay/family.hpp"
#include "overlay/hypergraph.hpp"

namespace overlay::detail {

/// Edge state shared by the branching solver and the oracle: a fixed universe of pairs,
/// every hyperedge's pairs as universe ids, and memoized satisfaction per hyperedge.
class Workspace {
 public:
  /// `pairs` must contain every pair inside every hyperedge.
  Workspace(const Hypergraph& h, const FamilySpec& family, std::vector<Edge> pairs);

  std::size_t pair_count() const { return pairs_.size(); }
  const std::vector<Edge>& pairs() const { return pairs_; }
  std::optional<std::size_t> id_of(Edge e) const;

  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  const std::vector<int>& vertices(std::size_t i) const { return hyperedges_[i].vertices; }
  /// Universe ids of the hyperedge's pairs, in lexicographic local order.
  const std::vector<std::size_t>& hyperedge_pairs(std::size_t i) const { return hyperedges_[i].pair_ids; }
  /// Minimum member edge count at the hyperedge's order (pair count + 1 when F has none).
  int min_edges(std::size_t i) const { return hyperedges_[i].min_edges; }

  bool satisfied(std::size_t i, const std::vector<char>& present);
  int induced(std::size_t i, const std::vector<char>& present) const;
  Graph induced_graph(std::size_t i, const std::vector<char>& present) const;

 private:
  struct Key {
    std::array<std::uint64_t, 2> words{};
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return static_cast<std::size_t>(k.words[0] * 0x9e3779b97f4a7c15ULL ^ (k.words[1] + 0x632be59bd9b4e019ULL));
    }
  };
  struct View {
    std::vector<int> vertices;
    std::vector<std::size_t> pair_ids;
    int min_edges = 0;
    std::unordered_map<Key, bool, KeyHash> memo;
  };

  const FamilySpec* family_;
  std::vector<Edge> pairs_;
  std::map<Edge, std::size_t> ids_;
  std::vector<View> hyperedges_;
};

}  // namespace overlay::detail
