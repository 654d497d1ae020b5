#include "workspace.hpp"

#include "overlay/error.hpp"

namespace overlay::detail {

Workspace::Workspace(const Hypergraph& h, const FamilySpec& family, std::vector<Edge> pairs)
    : family_(&family), pairs_(std::move(pairs)) {
  for (std::size_t id = 0; id < pairs_.size(); ++id) ids_.emplace(pairs_[id], id);
  hyperedges_.reserve(h.hyperedge_count());
  for (const auto& s : h.hyperedges()) {
    View view;
    view.vertices = s;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        auto id = id_of(Edge(s[a], s[b]));
        if (!id) throw PreconditionError("pair universe misses a hyperedge pair");
        view.pair_ids.push_back(*id);
      }
    }
    auto m = min_member_edges(family, static_cast<int>(s.size()));
    view.min_edges = m ? *m : static_cast<int>(view.pair_ids.size()) + 1;
    hyperedges_.push_back(std::move(view));
  }
}

std::optional<std::size_t> Workspace::id_of(Edge e) const {
  auto it = ids_.find(e);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int Workspace::induced(std::size_t i, const std::vector<char>& present) const {
  int count = 0;
  for (std::size_t id : hyperedges_[i].pair_ids) count += present[id] != 0 ? 1 : 0;
  return count;
}

Graph Workspace::induced_graph(std::size_t i, const std::vector<char>& present) const {
  const View& view = hyperedges_[i];
  const int n = static_cast<int>(view.vertices.size());
  Graph g(n);
  std::size_t local = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++local) {
      if (present[view.pair_ids[local]] != 0) g.add_edge(a, b);
    }
  }
  return g;
}

bool Workspace::satisfied(std::size_t i, const std::vector<char>& present) {
  View& view = hyperedges_[i];
  if (view.pair_ids.size() > 128) return satisfies(*family_, induced_graph(i, present));
  Key key;
  for (std::size_t local = 0; local < view.pair_ids.size(); ++local) {
    if (present[view.pair_ids[local]] != 0) key.words[local / 64] |= std::uint64_t{1} << (local % 64);
  }
  if (auto it = view.memo.find(key); it != view.memo.end()) return it->second;
  bool ok = satisfies(*family_, induced_graph(i, present));
  view.memo.emplace(key, ok);
  return ok;
}

}  // namespace overlay::detail
