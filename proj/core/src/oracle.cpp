#include "overlay/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "overlay/error.hpp"
#include "overlay/subgraph.hpp"
#include "workspace.hpp"

namespace overlay {
namespace {

/// Lexicographic walk over combinations of the free pairs at one cardinality.
class Enumerator {
 public:
  Enumerator(detail::Workspace& ws, std::vector<std::size_t> free_ids, std::vector<char> base)
      : ws_(ws), free_(std::move(free_ids)), present_(std::move(base)) {
    std::vector<std::size_t> position(ws_.pair_count(), free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) position[free_[i]] = i;
    // A hyperedge is decided once every free pair inside it has been passed.
    for (std::size_t h = 0; h < ws_.hyperedge_count(); ++h) {
      std::size_t last = 0;
      bool any = false;
      for (std::size_t id : ws_.hyperedge_pairs(h)) {
        if (position[id] < free_.size()) {
          last = std::max(last, position[id] + 1);
          any = true;
        }
      }
      decided_at_.push_back({any ? last : 0, h});
    }
    std::sort(decided_at_.begin(), decided_at_.end());
  }

  std::optional<std::vector<char>> find(int cardinality) {
    next_check_ = 0;
    if (search(0, cardinality)) return present_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  /// Hyperedges whose decided position is <= `frontier` must pass with positions < frontier
  /// fixed and everything beyond absent. Returns false on the first failure.
  bool decided_ok(std::size_t frontier, std::size_t& cursor) {
    while (cursor < decided_at_.size() && decided_at_[cursor].first <= frontier) {
      if (!ws_.satisfied(decided_at_[cursor].second, present_)) return false;
      ++cursor;
    }
    return true;
  }

  /// Undecided hyperedges must still pass with every free pair from `frontier` on present.
  bool optimistic_ok(std::size_t frontier, std::size_t cursor) {
    for (std::size_t i = frontier; i < free_.size(); ++i) present_[free_[i]] = 1;
    bool ok = true;
    for (std::size_t c = cursor; c < decided_at_.size() && ok; ++c) {
      ok = ws_.satisfied(decided_at_[c].second, present_);
    }
    for (std::size_t i = frontier; i < free_.size(); ++i) present_[free_[i]] = 0;
    return ok;
  }

  /// Positions < `from` are fixed; choose `remaining` more from [from, free_.size()).
  bool search(std::size_t from, int remaining) {
    ++nodes_;
    std::size_t cursor = next_check_;
    if (remaining == 0) return decided_ok(free_.size(), cursor);
    for (std::size_t pos = from; pos + static_cast<std::size_t>(remaining) <= free_.size(); ++pos) {
      // Choosing pos leaves [from, pos) absent.
      std::size_t c = cursor;
      if (!decided_ok(pos, c)) return false;
      if (!optimistic_ok(pos, c)) return false;
      present_[free_[pos]] = 1;
      std::size_t saved = next_check_;
      next_check_ = c;
      bool ok = search(pos + 1, remaining - 1);
      next_check_ = saved;
      if (ok) return true;
      present_[free_[pos]] = 0;
    }
    return false;
  }

  detail::Workspace& ws_;
  std::vector<std::size_t> free_;
  std::vector<char> present_;
  std::vector<std::pair<std::size_t, std::size_t>> decided_at_;
  std::size_t next_check_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Solution> brute_force_oracle(const Instance& inst, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (!feasible(inst)) return std::nullopt;
  const Hypergraph& h = inst.hypergraph();
  const EdgeSet& prescribed = inst.prescribed();

  // Hyperedges visited by size (stable), their pairs in local lexicographic order.
  std::vector<std::size_t> by_size(h.hyperedge_count());
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](std::size_t a, std::size_t b) { return h.hyperedge(a).size() < h.hyperedge(b).size(); });
  std::vector<Edge> free_pairs;
  EdgeSet seen(h.order());
  auto offer = [&](Edge e) {
    if (!prescribed.contains(e) && seen.insert(e)) free_pairs.push_back(e);
  };
  for (std::size_t i : by_size) {
    const auto& s = h.hyperedge(i);
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) offer(Edge(s[a], s[b]));
    }
  }
  if (options.all_pairs) {
    for (int u = 0; u < h.order(); ++u) {
      for (int v = u + 1; v < h.order(); ++v) offer(Edge(u, v));
    }
  }
  if (static_cast<int>(free_pairs.size()) > options.cap) {
    throw CapExceeded("oracle would enumerate " + std::to_string(free_pairs.size()) + " free pairs (cap " +
                      std::to_string(options.cap) + ")");
  }

  std::vector<Edge> universe = free_pairs;
  universe.insert(universe.end(), prescribed.begin(), prescribed.end());
  detail::Workspace ws(h, inst.family(), universe);
  std::vector<std::size_t> free_ids(free_pairs.size());
  std::iota(free_ids.begin(), free_ids.end(), 0);
  std::vector<char> base(universe.size(), 0);
  for (std::size_t id = free_pairs.size(); id < universe.size(); ++id) base[id] = 1;

  const int fixed = static_cast<int>(prescribed.size());
  int top = static_cast<int>(free_pairs.size());
  if (options.max_value) top = std::min(top, *options.max_value - fixed);
  Enumerator enumerator(ws, free_ids, base);
  for (int c = 0; c <= top; ++c) {
    auto present = enumerator.find(c);
    if (!present) continue;
    EdgeSet edges(h.order());
    for (std::size_t id = 0; id < universe.size(); ++id) {
      if ((*present)[id] != 0) edges.insert(universe[id]);
    }
    Solution s;
    s.value = static_cast<int>(edges.size());
    s.certificates = certificates_for(inst, edges);
    s.edges = std::move(edges);
    s.engine = "oracle";
    s.stats.nodes = enumerator.nodes();
    s.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
  }
  return std::nullopt;
}

}  // namespace overlay
