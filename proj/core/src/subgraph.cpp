#include "overlay/subgraph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "overlay/error.hpp"

namespace overlay {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

/// Backtracking embedding of `pattern` into `host`. When `spanning`, every pattern vertex is
/// placed (orders are equal); otherwise only non-isolated pattern vertices are searched and
/// isolated ones are dropped on leftover host vertices afterwards.
class Embedder {
 public:
  Embedder(const Graph& pattern, const Graph& host, bool spanning)
      : pattern_(pattern), host_(host), spanning_(spanning) {}

  std::optional<std::vector<int>> run() {
    const int pn = pattern_.order();
    const int hn = host_.order();
    if (pn > hn) return std::nullopt;
    if (pattern_.size() > host_.size()) return std::nullopt;

    std::vector<int> to_place;
    for (int v = 0; v < pn; ++v) {
      if (spanning_ || pattern_.degree(v) > 0) to_place.push_back(v);
    }
    if (!degree_sequences_fit(to_place)) return std::nullopt;

    order_ = search_order(to_place);
    for (int d = 0; d <= hn; ++d) {
      Mask m = 0;
      for (int h = 0; h < hn; ++h) {
        if (host_.degree(h) >= d) m |= bit(h);
      }
      at_least_degree_[static_cast<std::size_t>(d)] = m;
    }
    map_.assign(static_cast<std::size_t>(pn), -1);
    if (!place(0, 0)) return std::nullopt;

    Mask used = 0;
    for (int v = 0; v < pn; ++v) {
      if (map_[v] >= 0) used |= bit(map_[v]);
    }
    Mask free = host_.vertex_mask() & ~used;
    for (int v = 0; v < pn; ++v) {
      if (map_[v] >= 0) continue;
      int h = std::countr_zero(free);
      map_[v] = h;
      free &= free - 1;
    }
    return map_;
  }

 private:
  bool degree_sequences_fit(const std::vector<int>& placed) const {
    std::vector<int> p;
    for (int v : placed) p.push_back(pattern_.degree(v));
    std::vector<int> h = host_.degree_sequence();
    std::sort(p.begin(), p.end(), std::greater<>());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > h[i]) return false;
    }
    return true;
  }

  std::vector<int> search_order(std::vector<int> pending) const {
    std::vector<int> out;
    Mask placed = 0;
    while (!pending.empty()) {
      auto best = pending.begin();
      auto score = [&](int v) {
        return std::pair{std::popcount(pattern_.row(v) & placed), pattern_.degree(v)};
      };
      for (auto it = pending.begin(); it != pending.end(); ++it) {
        if (score(*it) > score(*best)) best = it;
      }
      out.push_back(*best);
      placed |= bit(*best);
      pending.erase(best);
    }
    return out;
  }

  bool place(std::size_t depth, Mask used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    Mask candidates = at_least_degree_[static_cast<std::size_t>(pattern_.degree(v))] & ~used;
    Mask placed_neighbors = pattern_.row(v);
    while (placed_neighbors != 0 && candidates != 0) {
      int u = std::countr_zero(placed_neighbors);
      placed_neighbors &= placed_neighbors - 1;
      if (map_[u] >= 0) candidates &= host_.row(map_[u]);
    }
    while (candidates != 0) {
      int h = std::countr_zero(candidates);
      candidates &= candidates - 1;
      map_[v] = h;
      if (place(depth + 1, used | bit(h))) return true;
    }
    map_[v] = -1;
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  bool spanning_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::array<Mask, kMaxGraphOrder + 1> at_least_degree_{};
};

/// Iterated degree refinement; returns a stable color per vertex where colors are ranks of
/// (previous color, sorted neighbor colors) signatures.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int u = 0; u < n; ++u) {
        if (g.has_edge(u, v)) sig[v].second.push_back(color[u]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<std::pair<int, std::vector<int>>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

}  // namespace

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw PreconditionError("vertex " + std::to_string(v) + " outside the graph");
    }
  }
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

Graph induced_subgraph(const EdgeSet& edges, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (edges.contains(Edge(vertices[i], vertices[j]))) out.add_edge(i, j);
    }
  }
  return out;
}

std::optional<std::vector<int>> find_spanning_embedding(const Graph& pattern, const Graph& host) {
  if (pattern.order() != host.order()) {
    throw PreconditionError("spanning embedding needs equal orders (" + std::to_string(pattern.order()) +
                            " vs " + std::to_string(host.order()) + ")");
  }
  return Embedder(pattern, host, true).run();
}

bool spanning_subgraph_iso(const Graph& pattern, const Graph& host) {
  return find_spanning_embedding(pattern, host).has_value();
}

std::optional<std::vector<int>> find_embedding(const Graph& pattern, const Graph& host) {
  return Embedder(pattern, host, false).run();
}

bool contains_subgraph(const Graph& pattern, const Graph& host) {
  return find_embedding(pattern, host).has_value();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && spanning_subgraph_iso(a, b);
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  std::vector<int> color = refine_colors(g);

  // Vertices grouped by color; positions are handed out cell by cell.
  std::vector<int> by_color(static_cast<std::size_t>(n));
  std::iota(by_color.begin(), by_color.end(), 0);
  std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) { return color[a] < color[b]; });

  double labelings = 1;
  {
    int run = 1;
    for (int i = 1; i <= n; ++i) {
      if (i < n && color[by_color[i]] == color[by_color[i - 1]]) {
        ++run;
      } else {
        for (int f = 2; f <= run; ++f) labelings *= f;
        run = 1;
      }
    }
  }
  if (labelings > 2e7) {
    throw CapExceeded("canonical form: too many labelings to try for a graph of order " + std::to_string(n));
  }

  std::vector<int> vertex_at(static_cast<std::size_t>(n), -1);
  std::vector<Mask> best_rows;
  std::vector<int> best_perm;
  Mask used = 0;

  auto evaluate = [&]() {
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) position[vertex_at[p]] = p;
    std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) {
      Mask r = g.row(vertex_at[p]);
      while (r != 0) {
        int u = std::countr_zero(r);
        r &= r - 1;
        rows[p] |= bit(position[u]);
      }
    }
    if (best_rows.empty() || rows < best_rows) {
      best_rows = rows;
      best_perm = position;
    }
  };

  auto assign = [&](auto&& self, int p) -> void {
    if (p == n) {
      evaluate();
      return;
    }
    const int target_color = color[by_color[p]];
    for (int v = 0; v < n; ++v) {
      if (color[v] != target_color || (used & bit(v)) != 0) continue;
      used |= bit(v);
      vertex_at[p] = v;
      self(self, p + 1);
      used &= ~bit(v);
    }
  };
  assign(assign, 0);
  return g.relabeled(best_perm);
}

EdgeSet candidate_edges(const Hypergraph& h) {
  std::vector<Edge> pairs;
  for (const auto& s : h.hyperedges()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) pairs.emplace_back(s[i], s[j]);
    }
  }
  return EdgeSet(h.order(), pairs);
}

const std::vector<Graph>& graphs_of_order(int n) {
  if (n < 0 || n > kEnumerationCap) {
    throw CapExceeded("graph enumeration limited to orders 0.." + std::to_string(kEnumerationCap));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.push_back({Graph(0)});
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    std::set<std::vector<Edge>> seen;
    std::vector<Graph> next;
    for (const Graph& base : cache.back()) {
      for (Mask nbrs = 0; nbrs < bit(m - 1); ++nbrs) {
        Graph g = base.padded(1);
        for (int u = 0; u < m - 1; ++u) {
          if ((nbrs >> u) & 1U) g.add_edge(u, m - 1);
        }
        Graph c = canonical_form(g);
        if (seen.insert(c.edges()).second) next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.edges() < b.edges();
    });
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace overlay
