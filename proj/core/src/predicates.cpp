#include "overlay/predicates.hpp"

#include <algorithm>
#include <unordered_map>

#include "overlay/error.hpp"

namespace overlay {
namespace {

using Mask = std::uint64_t;

Mask reach_from(const Graph& g, int start, Mask allowed) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.row(v) & allowed;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

struct CutResult {
  int flow = 0;
  Mask source_side = 0;
};

/// Unit-capacity max flow between s and t on the undirected graph, capped at `limit`.
/// When the flow stays below the limit, source_side is the residual-reachable set of s.
CutResult local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    cap[e.u][e.v] = 1;
    cap[e.v][e.u] = 1;
  }
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(n));
  while (flow < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size() && parent[t] < 0; ++head) {
      int u = queue[head];
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] < 0) {
      Mask side = 0;
      for (int v = 0; v < n; ++v) {
        if (parent[v] >= 0) side |= Mask{1} << v;
      }
      return {flow, side};
    }
    for (int v = t; v != s; v = parent[v]) {
      --cap[parent[v]][v];
      ++cap[v][parent[v]];
    }
    ++flow;
  }
  return {flow, 0};
}

int matching_size(const Graph& g, Mask alive, std::unordered_map<Mask, int>& memo) {
  Mask active = 0;
  for (Mask m = alive; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((g.row(v) & alive) != 0) active |= Mask{1} << v;
  }
  if (active == 0) return 0;
  if (auto it = memo.find(active); it != memo.end()) return it->second;
  int v = std::countr_zero(active);
  Mask rest = active & ~(Mask{1} << v);
  int best = matching_size(g, rest, memo);
  for (Mask nb = g.row(v) & rest; nb != 0; nb &= nb - 1) {
    int u = std::countr_zero(nb);
    best = std::max(best, 1 + matching_size(g, rest & ~(Mask{1} << u), memo));
  }
  memo.emplace(active, best);
  return best;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reach_from(g, 0, g.vertex_mask()) == g.vertex_mask();
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  if (n > kHamiltonianCap) {
    throw CapExceeded("Hamiltonicity check limited to " + std::to_string(kHamiltonianCap) + " vertices");
  }
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  // Paths start at vertex 0; subsets range over vertices 1..n-1 (bit i-1 for vertex i).
  const int m = n - 1;
  const std::size_t states = std::size_t{1} << m;
  std::vector<std::uint32_t> ends(states, 0);
  for (int i = 0; i < m; ++i) {
    if (g.has_edge(0, i + 1)) ends[std::size_t{1} << i] = 1U << i;
  }
  for (std::size_t s = 1; s < states; ++s) {
    std::uint32_t e = ends[s];
    while (e != 0) {
      int i = std::countr_zero(e);
      e &= e - 1;
      Mask out = (g.row(i + 1) >> 1) & ~static_cast<Mask>(s) & ((Mask{1} << m) - 1);
      while (out != 0) {
        int j = std::countr_zero(out);
        out &= out - 1;
        ends[s | (std::size_t{1} << j)] |= 1U << j;
      }
    }
  }
  const std::size_t full = states - 1;
  int last = -1;
  for (int i = 0; i < m; ++i) {
    if (((ends[full] >> i) & 1U) != 0 && g.has_edge(0, i + 1)) {
      last = i;
      break;
    }
  }
  if (last < 0) return std::nullopt;
  std::vector<int> order;
  std::size_t s = full;
  int cur = last;
  while (true) {
    order.push_back(cur + 1);
    std::size_t prev = s & ~(std::size_t{1} << cur);
    if (prev == 0) break;
    int pick = -1;
    for (std::uint32_t e = ends[prev]; e != 0; e &= e - 1) {
      int i = std::countr_zero(e);
      if (g.has_edge(i + 1, cur + 1)) {
        pick = i;
        break;
      }
    }
    s = prev;
    cur = pick;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return order;
}

bool is_hamiltonian(const Graph& g) { return hamiltonian_cycle(g).has_value(); }

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return 0;
  int best = min_degree(g);
  for (int t = 1; t < n && best > 0; ++t) {
    best = std::min(best, local_edge_connectivity(g, 0, t, best).flow);
  }
  return best;
}

std::uint64_t min_cut_side(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) {
    throw PreconditionError("minimum cut needs a connected graph with at least two vertices");
  }
  int best = g.order();
  Mask side = 0;
  for (int t = 1; t < n; ++t) {
    CutResult r = local_edge_connectivity(g, 0, t, best);
    if (r.flow < best) {
      best = r.flow;
      side = r.source_side;
    }
  }
  return side;
}

std::vector<Edge> maximum_matching(const Graph& g) {
  std::unordered_map<Mask, int> memo;
  std::vector<Edge> out;
  Mask alive = g.vertex_mask();
  int target = matching_size(g, alive, memo);
  while (target > 0) {
    bool advanced = false;
    for (const Edge& e : g.edges()) {
      Mask bits = (Mask{1} << e.u) | (Mask{1} << e.v);
      if ((alive & bits) != bits) continue;
      if (1 + matching_size(g, alive & ~bits, memo) == target) {
        out.push_back(e);
        alive &= ~bits;
        --target;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

std::uint64_t degree_core(const Graph& g, int d) {
  Mask alive = g.vertex_mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask m = alive; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(g.row(v) & alive) < d) {
        alive &= ~(Mask{1} << v);
        changed = true;
      }
    }
  }
  return alive;
}

std::vector<Edge> spanning_tree(const Graph& g) {
  std::vector<Edge> out;
  if (!is_connected(g)) return out;
  Mask seen = 1;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (Mask nb = g.row(u) & ~seen; nb != 0; nb &= nb - 1) {
      int v = std::countr_zero(nb);
      seen |= Mask{1} << v;
      out.emplace_back(u, v);
      queue.push_back(v);
    }
  }
  return out;
}

GraphPredicates graph_predicates(const Graph& g) {
  return GraphPredicates{
      .connected = is_connected(g),
      .hamiltonian = is_hamiltonian(g),
      .min_degree = min_degree(g),
      .edge_connectivity = edge_connectivity(g),
  };
}

}  // namespace overlay
