#include "overlay/graph.hpp"

#include <algorithm>
#include <sstream>

#include "cursor.hpp"
#include "overlay/error.hpp"

namespace overlay {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxGraphOrder) {
    throw CapExceeded("graph order " + std::to_string(order) + " outside [0, 64]");
  }
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.adj_[u] = g.vertex_mask() & ~(std::uint64_t{1} << u);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::matching(int c) {
  Graph g(2 * c);
  for (int i = 0; i < c; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t r : adj_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw PreconditionError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(order_) + ")");
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1U;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

Graph Graph::with_edge(Edge e) const {
  Graph g = *this;
  g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::without_edge(Edge e) const {
  Graph g = *this;
  g.remove_edge(e.u, e.v);
  return g;
}

std::uint64_t Graph::vertex_mask() const {
  return order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
}

std::uint64_t Graph::isolated_mask() const {
  std::uint64_t mask = 0;
  for (int v = 0; v < order_; ++v) {
    if (adj_[v] == 0) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

int Graph::non_isolated_count() const { return order_ - std::popcount(isolated_mask()); }

int Graph::min_non_isolated_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) {
    int d = degree(v);
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq;
  seq.reserve(adj_.size());
  for (int v = 0; v < order_; ++v) seq.push_back(degree(v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    std::uint64_t higher = adj_[u] & ~((std::uint64_t{2} << u) - 1);
    while (higher != 0) {
      int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (((adj_[u] >> v) & 1U) == 0) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::padded(int extra) const {
  Graph g(order_ + extra);
  std::copy(adj_.begin(), adj_.end(), g.adj_.begin());
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) {
    throw PreconditionError("relabeling permutation has wrong length");
  }
  Graph g(order_);
  for (const Edge& e : edges()) g.add_edge(perm[e.u], perm[e.v]);
  return g;
}

std::string to_literal(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ':';
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ',';
    os << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

namespace detail {

Graph parse_graph(Cursor& cursor) {
  std::size_t start = cursor.local_position();
  int order = cursor.integer();
  if (order > kMaxGraphOrder) {
    cursor.rewind(start);
    cursor.fail({"graph order <= 64"});
  }
  cursor.expect(':');
  Graph g(order);
  if (!cursor.peek_digit()) return g;
  do {
    std::size_t at = cursor.local_position();
    int u = cursor.integer();
    cursor.expect('-');
    int v = cursor.integer();
    if (u >= order || v >= order || u == v) {
      cursor.rewind(at);
      cursor.fail({"edge with distinct endpoints below " + std::to_string(order)});
    }
    g.add_edge(u, v);
  } while (cursor.accept(','));
  return g;
}

}  // namespace detail

Graph parse_graph_literal(std::string_view text) {
  detail::Cursor cursor(text);
  Graph g = detail::parse_graph(cursor);
  if (!cursor.at_end()) cursor.fail({"',' or end of input"});
  return g;
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
  for (int v = 0; v < g.order(); ++v) {
    h ^= g.row(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace overlay
