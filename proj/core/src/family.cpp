#include "overlay/family.hpp"

#include <algorithm>
#include <map>

#include "overlay/error.hpp"
#include "overlay/predicates.hpp"
#include "overlay/subgraph.hpp"

namespace overlay {

/// Precomputed views of an explicit member list.
struct ExplicitIndex {
  std::map<int, std::vector<Graph>> cores;
  /// minimal_up_to[p]: members of order <= p, minimal under (non-spanning) containment.
  std::vector<std::vector<Graph>> minimal_up_to;
};

namespace {

using Mask = std::uint64_t;

long binomial2(long n) { return n * (n - 1) / 2; }

long half_ceil(long a, long b) { return (a * b + 1) / 2; }

std::shared_ptr<const ExplicitIndex> build_index(const std::vector<Graph>& members) {
  auto index = std::make_shared<ExplicitIndex>();
  std::map<int, std::vector<Graph>> by_order;
  for (const Graph& m : members) by_order[m.order()].push_back(m);
  for (auto& [order, slice] : by_order) {
    std::vector<Graph> core;
    for (const Graph& m : slice) {
      bool minimal = std::none_of(slice.begin(), slice.end(), [&](const Graph& other) {
        return other.size() < m.size() && spanning_subgraph_iso(other, m);
      });
      if (minimal) core.push_back(m);
    }
    index->cores.emplace(order, std::move(core));
  }
  std::vector<Graph> minimal;
  for (const Graph& m : members) {
    bool redundant = std::any_of(members.begin(), members.end(), [&](const Graph& other) {
      if (&other == &m) return false;
      if (other.order() > m.order() || other.size() > m.size()) return false;
      if (other.order() == m.order() && other.size() == m.size()) return false;
      return contains_subgraph(other, m);
    });
    if (!redundant) minimal.push_back(m);
  }
  index->minimal_up_to.resize(kMaxGraphOrder + 1);
  for (int p = 0; p <= kMaxGraphOrder; ++p) {
    for (const Graph& m : minimal) {
      if (m.order() <= p) index->minimal_up_to[static_cast<std::size_t>(p)].push_back(m);
    }
  }
  return index;
}

void check_order_cap(const Graph& g) {
  if (g.order() > max_hyperedge_size()) {
    throw CapExceeded("graph of order " + std::to_string(g.order()) + " exceeds the hyperedge-size cap of " +
                      std::to_string(max_hyperedge_size()));
  }
}

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<int> identity_map(int n) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) map[v] = v;
  return map;
}

/// Vertex set S (as a mask of g) with edge_connectivity(G[S]) >= c, found by peeling to the
/// c-core and splitting along minimum cuts; any such S lies on one side of every smaller cut.
std::optional<Mask> dense_part(const Graph& g, Mask within, int c) {
  std::vector<int> verts = bits_of(within);
  Graph sub = induced_subgraph(g, verts);
  std::vector<int> core = bits_of(degree_core(sub, c));
  if (core.empty()) return std::nullopt;
  Graph cg = induced_subgraph(sub, core);
  auto to_g = [&](Mask local) {
    Mask out = 0;
    for (int i : bits_of(local)) out |= Mask{1} << verts[core[i]];
    return out;
  };
  // Split the core into components first.
  Mask remaining = cg.vertex_mask();
  while (remaining != 0) {
    int start = std::countr_zero(remaining);
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : bits_of(frontier)) next |= cg.row(v);
      frontier = next & ~comp;
      comp |= next;
    }
    remaining &= ~comp;
    std::vector<int> cv = bits_of(comp);
    Graph cc = induced_subgraph(cg, cv);
    if (cc.order() >= 2 && edge_connectivity(cc) >= c) return to_g(comp);
    if (cc.order() < 2) continue;
    Mask side_local = min_cut_side(cc);
    Mask side = 0;
    Mask other = 0;
    for (int i = 0; i < cc.order(); ++i) {
      ((side_local >> i) & 1U ? side : other) |= Mask{1} << cv[i];
    }
    if (auto found = dense_part(g, to_g(side), c)) return found;
    if (auto found = dense_part(g, to_g(other), c)) return found;
  }
  return std::nullopt;
}

/// Some cycle of g as a vertex sequence, from a DFS back edge.
std::optional<std::vector<int>> any_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : bits_of(g.row(u))) {
        if (parent[v] == -2) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          stack.push_back(v);
        } else if (v != parent[u] && parent[v] != u) {
          // Non-tree edge u-v closes a cycle through the lowest common ancestor.
          std::vector<int> a{u};
          std::vector<int> b{v};
          int x = u;
          int y = v;
          while (depth[x] > depth[y]) a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) b.push_back(y = parent[y]);
          while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
          }
          b.pop_back();
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          return a;
        }
      }
    }
  }
  return std::nullopt;
}

bool plain_builtin_member(const BuiltinFamily& b, const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  switch (b.kind) {
    case BuiltinKind::kConnected:
      return is_connected(g);
    case BuiltinKind::kHamiltonian:
      return is_hamiltonian(g);
    case BuiltinKind::kClique:
      return g.size() == binomial2(n);
    case BuiltinKind::kEdgeless:
      return g.size() == 0;
    case BuiltinKind::kStar: {
      if (n < 2 || g.size() != n - 1) return false;
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) return true;
      }
      return false;
    }
    case BuiltinKind::kMinDegree:
      return min_degree(g) >= b.param;
    case BuiltinKind::kEdgeConnectivity:
      return b.param == 0 || edge_connectivity(g) >= b.param;
    case BuiltinKind::kMatching:
      return n == 2 * b.param && g.size() == b.param && static_cast<int>(maximum_matching(g).size()) == b.param;
  }
  return false;
}

bool plain_member(const FamilySpec& f, const Graph& g) {
  if (f.is_builtin()) return plain_builtin_member(f.builtin_base(), g);
  for (const Graph& m : f.explicit_base().members) {
    if (are_isomorphic(m, g)) return true;
  }
  return false;
}

/// Spanning evidence for a family without closure.
std::optional<MemberEmbedding> certify_plain(const FamilySpec& f, const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (f.is_explicit()) {
    for (const Graph& m : f.explicit_core(n)) {
      if (auto map = find_spanning_embedding(m, g)) return MemberEmbedding{m, *map, "explicit"};
    }
    return std::nullopt;
  }
  const BuiltinFamily& b = f.builtin_base();
  const std::string name = builtin_name(b.kind);
  switch (b.kind) {
    case BuiltinKind::kConnected: {
      if (!is_connected(g)) return std::nullopt;
      std::vector<Edge> tree = spanning_tree(g);
      return MemberEmbedding{Graph(n, tree), identity_map(n), name};
    }
    case BuiltinKind::kHamiltonian: {
      auto cycle = hamiltonian_cycle(g);
      if (!cycle) return std::nullopt;
      return MemberEmbedding{Graph::cycle(n), *cycle, name};
    }
    case BuiltinKind::kClique:
      if (g.size() != binomial2(n)) return std::nullopt;
      return MemberEmbedding{Graph::complete(n), identity_map(n), name};
    case BuiltinKind::kEdgeless:
      return MemberEmbedding{Graph::edgeless(n), identity_map(n), name};
    case BuiltinKind::kStar: {
      if (n < 2) return std::nullopt;
      for (int c = 0; c < n; ++c) {
        if (g.degree(c) != n - 1) continue;
        std::vector<int> map{c};
        for (int v = 0; v < n; ++v) {
          if (v != c) map.push_back(v);
        }
        return MemberEmbedding{Graph::star(n), map, name};
      }
      return std::nullopt;
    }
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      if (!plain_builtin_member(b, g)) return std::nullopt;
      return MemberEmbedding{g, identity_map(n), name + "(" + std::to_string(b.param) + ")"};
    case BuiltinKind::kMatching: {
      if (n != 2 * b.param) return std::nullopt;
      std::vector<Edge> matching = maximum_matching(g);
      if (static_cast<int>(matching.size()) < b.param) return std::nullopt;
      std::vector<int> map;
      for (const Edge& e : matching) {
        map.push_back(e.u);
        map.push_back(e.v);
      }
      return MemberEmbedding{Graph::matching(b.param), map, name + "(" + std::to_string(b.param) + ")"};
    }
  }
  return std::nullopt;
}

/// Evidence that g contains (not necessarily spanning) some base member.
std::optional<MemberEmbedding> certify_contained(const FamilySpec& f, const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (f.is_explicit()) {
    for (const Graph& m : f.explicit_members_up_to(n)) {
      if (auto map = find_embedding(m, g)) return MemberEmbedding{m, *map, "explicit"};
    }
    return std::nullopt;
  }
  const BuiltinFamily& b = f.builtin_base();
  const std::string name = builtin_name(b.kind);
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kClique:
    case BuiltinKind::kEdgeless:
      return MemberEmbedding{Graph(1), {0}, name};
    case BuiltinKind::kHamiltonian: {
      auto cycle = any_cycle(g);
      if (!cycle) return std::nullopt;
      return MemberEmbedding{Graph::cycle(static_cast<int>(cycle->size())), *cycle, name};
    }
    case BuiltinKind::kStar: {
      std::vector<Edge> edges = g.edges();
      if (edges.empty()) return std::nullopt;
      return MemberEmbedding{Graph::star(2), {edges[0].u, edges[0].v}, name};
    }
    case BuiltinKind::kMinDegree: {
      const std::string label = name + "(" + std::to_string(b.param) + ")";
      Mask core = b.param == 0 ? Mask{1} : degree_core(g, b.param);
      if (core == 0) return std::nullopt;
      std::vector<int> verts = bits_of(core);
      return MemberEmbedding{induced_subgraph(g, verts), verts, label};
    }
    case BuiltinKind::kEdgeConnectivity: {
      const std::string label = name + "(" + std::to_string(b.param) + ")";
      if (b.param == 0) return MemberEmbedding{Graph(1), {0}, label};
      auto part = dense_part(g, g.vertex_mask(), b.param);
      if (!part) return std::nullopt;
      std::vector<int> verts = bits_of(*part);
      return MemberEmbedding{induced_subgraph(g, verts), verts, label};
    }
    case BuiltinKind::kMatching: {
      std::vector<Edge> matching = maximum_matching(g);
      if (static_cast<int>(matching.size()) < b.param) return std::nullopt;
      std::vector<int> map;
      for (int i = 0; i < b.param; ++i) {
        map.push_back(matching[i].u);
        map.push_back(matching[i].v);
      }
      return MemberEmbedding{Graph::matching(b.param), map, name + "(" + std::to_string(b.param) + ")"};
    }
  }
  return std::nullopt;
}

bool builtin_has_order(const BuiltinFamily& b, int p) {
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kClique:
    case BuiltinKind::kEdgeless:
      return p >= 1;
    case BuiltinKind::kHamiltonian:
      return p >= 3;
    case BuiltinKind::kStar:
      return p >= 2;
    case BuiltinKind::kMinDegree:
      return p >= b.param + 1;
    case BuiltinKind::kEdgeConnectivity:
      return p >= b.param + 1;
    case BuiltinKind::kMatching:
      return p == 2 * b.param;
  }
  return false;
}

std::optional<int> plain_min_edges(const FamilySpec& f, int p) {
  if (f.is_explicit()) {
    std::optional<int> best;
    for (const Graph& m : f.explicit_core(p)) {
      if (!best || m.size() < *best) best = m.size();
    }
    return best;
  }
  const BuiltinFamily& b = f.builtin_base();
  if (!builtin_has_order(b, p)) return std::nullopt;
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kStar:
      return p - 1;
    case BuiltinKind::kHamiltonian:
      return p;
    case BuiltinKind::kClique:
      return static_cast<int>(binomial2(p));
    case BuiltinKind::kEdgeless:
      return 0;
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      return static_cast<int>(half_ceil(b.param, p));
    case BuiltinKind::kMatching:
      return b.param;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityBound

long DensityBound::f(int n) const {
  switch (form_) {
    case Form::kTree:
      return std::max(0, n - 1);
    case Form::kCycle:
      return n;
    case Form::kComplete:
      return binomial2(n);
    case Form::kHalfDegree:
      return half_ceil(param_, n);
    case Form::kFinite:
      return n <= param_ ? 0 : n;
  }
  return 0;
}

int DensityBound::g(long k) const {
  if (k <= 0) return 0;
  long l = 0;
  switch (form_) {
    case Form::kTree:
      l = k + 1;
      break;
    case Form::kCycle:
      l = k;
      break;
    case Form::kComplete:
      while (binomial2(l) < k) ++l;
      break;
    case Form::kHalfDegree:
      l = (2 * k - 2) / param_ + 1;
      break;
    case Form::kFinite:
      l = std::max<long>(param_ + 1, k);
      break;
  }
  return static_cast<int>(std::min<long>(l, 1'000'000'000L));
}

std::string DensityBound::describe() const {
  switch (form_) {
    case Form::kTree:
      return "f(n)=n-1";
    case Form::kCycle:
      return "f(n)=n";
    case Form::kComplete:
      return "f(n)=n(n-1)/2";
    case Form::kHalfDegree:
      return "f(n)=ceil(" + std::to_string(param_) + "n/2)";
    case Form::kFinite:
      return "f(n)=0 for n<=" + std::to_string(param_) + ", n otherwise";
  }
  return {};
}

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec FamilySpec::builtin(BuiltinKind kind, int param) {
  const bool takes_param = kind == BuiltinKind::kMinDegree || kind == BuiltinKind::kEdgeConnectivity ||
                           kind == BuiltinKind::kMatching;
  if (!takes_param && param != 0) {
    throw PreconditionError(builtin_name(kind) + " takes no parameter");
  }
  if (param < 0 || param > kMaxGraphOrder) {
    throw PreconditionError(builtin_name(kind) + " parameter must lie in [0, 64]");
  }
  if (kind == BuiltinKind::kMatching && (param < 1 || param > kMaxGraphOrder / 2)) {
    throw PreconditionError("matching parameter must lie in [1, 32]");
  }
  FamilySpec f;
  f.base_ = BuiltinFamily{kind, param};
  return f;
}

FamilySpec FamilySpec::explicit_members(std::vector<Graph> members) {
  if (members.empty()) throw PreconditionError("explicit family needs at least one member");
  std::vector<Graph> distinct;
  for (Graph& m : members) {
    if (m.order() == 0) throw PreconditionError("explicit family members need at least one vertex");
    bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const Graph& d) { return are_isomorphic(d, m); });
    if (!seen) distinct.push_back(std::move(m));
  }
  FamilySpec f;
  f.index_ = build_index(distinct);
  f.base_ = ExplicitFamily{std::move(distinct)};
  return f;
}

FamilySpec FamilySpec::isoclosed() const {
  FamilySpec f = *this;
  if (f.closure_ == Closure::kNone) f.closure_ = Closure::kIsolated;
  return f;
}

FamilySpec FamilySpec::encompassed() const {
  FamilySpec f = *this;
  f.closure_ = Closure::kSupergraph;
  return f;
}

FamilySpec FamilySpec::base_family() const {
  FamilySpec f = *this;
  f.closure_ = Closure::kNone;
  return f;
}

const std::vector<Graph>& FamilySpec::explicit_core(int p) const {
  static const std::vector<Graph> empty;
  if (!index_) throw PreconditionError("explicit_core on a builtin family");
  auto it = index_->cores.find(p);
  return it == index_->cores.end() ? empty : it->second;
}

const std::vector<Graph>& FamilySpec::explicit_members_up_to(int p) const {
  if (!index_) throw PreconditionError("explicit_members_up_to on a builtin family");
  p = std::clamp(p, 0, kMaxGraphOrder);
  return index_->minimal_up_to[static_cast<std::size_t>(p)];
}

// ---------------------------------------------------------------------------
// Queries

std::string builtin_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::kConnected:
      return "connected";
    case BuiltinKind::kHamiltonian:
      return "hamiltonian";
    case BuiltinKind::kClique:
      return "clique";
    case BuiltinKind::kEdgeless:
      return "edgeless";
    case BuiltinKind::kStar:
      return "star";
    case BuiltinKind::kMinDegree:
      return "mindeg";
    case BuiltinKind::kEdgeConnectivity:
      return "edgeconn";
    case BuiltinKind::kMatching:
      return "matching";
  }
  return "?";
}

std::optional<int> min_base_order(const FamilySpec& family) {
  if (family.is_explicit()) {
    int best = kMaxGraphOrder + 1;
    for (const Graph& m : family.explicit_base().members) best = std::min(best, m.order());
    return best;
  }
  const BuiltinFamily& b = family.builtin_base();
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kClique:
    case BuiltinKind::kEdgeless:
      return 1;
    case BuiltinKind::kHamiltonian:
      return 3;
    case BuiltinKind::kStar:
      return 2;
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      return b.param + 1;
    case BuiltinKind::kMatching:
      return 2 * b.param;
  }
  return std::nullopt;
}

bool has_member_of_order(const FamilySpec& family, int p) {
  if (p < 1) throw PreconditionError("orders start at 1");
  if (family.closure() != Closure::kNone) {
    auto q = min_base_order(family);
    return q && *q <= p;
  }
  if (family.is_explicit()) return !family.explicit_core(p).empty();
  return builtin_has_order(family.builtin_base(), p);
}

std::optional<MemberEmbedding> certify(const FamilySpec& family, const Graph& g) {
  check_order_cap(g);
  if (family.closure() == Closure::kNone) return certify_plain(family, g);
  return certify_contained(family, g);
}

bool satisfies(const FamilySpec& family, const Graph& g) {
  check_order_cap(g);
  const int n = g.order();
  if (n == 0) return false;
  if (family.closure() != Closure::kNone) {
    if (family.is_explicit()) {
      const auto& members = family.explicit_members_up_to(n);
      return std::any_of(members.begin(), members.end(), [&](const Graph& m) { return contains_subgraph(m, g); });
    }
    return certify_contained(family, g).has_value();
  }
  if (family.is_explicit()) {
    const auto& core = family.explicit_core(n);
    return std::any_of(core.begin(), core.end(), [&](const Graph& m) { return spanning_subgraph_iso(m, g); });
  }
  const BuiltinFamily& b = family.builtin_base();
  switch (b.kind) {
    case BuiltinKind::kEdgeless:
      return true;
    case BuiltinKind::kStar:
      if (n < 2) return false;
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) return true;
      }
      return false;
    case BuiltinKind::kMatching:
      return n == 2 * b.param && static_cast<int>(maximum_matching(g).size()) == b.param;
    default:
      return plain_builtin_member(b, g);
  }
}

bool is_member(const FamilySpec& family, const Graph& g) {
  switch (family.closure()) {
    case Closure::kNone:
      return plain_member(family, g);
    case Closure::kSupergraph:
      return g.order() > 0 && certify_contained(family, g).has_value();
    case Closure::kIsolated: {
      // g = member + padding: try dropping 0..all of its isolated vertices.
      std::vector<int> keep;
      std::vector<int> isolated;
      for (int v = 0; v < g.order(); ++v) (g.degree(v) == 0 ? isolated : keep).push_back(v);
      FamilySpec base = family.base_family();
      for (std::size_t dropped = 0; dropped <= isolated.size(); ++dropped) {
        std::vector<int> verts = keep;
        verts.insert(verts.end(), isolated.begin() + static_cast<long>(dropped), isolated.end());
        std::sort(verts.begin(), verts.end());
        if (verts.empty()) continue;
        if (plain_member(base, induced_subgraph(g, verts))) return true;
      }
      return false;
    }
  }
  return false;
}

std::optional<int> min_member_edges(const FamilySpec& family, int p) {
  if (p < 1) return std::nullopt;
  if (family.closure() == Closure::kNone) return plain_min_edges(family, p);
  FamilySpec base = family.base_family();
  std::optional<int> best;
  for (int q = 1; q <= p; ++q) {
    auto m = plain_min_edges(base, q);
    if (m && (!best || *m < *best)) best = m;
  }
  return best;
}

bool is_monotone(const FamilySpec& family) {
  if (family.closure() == Closure::kSupergraph) return true;
  if (family.closure() == Closure::kIsolated) {
    if (!family.is_builtin()) return false;
    const BuiltinFamily& b = family.builtin_base();
    return (b.kind == BuiltinKind::kMinDegree && b.param <= 1) ||
           (b.kind == BuiltinKind::kEdgeConnectivity && b.param == 0);
  }
  if (family.is_explicit()) {
    for (const Graph& m : family.explicit_base().members) {
      for (const Edge& e : m.non_edges()) {
        if (!plain_member(family, m.with_edge(e))) return false;
      }
    }
    return true;
  }
  switch (family.builtin_base().kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kHamiltonian:
    case BuiltinKind::kClique:
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      return true;
    case BuiltinKind::kEdgeless:
    case BuiltinKind::kStar:
      return false;
    case BuiltinKind::kMatching:
      return family.builtin_base().param == 1;
  }
  return false;
}

bool is_isolated_closed(const FamilySpec& family) {
  if (family.closure() != Closure::kNone) return true;
  if (!family.is_builtin()) return false;
  const BuiltinFamily& b = family.builtin_base();
  return b.kind == BuiltinKind::kEdgeless ||
         ((b.kind == BuiltinKind::kMinDegree || b.kind == BuiltinKind::kEdgeConnectivity) && b.param == 0);
}

bool has_edgeless_member(const FamilySpec& family) {
  if (family.is_explicit()) {
    const auto& members = family.explicit_base().members;
    return std::any_of(members.begin(), members.end(), [](const Graph& m) { return m.size() == 0; });
  }
  const BuiltinFamily& b = family.builtin_base();
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kClique:
    case BuiltinKind::kEdgeless:
      return true;
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      return b.param == 0;
    default:
      return false;
  }
}

bool is_finite(const FamilySpec& family) {
  if (family.closure() != Closure::kNone) return false;
  return family.is_explicit() || family.builtin_base().kind == BuiltinKind::kMatching;
}

std::optional<DensityBound> density_bound(const FamilySpec& family) {
  using Form = DensityBound::Form;
  if (family.closure() != Closure::kNone) return std::nullopt;
  if (family.is_explicit()) {
    int largest = 0;
    for (const Graph& m : family.explicit_base().members) largest = std::max(largest, m.order());
    return DensityBound(Form::kFinite, largest);
  }
  const BuiltinFamily& b = family.builtin_base();
  switch (b.kind) {
    case BuiltinKind::kConnected:
    case BuiltinKind::kStar:
      return DensityBound(Form::kTree, 0);
    case BuiltinKind::kHamiltonian:
      return DensityBound(Form::kCycle, 0);
    case BuiltinKind::kClique:
      return DensityBound(Form::kComplete, 0);
    case BuiltinKind::kEdgeless:
      return std::nullopt;
    case BuiltinKind::kMinDegree:
    case BuiltinKind::kEdgeConnectivity:
      if (b.param == 0) return std::nullopt;
      return DensityBound(Form::kHalfDegree, b.param);
    case BuiltinKind::kMatching:
      return DensityBound(Form::kFinite, 2 * b.param);
  }
  return std::nullopt;
}

std::vector<Graph> base_members_of_order(const FamilySpec& family, int q) {
  if (q < 1) return {};
  if (family.is_explicit()) {
    std::vector<Graph> out;
    for (const Graph& m : family.explicit_base().members) {
      if (m.order() == q) out.push_back(m);
    }
    return out;
  }
  const BuiltinFamily& b = family.builtin_base();
  if (!builtin_has_order(b, q)) return {};
  switch (b.kind) {
    case BuiltinKind::kClique:
      return {Graph::complete(q)};
    case BuiltinKind::kEdgeless:
      return {Graph::edgeless(q)};
    case BuiltinKind::kStar:
      return {Graph::star(q)};
    case BuiltinKind::kMatching:
      return {Graph::matching(b.param)};
    default:
      break;
  }
  std::vector<Graph> out;
  for (const Graph& g : graphs_of_order(q)) {
    if (plain_builtin_member(b, g)) out.push_back(g);
  }
  return out;
}

}  // namespace overlay
