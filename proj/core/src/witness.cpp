#include "overlay/witness.hpp"

#include <functional>

#include "overlay/error.hpp"
#include "overlay/subgraph.hpp"

namespace overlay {
namespace {

using Oracle = std::function<bool(const Graph&)>;

WitnessKind kind_of(Edge a, Edge b) {
  bool shared = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
  return shared ? WitnessKind::kIntersecting : WitnessKind::kDisjoint;
}

bool accepts(WitnessPreference preference, WitnessKind kind) {
  switch (preference) {
    case WitnessPreference::kAny:
      return true;
    case WitnessPreference::kIntersecting:
      return kind == WitnessKind::kIntersecting;
    case WitnessPreference::kDisjoint:
      return kind == WitnessKind::kDisjoint;
  }
  return false;
}

bool check(const Oracle& sat, const HardnessWitness& w) {
  const Graph& j = w.j;
  auto valid_non_edge = [&](Edge e) {
    return e.u != e.v && e.u >= 0 && e.v < j.order() && !j.has_edge(e.u, e.v);
  };
  if (!valid_non_edge(w.e1) || !valid_non_edge(w.e2) || w.e1 == w.e2) return false;
  if (w.kind != kind_of(w.e1, w.e2)) return false;
  return !sat(j) && sat(j.with_edge(w.e1)) && sat(j.with_edge(w.e2));
}

std::optional<HardnessWitness> make(const Oracle& sat, Graph j, Edge e1, Edge e2, WitnessRoute route,
                                    WitnessPreference preference) {
  HardnessWitness w{std::move(j), e1, e2, kind_of(e1, e2), route};
  if (!accepts(preference, w.kind) || !check(sat, w)) return std::nullopt;
  return w;
}

/// Member with isolated z and pendant y (neighbor x): J = F - xy, shifting non-edges xy and xz.
std::optional<HardnessWitness> isolated_pendant(const Oracle& sat, const Graph& f, WitnessRoute route,
                                                WitnessPreference preference) {
  std::uint64_t isolated = f.isolated_mask();
  if (isolated == 0) return std::nullopt;
  int z = std::countr_zero(isolated);
  for (int y = 0; y < f.order(); ++y) {
    if (f.degree(y) != 1) continue;
    int x = std::countr_zero(f.row(y));
    if (auto w = make(sat, f.without_edge(Edge(x, y)), Edge(x, y), Edge(x, z), route, preference)) return w;
  }
  return std::nullopt;
}

std::optional<Graph> minimal_below(const Oracle& sat, const Graph& x) {
  if (!sat(x)) return std::nullopt;
  Graph g = x;
  for (const Edge& e : x.edges()) {
    Graph smaller = g.without_edge(e);
    if (sat(smaller)) g = std::move(smaller);
  }
  return g;
}

/// Star with `leaves` edges at center 0, padded to order p.
Graph partial_star(int p, int leaves) {
  Graph g(p);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// Case analysis for slices that contain a non-empty subgraph of S_p but not K̄_p.
std::optional<HardnessWitness> star_route(const Oracle& sat, int p, WitnessPreference preference) {
  if (p < 3 || !sat(Graph::star(p)) || sat(Graph::edgeless(p))) return std::nullopt;
  const auto route = WitnessRoute::kStar;
  int leaves = 1;
  while (leaves < p - 1 && !sat(partial_star(p, leaves))) ++leaves;
  if (leaves <= p - 2) {
    // The smallest satisfying sub-star is itself a core member with an isolated vertex.
    return isolated_pendant(sat, partial_star(p, leaves), route, preference);
  }
  // Q_p on a1=0, a2=1, b=2, c_j = 3..p-1: edge a1a2 plus both a_i joined to every c_j.
  const int a1 = 0;
  const int a2 = 1;
  const int b = 2;
  Graph qp(p);
  qp.add_edge(a1, a2);
  for (int c = 3; c < p; ++c) {
    qp.add_edge(a1, c);
    qp.add_edge(a2, c);
  }
  if (!sat(qp)) return make(sat, qp, Edge(a1, b), Edge(a2, b), route, preference);

  std::optional<Graph> q = minimal_below(sat, qp);
  if (!q) return std::nullopt;
  for (int v = 0; v < p; ++v) {
    if (q->degree(v) == 1) return isolated_pendant(sat, *q, route, preference);
  }
  int c1 = -1;
  for (int c = 3; c < p && c1 < 0; ++c) {
    if (q->has_edge(a1, c)) c1 = c;
  }
  if (c1 < 0) return std::nullopt;
  Graph t = q->without_edge(Edge(a1, c1));
  Graph r = t.with_edge(Edge(a2, b));
  if (auto w = make(sat, r, Edge(a1, c1), Edge(a1, b), route, preference)) return w;
  return make(sat, t, Edge(a1, c1), Edge(a2, b), route, preference);
}

WitnessSearch exhaustive(const Oracle& sat, int p, WitnessPreference preference) {
  for (const Graph& j : graphs_of_order(p)) {
    if (sat(j)) continue;
    std::vector<Edge> completing;
    for (const Edge& e : j.non_edges()) {
      if (sat(j.with_edge(e))) completing.push_back(e);
    }
    for (std::size_t a = 0; a < completing.size(); ++a) {
      for (std::size_t b = a + 1; b < completing.size(); ++b) {
        WitnessKind kind = kind_of(completing[a], completing[b]);
        if (!accepts(preference, kind)) continue;
        return {SearchStatus::kFound,
                HardnessWitness{j, completing[a], completing[b], kind, WitnessRoute::kExhaustive}};
      }
    }
  }
  return {SearchStatus::kNone, std::nullopt};
}

WitnessSearch search(const Oracle& sat, int p, const std::function<std::vector<Graph>()>& core,
                     WitnessPreference preference) {
  if (p < 1) throw PreconditionError("orders start at 1");
  if (preference != WitnessPreference::kDisjoint) {
    std::vector<Graph> members;
    try {
      members = core();
    } catch (const CapExceeded&) {
      members.clear();
    }
    for (const Graph& f : members) {
      if (auto w = isolated_pendant(sat, f, WitnessRoute::kIsolatedPendant, preference)) {
        return {SearchStatus::kFound, w};
      }
    }
  }
  if (auto w = star_route(sat, p, preference)) return {SearchStatus::kFound, w};
  if (p <= kEnumerationCap) return exhaustive(sat, p, preference);
  return {SearchStatus::kInconclusive, std::nullopt};
}

Oracle family_oracle(const FamilySpec& family) {
  return [&family](const Graph& g) { return satisfies(family, g); };
}

Oracle slice_oracle(const OrderSlice& core) {
  return [&core](const Graph& g) {
    if (g.order() != core.order) return false;
    for (const Graph& m : core.members) {
      if (spanning_subgraph_iso(m, g)) return true;
    }
    return false;
  };
}

}  // namespace

WitnessSearch find_hard_witness(const FamilySpec& family, int p, WitnessPreference preference) {
  return search(family_oracle(family), p, [&] { return core_of(slice_of(family, p)).members; }, preference);
}

WitnessSearch find_hard_witness(const OrderSlice& slice, WitnessPreference preference) {
  OrderSlice core = core_of(slice);
  return search(slice_oracle(core), slice.order, [&] { return core.members; }, preference);
}

bool validate_witness(const FamilySpec& family, const HardnessWitness& witness) {
  return check(family_oracle(family), witness);
}

bool validate_witness(const OrderSlice& slice, const HardnessWitness& witness) {
  if (witness.j.order() != slice.order) return false;
  return check(slice_oracle(core_of(slice)), witness);
}

std::optional<Graph> minimal_member_below(const FamilySpec& family, const Graph& x) {
  return minimal_below(family_oracle(family), x);
}

}  // namespace overlay
