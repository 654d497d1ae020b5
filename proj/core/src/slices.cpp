#include "overlay/slices.hpp"

#include <algorithm>

#include "overlay/error.hpp"
#include "overlay/subgraph.hpp"

namespace overlay {
namespace {

void add_distinct(std::vector<Graph>& out, Graph g) {
  bool seen = std::any_of(out.begin(), out.end(), [&](const Graph& h) { return are_isomorphic(h, g); });
  if (!seen) out.push_back(std::move(g));
}

}  // namespace

OrderSlice slice_of(const FamilySpec& family, int p) {
  if (p < 1) throw PreconditionError("orders start at 1");
  OrderSlice slice{p, {}};
  switch (family.closure()) {
    case Closure::kNone:
      for (Graph& g : base_members_of_order(family, p)) add_distinct(slice.members, std::move(g));
      break;
    case Closure::kIsolated:
      for (int q = 1; q <= p; ++q) {
        for (const Graph& g : base_members_of_order(family.base_family(), q)) {
          add_distinct(slice.members, g.padded(p - q));
        }
      }
      break;
    case Closure::kSupergraph:
      for (const Graph& g : graphs_of_order(p)) {
        if (satisfies(family, g)) slice.members.push_back(g);
      }
      break;
  }
  return slice;
}

OrderSlice core_of(const OrderSlice& slice) {
  std::vector<Graph> distinct;
  for (const Graph& g : slice.members) add_distinct(distinct, g);
  OrderSlice core{slice.order, {}};
  for (const Graph& m : distinct) {
    bool minimal = std::none_of(distinct.begin(), distinct.end(), [&](const Graph& other) {
      return other.size() < m.size() && spanning_subgraph_iso(other, m);
    });
    if (minimal) core.members.push_back(m);
  }
  return core;
}

OrderSlice hypographs(const OrderSlice& slice) {
  if (slice.order < 2) throw PreconditionError("hypographs need order at least 2");
  OrderSlice out{slice.order - 1, {}};
  for (const Graph& m : slice.members) {
    for (int drop = 0; drop < m.order(); ++drop) {
      std::vector<int> keep;
      for (int v = 0; v < m.order(); ++v) {
        if (v != drop) keep.push_back(v);
      }
      add_distinct(out.members, induced_subgraph(m, keep));
    }
  }
  return out;
}

FamilySpec as_family(const OrderSlice& slice) { return FamilySpec::explicit_members(slice.members); }

}  // namespace overlay
