#include "overlay/classify.hpp"

#include <algorithm>

#include "overlay/error.hpp"
#include "overlay/slices.hpp"
#include "overlay/subgraph.hpp"

namespace overlay {
namespace {

std::vector<Edge> canonical_edges(const Graph& g) { return canonical_form(g).edges(); }

/// Strict weak order: smaller order first, then smaller canonical edge list.
bool tie_break_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return canonical_edges(a) < canonical_edges(b);
}

std::vector<Graph> sample_members(const FamilySpec& family) {
  FamilySpec base = family.base_family();
  if (base.is_explicit()) return base.explicit_base().members;
  std::vector<Graph> out;
  const int lowest = min_base_order(base).value_or(1);
  for (int q = 1; q <= std::max(kEnumerationCap, lowest); ++q) {
    if (q > kEnumerationCap && q != lowest) continue;
    for (Graph& g : base_members_of_order(base, q)) out.push_back(std::move(g));
  }
  return out;
}

/// Walks down through hypograph slices until a witness appears.
OrderVerdict lift_from_hypographs(const FamilySpec& family, int p) {
  OrderVerdict v{p, OrderVerdictKind::kUnknown, std::nullopt, 0, 0, {}};
  OrderSlice slice = core_of(slice_of(family, p));
  for (int depth = 1; slice.order > 1; ++depth) {
    slice = core_of(hypographs(slice));
    const int q = slice.order;
    const bool clique_only = slice.members.size() == 1 && slice.members[0].size() == q * (q - 1) / 2;
    const bool has_edgeless = std::any_of(slice.members.begin(), slice.members.end(),
                                          [](const Graph& g) { return g.size() == 0; });
    if (clique_only || has_edgeless) {
      v.note = "hypograph slice at order " + std::to_string(q) + " is easy";
      return v;
    }
    WitnessSearch s = find_hard_witness(slice);
    if (s.status == SearchStatus::kFound) {
      v.kind = OrderVerdictKind::kNpComplete;
      v.witness = s.witness;
      v.witness_order = q;
      v.lift_depth = depth;
      v.note = "lifted from hypographs at order " + std::to_string(q);
      return v;
    }
    if (s.status == SearchStatus::kInconclusive) {
      v.note = "witness search inconclusive at hypograph order " + std::to_string(q);
      return v;
    }
  }
  v.note = "no witness found down to order 1";
  return v;
}

}  // namespace

IsolatedProfile isolated_profile(const FamilySpec& family) {
  if (family.closure() == Closure::kNone && family.is_builtin()) {
    throw PreconditionError("isolated profile needs an explicit or closed family");
  }
  if (has_edgeless_member(family)) {
    throw PreconditionError("isolated profile is undefined for a family with an edgeless member");
  }
  std::vector<Graph> members = sample_members(family);
  if (members.empty()) throw PreconditionError("no members within the sampled orders");

  auto is_key = [](const Graph& g) { return std::pair{g.non_isolated_count(), g.min_non_isolated_degree()}; };
  const Graph* f_is = &members.front();
  const Graph* f_e = &members.front();
  for (const Graph& m : members) {
    if (is_key(m) < is_key(*f_is) || (is_key(m) == is_key(*f_is) && tie_break_less(m, *f_is))) f_is = &m;
    if (m.size() < f_e->size() || (m.size() == f_e->size() && tie_break_less(m, *f_e))) f_e = &m;
  }

  IsolatedProfile profile;
  profile.f_is = *f_is;
  profile.r_is = f_is->non_isolated_count();
  profile.delta_is = f_is->min_non_isolated_degree();
  profile.n_is = f_is->order();
  profile.m_is = f_is->size();
  profile.f_e = *f_e;
  profile.n_e = f_e->order();
  profile.m_e = f_e->size();
  if (family.closure() == Closure::kIsolated) {
    const int r = members.front().non_isolated_count();
    bool uniform = std::all_of(members.begin(), members.end(),
                               [r](const Graph& m) { return m.non_isolated_count() == r; });
    if (uniform) profile.uniform_r = r;
  }
  return profile;
}

std::optional<OrderVerdictKind> easy_order_kind(const FamilySpec& family, int p) {
  if (!has_member_of_order(family, p)) return OrderVerdictKind::kEmpty;
  if (p == 1) return OrderVerdictKind::kPolyClique;
  const Graph kp = Graph::complete(p);
  if (satisfies(family, kp) && !satisfies(family, kp.without_edge(Edge(0, 1)))) {
    return OrderVerdictKind::kPolyClique;
  }
  if (satisfies(family, Graph::edgeless(p))) return OrderVerdictKind::kPolyEdgeless;
  return std::nullopt;
}

OrderVerdict classify_order(const FamilySpec& family, int p) {
  OrderVerdict v{p, OrderVerdictKind::kUnknown, std::nullopt, 0, 0, {}};
  try {
    if (auto easy = easy_order_kind(family, p)) {
      v.kind = *easy;
      return v;
    }
    WitnessSearch s = find_hard_witness(family, p);
    switch (s.status) {
      case SearchStatus::kFound:
        v.kind = OrderVerdictKind::kNpComplete;
        v.witness = s.witness;
        v.witness_order = p;
        return v;
      case SearchStatus::kNone:
        return lift_from_hypographs(family, p);
      case SearchStatus::kInconclusive:
        v.note = "witness search inconclusive";
        return v;
    }
  } catch (const CapExceeded& e) {
    v.kind = OrderVerdictKind::kUnknown;
    v.note = e.what();
  }
  return v;
}

ParamVerdict classify_parameterized(const FamilySpec& family) {
  if (is_finite(family)) return {ParamVerdictKind::kFpt, FptReason::kFinite, "finite family"};
  if (auto bound = density_bound(family)) {
    return {ParamVerdictKind::kFpt, FptReason::kDensityBound, bound->describe()};
  }
  if (is_isolated_closed(family)) {
    if (has_edgeless_member(family)) {
      return {ParamVerdictKind::kFpt, FptReason::kEdgelessMember, "closed under isolated vertices with an edgeless member"};
    }
    try {
      IsolatedProfile profile = isolated_profile(family);
      if (profile.uniform_r) {
        return {ParamVerdictKind::kW2Hard, FptReason::kNone,
                "all members have " + std::to_string(*profile.uniform_r) + " non-isolated vertices"};
      }
      return {ParamVerdictKind::kW1Hard, FptReason::kNone, "closed under isolated vertices, no edgeless member"};
    } catch (const CapExceeded& e) {
      return {ParamVerdictKind::kUnknown, FptReason::kNone, e.what()};
    }
  }
  return {ParamVerdictKind::kUnknown, FptReason::kNone, "no sufficient condition applies"};
}

Classification classify(const FamilySpec& family, int p_max) {
  if (p_max < 1) throw PreconditionError("p_max must be at least 1");
  Classification c;
  for (int p = 1; p <= p_max; ++p) c.orders.push_back(classify_order(family, p));
  c.parameterized = classify_parameterized(family);
  return c;
}

std::string to_string(OrderVerdictKind kind) {
  switch (kind) {
    case OrderVerdictKind::kEmpty:
      return "EMPTY";
    case OrderVerdictKind::kPolyClique:
      return "POLY_CLIQUE";
    case OrderVerdictKind::kPolyEdgeless:
      return "POLY_EDGELESS";
    case OrderVerdictKind::kNpComplete:
      return "NP_COMPLETE";
    case OrderVerdictKind::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(ParamVerdictKind kind) {
  switch (kind) {
    case ParamVerdictKind::kFpt:
      return "FPT";
    case ParamVerdictKind::kW1Hard:
      return "W1_HARD";
    case ParamVerdictKind::kW2Hard:
      return "W2_HARD";
    case ParamVerdictKind::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(FptReason reason) {
  switch (reason) {
    case FptReason::kNone:
      return "none";
    case FptReason::kFinite:
      return "finite";
    case FptReason::kDensityBound:
      return "density-bound";
    case FptReason::kEdgelessMember:
      return "edgeless-member";
  }
  return "none";
}

}  // namespace overlay
