#include "overlay/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "overlay/classify.hpp"
#include "overlay/error.hpp"
#include "overlay/oracle.hpp"
#include "overlay/subgraph.hpp"

namespace overlay {
namespace {

std::string edge_label(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string indexed(const std::string& base, int j) { return base + "[" + std::to_string(j) + "]"; }

/// Vertex allocator keeping the name table in step with indices.
class Namer {
 public:
  int add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
  }
  std::vector<int> block(const std::string& base, int size) {
    std::vector<int> out;
    for (int j = 0; j < size; ++j) out.push_back(add(indexed(base, j)));
    return out;
  }
  int count() const { return static_cast<int>(names_.size()); }
  std::vector<std::string> take() { return std::move(names_); }

 private:
  std::vector<std::string> names_;
};

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

long binomial2(long n) { return n * (n - 1) / 2; }

/// Forces a copy of j whose vertex i lands on place[i].
void force_copy(const Graph& j, const std::vector<int>& place, std::vector<Edge>& forced) {
  for (const Edge& e : j.edges()) forced.emplace_back(place[e.u], place[e.v]);
}

struct HittingLayout {
  Hypergraph h;
  std::vector<std::string> names;
};

/// Shared layout of the hitting-set gadgets: a core of `core_size` vertices, one block per
/// universe element, and a pair gadget per core pair.
HittingLayout hitting_layout(const HittingSetInstance& hs, int core_size, int block_size, int pair_extra) {
  Namer names;
  std::vector<int> core = names.block("V_core", core_size);
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < hs.universe_size; ++i) blocks.push_back(names.block("V^" + std::to_string(i), block_size));
  std::vector<std::vector<int>> hyperedges;
  for (int a = 0; a < core_size; ++a) {
    for (int b = a + 1; b < core_size; ++b) {
      std::vector<int> extra = names.block("V_{" + std::to_string(a) + "," + std::to_string(b) + "}", pair_extra);
      hyperedges.push_back(sorted_union({core[a], core[b]}, extra));
    }
  }
  for (const auto& s : hs.sets) {
    std::vector<int> hyperedge = core;
    for (int i : s) hyperedge.insert(hyperedge.end(), blocks[i].begin(), blocks[i].end());
    std::sort(hyperedge.begin(), hyperedge.end());
    hyperedges.push_back(std::move(hyperedge));
  }
  int n = names.count();
  return {Hypergraph(n, std::move(hyperedges)), names.take()};
}

void check_hitting_set(const HittingSetInstance& hs) {
  if (hs.universe_size < 0) throw PreconditionError("negative universe size");
  if (hs.k < 0) throw PreconditionError("negative hitting-set budget");
  for (const auto& s : hs.sets) {
    if (s.empty()) throw PreconditionError("hitting-set instance has an empty set");
    for (int x : s) {
      if (x < 0 || x >= hs.universe_size) throw PreconditionError("set element outside the universe");
    }
  }
}

IsolatedProfile gadget_profile(const FamilySpec& family) {
  if (!is_isolated_closed(family)) {
    throw PreconditionError("family must be closed under adding isolated vertices");
  }
  return isolated_profile(family);
}

}  // namespace

// ---------------------------------------------------------------------------
// Hitting-set text format

HittingSetInstance parse_hs(std::string_view text, int k) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  HittingSetInstance hs;
  hs.universe_size = -1;
  hs.k = k;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "u") {
      if (hs.universe_size >= 0) fail("duplicate header");
      if (!(fields >> hs.universe_size) || hs.universe_size < 0) fail("expected universe size after 'u'");
      std::string rest;
      if (fields >> rest) fail("trailing token '" + rest + "' after header");
    } else if (tag == "s") {
      if (hs.universe_size < 0) fail("set before header 'u <n>'");
      std::vector<int> s;
      std::string token;
      while (fields >> token) {
        std::size_t used = 0;
        int x = -1;
        try {
          x = std::stoi(token, &used);
        } catch (const std::exception&) {
          fail("expected element, found '" + token + "'");
        }
        if (used != token.size() || x < 0 || x >= hs.universe_size) {
          fail("element '" + token + "' outside [0, " + std::to_string(hs.universe_size) + ")");
        }
        s.push_back(x);
      }
      if (s.empty()) fail("empty set");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("set repeats an element");
      hs.sets.push_back(std::move(s));
    } else {
      fail("expected 'u' or 's', found '" + tag + "'");
    }
  }
  if (hs.universe_size < 0) throw ParseError("missing header line 'u <n>'");
  return hs;
}

std::string format_hs(const HittingSetInstance& hs) {
  std::ostringstream os;
  os << "u " << hs.universe_size << '\n';
  for (const auto& s : hs.sets) {
    os << 's';
    for (int x : s) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kPrescribedToPlain:
      return "prescribed-to-plain";
    case GadgetKind::kLiftOrder:
      return "lift";
    case GadgetKind::kVertexCover:
      return "vc";
    case GadgetKind::kW1:
      return "w1";
    case GadgetKind::kW2:
      return "w2";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view name) {
  for (GadgetKind k : {GadgetKind::kPrescribedToPlain, GadgetKind::kLiftOrder, GadgetKind::kVertexCover,
                       GadgetKind::kW1, GadgetKind::kW2}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError(0, {"prescribed-to-plain", "lift", "vc", "w1", "w2"}, std::string(name));
}

// ---------------------------------------------------------------------------
// Constructions

GadgetOutput prescribed_to_plain(const Hypergraph& h, int k, const EdgeSet& forced, const FamilySpec& family,
                                 std::optional<int> order) {
  Instance source(h, family, forced, k);
  const Hypergraph& base = source.hypergraph();
  Namer names;
  for (int v = 0; v < base.order(); ++v) names.add("v" + std::to_string(v));
  if (forced.empty()) {
    return GadgetOutput{.kind = GadgetKind::kPrescribedToPlain,
                        .instance = Instance(base, family, {}, k),
                        .k_prime = k,
                        .claim = Claim{ClaimKind::kOffsetIdentity, 0, 0, 0},
                        .vertex_names = names.take(),
                        .source_instance = source};
  }

  auto eligible = [&](int p) {
    return has_member_of_order(family, p) && !satisfies(family, Graph::edgeless(p));
  };
  int p = 0;
  if (order) {
    if (*order < 2 || !eligible(*order)) {
      throw PreconditionError("order " + std::to_string(*order) + " has no member or contains the edgeless graph");
    }
    p = *order;
  } else {
    for (int q = 2; q <= max_hyperedge_size() && p == 0; ++q) {
      if (eligible(q)) p = q;
    }
    if (p == 0) throw PreconditionError("no order slice is nonempty without the edgeless graph");
  }
  const int m_f = *min_member_edges(family, p);

  std::vector<std::vector<int>> hyperedges = base.hyperedges();
  for (const Edge& e : source.prescribed()) {
    std::vector<int> x = names.block("X_" + edge_label(e), p - 2);
    hyperedges.push_back(sorted_union({e.u, e.v}, x));
  }
  const long offset = static_cast<long>(forced.size()) * (m_f - 1);
  const int k_prime = k + static_cast<int>(offset);
  const int n = names.count();
  return GadgetOutput{.kind = GadgetKind::kPrescribedToPlain,
                      .instance = Instance(Hypergraph(n, std::move(hyperedges)), family, {}, k_prime),
                      .k_prime = k_prime,
                      .claim = Claim{ClaimKind::kOffsetIdentity, offset, 0, 0},
                      .vertex_names = names.take(),
                      .source_instance = source};
}

GadgetOutput lift_order(const Hypergraph& h_minus, int k_minus, const EdgeSet& forced_minus, const OrderSlice& fp) {
  const int p = fp.order;
  if (p < 2 || fp.members.empty()) throw PreconditionError("lift needs a nonempty slice of order at least 2");
  const Hypergraph base = h_minus.normalized();
  if (!base.is_uniform(p - 1)) {
    throw PreconditionError("lift needs a " + std::to_string(p - 1) + "-uniform hypergraph");
  }
  Instance source(base, as_family(hypographs(fp)), forced_minus, k_minus);
  Namer names;
  for (int v = 0; v < base.order(); ++v) names.add("v" + std::to_string(v));
  std::vector<std::vector<int>> hyperedges;
  std::vector<Edge> forced = source.prescribed().edges();
  for (std::size_t i = 0; i < base.hyperedge_count(); ++i) {
    const auto& s = base.hyperedge(i);
    int x = names.add("x_S" + std::to_string(i));
    for (int v : s) forced.emplace_back(x, v);
    hyperedges.push_back(sorted_union(s, {x}));
  }
  const long offset = static_cast<long>(p - 1) * static_cast<long>(base.hyperedge_count());
  const int n = names.count();
  const int k = k_minus + static_cast<int>(offset);
  return GadgetOutput{.kind = GadgetKind::kLiftOrder,
                      .instance = Instance(Hypergraph(n, std::move(hyperedges)), as_family(fp), EdgeSet(n, forced), k),
                      .k_prime = k,
                      .claim = Claim{ClaimKind::kOffsetIdentity, offset, 0, 0},
                      .vertex_names = names.take(),
                      .source_instance = source};
}

GadgetOutput vc_gadget(const Graph& g, const OrderSlice& fp, const HardnessWitness& witness) {
  const int p = fp.order;
  if (witness.j.order() != p || !validate_witness(fp, witness)) {
    throw PreconditionError("witness does not validate against the slice");
  }
  const bool intersecting = witness.kind == WitnessKind::kIntersecting;
  if (p < (intersecting ? 3 : 4)) throw PreconditionError("slice order too small for this witness kind");
  if (g.order() > 16) throw CapExceeded("vertex-cover gadget limited to 16 source vertices");

  Namer names;
  std::vector<int> xs;
  std::vector<int> ys;
  for (int v = 0; v < g.order(); ++v) {
    xs.push_back(names.add("x_" + std::to_string(v)));
    ys.push_back(names.add("y_" + std::to_string(v)));
  }
  std::vector<std::vector<int>> hyperedges;
  std::vector<Edge> forced;
  const Graph& j = witness.j;

  // Witness vertices outside the shifting pairs fill the per-hyperedge private block.
  auto place_copy = [&](const std::vector<std::pair<int, int>>& fixed, const std::vector<int>& block) {
    std::vector<int> place(static_cast<std::size_t>(p), -1);
    for (auto [jv, hv] : fixed) place[jv] = hv;
    std::size_t next = 0;
    for (int v = 0; v < p; ++v) {
      if (place[v] < 0) place[v] = block[next++];
    }
    force_copy(j, place, forced);
    std::vector<int> hyperedge = block;
    for (auto [jv, hv] : fixed) hyperedge.push_back(hv);
    std::sort(hyperedge.begin(), hyperedge.end());
    hyperedges.push_back(std::move(hyperedge));
  };

  if (intersecting) {
    const Edge e1 = witness.e1;
    const Edge e2 = witness.e2;
    const int w = (e1.u == e2.u || e1.u == e2.v) ? e1.u : e1.v;
    const int a = e1.u == w ? e1.v : e1.u;
    const int b = e2.u == w ? e2.v : e2.u;
    for (const Edge& e : g.edges()) {
      const std::string label = edge_label(e);
      const int u = e.u;
      const int v = e.v;
      int z = names.add("z_" + label);
      std::vector<int> z_block = names.block("Z_" + label, p - 3);
      std::vector<int> yu_block = names.block("Y^" + label + "_" + std::to_string(u), p - 3);
      std::vector<int> yv_block = names.block("Y^" + label + "_" + std::to_string(v), p - 3);
      place_copy({{w, z}, {a, ys[u]}, {b, ys[v]}}, z_block);
      place_copy({{w, ys[u]}, {a, z}, {b, xs[u]}}, yu_block);
      place_copy({{w, ys[v]}, {a, z}, {b, xs[v]}}, yv_block);
    }
  } else {
    const int x1 = witness.e1.u;
    const int y1 = witness.e1.v;
    const int x2 = witness.e2.u;
    const int y2 = witness.e2.v;
    for (const Edge& e : g.edges()) {
      const std::string label = edge_label(e);
      const int u = e.u;
      const int v = e.v;
      int xue = names.add("x^" + label + "_" + std::to_string(u));
      int yue = names.add("y^" + label + "_" + std::to_string(u));
      int xve = names.add("x^" + label + "_" + std::to_string(v));
      int yve = names.add("y^" + label + "_" + std::to_string(v));
      std::vector<int> z_block = names.block("Z_" + label, p - 4);
      std::vector<int> yu_block = names.block("Y^" + label + "_" + std::to_string(u), p - 4);
      std::vector<int> yv_block = names.block("Y^" + label + "_" + std::to_string(v), p - 4);
      place_copy({{x1, xue}, {y1, yue}, {x2, xve}, {y2, yve}}, z_block);
      place_copy({{x1, xs[u]}, {y1, ys[u]}, {x2, xue}, {y2, yue}}, yu_block);
      place_copy({{x1, xs[v]}, {y1, ys[v]}, {x2, xve}, {y2, yve}}, yv_block);
    }
  }

  const int n = names.count();
  EdgeSet forced_set(n, forced);
  const long value = static_cast<long>(forced_set.size()) + vertex_cover_bf(g) + g.size();
  return GadgetOutput{.kind = GadgetKind::kVertexCover,
                      .instance = Instance(Hypergraph(n, std::move(hyperedges)), as_family(fp), forced_set,
                                           static_cast<int>(value)),
                      .k_prime = static_cast<int>(value),
                      .claim = Claim{ClaimKind::kExactValue, 0, value, 0},
                      .vertex_names = names.take(),
                      .source_graph = g,
                      .witness = witness};
}

GadgetOutput w1_gadget(const HittingSetInstance& hs, const FamilySpec& family) {
  check_hitting_set(hs);
  const IsolatedProfile profile = gadget_profile(family);
  HittingLayout layout =
      hitting_layout(hs, profile.r_is - 1, profile.n_is - profile.r_is + 1, profile.n_e - 2);
  const long k_prime = binomial2(profile.r_is - 1) * profile.m_e + static_cast<long>(hs.k) * profile.delta_is;
  return GadgetOutput{.kind = GadgetKind::kW1,
                      .instance = Instance(std::move(layout.h), family, {}, static_cast<int>(k_prime)),
                      .k_prime = static_cast<int>(k_prime),
                      .claim = Claim{ClaimKind::kGapImplication, 0, k_prime, 2L * profile.r_is},
                      .vertex_names = std::move(layout.names),
                      .source_hitting_set = hs};
}

GadgetOutput w2_gadget(const HittingSetInstance& hs, const FamilySpec& family) {
  check_hitting_set(hs);
  const IsolatedProfile profile = gadget_profile(family);
  if (!profile.uniform_r) {
    throw PreconditionError("members do not share one non-isolated vertex count");
  }
  const int r = *profile.uniform_r;
  HittingLayout layout = hitting_layout(hs, r - 1, profile.n_is - r + 1, profile.n_e - 2);
  const long k_prime = binomial2(r - 1) * profile.m_e + static_cast<long>(hs.k) * profile.delta_is;
  return GadgetOutput{.kind = GadgetKind::kW2,
                      .instance = Instance(std::move(layout.h), family, {}, static_cast<int>(k_prime)),
                      .k_prime = static_cast<int>(k_prime),
                      .claim = Claim{ClaimKind::kIff, 0, k_prime, 0},
                      .vertex_names = std::move(layout.names),
                      .source_hitting_set = hs};
}

// ---------------------------------------------------------------------------
// Ground truth for the source problems

int vertex_cover_bf(const Graph& g) {
  if (g.order() > 16) throw CapExceeded("vertex cover brute force limited to 16 vertices");
  const std::vector<Edge> edges = g.edges();
  int best = g.order();
  for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool covers = std::all_of(edges.begin(), edges.end(),
                              [&](const Edge& e) { return ((mask >> e.u) & 1U) != 0 || ((mask >> e.v) & 1U) != 0; });
    if (covers) best = size;
  }
  return best;
}

int hitting_set_bf(const HittingSetInstance& hs) {
  check_hitting_set(hs);
  if (hs.universe_size > 20) throw CapExceeded("hitting set brute force limited to a universe of 20");
  std::vector<std::uint32_t> masks;
  for (const auto& s : hs.sets) {
    std::uint32_t m = 0;
    for (int x : s) m |= 1U << x;
    masks.push_back(m);
  }
  int best = hs.universe_size;
  for (std::uint32_t pick = 0; pick < (1U << hs.universe_size); ++pick) {
    int size = std::popcount(pick);
    if (size >= best) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & pick) != 0; })) best = size;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Verification

IdentityReport verify_identity(const GadgetOutput& gadget, const VerifyOptions& options) {
  IdentityReport report;
  report.kind = gadget.kind;
  report.claim = gadget.claim.kind;
  auto optimum = [&](const Instance& inst, std::optional<int> limit) -> std::optional<long> {
    OracleOptions o;
    o.cap = options.oracle_cap;
    o.max_value = limit;
    auto s = brute_force_oracle(inst, o);
    if (!s) return std::nullopt;
    return s->value;
  };
  try {
    switch (gadget.claim.kind) {
      case ClaimKind::kOffsetIdentity: {
        if (!gadget.source_instance) throw PreconditionError("offset identity without a source instance");
        report.source_value = optimum(*gadget.source_instance, std::nullopt);
        if (!report.source_value) {
          report.gadget_value = optimum(gadget.instance, std::nullopt);
          report.status = report.gadget_value ? IdentityReport::Status::kFail : IdentityReport::Status::kPass;
          report.detail = "source infeasible";
          break;
        }
        report.claimed = *report.source_value + gadget.claim.offset;
        report.gadget_value = optimum(gadget.instance, static_cast<int>(report.claimed + 1));
        report.status = report.gadget_value == report.claimed ? IdentityReport::Status::kPass
                                                              : IdentityReport::Status::kFail;
        break;
      }
      case ClaimKind::kExactValue: {
        report.claimed = gadget.claim.value;
        report.gadget_value = optimum(gadget.instance, static_cast<int>(report.claimed + 1));
        report.status = report.gadget_value == report.claimed ? IdentityReport::Status::kPass
                                                              : IdentityReport::Status::kFail;
        break;
      }
      case ClaimKind::kIff:
      case ClaimKind::kGapImplication: {
        if (!gadget.source_hitting_set) throw PreconditionError("hitting-set claim without a source instance");
        const HittingSetInstance& hs = *gadget.source_hitting_set;
        report.claimed = gadget.claim.value;
        report.tau = hitting_set_bf(hs);
        report.gadget_value = optimum(gadget.instance, gadget.k_prime);
        const bool hit = *report.tau <= hs.k;
        const bool fits = report.gadget_value.has_value();
        if (gadget.claim.kind == ClaimKind::kIff) {
          report.forward_ok = !hit || fits;
          report.reverse_ok = !fits || hit;
        } else {
          report.forward_ok = !hit || fits;
          report.reverse_ok = !fits || *report.tau <= gadget.claim.gap_factor * hs.k;
        }
        report.status = report.forward_ok && report.reverse_ok ? IdentityReport::Status::kPass
                                                               : IdentityReport::Status::kFail;
        break;
      }
    }
  } catch (const CapExceeded& e) {
    report.status = IdentityReport::Status::kUnverifiable;
    report.detail = std::string("unverifiable at this scale: ") + e.what();
  }
  return report;
}

std::string to_string(IdentityReport::Status status) {
  switch (status) {
    case IdentityReport::Status::kPass:
      return "PASS";
    case IdentityReport::Status::kFail:
      return "FAIL";
    case IdentityReport::Status::kUnverifiable:
      return "UNVERIFIABLE";
  }
  return "?";
}

}  // namespace overlay
