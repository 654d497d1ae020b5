#include "overlay/json_io.hpp"

#include <map>

#include "json.hpp"

#include "overlay/error.hpp"

namespace overlay {
namespace {

using json = nlohmann::ordered_json;

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(const EdgeSet& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

json certificate_json(const Certificate& c) {
  return {{"hyperedge", c.hyperedge}, {"member", to_literal(c.member)}, {"map", c.map}, {"predicate", c.predicate}};
}

json certificates_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (const auto& c : certs) out.push_back(certificate_json(c));
  return out;
}

json hypergraph_json(const Hypergraph& h) { return {{"order", h.order()}, {"hyperedges", h.hyperedges()}}; }

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

const std::map<ClaimKind, std::string>& claim_names() {
  static const std::map<ClaimKind, std::string> names{{ClaimKind::kOffsetIdentity, "offset-identity"},
                                                      {ClaimKind::kExactValue, "exact-value"},
                                                      {ClaimKind::kIff, "iff"},
                                                      {ClaimKind::kGapImplication, "gap-implication"}};
  return names;
}

std::string witness_kind_name(WitnessKind kind) {
  return kind == WitnessKind::kIntersecting ? "intersecting" : "disjoint";
}

std::string route_name(WitnessRoute route) {
  switch (route) {
    case WitnessRoute::kIsolatedPendant:
      return "isolated-pendant";
    case WitnessRoute::kStar:
      return "star";
    case WitnessRoute::kExhaustive:
      return "exhaustive";
  }
  return "?";
}

json witness_json(const HardnessWitness& w) {
  return {{"j", to_literal(w.j)},
          {"e1", edge_json(w.e1)},
          {"e2", edge_json(w.e2)},
          {"kind", witness_kind_name(w.kind)},
          {"route", route_name(w.route)}};
}

json hitting_set_json(const HittingSetInstance& hs) {
  return {{"universe_size", hs.universe_size}, {"sets", hs.sets}, {"k", hs.k}};
}

// --- reading -------------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ParseError("gadget descriptor: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

Edge read_edge(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    bad("edges must be [u, v] integer pairs");
  }
  return Edge(j[0].get<int>(), j[1].get<int>());
}

EdgeSet read_edges(const json& j, int range) {
  if (!j.is_array()) bad("edge list must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j) edges.push_back(read_edge(e));
  try {
    return EdgeSet(range, edges);
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
}

Hypergraph read_hypergraph(const json& j) {
  try {
    return Hypergraph(get<int>(j, "order"), get<std::vector<std::vector<int>>>(j, "hyperedges"));
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
}

HardnessWitness read_witness(const json& j) {
  HardnessWitness w;
  w.j = parse_graph_literal(get<std::string>(j, "j"));
  w.e1 = read_edge(field(j, "e1"));
  w.e2 = read_edge(field(j, "e2"));
  const auto kind = get<std::string>(j, "kind");
  if (kind != "intersecting" && kind != "disjoint") bad("unknown witness kind '" + kind + "'");
  w.kind = kind == "intersecting" ? WitnessKind::kIntersecting : WitnessKind::kDisjoint;
  if (j.contains("route")) {
    const auto route = get<std::string>(j, "route");
    for (WitnessRoute r : {WitnessRoute::kIsolatedPendant, WitnessRoute::kStar, WitnessRoute::kExhaustive}) {
      if (route_name(r) == route) w.route = r;
    }
  }
  return w;
}

Claim read_claim(const json& j) {
  Claim claim;
  const auto kind = get<std::string>(j, "kind");
  bool known = false;
  for (const auto& [k, name] : claim_names()) {
    if (name == kind) {
      claim.kind = k;
      known = true;
    }
  }
  if (!known) bad("unknown claim kind '" + kind + "'");
  claim.offset = get<long>(j, "offset");
  claim.value = get<long>(j, "value");
  claim.gap_factor = get<long>(j, "gap_factor");
  return claim;
}

}  // namespace

std::string solution_to_json(const Solution& solution) {
  json out{{"value", solution.value},
           {"edges", edges_json(solution.edges)},
           {"certificates", certificates_json(solution.certificates)},
           {"stats", {{"nodes", solution.stats.nodes}, {"millis", solution.stats.millis}}},
           {"engine", solution.engine}};
  return out.dump(2);
}

std::string check_to_json(const CheckResult& result) {
  json out{{"ok", result.ok},
           {"prescribed_ok", result.prescribed_ok},
           {"failing_hyperedge", optional_json(result.failing_hyperedge)},
           {"certificates", certificates_json(result.certificates)}};
  return out.dump(2);
}

std::string classification_to_json(const FamilySpec& family, const Classification& c) {
  json orders = json::array();
  for (const auto& v : c.orders) {
    json entry{{"p", v.p}, {"verdict", to_string(v.kind)}};
    entry["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    if (v.witness) {
      entry["witness_order"] = v.witness_order;
      entry["lift_depth"] = v.lift_depth;
    }
    if (!v.note.empty()) entry["note"] = v.note;
    orders.push_back(std::move(entry));
  }
  json out{{"family", to_dsl(family)},
           {"orders", std::move(orders)},
           {"parameterized",
            {{"verdict", to_string(c.parameterized.kind)},
             {"reason", to_string(c.parameterized.reason)},
             {"detail", c.parameterized.detail}}}};
  return out.dump(2);
}

std::string profile_to_json(const IsolatedProfile& p) {
  json out{{"f_is", to_literal(p.f_is)}, {"r_is", p.r_is},   {"delta_is", p.delta_is},
           {"n_is", p.n_is},             {"m_is", p.m_is},   {"f_e", to_literal(p.f_e)},
           {"n_e", p.n_e},               {"m_e", p.m_e},     {"uniform_r", optional_json(p.uniform_r)}};
  return out.dump(2);
}

std::string gadget_to_json(const GadgetOutput& g) {
  json vertex_map = json::object();
  for (std::size_t i = 0; i < g.vertex_names.size(); ++i) vertex_map[g.vertex_names[i]] = i;
  json source = json::object();
  if (g.source_instance) {
    const Instance& s = *g.source_instance;
    source["hypergraph"] = hypergraph_json(s.hypergraph());
    source["forced_edges"] = edges_json(s.prescribed());
    source["k"] = optional_json(s.budget());
    source["family"] = to_dsl(s.family());
  }
  if (g.source_hitting_set) source["hitting_set"] = hitting_set_json(*g.source_hitting_set);
  if (g.source_graph) source["graph"] = to_literal(*g.source_graph);
  if (g.witness) source["witness"] = witness_json(*g.witness);
  json out{{"kind", to_string(g.kind)},
           {"source", std::move(source)},
           {"vertex_map", std::move(vertex_map)},
           {"forced_edges", edges_json(g.instance.prescribed())},
           {"k_prime", g.k_prime},
           {"claim",
            {{"kind", claim_names().at(g.claim.kind)},
             {"offset", g.claim.offset},
             {"value", g.claim.value},
             {"gap_factor", g.claim.gap_factor}}},
           {"hypergraph", hypergraph_json(g.instance.hypergraph())},
           {"family", to_dsl(g.instance.family())}};
  return out.dump(2);
}

GadgetOutput gadget_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  const GadgetKind kind = parse_gadget_kind(get<std::string>(j, "kind"));
  const Hypergraph h = read_hypergraph(field(j, "hypergraph"));
  const FamilySpec family = parse_family(get<std::string>(j, "family"));
  const int k_prime = get<int>(j, "k_prime");

  std::vector<std::string> names(static_cast<std::size_t>(h.order()));
  std::vector<bool> seen(names.size(), false);
  const json& map = field(j, "vertex_map");
  if (!map.is_object() || map.size() != names.size()) bad("vertex_map must name every vertex once");
  for (const auto& [name, index] : map.items()) {
    if (!index.is_number_integer()) bad("vertex_map values must be integers");
    const auto i = index.get<long>();
    if (i < 0 || i >= h.order() || seen[i]) bad("vertex_map is not a bijection onto the vertex range");
    seen[i] = true;
    names[i] = name;
  }

  GadgetOutput out{.kind = kind,
                   .instance = Instance(h, family, read_edges(field(j, "forced_edges"), h.order()), k_prime),
                   .k_prime = k_prime,
                   .claim = read_claim(field(j, "claim")),
                   .vertex_names = std::move(names)};
  const json& source = field(j, "source");
  if (source.contains("hypergraph")) {
    const Hypergraph sh = read_hypergraph(source.at("hypergraph"));
    std::optional<int> k;
    if (source.contains("k") && !source.at("k").is_null()) k = get<int>(source, "k");
    out.source_instance = Instance(sh, parse_family(get<std::string>(source, "family")),
                                   read_edges(field(source, "forced_edges"), sh.order()), k);
  }
  if (source.contains("hitting_set")) {
    const json& hs = source.at("hitting_set");
    out.source_hitting_set = HittingSetInstance{.universe_size = get<int>(hs, "universe_size"),
                                                .sets = get<std::vector<std::vector<int>>>(hs, "sets"),
                                                .k = get<int>(hs, "k")};
  }
  if (source.contains("graph")) out.source_graph = parse_graph_literal(get<std::string>(source, "graph"));
  if (source.contains("witness")) out.witness = read_witness(source.at("witness"));
  return out;
}

std::string report_to_json(const IdentityReport& r) {
  json out{{"status", to_string(r.status)},
           {"kind", to_string(r.kind)},
           {"claim", claim_names().at(r.claim)},
           {"claimed", r.claimed},
           {"gadget_value", optional_json(r.gadget_value)},
           {"source_value", optional_json(r.source_value)},
           {"tau", optional_json(r.tau)},
           {"forward_ok", r.forward_ok},
           {"reverse_ok", r.reverse_ok}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out.dump(2);
}

}  // namespace overlay
