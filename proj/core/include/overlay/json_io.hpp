#pragma once

#include <string>
#include <string_view>

#include "overlay/classify.hpp"
#include "overlay/reductions.hpp"
#include "overlay/solver.hpp"

namespace overlay {

/// {value, edges: [[u,v],...], certificates: [...], stats: {nodes, millis}, engine}
std::string solution_to_json(const Solution& solution);
std::string check_to_json(const CheckResult& result);
std::string classification_to_json(const FamilySpec& family, const Classification& c);
std::string profile_to_json(const IsolatedProfile& profile);

/// Gadget descriptor {kind, source, vertex_map, forced_edges, k_prime, claim, hypergraph, family}.
std::string gadget_to_json(const GadgetOutput& gadget);
/// Throws ParseError on malformed descriptors.
GadgetOutput gadget_from_json(std::string_view text);

std::string report_to_json(const IdentityReport& report);

}  // namespace overlay
