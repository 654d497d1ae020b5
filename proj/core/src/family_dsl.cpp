#include <sstream>

#include "cursor.hpp"
#include "overlay/error.hpp"
#include "overlay/family.hpp"

namespace overlay {
namespace {

const std::vector<std::string> kFamilyWords = {"connected", "hamiltonian", "clique", "edgeless",
                                               "star",      "mindeg",      "edgeconn", "matching",
                                               "explicit",  "encompass",   "isoclose"};

int parameter(detail::Cursor& cursor) {
  cursor.expect('(');
  int value = cursor.integer();
  cursor.expect(')');
  return value;
}

FamilySpec parse_node(detail::Cursor& cursor) {
  std::size_t start = cursor.local_position();
  cursor.skip_ws();
  std::size_t word_start = cursor.local_position();
  std::string word = cursor.word();
  auto build = [&](BuiltinKind kind, int param) {
    try {
      return FamilySpec::builtin(kind, param);
    } catch (const PreconditionError&) {
      cursor.rewind(word_start);
      cursor.fail({"valid parameter for " + word});
    }
  };
  if (word == "connected") return FamilySpec::connected();
  if (word == "hamiltonian") return FamilySpec::hamiltonian();
  if (word == "clique") return FamilySpec::clique();
  if (word == "edgeless") return FamilySpec::edgeless();
  if (word == "star") return FamilySpec::star();
  if (word == "mindeg") return build(BuiltinKind::kMinDegree, parameter(cursor));
  if (word == "edgeconn") return build(BuiltinKind::kEdgeConnectivity, parameter(cursor));
  if (word == "matching") return build(BuiltinKind::kMatching, parameter(cursor));
  if (word == "encompass" || word == "isoclose") {
    cursor.expect('(');
    FamilySpec inner = parse_node(cursor);
    cursor.expect(')');
    return word == "encompass" ? inner.encompassed() : inner.isoclosed();
  }
  if (word == "explicit") {
    cursor.expect('{');
    std::vector<Graph> members;
    do {
      std::size_t at = cursor.local_position();
      Graph g = detail::parse_graph(cursor);
      if (g.order() == 0) {
        cursor.rewind(at);
        cursor.fail({"graph with at least one vertex"});
      }
      members.push_back(std::move(g));
    } while (cursor.accept(';'));
    cursor.expect('}');
    return FamilySpec::explicit_members(std::move(members));
  }
  cursor.rewind(start);
  cursor.fail(kFamilyWords);
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  detail::Cursor cursor(text);
  FamilySpec f = parse_node(cursor);
  if (!cursor.at_end()) cursor.fail({"end of input"});
  return f;
}

std::string to_dsl(const FamilySpec& family) {
  std::ostringstream os;
  if (family.is_explicit()) {
    os << "explicit{";
    bool first = true;
    for (const Graph& m : family.explicit_base().members) {
      if (!first) os << ';';
      os << to_literal(m);
      first = false;
    }
    os << '}';
  } else {
    const BuiltinFamily& b = family.builtin_base();
    os << builtin_name(b.kind);
    if (b.kind == BuiltinKind::kMinDegree || b.kind == BuiltinKind::kEdgeConnectivity ||
        b.kind == BuiltinKind::kMatching) {
      os << '(' << b.param << ')';
    }
  }
  switch (family.closure()) {
    case Closure::kNone:
      return os.str();
    case Closure::kIsolated:
      return "isoclose(" + os.str() + ")";
    case Closure::kSupergraph:
      return "encompass(" + os.str() + ")";
  }
  return os.str();
}

}  // namespace overlay
