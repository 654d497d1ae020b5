#include "overlay/edge_set.hpp"

#include <algorithm>
#include <sstream>

#include "cursor.hpp"
#include "overlay/error.hpp"

namespace overlay {

EdgeSet::EdgeSet(int range) : range_(range) {
  if (range < 0) throw PreconditionError("negative vertex range");
}

EdgeSet::EdgeSet(int range, std::span<const Edge> edges) : EdgeSet(range) {
  for (const Edge& e : edges) check(e);
  edges_.assign(edges.begin(), edges.end());
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet::EdgeSet(int range, std::initializer_list<Edge> edges)
    : EdgeSet(range, std::span<const Edge>(edges.begin(), edges.size())) {}

void EdgeSet::check(Edge e) const {
  if (e.u < 0 || e.v >= range_ || e.u == e.v) {
    throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " outside vertex range [0, " + std::to_string(range_) + ")");
  }
}

bool EdgeSet::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool EdgeSet::insert(Edge e) {
  check(e);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool EdgeSet::erase(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  return true;
}

bool EdgeSet::includes(const EdgeSet& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end());
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  EdgeSet out(std::max(range_, other.range_));
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                 std::back_inserter(out.edges_));
  return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  EdgeSet out(range_);
  std::set_difference(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                      std::back_inserter(out.edges_));
  return out;
}

EdgeSet parse_edge_list(std::string_view text, int range) {
  detail::Cursor cursor(text);
  std::vector<Edge> edges;
  if (!cursor.at_end()) {
    do {
      std::size_t at = cursor.local_position();
      int u = cursor.integer();
      cursor.expect('-');
      int v = cursor.integer();
      if (u == v || u >= range || v >= range) {
        cursor.rewind(at);
        cursor.fail({"pair of distinct vertices below " + std::to_string(range)});
      }
      edges.emplace_back(u, v);
    } while (cursor.accept(','));
    if (!cursor.at_end()) cursor.fail({"',' or end of input"});
  }
  return EdgeSet(range, edges);
}

std::string format_edge_list(const EdgeSet& edges) {
  std::ostringstream os;
  bool first = true;
  for (const Edge& e : edges) {
    if (!first) os << ',';
    os << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

}  // namespace overlay
