#include "overlay/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "overlay/error.hpp"

namespace overlay {

Hypergraph::Hypergraph(int order, std::vector<std::vector<int>> hyperedges)
    : order_(order), hyperedges_(std::move(hyperedges)) {
  if (order < 0) throw PreconditionError("negative hypergraph order");
  for (auto& s : hyperedges_) {
    if (s.empty()) throw PreconditionError("empty hyperedge");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw PreconditionError("hyperedge repeats a vertex");
    }
    if (s.front() < 0 || s.back() >= order) {
      throw PreconditionError("hyperedge vertex outside [0, " + std::to_string(order) + ")");
    }
  }
}

Hypergraph Hypergraph::normalized() const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> kept;
  for (const auto& s : hyperedges_) {
    if (seen.insert(s).second) kept.push_back(s);
  }
  Hypergraph out;
  out.order_ = order_;
  out.hyperedges_ = std::move(kept);
  return out;
}

bool Hypergraph::is_uniform(int p) const {
  return std::all_of(hyperedges_.begin(), hyperedges_.end(),
                     [p](const auto& s) { return static_cast<int>(s.size()) == p; });
}

std::size_t Hypergraph::max_hyperedge_size() const {
  std::size_t best = 0;
  for (const auto& s : hyperedges_) best = std::max(best, s.size());
  return best;
}

Hypergraph parse_hg(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int order = -1;
  std::vector<std::vector<int>> hyperedges;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "n") {
      if (order >= 0) fail("duplicate header");
      if (!(fields >> order) || order < 0) fail("expected non-negative vertex count after 'n'");
    } else if (tag == "e") {
      if (order < 0) fail("hyperedge before header 'n <N>'");
      std::vector<int> s;
      std::string token;
      while (fields >> token) {
        std::size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(token, &used);
        } catch (const std::exception&) {
          fail("expected vertex index, found '" + token + "'");
        }
        if (used != token.size() || v < 0 || v >= order) {
          fail("vertex '" + token + "' outside [0, " + std::to_string(order) + ")");
        }
        s.push_back(v);
      }
      if (s.empty()) fail("empty hyperedge");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail("hyperedge repeats a vertex");
      hyperedges.push_back(std::move(s));
    } else {
      fail("expected 'n' or 'e', found '" + tag + "'");
    }
    std::string rest;
    if (tag == "n" && (fields >> rest)) fail("trailing token '" + rest + "' after header");
  }
  if (order < 0) throw ParseError("missing header line 'n <N>'");
  return Hypergraph(order, std::move(hyperedges));
}

std::string format_hg(const Hypergraph& h, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "n " << h.order() << '\n';
  for (const auto& s : h.hyperedges()) {
    os << 'e';
    for (int v : s) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace overlay
