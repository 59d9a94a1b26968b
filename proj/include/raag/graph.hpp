#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

// Vertex sets are bitmasks over the owning graph's vertex order, which caps
// the number of vertices. Everything downstream that enumerates generator
// subsets is exponential anyway, so the cap is never the binding constraint.
inline constexpr int max_vertices = 32;

/// Subset of the vertices of a graph, as a bitmask over vertex indices.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet full(int n) {
    return {n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n)};
  }

  bool contains(int v) const { return bits >> v & 1; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
  VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
  VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }

  friend bool operator==(VertexSet, VertexSet) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }
};

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

inline std::vector<std::string> split_tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

}  // namespace detail

/// Finite simplicial graph with a fixed vertex order. The order is the order
/// of declaration and induces every canonical ordering used elsewhere
/// (letters, components, generator names), so that identical inputs always
/// produce identical outputs.
class Graph {
 public:
  Graph(std::vector<std::string> vertex_names,
        const std::vector<std::pair<int, int>>& edge_list)
      : names_(std::move(vertex_names)) {
    const int n = static_cast<int>(names_.size());
    if (n > max_vertices)
      throw parse_error("too many vertices (limit " + std::to_string(max_vertices) + ")");
    for (int v = 0; v < n; ++v) {
      if (!detail::is_identifier(names_[v]))
        throw parse_error("invalid vertex name '" + names_[v] + "'");
      for (int w = v + 1; w < n; ++w)
        if (names_[v] == names_[w])
          throw parse_error("duplicate vertex name '" + names_[v] + "'");
    }
    adj_.assign(n, 0);
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw parse_error("edge endpoint out of range");
      if (u == v)
        throw parse_error("loop edge at vertex '" + names_[u] + "'");
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  /// Parses the graph file format: '#' comment lines, one `vertices:` line,
  /// one `edges:` line (tokens `u-v`, possibly none). Errors carry the
  /// offending line number.
  static Graph parse(std::string_view text);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  std::optional<int> find_vertex(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
      if (names_[v] == name) return v;
    return std::nullopt;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument("unknown vertex index " + std::to_string(v));
  }

  bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
  std::uint64_t link_bits(int v) const { return adj_[v]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v = u + 1; v < vertex_count(); ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  int edge_count() const { return static_cast<int>(edges().size()); }

  VertexSet vertices() const { return VertexSet::full(vertex_count()); }

  VertexSet link(int v) const {
    check_vertex(v);
    return {adj_[v]};
  }

  VertexSet star(int v) const {
    check_vertex(v);
    return {adj_[v] | std::uint64_t{1} << v};
  }

  /// Connected components of the full subgraph on V minus st(v), each sorted
  /// by vertex order, components ordered by their least vertex.
  std::vector<VertexSet> components_minus_star(int v) const {
    check_vertex(v);
    const std::uint64_t rest = vertices().bits & ~star(v).bits;
    std::vector<VertexSet> out;
    std::uint64_t seen = 0;
    for (int u = 0; u < vertex_count(); ++u) {
      if (!(rest >> u & 1) || (seen >> u & 1)) continue;
      std::uint64_t comp = 0;
      std::uint64_t frontier = std::uint64_t{1} << u;
      while (frontier != 0) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1)
          next |= adj_[std::countr_zero(b)];
        frontier = next & rest & ~comp;
      }
      seen |= comp;
      out.push_back({comp});
    }
    return out;
  }

  /// v dominates w: lk(w) is contained in st(v). Containment is non-strict,
  /// so every vertex dominates itself.
  bool dominates(int v, int w) const {
    check_vertex(v);
    check_vertex(w);
    return (adj_[w] & ~star(v).bits) == 0;
  }

  /// Vertices adjacent to everything else; they generate the group's center.
  VertexSet center() const {
    VertexSet z = vertices();
    for (int v = 0; v < vertex_count(); ++v) z = z & star(v);
    return z;
  }

  /// Full subgraph on `keep`, vertex order inherited.
  Graph induced(VertexSet keep) const {
    std::vector<std::string> names;
    std::vector<int> remap(vertex_count(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
      if (!keep.contains(v)) continue;
      remap[v] = static_cast<int>(names.size());
      names.push_back(names_[v]);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
      if (keep.contains(u) && keep.contains(v))
        es.emplace_back(remap[u], remap[v]);
    return Graph(std::move(names), es);
  }

  /// Full subgraph spanned by the non-central vertices; its group is
  /// isomorphic to the inner automorphism group of the ambient group.
  Graph non_central_subgraph() const { return induced(vertices() - center()); }

  /// All vertex permutations preserving adjacency, in lexicographic order.
  /// Brute-force backtracking with a degree-compatibility pruning pass.
  std::vector<std::vector<int>> automorphisms() const {
    const int n = vertex_count();
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = std::popcount(adj_[v]);

    std::vector<std::vector<int>> result;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(int)> place = [&](int v) {
      if (v == n) {
        result.push_back(image);
        return;
      }
      for (int c = 0; c < n; ++c) {
        if (used[c] || degree[c] != degree[v]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          ok = adjacent(u, v) == adjacent(image[u], c);
        if (!ok) continue;
        image[v] = c;
        used[c] = true;
        place(v + 1);
        used[c] = false;
        image[v] = -1;
      }
    };
    place(0);
    return result;
  }

  std::string set_to_string(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (int v : s.to_vector()) {
      if (!first) out += ",";
      out += names_[v];
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;  // adj_[v] excludes v itself
};

inline Graph Graph::parse(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::optional<std::vector<std::string>> edge_tokens;
  int edges_line = 0;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv = line;
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    if (sv.starts_with("vertices:")) {
      if (names)
        throw parse_error("duplicate 'vertices:' line", line_no);
      auto toks = detail::split_tokens(sv.substr(9));
      for (const auto& t : toks)
        if (!detail::is_identifier(t))
          throw parse_error("invalid vertex name '" + t + "'", line_no);
      for (std::size_t i = 0; i < toks.size(); ++i)
        for (std::size_t j = i + 1; j < toks.size(); ++j)
          if (toks[i] == toks[j])
            throw parse_error("duplicate vertex name '" + toks[i] + "'", line_no);
      if (static_cast<int>(toks.size()) > max_vertices)
        throw parse_error("too many vertices (limit " + std::to_string(max_vertices) + ")",
                          line_no);
      names = std::move(toks);
    } else if (sv.starts_with("edges:")) {
      if (edge_tokens)
        throw parse_error("duplicate 'edges:' line", line_no);
      edge_tokens = detail::split_tokens(sv.substr(6));
      edges_line = line_no;
    } else {
      throw parse_error("malformed line (expected 'vertices:', 'edges:' or '#')", line_no);
    }
  }
  if (!names) throw parse_error("missing 'vertices:' line");
  if (!edge_tokens) throw parse_error("missing 'edges:' line");

  Graph g(*names, {});
  std::vector<std::pair<int, int>> es;
  for (const auto& tok : *edge_tokens) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw parse_error("malformed edge '" + tok + "' (expected u-v)", edges_line);
    std::string a = tok.substr(0, dash), b = tok.substr(dash + 1);
    if (!detail::is_identifier(a) || !detail::is_identifier(b))
      throw parse_error("malformed edge '" + tok + "' (expected u-v)", edges_line);
    auto u = g.find_vertex(a), v = g.find_vertex(b);
    if (!u) throw parse_error("edge references undeclared vertex '" + a + "'", edges_line);
    if (!v) throw parse_error("edge references undeclared vertex '" + b + "'", edges_line);
    if (*u == *v) throw parse_error("loop edge at vertex '" + a + "'", edges_line);
    es.emplace_back(*u, *v);
  }
  return Graph(*names, es);
}

}  // namespace raag
