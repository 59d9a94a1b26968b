#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raag/raag.hpp"

namespace test_util {

// The recurring test graphs. Vertex order matches the declaration order.
inline raag::Graph discrete(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return raag::Graph(names, {});
}

inline raag::Graph complete(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return raag::Graph(names, edges);
}

inline raag::Graph path(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return raag::Graph(names, edges);
}

inline raag::Graph cycle(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    edges.emplace_back(i, (i + 1) % n);
  }
  return raag::Graph(names, edges);
}

// Hub h adjacent to three leaves x, y, z.
inline raag::Graph star3() {
  return raag::Graph({"h", "x", "y", "z"}, {{0, 1}, {0, 2}, {0, 3}});
}

// Path a-b-c plus the isolated vertex d.
inline raag::Graph path3_plus_point() {
  return raag::Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}});
}

inline raag::Word random_word(std::mt19937& rng, const raag::Graph& g, int max_len,
                              int min_len = 0) {
  std::uniform_int_distribution<int> len_dist(min_len, max_len);
  std::uniform_int_distribution<int> code_dist(0, 2 * g.vertex_count() - 1);
  raag::Word w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    int code = code_dist(rng);
    w.emplace_back(code / 2, code % 2);
  }
  return w;
}

// Brute-force bounded conjugator search: looks for h with |h| <= max_len and
// h^-1 u h = v, walking candidate words depth-first with the conjugate
// updated incrementally. Skips words with an immediately cancelling pair
// (every element has a reduced representative, so this loses nothing).
inline std::optional<raag::Word> bounded_conjugator_search(const raag::Graph& g,
                                                           const raag::Word& u,
                                                           const raag::Word& v,
                                                           int max_len) {
  const raag::Word target = raag::normal_form(g, v);
  raag::Word h;

  struct Walker {
    const raag::Graph& g;
    const raag::Word& target;
    int max_len;
    raag::Word h;

    std::optional<raag::Word> walk(const raag::Word& conjugated) {
      if (conjugated == target) return h;
      if (static_cast<int>(h.size()) >= max_len) return std::nullopt;
      for (int code = 0; code < 2 * g.vertex_count(); ++code) {
        raag::Letter l(code / 2, code % 2);
        if (!h.empty() && h.back() == l.inverted()) continue;
        h.push_back(l);
        raag::Word next = conjugated;
        next.insert(next.begin(), l.inverted());
        next.push_back(l);
        if (auto found = walk(raag::normal_form(g, next))) return found;
        h.pop_back();
      }
      return std::nullopt;
    }
  };

  Walker walker{g, target, max_len, {}};
  return walker.walk(raag::normal_form(g, u));
}

}  // namespace test_util
