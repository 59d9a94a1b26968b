#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// One generator or inverse generator. Letters order by vertex first, then
/// sign with the positive letter before the inverse; this is the order behind
/// every lexicographic canonical form.
class Letter {
 public:
  Letter(int vertex, bool inverse)
      : code_(static_cast<std::uint8_t>(vertex * 2 + (inverse ? 1 : 0))) {}

  int vertex() const { return code_ >> 1; }
  bool is_inverse() const { return code_ & 1; }
  Letter inverted() const { return Letter(vertex(), !is_inverse()); }
  std::uint8_t code() const { return code_; }

  friend auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t code_;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l.code();
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Two letters may swap past each other exactly when their vertices are
/// distinct and adjacent.
inline bool independent(const Graph& g, Letter a, Letter b) {
  return a.vertex() != b.vertex() && g.adjacent(a.vertex(), b.vertex());
}

/// Group inverse as a plain letter sequence (no canonicalization).
inline Word raw_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

/// Cancels every pair x, x^-1 separated only by letters commuting with x.
/// Single left-to-right pass; each prefix of the output stays reduced, so the
/// result is fully reduced.
inline Word reduce(const Graph& g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    bool cancelled = false;
    for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
      if (out[k] == l.inverted()) {
        out.erase(out.begin() + k);
        cancelled = true;
        break;
      }
      if (!independent(g, out[k], l)) break;
    }
    if (!cancelled) out.push_back(l);
  }
  return out;
}

/// Lexicographically least word reachable from w by swapping adjacent
/// independent letters. Greedy: repeatedly emit the least letter whose
/// remaining predecessors all commute with it; a letter is emittable iff the
/// vertices still pending before it all lie in its link.
inline Word least_in_commutation_class(const Graph& g, const Word& w) {
  const int n = static_cast<int>(w.size());
  Word out;
  out.reserve(n);
  std::vector<char> taken(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::uint64_t pending = 0;  // vertices of untaken letters scanned so far
    for (int i = 0; i < n; ++i) {
      if (taken[i]) continue;
      if ((pending & ~g.link_bits(w[i].vertex())) == 0)
        if (best < 0 || w[i] < w[best]) best = i;
      pending |= std::uint64_t{1} << w[i].vertex();
    }
    taken[best] = 1;
    out.push_back(w[best]);
  }
  return out;
}

/// Canonical representative of the group element: reduce, then take the least
/// word in the commutation class. Two words represent the same element iff
/// their normal forms are identical letter sequences.
inline Word normal_form(const Graph& g, const Word& w) {
  return least_in_commutation_class(g, reduce(g, w));
}

inline Word multiply(const Graph& g, const Word& u, const Word& v) {
  Word joined = u;
  joined.insert(joined.end(), v.begin(), v.end());
  return normal_form(g, joined);
}

inline Word invert(const Graph& g, const Word& u) {
  return normal_form(g, raw_inverse(u));
}

inline VertexSet support(const Word& w) {
  VertexSet s;
  for (Letter l : w) s.insert(l.vertex());
  return s;
}

inline int element_length(const Graph& g, const Word& w) {
  return static_cast<int>(normal_form(g, w).size());
}

/// Parses whitespace-separated tokens `name` or `name^-1`; the single token
/// `1` denotes the empty word.
inline Word parse_word(const Graph& g, std::string_view text) {
  auto tokens = detail::split_tokens(text);
  if (tokens.size() == 1 && tokens[0] == "1") return {};
  Word out;
  for (const auto& tok : tokens) {
    if (tok == "1")
      throw parse_error("token '1' (the empty word) must stand alone");
    std::string name = tok;
    bool inverse = false;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      if (exp != "-1")
        throw parse_error("unsupported exponent '" + exp + "' in '" + tok +
                          "' (only ^-1; repeat the letter instead)");
      name = tok.substr(0, caret);
      inverse = true;
    }
    auto v = g.find_vertex(name);
    if (!v) throw parse_error("unknown vertex '" + name + "'");
    out.emplace_back(*v, inverse);
  }
  return out;
}

inline std::string letter_to_string(const Graph& g, Letter l) {
  return g.vertex_name(l.vertex()) + (l.is_inverse() ? "^-1" : "");
}

inline std::string word_to_string(const Graph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_to_string(g, w[i]);
  }
  return out;
}

/// Result of peeling conjugating letters off a reduced word:
/// the original element equals prefix * core * prefix^-1.
struct CyclicReduction {
  Word core;
  Word prefix;
};

/// Repeatedly strips a pair (x movable to the front, x^-1 movable to the
/// back). Movability is checked against all commutation-reachable first/last
/// letters, not just the literal endpoints.
inline CyclicReduction cyclic_reduction(const Graph& g, const Word& input) {
  Word w = reduce(g, input);
  Word prefix;
  for (;;) {
    const int n = static_cast<int>(w.size());
    if (n < 2) break;

    std::vector<char> front(n, 0), back(n, 0);
    std::uint64_t seen = 0;
    for (int i = 0; i < n; ++i) {
      front[i] = (seen & ~g.link_bits(w[i].vertex())) == 0;
      seen |= std::uint64_t{1} << w[i].vertex();
    }
    seen = 0;
    for (int j = n - 1; j >= 0; --j) {
      back[j] = (seen & ~g.link_bits(w[j].vertex())) == 0;
      seen |= std::uint64_t{1} << w[j].vertex();
    }

    int fi = -1, bj = -1;
    for (int i = 0; i < n && fi < 0; ++i) {
      if (!front[i]) continue;
      for (int j = n - 1; j >= 0; --j) {
        if (j == i || !back[j]) continue;
        if (w[j] == w[i].inverted()) {
          fi = i;
          bj = j;
          break;
        }
      }
    }
    if (fi < 0) break;

    prefix.push_back(w[fi]);
    Word next;
    next.reserve(n - 2);
    for (int k = 0; k < n; ++k)
      if (k != fi && k != bj) next.push_back(w[k]);
    w = reduce(g, next);
  }
  return {std::move(w), std::move(prefix)};
}

/// Canonical representative of a conjugacy class: cyclically reduced and
/// lexicographically least under rotation plus adjacent independent swaps.
/// Construct via cyclic_normal_form.
class CyclicWord {
 public:
  const Word& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  std::string to_string(const Graph& g) const { return word_to_string(g, letters_); }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

  friend CyclicWord cyclic_normal_form(const Graph&, const Word&, std::size_t);

 private:
  explicit CyclicWord(Word letters) : letters_(std::move(letters)) {}
  Word letters_;
};

inline constexpr std::size_t default_cyclic_budget = 1'000'000;

/// Breadth-first closure of the cyclically reduced word under rotation and
/// adjacent independent swaps, returning the least sequence visited. Throws
/// budget_exceeded when the closure grows past `budget` states; never returns
/// a silently unverified answer.
inline CyclicWord cyclic_normal_form(const Graph& g, const Word& w,
                                     std::size_t budget = default_cyclic_budget) {
  Word core = cyclic_reduction(g, normal_form(g, w)).core;
  if (core.size() <= 1) return CyclicWord(std::move(core));

  std::unordered_set<Word, WordHash> visited;
  std::deque<Word> queue;
  visited.insert(core);
  queue.push_back(core);
  Word best = core;

  auto visit = [&](Word cand) {
    if (visited.size() >= budget)
      throw budget_exceeded("cyclic canonicalization budget exceeded (" +
                            std::to_string(budget) + " states)");
    if (visited.insert(cand).second) {
      if (cand < best) best = cand;
      queue.push_back(std::move(cand));
    }
  };

  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();

    Word rot(cur.begin() + 1, cur.end());
    rot.push_back(cur.front());
    visit(std::move(rot));

    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!independent(g, cur[i], cur[i + 1])) continue;
      Word swapped = cur;
      std::swap(swapped[i], swapped[i + 1]);
      visit(std::move(swapped));
    }
  }
  return CyclicWord(std::move(best));
}

inline bool are_conjugate(const Graph& g, const Word& u, const Word& v,
                          std::size_t budget = default_cyclic_budget) {
  return cyclic_normal_form(g, u, budget) == cyclic_normal_form(g, v, budget);
}

inline int class_length(const Graph& g, const Word& w,
                        std::size_t budget = default_cyclic_budget) {
  return cyclic_normal_form(g, w, budget).length();
}

using ClassTuple = std::vector<CyclicWord>;

inline int tuple_length(const ClassTuple& t) {
  int total = 0;
  for (const auto& c : t) total += c.length();
  return total;
}

/// All conjugacy classes of length exactly 2, each once, sorted.
inline ClassTuple length_two_classes(const Graph& g) {
  ClassTuple out;
  const int n = g.vertex_count();
  for (int c1 = 0; c1 < 2 * n; ++c1) {
    for (int c2 = 0; c2 < 2 * n; ++c2) {
      Letter l1(c1 / 2, c1 % 2), l2(c2 / 2, c2 % 2);
      if (l2 == l1.inverted()) continue;
      out.push_back(cyclic_normal_form(g, Word{l1, l2}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace raag
