#pragma once

#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "raag/word.hpp"

namespace raag {

/// Endomorphism given by the images of the vertex generators. Images are kept
/// in normal form, so equality of maps is plain equality of image vectors.
class Endo {
 public:
  static Endo identity(const Graph& g) {
    std::vector<Word> images;
    images.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
      images.push_back(Word{Letter(v, false)});
    return Endo(std::move(images));
  }

  static Endo from_images(const Graph& g, std::vector<Word> images) {
    if (static_cast<int>(images.size()) != g.vertex_count())
      throw std::invalid_argument("image count does not match vertex count");
    for (auto& im : images) im = normal_form(g, im);
    return Endo(std::move(images));
  }

  const Word& image(int v) const { return images_[v]; }
  const std::vector<Word>& images() const { return images_; }
  int vertex_count() const { return static_cast<int>(images_.size()); }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  explicit Endo(std::vector<Word> images) : images_(std::move(images)) {}
  std::vector<Word> images_;
};

inline Word apply(const Graph& g, const Endo& f, const Word& w) {
  Word out;
  for (Letter l : w) {
    const Word& im = f.image(l.vertex());
    if (l.is_inverse()) {
      Word inv = raw_inverse(im);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), im.begin(), im.end());
    }
  }
  return normal_form(g, out);
}

/// (f o g)(v) = f(g(v)): g acts first. All composition in this library,
/// including relator words and factorizations, reads right-to-left this way.
inline Endo compose(const Graph& g, const Endo& f, const Endo& h) {
  std::vector<Word> images;
  images.reserve(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v)
    images.push_back(apply(g, f, h.image(v)));
  return Endo::from_images(g, std::move(images));
}

/// True iff f preserves every defining relation vw = wv, {v,w} an edge.
inline bool check_homomorphism(const Graph& g, const Endo& f) {
  for (auto [u, v] : g.edges())
    if (multiply(g, f.image(u), f.image(v)) != multiply(g, f.image(v), f.image(u)))
      return false;
  return true;
}

inline bool verify_inverse(const Graph& g, const Endo& f, const Endo& h) {
  const Endo id = Endo::identity(g);
  return compose(g, f, h) == id && compose(g, h, f) == id;
}

/// Per-vertex conjugators: f(v) = conjugator[v]^-1 * v * conjugator[v],
/// verified with normal forms at construction time.
struct ConjugatorWitness {
  std::vector<Word> conjugator;
};

struct WitnessConfig {
  // Fallback search length cap is 2*|f(v)| + extra_length.
  int extra_length = 2;
  std::size_t state_budget = 1'000'000;
};

namespace detail {

inline bool witness_equation_holds(const Graph& g, int v, const Word& cand,
                                   const Word& image) {
  Word lhs = multiply(g, multiply(g, invert(g, cand), Word{Letter(v, false)}), cand);
  return lhs == image;
}

// Breadth-first over candidate conjugators, shortest first, skipping words
// with an immediately cancelling pair.
inline std::optional<Word> witness_bfs(const Graph& g, int v, const Word& image,
                                       const WitnessConfig& cfg) {
  const int cap = 2 * static_cast<int>(image.size()) + cfg.extra_length;
  std::deque<Word> queue;
  queue.push_back({});
  std::size_t states = 0;
  while (!queue.empty()) {
    Word h = std::move(queue.front());
    queue.pop_front();
    if (++states > cfg.state_budget)
      throw budget_exceeded("conjugator witness search budget exceeded for vertex '" +
                            g.vertex_name(v) + "'");
    if (witness_equation_holds(g, v, h, image)) return h;
    if (static_cast<int>(h.size()) >= cap) continue;
    for (int code = 0; code < 2 * g.vertex_count(); ++code) {
      Letter l(code / 2, code % 2);
      if (!h.empty() && h.back() == l.inverted()) continue;
      Word next = h;
      next.push_back(l);
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether f sends every vertex into its own conjugacy class; on
/// success returns verified conjugators. The witness comes from the cyclic
/// reduction of the image (f(v) = p * v * p^-1 gives conjugator p^-1), with a
/// bounded breadth-first search kept as fallback. When the conjugacy holds
/// but no witness fits the budget, throws budget_exceeded rather than
/// conflating that with a negative answer. `failing_vertex`, when given, is
/// set to the first vertex whose image leaves its class.
inline std::optional<ConjugatorWitness> vertex_conjugating_witness(
    const Graph& g, const Endo& f, int* failing_vertex = nullptr,
    const WitnessConfig& cfg = {}) {
  std::vector<Word> witness(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Word& im = f.image(v);
    CyclicReduction cr = cyclic_reduction(g, im);
    if (cr.core != Word{Letter(v, false)}) {
      if (failing_vertex) *failing_vertex = v;
      return std::nullopt;
    }
    Word cand = invert(g, cr.prefix);
    if (!detail::witness_equation_holds(g, v, cand, im)) {
      auto found = detail::witness_bfs(g, v, im, cfg);
      if (!found)
        throw budget_exceeded("conjugacy holds at vertex '" + g.vertex_name(v) +
                              "' but no witness found within budget");
      cand = std::move(*found);
    }
    witness[v] = std::move(cand);
  }
  return ConjugatorWitness{std::move(witness)};
}

inline Endo inversion(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<Word> images;
  for (int u = 0; u < g.vertex_count(); ++u)
    images.push_back(Word{Letter(u, u == v)});
  return Endo::from_images(g, std::move(images));
}

/// Sends w to vw; requires v to dominate w.
inline Endo transvection(const Graph& g, int v, int w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw std::invalid_argument("transvection requires distinct vertices");
  if (!g.dominates(v, w))
    throw std::invalid_argument("transvection requires '" + g.vertex_name(v) +
                                "' to dominate '" + g.vertex_name(w) + "'");
  std::vector<Word> images;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == w)
      images.push_back(Word{Letter(v, false), Letter(w, false)});
    else
      images.push_back(Word{Letter(u, false)});
  }
  return Endo::from_images(g, std::move(images));
}

inline void check_graph_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size does not match vertex count");
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v])
      throw std::invalid_argument("not a permutation of the vertices");
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
        throw std::invalid_argument("permutation does not preserve adjacency");
}

inline Endo symmetry(const Graph& g, const std::vector<int>& perm) {
  check_graph_automorphism(g, perm);
  std::vector<Word> images;
  for (int v = 0; v < g.vertex_count(); ++v)
    images.push_back(Word{Letter(perm[v], false)});
  return Endo::from_images(g, std::move(images));
}

/// Automorphism file format: '#' comments; one `v -> word` line per moved
/// vertex; unlisted vertices stay fixed.
inline Endo parse_endo(const Graph& g, std::string_view text) {
  std::vector<Word> images;
  std::vector<bool> assigned(g.vertex_count(), false);
  for (int v = 0; v < g.vertex_count(); ++v)
    images.push_back(Word{Letter(v, false)});

  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv = line;
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    auto arrow = sv.find("->");
    if (arrow == std::string_view::npos)
      throw parse_error("malformed line (expected 'v -> word')", line_no);
    std::string_view lhs = sv.substr(0, arrow);
    while (!lhs.empty() && (lhs.back() == ' ' || lhs.back() == '\t')) lhs.remove_suffix(1);
    auto v = g.find_vertex(lhs);
    if (!v) throw parse_error("unknown vertex '" + std::string(lhs) + "'", line_no);
    if (assigned[*v])
      throw parse_error("vertex '" + std::string(lhs) + "' mapped twice", line_no);
    assigned[*v] = true;
    try {
      images[*v] = parse_word(g, sv.substr(arrow + 2));
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line_no);
    }
  }
  return Endo::from_images(g, std::move(images));
}

inline std::string endo_to_string(const Graph& g, const Endo& f) {
  std::string out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += g.vertex_name(v);
    out += " -> ";
    out += word_to_string(g, f.image(v));
    out += '\n';
  }
  return out;
}

}  // namespace raag
