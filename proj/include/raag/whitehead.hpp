#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "raag/endo.hpp"

namespace raag {

/// Subset of the letters (generators and inverses), as a bitmask over letter
/// codes.
struct LetterSet {
  std::uint64_t bits = 0;

  bool contains(Letter l) const { return bits >> l.code() & 1; }
  void insert(Letter l) { bits |= std::uint64_t{1} << l.code(); }
  void erase(Letter l) { bits &= ~(std::uint64_t{1} << l.code()); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  /// The set of inverses: swaps the positive/inverse bit pairwise.
  LetterSet inverted() const {
    constexpr std::uint64_t even = 0x5555555555555555ull;
    return {(bits & even) << 1 | (bits & ~even) >> 1};
  }

  VertexSet vertex_set() const {
    VertexSet s;
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      s.insert(std::countr_zero(b) / 2);
    return s;
  }

  static LetterSet both_signs(VertexSet vs) {
    LetterSet out;
    for (int v : vs.to_vector()) {
      out.insert(Letter(v, false));
      out.insert(Letter(v, true));
    }
    return out;
  }

  friend bool operator==(LetterSet, LetterSet) = default;
};

/// Type 2 Whitehead automorphism data: the affected letter set and the
/// multiplier. Invariant: multiplier is in the set, its inverse is not.
struct WhiteheadType2 {
  LetterSet set;
  Letter multiplier;
};

/// Type 1 Whitehead automorphism as a graph automorphism combined with a set
/// of vertices whose images are inverted: v maps to perm[v] or perm[v]^-1.
struct WhiteheadType1 {
  std::vector<int> perm;
  VertexSet inverted;
};

/// c_{x,Y}: conjugates every vertex of Y by the letter x, fixing the rest.
/// Y is a nonempty union of connected components of the graph minus st(v(x)),
/// which makes the pair (x, Y) canonical.
struct PartialConjugation {
  Letter conjugator;
  VertexSet domain;

  friend bool operator==(const PartialConjugation&, const PartialConjugation&) = default;
};

inline void check_type2_invariants(const WhiteheadType2& data) {
  if (!data.set.contains(data.multiplier))
    throw std::invalid_argument("type 2 data must contain its multiplier");
  if (data.set.contains(data.multiplier.inverted()))
    throw std::invalid_argument("type 2 data must not contain the multiplier's inverse");
}

namespace detail {

// The four-case action table, with no validity checking.
inline Endo type2_images(const Graph& g, const WhiteheadType2& data) {
  const Letter a = data.multiplier;
  std::vector<Word> images;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == a.vertex()) {
      images.push_back(Word{Letter(x, false)});
      continue;
    }
    const bool pos = data.set.contains(Letter(x, false));
    const bool neg = data.set.contains(Letter(x, true));
    Word im;
    if (neg) im.push_back(a.inverted());
    im.push_back(Letter(x, false));
    if (pos) im.push_back(a);
    images.push_back(std::move(im));
  }
  return Endo::from_images(g, std::move(images));
}

inline bool is_union_of_components(const Graph& g, int vertex, VertexSet y) {
  VertexSet covered;
  for (const VertexSet& comp : g.components_minus_star(vertex)) {
    VertexSet overlap = comp & y;
    if (!overlap.empty() && !(overlap == comp)) return false;
    covered = covered | comp;
  }
  return y.subset_of(covered);
}

}  // namespace detail

/// Builds the automorphism for type 2 data, validating it operationally:
/// it must preserve the edge relations and invert against the companion data
/// (set - a + a^-1, a^-1). Throws when either check fails.
inline Endo type2_endo(const Graph& g, const WhiteheadType2& data) {
  check_type2_invariants(data);
  Endo f = detail::type2_images(g, data);
  if (!check_homomorphism(g, f))
    throw std::invalid_argument("type 2 data does not define a homomorphism");
  WhiteheadType2 inv_data{data.set, data.multiplier.inverted()};
  inv_data.set.erase(data.multiplier);
  inv_data.set.insert(data.multiplier.inverted());
  Endo finv = detail::type2_images(g, inv_data);
  if (!verify_inverse(g, f, finv))
    throw std::invalid_argument("type 2 data fails the inverse check");
  return f;
}

/// A type 2 automorphism is long-range when it fixes the vertices of the
/// multiplier's link: each such vertex is in the set with both signs (so it
/// picks up a cancelling conjugation) or with neither.
inline bool is_long_range(const Graph& g, const WhiteheadType2& data) {
  check_type2_invariants(data);
  for (int w : g.link(data.multiplier.vertex()).to_vector())
    if (data.set.contains(Letter(w, false)) != data.set.contains(Letter(w, true)))
      return false;
  return true;
}

inline PartialConjugation partial_conjugation(const Graph& g, Letter x, VertexSet y) {
  g.check_vertex(x.vertex());
  if (y.empty())
    throw std::invalid_argument("partial conjugation requires a nonempty domain");
  if (!detail::is_union_of_components(g, x.vertex(), y))
    throw std::invalid_argument(
        "domain is not a union of components of the graph minus st(" +
        g.vertex_name(x.vertex()) + ")");
  return {x, y};
}

inline Endo pc_endo(const Graph& g, const PartialConjugation& pc) {
  std::vector<Word> images;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (pc.domain.contains(v))
      images.push_back(Word{pc.conjugator.inverted(), Letter(v, false), pc.conjugator});
    else
      images.push_back(Word{Letter(v, false)});
  }
  return Endo::from_images(g, std::move(images));
}

inline PartialConjugation pc_inverse(const PartialConjugation& pc) {
  return {pc.conjugator.inverted(), pc.domain};
}

/// Canonical generator name, e.g. c[a^-1|{b,c}].
inline std::string pc_name(const Graph& g, const PartialConjugation& pc) {
  return "c[" + letter_to_string(g, pc.conjugator) + "|" + g.set_to_string(pc.domain) + "]";
}

inline WhiteheadType2 to_whitehead(const PartialConjugation& pc) {
  LetterSet set = LetterSet::both_signs(pc.domain);
  set.insert(pc.conjugator);
  return {set, pc.conjugator};
}

/// Recognizes type 2 data as a partial conjugation: the set minus the
/// multiplier must be closed under inversion, and its vertices, once letters
/// of the multiplier's link are stripped, must form a nonempty union of
/// components. Stripping makes the result canonical; data that strips to
/// nothing is the identity and is not a partial conjugation.
inline std::optional<PartialConjugation> to_partial_conjugation(
    const Graph& g, const WhiteheadType2& data) {
  check_type2_invariants(data);
  LetterSet rest = data.set;
  rest.erase(data.multiplier);
  if (!(rest.inverted() == rest)) return std::nullopt;
  VertexSet y = rest.vertex_set() - g.link(data.multiplier.vertex());
  if (y.empty()) return std::nullopt;
  if (!detail::is_union_of_components(g, data.multiplier.vertex(), y))
    return std::nullopt;
  return PartialConjugation{data.multiplier, y};
}

/// Conjugation by the given element: v -> w^-1 v w.
inline Endo inner_automorphism(const Graph& g, const Word& w) {
  std::vector<Word> images;
  Word winv = raw_inverse(w);
  for (int v = 0; v < g.vertex_count(); ++v) {
    Word im = winv;
    im.push_back(Letter(v, false));
    im.insert(im.end(), w.begin(), w.end());
    images.push_back(std::move(im));
  }
  return Endo::from_images(g, std::move(images));
}

/// All partial conjugations, in canonical order: letters ascending, then
/// component subsets by ascending inclusion mask.
inline std::vector<PartialConjugation> all_partial_conjugations(const Graph& g) {
  std::vector<PartialConjugation> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto comps = g.components_minus_star(v);
    if (comps.empty()) continue;
    for (bool inverse : {false, true}) {
      for (std::uint32_t mask = 1; mask < (1u << comps.size()); ++mask) {
        VertexSet y;
        for (std::size_t i = 0; i < comps.size(); ++i)
          if (mask >> i & 1) y = y | comps[i];
        out.push_back({Letter(v, inverse), y});
      }
    }
  }
  return out;
}

/// The generators whose domain is a single vertex; c[x|{y}] exists exactly
/// when {y} is itself a component, which forces v(x) to dominate y.
inline std::vector<PartialConjugation> one_term_partial_conjugations(const Graph& g) {
  std::vector<PartialConjugation> out;
  for (const auto& pc : all_partial_conjugations(g))
    if (pc.domain.size() == 1) out.push_back(pc);
  return out;
}

inline Letter type1_letter_image(const WhiteheadType1& data, Letter l) {
  bool flip = data.inverted.contains(l.vertex());
  return Letter(data.perm[l.vertex()], l.is_inverse() != flip);
}

inline Endo type1_endo(const Graph& g, const WhiteheadType1& data) {
  check_graph_automorphism(g, data.perm);
  std::vector<Word> images;
  for (int v = 0; v < g.vertex_count(); ++v)
    images.push_back(Word{type1_letter_image(data, Letter(v, false))});
  return Endo::from_images(g, std::move(images));
}

inline WhiteheadType1 type1_inverse(const WhiteheadType1& data) {
  const int n = static_cast<int>(data.perm.size());
  std::vector<int> inv_perm(n);
  VertexSet inv_set;
  for (int v = 0; v < n; ++v) {
    inv_perm[data.perm[v]] = v;
    if (data.inverted.contains(v)) inv_set.insert(data.perm[v]);
  }
  return {std::move(inv_perm), inv_set};
}

/// sigma c_{x,Y} sigma^-1 = c_{sigma(x), perm(Y)}; graph automorphisms carry
/// component unions to component unions, so the result is always valid.
inline PartialConjugation conjugate_by_type1(const Graph& g, const WhiteheadType1& data,
                                             const PartialConjugation& pc) {
  check_graph_automorphism(g, data.perm);
  VertexSet y;
  for (int v : pc.domain.to_vector()) y.insert(data.perm[v]);
  return partial_conjugation(g, type1_letter_image(data, pc.conjugator), y);
}

inline CyclicWord act(const Graph& g, const Endo& f, const CyclicWord& c,
                      std::size_t budget = default_cyclic_budget) {
  return cyclic_normal_form(g, apply(g, f, c.letters()), budget);
}

inline ClassTuple act(const Graph& g, const Endo& f, const ClassTuple& t,
                      std::size_t budget = default_cyclic_budget) {
  ClassTuple out;
  out.reserve(t.size());
  for (const auto& c : t) out.push_back(act(g, f, c, budget));
  return out;
}

/// The tuple of singleton vertex classes (v_1, ..., v_n).
inline ClassTuple vertex_class_tuple(const Graph& g) {
  ClassTuple out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out.push_back(cyclic_normal_form(g, Word{Letter(v, false)}));
  return out;
}

/// beta alpha is a peak with respect to W when |alpha.W| >= |W| and
/// |alpha.W| >= |beta alpha.W|, at least one strictly.
inline bool is_peak(const Graph& g, const Endo& beta, const Endo& alpha,
                    const ClassTuple& w) {
  const int base = tuple_length(w);
  const ClassTuple aw = act(g, alpha, w);
  const int mid = tuple_length(aw);
  const int after = tuple_length(act(g, beta, aw));
  return mid >= base && mid >= after && (mid > base || mid > after);
}

/// seq lists the factorization in application order (seq[0] acts first).
inline bool is_peak_reduced(const Graph& g, std::span<const Endo> seq,
                            const ClassTuple& w) {
  ClassTuple running = w;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (is_peak(g, seq[i + 1], seq[i], running)) return false;
    running = act(g, seq[i], running);
  }
  return true;
}

/// Reference into a generator list, with a formal inverse sign. Words over
/// the generators evaluate right-to-left like all composition here.
struct GenRef {
  int index;
  bool inverse;

  friend bool operator==(GenRef, GenRef) = default;
};

using GeneratorWord = std::vector<GenRef>;

struct GeneratorWordHash {
  std::size_t operator()(const GeneratorWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (GenRef r : w) {
      h ^= static_cast<std::size_t>(r.index * 2 + r.inverse);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Endo gen_ref_endo(const Graph& g, const std::vector<PartialConjugation>& gens,
                         GenRef r) {
  const PartialConjugation& pc = gens[r.index];
  return pc_endo(g, r.inverse ? pc_inverse(pc) : pc);
}

inline Endo evaluate_word(const Graph& g, const std::vector<PartialConjugation>& gens,
                          const GeneratorWord& w) {
  Endo acc = Endo::identity(g);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    acc = compose(g, gen_ref_endo(g, gens, *it), acc);
  return acc;
}

inline std::string render_generator_word(const Graph& g,
                                         const std::vector<PartialConjugation>& gens,
                                         const GeneratorWord& w,
                                         std::string_view separator = "*") {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += separator;
    out += pc_name(g, gens[w[i].index]);
    if (w[i].inverse) out += "^-1";
  }
  return out;
}

}  // namespace raag
