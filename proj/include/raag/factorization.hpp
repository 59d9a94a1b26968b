#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "raag/whitehead.hpp"

namespace raag {

struct FactorConfig {
  std::size_t state_budget = 1'000'000;
  int max_word_length = 12;
};

namespace detail {

inline std::string endo_fingerprint(const Endo& f) {
  std::string key;
  for (const Word& im : f.images()) {
    for (Letter l : im) key.push_back(static_cast<char>(l.code()));
    key.push_back('\x7f');
  }
  return key;
}

// Total length of the generator images; the identity sits at the minimum
// (one letter per vertex).
inline int image_length_total(const Endo& f) {
  int total = 0;
  for (const Word& im : f.images()) total += static_cast<int>(im.size());
  return total;
}

// Breadth-first search over generator words for an exact match, deduplicating
// states by the automorphism they evaluate to.
inline std::optional<GeneratorWord> bfs_exact(const Graph& g,
                                              const std::vector<PartialConjugation>& gens,
                                              const Endo& target,
                                              const FactorConfig& cfg) {
  const Endo id = Endo::identity(g);
  if (target == id) return GeneratorWord{};

  std::deque<std::pair<Endo, GeneratorWord>> queue;
  std::unordered_set<std::string> visited;
  queue.emplace_back(id, GeneratorWord{});
  visited.insert(endo_fingerprint(id));

  while (!queue.empty()) {
    auto [state, word] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(word.size()) >= cfg.max_word_length) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (bool inverse : {false, true}) {
        GenRef r{static_cast<int>(i), inverse};
        Endo next = compose(g, state, gen_ref_endo(g, gens, r));
        if (!visited.insert(endo_fingerprint(next)).second) continue;
        GeneratorWord next_word = word;
        next_word.push_back(r);
        if (next == target) return next_word;
        if (visited.size() >= cfg.state_budget)
          throw budget_exceeded("factorization search budget exceeded (" +
                                std::to_string(cfg.state_budget) + " states)");
        queue.emplace_back(std::move(next), std::move(next_word));
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Evaluates a generator word right-to-left, matching the convention that in
/// a product the rightmost factor acts first.
inline Endo evaluate(const Graph& g, const std::vector<PartialConjugation>& gens,
                     const GeneratorWord& w) {
  return evaluate_word(g, gens, w);
}

/// Expresses a vertex-conjugating automorphism as a word in the partial
/// conjugations. Greedy descent on the total image length, peeling off the
/// signed generator that shrinks it most (ties broken by canonical order);
/// when no peel strictly shrinks, falls back to a bounded breadth-first
/// search. The result is re-evaluated before returning.
inline GeneratorWord factor(const Graph& g, const std::vector<PartialConjugation>& gens,
                            const Endo& f, const FactorConfig& cfg = {}) {
  if (!vertex_conjugating_witness(g, f))
    throw not_vertex_conjugating("the map is not vertex-conjugating");

  const Endo id = Endo::identity(g);
  GeneratorWord word;
  Endo current = f;

  while (!(current == id)) {
    int best_potential = detail::image_length_total(current);
    std::optional<std::pair<GenRef, Endo>> best;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (bool inverse : {false, true}) {
        GenRef r{static_cast<int>(i), inverse};
        GenRef peel{static_cast<int>(i), !inverse};
        Endo rest = compose(g, gen_ref_endo(g, gens, peel), current);
        int p = detail::image_length_total(rest);
        if (p < best_potential) {
          best_potential = p;
          best = {r, std::move(rest)};
        }
      }
    }
    if (best) {
      word.push_back(best->first);
      current = std::move(best->second);
      continue;
    }

    auto rest_word = detail::bfs_exact(g, gens, current, cfg);
    if (!rest_word)
      throw budget_exceeded("factorization fallback search exhausted without a match");
    word.insert(word.end(), rest_word->begin(), rest_word->end());
    current = id;
  }

  if (!(evaluate(g, gens, word) == f))
    throw std::logic_error("factorization failed its own re-evaluation");
  return word;
}

/// Independent oracle: plain breadth-first enumeration of all generator words
/// of length at most `depth`, in canonical order, returning the first exact
/// match. Shares none of factor's guidance.
inline std::optional<GeneratorWord> exhaustive_factor_search(
    const Graph& g, const std::vector<PartialConjugation>& gens, const Endo& f,
    int depth) {
  const Endo id = Endo::identity(g);
  std::deque<std::pair<Endo, GeneratorWord>> queue;
  queue.emplace_back(id, GeneratorWord{});
  while (!queue.empty()) {
    auto [state, w] = std::move(queue.front());
    queue.pop_front();
    if (state == f) return w;
    if (static_cast<int>(w.size()) >= depth) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (bool inverse : {false, true}) {
        GenRef r{static_cast<int>(i), inverse};
        GeneratorWord next_word = w;
        next_word.push_back(r);
        // Composing on the right keeps the word's own order: w * r.
        queue.emplace_back(compose(g, state, gen_ref_endo(g, gens, r)),
                           std::move(next_word));
      }
    }
  }
  return std::nullopt;
}

}  // namespace raag
