#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raag/whitehead.hpp"

namespace raag {

enum class RelationFamily { Inverse, Union, Commute, InnerStabilize };

inline constexpr std::array<const char*, 4> relation_family_names = {
    "inverse", "union", "commute", "inner-stabilize"};

inline const char* family_name(RelationFamily f) {
  return relation_family_names[static_cast<int>(f)];
}

/// One relation of the presentation: lhs = rhs as words over the generators,
/// with the side conditions that licensed it recorded for audit.
struct RelationInstance {
  RelationFamily family;
  GeneratorWord lhs;
  GeneratorWord rhs;
  std::string side_conditions;

  /// Relator form lhs * rhs^-1.
  GeneratorWord relator() const {
    GeneratorWord out = lhs;
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it)
      out.push_back({it->index, !it->inverse});
    return out;
  }
};

struct PresentationData {
  std::vector<PartialConjugation> generators;
  std::vector<RelationInstance> relations;
};

namespace detail {

class GeneratorIndex {
 public:
  GeneratorIndex(const Graph& g, const std::vector<PartialConjugation>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      map_[key(gens[i])] = static_cast<int>(i);
    (void)g;
  }

  int at(const PartialConjugation& pc) const { return map_.at(key(pc)); }

 private:
  static std::uint64_t key(const PartialConjugation& pc) {
    return static_cast<std::uint64_t>(pc.conjugator.code()) << 32 | pc.domain.bits;
  }
  std::unordered_map<std::uint64_t, int> map_;
};

}  // namespace detail

/// Exhaustive, duplicate-free enumeration of the relation set over the given
/// generators:
///   inverse:          c[x|Y] * c[x^-1|Y] = 1
///   union:            c[x|Y] c[x|Z] = c[x|Y u Z]          for disjoint Y, Z
///   commute:          c[x|Y] c[y|Z] = c[y|Z] c[x|Y]       under the side
///                     conditions v(x) not in Z, v(y) not in Y, x != y, y^-1,
///                     and (Y and Z disjoint, or v(y) adjacent to v(x))
///   inner-stabilize:  w_y c[x|Y] w_y^-1 = c[x|Y]          for v(y) not in Y,
///                     x != y, y^-1, where w_y conjugates everything outside
///                     st(v(y)) by y (skipped as vacuous when nothing lies
///                     outside that star)
/// Symmetric families are emitted in both orientations; duplicates are
/// dropped only when the normalized relator words coincide letterwise.
inline std::vector<RelationInstance> presentation_relations(
    const Graph& g, const std::vector<PartialConjugation>& gens) {
  const detail::GeneratorIndex index(g, gens);
  std::vector<RelationInstance> out;
  std::unordered_set<GeneratorWord, GeneratorWordHash> seen;

  auto emit = [&](RelationInstance r) {
    if (seen.insert(r.relator()).second) out.push_back(std::move(r));
  };

  // inverse
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int mate = index.at(pc_inverse(gens[i]));
    emit({RelationFamily::Inverse,
          {{static_cast<int>(i), false}, {mate, false}},
          {},
          "formal inverse pair"});
  }

  // union
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      const auto& a = gens[i];
      const auto& b = gens[j];
      if (a.conjugator != b.conjugator) continue;
      if (a.domain.intersects(b.domain)) continue;
      int merged = index.at({a.conjugator, a.domain | b.domain});
      emit({RelationFamily::Union,
            {{static_cast<int>(i), false}, {static_cast<int>(j), false}},
            {{merged, false}},
            "domains disjoint"});
    }
  }

  // commute
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& a = gens[i];
      const auto& b = gens[j];
      const Letter x = a.conjugator, y = b.conjugator;
      if (x == y || x == y.inverted()) continue;
      if (b.domain.contains(x.vertex())) continue;
      if (a.domain.contains(y.vertex())) continue;
      const bool disjoint = !a.domain.intersects(b.domain);
      const bool in_link = g.adjacent(x.vertex(), y.vertex());
      if (!disjoint && !in_link) continue;
      std::string side = "domains disjoint: ";
      side += disjoint ? "yes" : "no";
      side += "; multiplier vertices adjacent: ";
      side += in_link ? "yes" : "no";
      emit({RelationFamily::Commute,
            {{static_cast<int>(i), false}, {static_cast<int>(j), false}},
            {{static_cast<int>(j), false}, {static_cast<int>(i), false}},
            std::move(side)});
    }
  }

  // inner-stabilize
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& a = gens[i];
    const Letter x = a.conjugator;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto comps = g.components_minus_star(v);
      if (comps.empty()) continue;  // conjugation by a central-star vertex is vacuous
      VertexSet everything;
      for (const auto& c : comps) everything = everything | c;
      for (bool sign : {false, true}) {
        const Letter y(v, sign);
        if (y == x || y == x.inverted()) continue;
        if (a.domain.contains(v)) continue;
        int omega = index.at({y, everything});
        emit({RelationFamily::InnerStabilize,
              {{omega, false}, {static_cast<int>(i), false}, {omega, true}},
              {{static_cast<int>(i), false}},
              "inner factor expanded as " + pc_name(g, gens[omega])});
      }
    }
  }

  return out;
}

inline bool verify_relation(const Graph& g, const std::vector<PartialConjugation>& gens,
                            const RelationInstance& r) {
  return evaluate_word(g, gens, r.lhs) == evaluate_word(g, gens, r.rhs);
}

struct VerificationReport {
  int generator_count = 0;
  std::array<int, 4> family_counts{};
  int passed = 0;
  int failed = 0;
  std::vector<std::size_t> failed_indices;

  int total() const { return passed + failed; }
  bool all_passed() const { return failed == 0; }
};

inline VerificationReport verify_presentation(const Graph& g,
                                              const PresentationData& p) {
  VerificationReport report;
  report.generator_count = static_cast<int>(p.generators.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    ++report.family_counts[static_cast<int>(r.family)];
    if (verify_relation(g, p.generators, r))
      ++report.passed;
    else {
      ++report.failed;
      report.failed_indices.push_back(i);
    }
  }
  return report;
}

inline PresentationData build_presentation(const Graph& g) {
  PresentationData p;
  p.generators = all_partial_conjugations(g);
  p.relations = presentation_relations(g, p.generators);
  return p;
}

/// Plain text export: a `generators:` block of canonical names and a
/// `relators:` block of relator words. Byte-identical for identical inputs.
inline std::string to_plain_text(const Graph& g, const PresentationData& p) {
  std::string out = "generators:\n";
  for (const auto& pc : p.generators) {
    out += pc_name(g, pc);
    out += '\n';
  }
  out += "relators:\n";
  for (const auto& r : p.relations) {
    out += render_generator_word(g, p.generators, r.relator());
    out += '\n';
  }
  return out;
}

/// Structured export. Every relator carries a `verified` flag computed here;
/// the notes record the composition convention and that only soundness of the
/// relation set is machine-checked.
inline nlohmann::ordered_json to_structured(const Graph& g, const PresentationData& p) {
  nlohmann::ordered_json doc;
  doc["graph"]["vertices"] = g.vertex_names();
  auto& edges = doc["graph"]["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({g.vertex_name(u), g.vertex_name(v)});

  auto& generators = doc["generators"] = nlohmann::ordered_json::array();
  for (const auto& pc : p.generators) {
    nlohmann::ordered_json gen;
    gen["name"] = pc_name(g, pc);
    gen["x"] = letter_to_string(g, pc.conjugator);
    auto& y = gen["Y"] = nlohmann::ordered_json::array();
    for (int v : pc.domain.to_vector()) y.push_back(g.vertex_name(v));
    generators.push_back(std::move(gen));
  }

  auto& relators = doc["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) {
    nlohmann::ordered_json rel;
    rel["family"] = family_name(r.family);
    rel["word"] = render_generator_word(g, p.generators, r.relator());
    rel["side_conditions"] = r.side_conditions;
    rel["verified"] = verify_relation(g, p.generators, r);
    relators.push_back(std::move(rel));
  }

  doc["notes"] = {
      {"composition_order", "words act right to left: the rightmost factor applies first"},
      {"verification", "each relator is checked as an identity of automorphisms; "
                       "completeness of the relation set is not machine-checked"}};
  return doc;
}

}  // namespace raag
