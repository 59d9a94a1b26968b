#include <catch2/catch.hpp>

#include <random>

#include "test_util.hpp"

using namespace raag;
using test_util::complete;
using test_util::discrete;
using test_util::path;

namespace {

Word w(const Graph& g, const std::string& text) { return parse_word(g, text); }

GeneratorWord random_generator_word(std::mt19937& rng, std::size_t gen_count,
                                    int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, static_cast<int>(gen_count) - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  GeneratorWord out;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) out.push_back({gen_dist(rng), sign_dist(rng) == 1});
  return out;
}

}  // namespace

TEST_CASE("evaluation of generator words", "[factorization]") {
  Graph f3 = discrete(3);
  auto gens = all_partial_conjugations(f3);

  CHECK(evaluate(f3, gens, {}) == Endo::identity(f3));

  SECTION("a generator against its formal inverse cancels") {
    CHECK(evaluate(f3, gens, {{0, false}, {0, true}}) == Endo::identity(f3));
  }

  SECTION("disjoint domains merge") {
    auto find = [&](const std::string& name) {
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (pc_name(f3, gens[i]) == name) return static_cast<int>(i);
      FAIL("generator not found: " << name);
      return -1;
    };
    int ab = find("c[a|{b}]");
    int ac = find("c[a|{c}]");
    int abc = find("c[a|{b,c}]");
    CHECK(evaluate(f3, gens, {{ab, false}, {ac, false}}) ==
          evaluate(f3, gens, {{abc, false}}));
  }

  SECTION("evaluation is a homomorphism of words") {
    std::mt19937 rng(321);
    Graph c4 = test_util::cycle(4);
    auto c4_gens = all_partial_conjugations(c4);
    for (int i = 0; i < 40; ++i) {
      GeneratorWord w1 = random_generator_word(rng, c4_gens.size(), 4);
      GeneratorWord w2 = random_generator_word(rng, c4_gens.size(), 4);
      GeneratorWord joined = w1;
      joined.insert(joined.end(), w2.begin(), w2.end());
      CHECK(evaluate(c4, c4_gens, joined) ==
            compose(c4, evaluate(c4, c4_gens, w1), evaluate(c4, c4_gens, w2)));
    }
  }
}

TEST_CASE("factoring vertex-conjugating maps", "[factorization]") {
  Graph f2 = discrete(2);
  auto gens = all_partial_conjugations(f2);

  SECTION("identity factors as the empty word") {
    CHECK(factor(f2, gens, Endo::identity(f2)).empty());
  }

  SECTION("conjugation by a generator is a single letter") {
    GeneratorWord word = factor(f2, gens, inner_automorphism(f2, w(f2, "a")));
    REQUIRE(word.size() == 1);
    CHECK(render_generator_word(f2, gens, word) == "c[a|{b}]");
  }

  SECTION("simultaneous conjugation on free rank 3") {
    Graph f3 = discrete(3);
    auto f3_gens = all_partial_conjugations(f3);
    Endo f = parse_endo(f3, "b -> a^-1 b a\nc -> a^-1 c a");
    GeneratorWord word = factor(f3, f3_gens, f);
    CHECK(evaluate(f3, f3_gens, word) == f);
  }

  SECTION("rejects maps that move a vertex out of its class") {
    CHECK_THROWS_AS(factor(f2, gens, inversion(f2, 0)), not_vertex_conjugating);
    CHECK_THROWS_AS(factor(f2, gens, transvection(f2, 0, 1)), not_vertex_conjugating);
  }

  SECTION("pointwise-conjugating non-automorphism exhausts the budget") {
    // x -> y^-1 x y, y -> x^-1 y x is injective but not onto, so it lies in
    // no product of partial conjugations even though every image is a
    // conjugate. The search must fail loudly, never mislabel it.
    Endo f = parse_endo(f2, "a -> b^-1 a b\nb -> a^-1 b a");
    FactorConfig tiny;
    tiny.state_budget = 500;
    CHECK_THROWS_AS(factor(f2, gens, f, tiny), budget_exceeded);
  }

  SECTION("round trip on random generator words") {
    std::mt19937 rng(777);
    for (const Graph& g : {discrete(2), discrete(3), path(4), test_util::cycle(4),
                           test_util::star3()}) {
      auto g_gens = all_partial_conjugations(g);
      for (int i = 0; i < 25; ++i) {
        GeneratorWord word = random_generator_word(rng, g_gens.size(), 5);
        Endo f = evaluate(g, g_gens, word);
        GeneratorWord refactored = factor(g, g_gens, f);
        CHECK(evaluate(g, g_gens, refactored) == f);
      }
    }
  }
}

TEST_CASE("exhaustive search oracle", "[factorization]") {
  Graph f2 = discrete(2);
  auto gens = all_partial_conjugations(f2);

  SECTION("identity at depth zero") {
    auto found = exhaustive_factor_search(f2, gens, Endo::identity(f2), 0);
    REQUIRE(found);
    CHECK(found->empty());
  }

  SECTION("an inner automorphism is found at depth one") {
    auto found = exhaustive_factor_search(f2, gens, inner_automorphism(f2, w(f2, "a")), 1);
    REQUIRE(found);
    CHECK(found->size() == 1);
  }

  SECTION("an inversion is never found") {
    CHECK_FALSE(exhaustive_factor_search(f2, gens, inversion(f2, 0), 3));
  }

  SECTION("whenever the oracle succeeds, factor agrees") {
    std::mt19937 rng(999);
    for (const Graph& g : {discrete(2), path(4), test_util::cycle(4)}) {
      auto g_gens = all_partial_conjugations(g);
      for (int i = 0; i < 10; ++i) {
        GeneratorWord word = random_generator_word(rng, g_gens.size(), 3);
        Endo f = evaluate(g, g_gens, word);
        auto oracle = exhaustive_factor_search(g, g_gens, f, 3);
        REQUIRE(oracle);
        GeneratorWord via_factor = factor(g, g_gens, f);
        CHECK(evaluate(g, g_gens, *oracle) == evaluate(g, g_gens, via_factor));
      }
    }
  }
}
