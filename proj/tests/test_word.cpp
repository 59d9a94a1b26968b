#include <catch2/catch.hpp>

#include <deque>
#include <random>
#include <unordered_set>

#include "test_util.hpp"

using namespace raag;
using test_util::complete;
using test_util::discrete;
using test_util::path;

namespace {

Word w(const Graph& g, const std::string& text) { return parse_word(g, text); }

// Independent canonicalization oracle: exhaustive closure of a reduced word
// under adjacent independent swaps, keeping the least member.
Word least_by_exhaustion(const Graph& g, const Word& reduced) {
  std::unordered_set<Word, WordHash> seen{reduced};
  std::deque<Word> queue{reduced};
  Word best = reduced;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (cur < best) best = cur;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!independent(g, cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("word parsing and formatting", "[word]") {
  Graph g = path(3);
  Word u = w(g, "a b^-1 c");
  REQUIRE(u.size() == 3);
  CHECK(u[0] == Letter(0, false));
  CHECK(u[1] == Letter(1, true));
  CHECK(u[2] == Letter(2, false));
  CHECK(word_to_string(g, u) == "a b^-1 c");

  CHECK(w(g, "1").empty());
  CHECK(word_to_string(g, {}) == "1");

  CHECK_THROWS_AS(w(g, "a^-2"), parse_error);
  CHECK_THROWS_AS(w(g, "a^2"), parse_error);
  CHECK_THROWS_AS(w(g, "q"), parse_error);
  CHECK_THROWS_AS(w(g, "a 1"), parse_error);
}

TEST_CASE("normal form", "[word]") {
  Graph p3 = path(3);
  CHECK(word_to_string(p3, normal_form(p3, w(p3, "a b a^-1"))) == "b");
  CHECK(word_to_string(p3, normal_form(p3, w(p3, "a c a^-1"))) == "a c a^-1");
  CHECK(word_to_string(p3, normal_form(p3, w(p3, "b a b^-1 c"))) == "a c");

  Graph k2 = complete(2);
  CHECK(word_to_string(k2, multiply(k2, w(k2, "b"), w(k2, "a"))) == "a b");
  CHECK(multiply(k2, w(k2, "a"), w(k2, "a^-1")).empty());
  CHECK(word_to_string(k2, invert(k2, w(k2, "a b"))) == "a^-1 b^-1");

  Graph f2 = discrete(2);
  CHECK(word_to_string(f2, invert(f2, w(f2, "a b"))) == "b^-1 a^-1");

  SECTION("support and element length") {
    CHECK(support(w(p3, "a b^-1 a")) == (VertexSet::single(0) | VertexSet::single(1)));
    CHECK(support(Word{}).empty());
    CHECK(element_length(p3, w(p3, "a b a^-1")) == 1);
    CHECK(element_length(p3, Word{}) == 0);
    CHECK(element_length(p3, w(p3, "a c a^-1")) == 3);
  }

  SECTION("discrete graphs reduce freely, complete graphs sort and cancel") {
    Graph f3 = discrete(3);
    CHECK(word_to_string(f3, normal_form(f3, w(f3, "a b b^-1 c"))) == "a c");
    CHECK(word_to_string(f3, normal_form(f3, w(f3, "b a"))) == "b a");
    Graph k3 = complete(3);
    CHECK(word_to_string(k3, normal_form(k3, w(k3, "c b a c^-1"))) == "a b");
  }
}

TEST_CASE("normal form properties", "[word][property]") {
  std::mt19937 rng(20240811);
  std::vector<Graph> graphs = {discrete(2), discrete(3), path(3), path(4),
                               complete(3), test_util::cycle(4), test_util::star3()};

  SECTION("idempotence and trivialized inverses, 1000 cases") {
    for (int i = 0; i < 1000; ++i) {
      const Graph& g = graphs[i % graphs.size()];
      Word u = test_util::random_word(rng, g, 8);
      Word nf = normal_form(g, u);
      CHECK(normal_form(g, nf) == nf);
      CHECK(static_cast<int>(nf.size()) <= static_cast<int>(u.size()));
      CHECK(multiply(g, u, raw_inverse(u)).empty());
    }
  }

  SECTION("congruence: nf(u v) == nf(nf(u) nf(v)), 1000 cases") {
    for (int i = 0; i < 1000; ++i) {
      const Graph& g = graphs[i % graphs.size()];
      Word u = test_util::random_word(rng, g, 6);
      Word v = test_util::random_word(rng, g, 6);
      CHECK(multiply(g, u, v) == multiply(g, normal_form(g, u), normal_form(g, v)));
    }
  }

  SECTION("greedy canonical order agrees with exhaustive search") {
    for (int i = 0; i < 400; ++i) {
      const Graph& g = graphs[i % graphs.size()];
      Word red = reduce(g, test_util::random_word(rng, g, 7));
      CHECK(least_in_commutation_class(g, red) == least_by_exhaustion(g, red));
    }
  }
}

TEST_CASE("cyclic normal form", "[word]") {
  Graph p3 = path(3);
  CHECK(cyclic_normal_form(p3, w(p3, "a c a^-1")).to_string(p3) == "c");

  Graph f2 = discrete(2);
  CHECK(cyclic_normal_form(f2, w(f2, "b a")).to_string(f2) == "a b");
  CHECK(cyclic_normal_form(f2, w(f2, "a b")) != cyclic_normal_form(f2, w(f2, "b^-1 a^-1")));
  CHECK_FALSE(test_util::bounded_conjugator_search(f2, w(f2, "a b"), w(f2, "b^-1 a^-1"), 6));

  CHECK(cyclic_normal_form(f2, Word{}).length() == 0);
  CHECK(class_length(p3, w(p3, "a c a^-1")) == 1);

  SECTION("free rank-2: a and a^-1 are not conjugate") {
    CHECK_FALSE(are_conjugate(f2, w(f2, "a"), w(f2, "a^-1")));
    CHECK_FALSE(test_util::bounded_conjugator_search(f2, w(f2, "a"), w(f2, "a^-1"), 6));
  }

  SECTION("conjugates of the same element agree") {
    CHECK(are_conjugate(f2, w(f2, "a b"), w(f2, "b a")));
    std::mt19937 rng(77);
    for (int i = 0; i < 50; ++i) {
      Word u = test_util::random_word(rng, f2, 5);
      Word h = test_util::random_word(rng, f2, 4);
      Word conj = multiply(f2, multiply(f2, invert(f2, h), u), h);
      CHECK(are_conjugate(f2, u, conj));
    }
  }
}

TEST_CASE("cyclic form properties", "[word][property]") {
  std::mt19937 rng(4242);
  std::vector<Graph> graphs = {discrete(2), discrete(3), path(3), path(4),
                               complete(3), test_util::cycle(4)};

  SECTION("invariant under conjugation by any letter, 1000 cases") {
    for (int i = 0; i < 1000; ++i) {
      const Graph& g = graphs[i % graphs.size()];
      Word u = test_util::random_word(rng, g, 6);
      std::uniform_int_distribution<int> code(0, 2 * g.vertex_count() - 1);
      int c = code(rng);
      Letter x(c / 2, c % 2);
      Word conj{x.inverted()};
      conj.insert(conj.end(), u.begin(), u.end());
      conj.push_back(x);
      CHECK(cyclic_normal_form(g, u) == cyclic_normal_form(g, conj));
    }
  }

  SECTION("class length never exceeds element length") {
    for (int i = 0; i < 300; ++i) {
      const Graph& g = graphs[i % graphs.size()];
      Word u = test_util::random_word(rng, g, 7);
      CHECK(class_length(g, u) <= element_length(g, u));
    }
  }

  SECTION("agrees with bounded conjugator search on small graphs") {
    std::vector<Graph> small = {discrete(2), discrete(3), path(3), complete(3)};
    for (int i = 0; i < 60; ++i) {
      const Graph& g = small[i % small.size()];
      Word u = test_util::random_word(rng, g, 5);
      Word v = test_util::random_word(rng, g, 5);
      bool found = test_util::bounded_conjugator_search(g, u, v, 5).has_value();
      CHECK(found == are_conjugate(g, u, v));
    }
  }
}

TEST_CASE("cyclic canonicalization budget is a hard error", "[word]") {
  // Complete graph on 5 vertices: the commutation class of a positive
  // 9-letter word has 9!/16 > 20000 members and nothing cancels.
  Graph k5 = complete(5);
  Word big;
  for (int i = 0; i < 9; ++i) big.emplace_back(i % 5, false);
  CHECK_THROWS_AS(cyclic_normal_form(k5, big, 1000), budget_exceeded);
  CHECK(cyclic_normal_form(k5, big).length() == 9);
}

TEST_CASE("length-2 conjugacy classes", "[word]") {
  Graph single = discrete(1);
  auto one = length_two_classes(single);
  REQUIRE(one.size() == 2);
  CHECK(one[0].to_string(single) == "a a");
  CHECK(one[1].to_string(single) == "a^-1 a^-1");

  Graph f2 = discrete(2);
  auto classes = length_two_classes(f2);
  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back(c.to_string(f2));
  CHECK(names == std::vector<std::string>{"a a", "a b", "a b^-1", "a^-1 a^-1", "a^-1 b",
                                          "a^-1 b^-1", "b b", "b^-1 b^-1"});

  // On the edge a-b the mixed classes merge by commutation instead of
  // rotation; the count is the same eight.
  Graph k2 = complete(2);
  auto abelian = length_two_classes(k2);
  CHECK(abelian.size() == 8);

  SECTION("every listed class has length 2 and is duplicate-free") {
    for (const Graph& g : {path(3), test_util::star3()}) {
      auto cs = length_two_classes(g);
      for (const auto& c : cs) CHECK(c.length() == 2);
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) CHECK(cs[i] < cs[i + 1]);
    }
  }

  SECTION("tuple length is the sum of entry lengths") {
    Graph f2b = discrete(2);
    ClassTuple t{cyclic_normal_form(f2b, w(f2b, "a")), cyclic_normal_form(f2b, w(f2b, "b"))};
    CHECK(tuple_length(t) == 2);
    CHECK(tuple_length({}) == 0);
    Graph f3 = discrete(3);
    ClassTuple t2{cyclic_normal_form(f3, w(f3, "a^-1 b a c"))};
    CHECK(tuple_length(t2) == 4);
  }
}
