#include <doctest.h>

#include "support.hpp"
#include "thompson/errors.hpp"
#include "thompson/tree_pair.hpp"

using namespace thompson;
using testing::evaluate;
using testing::random_pair;
using testing::random_reduced;

namespace {

BinaryTree bits(const char* s) { return BinaryTree::from_bits(s); }

bool same_map(const TreePair& p, const std::function<testing::Point(testing::Point)>& f) {
  for (auto x : testing::sample_points(9)) {
    if (evaluate(p, x) != f(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("tree bitstrings round-trip and are validated") {
  for (const char* s : {"0", "100", "11000", "10100", "111000100"}) CHECK(bits(s).bits() == s);
  CHECK(bits("11000").leaf_count() == 3);
  CHECK_THROWS_AS(bits(""), ParseError);
  CHECK_THROWS_AS(bits("10"), ParseError);
  CHECK_THROWS_AS(bits("1000"), ParseError);
  CHECK_THROWS_AS(bits("1x0"), ParseError);
}

TEST_CASE("tree pairs need equal leaf counts") {
  CHECK_THROWS_AS(TreePair(bits("100"), bits("0")), Error);
  CHECK(TreePair().is_identity());
}

TEST_CASE("generators have the documented shape") {
  TreePair x0 = make_generator(0);
  CHECK(x0.source().bits() == "11000");
  CHECK(x0.target().bits() == "10100");
  CHECK(make_generator(1).leaf_count() == 4);
  CHECK(make_generator(5).leaf_count() == 8);
  for (std::size_t i = 0; i <= 6; ++i) {
    CHECK(make_generator(i).leaf_count() == i + 3);
    CHECK(make_generator(i).is_reduced());
    CHECK(is_positive(make_generator(i)));
  }
}

TEST_CASE("expansion and reduction") {
  TreePair id;
  TreePair e = expand(id, 0);
  CHECK(e.source().bits() == "100");
  CHECK(e.target().bits() == "100");
  CHECK(reduce(e).is_identity());
  TreePair x0 = make_generator(0);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(expand(x0, k).leaf_count() == 4);
    CHECK(reduce(expand(x0, k)) == x0);
    CHECK(equals(x0, expand(x0, k)));
  }
  CHECK_THROWS_AS(expand(x0, 3), IndexError);
  CHECK_FALSE(equals(x0, make_generator(1)));
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    TreePair p = random_pair(rng, 12);
    TreePair r = reduce(p);
    CHECK(reduce(r) == r);
    CHECK(r.is_reduced());
    CHECK(equals(p, r));
  }
}

TEST_CASE("expansion preserves the homeomorphism") {
  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    TreePair p = random_pair(rng, 10);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, p.leaf_count() - 1)(rng);
    TreePair e = expand(p, k);
    CHECK(same_map(e, [&](testing::Point x) { return evaluate(p, x); }));
    CHECK(same_map(reduce(p), [&](testing::Point x) { return evaluate(p, x); }));
  }
}

TEST_CASE("multiplication is composition, first factor applied first") {
  std::mt19937 rng(13);
  for (int t = 0; t < 100; ++t) {
    TreePair p = random_pair(rng, 9);
    TreePair q = random_pair(rng, 9);
    TreePair pq = multiply(p, q);
    CHECK(pq.is_reduced());
    CHECK(pq.source().leaf_count() == pq.target().leaf_count());
    CHECK(same_map(pq, [&](testing::Point x) { return evaluate(q, evaluate(p, x)); }));
  }
}

TEST_CASE("group laws") {
  TreePair x0 = make_generator(0);
  CHECK(multiply(x0, TreePair()) == x0);
  CHECK(multiply(x0, invert(x0)).is_identity());
  CHECK(invert(TreePair()).is_identity());
  CHECK(invert(invert(make_generator(1))) == make_generator(1));
  // x_0^-1 x_1 x_0 = x_2, with x_2 drawn out by hand (5 leaves).
  TreePair x2(bits("101011000"), bits("101010100"));
  CHECK(multiply(invert(x0), multiply(make_generator(1), x0)) == x2);
  CHECK(make_generator(2) == x2);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j <= 4; ++j) {
      TreePair xi = make_generator(i);
      CHECK(multiply(invert(xi), multiply(make_generator(j), xi)) == make_generator(j + 1));
    }
  }
  std::mt19937 rng(14);
  for (int t = 0; t < 100; ++t) {
    TreePair a = random_pair(rng, 8), b = random_pair(rng, 8), c = random_pair(rng, 8);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(invert(a), a).is_identity());
    CHECK(multiply(a, invert(a)).is_identity());
  }
}

TEST_CASE("words") {
  CHECK(GeneratorWord::parse("").empty());
  CHECK(GeneratorWord::parse("id").empty());
  CHECK(GeneratorWord::parse("x0 x0^-1").empty());
  CHECK(GeneratorWord::parse("x0 x0 x1^-2 x1").to_string() == "x0^2 x1^-1");
  CHECK(GeneratorWord::parse("x3^-2").inverse().to_string() == "x3^2");
  CHECK_THROWS_AS(GeneratorWord::parse("y0"), ParseError);
  CHECK_THROWS_AS(GeneratorWord::parse("x"), ParseError);
  CHECK_THROWS_AS(GeneratorWord::parse("x1^"), ParseError);
  CHECK_THROWS_AS(GeneratorWord::parse("x1^0"), ParseError);
  CHECK(from_word({}).is_identity());
  CHECK(from_word(GeneratorWord::parse("x0")) == make_generator(0));
  CHECK(to_word(TreePair()).empty());
  CHECK(to_word(make_generator(3)).to_string() == "x3");
}

TEST_CASE("normal form words") {
  std::mt19937 rng(15);
  for (int t = 0; t < 100; ++t) {
    TreePair g = random_reduced(rng, 12);
    GeneratorWord w = to_word(g);
    CHECK(from_word(w) == g);
    // P N^-1 with P non-decreasing and N^-1 non-increasing.
    bool negative = false;
    std::size_t last = 0;
    for (std::size_t k = 0; k < w.factors().size(); ++k) {
      const Factor& f = w.factors()[k];
      if (f.exponent < 0 && !negative) {
        negative = true;
      } else if (k > 0) {
        CHECK((f.exponent < 0) == negative);
        CHECK((negative ? f.index < last : f.index > last));
      }
      last = f.index;
    }
  }
  // Word evaluation composes the generators' homeomorphisms.
  GeneratorWord w = GeneratorWord::parse("x1 x0^-1 x2");
  TreePair g = from_word(w);
  TreePair x0 = make_generator(0), x1 = make_generator(1), x2 = make_generator(2);
  CHECK(same_map(g, [&](testing::Point x) { return evaluate(x2, evaluate(invert(x0), evaluate(x1, x))); }));
}

TEST_CASE("positive elements") {
  CHECK_FALSE(is_positive(invert(make_generator(0))));
  CHECK(is_positive(TreePair()));
}

TEST_CASE("tree pair JSON") {
  TreePair x0 = make_generator(0);
  CHECK(to_json(x0) == R"({"source":"11000","target":"10100"})");
  CHECK(tree_pair_from_json(to_json(x0)) == x0);
  CHECK_THROWS_AS(tree_pair_from_json("{"), ParseError);
  CHECK_THROWS_AS(tree_pair_from_json(R"({"source":"100"})"), ParseError);
  CHECK_THROWS_AS(tree_pair_from_json(R"({"source":"100","target":"0"})"), Error);
}
