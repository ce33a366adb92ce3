#include <doctest.h>

#include "support.hpp"
#include "thompson/bracket.hpp"
#include "thompson/errors.hpp"
#include "thompson/jones.hpp"
#include "thompson/two_bridge.hpp"

using namespace thompson;
using LP = LaurentPolynomial;

namespace {

LP poly(const testing::Poly& p) {
  LP out;
  for (auto [e, c] : p) out += LP::monomial(c, e);
  return out;
}

// Standard two-crossing Hopf diagram.
LinkDiagram hopf() { return LinkDiagram::from_pd("X(4,1,3,2)\nX(2,3,1,4)\nO 0\n"); }

std::int64_t fibonacci(int n) {
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_CASE("polynomial arithmetic and text") {
  LP d = LP::delta();
  CHECK(d.to_string() == "-1*A^2 + -1*A^-2");
  CHECK(LP::parse(d.to_string()) == d);
  CHECK(LP::parse("-1*A^4 + -1*A^-4") == LP::monomial(-1, 4) + LP::monomial(-1, -4));
  CHECK(LP().to_string() == "0");
  CHECK(LP::parse("0").is_zero());
  CHECK((d * d).to_string() == "1*A^4 + 2*A^0 + 1*A^-4");
  CHECK((d - d).is_zero());
  CHECK(d.mirrored() == d);
  CHECK(LP::monomial(3, 2).shifted(-5) == LP::monomial(3, -3));
  CHECK(d.pow(3) == d * d * d);
  CHECK_THROWS_AS(LP::parse("1*B^2"), ParseError);
  CHECK_THROWS_AS(LP::monomial(std::int64_t{1} << 62, 0) * LP(4), ArithmeticOverflow);
  CHECK_THROWS_AS(LP(INT64_MAX) + LP(1), ArithmeticOverflow);
}

TEST_CASE("bracket normalisation") {
  CHECK(kauffman_bracket(LinkDiagram::unknot()) == LP(1));
  CHECK(kauffman_bracket(LinkDiagram({}, 2)) == LP::delta());
  CHECK(kauffman_bracket(LinkDiagram({}, 0)) == LP(1));
  CHECK(kauffman_bracket(LinkDiagram::from_pd("X(1,1,2,2)\nO 1\n")) ==
        kauffman_bracket(LinkDiagram::from_pd("X(1,1,2,2)\nO 0\n")) * LP::delta());
}

TEST_CASE("Hopf link") {
  LP expected = LP::monomial(-1, 4) + LP::monomial(-1, -4);
  CHECK(poly(testing::skein_bracket(hopf())) == expected);
  CHECK(state_sum_bracket(hopf()) == expected);
  CHECK(kauffman_bracket(hopf()) == expected);
  CHECK(hopf().component_count() == 2);
}

TEST_CASE("bracket algorithms agree with the skein oracle") {
  std::mt19937 rng(31);
  for (int k = 0; k < 60; ++k) {
    TreePair p = testing::random_pair(rng, 7);
    LinkDiagram d = k % 2 ? direct_link(p) : medial_link(tait_graph(p));
    LP oracle = poly(testing::skein_bracket(d));
    CHECK(kauffman_bracket(d) == oracle);
    CHECK(state_sum_bracket(d) == oracle);
  }
}

TEST_CASE("crossing bound") {
  std::mt19937 rng(32);
  LinkDiagram big = direct_link(testing::random_pair(rng, 14, 14));
  CHECK_THROWS_AS(kauffman_bracket(big), CrossingBoundExceeded);
  CHECK_THROWS_AS(state_sum_bracket(big), CrossingBoundExceeded);
  CHECK_NOTHROW(kauffman_bracket(big, {64}));
}

TEST_CASE("mirror image inverts A") {
  std::mt19937 rng(33);
  for (int k = 0; k < 20; ++k) {
    LinkDiagram d = direct_link(testing::random_pair(rng, 8));
    CHECK(poly(testing::skein_bracket(d.mirror())) == poly(testing::skein_bracket(d)).mirrored());
  }
}

TEST_CASE("comparator") {
  LP d = LP::delta();
  CHECK(equivalent_up_to_units(1, 1, 0));
  CHECK(equivalent_up_to_units(d, 1, 1));
  CHECK_FALSE(equivalent_up_to_units(d, 1, 0));
  CHECK(equivalent_up_to_units(1, d, 1));
  LP h = kauffman_bracket(hopf());
  LP figure_eight = kauffman_bracket(two_bridge_diagram(ConwayCode({1, 1, 1, 1})));
  CHECK_FALSE(equivalent_up_to_units(h, figure_eight, 2));
  LP unit = LP::monomial(-1, 3);
  CHECK(equivalent_up_to_units(h * unit, h, 0));
  CHECK(equivalent_up_to_units(h, h * unit * unit, 0));
  CHECK_FALSE(equivalent_up_to_units(h, h.shifted(1), 4));
  CHECK(equivalent_up_to_units(h * d * d, h * unit, 2));
  CHECK_THROWS_AS(equivalent_up_to_units(h, h, -1), Error);
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(ConwayCode({1, 1})) == Fraction{2, 1});
  CHECK(continued_fraction(ConwayCode({1, 1, 1, 1})) == Fraction{5, 3});
  CHECK(continued_fraction(ConwayCode({1, 1, 1, 1, 1, 1})) == Fraction{13, 8});
  CHECK(continued_fraction(ConwayCode({3})) == Fraction{3, 1});
  CHECK(continued_fraction(ConwayCode({2, 3})) == Fraction{7, 3});
  for (int n = 1; n <= 8; ++n) {
    CHECK(continued_fraction(ConwayCode::ones(2 * n)) == Fraction{fibonacci(2 * n + 1), fibonacci(2 * n)});
  }
  CHECK_THROWS_AS(ConwayCode({}), Error);
  CHECK_THROWS_AS(ConwayCode({1, 0}), Error);
  CHECK_THROWS_AS(ConwayCode::parse("1,x"), ParseError);
  CHECK(ConwayCode::parse("1,2,3").to_string() == "C(1,2,3)");
}

TEST_CASE("two-bridge diagrams") {
  LinkDiagram c11 = two_bridge_diagram(ConwayCode({1, 1}));
  CHECK(c11.crossing_count() == 2);
  CHECK(c11.component_count() == 2);
  CHECK(equivalent_up_to_units(kauffman_bracket(c11), kauffman_bracket(hopf()), 0));
  LinkDiagram c1111 = two_bridge_diagram(ConwayCode({1, 1, 1, 1}));
  CHECK(c1111.crossing_count() == 4);
  CHECK(c1111.component_count() == 1);
  // C(2) is the Hopf link as well; it is amphichiral, so mirror and itself agree.
  LP c2 = kauffman_bracket(two_bridge_diagram(ConwayCode({2})));
  CHECK(equivalent_up_to_units(c2, kauffman_bracket(c11), 0));
  CHECK(equivalent_up_to_units(c2, kauffman_bracket(c11).mirrored(), 0));
  // The trefoil fixes the handedness of positive twists.
  LP trefoil = kauffman_bracket(two_bridge_diagram(ConwayCode({3})));
  CHECK(trefoil == LP::parse("1*A^7 + -1*A^3 + -1*A^-5"));
  CHECK_FALSE(equivalent_up_to_units(trefoil, trefoil.mirrored(), 2));
  std::mt19937 rng(34);
  for (int k = 0; k < 25; ++k) {
    std::vector<int> code;
    int len = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < len; ++i) code.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
    ConwayCode c(code);
    LinkDiagram d = two_bridge_diagram(c);
    Fraction f = continued_fraction(c);
    CHECK(static_cast<int>(d.crossing_count()) == c.crossing_count());
    CHECK(d.is_alternating());
    CHECK(d.component_count() == (f.p % 2 == 0 ? 2 : 1));
    LP b = poly(testing::skein_bracket(d));
    CHECK(determinant(b) == f.p);
  }
  CHECK_THROWS_AS(two_bridge_diagram(ConwayCode({20, 10})), CrossingBoundExceeded);
}
