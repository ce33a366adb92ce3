#include <doctest.h>

#include "support.hpp"
#include "thompson/bracket.hpp"
#include "thompson/errors.hpp"
#include "thompson/jones.hpp"
#include "thompson/simplify.hpp"

using namespace thompson;

namespace {

bool edge_present(const TaitGraph& t, int l, int r, Half h) {
  for (const auto& e : t.edges()) {
    if (e.left == l && e.right == r && e.half == h) return true;
  }
  return false;
}

LaurentPolynomial poly(const testing::Poly& p) {
  LaurentPolynomial out;
  for (auto [e, c] : p) out += LaurentPolynomial::monomial(c, e);
  return out;
}

}  // namespace

TEST_CASE("Tait graph of small elements") {
  TaitGraph id = tait_graph(TreePair());
  CHECK(id.vertex_count() == 1);
  CHECK(id.edges().empty());
  TaitGraph t = tait_graph(make_generator(0));
  CHECK(t.vertex_count() == 3);
  CHECK(t.edges().size() == 4);
  CHECK(edge_present(t, 0, 2, Half::upper));
  CHECK(edge_present(t, 0, 1, Half::upper));
  CHECK(edge_present(t, 0, 1, Half::lower));
  CHECK(edge_present(t, 1, 2, Half::lower));
  for (const auto& e : t.edges()) CHECK((e.half == Half::upper) == (e.sign == Sign::positive));
}

TEST_CASE("Tait graph invariants on random pairs") {
  std::mt19937 rng(21);
  for (int k = 0; k < 200; ++k) {
    TreePair p = testing::random_pair(rng, 14);
    TaitGraph t = tait_graph(p);
    CHECK_NOTHROW(t.validate());
    CHECK(t.count(Half::upper) == p.leaf_count() - 1);
    CHECK(t.count(Half::lower) == p.leaf_count() - 1);
    CHECK(TaitGraph::from_json(t.to_json()) == t);
  }
}

TEST_CASE("Tait graph validation rejects crossing arcs") {
  CHECK_THROWS_AS(TaitGraph(3, {{0, 2, Half::upper, Sign::positive}, {1, 3, Half::upper, Sign::positive}}).validate(),
                  InvalidDiagram);
  CHECK_THROWS_AS(TaitGraph(3, {{0, 2, Half::upper, Sign::negative}}).validate(), InvalidDiagram);
  CHECK_THROWS_AS(TaitGraph(3, {{2, 1, Half::lower, Sign::negative}}).validate(), InvalidDiagram);
  CHECK_THROWS_AS(TaitGraph::from_json(R"({"n":2,"edges":[[0,1,"X","+"]]})"), ParseError);
  CHECK(TaitGraph(3, {{0, 1, Half::upper, Sign::positive}}).to_json() == R"({"n":3,"edges":[[0,1,"U","+"]]})");
}

TEST_CASE("medial link basics") {
  LinkDiagram u = medial_link(TaitGraph(1, {}));
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);
  // One positive edge is a single kink; its two states sum to -A^3.
  LinkDiagram kink = medial_link(TaitGraph(2, {{0, 1, Half::upper, Sign::positive}}));
  CHECK(kink.crossing_count() == 1);
  CHECK(kauffman_bracket(kink) == LaurentPolynomial::monomial(-1, 3));
  LinkDiagram neg = medial_link(TaitGraph(2, {{0, 1, Half::lower, Sign::negative}}));
  CHECK(kauffman_bracket(neg) == LaurentPolynomial::monomial(-1, -3));
  // Isolated vertices are split circles.
  LinkDiagram two = medial_link(TaitGraph(3, {{0, 1, Half::upper, Sign::positive}}));
  CHECK(two.free_loops() == 1);
  CHECK(two.component_count() == 2);
}

TEST_CASE("x0 gives the unknot") {
  LinkDiagram m = medial_link(tait_graph(make_generator(0)));
  CHECK(m.crossing_count() == 4);
  SimplificationReport r = simplify(m);
  CHECK(r.diagram.crossing_count() == 0);
  CHECK(r.diagram.free_loops() == 1);
  CHECK(poly(testing::skein_bracket(m)) == LaurentPolynomial(1));
}

TEST_CASE("direct construction") {
  LinkDiagram id = direct_link(TreePair());
  CHECK(id.crossing_count() == 0);
  CHECK(id.free_loops() == 1);
  std::mt19937 rng(22);
  for (int k = 0; k < 50; ++k) {
    TreePair p = testing::random_pair(rng, 12);
    CHECK(direct_link(p).crossing_count() == 2 * (p.leaf_count() - 1));
    CHECK(medial_link(tait_graph(p)).crossing_count() == 2 * (p.leaf_count() - 1));
  }
}

TEST_CASE("both routes give the same bracket class") {
  std::mt19937 rng(23);
  for (int k = 0; k < 30; ++k) {
    TreePair p = testing::random_pair(rng, 10);
    LaurentPolynomial a = poly(testing::skein_bracket(direct_link(p)));
    LaurentPolynomial b = poly(testing::skein_bracket(medial_link(tait_graph(p))));
    CHECK(equivalent_up_to_units(a, b, 0));
  }
}

TEST_CASE("expansion adds at most trivial components") {
  std::mt19937 rng(24);
  for (int k = 0; k < 30; ++k) {
    TreePair p = testing::random_pair(rng, 9);
    std::size_t leaf = std::uniform_int_distribution<std::size_t>(0, p.leaf_count() - 1)(rng);
    CHECK(equivalent_up_to_units(kauffman_bracket(direct_link(p)), kauffman_bracket(direct_link(expand(p, leaf)))));
  }
}

TEST_CASE("PD text") {
  LinkDiagram m = medial_link(tait_graph(make_generator(1)));
  CHECK(LinkDiagram::from_pd(m.to_pd()) == m);
  CHECK(LinkDiagram::unknot().to_pd() == "O 1\n");
  CHECK_THROWS_AS(LinkDiagram::from_pd("X(1,2,3)\nO 0\n"), ParseError);
  CHECK_THROWS_AS(LinkDiagram::from_pd("X(1,2,3,4)\nO 0\n"), InvalidDiagram);
  CHECK(LinkDiagram::from_pd("X(1,1,2,2)").crossing_count() == 1);
}

TEST_CASE("simplify") {
  LinkDiagram empty = LinkDiagram::unknot();
  CHECK(simplify(empty).diagram == empty);
  LinkDiagram kink = LinkDiagram::from_pd("X(1,1,2,2)\nO 0\n");
  SimplificationReport r = simplify(kink);
  CHECK(r.diagram.crossing_count() == 0);
  CHECK(r.diagram.free_loops() == 1);
  CHECK(r.r1_moves == 1);
  CHECK(r.removed_unknots == 1);
  // Reidemeister II bigon on an unknot.
  LinkDiagram bigon = medial_link(TaitGraph(2, {{0, 1, Half::upper, Sign::positive}, {0, 1, Half::lower, Sign::negative}}));
  CHECK(bigon.crossing_count() == 2);
  SimplificationReport b = simplify(bigon);
  CHECK(b.diagram.crossing_count() == 0);
  std::mt19937 rng(25);
  for (int k = 0; k < 60; ++k) {
    LinkDiagram d = direct_link(testing::random_pair(rng, 9));
    SimplificationReport s = simplify(d);
    CHECK(s.diagram.crossing_count() <= d.crossing_count());
    CHECK(s.removed_unknots >= 0);
    CHECK(s.diagram.component_count() == d.component_count());
    CHECK(equivalent_up_to_units(kauffman_bracket(s.diagram), kauffman_bracket(d), 0));
  }
}

TEST_CASE("mirror and disjoint union") {
  std::mt19937 rng(26);
  for (int k = 0; k < 20; ++k) {
    LinkDiagram d = direct_link(testing::random_pair(rng, 8));
    LinkDiagram e = direct_link(testing::random_pair(rng, 5));
    CHECK(kauffman_bracket(d.mirror()) == kauffman_bracket(d).mirrored());
    CHECK(kauffman_bracket(disjoint_union(d, e)) ==
          kauffman_bracket(d) * kauffman_bracket(e) * LaurentPolynomial::delta());
  }
}
