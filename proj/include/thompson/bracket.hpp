#pragma once

#include <cstddef>

#include "thompson/laurent_polynomial.hpp"
#include "thompson/link_diagram.hpp"

namespace thompson {

struct BracketOptions {
  std::size_t max_crossings = 24;
};

// Kauffman bracket with <unknot> = 1, <D ⊔ O> = δ<D>, and at a crossing
// X(a,b,c,d): A·(a~b, c~d) + A^-1·(a~d, b~c). Evaluated by contracting the
// crossings one at a time and tracking how the open arcs are paired.
LaurentPolynomial kauffman_bracket(const LinkDiagram& d, BracketOptions options = {});

// The same value by enumerating all 2^c states with union-find loop counting.
// Independent of kauffman_bracket; kept as its oracle. Honors the same bound.
LaurentPolynomial state_sum_bracket(const LinkDiagram& d, BracketOptions options = {});

// True iff p·δ^m = ±A^{3k}·q or q·δ^m = ±A^{3k}·p for some integer k and
// 0 <= m <= max_unknots. A false result certifies that the two diagrams
// represent different links, even after discarding trivial components.
bool equivalent_up_to_units(const LaurentPolynomial& p, const LaurentPolynomial& q, int max_unknots = 4);

// |<D>| at A = exp(iπ/4), the link determinant.
long long determinant(const LaurentPolynomial& bracket);

}  // namespace thompson
