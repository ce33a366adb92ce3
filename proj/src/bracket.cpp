#include "thompson/bracket.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

constexpr int kSmoothA[2][2] = {{0, 1}, {2, 3}};
constexpr int kSmoothB[2][2] = {{0, 3}, {1, 2}};

LaurentPolynomial loops_value(int loops) {
  // δ^(loops-1), with the empty diagram normalised to 1.
  return loops <= 1 ? LaurentPolynomial(1) : LaurentPolynomial::delta().pow(static_cast<unsigned>(loops - 1));
}

void check_bound(const LinkDiagram& d, const BracketOptions& options) {
  if (d.crossing_count() > options.max_crossings) {
    throw CrossingBoundExceeded(d.crossing_count(), options.max_crossings);
  }
}

// Frontier state: which open arcs are joined through the contracted part, and
// whether any closed loop has been seen (the first loop is the normalising
// unknot and contributes 1 instead of δ).
struct Frontier {
  std::vector<std::pair<int, int>> pairs;  // sorted, first < second
  bool closed_any = false;
  friend auto operator<=>(const Frontier&, const Frontier&) = default;
};

// Greedy order: always contract the crossing sharing the most arcs with the
// current frontier.
std::vector<int> contraction_order(const LinkDiagram& d) {
  const auto& xs = d.crossings();
  std::vector<int> order;
  std::vector<bool> done(xs.size(), false);
  std::map<int, int> open;  // label -> occurrences processed
  for (std::size_t step = 0; step < xs.size(); ++step) {
    int best = -1;
    int best_score = -1;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (done[i]) continue;
      int score = 0;
      for (int a : xs[i].arcs) score += open.count(a) ? 1 : 0;
      if (score > best_score) {
        best = static_cast<int>(i);
        best_score = score;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (int a : xs[best].arcs) {
      if (++open[a] == 2) open.erase(a);
    }
  }
  return order;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const LinkDiagram& d, BracketOptions options) {
  check_bound(d, options);
  const int free_loops = d.free_loops();
  if (d.crossing_count() == 0) return loops_value(free_loops);

  std::map<Frontier, LaurentPolynomial> states;
  states[Frontier{}] = LaurentPolynomial(1);
  const LaurentPolynomial delta = LaurentPolynomial::delta();

  for (int ci : contraction_order(d)) {
    const auto& arcs = d.crossings()[ci].arcs;
    std::map<Frontier, LaurentPolynomial> next;
    for (const auto& [front, poly] : states) {
      std::map<int, int> partner;
      for (auto [a, b] : front.pairs) {
        partner[a] = b;
        partner[b] = a;
      }
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        const auto& pairs = smoothing == 0 ? kSmoothA : kSmoothB;
        // Local graph on the four ports: smoothing links plus arc links.
        // terminal[p] is the label of the open end reached from port p, or -1
        // if port p links to another port of this crossing.
        int smooth_mate[4];
        for (auto& pr : pairs) {
          smooth_mate[pr[0]] = pr[1];
          smooth_mate[pr[1]] = pr[0];
        }
        int arc_mate[4] = {-1, -1, -1, -1};
        int terminal[4] = {-1, -1, -1, -1};
        for (int p = 0; p < 4; ++p) {
          int x = arcs[p];
          for (int q = 0; q < 4; ++q) {
            if (q != p && arcs[q] == x) arc_mate[p] = q;
          }
          if (arc_mate[p] >= 0) continue;
          auto it = partner.find(x);
          if (it == partner.end()) {
            terminal[p] = x;  // a fresh arc now hanging off the frontier
            continue;
          }
          int y = it->second;
          for (int q = 0; q < 4; ++q) {
            if (arcs[q] == y) arc_mate[p] = q;
          }
          if (arc_mate[p] < 0) terminal[p] = y;
        }
        Frontier nf;
        nf.closed_any = front.closed_any;
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : front.pairs) {
          bool touched = false;
          for (int x : arcs) touched = touched || x == a || x == b;
          if (!touched) kept.push_back({a, b});
        }
        bool seen[4] = {false, false, false, false};
        for (int p = 0; p < 4; ++p) {
          if (seen[p] || terminal[p] < 0) continue;
          int cur = p;
          while (true) {
            seen[cur] = true;
            int s = smooth_mate[cur];
            seen[s] = true;
            if (terminal[s] >= 0) {
              int a = terminal[p];
              int b = terminal[s];
              kept.push_back({std::min(a, b), std::max(a, b)});
              break;
            }
            cur = arc_mate[s];
          }
        }
        int loops = 0;
        for (int p = 0; p < 4; ++p) {
          if (seen[p]) continue;
          ++loops;
          int cur = p;
          while (!seen[cur]) {
            seen[cur] = true;
            int s = smooth_mate[cur];
            seen[s] = true;
            cur = arc_mate[s];
          }
        }
        std::sort(kept.begin(), kept.end());
        nf.pairs = std::move(kept);
        LaurentPolynomial value = poly.shifted(smoothing == 0 ? 1 : -1);
        if (loops > 0 && !nf.closed_any) {
          nf.closed_any = true;
          --loops;
        }
        if (loops > 0) value *= delta.pow(static_cast<unsigned>(loops));
        next[nf] += value;
      }
    }
    states = std::move(next);
  }
  LaurentPolynomial total;
  for (const auto& [front, poly] : states) total += poly;
  if (free_loops > 0) total *= delta.pow(static_cast<unsigned>(free_loops));
  return total;
}

LaurentPolynomial state_sum_bracket(const LinkDiagram& d, BracketOptions options) {
  check_bound(d, options);
  const auto& xs = d.crossings();
  const std::size_t c = xs.size();
  if (c == 0) return loops_value(d.free_loops());
  std::map<int, int> index;
  for (const Crossing& x : xs) {
    for (int a : x.arcs) index.emplace(a, static_cast<int>(index.size()));
  }
  const int n = static_cast<int>(index.size());
  std::vector<std::array<int, 4>> local(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (int k = 0; k < 4; ++k) local[i][k] = index[xs[i].arcs[k]];
  }
  // counts[a_minus_b + c][loops]
  std::vector<std::vector<long long>> counts(2 * c + 1, std::vector<long long>(n + 1, 0));
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    int a_count = 0;
    for (std::size_t i = 0; i < c; ++i) {
      bool a_smoothing = ((state >> i) & 1u) == 0;
      a_count += a_smoothing;
      const auto& pr = a_smoothing ? kSmoothA : kSmoothB;
      for (auto& p : pr) {
        int u = find(local[i][p[0]]);
        int v = find(local[i][p[1]]);
        if (u != v) {
          parent[u] = v;
          --components;
        }
      }
    }
    ++counts[2 * a_count][components];
  }
  LaurentPolynomial total;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (int loops = 1; loops <= n; ++loops) {
      if (counts[k][loops] == 0) continue;
      total += loops_value(loops) * LaurentPolynomial::monomial(counts[k][loops], static_cast<int>(k) - static_cast<int>(c));
    }
  }
  if (d.free_loops() > 0) total *= LaurentPolynomial::delta().pow(static_cast<unsigned>(d.free_loops()));
  return total;
}

bool equivalent_up_to_units(const LaurentPolynomial& p, const LaurentPolynomial& q, int max_unknots) {
  if (max_unknots < 0) throw Error("max_unknots must be non-negative");
  auto unit_multiple = [](const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    int shift = a.min_exponent() - b.min_exponent();
    if (shift % 3 != 0) return false;
    LaurentPolynomial moved = b.shifted(shift);
    return moved == a || -moved == a;
  };
  LaurentPolynomial dp = p;
  LaurentPolynomial dq = q;
  const LaurentPolynomial delta = LaurentPolynomial::delta();
  for (int m = 0; m <= max_unknots; ++m) {
    if (unit_multiple(dp, q) || unit_multiple(dq, p)) return true;
    dp *= delta;
    dq *= delta;
  }
  return false;
}

long long determinant(const LaurentPolynomial& bracket) {
  // A^k at exp(iπ/4) cycles through the eighth roots of unity; the value lies
  // in Z[ζ8], so rounding the modulus of the double evaluation is exact for
  // the sizes handled here.
  const double pi = std::acos(-1.0);
  auto value = bracket.evaluate(std::polar(1.0, pi / 4));
  return std::llround(std::abs(value));
}

}  // namespace thompson
