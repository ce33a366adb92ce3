#include "thompson/two_bridge.hpp"

#include <numeric>
#include <sstream>
#include <string>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

// Crossing type of each twist region; every diagram built is alternating.
constexpr bool kHorizontalUnderOnEven = false;
constexpr bool kVerticalUnderOnEven = false;

enum Corner { NE = 0, NW = 1, SW = 2, SE = 3 };

// Strand ends and crossing ports are both "points"; mate links two points by
// an arc, through links the two ends of a crossing-free strand.
class TangleBuilder {
 public:
  int add_strand() {
    int a = new_point(-1, -1);
    int b = new_point(-1, -1);
    through_[a] = b;
    through_[b] = a;
    return a;
  }
  int other_end(int a) const { return through_[a]; }
  int add_crossing(bool under_on_even) {
    int id = builder_.add_crossing(under_on_even);
    int first = -1;
    for (int s = 0; s < 4; ++s) {
      int p = new_point(id, s);
      if (s == 0) first = p;
    }
    return first;
  }
  void join(int a, int b) {
    mate_[a] = b;
    mate_[b] = a;
  }
  LinkDiagram build() {
    std::vector<bool> used(mate_.size(), false);
    for (std::size_t p = 0; p < mate_.size(); ++p) {
      if (used[p] || crossing_[p] < 0) continue;
      int q = mate_[p];
      while (crossing_[q] < 0) {
        used[q] = true;
        q = through_[q];
        used[q] = true;
        q = mate_[q];
      }
      used[p] = used[q] = true;
      builder_.connect({crossing_[p], slot_[p]}, {crossing_[q], slot_[q]});
    }
    for (std::size_t p = 0; p < mate_.size(); ++p) {
      if (used[p]) continue;
      builder_.add_free_loops(1);
      int q = static_cast<int>(p);
      while (!used[q]) {
        used[q] = true;
        q = through_[q];
        used[q] = true;
        q = mate_[q];
      }
    }
    return builder_.build();
  }

 private:
  int new_point(int crossing, int slot) {
    mate_.push_back(-1);
    through_.push_back(-1);
    crossing_.push_back(crossing);
    slot_.push_back(slot);
    return static_cast<int>(mate_.size()) - 1;
  }
  DiagramBuilder builder_;
  std::vector<int> mate_, through_, crossing_, slot_;
};

}  // namespace

ConwayCode::ConwayCode(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("Conway code must be non-empty");
  for (int c : entries_) {
    if (c < 1) throw Error("Conway code entries must be positive");
  }
}

ConwayCode ConwayCode::parse(std::string_view text) {
  std::vector<int> entries;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad Conway code entry '" + item + "'");
    }
    if (used != item.size()) throw ParseError("bad Conway code entry '" + item + "'");
    entries.push_back(value);
  }
  return ConwayCode(std::move(entries));
}

int ConwayCode::crossing_count() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string ConwayCode::to_string() const {
  std::string out = "C(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

Fraction continued_fraction(const ConwayCode& c) {
  const auto& e = c.entries();
  Fraction f{e.back(), 1};
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    f = Fraction{e[i] * f.p + f.q, f.p};
  }
  std::int64_t g = std::gcd(f.p, f.q);
  return {f.p / g, f.q / g};
}

LinkDiagram two_bridge_diagram(const ConwayCode& c, std::size_t max_crossings) {
  if (static_cast<std::size_t>(c.crossing_count()) > max_crossings) {
    throw CrossingBoundExceeded(c.crossing_count(), max_crossings);
  }
  TangleBuilder tb;
  const auto& e = c.entries();
  const std::size_t k = e.size();
  int end[4];
  int a = tb.add_strand();
  int b = tb.add_strand();
  if (k % 2 == 1) {
    end[NW] = a, end[NE] = tb.other_end(a);
    end[SW] = b, end[SE] = tb.other_end(b);
  } else {
    end[NW] = a, end[SW] = tb.other_end(a);
    end[NE] = b, end[SE] = tb.other_end(b);
  }
  for (std::size_t j = k; j-- > 0;) {
    bool horizontal = j % 2 == 0;
    for (int t = 0; t < e[j]; ++t) {
      int x = tb.add_crossing(horizontal ? kHorizontalUnderOnEven : kVerticalUnderOnEven);
      if (horizontal) {
        tb.join(x + NW, end[NE]);
        tb.join(x + SW, end[SE]);
        end[NE] = x + NE;
        end[SE] = x + SE;
      } else {
        tb.join(x + NW, end[SW]);
        tb.join(x + NE, end[SE]);
        end[SW] = x + SW;
        end[SE] = x + SE;
      }
    }
  }
  tb.join(end[NW], end[NE]);
  tb.join(end[SW], end[SE]);
  return tb.build();
}

}  // namespace thompson
