#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "thompson/link_diagram.hpp"

namespace thompson {

// Conway normal form C(c_1, ..., c_k) of a 2-bridge link; entries positive.
class ConwayCode {
 public:
  explicit ConwayCode(std::vector<int> entries);
  // Comma-separated entries, e.g. "1,1,1,1".
  static ConwayCode parse(std::string_view text);
  static ConwayCode ones(std::size_t k) { return ConwayCode(std::vector<int>(k, 1)); }

  const std::vector<int>& entries() const { return entries_; }
  int crossing_count() const;
  std::string to_string() const;  // "C(1,1,1,1)"

 private:
  std::vector<int> entries_;
};

struct Fraction {
  std::int64_t p = 0;
  std::int64_t q = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// c_1 + 1/(c_2 + 1/(... + 1/c_k)), in lowest terms.
Fraction continued_fraction(const ConwayCode& c);

// Alternating 4-plat: the rational tangle of the code built by alternating
// horizontal and vertical twist regions, then numerator-closed.
LinkDiagram two_bridge_diagram(const ConwayCode& c, std::size_t max_crossings = 24);

}  // namespace thompson
