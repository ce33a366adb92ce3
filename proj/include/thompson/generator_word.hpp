#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// One factor x_index^exponent of a word over the infinite generating set.
struct Factor {
  std::size_t index = 0;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// A word over {x_0, x_1, ...}. Adjacent factors with the same generator are
// merged on insertion and cancelled factors are dropped, so the stored factor
// list never has two neighbours with equal index.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  GeneratorWord(std::initializer_list<Factor> factors);

  // Tokens "x<k>", "x<k>^<m>", "x<k>^-<m>" separated by whitespace. The empty
  // string, "1", "e" and "id" denote the identity.
  static GeneratorWord parse(std::string_view text);

  void append(Factor f);
  void append(const GeneratorWord& w);
  GeneratorWord inverse() const;

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace thompson
