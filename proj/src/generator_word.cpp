#include "thompson/generator_word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

long parse_number(std::string_view token, std::string_view digits) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("malformed word token \"" + std::string(token) + "\"");
  }
  return value;
}

Factor parse_token(std::string_view token) {
  if (token.size() < 2 || token[0] != 'x') {
    throw ParseError("malformed word token \"" + std::string(token) + "\"");
  }
  std::string_view rest = token.substr(1);
  std::size_t caret = rest.find('^');
  long index = parse_number(token, rest.substr(0, caret));
  if (index < 0 || !std::isdigit(static_cast<unsigned char>(rest[0]))) {
    throw ParseError("malformed generator index in \"" + std::string(token) + "\"");
  }
  long exponent = 1;
  if (caret != std::string_view::npos) {
    std::string_view exp = rest.substr(caret + 1);
    bool negative = !exp.empty() && exp[0] == '-';
    exponent = parse_number(token, negative ? exp.substr(1) : exp);
    if (negative) exponent = -exponent;
    if (exponent == 0) throw ParseError("zero exponent in \"" + std::string(token) + "\"");
  }
  return Factor{static_cast<std::size_t>(index), static_cast<int>(exponent)};
}

}  // namespace

GeneratorWord::GeneratorWord(std::initializer_list<Factor> factors) {
  for (const Factor& f : factors) append(f);
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  GeneratorWord word;
  std::size_t i = 0;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::vector<std::string_view> tokens;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.size() == 1 && (tokens[0] == "1" || tokens[0] == "e" || tokens[0] == "id")) return word;
  for (auto token : tokens) word.append(parse_token(token));
  return word;
}

void GeneratorWord::append(Factor f) {
  if (f.exponent == 0) return;
  if (!factors_.empty() && factors_.back().index == f.index) {
    factors_.back().exponent += f.exponent;
    if (factors_.back().exponent == 0) factors_.pop_back();
    return;
  }
  factors_.push_back(f);
}

void GeneratorWord::append(const GeneratorWord& w) {
  for (const Factor& f : w.factors_) append(f);
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord out;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out.append(Factor{it->index, -it->exponent});
  return out;
}

std::string GeneratorWord::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const Factor& f : factors_) {
    if (!first) out << ' ';
    first = false;
    out << 'x' << f.index;
    if (f.exponent != 1) out << '^' << f.exponent;
  }
  return out.str();
}

}  // namespace thompson
