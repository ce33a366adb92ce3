#include "thompson/laurent_polynomial.hpp"

#include <cctype>
#include <limits>
#include <charconv>
#include <sstream>
#include <vector>

#include "thompson/errors.hpp"

namespace thompson {
namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(Coefficient constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[exponent] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::delta() { return monomial(-1, 2) + monomial(-1, -2); }

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) {
    if (c == std::numeric_limits<Coefficient>::min()) throw ArithmeticOverflow();
    add_term(e, -c);
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (auto [ea, ca] : a.terms_) {
    for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
  }
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial LaurentPolynomial::operator-() const { return LaurentPolynomial() - *this; }

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::mirrored() const {
  LaurentPolynomial out;
  for (auto [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::complex<double> LaurentPolynomial::evaluate(std::complex<double> a) const {
  std::complex<double> sum = 0.0;
  for (auto [e, c] : terms_) sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second << "*A^" << it->first;
  }
  return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact == "0") return {};
  LaurentPolynomial out;
  std::size_t i = 0;
  auto fail = [&]() -> LaurentPolynomial { throw ParseError("polynomial \"" + std::string(text) + "\""); };
  auto read_int = [&](long long& v) {
    const char* b = compact.data() + i;
    auto [ptr, ec] = std::from_chars(b, compact.data() + compact.size(), v);
    if (ec != std::errc()) fail();
    i += static_cast<std::size_t>(ptr - b);
  };
  if (compact.empty()) fail();
  while (i < compact.size()) {
    long long c = 0;
    long long e = 0;
    read_int(c);
    if (compact.compare(i, 3, "*A^") != 0) fail();
    i += 3;
    read_int(e);
    out.add_term(static_cast<int>(e), c);
    if (i < compact.size()) {
      if (compact[i] != '+') fail();
      ++i;
    }
  }
  return out;
}

}  // namespace thompson
