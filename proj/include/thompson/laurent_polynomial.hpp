#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace thompson {

// Integer Laurent polynomial in A. Zero coefficients are never stored.
// Arithmetic is exact; overflow of the 64-bit coefficients raises
// ArithmeticOverflow instead of wrapping.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;
  using Terms = std::map<int, Coefficient>;  // exponent -> coefficient

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant);  // NOLINT: integers promote naturally
  static LaurentPolynomial monomial(Coefficient c, int exponent);
  // δ = -A^2 - A^-2, the value of a disjoint unknot.
  static LaurentPolynomial delta();

  // Parses the sparse text form produced by to_string().
  static LaurentPolynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  // Multiply by A^k.
  LaurentPolynomial shifted(int k) const;
  // Substitute A -> A^-1.
  LaurentPolynomial mirrored() const;
  LaurentPolynomial pow(unsigned n) const;

  std::complex<double> evaluate(std::complex<double> a) const;

  // "c*A^e" terms joined by " + ", exponents descending; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(int exponent, Coefficient c);
  Terms terms_;
};

}  // namespace thompson
