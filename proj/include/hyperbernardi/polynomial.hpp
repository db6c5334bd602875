#pragma once

#include <string>
#include <vector>

namespace hb {

// Dense coefficients, index = exponent. Trailing zeros are trimmed (zero polynomial = {}).
struct IntegerPolynomial {
  std::vector<long long> coeffs;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<long long> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long at(int i) const { return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0; }
  void add_term(int exponent, long long c = 1);
  long long sum() const;
  void trim();

  bool operator==(const IntegerPolynomial&) const = default;
};

// "1 + 3*x + 3*x^2"
std::string to_string(const IntegerPolynomial& p, const std::string& var = "x");

}  // namespace hb
