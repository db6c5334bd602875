#include "hyperbernardi/polynomial.hpp"

#include <numeric>

namespace hb {

IntegerPolynomial::IntegerPolynomial(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }

void IntegerPolynomial::add_term(int exponent, long long c) {
  if (exponent >= static_cast<int>(coeffs.size())) coeffs.resize(exponent + 1, 0);
  coeffs[exponent] += c;
  trim();
}

long long IntegerPolynomial::sum() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0LL); }

void IntegerPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string to_string(const IntegerPolynomial& p, const std::string& var) {
  std::string out;
  for (int i = 0; i < static_cast<int>(p.coeffs.size()); ++i) {
    long long c = p.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hb
