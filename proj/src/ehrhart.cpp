#include <algorithm>
#include <string>
#include <unordered_set>

#include "hyperbernardi/polytope.hpp"

namespace hb {

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<long long>(r);
}

std::vector<long long> ehrhart_values(const RibbonGraph& g, int kmax) {
  if (!g.colored()) throw InputError("ehrhart_values needs a bipartite graph");
  // Lattice points of k*Q_G are the degree vectors of k-edge multisets.
  const int n = g.node_count();
  std::vector<long long> out;
  std::unordered_set<std::string> cur{std::string(n, '\0')};
  out.push_back(1);
  for (int k = 1; k <= kmax; ++k) {
    if (k > 255) throw InputError("kmax too large");
    std::unordered_set<std::string> next;
    next.reserve(cur.size() * 2);
    for (const auto& s : cur)
      for (int e = 0; e < g.edge_count(); ++e) {
        std::string t = s;
        ++t[g.ends(e)[0]];
        ++t[g.ends(e)[1]];
        next.insert(std::move(t));
      }
    cur.swap(next);
    out.push_back(static_cast<long long>(cur.size()));
  }
  return out;
}

std::vector<long long> fit_binomial_coefficients(const std::vector<long long>& values, int d, int max_degree) {
  std::vector<long long> a;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    __int128 v = values[k];
    for (int i = 0; i < k; ++i) v -= static_cast<__int128>(a[i]) * binomial(d + k - i, d);
    if (v < 0) throw TheoremViolation("negative binomial coefficient a_" + std::to_string(k));
    if (max_degree >= 0 && k > max_degree && v != 0)
      throw TheoremViolation("nonzero binomial coefficient a_" + std::to_string(k) + " beyond degree bound");
    // the Ehrhart polynomial has degree d, so later values only confirm the fit
    if (k > d && v != 0) throw TheoremViolation("values are not a polynomial of degree " + std::to_string(d));
    a.push_back(static_cast<long long>(v));
  }
  if (static_cast<int>(a.size()) > d + 1) a.resize(d + 1);
  return a;
}

std::vector<long long> kato_series(const IntegerPolynomial& interior, int d, int n) {
  std::vector<long long> s(n + 1, 0);
  for (int i = 0; i <= n; ++i) s[i] = interior.at(i);
  // Multiply by 1/(1-x) d+1 times: prefix sums.
  for (int pass = 0; pass <= d; ++pass)
    for (int i = 1; i <= n; ++i) s[i] += s[i - 1];
  return s;
}

bool kato_series_check(const IntegerPolynomial& interior, const RibbonGraph& g, int n) {
  const int d = g.node_count() - 2;
  return kato_series(interior, d, n) == ehrhart_values(g, n);
}

}  // namespace hb
