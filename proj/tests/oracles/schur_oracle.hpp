#pragma once

// Independent Littlewood–Richardson oracle: expands Schur polynomials in k
// variables by semistandard tableaux, multiplies them as polynomials, and peels
// the product back into Schur polynomials by leading monomial.

#include <map>
#include <vector>

#include "realiz/cohomology.hpp"

namespace oracle {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, long long>;

inline void ssyt_fill(const std::vector<int>& shape, int vars, std::size_t row, std::size_t col,
                      std::vector<std::vector<int>>& t, Monomial& expo, Poly& out) {
  if (row == shape.size()) {
    ++out[expo];
    return;
  }
  if (col == static_cast<std::size_t>(shape[row])) {
    ssyt_fill(shape, vars, row + 1, 0, t, expo, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t[row][col - 1]);
  if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
  for (int v = lo; v <= vars; ++v) {
    t[row][col] = v;
    ++expo[v - 1];
    ssyt_fill(shape, vars, row, col + 1, t, expo, out);
    --expo[v - 1];
  }
}

inline Poly schur(const realiz::Partition& lambda, int vars) {
  Poly out;
  if (lambda.length() > vars) return out;
  std::vector<std::vector<int>> t;
  for (int part : lambda.parts()) t.emplace_back(part, 0);
  Monomial expo(vars, 0);
  ssyt_fill(lambda.parts(), vars, 0, 0, t, expo, out);
  return out;
}

inline Poly times(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Schur expansion of a symmetric polynomial: {ν : coefficient}.
inline std::map<realiz::Partition, long long> peel(Poly p, int vars) {
  std::map<realiz::Partition, long long> out;
  while (!p.empty()) {
    const auto& [lead, c] = *p.rbegin();  // lexicographically largest exponent
    realiz::Partition nu(lead);
    out[nu] += c;
    const long long coeff = c;
    for (const auto& [m, d] : schur(nu, vars)) {
      p[m] -= coeff * d;
      if (p[m] == 0) p.erase(m);
    }
  }
  return out;
}

/// σ_λ·σ_μ in G(k,n) computed from Schur polynomials in k variables.
inline realiz::CohomologyClass product(const realiz::GrassmannianSpec& g, const realiz::Partition& lambda,
                                       const realiz::Partition& mu) {
  realiz::CohomologyClass out(g);
  for (const auto& [nu, c] : peel(times(schur(lambda, g.k()), schur(mu, g.k())), g.k()))
    if (nu[0] <= g.corank()) out.add(nu, realiz::Integer(static_cast<long>(c)));
  return out;
}

/// c^ν_{λμ} with enough variables that nothing is truncated.
inline long long lr(const realiz::Partition& lambda, const realiz::Partition& mu, const realiz::Partition& nu) {
  const int vars = std::max(nu.length(), lambda.length() + mu.length());
  if (vars == 0) return 1;
  auto expansion = peel(times(schur(lambda, vars), schur(mu, vars)), vars);
  auto it = expansion.find(nu);
  return it == expansion.end() ? 0 : it->second;
}

}  // namespace oracle
