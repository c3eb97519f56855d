#include "hilbertk/cyclotomic.hpp"

#include <stdexcept>

namespace hilbertk {
namespace {

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// Exact division by a monic divisor.
IntPoly div_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw std::logic_error("div_exact: degree");
  IntPoly quo(num.size() - dd, BigInt(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    BigInt c = num[i];
    quo[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("div_exact: nonzero remainder");
  return quo;
}

std::vector<IntPoly> cyclotomic_table(int max_n) {
  std::vector<IntPoly> phi(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    IntPoly p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) p = div_exact(std::move(p), phi[static_cast<std::size_t>(d)]);
    phi[static_cast<std::size_t>(n)] = std::move(p);
  }
  return phi;
}

IntPoly psi_from_phi(int n, const IntPoly& phi) {
  if (n == 1) return {BigInt(-2), BigInt(1)};
  if (n == 2) return {BigInt(2), BigInt(1)};
  const std::size_t k = (phi.size() - 1) / 2;
  // P_0 = 2, P_1 = y, P_{j+1} = y P_j - P_{j-1}
  IntPoly prev{BigInt(2)};
  IntPoly cur{BigInt(0), BigInt(1)};
  IntPoly psi{phi[k]};
  psi.resize(k + 1, BigInt(0));
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t i = 0; i < cur.size(); ++i) psi[i] += phi[k + j] * cur[i];
    IntPoly next = mul(cur, {BigInt(0), BigInt(1)});
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  trim(psi);
  return psi;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  return cyclotomic_table(n).back();
}

IntPoly trace_minimal_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("trace_minimal_polynomial: n must be >= 1");
  return psi_from_phi(n, cyclotomic_polynomial(n));
}

TracePolynomials::TracePolynomials(int max_n) {
  if (max_n < 1) throw std::invalid_argument("TracePolynomials: max_n must be >= 1");
  auto phi = cyclotomic_table(max_n);
  psi_.resize(phi.size());
  for (int n = 1; n <= max_n; ++n)
    psi_[static_cast<std::size_t>(n)] = psi_from_phi(n, phi[static_cast<std::size_t>(n)]);
}

}  // namespace hilbertk
