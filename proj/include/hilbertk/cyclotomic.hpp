#pragma once

// Integer polynomials for the trace test: cyclotomic polynomials Phi_N and
// the minimal polynomials psi_N of 2cos(2*pi/N) = zeta_N + zeta_N^{-1}.

#include <cstddef>
#include <vector>

#include "hilbertk/rational.hpp"

namespace hilbertk {

// Coefficients from the constant term upward.
using IntPoly = std::vector<BigInt>;

IntPoly cyclotomic_polynomial(int n);

// Minimal polynomial over Q of zeta_n + zeta_n^{-1}, obtained from the
// palindromic Phi_n through x^k + x^{-k} = P_k(x + 1/x). Monic, degree
// phi(n)/2 for n >= 3; psi_1 = y - 2, psi_2 = y + 2.
IntPoly trace_minimal_polynomial(int n);

// psi_n for all n in [1, max_n], built from one shared cyclotomic sweep.
class TracePolynomials {
 public:
  explicit TracePolynomials(int max_n);
  int max_n() const { return static_cast<int>(psi_.size()) - 1; }
  const IntPoly& psi(int n) const { return psi_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<IntPoly> psi_;
};

}  // namespace hilbertk
