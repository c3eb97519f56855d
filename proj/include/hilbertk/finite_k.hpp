#pragma once

// Rational K-theory data for integral group rings of finite cyclic groups:
// ranks of K_q(Z[Z_n]), ranks of H_q(BZ_n; K(Z)), and Whitehead groups
// Wh_q(Z_n) with unknown torsion carried symbolically.

#include "hilbertk/abgroup.hpp"

namespace hilbertk {

enum class RankCase { Q1Mod4, Q3Mod4, Qis1, Qis0, QisMinus1, Zero };

const char* to_string(RankCase c);

struct RankValue {
  int value = 0;
  RankCase case_label = RankCase::Zero;
  friend bool operator==(const RankValue&, const RankValue&) = default;
};

// Which row of the rank table applies to degree q.
RankCase rank_case(int q);

// rk K_q(Z[Z_n]):
//   r(n)                              q > 2, q = 1 mod 4
//   c(n)                              q > 2, q = 3 mod 4
//   r(n) - q(n)                       q = 1
//   1                                 q = 0
//   1 - q(n) + sum_{p|n} (k_p - r_p)  q = -1
//   0                                 otherwise
RankValue rank_K_cyclic(int n, int q);

// rk H_q(BZ_n; K(Z)): 1 for q = 0 and for q > 2 with q = 1 mod 4, else 0.
int rank_H_BM(int n, int q);

// Wh_q(Z_n). Free ranks come from rank_K_cyclic; torsion the library does
// not know is a symbolic token: "SK1(Z_n)" at q = 1 for n > 6,
// "Wh0(Z_n)" at q = 0 for n > 4, "K_-1tors(Z_n)" at q = -1, and the whole
// group "Wh_q(Z_n)" (q substituted) for q >= 2.
AbGroupExpr wh_cyclic(int n, int q);

}  // namespace hilbertk
