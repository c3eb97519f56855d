#include "hilbertk/finite_k.hpp"

#include <string>

#include "hilbertk/cyclic_reps.hpp"
#include "hilbertk/errors.hpp"

namespace hilbertk {

const char* to_string(RankCase c) {
  switch (c) {
    case RankCase::Q1Mod4: return "q>2, q=1 mod 4";
    case RankCase::Q3Mod4: return "q>2, q=3 mod 4";
    case RankCase::Qis1: return "q=1";
    case RankCase::Qis0: return "q=0";
    case RankCase::QisMinus1: return "q=-1";
    case RankCase::Zero: return "otherwise";
  }
  return "?";
}

RankCase rank_case(int q) {
  if (q > 2 && q % 4 == 1) return RankCase::Q1Mod4;
  if (q > 2 && q % 4 == 3) return RankCase::Q3Mod4;
  if (q == 1) return RankCase::Qis1;
  if (q == 0) return RankCase::Qis0;
  if (q == -1) return RankCase::QisMinus1;
  return RankCase::Zero;
}

RankValue rank_K_cyclic(int n, int q) {
  if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
  const RankCase c = rank_case(q);
  switch (c) {
    case RankCase::Q1Mod4: return {r_count(n), c};
    case RankCase::Q3Mod4: return {c_count(n), c};
    case RankCase::Qis1: return {r_count(n) - q_count(n), c};
    case RankCase::Qis0: return {1, c};
    case RankCase::QisMinus1: {
      int value = 1 - q_count(n);
      for (const auto& [p, counts] : rep_counts(n).per_prime) value += counts.k_p - counts.r_p;
      return {value, c};
    }
    case RankCase::Zero: break;
  }
  return {0, RankCase::Zero};
}

int rank_H_BM(int n, int q) {
  if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
  return (q == 0 || (q > 2 && q % 4 == 1)) ? 1 : 0;
}

AbGroupExpr wh_cyclic(int n, int q) {
  if (n < 1) throw InvalidInput("cyclic group order must be >= 1");
  if (n == 1 || q < -1) return AbGroupExpr::zero();
  const std::string zn = "(Z_" + std::to_string(n) + ")";
  switch (q) {
    case 1: {
      auto g = AbGroupExpr::free(rank_K_cyclic(n, 1).value);
      if (n > 6) g += AbGroupExpr::symbol("SK1" + zn);
      return g;
    }
    case 0:
      return n > 4 ? AbGroupExpr::symbol("Wh0" + zn) : AbGroupExpr::zero();
    case -1:
      return AbGroupExpr::free(rank_K_cyclic(n, -1).value) + AbGroupExpr::symbol("K_-1tors" + zn);
    default:
      return AbGroupExpr::symbol("Wh_" + std::to_string(q) + zn);
  }
}

}  // namespace hilbertk
