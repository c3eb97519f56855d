#pragma once

// Direct sums of the form Z^r + Z/n_1 + ... + k_1*T_1 + ..., where the T_i
// are symbolic summands the library cannot evaluate (SK_1(Z_n), Wh_q(Z_n),
// ...). Kept canonical so equality is structural: torsion orders sorted in
// descending order with trivial summands dropped, symbolic tokens sorted by
// name with multiplicities merged.

#include <map>
#include <string>
#include <vector>

namespace hilbertk {

class AbGroupExpr {
 public:
  AbGroupExpr() = default;

  static AbGroupExpr zero() { return {}; }
  static AbGroupExpr free(int rank);
  static AbGroupExpr cyclic(long order);
  static AbGroupExpr symbol(const std::string& token, int multiplicity = 1);

  // Inverse of to_string(). Accepts "0", "Z", "Z^k", "Z/n", "TOKEN" and
  // "k*TOKEN" joined by '+'. Throws InvalidInput.
  static AbGroupExpr parse(const std::string& text);

  int free_rank() const { return free_rank_; }
  const std::vector<long>& torsion() const { return torsion_; }
  const std::map<std::string, int>& symbolic() const { return symbolic_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty() && symbolic_.empty(); }

  AbGroupExpr& operator+=(const AbGroupExpr& rhs);
  friend AbGroupExpr operator+(AbGroupExpr a, const AbGroupExpr& b) { return a += b; }
  // k-fold direct sum.
  AbGroupExpr times(int k) const;

  friend bool operator==(const AbGroupExpr&, const AbGroupExpr&) = default;

  // "Z^2 + Z/6 + Z/2 + 2*Wh_q(Z_5)"; "0" for the trivial group.
  std::string to_string() const;

 private:
  int free_rank_ = 0;
  std::vector<long> torsion_;
  std::map<std::string, int> symbolic_;
};

}  // namespace hilbertk
