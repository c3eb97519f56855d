#pragma once

// Whitehead groups and rational K-theory rank differences of PSL_2(O_k) and
// SL_2(O_k), assembled from the conjugacy classes of maximal finite
// subgroups of the projective group.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "hilbertk/abgroup.hpp"
#include "hilbertk/quad_field.hpp"

namespace hilbertk {

// Cyclic order -> number of conjugacy classes of maximal finite subgroups
// of that order. Orders >= 2, counts >= 1.
class ClassCounts {
 public:
  ClassCounts() = default;
  // Throws InvalidInput on order < 2 or count < 1.
  explicit ClassCounts(std::map<int, int> entries);

  // "2:2,3:2,5:2"; orders strictly ascending, no duplicates.
  static ClassCounts parse(const std::string& spec);

  const std::map<int, int>& entries() const { return entries_; }
  int m() const;
  bool empty() const { return entries_.empty(); }
  std::string to_string() const;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;

 private:
  std::map<int, int> entries_;
};

enum class GroupMode { PSL, SL };

struct GenericSource {
  std::string label;
};

struct GroupData {
  std::variant<FieldSpec, GenericSource> source;
  // Maximal finite subgroups of the PSL quotient; in SL mode the central
  // {+-I} is implicit.
  ClassCounts class_counts;
  std::optional<AbGroupExpr> abelianization;  // of the PSL quotient
  GroupMode mode = GroupMode::PSL;

  // Field data with counts validated against allowed_orders(f).
  static GroupData for_field(const FieldSpec& f, ClassCounts counts, GroupMode mode = GroupMode::PSL,
                             std::optional<AbGroupExpr> ab = std::nullopt);
  // Built-in counts and abelianization. Throws MissingClassData.
  static GroupData builtin(const FieldSpec& f, GroupMode mode = GroupMode::PSL);
  static GroupData generic(std::string label, ClassCounts counts, GroupMode mode = GroupMode::PSL,
                           std::optional<AbGroupExpr> ab = std::nullopt);
};

// Built-in table: only Q(sqrt 5), with two classes each of orders 2, 3, 5.
// Throws MissingClassData for every other d.
ClassCounts class_counts_for_field(const FieldSpec& f);

// Built-in abelianization of PSL_2(O_k), when known (Q(sqrt 5): perfect).
std::optional<AbGroupExpr> builtin_abelianization(const FieldSpec& f);

// Wh_q(PSL) = sum over classes (M) of Wh_q(M).
AbGroupExpr whitehead_psl(const GroupData& g, int q);

// Same sum with q left symbolic: sum of count * "Wh_q(Z_n)".
AbGroupExpr whitehead_psl_formula(const GroupData& g);

// Wh_q(SL) for q <= 1:
//   q = 1:  Wh_1(PSL) + PSL^ab + Z/2
//   q = 0:  Wh_0(PSL) + Z
//   q = -1: sum over (M) of K_{-1}(Z[M])
//   q < -1: 0
// Throws InvalidInput for q > 1, MissingAbelianization at q = 1 without one.
AbGroupExpr whitehead_sl(const GroupData& g, int q);

// rk K_q(Z[G]) - rk H_q(BG; K(Z)) for G = PSL, computed as
//   sum_(M) rk K_q(Z[M]) - sum_(M) rk H_q(BM; K(Z)),
// i.e. subtracting m exactly when q = 0 or q > 2 with q = 1 mod 4.
int rank_diff(const GroupData& g, int q);

// The closed-form case table for the same difference:
//   sum r(M) - m                                  q > 2, q = 1 mod 4
//   sum c(M)                                      q > 2, q = 3 mod 4
//   sum (r(M) - q(M))                             q = 1
//   m - sum [q(M) - sum_{p||M|} (k_p - r_p)]      q = -1
//   0                                             otherwise
// At q = -1 the inner sum over primes binds only the (k_p - r_p) terms;
// for prime |M| this agrees with every other reading.
int rank_diff_table(const ClassCounts& counts, int q);

}  // namespace hilbertk
