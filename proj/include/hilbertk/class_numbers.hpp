#pragma once

#include <vector>

namespace hilbertk {

// Negative discriminant D = 0 or 1 mod 4.
class Discriminant {
 public:
  // Throws InvalidInput.
  explicit Discriminant(long d);
  long value() const { return d_; }

 private:
  long d_;
};

struct QuadForm {
  long a, b, c;  // a x^2 + b xy + c y^2
  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

// Reduced primitive positive definite forms of discriminant D:
// |b| <= a <= c, b >= 0 whenever |b| = a or a = c, gcd(a, b, c) = 1.
// Since 3a^2 <= 4ac - b^2 = |D|, only a <= sqrt(|D|/3) is searched.
std::vector<QuadForm> reduced_forms(const Discriminant& disc);

// h(D): number of primitive classes, i.e. reduced_forms(D).size().
int class_number(const Discriminant& disc);

}  // namespace hilbertk
