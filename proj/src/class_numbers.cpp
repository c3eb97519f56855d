#include "hilbertk/class_numbers.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "hilbertk/errors.hpp"

namespace hilbertk {

Discriminant::Discriminant(long d) : d_(d) {
  if (d >= 0) throw InvalidInput("discriminant must be negative, got " + std::to_string(d));
  const long r = ((d % 4) + 4) % 4;
  if (r != 0 && r != 1) throw InvalidInput("discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
}

std::vector<QuadForm> reduced_forms(const Discriminant& disc) {
  const long abs_d = -disc.value();
  std::vector<QuadForm> out;
  for (long a = 1; 3 * a * a <= abs_d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b + abs_d;  // b^2 - D = 4ac
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

int class_number(const Discriminant& disc) { return static_cast<int>(reduced_forms(disc).size()); }

}  // namespace hilbertk
