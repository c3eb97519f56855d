#include "hilbertk/cyclic_reps.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "hilbertk/errors.hpp"

namespace hilbertk {
namespace {

void require_order(int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be >= 1, got " + std::to_string(n));
}

void require_prime(int p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
}

// Number of orbits of Z/n under multiplication by the elements of `group`
// (a subgroup of (Z/n)*, given explicitly).
int count_orbits(int n, const std::vector<int>& group) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int orbits = 0;
  for (int j = 0; j < n; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++orbits;
    for (int t : group) seen[static_cast<std::size_t>((static_cast<long>(j) * t) % n)] = true;
  }
  return orbits;
}

// Splits n = p^a * m with gcd(p, m) = 1; returns {p^a, m}.
std::pair<int, int> split_p_part(int n, int p) {
  int pa = 1;
  while (n % p == 0) {
    n /= p;
    pa *= p;
  }
  return {pa, n};
}

// Cyclic subgroup <p mod m> of (Z/m)*, as residues.
std::vector<int> powers_mod(int p, int m) {
  std::vector<int> out;
  int x = 1 % m;
  do {
    out.push_back(x);
    x = static_cast<int>((static_cast<long>(x) * p) % m);
  } while (x != 1 % m);
  return out;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

int q_count(int n) {
  require_order(n);
  int count = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    count += (d * d == n) ? 1 : 2;
  }
  return count;
}

int r_count(int n) {
  require_order(n);
  return n % 2 ? (n + 1) / 2 : n / 2 + 1;
}

int c_count(int n) {
  require_order(n);
  return n % 2 ? (n - 1) / 2 : (n - 2) / 2;
}

int kp_count(int n, int p) {
  require_order(n);
  require_prime(p);
  if (n == 1) return 1;
  const int m = split_p_part(n, p).second;
  std::vector<bool> in_frob(static_cast<std::size_t>(m), false);
  for (int f : powers_mod(p, m)) in_frob[static_cast<std::size_t>(f)] = true;
  std::vector<int> group;
  for (int t = 1; t < n; ++t)
    if (std::gcd(t, n) == 1 && in_frob[static_cast<std::size_t>(t % m)]) group.push_back(t);
  return count_orbits(n, group);
}

int rp_count(int n, int p) {
  require_order(n);
  require_prime(p);
  const int m = split_p_part(n, p).second;
  return count_orbits(m, powers_mod(p, m));
}

RepCounts rep_counts(int n) {
  require_order(n);
  RepCounts out;
  out.n = n;
  out.r = r_count(n);
  out.c = c_count(n);
  out.q = q_count(n);
  for (int p = 2; p <= n; ++p)
    if (n % p == 0 && is_prime(p)) out.per_prime[p] = {kp_count(n, p), rp_count(n, p)};
  return out;
}

}  // namespace hilbertk
