#pragma once

// Counts of irreducible representations of the cyclic group Z_n over
// R, Q, Q_p and F_p.
//
// The irreducible complex characters of Z_n are indexed by j in Z/n. An
// irreducible representation over a field K of characteristic 0 is an orbit
// of these indices under Gal(K(zeta_n)/K), acting by multiplication by units.
//
//   R:   the orbit group is {1, -1}.
//   Q:   all of (Z/n)*; the orbits are the divisors of n.
//   Q_p: write n = p^a m with p not dividing m. Q_p(zeta_{p^a}) is totally
//        ramified with full Galois group (Z/p^a)*, and Q_p(zeta_m) is
//        unramified with Galois group generated by Frobenius, i.e. by p mod
//        m. So the group is {t : t mod m in <p>, t mod p^a any unit}.
//   F_p: characters of order prime to p only (the p-part acts unipotently),
//        so orbits of Z/m under multiplication by p: cyclotomic cosets.

#include <map>

namespace hilbertk {

struct PrimeCounts {
  int k_p = 0;  // over Q_p
  int r_p = 0;  // over F_p
  friend bool operator==(const PrimeCounts&, const PrimeCounts&) = default;
};

struct RepCounts {
  int n = 1;
  int r = 0;  // real irreducibles
  int c = 0;  // real irreducibles of complex type
  int q = 0;  // rational irreducibles
  std::map<int, PrimeCounts> per_prime;  // exactly the primes dividing n
  friend bool operator==(const RepCounts&, const RepCounts&) = default;
};

bool is_prime(long p);

int q_count(int n);
int r_count(int n);
int c_count(int n);
// Throws InvalidInput when p is not prime or n < 1.
int kp_count(int n, int p);
int rp_count(int n, int p);

RepCounts rep_counts(int n);

}  // namespace hilbertk
