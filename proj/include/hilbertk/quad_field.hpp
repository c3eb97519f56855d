#pragma once

// Real quadratic fields Q(sqrt d), their rings of integers, the two real
// embeddings, and the enumeration of elliptic traces in PSL_2(O_k).
//
// Every comparison involving sqrt(d) is decided exactly by sign_of(), which
// is the only place an irrational quantity is compared.

#include <optional>
#include <string>
#include <vector>

#include "hilbertk/rational.hpp"

namespace hilbertk {

enum class OmegaKind {
  SqrtD,             // d = 2, 3 mod 4: O_k = Z[sqrt d]
  HalfOnePlusSqrtD,  // d = 1 mod 4:    O_k = Z[(1 + sqrt d)/2]
};

class FieldSpec {
 public:
  // Throws InvalidInput unless d >= 2 is square-free.
  static FieldSpec make(long d);

  long d() const { return d_; }
  OmegaKind omega_kind() const { return kind_; }
  // "sqrt(5)" / "(1+sqrt(5))/2"
  std::string omega_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(long d);
  long d_;
  OmegaKind kind_;
};

bool is_square_free(long n);

// a + b*sqrt(d)
class QuadElem {
 public:
  QuadElem(const FieldSpec& field, Rational a, Rational b = Rational(0))
      : field_(field), a_(std::move(a)), b_(std::move(b)) {}

  // x + y*omega for the field's integral basis {1, omega}.
  static QuadElem from_basis(const FieldSpec& field, const BigInt& x, const BigInt& y);

  const FieldSpec& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  Rational trace() const { return a_ + a_; }
  Rational norm() const;
  // Coordinates (x, y) with this = x + y*omega; rational in general.
  std::pair<Rational, Rational> basis_coords() const;

  QuadElem operator-() const { return {field_, -a_, -b_}; }
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator+(const QuadElem& x, const Rational& r) { return {x.field_, x.a_ + r, x.b_}; }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

  // -1, 0, +1; exact.
  int sign() const;

  // "a + b*sqrt(d)" with the obvious simplifications.
  std::string to_string() const;
  double approx() const;

 private:
  FieldSpec field_;
  Rational a_;
  Rational b_;
};

// Strict total order by (a, b); for use in ordered containers only.
bool lex_less(const QuadElem& x, const QuadElem& y);

// Sign of u + v*sqrt(d). Signs of u and v first, one squaring when they differ.
int sign_of(const Rational& u, const Rational& v, long d);

bool is_algebraic_integer(const QuadElem& x);

struct Embedded {
  QuadElem exact;
  double approx;  // display only
};

// i = 1 is the identity, i = 2 sends sqrt(d) to -sqrt(d).
Embedded embed(const QuadElem& x, int i);

// sigma_1(t)^2 < 4 and sigma_2(t)^2 < 4. Throws PreconditionViolation when t
// is not an algebraic integer.
bool is_elliptic_trace(const QuadElem& t);

struct TraceCandidate {
  QuadElem trace;
  int psl_order;
};

inline constexpr int kDefaultOrderBound = 30;

// Order in PSL_2 of an elliptic element with trace t: t is a root of psi_N
// for exactly one N, and the order is N/2 for even N, N for odd N. nullopt
// when no N with order <= bound matches. Throws PreconditionViolation when t
// is not an elliptic trace.
std::optional<int> order_from_trace(const QuadElem& t, int order_bound = kDefaultOrderBound);

// All algebraic integers of the field with both embeddings in (-2, 2),
// sorted by lex_less, each with its PSL_2 order.
//
// Bounds: writing t = a + b*sqrt(d), sigma_1(t) - sigma_2(t) = 2b*sqrt(d)
// lies in (-4, 4) so b^2 d < 4, and sigma_1(t) + sigma_2(t) = 2a lies in
// (-4, 4) so |a| < 2. In basis coordinates t = x + y*omega this gives
// y^2 d < 4 (resp. < 16 when omega = (1+sqrt d)/2) and |x + y/2| < 2.
std::vector<TraceCandidate> elliptic_trace_candidates(const FieldSpec& f,
                                                      int order_bound = kDefaultOrderBound);

// Sorted orders of the elliptic elements of PSL_2(O_k).
std::vector<int> allowed_orders(const FieldSpec& f);

}  // namespace hilbertk
