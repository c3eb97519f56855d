#pragma once

// Exact rational numbers over GMP integers.
//
// Values are always stored reduced with a positive denominator, so two
// equal rationals have identical representations and operator== is a plain
// componentwise comparison. Zero is 0/1.

#include <compare>
#include <string>

#include <gmpxx.h>

namespace hilbertk {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt n, BigInt d);

  // Parses "a" or "a/b" with optional leading '-'. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const;
  Rational inverse() const;

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  // Approximate; display only.
  double approx() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace hilbertk
