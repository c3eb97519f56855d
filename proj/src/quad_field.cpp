#include "hilbertk/quad_field.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "hilbertk/cyclotomic.hpp"
#include "hilbertk/errors.hpp"

namespace hilbertk {

bool is_square_free(long n) {
  if (n < 1) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(long d)
    : d_(d), kind_(d % 4 == 1 ? OmegaKind::HalfOnePlusSqrtD : OmegaKind::SqrtD) {}

FieldSpec FieldSpec::make(long d) {
  if (d < 2) throw InvalidInput("d must be >= 2, got " + std::to_string(d));
  if (!is_square_free(d)) throw InvalidInput(std::to_string(d) + " is not square-free");
  return FieldSpec(d);
}

std::string FieldSpec::omega_string() const {
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  return kind_ == OmegaKind::SqrtD ? root : "(1+" + root + ")/2";
}

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (!(x.field() == y.field())) throw InvalidInput("quadratic elements from different fields");
}

}  // namespace

QuadElem QuadElem::from_basis(const FieldSpec& field, const BigInt& x, const BigInt& y) {
  if (field.omega_kind() == OmegaKind::SqrtD) return {field, Rational(x), Rational(y)};
  Rational half_y(y, 2);
  return {field, Rational(x) + half_y, half_y};
}

Rational QuadElem::norm() const { return a_ * a_ - b_ * b_ * Rational(field_.d()); }

std::pair<Rational, Rational> QuadElem::basis_coords() const {
  if (field_.omega_kind() == OmegaKind::SqrtD) return {a_, b_};
  Rational y = b_ + b_;
  return {a_ - b_, y};
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.field_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.field_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  Rational d(x.field_.d());
  return {x.field_, x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_};
}

int sign_of(const Rational& u, const Rational& v, long d) {
  const int su = u.sign();
  const int sv = v.sign();
  if (su == 0) return sv;
  if (sv == 0 || su == sv) return su;
  // Opposite signs: the term with the larger square wins.
  auto c = (u * u) <=> (v * v * Rational(d));
  if (c > 0) return su;
  if (c < 0) return sv;
  return 0;
}

int QuadElem::sign() const { return sign_of(a_, b_, field_.d()); }

std::string QuadElem::to_string() const {
  const std::string root = "sqrt(" + std::to_string(field_.d()) + ")";
  if (b_.is_zero()) return a_.to_string();
  std::string irr;
  Rational mag = b_.abs();
  irr = (mag == Rational(1)) ? root : mag.to_string() + "*" + root;
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + irr;
  return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + irr;
}

double QuadElem::approx() const {
  return a_.approx() + b_.approx() * std::sqrt(static_cast<double>(field_.d()));
}

bool lex_less(const QuadElem& x, const QuadElem& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

bool is_algebraic_integer(const QuadElem& x) {
  return x.trace().is_integer() && x.norm().is_integer();
}

Embedded embed(const QuadElem& x, int i) {
  if (i != 1 && i != 2) throw InvalidInput("embedding index must be 1 or 2");
  QuadElem image = (i == 1) ? x : QuadElem(x.field(), x.a(), -x.b());
  double approx = image.approx();
  return {std::move(image), approx};
}

namespace {

// |u + v sqrt d| < 2
bool inside_open_interval(const Rational& u, const Rational& v, long d) {
  return sign_of(Rational(2) - u, -v, d) > 0 && sign_of(Rational(2) + u, v, d) > 0;
}

const TracePolynomials& trace_polynomials(int order_bound) {
  static const TracePolynomials kDefault(2 * kDefaultOrderBound);
  if (order_bound == kDefaultOrderBound) return kDefault;
  thread_local std::optional<TracePolynomials> custom;
  if (!custom || custom->max_n() != 2 * order_bound) custom.emplace(2 * order_bound);
  return *custom;
}

bool is_root(const IntPoly& p, const QuadElem& t) {
  QuadElem acc(t.field(), Rational(0));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + Rational(p[i]);
  return acc.a().is_zero() && acc.b().is_zero();
}

}  // namespace

bool is_elliptic_trace(const QuadElem& t) {
  if (!is_algebraic_integer(t))
    throw PreconditionViolation("is_elliptic_trace: " + t.to_string() + " is not an algebraic integer");
  const long d = t.field().d();
  return inside_open_interval(t.a(), t.b(), d) && inside_open_interval(t.a(), -t.b(), d);
}

std::optional<int> order_from_trace(const QuadElem& t, int order_bound) {
  if (order_bound < 2) throw InvalidInput("order bound must be >= 2");
  if (!is_elliptic_trace(t))
    throw PreconditionViolation("order_from_trace: " + t.to_string() + " is not an elliptic trace");
  const auto& table = trace_polynomials(order_bound);
  // N = 1, 2 give traces +-2, which are never elliptic.
  for (int n = 3; n <= table.max_n(); ++n) {
    const int order = (n % 2 == 0) ? n / 2 : n;
    if (order > order_bound) continue;
    if (is_root(table.psi(n), t)) return order;
  }
  return std::nullopt;
}

std::vector<TraceCandidate> elliptic_trace_candidates(const FieldSpec& f, int order_bound) {
  const bool half = f.omega_kind() == OmegaKind::HalfOnePlusSqrtD;
  const long y_limit_sq = half ? 16 : 4;  // y^2 d < y_limit_sq
  long y_max = 0;
  while ((y_max + 1) * (y_max + 1) * f.d() < y_limit_sq) ++y_max;

  std::vector<TraceCandidate> out;
  for (long y = -y_max; y <= y_max; ++y) {
    // |x + y/2| < 2 (half basis) or |x| < 2: integer x in the open interval
    // (-2 - shift, 2 - shift) with shift = y/2 or 0; widened by one and
    // filtered exactly below.
    const long shift_floor = half ? (y >= 0 ? y / 2 : -((-y + 1) / 2)) : 0;
    for (long x = -3 - shift_floor; x <= 3 - shift_floor; ++x) {
      QuadElem t = QuadElem::from_basis(f, BigInt(x), BigInt(y));
      if (t.a().abs() >= Rational(2)) continue;
      if (!is_elliptic_trace(t)) continue;
      auto order = order_from_trace(t, order_bound);
      if (!order)
        throw std::logic_error("elliptic trace " + t.to_string() + " has no finite order <= " +
                               std::to_string(order_bound));
      out.push_back({std::move(t), *order});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TraceCandidate& l, const TraceCandidate& r) { return lex_less(l.trace, r.trace); });
  return out;
}

std::vector<int> allowed_orders(const FieldSpec& f) {
  std::set<int> orders;
  for (const auto& c : elliptic_trace_candidates(f)) orders.insert(c.psl_order);
  return {orders.begin(), orders.end()};
}

}  // namespace hilbertk
