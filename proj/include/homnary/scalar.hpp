#ifndef HOMNARY_SCALAR_HPP
#define HOMNARY_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

#include "homnary/error.hpp"

namespace homnary {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ground field of a computation: Q itself, or a real quadratic extension
/// Q(sqrt(d)) for a square-free integer d >= 2. All scalars of one algebra
/// or map live in a single context; distinct discriminants never mix.
class FieldContext {
 public:
  constexpr FieldContext() = default;  // Q

  static FieldContext rational() { return FieldContext(); }
  static FieldContext quadratic(int d);  // throws InputError unless d >= 2 square-free

  bool isRational() const { return d_ == 0; }
  /// 0 for Q, otherwise the square-free d of Q(sqrt(d)).
  int discriminant() const { return d_; }

  friend bool operator==(FieldContext, FieldContext) = default;

  /// Least common context: Q embeds anywhere, distinct quadratic
  /// discriminants are an input error.
  friend FieldContext join(FieldContext lhs, FieldContext rhs);

  std::string str() const;  // "Q" or "Q(sqrt d)"

 private:
  explicit constexpr FieldContext(int d) : d_(d) {}
  int d_ = 0;
};

/// Exact element a + b*sqrt(d) of Q or Q(sqrt(d)). Values with b = 0 are
/// kept in canonical rational form (context Q) so that equal values compare
/// equal regardless of the context they were computed in.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(int value) : a_(value) {}  // NOLINT: implicit by design, Eigen needs Scalar(0)
  QuadScalar(long value) : a_(value) {}
  QuadScalar(Integer value) : a_(std::move(value)) {}
  QuadScalar(Rational value) : a_(std::move(value)) {}
  QuadScalar(Rational rational_part, Rational radical_part, FieldContext ctx);

  const Rational& rationalPart() const { return a_; }
  const Rational& radicalPart() const { return b_; }
  FieldContext context() const { return ctx_; }

  bool isZero() const { return a_ == 0 && b_ == 0; }
  bool isRational() const { return b_ == 0; }

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& rhs);
  QuadScalar& operator-=(const QuadScalar& rhs);
  QuadScalar& operator*=(const QuadScalar& rhs);
  QuadScalar& operator/=(const QuadScalar& rhs);

  friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
  friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
  friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
  friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadScalar& lhs, const QuadScalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.ctx_ == rhs.ctx_;
  }
  friend bool operator!=(const QuadScalar& lhs, const QuadScalar& rhs) = default;

 private:
  void normalize();  // b == 0 collapses to context Q

  Rational a_;
  Rational b_;
  FieldContext ctx_;
};

/// Multiplicative inverse via the conjugate: 1/(a+b sqrt d) = (a-b sqrt d)/(a^2-b^2 d).
/// Throws InputError on zero.
QuadScalar inverse(const QuadScalar& x);

/// sqrt(d) of the given quadratic context.
QuadScalar sqrtRadical(FieldContext ctx);

/// Parses `sign? rat (sign rat '*' 'r')?` with rat = `int ('/' posint)?`;
/// `r` denotes sqrt(d) of ctx and is rejected in a rational context.
/// Whitespace between tokens is ignored.
QuadScalar parseScalar(std::string_view text, FieldContext ctx);

/// Canonical text, re-parseable in the scalar's context; rational values
/// print without an `r` term ("3/5", "-1"), others as "a + b*r" / "a - b*r".
std::string formatScalar(const QuadScalar& x);

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

std::string formatRational(const Rational& q);
Rational parseRational(std::string_view text);  // `sign? int ('/' posint)?`

}  // namespace homnary

#endif
