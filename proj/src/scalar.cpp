#include "homnary/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace homnary {

namespace {

bool squareFree(int d) {
  for (int p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

FieldContext FieldContext::quadratic(int d) {
  if (d < 2 || !squareFree(d))
    throw InputError("discriminant must be a square-free integer >= 2, got " + std::to_string(d));
  return FieldContext(d);
}

FieldContext join(FieldContext lhs, FieldContext rhs) {
  if (lhs.isRational()) return rhs;
  if (rhs.isRational() || lhs == rhs) return lhs;
  throw InputError("field mismatch: " + lhs.str() + " vs " + rhs.str());
}

std::string FieldContext::str() const {
  return isRational() ? "Q" : "Q(sqrt " + std::to_string(d_) + ")";
}

QuadScalar::QuadScalar(Rational rational_part, Rational radical_part, FieldContext ctx)
    : a_(std::move(rational_part)), b_(std::move(radical_part)), ctx_(ctx) {
  if (!b_.is_zero() && ctx_.isRational())
    throw InputError("radical part requires a quadratic field context");
  normalize();
}

void QuadScalar::normalize() {
  if (b_.is_zero()) ctx_ = FieldContext::rational();
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
  ctx_ = join(ctx_, rhs.ctx_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
  ctx_ = join(ctx_, rhs.ctx_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
  if (b_.is_zero() && rhs.b_.is_zero()) {  // common all-rational case
    a_ *= rhs.a_;
    return *this;
  }
  ctx_ = join(ctx_, rhs.ctx_);
  const int d = ctx_.discriminant();
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) { return *this *= inverse(rhs); }

QuadScalar inverse(const QuadScalar& x) {
  if (x.isZero()) throw InputError("division by zero");
  if (x.isRational()) return QuadScalar(Rational(1) / x.rationalPart());
  const int d = x.context().discriminant();
  // Nonzero for square-free d >= 2: a^2 = b^2 d with b != 0 would make sqrt(d) rational.
  Rational norm = x.rationalPart() * x.rationalPart() - x.radicalPart() * x.radicalPart() * d;
  return QuadScalar(x.rationalPart() / norm, -x.radicalPart() / norm, x.context());
}

QuadScalar sqrtRadical(FieldContext ctx) {
  if (ctx.isRational()) throw InputError("sqrt(d) needs a quadratic context");
  return QuadScalar(Rational(0), Rational(1), ctx);
}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
};

Integer parseDigits(Cursor& cur) {
  cur.skipSpace();
  size_t start = cur.pos;
  while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    ++cur.pos;
  if (cur.pos == start) throw SyntaxError("expected digits in scalar '" + std::string(cur.text) + "'");
  return Integer(std::string(cur.text.substr(start, cur.pos - start)));
}

int parseSign(Cursor& cur) {
  if (cur.consume('+')) return 1;
  if (cur.consume('-')) return -1;
  return 1;
}

// rat = int ('/' posint)?
Rational parseRat(Cursor& cur) {
  Integer num = parseDigits(cur);
  if (cur.consume('/')) {
    Integer den = parseDigits(cur);
    if (den.is_zero()) throw SyntaxError("zero denominator in scalar '" + std::string(cur.text) + "'");
    return Rational(num, den);
  }
  return Rational(num);
}

}  // namespace

Rational parseRational(std::string_view text) {
  Cursor cur{text};
  int sign = parseSign(cur);
  Rational value = parseRat(cur);
  if (!cur.done()) throw SyntaxError("trailing characters in rational '" + std::string(text) + "'");
  return sign < 0 ? -value : value;
}

QuadScalar parseScalar(std::string_view text, FieldContext ctx) {
  Cursor cur{text};
  int sign = parseSign(cur);
  Rational a = parseRat(cur);
  if (sign < 0) a = -a;
  if (cur.done()) return QuadScalar(std::move(a));

  char c = cur.peek();
  if (c != '+' && c != '-')
    throw SyntaxError("trailing characters in scalar '" + std::string(text) + "'");
  int bsign = parseSign(cur);
  Rational b = parseRat(cur);
  if (bsign < 0) b = -b;
  if (!cur.consume('*') || !cur.consume('r'))
    throw SyntaxError("expected '*r' after radical coefficient in '" + std::string(text) + "'");
  if (!cur.done()) throw SyntaxError("trailing characters in scalar '" + std::string(text) + "'");
  if (ctx.isRational())
    throw InputError("'r' is not available in a rational field context: '" + std::string(text) + "'");
  return QuadScalar(std::move(a), std::move(b), ctx);
}

std::string formatRational(const Rational& q) {
  std::string out = numerator(q).str();
  if (denominator(q) != 1) out += "/" + denominator(q).str();
  return out;
}

std::string formatScalar(const QuadScalar& x) {
  if (x.isRational()) return formatRational(x.rationalPart());
  const Rational& b = x.radicalPart();
  std::string out = formatRational(x.rationalPart());
  out += (b > 0) ? " + " : " - ";
  out += formatRational(b > 0 ? b : Rational(-b));
  out += "*r";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << formatScalar(x); }

}  // namespace homnary
