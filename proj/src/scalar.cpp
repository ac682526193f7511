#include "vachar/scalar.hpp"

#include <boost/multiprecision/integer.hpp>

#include <limits>
#include <ostream>
#include <stdexcept>

namespace vachar {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: " + std::string(text));
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("sign belongs on the numerator: " + std::string(text));
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_rational_short(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return format_rational(value);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer floor_of(const Rational& value) {
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational frac_of(const Rational& value) { return value - Rational(floor_of(value)); }

Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  Integer g = gcd_of(a, b);
  Integer l = a / g * b;
  return l < 0 ? Integer(-l) : l;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  return value.convert_to<std::int64_t>();
}

Scalar::Scalar(Rational rational, Rational mu, Rational mu_squared)
    : rational_(std::move(rational)), mu_(std::move(mu)), mu_squared_(std::move(mu_squared)) {}

Scalar Scalar::mu(const Rational& mu_squared) { return Scalar(0, 1, mu_squared); }

const Rational& Scalar::as_rational() const {
  if (mu_ != 0) throw std::domain_error("scalar has a nonzero mu part: " + to_string());
  return rational_;
}

Scalar Scalar::conjugate() const { return Scalar(rational_, -mu_, mu_squared_); }

Rational Scalar::norm() const { return rational_ * rational_ - mu_ * mu_ * mu_squared_; }

Scalar Scalar::operator-() const { return Scalar(-rational_, -mu_, mu_squared_); }

void Scalar::adopt_context(const Scalar& rhs) {
  if (mu_squared_ == rhs.mu_squared_) return;
  if (rhs.mu_ == 0) return;
  if (mu_ == 0) {
    mu_squared_ = rhs.mu_squared_;
    return;
  }
  throw std::invalid_argument("scalars live in different mu^2 contexts: " +
                              format_rational(mu_squared_) + " vs " +
                              format_rational(rhs.mu_squared_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  adopt_context(rhs);
  rational_ += rhs.rational_;
  mu_ += rhs.mu_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  adopt_context(rhs);
  rational_ -= rhs.rational_;
  mu_ -= rhs.mu_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  adopt_context(rhs);
  Rational r = rational_ * rhs.rational_ + mu_ * rhs.mu_ * mu_squared_;
  Rational m = rational_ * rhs.mu_ + mu_ * rhs.rational_;
  rational_ = std::move(r);
  mu_ = std::move(m);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  adopt_context(rhs);
  Rational n = rhs.norm();
  if (n == 0) throw std::domain_error("division by a scalar of zero norm: " + rhs.to_string());
  Scalar inv = rhs.conjugate();
  inv.rational_ /= n;
  inv.mu_ /= n;
  return *this *= inv;
}

std::string Scalar::to_string() const {
  if (mu_ == 0) return format_rational_short(rational_);
  std::string out;
  if (rational_ != 0) out = format_rational_short(rational_) + (mu_ > 0 ? "+" : "");
  return out + format_rational_short(mu_) + "*mu";
}

Scalar parse_scalar(std::string_view text, const Rational& mu_squared) {
  text = trim(text);
  auto star = text.find("*mu");
  if (star == std::string_view::npos) return Scalar(parse_rational(text));
  if (star + 3 != text.size()) throw std::invalid_argument("malformed scalar: " + std::string(text));
  std::string_view body = text.substr(0, star);
  // Split "a+b" / "a-b" at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, parse_rational(body), mu_squared);
  Rational rat = parse_rational(body.substr(0, split));
  std::string_view mu_text = body.substr(split);
  if (mu_text[0] == '+') mu_text.remove_prefix(1);
  return Scalar(rat, parse_rational(mu_text), mu_squared);
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

}  // namespace vachar
