#pragma once

// Exact integers, rationals, and the quadratic extension Q(mu) used for
// weight coordinates of sl(n|m).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vachar {

// Expression templates off: values are plain and safe to use with auto.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form with den > 0 (integers print as "k/1").
std::string format_rational(const Rational& value);

/// Compact form: "k" for integers, "p/q" otherwise.
std::string format_rational_short(const Rational& value);

/// num/den for any nonzero den (the Rational constructor rejects negative denominators).
Rational ratio(const Integer& num, const Integer& den);

bool is_integer(const Rational& value);
Integer floor_of(const Rational& value);
/// value mod 1, in [0, 1).
Rational frac_of(const Rational& value);
Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);
std::int64_t to_int64(const Integer& value);

/// a + b*mu, where mu is a formal symbol with mu^2 a fixed rational.
///
/// A scalar with zero mu part is a plain rational and combines with any
/// context; two scalars with nonzero mu parts must share mu^2.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& rational) : rational_(rational) {}  // NOLINT
  Scalar(int value) : rational_(value) {}                    // NOLINT
  Scalar(Rational rational, Rational mu, Rational mu_squared);

  /// The symbol mu itself in the context mu^2 = mu_squared.
  static Scalar mu(const Rational& mu_squared);

  const Rational& rational_part() const { return rational_; }
  const Rational& mu_part() const { return mu_; }
  const Rational& mu_squared() const { return mu_squared_; }

  bool is_rational() const { return mu_ == 0; }
  /// Throws std::domain_error if the mu part is nonzero.
  const Rational& as_rational() const;

  /// mu -> -mu.
  Scalar conjugate() const;
  /// (a + b mu)(a - b mu) = a^2 - b^2 mu^2.
  Rational norm() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.rational_ == rhs.rational_ && lhs.mu_ == rhs.mu_;
  }

  /// "p/q" for rationals, otherwise "p/q+r/s*mu".
  std::string to_string() const;

 private:
  void adopt_context(const Scalar& rhs);

  Rational rational_{0};
  Rational mu_{0};
  Rational mu_squared_{0};
};

/// Inverse of Scalar::to_string; the mu^2 context must be supplied.
Scalar parse_scalar(std::string_view text, const Rational& mu_squared);

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace vachar
