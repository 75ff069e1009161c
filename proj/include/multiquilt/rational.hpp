#ifndef MULTIQUILT_RATIONAL_HPP
#define MULTIQUILT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace multiquilt {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Thrown when an operation is asked for an indeterminate projective value
/// (0/0, inf/inf, inf - inf, 0 * inf) or an input outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

/// A point of the projective line over the rationals: a reduced rational or
/// the single point at infinity.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  ExtRat(long q) : value_(q) {}              // NOLINT(google-explicit-constructor)

  static ExtRat infinity() {
    ExtRat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  const Rational& value() const {
    if (infinite_) throw DomainError("ExtRat: value() of infinity");
    return value_;
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  /// Total order used only for keys and canonical output: finite values
  /// ordered as rationals, infinity last.
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  ExtRat operator-() const {
    if (infinite_) return *this;
    return ExtRat(Rational(-value_));
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ && b.infinite_) throw DomainError("indeterminate: inf + inf");
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRat(Rational(a.value_ + b.value_));
  }

  friend ExtRat operator-(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ && b.infinite_) throw DomainError("indeterminate: inf - inf");
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRat(Rational(a.value_ - b.value_));
  }

  friend ExtRat operator*(const ExtRat& a, const ExtRat& b) {
    if ((a.infinite_ && b.is_zero()) || (b.infinite_ && a.is_zero())) {
      throw DomainError("indeterminate: 0 * inf");
    }
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRat(Rational(a.value_ * b.value_));
  }

  friend ExtRat operator/(const ExtRat& a, const ExtRat& b) {
    if (a.infinite_ && b.infinite_) throw DomainError("indeterminate: inf / inf");
    if (a.is_zero() && b.is_zero()) throw DomainError("indeterminate: 0 / 0");
    if (a.infinite_) return infinity();
    if (b.infinite_) return ExtRat(0);
    if (b.value_ == 0) return infinity();
    return ExtRat(Rational(a.value_ / b.value_));
  }

  /// "inf" or the rational in "p/q" form.
  std::string str() const { return infinite_ ? std::string("inf") : value_.str(); }

  static ExtRat parse(const std::string& text) {
    if (text == "inf" || text == "-inf") return infinity();
    return ExtRat(parse_rational(text));
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

}  // namespace multiquilt

#endif  // MULTIQUILT_RATIONAL_HPP
