#ifndef ELLIPTOPE_RATIONAL_HPP
#define ELLIPTOPE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "elliptope/error.hpp"

namespace ell {

// Exact rational number, always in lowest terms with positive denominator.
// Thin value wrapper over GMP's mpq so formatting and parsing are pinned
// down in one place.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) fail(ErrorCode::parse_error, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q", optional leading '-'.
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::internal_error, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Exact square root, or nullopt if the value is not a perfect square.
  std::optional<Rational> sqrt_exact() const;

 private:
  mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) fail(ErrorCode::parse_error, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    fail(ErrorCode::parse_error, "bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    fail(ErrorCode::parse_error, "zero denominator: '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

inline std::string Rational::str() const {
  return v_.get_str();  // canonical "p" or "p/q"
}

inline std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = num(), d = den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class q(rn, rd);
  q.canonicalize();
  return Rational(q);
}

}  // namespace ell

#endif
