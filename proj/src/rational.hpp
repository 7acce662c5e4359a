#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "error.hpp"
#include "ordering.hpp"

namespace ofc {

// Exact arbitrary-precision rational. Canonical form is maintained by GMP:
// gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Exact value of a decimal literal "123" / "1.25" (no exponent form).
  static Rat from_decimal_string(const std::string& text);
  // Exact dyadic value of an IEEE double. Rejects NaN/inf.
  static Rat from_double_exact(double x);
  // Best rational approximation of x by continued fractions with
  // denominator <= max_den and |x - p/q| <= tol. nullopt when none fits.
  static std::optional<Rat> reconstruct(double x, unsigned long max_den, double tol);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat div(const Rat& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat inverse() const { return Rat(1).div(*this); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  cmp compare(const Rat& o) const {
    int c = ::cmp(v_, o.v_);  // gmpxx three-way compare
    return c < 0 ? cmp::less : (c > 0 ? cmp::greater : cmp::equal);
  }
  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  // Exact square root when both numerator and denominator are perfect
  // squares; nullopt otherwise. Requires *this >= 0.
  std::optional<Rat> sqrt_exact() const;

  static Rat pow(const Rat& base, unsigned long e);

  // True when the value is an integer fitting a signed long.
  std::optional<long> to_long() const;
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }  // "p" or "p/q"

 private:
  mpq_class v_;
};

inline int sign_of(const Rat& r) { return r.sign(); }

}  // namespace ofc
