#pragma once

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "ordering.hpp"
#include "rational.hpp"

namespace ofc {

// Approximate model of the reals: IEEE double with tolerant comparison.
// |a - b| <= tolerance * max(1, |a|, |b|) counts as equality.
class FloatReal {
 public:
  static constexpr double tolerance = 1e-9;

  FloatReal() : v_(0.0) {}
  explicit FloatReal(double v) : v_(v) {}
  static FloatReal from_rat(const Rat& r) { return FloatReal(r.to_double()); }

  double value() const { return v_; }

  FloatReal operator+(const FloatReal& o) const { return FloatReal(v_ + o.v_); }
  FloatReal operator-(const FloatReal& o) const { return FloatReal(v_ - o.v_); }
  FloatReal operator*(const FloatReal& o) const { return FloatReal(v_ * o.v_); }
  FloatReal operator-() const { return FloatReal(-v_); }
  FloatReal& operator+=(const FloatReal& o) { v_ += o.v_; return *this; }
  FloatReal& operator-=(const FloatReal& o) { v_ -= o.v_; return *this; }
  FloatReal& operator*=(const FloatReal& o) { v_ *= o.v_; return *this; }

  FloatReal div(const FloatReal& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "float division by zero");
    return FloatReal(v_ / o.v_);
  }
  FloatReal inverse() const { return FloatReal(1.0).div(*this); }

  cmp compare(const FloatReal& o) const {
    double scale = std::max({1.0, std::fabs(v_), std::fabs(o.v_)});
    if (std::fabs(v_ - o.v_) <= tolerance * scale) return cmp::equal;
    return v_ < o.v_ ? cmp::less : cmp::greater;
  }
  bool operator==(const FloatReal& o) const { return compare(o) == cmp::equal; }
  bool operator!=(const FloatReal& o) const { return !(*this == o); }

  // Sign under the tolerant equality with zero.
  int sign() const { return compare(FloatReal(0.0)) == cmp::equal ? 0 : (v_ < 0 ? -1 : 1); }
  bool is_zero() const { return sign() == 0; }
  // Structural zero test used when dropping series terms; tolerance does not
  // apply there, tiny coefficients stay in the term list.
  bool is_structural_zero() const { return v_ == 0.0; }

  FloatReal abs() const { return FloatReal(std::fabs(v_)); }

  FloatReal sqrt() const {
    if (sign() < 0) fail(errc::sqrt_of_negative, "square root of a negative value");
    return FloatReal(v_ <= 0.0 ? 0.0 : std::sqrt(v_));
  }

 private:
  double v_;
};

inline int sign_of(const FloatReal& x) { return x.sign(); }

}  // namespace ofc
