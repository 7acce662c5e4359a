#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ofc {

// Polynomial in the lattice variable eta over the rationals. Exact series
// whose exponents all lie on (1/m)Z map onto these by eta = eps^(1/m).
using QPoly = Poly<Rat>;

QPoly qpoly_one();
QPoly qpoly_monomial(const Rat& coeff, std::size_t power);

// Lowest power of eta with a nonzero coefficient; poly must be nonzero.
std::size_t qpoly_valuation(const QPoly& p);

// Divide out eta^k exactly.
QPoly qpoly_shift_down(const QPoly& p, std::size_t k);

// Map an exact series onto the eta lattice: every exponent times m must be a
// non-negative integer.
QPoly qpoly_from_series(const SeriesRat& s, unsigned long m);

// Inverse mapping, eta^j -> eps^(j/m); always exact.
SeriesRat qpoly_to_series(const QPoly& p, unsigned long m);

double qpoly_eval_double(const QPoly& p, double x);

// Monic gcd via a primitive remainder sequence over the integers; overload
// shadows the generic Euclid, whose rational coefficients explode.
QPoly poly_gcd(QPoly a, QPoly b);

// Element of the fraction field Q(eta), kept reduced with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(qpoly_one()) {}
  explicit RatFunc(QPoly num) : num_(std::move(num)), den_(qpoly_one()) {}
  RatFunc(QPoly num, QPoly den);

  static RatFunc from_rat(const Rat& r) { return RatFunc(QPoly::constant(r)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-() const { return reduced(-num_, den_); }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }

  RatFunc inverse() const;
  RatFunc div(const RatFunc& o) const { return *this * o.inverse(); }

  bool operator==(const RatFunc& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
  }

 private:
  QPoly num_;
  QPoly den_;

  static RatFunc reduced(QPoly n, QPoly d) {
    RatFunc r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }
};

template <>
struct poly_coeff<RatFunc> {
  static bool is_zero(const RatFunc& t) { return t.is_zero(); }
};

using RPoly = Poly<RatFunc>;

// Monic gcd via a primitive remainder sequence with polynomial coefficients;
// content is stripped after every pseudo-division step.
RPoly poly_gcd(const RPoly& a, const RPoly& b);

// Clear denominators and strip the common eta power, giving a polynomial with
// QPoly coefficients at least one of which has a nonzero constant term.
std::vector<QPoly> rpoly_integral_form(const RPoly& f);

// Image at eta = 0 of the integral form: a nonzero rational polynomial whose
// roots include the standard parts of f's roots of non-negative order.
QPoly rpoly_standard_part(const RPoly& f);

}  // namespace ofc
