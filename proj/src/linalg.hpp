#pragma once

#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ofc {

// Structural zero test used when trimming polynomial coefficients. Truncated
// series count as nonzero even with an empty term list: their tail is
// unknown, so dropping them would forge information.
template <class T>
struct poly_coeff {
  static bool is_zero(const T& t) { return t.is_zero(); }
};

template <class C>
struct poly_coeff<Series<C>> {
  static bool is_zero(const Series<C>& s) { return s.structurally_zero() && s.is_exact(); }
};

// Dense univariate polynomial, coefficients ascending. The coefficient type
// needs +, -, * and the poly_coeff zero test; division-based algorithms
// additionally need inverse() and are constrained to exact coefficient
// domains (Rat, RatFunc).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const T& t) { return Poly(std::vector<T>{t}); }

  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& lead() const { return c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size() && i < o.c_.size()) {
        r[i] = c_[i] + o.c_[i];
      } else if (i < c_.size()) {
        r[i] = c_[i];
      } else {
        r[i] = o.c_[i];
      }
    }
    return Poly(std::move(r));
  }

  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& t : c_) r.push_back(-t);
    return Poly(std::move(r));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, c_[0] - c_[0]);  // typed zeros
    for (std::size_t i = 0; i < c_.size(); ++i) {
      for (std::size_t j = 0; j < o.c_.size(); ++j) {
        r[i + j] += c_[i] * o.c_[j];
      }
    }
    return Poly(std::move(r));
  }

  Poly scaled(const T& s) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& t : c_) r.push_back(t * s);
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T acc = c_[i];
      for (std::size_t k = 1; k < i; ++k) acc += c_[i];  // i * c_[i] without from_int
      r.push_back(std::move(acc));
    }
    return Poly(std::move(r));
  }

  // Horner evaluation within the coefficient domain.
  T eval(const T& x) const {
    if (c_.empty()) {
      T z = x - x;
      return z;
    }
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc = acc * x + c_[i];
    }
    return acc;
  }

 private:
  std::vector<T> c_;

  void trim() {
    while (!c_.empty() && poly_coeff<T>::is_zero(c_.back())) c_.pop_back();
  }
};

// Quotient and remainder over an exact coefficient field.
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  T lead_inv = b.lead().inverse();
  std::vector<T> rem(a.coeffs());
  std::vector<T> quot(a.degree() - b.degree() + 1, a.lead() - a.lead());
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    T q = rem[k + b.degree()] * lead_inv;
    quot[k] = q;
    for (int j = 0; j <= b.degree(); ++j) {
      rem[k + j] = rem[k + j] - q * b[j];
    }
  }
  return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

// Exact division; remainder must vanish.
template <class T>
Poly<T> poly_div_exact(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) fail(errc::internal, "inexact polynomial division");
  return q;
}

template <class T>
Poly<T> poly_monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

// Monic gcd by Euclid's algorithm.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

// Determinant of a matrix of polynomials, expanded column by column over row
// subsets. Division-free, so exact coefficient domains stay exact. 2^N space;
// callers cap N.
template <class T>
Poly<T> poly_matrix_det(const std::vector<std::vector<Poly<T>>>& m) {
  const std::size_t n = m.size();
  if (n == 0 || n > 24) fail(errc::internal, "determinant size out of range");
  for (const auto& row : m) {
    if (row.size() != n) fail(errc::dimension_mismatch, "matrix is not square");
  }
  std::vector<Poly<T>> dp(std::size_t(1) << n);
  for (std::size_t r = 0; r < n; ++r) dp[std::size_t(1) << r] = m[r][0];
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    int k = __builtin_popcountll(mask);
    if (k < 2) continue;
    const std::size_t col = static_cast<std::size_t>(k) - 1;
    Poly<T> acc;
    int pos = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(mask >> r & 1u)) continue;
      if (!m[r][col].is_zero()) {
        Poly<T> term = m[r][col] * dp[mask ^ (std::size_t(1) << r)];
        acc = ((pos + static_cast<int>(col)) % 2 == 0) ? acc + term : acc - term;
      }
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[dp.size() - 1];
}

// Square-free decomposition (Yun): f = lead * prod_i out[i].first^out[i].second
// with every factor monic, square-free and pairwise coprime.
template <class T>
std::vector<std::pair<Poly<T>, int>> poly_squarefree(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (f.degree() < 1) return out;
  Poly<T> fm = poly_monic(f);
  Poly<T> fp = fm.derivative();
  Poly<T> g = poly_gcd(fm, fp);
  if (g.degree() == 0) {
    out.push_back({fm, 1});
    return out;
  }
  Poly<T> c = poly_div_exact(fm, g);
  Poly<T> d = poly_div_exact(fp, g) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    Poly<T> p = poly_gcd(c, d);
    if (p.degree() > 0) out.push_back({p, i});
    c = poly_div_exact(c, p);
    d = poly_div_exact(d, p) - c.derivative();
  }
  return out;
}

}  // namespace ofc
