#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "float_real.hpp"
#include "ordering.hpp"
#include "rational.hpp"

namespace ofc {

// Per-coefficient operations that differ between the exact and the float
// coefficient domains. `keep` is the structural test used to prune stored
// terms; `sign` is the decision test used by comparisons, which for floats
// treats sub-tolerance coefficients as noise.
template <class C>
struct coeff_ops;

template <>
struct coeff_ops<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& r) { return r; }
  static bool keep(const Rat& c) { return !c.is_zero(); }
  static int sign(const Rat& c) { return c.sign(); }
  static int diff_sign(const Rat& a, const Rat& b) { return (a - b).sign(); }
  static Rat div(const Rat& a, const Rat& b) { return a.div(b); }
  static Rat sqrt(const Rat& c) {
    auto s = c.sqrt_exact();
    if (!s) fail(errc::not_representable, "coefficient " + c.str() + " has no exact square root");
    return *s;
  }
};

template <>
struct coeff_ops<FloatReal> {
  static FloatReal zero() { return FloatReal(0.0); }
  static FloatReal one() { return FloatReal(1.0); }
  static FloatReal from_rat(const Rat& r) { return FloatReal::from_rat(r); }
  static bool keep(const FloatReal& c) { return !c.is_structural_zero(); }
  static int sign(const FloatReal& c) { return c.sign(); }
  static int diff_sign(const FloatReal& a, const FloatReal& b) {
    auto c = a.compare(b);
    return c == cmp::less ? -1 : (c == cmp::greater ? 1 : 0);
  }
  static FloatReal div(const FloatReal& a, const FloatReal& b) { return a.div(b); }
  static FloatReal sqrt(const FloatReal& c) { return c.sqrt(); }
};

// Relative exponent window for series expansions (inverse, square root,
// iterative root refinement). An expansion around leading exponent q keeps
// terms up to q + window.
struct Budget {
  Rat window;

  static Budget standard(const Rat& delta) { return Budget{delta * Rat(8)}; }
  Budget doubled() const { return Budget{window * Rat(2)}; }
};

// Truncated formal power series in eps with rational exponents: a finite sum
// sum_i c_i * eps^(q_i) with q_0 < q_1 < ... plus, when `trunc()` is set, an
// unknown tail of order >= trunc(). An unset truncation means the value is
// exact. Ordering is lexicographic on coefficients: the sign of the element
// is the sign of its lowest-exponent coefficient, making eps a positive
// infinitesimal.
template <class C>
class Series {
 public:
  using Coeff = C;

  struct Term {
    Rat exponent;
    C coeff;
  };

  Series() = default;

  static Series zero() { return Series(); }
  static Series one() { return monomial(coeff_ops<C>::one(), Rat(0)); }
  static Series constant(const C& c) { return monomial(c, Rat(0)); }
  static Series from_rat(const Rat& r) { return constant(coeff_ops<C>::from_rat(r)); }
  static Series eps_pow(const Rat& q) { return monomial(coeff_ops<C>::one(), q); }

  static Series monomial(const C& c, const Rat& q) {
    Series s;
    if (coeff_ops<C>::keep(c)) s.terms_.push_back(Term{q, c});
    return s;
  }

  static Series from_terms(std::vector<Term> terms, std::optional<Rat> trunc = std::nullopt) {
    Series s;
    s.terms_ = std::move(terms);
    s.trunc_ = std::move(trunc);
    s.normalize();
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Rat>& trunc() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool structurally_zero() const { return terms_.empty(); }

  // Exponent of the lowest stored term; nullopt when no terms are stored.
  std::optional<Rat> lead_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
  }

  C coeff_at(const Rat& q) const {
    for (const Term& t : terms_) {
      if (t.exponent == q) return t.coeff;
      if (t.exponent > q) break;
    }
    return coeff_ops<C>::zero();
  }

  Series operator-() const {
    Series r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Series operator+(const Series& o) const {
    Series r;
    r.trunc_ = min_trunc(trunc_, o.trunc_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exponent < o.terms_[j].exponent)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].exponent < terms_[i].exponent) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        C c = terms_[i].coeff + o.terms_[j].coeff;
        if (coeff_ops<C>::keep(c)) r.terms_.push_back(Term{terms_[i].exponent, c});
        ++i;
        ++j;
      }
    }
    r.drop_tail();
    return r;
  }

  Series operator-(const Series& o) const { return *this + (-o); }

  // Product truncation: an unknown tail of a scales by the lead of b and
  // vice versa, so T = min(T_a + lead(b), T_b + lead(a)); a factor with no
  // stored terms contributes nothing (its lead acts as +infinity).
  Series operator*(const Series& o) const {
    std::optional<Rat> t;
    if (trunc_ && !o.terms_.empty()) {
      t = min_trunc(t, *trunc_ + o.terms_.front().exponent);
    }
    if (o.trunc_ && !terms_.empty()) {
      t = min_trunc(t, *o.trunc_ + terms_.front().exponent);
    }
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_) {
      for (const Term& b : o.terms_) {
        Rat e = a.exponent + b.exponent;
        if (t && !(e < *t)) continue;
        prod.push_back(Term{e, a.coeff * b.coeff});
      }
    }
    return from_terms(std::move(prod), t);
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  static Series pow(const Series& base, unsigned long e) {
    Series acc = one();
    Series b = base;
    unsigned long k = e;
    while (k > 0) {
      if (k & 1) acc = acc * b;
      k >>= 1;
      if (k > 0) b = b * b;
    }
    return acc;
  }

  // Intersects the truncation with T and discards terms at or beyond it.
  Series truncated_to(const Rat& T) const {
    Series r = *this;
    r.trunc_ = min_trunc(r.trunc_, T);
    r.drop_tail();
    return r;
  }

  // Comparison walks both term lists in exponent order and decides at the
  // first coefficient pair that differs at decision level. Coefficients are
  // compared in place rather than through subtraction so float tolerance
  // keeps the operands' scale. With no deciding pair the elements are equal
  // when both are exact, indistinguishable when a truncation hides the tail.
  cmp compare(const Series& o) const {
    std::optional<Rat> T = min_trunc(trunc_, o.trunc_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      bool have_i = i < terms_.size();
      bool have_j = j < o.terms_.size();
      int s;
      const Rat* q;
      if (have_i && (!have_j || terms_[i].exponent < o.terms_[j].exponent)) {
        q = &terms_[i].exponent;
        s = coeff_ops<C>::sign(terms_[i].coeff);
        ++i;
      } else if (have_j && (!have_i || o.terms_[j].exponent < terms_[i].exponent)) {
        q = &o.terms_[j].exponent;
        s = -coeff_ops<C>::sign(o.terms_[j].coeff);
        ++j;
      } else {
        q = &terms_[i].exponent;
        s = coeff_ops<C>::diff_sign(terms_[i].coeff, o.terms_[j].coeff);
        ++i;
        ++j;
      }
      if (T && !(*q < *T)) break;
      if (s < 0) return cmp::less;
      if (s > 0) return cmp::greater;
    }
    return T ? cmp::indistinguishable : cmp::equal;
  }

  bool operator==(const Series& o) const { return compare(o) == cmp::equal; }

  // Sign of the element itself; 0 covers both exact zero and all-noise.
  int sign() const {
    for (const Term& t : terms_) {
      int s = coeff_ops<C>::sign(t.coeff);
      if (s != 0) return s;
    }
    return 0;
  }

  Series abs() const { return sign() < 0 ? -*this : *this; }

  // Coefficient at eps^0. Fails when a negative-exponent term is nonzero at
  // decision level, or when the truncation hides the constant term.
  C standard_part() const {
    if (trunc_ && !(Rat(0) < *trunc_)) {
      fail(errc::not_representable, "truncation order hides the standard part");
    }
    C at_zero = coeff_ops<C>::zero();
    for (const Term& t : terms_) {
      if (t.exponent < Rat(0)) {
        if (coeff_ops<C>::sign(t.coeff) != 0) {
          fail(errc::infinite_standard_part, "element has an infinite standard part");
        }
      } else if (t.exponent == Rat(0)) {
        at_zero = t.coeff;
      } else {
        break;
      }
    }
    return at_zero;
  }

  // Multiplicative inverse. Writing a = c*eps^q*(1+u) with u of positive
  // lead, the result is c^-1*eps^-q*sum_k (-u)^k carried through a relative
  // window W = min(budget, T_a - q); its truncation is -q + W. An exact
  // monomial inverts exactly.
  Series inverse(const Budget& budget) const {
    auto pivot = pivot_index();
    if (!pivot) fail(errc::division_by_zero, "inverse of a zero element");
    const Rat q = terms_[*pivot].exponent;
    const C c = terms_[*pivot].coeff;

    Series u = relative_tail(*pivot, q, c);
    if (u.terms_.empty() && u.is_exact()) {
      return monomial(coeff_ops<C>::div(coeff_ops<C>::one(), c), -q);
    }

    Rat window = budget.window;
    if (u.trunc_ && *u.trunc_ < window) window = *u.trunc_;
    u = u.truncated_to(window);

    Series acc = one().truncated_to(window);
    Series p = one();
    int parity = 0;
    while (true) {
      p = (p * u).truncated_to(window);
      if (p.terms_.empty()) break;
      parity ^= 1;
      acc = parity ? acc - p : acc + p;
    }
    return acc * monomial(coeff_ops<C>::div(coeff_ops<C>::one(), c), -q);
  }

  Series div(const Series& o, const Budget& budget) const { return *this * o.inverse(budget); }

  // Square root via the binomial series sqrt(1+u) = sum_k binom(1/2,k) u^k
  // after factoring a = c*eps^q*(1+u). Requires a positive leading coefficient
  // with a representable square root. Exact monomials stay exact.
  Series sqrt(const Budget& budget) const {
    auto pivot = pivot_index();
    if (!pivot) {
      if (is_exact()) return zero();
      return zero().truncated_to(*trunc_ * Rat(1, 2));
    }
    if (coeff_ops<C>::sign(terms_[*pivot].coeff) < 0) {
      fail(errc::sqrt_of_negative, "square root of a negative element");
    }
    const Rat q = terms_[*pivot].exponent;
    const C c = terms_[*pivot].coeff;
    const C root_c = coeff_ops<C>::sqrt(c);
    const Rat half_q = q * Rat(1, 2);

    Series u = relative_tail(*pivot, q, c);
    if (u.terms_.empty() && u.is_exact()) return monomial(root_c, half_q);

    Rat window = budget.window;
    if (u.trunc_ && *u.trunc_ < window) window = *u.trunc_;
    u = u.truncated_to(window);

    Series acc = one().truncated_to(window);
    Series p = one();
    Rat binom(1);  // binom(1/2, k), updated by binom *= (1/2 - (k-1)) / k
    for (unsigned long k = 1;; ++k) {
      p = (p * u).truncated_to(window);
      if (p.terms_.empty()) break;
      binom = binom * Rat(3 - 2 * static_cast<long>(k), 2 * static_cast<long>(k));
      acc += p * from_rat(binom);
    }
    return acc * monomial(root_c, half_q);
  }

 private:
  std::vector<Term> terms_;
  std::optional<Rat> trunc_;

  static std::optional<Rat> min_trunc(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? *a : *b;
  }

  void drop_tail() {
    if (!trunc_) return;
    while (!terms_.empty() && !(terms_.back().exponent < *trunc_)) terms_.pop_back();
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!merged.empty() && merged.back().exponent == t.exponent) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_.clear();
    for (Term& t : merged) {
      if (coeff_ops<C>::keep(t.coeff)) terms_.push_back(std::move(t));
    }
    drop_tail();
  }

  // Index of the lowest term with a decision-level nonzero coefficient.
  // Noise below it (float backends only) is not part of the pivot.
  std::optional<std::size_t> pivot_index() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (coeff_ops<C>::sign(terms_[i].coeff) != 0) return i;
    }
    return std::nullopt;
  }

  // u with a = c*eps^q*(1+u): terms after the pivot, exponents shifted by -q,
  // coefficients divided by c. Truncation shifts to T_a - q.
  Series relative_tail(std::size_t pivot, const Rat& q, const C& c) const {
    Series u;
    for (std::size_t i = pivot + 1; i < terms_.size(); ++i) {
      u.terms_.push_back(Term{terms_[i].exponent - q, coeff_ops<C>::div(terms_[i].coeff, c)});
    }
    if (trunc_) u.trunc_ = *trunc_ - q;
    return u;
  }
};

using SeriesRat = Series<Rat>;
using SeriesFloat = Series<FloatReal>;

// |x| < eps^m with a definite comparison outcome. The workhorse of
// order-topology convergence checks: r_n -> r iff for every m the residual
// r_n - r eventually satisfies this.
template <class C>
bool definitely_below_eps_order(const Series<C>& x, const Rat& m) {
  return x.abs().compare(Series<C>::eps_pow(m)) == cmp::less;
}

}  // namespace ofc
