#include "rational.hpp"

#include <cctype>
#include <cmath>

namespace ofc {

Rat::Rat(long num, long den) {
  if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::from_decimal_string(const std::string& text) {
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false;
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  bool any = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (seen_dot) fail(errc::syntax_error, "malformed decimal literal: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_dot) ++frac_digits;
      any = true;
    } else {
      fail(errc::syntax_error, "malformed decimal literal: " + text);
    }
  }
  if (!any) fail(errc::syntax_error, "malformed decimal literal: " + text);
  mpz_class num(digits.empty() ? "0" : digits, 10);
  mpz_class den = 1;
  for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return Rat(q);
}

Rat Rat::from_double_exact(double x) {
  if (!std::isfinite(x)) fail(errc::invalid_argument, "non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rat(q);
}

std::optional<Rat> Rat::reconstruct(double x, unsigned long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents p_k/q_k of x; stop at the first within tol.
  double rem = x;
  long long p_prev = 1, q_prev = 0;
  long long p_cur = static_cast<long long>(std::floor(rem));
  long long q_cur = 1;
  for (int k = 0; k < 64; ++k) {
    double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
    if (std::fabs(x - approx) <= tol) {
      return Rat(static_cast<long>(p_cur), static_cast<long>(q_cur));
    }
    double frac = rem - std::floor(rem);
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
    long long a = static_cast<long long>(std::floor(rem));
    long long p_next = a * p_cur + p_prev;
    long long q_next = a * q_cur + q_prev;
    if (q_next <= 0 || static_cast<unsigned long long>(q_next) > max_den) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return std::nullopt;
}

std::optional<Rat> Rat::sqrt_exact() const {
  if (sign() < 0) fail(errc::sqrt_of_negative, "square root of a negative rational");
  mpz_class n = num();
  mpz_class d = den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class q(rn, rd);
  q.canonicalize();
  return Rat(q);
}

Rat Rat::pow(const Rat& base, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

std::optional<long> Rat::to_long() const {
  if (!is_integer()) return std::nullopt;
  mpz_class n = num();
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

}  // namespace ofc
