#include "parse.hpp"

#include <cctype>

namespace ofc {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail_here(const std::string& expected) const {
    fail(errc::syntax_error,
         "syntax error at offset " + std::to_string(pos_) + ": " + expected);
  }

  mpz_class read_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_here("expected digit");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s_[pos_++]);
    return mpz_class(digits, 10);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// int ['/' posint]; both parts unsigned, signs are handled by the callers
Rat read_fraction(Cursor& c) {
  mpz_class num = c.read_uint();
  c.skip_ws();
  if (c.eat('/')) {
    c.skip_ws();
    mpz_class den = c.read_uint();
    if (den == 0) c.fail_here("zero denominator");
    return Rat(mpq_class(num, den));
  }
  return Rat(num);
}

Rat read_expo(Cursor& c) {
  c.skip_ws();
  if (c.eat('(')) {
    c.skip_ws();
    bool neg = c.eat('-');
    Rat inner = read_expo(c);
    c.skip_ws();
    if (!c.eat(')')) c.fail_here("expected ')'");
    return neg ? -inner : inner;
  }
  return read_fraction(c);
}

// 'e' ['^' expo]; the caller has checked that 'e' is next
Rat read_epspart(Cursor& c) {
  c.eat('e');
  c.skip_ws();
  if (c.eat('^')) return read_expo(c);
  return Rat(1);
}

ParsedTerm read_term(Cursor& c, bool negative) {
  c.skip_ws();
  Rat coeff(1);
  Rat expo(0);
  if (c.peek() == 'e') {
    expo = read_epspart(c);
  } else {
    coeff = read_fraction(c);
    c.skip_ws();
    if (c.eat('*')) {
      c.skip_ws();
      if (c.peek() != 'e') c.fail_here("expected 'e'");
      expo = read_epspart(c);
    }
  }
  if (negative) coeff = -coeff;
  return ParsedTerm{expo, coeff};
}

template <class C>
Series<C> to_series(const std::vector<ParsedTerm>& parsed) {
  std::vector<typename Series<C>::Term> terms;
  terms.reserve(parsed.size());
  for (const ParsedTerm& t : parsed) {
    terms.push_back({t.exponent, coeff_ops<C>::from_rat(t.coeff)});
  }
  return Series<C>::from_terms(std::move(terms));
}

Rat to_scalar(const std::vector<ParsedTerm>& parsed) {
  Rat sum(0);
  for (const ParsedTerm& t : parsed) {
    if (!t.exponent.is_zero()) {
      fail(errc::backend_mismatch, "eps term not representable in a scalar backend");
    }
    sum += t.coeff;
  }
  return sum;
}

std::string format_expo(const Rat& q) {
  if (q.is_integer() && q.sign() >= 0) return q.str();
  return "(" + q.str() + ")";
}

// Shortest fraction whose double value is bit-identical to v; exact dyadic
// expansion as the fallback.
std::string float_fraction_str(double v) {
  for (unsigned long cap : {1ul, 10ul, 1000ul, 1000000ul, 1000000000ul}) {
    auto r = Rat::reconstruct(v, cap, 0.0);
    if (r && r->to_double() == v) return r->str();
  }
  return Rat::from_double_exact(v).str();
}

template <class C, class MagFn, class NegFn>
std::string format_series_impl(const Series<C>& x, MagFn magnitude, NegFn is_negative) {
  if (x.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    bool neg = is_negative(t.coeff);
    std::string m = magnitude(t.coeff);
    std::string piece;
    if (t.exponent.is_zero()) {
      piece = m;
    } else if (m == "1") {
      piece = "e^" + format_expo(t.exponent);
    } else {
      piece = m + "*e^" + format_expo(t.exponent);
    }
    if (first) {
      out = (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace

std::vector<ParsedTerm> parse_weight_expr(const std::string& text) {
  Cursor c(text);
  c.skip_ws();
  std::vector<ParsedTerm> terms;
  bool neg = c.eat('-');
  terms.push_back(read_term(c, neg));
  c.skip_ws();
  while (!c.done()) {
    char op = c.peek();
    if (op != '+' && op != '-') c.fail_here("expected '+' or '-'");
    c.eat(op);
    terms.push_back(read_term(c, op == '-'));
    c.skip_ws();
  }
  return terms;
}

template <>
Rat parse_element<Rat>(const std::string& text) {
  return to_scalar(parse_weight_expr(text));
}

template <>
FloatReal parse_element<FloatReal>(const std::string& text) {
  return FloatReal::from_rat(to_scalar(parse_weight_expr(text)));
}

template <>
SeriesRat parse_element<SeriesRat>(const std::string& text) {
  return to_series<Rat>(parse_weight_expr(text));
}

template <>
SeriesFloat parse_element<SeriesFloat>(const std::string& text) {
  return to_series<FloatReal>(parse_weight_expr(text));
}

std::string format_element(const Rat& x) { return x.str(); }

std::string format_element(const FloatReal& x) { return float_fraction_str(x.value()); }

std::string format_element(const SeriesRat& x) {
  return format_series_impl(
      x, [](const Rat& c) { return c.abs().str(); },
      [](const Rat& c) { return c.sign() < 0; });
}

std::string format_element(const SeriesFloat& x) {
  // structural sign: even sub-tolerance coefficients keep their stored sign
  return format_series_impl(
      x, [](const FloatReal& c) { return float_fraction_str(std::fabs(c.value())); },
      [](const FloatReal& c) { return c.value() < 0; });
}

}  // namespace ofc
