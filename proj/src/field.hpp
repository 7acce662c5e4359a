#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "float_real.hpp"
#include "ordering.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ofc {

// Weight domains a graph can be built over.
enum class backend { rational, floating, lc_rational, lc_float };

inline const char* backend_name(backend b) {
  switch (b) {
    case backend::rational: return "rational";
    case backend::floating: return "float";
    case backend::lc_rational: return "lc-rational";
    case backend::lc_float: return "lc-float";
  }
  return "unknown";
}

inline std::optional<backend> backend_from_name(const std::string& name) {
  if (name == "rational") return backend::rational;
  if (name == "float") return backend::floating;
  if (name == "lc-rational") return backend::lc_rational;
  if (name == "lc-float") return backend::lc_float;
  return std::nullopt;
}

// Uniform static interface over the four element types. `exact` marks
// backends whose definite comparison results are decisions rather than
// tolerance judgements; `series` marks the infinitesimal-carrying ones.
template <class K>
struct Field;

template <>
struct Field<Rat> {
  using Elem = Rat;
  static constexpr backend tag = backend::rational;
  static constexpr bool exact = true;
  static constexpr bool series = false;

  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& r) { return r; }
  static cmp compare(const Rat& a, const Rat& b) { return a.compare(b); }
  static int sign(const Rat& a) { return a.sign(); }
  static bool is_zero(const Rat& a) { return a.is_zero(); }
  static Rat div(const Rat& a, const Rat& b, const Budget&) { return a.div(b); }
  static Rat inverse(const Rat& a, const Budget&) { return a.inverse(); }
  static Rat sqrt(const Rat& a, const Budget&) {
    auto s = a.sqrt_exact();
    if (!s) fail(errc::not_representable, "no exact rational square root of " + a.str());
    return *s;
  }
  static double std_double(const Rat& a) { return a.to_double(); }
  static std::optional<Rat> std_rat(const Rat& a) { return a; }
  static void collect_exponents(const Rat&, std::vector<Rat>&) {}
};

template <>
struct Field<FloatReal> {
  using Elem = FloatReal;
  static constexpr backend tag = backend::floating;
  static constexpr bool exact = false;
  static constexpr bool series = false;

  static FloatReal zero() { return FloatReal(0.0); }
  static FloatReal one() { return FloatReal(1.0); }
  static FloatReal from_rat(const Rat& r) { return FloatReal::from_rat(r); }
  static cmp compare(const FloatReal& a, const FloatReal& b) { return a.compare(b); }
  static int sign(const FloatReal& a) { return a.sign(); }
  static bool is_zero(const FloatReal& a) { return a.is_zero(); }
  static FloatReal div(const FloatReal& a, const FloatReal& b, const Budget&) { return a.div(b); }
  static FloatReal inverse(const FloatReal& a, const Budget&) { return a.inverse(); }
  static FloatReal sqrt(const FloatReal& a, const Budget&) { return a.sqrt(); }
  static double std_double(const FloatReal& a) { return a.value(); }
  static std::optional<Rat> std_rat(const FloatReal&) { return std::nullopt; }
  static void collect_exponents(const FloatReal&, std::vector<Rat>&) {}
};

template <>
struct Field<SeriesRat> {
  using Elem = SeriesRat;
  static constexpr backend tag = backend::lc_rational;
  static constexpr bool exact = true;
  static constexpr bool series = true;

  static SeriesRat zero() { return SeriesRat::zero(); }
  static SeriesRat one() { return SeriesRat::one(); }
  static SeriesRat from_rat(const Rat& r) { return SeriesRat::from_rat(r); }
  static cmp compare(const SeriesRat& a, const SeriesRat& b) { return a.compare(b); }
  static int sign(const SeriesRat& a) { return a.sign(); }
  static bool is_zero(const SeriesRat& a) { return a.sign() == 0 && a.is_exact(); }
  static SeriesRat div(const SeriesRat& a, const SeriesRat& b, const Budget& bud) {
    return a.div(b, bud);
  }
  static SeriesRat inverse(const SeriesRat& a, const Budget& bud) { return a.inverse(bud); }
  static SeriesRat sqrt(const SeriesRat& a, const Budget& bud) { return a.sqrt(bud); }
  static double std_double(const SeriesRat& a) { return a.standard_part().to_double(); }
  static std::optional<Rat> std_rat(const SeriesRat& a) { return a.standard_part(); }
  static void collect_exponents(const SeriesRat& a, std::vector<Rat>& out) {
    for (const auto& t : a.terms()) out.push_back(t.exponent);
  }
};

template <>
struct Field<SeriesFloat> {
  using Elem = SeriesFloat;
  static constexpr backend tag = backend::lc_float;
  static constexpr bool exact = false;
  static constexpr bool series = true;

  static SeriesFloat zero() { return SeriesFloat::zero(); }
  static SeriesFloat one() { return SeriesFloat::one(); }
  static SeriesFloat from_rat(const Rat& r) { return SeriesFloat::from_rat(r); }
  static cmp compare(const SeriesFloat& a, const SeriesFloat& b) { return a.compare(b); }
  static int sign(const SeriesFloat& a) { return a.sign(); }
  static bool is_zero(const SeriesFloat& a) { return a.sign() == 0 && a.is_exact(); }
  static SeriesFloat div(const SeriesFloat& a, const SeriesFloat& b, const Budget& bud) {
    return a.div(b, bud);
  }
  static SeriesFloat inverse(const SeriesFloat& a, const Budget& bud) { return a.inverse(bud); }
  static SeriesFloat sqrt(const SeriesFloat& a, const Budget& bud) { return a.sqrt(bud); }
  static double std_double(const SeriesFloat& a) { return a.standard_part().value(); }
  static std::optional<Rat> std_rat(const SeriesFloat&) { return std::nullopt; }
  static void collect_exponents(const SeriesFloat& a, std::vector<Rat>& out) {
    for (const auto& t : a.terms()) out.push_back(t.exponent);
  }
};

// Default expansion window: eight times the finest positive exponent spacing
// seen in the inputs, or eight when the inputs carry no positive exponents.
inline Budget default_budget(const std::vector<Rat>& exponents) {
  std::optional<Rat> delta;
  for (const Rat& q : exponents) {
    if (q.sign() > 0 && (!delta || q < *delta)) delta = q;
  }
  return Budget::standard(delta.value_or(Rat(1)));
}

}  // namespace ofc
