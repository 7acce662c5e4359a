#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "eigen.hpp"
#include "error.hpp"
#include "field.hpp"
#include "graph.hpp"
#include "spectral.hpp"

namespace ofc {

enum class verdict { holds, fails, indistinguishable };

const char* verdict_name(verdict v);

// Exhaustive search over 3^N vertex labelings; past this the exact maximum is
// not worth the wait. Overridable per call (the CLI exposes a flag).
inline constexpr int dual_cheeger_max_vertices = 14;

// Parity lower bound for the dual Cheeger constant of an N-vertex graph with
// at least one edge: N/(2(N-1)) for even N, (N+1)/(2N) for odd N.
Rat theorem1_bound(int n);

inline verdict verdict_from_le(cmp c) {
  if (c == cmp::indistinguishable) return verdict::indistinguishable;
  return c == cmp::greater ? verdict::fails : verdict::holds;
}

inline verdict verdict_from_lt(cmp c) {
  if (c == cmp::indistinguishable) return verdict::indistinguishable;
  return c == cmp::less ? verdict::holds : verdict::fails;
}

inline verdict verdict_iff_equal(cmp c, bool should_equal) {
  if (c == cmp::indistinguishable) return verdict::indistinguishable;
  return (c == cmp::equal) == should_equal ? verdict::holds : verdict::fails;
}

inline verdict verdict_and(verdict a, verdict b) {
  if (a == verdict::fails || b == verdict::fails) return verdict::fails;
  if (a == verdict::indistinguishable || b == verdict::indistinguishable) {
    return verdict::indistinguishable;
  }
  return verdict::holds;
}

inline verdict verdict_or(verdict a, verdict b) {
  if (a == verdict::holds || b == verdict::holds) return verdict::holds;
  if (a == verdict::indistinguishable || b == verdict::indistinguishable) {
    return verdict::indistinguishable;
  }
  return verdict::fails;
}

template <class K>
struct InequalityCheck {
  std::string name;
  verdict v = verdict::holds;
  std::optional<K> lhs, rhs;  // sides when representable in the weight field
  double lhs_approx = 0.0;
  double rhs_approx = 0.0;
  std::string note;
};

template <class K>
struct CheegerCertificate {
  K hbar;      // 2*cut/(b(V1)+b(V2)), divided out at the budget
  K hbar_num;  // 2*cut_weight(V1,V2), exact
  K hbar_den;  // set_weight(V1)+set_weight(V2), exact and positive
  std::uint64_t part1 = 0;
  std::uint64_t part2 = 0;
  Spectrum<K> spectrum;                    // filled by certify
  std::vector<InequalityCheck<K>> checks;  // filled by certify
  std::vector<std::string> notes;
  bool retried = false;
};

template <class K>
struct LemmaCheckResult {
  K h;
  K w;
  std::optional<K> lower, upper;  // 1 -+ sqrt(1-h^2) when representable
  double lower_approx = 0.0;
  double upper_approx = 0.0;
  verdict v = verdict::holds;
};

namespace detail {

template <class K>
class CheegerSearch {
 public:
  explicit CheegerSearch(const OFGraph<K>& g)
      : n_(g.size()), best_num_(Field<K>::zero()), best_den_(Field<K>::one()) {
    label_.assign(n_, 0);
    deg_.reserve(n_);
    for (int x = 0; x < n_; ++x) deg_.push_back(g.degree(x));
    back_.resize(n_);
    for (const auto& e : g.edges()) {
      int a = e.u < e.v ? e.u : e.v;
      int b = e.u < e.v ? e.v : e.u;
      back_[b].push_back({a, e.w});
    }
  }

  void run() {
    K z = Field<K>::zero();
    walk(0, z, z, z);
  }

  const K& num() const { return best_num_; }
  const K& den() const { return best_den_; }
  std::uint64_t part1() const { return m1_best_; }
  std::uint64_t part2() const { return m2_best_; }

 private:
  void walk(int depth, const K& cut, const K& d1, const K& d2) {
    if (depth == n_) {
      if (m1_ == 0 || m2_ == 0) return;
      offer(cut + cut, d1 + d2);
      return;
    }
    const std::uint64_t bit = 1ull << depth;
    label_[depth] = 0;
    walk(depth + 1, cut, d1, d2);

    K across1 = cut;
    for (const auto& [y, w] : back_[depth]) {
      if (label_[y] == 2) across1 += w;
    }
    K d1n = d1 + deg_[depth];
    label_[depth] = 1;
    m1_ |= bit;
    walk(depth + 1, across1, d1n, d2);
    m1_ &= ~bit;

    K across2 = cut;
    for (const auto& [y, w] : back_[depth]) {
      if (label_[y] == 1) across2 += w;
    }
    K d2n = d2 + deg_[depth];
    label_[depth] = 2;
    m2_ |= bit;
    walk(depth + 1, across2, d1, d2n);
    m2_ &= ~bit;
  }

  void offer(K num, K den) {
    if (!have_) {
      best_num_ = std::move(num);
      best_den_ = std::move(den);
      m1_best_ = m1_;
      m2_best_ = m2_;
      have_ = true;
      return;
    }
    auto c = Field<K>::compare(num * best_den_, best_num_ * den);
    bool better = c == cmp::greater;
    if (!better && c != cmp::less) {
      // value tie: deterministic witness, smallest bitmask pair
      better = m1_ < m1_best_ || (m1_ == m1_best_ && m2_ < m2_best_);
    }
    if (better) {
      best_num_ = std::move(num);
      best_den_ = std::move(den);
      m1_best_ = m1_;
      m2_best_ = m2_;
    }
  }

  int n_;
  std::vector<std::vector<std::pair<int, K>>> back_;  // edges to smaller index
  std::vector<K> deg_;
  std::vector<int> label_;  // 0 out, 1 first part, 2 second part
  std::uint64_t m1_ = 0, m2_ = 0;
  std::uint64_t m1_best_ = 0, m2_best_ = 0;
  K best_num_, best_den_;
  bool have_ = false;
};

}  // namespace detail

template <class K>
CheegerCertificate<K> dual_cheeger(const OFGraph<K>& g,
                                   int max_n = dual_cheeger_max_vertices) {
  if (g.edges().empty()) {
    fail(errc::edgeless_graph, "dual Cheeger constant needs at least one edge");
  }
  if (g.size() > max_n) {
    fail(errc::size_cap_exceeded, "exhaustive search capped at " +
                                      std::to_string(max_n) + " vertices, graph has " +
                                      std::to_string(g.size()));
  }
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex " + g.label(*iso) + " has no incident edge");
  }
  detail::CheegerSearch<K> search(g);
  search.run();
  CheegerCertificate<K> cert{Field<K>::zero(), search.num(), search.den()};
  cert.part1 = search.part1();
  cert.part2 = search.part2();
  cert.hbar = Field<K>::div(cert.hbar_num, cert.hbar_den, g.budget());
  return cert;
}

namespace detail {

// Minimizing fraction behind h(f), kept undivided so callers can build exact
// division-free inequalities from it.
template <class K>
std::pair<K, K> h_of_f_fraction(const OFGraph<K>& g, const std::vector<K>& f) {
  const int n = g.size();
  if (static_cast<int>(f.size()) != n) {
    fail(errc::dimension_mismatch, "f must assign a value to every vertex");
  }
  if (g.edges().empty()) fail(errc::edgeless_graph, "h(f) needs at least one edge");
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex " + g.label(*iso) + " has no incident edge");
  }
  std::uint64_t pos = 0;
  for (int x = 0; x < n; ++x) {
    if (Field<K>::sign(f[x]) > 0) pos |= 1ull << x;
  }
  if (pos == 0) fail(errc::zero_vector, "f is positive on no vertex");
  const std::uint64_t full = n >= 64 ? ~0ull : (1ull << n) - 1;
  if (pos == full) fail(errc::invalid_argument, "f is positive on every vertex");
  std::optional<std::pair<K, K>> best;
  for (std::uint64_t s = pos; s != 0; s = (s - 1) & pos) {
    K num = g.cut_weight(s, full & ~s);
    K den = g.set_weight(s);
    if (!best) {
      best = {std::move(num), std::move(den)};
    } else {
      auto c = Field<K>::compare(num * best->second, best->first * den);
      if (c == cmp::less) best = {std::move(num), std::move(den)};
    }
  }
  return std::move(*best);
}

}  // namespace detail

template <class K>
K h_of_f(const OFGraph<K>& g, const std::vector<K>& f) {
  auto frac = detail::h_of_f_fraction(g, f);
  return Field<K>::div(frac.first, frac.second, g.budget());
}

template <class K>
LemmaCheckResult<K> lemma_w_check(const OFGraph<K>& g, const std::vector<K>& f) {
  const Budget bud = g.budget();
  LemmaCheckResult<K> out{Field<K>::zero(), Field<K>::zero()};
  auto [hn, hd] = detail::h_of_f_fraction(g, f);
  out.h = Field<K>::div(hn, hd, bud);
  std::vector<K> fp;
  fp.reserve(f.size());
  for (const K& v : f) fp.push_back(Field<K>::sign(v) > 0 ? v : Field<K>::zero());
  K qnum = green_form(g, fp, fp);
  K qden = inner_product(g, fp, fp);
  if (Field<K>::sign(qden) <= 0) fail(errc::zero_vector, "positive part of f has zero norm");
  out.w = Field<K>::div(qnum, qden, bud);

  const K one = Field<K>::one();
  double hdd = Field<K>::std_double(out.h);
  double sd = std::sqrt(std::max(0.0, 1.0 - hdd * hdd));
  out.lower_approx = 1.0 - sd;
  out.upper_approx = 1.0 + sd;
  try {
    K s = Field<K>::sqrt(one - out.h * out.h, bud);
    out.lower = one - s;
    out.upper = one + s;
  } catch (const error& e) {
    if (e.code() != errc::not_representable && e.code() != errc::sqrt_of_negative) throw;
  }
  // Both bounds at once, square-root-free: |W-1| <= sqrt(1-h^2) iff
  // (W-1)^2 + h^2 <= 1. Cleared to the positive denominator (qden*hd)^2 so
  // exact ties stay decidable instead of drowning in a divided-out tail.
  K a = qnum - qden;
  K lhs = a * a * (hd * hd) + (hn * hn) * (qden * qden);
  out.v = verdict_from_le(Field<K>::compare(lhs, (qden * qden) * (hd * hd)));
  return out;
}

namespace detail {

template <class K>
CheegerCertificate<K> certify_at(const OFGraph<K>& g, const Budget& bud, int max_n) {
  CheegerCertificate<K> cert = dual_cheeger(g, max_n);
  cert.hbar = Field<K>::div(cert.hbar_num, cert.hbar_den, bud);
  cert.spectrum = eigenvalues(g, bud);

  const int n = g.size();
  const bool connected = g.is_connected();
  const bool bip = g.is_bipartite();
  const K one = Field<K>::one();
  const K two = one + one;
  const K& num = cert.hbar_num;
  const K& den = cert.hbar_den;
  const auto& top = cert.spectrum.largest();
  const double hd = Field<K>::std_double(cert.hbar);
  const double topd = top.approx;

  {
    InequalityCheck<K> c;
    c.name = "dual-cheeger-at-most-one";
    c.v = verdict_from_le(Field<K>::compare(num, den));
    c.lhs = cert.hbar;
    c.rhs = one;
    c.lhs_approx = hd;
    c.rhs_approx = 1.0;
    cert.checks.push_back(std::move(c));
  }
  {
    InequalityCheck<K> c;
    c.name = "dual-cheeger-above-half";
    c.v = verdict_from_lt(Field<K>::compare(den, num + num));
    c.lhs = Field<K>::from_rat(Rat(1, 2));
    c.rhs = cert.hbar;
    c.lhs_approx = 0.5;
    c.rhs_approx = hd;
    cert.checks.push_back(std::move(c));
  }
  {
    InequalityCheck<K> c;
    c.name = "dual-cheeger-meets-size-bound";
    K bound = Field<K>::from_rat(theorem1_bound(n));
    c.v = verdict_from_le(Field<K>::compare(bound * den, num));
    c.lhs = bound;
    c.rhs = cert.hbar;
    c.lhs_approx = theorem1_bound(n).to_double();
    c.rhs_approx = hd;
    cert.checks.push_back(std::move(c));
  }
  {
    InequalityCheck<K> c;
    c.name = "twice-dual-cheeger-at-most-top-eigenvalue";
    c.lhs = cert.hbar + cert.hbar;
    c.rhs = top.value;
    c.lhs_approx = 2.0 * hd;
    c.rhs_approx = topd;
    if (top.value) {
      c.v = verdict_from_le(Field<K>::compare(num + num, *top.value * den));
    } else {
      c.v = verdict_from_le(FloatReal(2.0 * hd).compare(FloatReal(topd)));
      c.note = "top eigenvalue has no exact form; compared in floating point";
    }
    if constexpr (std::is_same_v<K, SeriesRat>) {
      // A truncated top eigenvalue cannot decide the comparison when equality
      // is exact; the characteristic pencil can. If 2*hbar is an exact
      // eigenvalue the maximum is at least it, so the bound holds tightly.
      if (c.v == verdict::indistinguishable &&
          pencil_exact_root_fraction(char_pencil(g).poly, num + num, den)) {
        c.v = verdict::holds;
        c.note = "tight: twice the dual Cheeger constant is an exact eigenvalue";
      }
    }
    cert.checks.push_back(std::move(c));
  }
  {
    InequalityCheck<K> c;
    c.name = "top-eigenvalue-within-circle-bound";
    c.lhs = top.value;
    c.lhs_approx = topd;
    double od = 1.0 - hd;
    c.rhs_approx = 1.0 + std::sqrt(std::max(0.0, 1.0 - od * od));
    try {
      K om = one - cert.hbar;
      c.rhs = one + Field<K>::sqrt(one - om * om, bud);
    } catch (const error& e) {
      if (e.code() != errc::not_representable && e.code() != errc::sqrt_of_negative) throw;
      c.note = "bound value has no exact square root; shown in floating point";
    }
    if (top.value) {
      // lam <= 1 + sqrt(1-(1-hbar)^2) iff lam <= 1 or
      // (lam-1)^2 + (1-hbar)^2 <= 1, scaled by den^2 to stay division-free
      const K& lam = *top.value;
      verdict low = verdict_from_le(Field<K>::compare(lam, one));
      K q = lam * den - den;
      K rm = den - num;
      verdict circle = verdict_from_le(Field<K>::compare(q * q + rm * rm, den * den));
      c.v = verdict_or(low, circle);
    } else {
      c.v = verdict_from_le(FloatReal(topd).compare(FloatReal(c.rhs_approx)));
      if (!c.note.empty()) c.note += "; ";
      c.note += "top eigenvalue has no exact form; compared in floating point";
    }
    cert.checks.push_back(std::move(c));
  }
  if (connected) {
    InequalityCheck<K> c;
    c.name = "connected-top-eigenvalue-floor";
    Rat bound(n, n - 1);
    c.lhs = Field<K>::from_rat(bound);
    c.rhs = top.value;
    c.lhs_approx = bound.to_double();
    c.rhs_approx = topd;
    if (top.value) {
      c.v = verdict_from_le(Field<K>::compare(*c.lhs, *top.value));
    } else {
      c.v = verdict_from_le(FloatReal(c.lhs_approx).compare(FloatReal(topd)));
      c.note = "top eigenvalue has no exact form; compared in floating point";
    }
    cert.checks.push_back(std::move(c));
  } else {
    cert.notes.push_back("skipped connected-top-eigenvalue-floor: graph is disconnected");
  }
  if (connected) {
    const std::string bip_note = bip ? "graph is bipartite" : "graph is not bipartite";
    InequalityCheck<K> c;
    c.name = "dual-cheeger-one-iff-bipartite";
    c.v = verdict_iff_equal(Field<K>::compare(num, den), bip);
    c.lhs = cert.hbar;
    c.rhs = one;
    c.lhs_approx = hd;
    c.rhs_approx = 1.0;
    c.note = bip_note;
    cert.checks.push_back(std::move(c));

    InequalityCheck<K> c2;
    c2.name = "top-eigenvalue-two-iff-bipartite";
    c2.lhs = top.value;
    c2.rhs = two;
    c2.lhs_approx = topd;
    c2.rhs_approx = 2.0;
    if (top.value) {
      c2.v = verdict_iff_equal(Field<K>::compare(*top.value, two), bip);
      c2.note = bip_note;
    } else if constexpr (std::is_same_v<K, Rat> || std::is_same_v<K, SeriesRat>) {
      // The top eigenvalue itself may have no closed form, but whether 2 is
      // in the spectrum is still decidable exactly: test it as a root of the
      // characteristic pencil.
      bool root = pencil_exact_root_fraction(char_pencil(g).poly,
                                             SeriesRat::from_rat(Rat(2)),
                                             SeriesRat::one());
      c2.v = root == bip ? verdict::holds : verdict::fails;
      c2.note = bip_note + "; membership of two tested on the characteristic pencil";
    } else {
      c2.v = verdict_iff_equal(FloatReal(topd).compare(FloatReal(2.0)), bip);
      c2.note = bip_note + "; top eigenvalue compared in floating point";
    }
    cert.checks.push_back(std::move(c2));

    if (bip) {
      // With hbar = 1 both spectral inequalities collapse: 2*hbar and the
      // circle bound both equal 2, so the top eigenvalue must too.
      InequalityCheck<K> c3;
      c3.name = "bipartite-spectral-equalities";
      verdict heq = verdict_iff_equal(Field<K>::compare(num, den), true);
      verdict leq;
      if (top.value) {
        leq = verdict_iff_equal(Field<K>::compare(*top.value, two), true);
      } else if constexpr (std::is_same_v<K, Rat> || std::is_same_v<K, SeriesRat>) {
        leq = pencil_exact_root_fraction(char_pencil(g).poly, SeriesRat::from_rat(Rat(2)),
                                         SeriesRat::one())
                  ? verdict::holds
                  : verdict::fails;
        c3.note = "membership of two tested on the characteristic pencil";
      } else {
        leq = verdict_iff_equal(FloatReal(topd).compare(FloatReal(2.0)), true);
        c3.note = "top eigenvalue compared in floating point";
      }
      c3.v = verdict_and(heq, leq);
      c3.lhs = top.value;
      c3.rhs = two;
      c3.lhs_approx = topd;
      c3.rhs_approx = 2.0;
      cert.checks.push_back(std::move(c3));
    }
  } else {
    cert.notes.push_back("skipped dual-cheeger-one-iff-bipartite: graph is disconnected");
    cert.notes.push_back("skipped top-eigenvalue-two-iff-bipartite: graph is disconnected");
  }
  return cert;
}

}  // namespace detail

template <class K>
CheegerCertificate<K> certify(const OFGraph<K>& g, int max_n = dual_cheeger_max_vertices) {
  const Budget bud = g.budget();
  CheegerCertificate<K> cert = detail::certify_at(g, bud, max_n);
  bool murky = false;
  for (const auto& c : cert.checks) {
    if (c.v == verdict::indistinguishable) murky = true;
  }
  if (!murky) return cert;
  // Most indistinguishable outcomes are an artifact of a short series window.
  CheegerCertificate<K> again = detail::certify_at(g, bud.doubled(), max_n);
  again.retried = true;
  return again;
}

}  // namespace ofc
