#include "ratfunc.hpp"

#include "error.hpp"

namespace ofc {

QPoly qpoly_one() { return QPoly::constant(Rat(1)); }

QPoly qpoly_monomial(const Rat& coeff, std::size_t power) {
  std::vector<Rat> c(power + 1, Rat(0));
  c[power] = coeff;
  return QPoly(std::move(c));
}

std::size_t qpoly_valuation(const QPoly& p) {
  if (p.is_zero()) fail(errc::internal, "valuation of zero polynomial");
  std::size_t v = 0;
  while (p[v].is_zero()) ++v;
  return v;
}

QPoly qpoly_shift_down(const QPoly& p, std::size_t k) {
  if (k == 0) return p;
  std::vector<Rat> c;
  for (std::size_t i = k; i < p.coeffs().size(); ++i) c.push_back(p[i]);
  return QPoly(std::move(c));
}

QPoly qpoly_from_series(const SeriesRat& s, unsigned long m) {
  if (!s.is_exact()) fail(errc::internal, "lattice mapping needs an exact series");
  std::vector<Rat> c;
  for (const auto& t : s.terms()) {
    Rat scaled = t.exponent * Rat(static_cast<long>(m));
    auto idx = scaled.to_long();
    if (!idx || *idx < 0) fail(errc::internal, "series exponent off the lattice");
    if (c.size() <= static_cast<std::size_t>(*idx)) c.resize(*idx + 1, Rat(0));
    c[*idx] = t.coeff;
  }
  return QPoly(std::move(c));
}

SeriesRat qpoly_to_series(const QPoly& p, unsigned long m) {
  std::vector<SeriesRat::Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p[i].is_zero()) continue;
    terms.push_back({Rat(static_cast<long>(i), static_cast<long>(m)), p[i]});
  }
  return SeriesRat::from_terms(std::move(terms), std::nullopt);
}

double qpoly_eval_double(const QPoly& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * x + p[i].to_double();
  }
  return acc;
}

namespace {

using ZVec = std::vector<mpz_class>;

void z_strip(ZVec& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  if (z.empty()) return;
  mpz_class g(0);
  for (const auto& v : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& v : z) v /= g;
}

ZVec z_primitive(const QPoly& p) {
  mpz_class lcm(1);
  for (const Rat& c : p.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  ZVec z;
  z.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    z.push_back(c.num() * mpz_class(lcm / c.den()));
  }
  z_strip(z);
  return z;
}

// Pseudo-remainder over the integers, content-stripped every round so the
// remainder sequence stays primitive.
ZVec z_prem(ZVec r, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  while (r.size() > db) {
    mpz_class lr = r.back();
    const mpz_class& lb = b.back();
    std::size_t shift = r.size() - b.size();
    for (auto& v : r) v *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
    r.pop_back();
    z_strip(r);
    if (r.empty()) break;
  }
  return r;
}

using QXPoly = std::vector<QPoly>;  // polynomial with Q[eta] coefficients

void qx_trim(QXPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void qx_primitive(QXPoly& p) {
  qx_trim(p);
  if (p.empty()) return;
  QPoly ct;
  for (const QPoly& c : p) {
    ct = poly_gcd(ct, c);
    if (ct.degree() == 0) return;
  }
  for (QPoly& c : p) {
    if (!c.is_zero()) c = poly_div_exact(c, ct);
  }
}

// lead(b)^(deg r - deg b + 1) * r mod b, with every division deferred
QXPoly qx_prem(QXPoly r, const QXPoly& b) {
  const std::size_t db = b.size() - 1;
  int scale = static_cast<int>(r.size() - b.size()) + 1;
  const QPoly& lb = b.back();
  while (r.size() > db) {
    if (r.back().is_zero()) {
      r.pop_back();
      continue;
    }
    QPoly lr = r.back();
    std::size_t shift = r.size() - b.size();
    for (auto& c : r) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[i + shift] = r[i + shift] - lr * b[i];
    }
    r.pop_back();
    qx_trim(r);
    --scale;
    if (r.empty()) break;
  }
  for (; scale > 0; --scale) {
    for (auto& c : r) c = c * lb;
  }
  return r;
}

QPoly qpoly_pow(const QPoly& b, int e) {
  QPoly out = qpoly_one();
  for (int i = 0; i < e; ++i) out = out * b;
  return out;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return poly_monic(b);
  if (b.is_zero()) return poly_monic(a);
  ZVec za = z_primitive(a);
  ZVec zb = z_primitive(b);
  if (za.size() < zb.size()) za.swap(zb);
  while (!zb.empty()) {
    ZVec zr = z_prem(za, zb);
    za.swap(zb);
    zb.swap(zr);
  }
  std::vector<Rat> c;
  c.reserve(za.size());
  for (const auto& v : za) c.push_back(Rat(v));
  return poly_monic(QPoly(std::move(c)));
}

// Subresultant remainder sequence: pseudo-remainders shrink by the predicted
// exact divisor g*h^d, so no content gcds run inside the loop.
RPoly poly_gcd(const RPoly& a, const RPoly& b) {
  if (a.is_zero()) return poly_monic(b);
  if (b.is_zero()) return poly_monic(a);
  QXPoly qa = rpoly_integral_form(a);
  QXPoly qb = rpoly_integral_form(b);
  qx_primitive(qa);
  qx_primitive(qb);
  if (qa.size() < qb.size()) qa.swap(qb);
  // Specializing eta at a point where neither lead vanishes bounds the gcd
  // degree from above, so a coprime specialization settles the common case
  // without running the remainder sequence.
  for (int k = 0; k < 4; ++k) {
    Rat eta0(2 + k, 7 + 2 * k);
    if (qa.back().eval(eta0).is_zero() || qb.back().eval(eta0).is_zero()) continue;
    std::vector<Rat> ea, eb;
    ea.reserve(qa.size());
    eb.reserve(qb.size());
    for (const QPoly& c : qa) ea.push_back(c.eval(eta0));
    for (const QPoly& c : qb) eb.push_back(c.eval(eta0));
    QPoly spec = poly_gcd(QPoly(std::move(ea)), QPoly(std::move(eb)));
    if (spec.degree() == 0) {
      return RPoly(std::vector<RatFunc>{RatFunc::from_rat(Rat(1))});
    }
    break;
  }
  QPoly g = qpoly_one();
  QPoly h = qpoly_one();
  while (true) {
    if (qb.size() == 1) return RPoly(std::vector<RatFunc>{RatFunc::from_rat(Rat(1))});
    int delta = static_cast<int>(qa.size() - qb.size());
    QXPoly qr = qx_prem(qa, qb);
    if (qr.empty()) break;
    QPoly div = g * qpoly_pow(h, delta);
    for (QPoly& c : qr) {
      if (!c.is_zero()) c = poly_div_exact(c, div);
    }
    qa.swap(qb);
    qb.swap(qr);
    g = qa.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = poly_div_exact(qpoly_pow(g, delta), qpoly_pow(h, delta - 1));
    }
  }
  qx_primitive(qb);
  std::vector<RatFunc> c;
  c.reserve(qb.size());
  for (QPoly& q : qb) c.push_back(RatFunc(std::move(q)));
  return poly_monic(RPoly(std::move(c)));
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = qpoly_one();
    return;
  }
  QPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
  Rat lead_inv = den_.lead().inverse();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

std::vector<QPoly> rpoly_integral_form(const RPoly& f) {
  if (f.is_zero()) fail(errc::internal, "integral form of zero polynomial");
  QPoly common = qpoly_one();
  for (const RatFunc& c : f.coeffs()) {
    if (c.is_zero()) continue;
    QPoly g = poly_gcd(common, c.den());
    common = common * poly_div_exact(c.den(), g);
  }
  std::vector<QPoly> out;
  out.reserve(f.coeffs().size());
  std::size_t val = static_cast<std::size_t>(-1);
  for (const RatFunc& c : f.coeffs()) {
    if (c.is_zero()) {
      out.push_back(QPoly());
      continue;
    }
    QPoly q = c.num() * poly_div_exact(common, c.den());
    val = std::min(val, qpoly_valuation(q));
    out.push_back(std::move(q));
  }
  if (val == static_cast<std::size_t>(-1)) fail(errc::internal, "integral form of zero polynomial");
  if (val > 0) {
    for (QPoly& q : out) {
      if (!q.is_zero()) q = qpoly_shift_down(q, val);
    }
  }
  return out;
}

QPoly rpoly_standard_part(const RPoly& f) {
  std::vector<QPoly> integral = rpoly_integral_form(f);
  std::vector<Rat> c;
  c.reserve(integral.size());
  for (const QPoly& q : integral) {
    c.push_back(q.is_zero() ? Rat(0) : q[0]);
  }
  return QPoly(std::move(c));
}

}  // namespace ofc
