#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jacobi.hpp"
#include "ratfunc.hpp"

namespace ofc {

const char* eig_status_name(eig_status s) {
  switch (s) {
    case eig_status::exact: return "exact";
    case eig_status::lifted: return "lifted-to-truncation";
    case eig_status::float_approx: return "float-approximate";
    case eig_status::not_representable: return "not-representable";
  }
  return "unknown";
}

namespace {

SeriesRat to_exact_series(const Rat& v) { return SeriesRat::from_rat(v); }

SeriesRat to_exact_series(const SeriesRat& v) {
  if (!v.is_exact()) fail(errc::internal, "pencil built from a truncated weight");
  return v;
}

template <class K>
CharPencil build_pencil(const OFGraph<K>& g) {
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex '" + g.label(*iso) + "' has no edges");
  }
  if (g.size() > exact_spectrum_max_vertices) {
    fail(errc::size_cap_exceeded, "exact spectrum capped at " +
                                      std::to_string(exact_spectrum_max_vertices) +
                                      " vertices; use the float backend");
  }
  const int n = g.size();
  std::vector<SeriesRat> deg(n);
  std::vector<Rat> ord(n);
  for (int x = 0; x < n; ++x) {
    deg[x] = to_exact_series(g.degree(x));
    ord[x] = *deg[x].lead_exponent();
  }
  // Symmetric monomial scaling: row and column x by eps^(-ord[x]/2). Edge
  // orders dominate max(ord[x], ord[y]), so no exponent goes negative, and the
  // leading lambda^n coefficient keeps a positive standard part.
  Matrix<Poly<SeriesRat>> p(n, std::vector<Poly<SeriesRat>>(n));
  for (int x = 0; x < n; ++x) {
    SeriesRat d = deg[x] * SeriesRat::eps_pow(-ord[x]);
    p[x][x] = Poly<SeriesRat>(std::vector<SeriesRat>{-d, d});
    for (int y : g.neighbor_list(x)) {
      SeriesRat shift = SeriesRat::eps_pow(-(ord[x] + ord[y]) * Rat(1, 2));
      p[x][y] = Poly<SeriesRat>(
          std::vector<SeriesRat>{to_exact_series(g.weight(x, y)) * shift});
    }
  }
  CharPencil pc;
  pc.n = n;
  pc.poly = poly_matrix_det(p);
  mpz_class lat(1);
  std::optional<Rat> finest;
  for (const SeriesRat& c : pc.poly.coeffs()) {
    for (const auto& t : c.terms()) {
      mpz_lcm(lat.get_mpz_t(), lat.get_mpz_t(), t.exponent.den().get_mpz_t());
      if (t.exponent.sign() > 0 && (!finest || t.exponent < *finest)) {
        finest = t.exponent;
      }
    }
  }
  if (!lat.fits_ulong_p()) fail(errc::internal, "exponent lattice overflow");
  pc.lattice = lat.get_ui();
  pc.finest_gap = finest.value_or(Rat(1));
  return pc;
}

// Multiplicity of the rational root r in p, by repeated exact division.
int rational_root_multiplicity(Poly<Rat>& p, const Rat& r) {
  Poly<Rat> lin(std::vector<Rat>{-r, Rat(1)});
  int mult = 0;
  while (p.degree() >= 1) {
    auto [q, rem] = poly_divmod(p, lin);
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++mult;
  }
  return mult;
}

double poly_eval_double(const Poly<Rat>& p, double x) {
  double acc = 0.0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p[i].to_double();
  return acc;
}

double poly_scale_double(const Poly<Rat>& p, double x) {
  double acc = 0.0;
  double ax = std::max(1.0, std::fabs(x));
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * ax + std::fabs(p[i].to_double());
  }
  return std::max(acc, 1.0);
}

long iteration_cap(const Budget& bud, const Rat& gap) {
  Rat steps = bud.window.div(gap);
  mpz_class q = steps.num() / steps.den() + 1;
  if (!q.fits_slong_p()) return 1u << 20;
  return 2 * q.get_si() + 8;
}

// Newton refinement of a simple root starting from its standard part.
SeriesRat newton_lift(const RPoly& f, unsigned long m, const Rat& r0,
                      const Budget& bud, const Rat& gap) {
  Poly<SeriesRat> h;
  {
    std::vector<SeriesRat> hc;
    hc.reserve(f.coeffs().size());
    for (const RatFunc& c : f.coeffs()) {
      SeriesRat ns = qpoly_to_series(c.num(), m);
      if (c.den().degree() == 0 && c.den().lead().is_one()) {
        hc.push_back(std::move(ns));
      } else {
        hc.push_back(ns.div(qpoly_to_series(c.den(), m), bud));
      }
    }
    h = Poly<SeriesRat>(std::move(hc));
  }
  Poly<SeriesRat> hp = h.derivative();
  SeriesRat lam = SeriesRat::from_rat(r0);
  const long cap = iteration_cap(bud, gap);
  for (long it = 0; it < cap; ++it) {
    SeriesRat e = h.eval(lam);
    if (e.structurally_zero() && e.is_exact()) return lam;
    SeriesRat slope = hp.eval(lam);
    SeriesRat next;
    try {
      next = lam - e.div(slope, bud);
    } catch (const error& ex) {
      if (ex.code() == errc::division_by_zero) {
        fail(errc::no_convergence,
             "root refinement stalled on a vanishing derivative");
      }
      throw;
    }
    auto c = next.compare(lam);
    if (c == cmp::equal || c == cmp::indistinguishable) return next;
    lam = std::move(next);
  }
  fail(errc::no_convergence, "root refinement exceeded its iteration cap");
}

std::vector<double> distinct_sorted(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  }
  return out;
}

std::vector<EigenEntry<SeriesRat>> exact_entries(const CharPencil& pc,
                                                 const std::vector<double>& pool,
                                                 const Budget& bud) {
  std::vector<RatFunc> qc;
  qc.reserve(pc.poly.coeffs().size());
  for (const SeriesRat& c : pc.poly.coeffs()) {
    qc.push_back(RatFunc(qpoly_from_series(c, pc.lattice)));
  }
  RPoly q(std::move(qc));
  auto factors = poly_squarefree(q);
  int covered = 0;
  for (const auto& [f, i] : factors) covered += i * f.degree();
  if (covered != pc.n) fail(errc::internal, "square-free degrees do not sum up");

  std::vector<double> candidates = distinct_sorted(pool, 1e-9);
  std::vector<EigenEntry<SeriesRat>> entries;

  for (const auto& [f, i] : factors) {
    Poly<Rat> fstd = rpoly_standard_part(f);
    RPoly fw = f;
    int claimed_degree = 0;
    std::vector<Rat> claimed;
    for (double u : candidates) {
      auto r = Rat::reconstruct(u, 1000000uL, 1e-9);
      if (!r) continue;
      bool seen = false;
      for (const Rat& c : claimed) {
        if (c == *r) {
          seen = true;
          break;
        }
      }
      if (seen || !fstd.eval(*r).is_zero()) continue;
      Poly<Rat> reduced = fstd;
      int mu = rational_root_multiplicity(reduced, *r);
      claimed.push_back(*r);
      claimed_degree += mu;

      // A square-free factor carries the constant series r at most once; peel
      // it off exactly so roots that merely share its standard part cannot
      // mask it.
      if (fw.eval(RatFunc::from_rat(*r)).is_zero()) {
        EigenEntry<SeriesRat> e;
        e.approx = r->to_double();
        e.std_exact = *r;
        e.multiplicity = i;
        e.status = eig_status::exact;
        e.value = SeriesRat::from_rat(*r);
        entries.push_back(std::move(e));
        fw = poly_div_exact(
            fw, RPoly(std::vector<RatFunc>{RatFunc::from_rat(-*r),
                                           RatFunc::from_rat(Rat(1))}));
        --mu;
      }
      if (mu == 0) continue;

      EigenEntry<SeriesRat> e;
      e.approx = r->to_double();
      e.std_exact = *r;
      if (mu > 1) {
        // Distinct series roots sharing one standard part cannot be told
        // apart by refinement from that point.
        e.multiplicity = mu * i;
        e.status = eig_status::not_representable;
      } else {
        SeriesRat lifted = newton_lift(fw, pc.lattice, *r, bud, pc.finest_gap);
        SeriesRat stripped = SeriesRat::from_terms(
            std::vector<SeriesRat::Term>(lifted.terms()), std::nullopt);
        SeriesRat probe = pc.poly.eval(stripped);
        e.multiplicity = i;
        if (probe.structurally_zero() && probe.is_exact()) {
          e.status = eig_status::exact;
          e.value = std::move(stripped);
        } else {
          e.status = eig_status::lifted;
          e.value = std::move(lifted);
        }
      }
      entries.push_back(std::move(e));
    }

    int residual = f.degree() - claimed_degree;
    if (residual > 0) {
      // Standard parts that are irrational (or shared in a way the exact
      // claims above did not cover): attach the float approximations.
      std::vector<double> leftover;
      for (double u : candidates) {
        bool taken = false;
        for (const Rat& c : claimed) {
          if (std::fabs(u - c.to_double()) <= 1e-9) {
            taken = true;
            break;
          }
        }
        if (taken) continue;
        double scale = poly_scale_double(fstd, u);
        if (std::fabs(poly_eval_double(fstd, u)) <= 1e-6 * scale) {
          leftover.push_back(u);
        }
      }
      leftover = distinct_sorted(leftover, 1e-7);
      if (static_cast<int>(leftover.size()) == residual) {
        for (double u : leftover) {
          EigenEntry<SeriesRat> e;
          e.approx = u;
          e.multiplicity = i;
          e.status = eig_status::not_representable;
          entries.push_back(std::move(e));
        }
      } else {
        EigenEntry<SeriesRat> e;
        e.approx = leftover.empty() ? 0.0 : leftover.front();
        e.multiplicity = residual * i;
        e.status = eig_status::not_representable;
        entries.push_back(std::move(e));
      }
    }
  }

  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  if (total != pc.n) fail(errc::internal, "eigenvalue multiplicities do not sum up");

  std::sort(entries.begin(), entries.end(),
            [](const EigenEntry<SeriesRat>& a, const EigenEntry<SeriesRat>& b) {
              if (a.approx != b.approx) return a.approx < b.approx;
              if (a.value && b.value) return (*a.value).compare(*b.value) == cmp::less;
              return false;
            });
  return entries;
}

}  // namespace

bool pencil_exact_root_fraction(const Poly<SeriesRat>& q, const SeriesRat& num,
                                const SeriesRat& den) {
  if (!num.is_exact() || !den.is_exact()) {
    fail(errc::invalid_argument, "exact root test needs exact numerator and denominator");
  }
  if (den.sign() == 0) fail(errc::division_by_zero, "zero denominator in root test");
  const int d = q.degree();
  if (d < 0) return true;
  SeriesRat acc = SeriesRat::zero();
  for (int k = 0; k <= d; ++k) {
    acc += q[k] * SeriesRat::pow(num, k) * SeriesRat::pow(den, d - k);
  }
  return acc.structurally_zero() && acc.is_exact();
}

CharPencil char_pencil(const OFGraph<SeriesRat>& g) { return build_pencil(g); }
CharPencil char_pencil(const OFGraph<Rat>& g) { return build_pencil(g); }

Spectrum<SeriesRat> eigenvalues(const OFGraph<SeriesRat>& g, const Budget& bud) {
  CharPencil pc = char_pencil(g);
  std::vector<double> pool = jacobi_eigenvalues(standard_symmetric_matrix(g));
  Spectrum<SeriesRat> s;
  s.entries = exact_entries(pc, pool, bud);
  return s;
}

Spectrum<Rat> eigenvalues(const OFGraph<Rat>& g, const Budget& bud) {
  CharPencil pc = char_pencil(g);
  std::vector<double> pool = jacobi_eigenvalues(standard_symmetric_matrix(g));
  Spectrum<Rat> s;
  for (EigenEntry<SeriesRat>& e : exact_entries(pc, pool, bud)) {
    EigenEntry<Rat> out;
    out.approx = e.approx;
    out.std_exact = e.std_exact;
    out.multiplicity = e.multiplicity;
    out.status = e.status;
    if (e.value) {
      // Constant-weight input: every representable root is a plain rational.
      if (e.value->structurally_zero()) {
        out.value = Rat(0);
      } else if (e.value->terms().size() == 1 &&
                 e.value->terms()[0].exponent.is_zero()) {
        out.value = e.value->terms()[0].coeff;
      } else {
        fail(errc::internal, "series eigenvalue escaped a rational pencil");
      }
    }
    s.entries.push_back(std::move(out));
  }
  return s;
}

Spectrum<FloatReal> eigenvalues(const OFGraph<FloatReal>& g, const Budget&) {
  std::vector<double> pool = jacobi_eigenvalues(standard_symmetric_matrix(g));
  Spectrum<FloatReal> s;
  for (double v : pool) {
    EigenEntry<FloatReal> e;
    e.value = FloatReal(v);
    e.approx = v;
    e.status = eig_status::float_approx;
    s.entries.push_back(std::move(e));
  }
  return s;
}

// Truncated float coefficients make polynomial gcds unreliable, so this
// backend reports clustered standard parts instead of refined series roots.
Spectrum<SeriesFloat> eigenvalues(const OFGraph<SeriesFloat>& g, const Budget&) {
  std::vector<double> pool = jacobi_eigenvalues(standard_symmetric_matrix(g));
  // Only the standard parts are computed; when the weights carry
  // infinitesimals the entries are truncated at the finest positive exponent
  // so comparisons cannot claim exactness beyond what was derived.
  std::optional<Rat> finest;
  std::vector<Rat> exps;
  for (const auto& e : g.edges()) Field<SeriesFloat>::collect_exponents(e.w, exps);
  for (const Rat& q : exps) {
    if (q.sign() > 0 && (!finest || q.compare(*finest) == cmp::less)) finest = q;
  }
  Spectrum<SeriesFloat> s;
  std::size_t i = 0;
  while (i < pool.size()) {
    std::size_t j = i + 1;
    double sum = pool[i];
    while (j < pool.size() && pool[j] - pool[j - 1] <= 1e-7) {
      sum += pool[j];
      ++j;
    }
    EigenEntry<SeriesFloat> e;
    e.approx = sum / static_cast<double>(j - i);
    SeriesFloat v = SeriesFloat::constant(FloatReal(e.approx));
    e.value = finest ? v.truncated_to(*finest) : v;
    e.multiplicity = static_cast<int>(j - i);
    e.status = eig_status::float_approx;
    s.entries.push_back(std::move(e));
    i = j;
  }
  return s;
}

}  // namespace ofc
