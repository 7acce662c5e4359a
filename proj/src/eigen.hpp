#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "field.hpp"
#include "graph.hpp"
#include "linalg.hpp"
#include "spectral.hpp"

namespace ofc {

enum class eig_status {
  exact,              // value satisfies the characteristic equation exactly
  lifted,             // series root refined to the truncation budget
  float_approx,       // floating-point approximation only
  not_representable,  // no value in the weight field; approximation attached
};

const char* eig_status_name(eig_status s);

template <class K>
struct EigenEntry {
  std::optional<K> value;       // absent when status is not_representable
  double approx = 0.0;          // double approximation of the standard part
  std::optional<Rat> std_exact; // exact standard part when rational
  int multiplicity = 1;
  eig_status status = eig_status::float_approx;
};

template <class K>
struct Spectrum {
  std::vector<EigenEntry<K>> entries;  // ascending by standard part

  int total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
  }

  const EigenEntry<K>& smallest() const { return entries.front(); }
  const EigenEntry<K>& largest() const { return entries.back(); }

  // Multiplicity of the eigenvalue 0: exact zero test on exact backends,
  // tolerance on floating ones.
  int zero_multiplicity() const {
    int t = 0;
    for (const auto& e : entries) {
      if constexpr (Field<K>::exact) {
        if (e.value && Field<K>::is_zero(*e.value)) t += e.multiplicity;
      } else {
        if (std::fabs(e.approx) <= 1e-7) t += e.multiplicity;
      }
    }
    return t;
  }
};

// Largest graph accepted by the exact characteristic-polynomial pipeline;
// the subset determinant walks 2^N masks.
inline constexpr int exact_spectrum_max_vertices = 16;

Spectrum<Rat> eigenvalues(const OFGraph<Rat>& g, const Budget& bud);
Spectrum<FloatReal> eigenvalues(const OFGraph<FloatReal>& g, const Budget& bud);
Spectrum<SeriesRat> eigenvalues(const OFGraph<SeriesRat>& g, const Budget& bud);
Spectrum<SeriesFloat> eigenvalues(const OFGraph<SeriesFloat>& g, const Budget& bud);

// Exact characteristic pencil det(lambda D - (D - B)) after a symmetric
// monomial scaling that keeps every exponent non-negative and makes the
// leading coefficient's standard part nonzero. Shares its roots with the
// normalized Laplacian.
struct CharPencil {
  int n = 0;
  Poly<SeriesRat> poly;
  unsigned long lattice = 1;  // exponents lie on (1/lattice)Z
  Rat finest_gap = Rat(1);    // smallest positive exponent seen, 1 if none
};

CharPencil char_pencil(const OFGraph<SeriesRat>& g);
CharPencil char_pencil(const OFGraph<Rat>& g);

// Exact membership test: q(num/den) == 0, evaluated denominator-free as
// sum_k q_k num^k den^(deg-k). Both arguments must be exact series.
bool pencil_exact_root_fraction(const Poly<SeriesRat>& q, const SeriesRat& num,
                                const SeriesRat& den);

// Symmetric standard-part matrix I - D^(-1/2) B D^(-1/2) after the same
// monomial scaling; its eigenvalues are the standard parts of the spectrum.
template <class K>
Matrix<double> standard_symmetric_matrix(const OFGraph<K>& g) {
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex '" + g.label(*iso) + "' has no edges");
  }
  const int n = g.size();
  std::vector<Rat> ord(n, Rat(0));
  std::vector<double> dbar(n, 0.0);
  for (int x = 0; x < n; ++x) {
    if constexpr (Field<K>::series) {
      K deg = g.degree(x);
      ord[x] = *deg.lead_exponent();
      dbar[x] = Field<K>::std_double(deg * K::eps_pow(-ord[x]));
    } else {
      dbar[x] = Field<K>::std_double(g.degree(x));
    }
  }
  Matrix<double> s(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x) {
    s[x][x] = 1.0;
    for (int y : g.neighbor_list(x)) {
      double w;
      if constexpr (Field<K>::series) {
        Rat shift = (ord[x] + ord[y]) * Rat(1, 2);
        w = Field<K>::std_double(g.weight(x, y) * K::eps_pow(-shift));
      } else {
        w = Field<K>::std_double(g.weight(x, y));
      }
      s[x][y] = -w / std::sqrt(dbar[x] * dbar[y]);
    }
  }
  return s;
}

// Monic characteristic polynomial of the normalized Laplacian, computed as
// det(lambda D - (D - B)) / det(D). Exact for the rational backend; series
// backends divide by the leading coefficient at the given budget.
template <class K>
Poly<K> char_poly(const OFGraph<K>& g, const Budget& bud) {
  using Fld = Field<K>;
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex '" + g.label(*iso) + "' has no edges");
  }
  if (g.size() > exact_spectrum_max_vertices) {
    fail(errc::size_cap_exceeded, "characteristic polynomial capped at " +
                                      std::to_string(exact_spectrum_max_vertices) +
                                      " vertices; use the float backend");
  }
  const int n = g.size();
  Matrix<Poly<K>> p(n, std::vector<Poly<K>>(n));
  for (int x = 0; x < n; ++x) {
    K d = g.degree(x);
    p[x][x] = Poly<K>(std::vector<K>{-d, d});
    for (int y : g.neighbor_list(x)) {
      p[x][y] = Poly<K>(std::vector<K>{g.weight(x, y)});
    }
  }
  Poly<K> q = poly_matrix_det(p);
  K lead_inv = Fld::inverse(q.lead(), bud);
  return q.scaled(lead_inv);
}

}  // namespace ofc
