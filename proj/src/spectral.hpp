#pragma once

#include <vector>

#include "field.hpp"
#include "graph.hpp"

namespace ofc {

template <class K>
using Vec = std::vector<K>;

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Normalized Laplacian: 1 on the diagonal, -b(x,y)/b(x) off it. Isolated
// vertices are rejected (their row could not be normalized). Off-diagonal
// entries carry the truncation of the division for series backends; when an
// exact row is needed use the degree-cleared forms below instead.
template <class K>
Matrix<K> build_laplacian(const OFGraph<K>& g, const Budget& bud) {
  using Fld = Field<K>;
  if (auto iso = g.first_isolated()) {
    fail(errc::isolated_vertex, "vertex '" + g.label(*iso) + "' has no edges");
  }
  const int n = g.size();
  Matrix<K> L(n, Vec<K>(n, Fld::zero()));
  for (int x = 0; x < n; ++x) {
    L[x][x] = Fld::one();
    for (int y : g.neighbor_list(x)) {
      L[x][y] = -g.normalized_weight(x, y, bud);
    }
  }
  return L;
}

template <class K>
Vec<K> apply_matrix(const Matrix<K>& m, const Vec<K>& v) {
  if (m.size() != v.size()) fail(errc::dimension_mismatch, "matrix/vector size mismatch");
  Vec<K> out;
  out.reserve(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x].size() != v.size()) fail(errc::dimension_mismatch, "matrix is not square");
    K acc = Field<K>::zero();
    for (std::size_t y = 0; y < v.size(); ++y) acc += m[x][y] * v[y];
    out.push_back(std::move(acc));
  }
  return out;
}

template <class K>
Vec<K> apply_laplacian(const OFGraph<K>& g, const Vec<K>& f, const Budget& bud) {
  return apply_matrix(build_laplacian(g, bud), f);
}

// Degree-weighted inner product sum_x f(x) h(x) b(x); exact for exact fields.
template <class K>
K inner_product(const OFGraph<K>& g, const Vec<K>& f, const Vec<K>& h) {
  if (static_cast<int>(f.size()) != g.size() || f.size() != h.size()) {
    fail(errc::dimension_mismatch, "function length differs from vertex count");
  }
  K acc = Field<K>::zero();
  for (int x = 0; x < g.size(); ++x) acc += f[x] * h[x] * g.degree(x);
  return acc;
}

// Dirichlet sum over unordered edges: sum (f(x)-f(y))(h(x)-h(y)) b(x,y).
// Equals <Lf, h> under the degree-weighted inner product.
template <class K>
K green_form(const OFGraph<K>& g, const Vec<K>& f, const Vec<K>& h) {
  if (static_cast<int>(f.size()) != g.size() || f.size() != h.size()) {
    fail(errc::dimension_mismatch, "function length differs from vertex count");
  }
  K acc = Field<K>::zero();
  for (const auto& e : g.edges()) {
    acc += (f[e.u] - f[e.v]) * (h[e.u] - h[e.v]) * e.w;
  }
  return acc;
}

// Residual of the eigenvalue equation with degrees cleared:
//   r(x) = sum_y (v(x)-v(y)) b(x,y) - lambda v(x) b(x).
// No divisions, so exact inputs give an exact verdict.
template <class K>
Vec<K> eigen_residual(const OFGraph<K>& g, const K& lambda, const Vec<K>& v) {
  if (static_cast<int>(v.size()) != g.size()) {
    fail(errc::dimension_mismatch, "vector length differs from vertex count");
  }
  Vec<K> r;
  r.reserve(v.size());
  for (int x = 0; x < g.size(); ++x) {
    K acc = Field<K>::zero();
    for (int y : g.neighbor_list(x)) acc += (v[x] - v[y]) * g.weight(x, y);
    acc -= lambda * v[x] * g.degree(x);
    r.push_back(std::move(acc));
  }
  return r;
}

// True when the residual has no coefficient of decided sign, i.e. the pair
// satisfies the eigenvalue equation exactly or up to truncation/tolerance.
template <class K>
bool verify_eigenpair(const OFGraph<K>& g, const K& lambda, const Vec<K>& v) {
  using Fld = Field<K>;
  bool nonzero = false;
  for (const K& c : v) {
    if (Fld::sign(c) != 0) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) fail(errc::zero_vector, "candidate eigenvector is zero");
  for (const K& c : eigen_residual(g, lambda, v)) {
    if (Fld::sign(c) != 0) return false;
  }
  return true;
}

}  // namespace ofc
