#include "cliffstring/resolve.hpp"

#include <algorithm>
#include <cmath>

#include "cliffstring/minkowski.hpp"

namespace cliffstring {

Resolution::Resolution(int n)
    : n_(n), a_(static_cast<std::size_t>(n * n)), b_(static_cast<std::size_t>(n * n)),
      pivots_(static_cast<std::size_t>(n), Pivot::Positive) {}

Resolution resolve_hermitian(const OctHermitian& h, double tol) {
  const int n = h.size();
  Resolution r(n);
  for (int j = 0; j < n; ++j) {
    double diag = h(j, j).real();
    for (int k = 0; k < j; ++k) diag -= norm_squared(r.a(j, k)) - norm_squared(r.b(j, k));

    double a_pivot = 0.0;
    double b_pivot = 0.0;
    if (std::abs(diag) > tol && std::abs(diag) < kBalancedPivotBand) {
      a_pivot = std::sqrt(1.0 + 0.5 * diag);
      b_pivot = std::sqrt(1.0 - 0.5 * diag);
      if (diag < 0.0) r.set_pivot(j, Pivot::Negative);
    } else if (diag > tol) {
      a_pivot = std::sqrt(diag);
    } else if (diag < -tol) {
      b_pivot = std::sqrt(-diag);
      r.set_pivot(j, Pivot::Negative);
    } else {
      a_pivot = 1.0;
      b_pivot = 1.0;
      r.set_pivot(j, Pivot::Degenerate);
    }
    r.a(j, j) = Octonion(a_pivot);
    r.b(j, j) = Octonion(b_pivot);

    for (int i = j + 1; i < n; ++i) {
      Octonion c = h(i, j);
      for (int k = 0; k < j; ++k) c -= r.a(i, k) * conj(r.a(j, k)) - r.b(i, k) * conj(r.b(j, k));
      // a_ij a_jj - b_ij b_jj = c with real pivots.
      if (a_pivot != 0.0 && b_pivot != 0.0) {
        r.a(i, j) = c / a_pivot;
      } else if (a_pivot != 0.0) {
        r.a(i, j) = c / a_pivot;
      } else {
        r.b(i, j) = -c / b_pivot;
      }
    }
  }
  return r;
}

Resolution resolve_hermitian(int n, const std::vector<Octonion>& entries, double tol) {
  return resolve_hermitian(OctHermitian::from_entries(n, entries, tol), tol);
}

std::vector<TensorVector> vectors(const Resolution& r) {
  const int n = r.size();
  std::vector<TensorVector> vs;
  vs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    TensorVector v(n);
    for (int k = 0; k <= i; ++k) {
      if (r.a(i, k) != Octonion{}) v.add({GeneratorKind::E, k + 1}, r.a(i, k));
      if (r.b(i, k) != Octonion{}) v.add({GeneratorKind::F, k + 1}, r.b(i, k));
    }
    vs.push_back(std::move(v));
  }
  return vs;
}

double reconstruction_residual(const OctHermitian& h, const Resolution& r) {
  const auto vs = vectors(r);
  return max_entry_difference(gram_matrix(vs), h);
}

SpacetimeResolution resolve_spacetime(const std::array<double, 4>& x, double tol) {
  SpacetimeResolution out;
  out.x_matrix = vector_to_matrix(x, SigmaSet::four());
  const auto vs = vectors(resolve_hermitian(out.x_matrix, tol));
  out.c = {vs[0], vs[1]};
  for (const auto& u : out.c) {
    for (const auto& v : out.c) out.isotropy_residual = std::max(out.isotropy_residual, max_abs(inner(u, v)));
  }
  return out;
}

}  // namespace cliffstring
