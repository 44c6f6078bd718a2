#include "cliffstring/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cliffstring {

double norm(const Octonion& z) { return std::sqrt(norm_squared(z)); }

double max_abs(const Octonion& z) {
  double m = 0.0;
  for (double x : z.coefficients()) m = std::max(m, std::abs(x));
  return m;
}

SubspaceIndex::SubspaceIndex(int k) : k_(k) {
  if (k < 0 || k > 7) throw std::out_of_range("subspace index must lie in 0..7");
}

bool in_subspace(const Octonion& z, SubspaceIndex k, double tol) {
  for (int i = 1; i < 8; ++i) {
    if (i == k.value()) continue;
    if (std::abs(z[i]) > tol) return false;
  }
  return true;
}

double alternativity_residual(const Octonion& a, const Octonion& b) {
  const double right = norm(a * (b * a) - (a * b) * a);
  const double left = norm(a * (a * b) - (a * a) * b);
  return std::max(right, left);
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

std::complex<double> to_complex(const Octonion& z, SubspaceIndex k) {
  if (k.value() == 0) return {z[0], 0.0};
  return {z[0], z[k.value()]};
}

Octonion from_complex(std::complex<double> w, SubspaceIndex k) {
  Octonion z(w.real());
  if (k.value() == 0) {
    if (w.imag() != 0.0) throw std::invalid_argument("the real line cannot hold a non-real value");
    return z;
  }
  z[k.value()] = w.imag();
  return z;
}

std::ostream& operator<<(std::ostream& os, const Octonion& z) {
  os << '[';
  for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << z[i];
  return os << ']';
}

}  // namespace cliffstring
