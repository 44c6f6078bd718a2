#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "cliffstring/oct_matrix.hpp"

namespace cliffstring {

/// Hermitian Pauli matrices sigma^mu mapping x in R^dim to X = x^mu sigma^mu.
///
/// dim 10: sigma^0 = I, sigma^1 = diag(1,-1), sigma^{k+2} = [[0, e_k*], [e_k, 0]], k = 0..7.
/// dim 4: I and the three standard Pauli matrices, with i carried by e1.
class SigmaSet {
 public:
  static const SigmaSet& four();
  static const SigmaSet& ten();

  int dim() const { return static_cast<int>(matrices_.size()); }
  const OctMatrix2& operator[](int mu) const { return matrices_[static_cast<std::size_t>(mu)]; }

 private:
  explicit SigmaSet(std::vector<OctMatrix2> matrices) : matrices_(std::move(matrices)) {}
  std::vector<OctMatrix2> matrices_;
};

/// X = sum_mu x^mu sigma^mu. Throws DimensionMismatch when x.size() != dim.
OctHermitian vector_to_matrix(std::span<const double> x, const SigmaSet& sigma);

/// x^mu = 1/2 Re tr(sigma^mu X), the inverse of vector_to_matrix on its image.
std::vector<double> matrix_to_vector(const OctHermitian& x, const SigmaSet& sigma);

/// ab - c c* for X = [[a, c], [c*, b]].
double det2(const OctHermitian& x);

/// x_mu x^mu with eta = diag(1, -1, ..., -1).
double minkowski_norm(std::span<const double> x);

// Spinor metric. eps_{AB} and eps^{AB} share components, eps_12 = eps^12 = 1.
// V^A = eps^{AB} V_B and V_B = V^A eps_{AB}; the two maps are mutually inverse.

inline constexpr std::array<std::array<double, 2>, 2> kSpinorMetric{{{0.0, 1.0}, {-1.0, 0.0}}};

constexpr double epsilon(int a, int b) {
  return kSpinorMetric[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

template <class T>
std::array<T, 2> raise_index(const std::array<T, 2>& lower) {
  std::array<T, 2> upper{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (epsilon(a, b) != 0.0) upper[static_cast<std::size_t>(a)] += epsilon(a, b) * lower[static_cast<std::size_t>(b)];
    }
  }
  return upper;
}

template <class T>
std::array<T, 2> lower_index(const std::array<T, 2>& upper) {
  std::array<T, 2> lower{};
  for (int b = 0; b < 2; ++b) {
    for (int a = 0; a < 2; ++a) {
      if (epsilon(a, b) != 0.0) lower[static_cast<std::size_t>(b)] += epsilon(a, b) * upper[static_cast<std::size_t>(a)];
    }
  }
  return lower;
}

// Complex 2-spinor index gymnastics on matrices M[A][B] (row: undotted,
// column: dotted). Each helper applies raise_index/lower_index to one slot.

Eigen::Matrix2d spinor_metric();
Eigen::Matrix2cd lower_both(const Eigen::Matrix2cd& upper);
Eigen::Matrix2cd raise_both(const Eigen::Matrix2cd& lower);
Eigen::Matrix2cd raise_second(const Eigen::Matrix2cd& lower);
Eigen::Matrix2cd lower_second(const Eigen::Matrix2cd& upper);

inline constexpr std::array<double, 4> kEta4{1.0, -1.0, -1.0, -1.0};

/// sigma_mu^{AB}: the four complex Pauli matrices with upper spinor indices.
const Eigen::Matrix2cd& pauli_upper(int mu);
/// sigma^mu_{AB} = eta^{mu nu} (sigma_nu with both spinor indices lowered).
const Eigen::Matrix2cd& pauli_lower(int mu);

/// sum_mu v[mu] sigma_mu^{AB} and the inverse 1/2 sigma^mu_{AB} M^{AB}.
Eigen::Matrix2cd complex_vector_to_matrix(const std::array<std::complex<double>, 4>& v);
std::array<std::complex<double>, 4> complex_matrix_to_vector(const Eigen::Matrix2cd& m);

}  // namespace cliffstring
