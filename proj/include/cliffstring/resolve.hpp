#pragma once

#include <array>
#include <span>
#include <vector>

#include "cliffstring/clifford.hpp"
#include "cliffstring/oct_matrix.hpp"

namespace cliffstring {

inline constexpr double kResolveTolerance = 1e-12;
/// Residual diagonals with tol < |r| < band get pivots a² = 1 + r/2, b² = 1 − r/2
/// instead of √|r|, so off-diagonal divisions never amplify by more than √2.
inline constexpr double kBalancedPivotBand = 1.0;

enum class Pivot { Positive, Negative, Degenerate };

/// Coefficients of v_i = sum_k a_ik (x) e_k + b_ik (x) f_k with a_ik = b_ik = 0 for k > i.
class Resolution {
 public:
  explicit Resolution(int n = 0);

  int size() const { return n_; }
  Octonion& a(int i, int k) { return a_[index(i, k)]; }
  Octonion& b(int i, int k) { return b_[index(i, k)]; }
  const Octonion& a(int i, int k) const { return a_[index(i, k)]; }
  const Octonion& b(int i, int k) const { return b_[index(i, k)]; }
  Pivot pivot(int j) const { return pivots_[static_cast<std::size_t>(j)]; }
  void set_pivot(int j, Pivot p) { pivots_[static_cast<std::size_t>(j)] = p; }

 private:
  std::size_t index(int i, int k) const { return static_cast<std::size_t>(i * n_ + k); }

  int n_;
  std::vector<Octonion> a_;
  std::vector<Octonion> b_;
  std::vector<Pivot> pivots_;
};

/// Column-by-column indefinite octonionic Cholesky: H = v_i . v_j* with
/// H_jj = sum_k |a_jk|^2 - |b_jk|^2 and H_ij = sum_k a_ik a_jk* - b_ik b_jk*.
///
/// Diagonal residual r_j > tol gives a_jj = sqrt(r_j); r_j < -tol gives
/// b_jj = sqrt(-r_j); |r_j| <= tol gives a_jj = b_jj = 1. Pivots are real, so
/// the off-diagonal solve is a division by a real number and stays inside any
/// complex subspace the input lives in.
///
/// Throws NotHermitian when the input is not Hermitian beyond tol. An
/// `OctHermitian` is Hermitian by construction, so that check only applies to
/// the entry-list overload.
Resolution resolve_hermitian(const OctHermitian& h, double tol = kResolveTolerance);
Resolution resolve_hermitian(int n, const std::vector<Octonion>& entries, double tol = kResolveTolerance);

/// v_i = sum_k a_ik (x) e_k + b_ik (x) f_k.
std::vector<TensorVector> vectors(const Resolution& r);

/// max entry coefficient of gram_matrix(vectors(r)) - h.
double reconstruction_residual(const OctHermitian& h, const Resolution& r);

struct SpacetimeResolution {
  std::array<TensorVector, 2> c;  // spinor components c^A
  OctHermitian x_matrix;          // X^{AB} = sigma_mu^{AB} x^mu
  double isotropy_residual = 0.0;  // max |c^A . c^B|
};

/// Resolves the 4D Hermitian spinor X = sigma_mu x^mu into spinor components
/// c^A with X^{AB} = c^A . c^{*B} and checks c^A . c^B = 0.
SpacetimeResolution resolve_spacetime(const std::array<double, 4>& x, double tol = kResolveTolerance);

}  // namespace cliffstring
