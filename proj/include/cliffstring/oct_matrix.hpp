#pragma once

#include <array>
#include <vector>

#include "cliffstring/octonion.hpp"

namespace cliffstring {

/// n x n octonionic Hermitian matrix, H_ji = conj(H_ij) with real diagonal.
///
/// Hermiticity holds exactly by construction: `set` writes both mirrored
/// entries and keeps only the real part on the diagonal.
class OctHermitian {
 public:
  OctHermitian() = default;
  explicit OctHermitian(int n);

  /// Builds from a full row-major entry list; throws NotHermitian when any
  /// |H_ji - conj(H_ij)| or diagonal imaginary coefficient exceeds `tol`.
  static OctHermitian from_entries(int n, const std::vector<Octonion>& entries, double tol = 1e-12);

  /// 2 x 2 form [[a, c], [conj(c), b]].
  static OctHermitian two_by_two(double a, double b, const Octonion& c);

  int size() const { return n_; }
  const Octonion& operator()(int i, int j) const { return entries_[index(i, j)]; }

  /// Sets H_ij and H_ji = conj(H_ij); on the diagonal only the real part is kept.
  void set(int i, int j, const Octonion& z);

  /// Largest entry coefficient magnitude.
  double max_entry() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  int n_ = 0;
  std::vector<Octonion> entries_;
};

/// Largest coefficient of H1 - H2 over all entries. Sizes must match.
double max_entry_difference(const OctHermitian& h1, const OctHermitian& h2);

/// General 2 x 2 octonion matrix, row-major.
struct OctMatrix2 {
  std::array<Octonion, 4> e{};

  Octonion& operator()(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }
  const Octonion& operator()(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }

  static OctMatrix2 identity();
  static OctMatrix2 from(const OctHermitian& h);
};

/// Entry (i,j) = sum_k lhs(i,k) rhs(k,j); each term is a single octonion product.
OctMatrix2 operator*(const OctMatrix2& lhs, const OctMatrix2& rhs);
OctMatrix2 operator+(const OctMatrix2& lhs, const OctMatrix2& rhs);
OctMatrix2 operator-(const OctMatrix2& lhs, const OctMatrix2& rhs);
OctMatrix2 operator*(double s, const OctMatrix2& m);

/// Conjugate transpose.
OctMatrix2 dagger(const OctMatrix2& m);

/// S11 S22 - S12 S21 (meaningful when all entries share one complex subspace).
Octonion det(const OctMatrix2& m);

double max_entry_difference(const OctMatrix2& a, const OctMatrix2& b);

/// Largest |M_ji - conj(M_ij)| coefficient, including imaginary diagonal parts.
double hermiticity_residual(const OctMatrix2& m);

/// Reads the Hermitian part: a = Re M11, b = Re M22, c = M12.
OctHermitian hermitian_part(const OctMatrix2& m);

}  // namespace cliffstring
