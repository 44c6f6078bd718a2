#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>

namespace cliffstring {

/// Octonion x0 e0 + x1 e1 + ... + x7 e7 with e0 = 1 and (e_i)^2 = -1.
///
/// Products follow the Cayley-Dickson doubling of the quaternions,
/// (a, b)(c, d) = (ac - d* b, da + b c*), with coefficients 0..3 holding the
/// first quaternion and 4..7 the second. The resulting table is frozen in
/// `kMultiplicationTable`; e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
class Octonion {
 public:
  using Coefficients = std::array<double, 8>;

  constexpr Octonion() = default;
  constexpr explicit Octonion(double real) : c_{real, 0, 0, 0, 0, 0, 0, 0} {}
  constexpr explicit Octonion(const Coefficients& c) : c_(c) {}

  /// Basis unit e_k, k in 0..7.
  static constexpr Octonion unit(int k) {
    Octonion z;
    z.c_[static_cast<std::size_t>(k)] = 1.0;
    return z;
  }

  constexpr double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  constexpr const Coefficients& coefficients() const { return c_; }

  constexpr double real() const { return c_[0]; }
  constexpr Octonion imaginary() const {
    Octonion z = *this;
    z.c_[0] = 0.0;
    return z;
  }

  constexpr Octonion& operator+=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) {
    for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr Octonion& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Coefficients c_{};
};

/// Signed one-based index table: e_i e_j = sign(t) e_{|t|-1} with t = table[i][j].
inline constexpr std::array<std::array<std::int8_t, 8>, 8> kMultiplicationTable{{
    {1, 2, 3, 4, 5, 6, 7, 8},
    {2, -1, 4, -3, 6, -5, -8, 7},
    {3, -4, -1, 2, 7, 8, -5, -6},
    {4, 3, -2, -1, 8, -7, 6, -5},
    {5, -6, -7, -8, -1, 2, 3, 4},
    {6, 5, -8, 7, -2, -1, -4, 3},
    {7, 8, 5, -6, -3, 4, -1, -2},
    {8, -7, 6, 5, -4, -3, 2, -1},
}};

constexpr Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
constexpr Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
constexpr Octonion operator-(Octonion a) { return a *= -1.0; }
constexpr Octonion operator*(Octonion a, double s) { return a *= s; }
constexpr Octonion operator*(double s, Octonion a) { return a *= s; }
constexpr Octonion operator/(Octonion a, double s) { return a /= s; }

constexpr Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion out;
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const int t = kMultiplicationTable[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int k = (t > 0 ? t : -t) - 1;
      out[k] += (t > 0 ? 1.0 : -1.0) * a[i] * b[j];
    }
  }
  return out;
}

constexpr Octonion conj(Octonion z) {
  for (int i = 1; i < 8; ++i) z[i] = -z[i];
  return z;
}

constexpr double norm_squared(const Octonion& z) {
  double s = 0.0;
  for (double x : z.coefficients()) s += x * x;
  return s;
}

double norm(const Octonion& z);

/// Largest absolute coefficient; the entrywise distance used by residual checks.
double max_abs(const Octonion& z);

/// Complex subspace span(1, e_k); k = 0 denotes the real line.
class SubspaceIndex {
 public:
  explicit SubspaceIndex(int k);
  constexpr int value() const { return k_; }
  friend constexpr bool operator==(SubspaceIndex, SubspaceIndex) = default;

 private:
  int k_;
};

inline constexpr double kSubspaceTolerance = 1e-12;

/// True iff every coefficient outside {c0, c_k} is within `tol` of zero.
bool in_subspace(const Octonion& z, SubspaceIndex k, double tol = kSubspaceTolerance);

/// Max norm of a(ba) - (ab)a and a(ab) - (aa)b.
double alternativity_residual(const Octonion& a, const Octonion& b);

/// (ab)c - a(bc).
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

/// span(1, e_k) is isomorphic to C through e_k -> i.
std::complex<double> to_complex(const Octonion& z, SubspaceIndex k);
Octonion from_complex(std::complex<double> w, SubspaceIndex k);

std::ostream& operator<<(std::ostream& os, const Octonion& z);

}  // namespace cliffstring
