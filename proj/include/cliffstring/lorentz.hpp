#pragma once

#include <array>
#include <vector>

#include "cliffstring/clifford.hpp"
#include "cliffstring/oct_matrix.hpp"

namespace cliffstring {

using OctSpinor = std::array<Octonion, 2>;
using SpinorPair = std::array<TensorVector, 2>;

inline constexpr double kDeterminantTolerance = 1e-10;

/// 2 x 2 octonionic Lorentz factor S with all entries in one complex
/// subspace span(1, e_k) and real det(S) = +-1.
class LorentzFactor {
 public:
  /// S = exp(t G) for a traceless generator G over span(1, e_k). Throws
  /// MixedSubspace when G's entries use more than one imaginary unit and
  /// std::invalid_argument when G is not traceless.
  static LorentzFactor make(const OctMatrix2& generator, double t);

  /// The det = -1 reflection diag(1, -1).
  static LorentzFactor reflection();

  /// Validates an explicit matrix: single subspace and real det within
  /// kDeterminantTolerance of +-1.
  static LorentzFactor from_matrix(const OctMatrix2& s);

  /// No validation. Only for negative controls of the compatibility check.
  static LorentzFactor unchecked(const OctMatrix2& s);

  const OctMatrix2& matrix() const { return s_; }
  int subspace() const { return subspace_; }
  /// Real determinant (+-1 for validated factors).
  double det() const { return det_; }

  /// S_A^B = eps^{BE} S^F_E eps_{FA}, row A, column B.
  OctMatrix2 lowered() const;

 private:
  LorentzFactor(const OctMatrix2& s, int subspace, double det) : s_(s), subspace_(subspace), det_(det) {}

  OctMatrix2 s_;
  int subspace_ = 0;
  double det_ = 1.0;
};

/// Imaginary unit shared by every entry (0 when all entries are real).
/// Throws MixedSubspace.
int common_subspace(const OctMatrix2& m, double tol = kSubspaceTolerance);

namespace generators {
/// diag(1/2, -1/2): boost along axis 1.
OctMatrix2 boost();
/// [[0, 1/2], [-1/2, 0]]: real rotation.
OctMatrix2 real_rotation();
/// [[0, e_k/2], [e_k/2, 0]] for k in 1..7.
OctMatrix2 rotation(int k);
/// [[0, e_k/2], [-e_k/2, 0]] for k in 1..7.
OctMatrix2 subspace_boost(int k);
}  // namespace generators

/// Factors applied one after another, first factor innermost.
struct NestedTransform {
  std::vector<LorentzFactor> factors;
};

/// X -> (S X) S^dag for each factor in order.
OctMatrix2 act_vector(const LorentzFactor& f, const OctMatrix2& x);
OctHermitian act_vector(const NestedTransform& t, const OctHermitian& x);

/// Spinor action v^A -> (S^A_B (x) 1) v^B.
OctSpinor act_spinor(const LorentzFactor& f, const OctSpinor& v);
SpinorPair act_spinor(const LorentzFactor& f, const SpinorPair& v);

/// Co-spinor action w*_A -> -w*_B (S_A^B (x) 1).
OctSpinor act_cospinor(const LorentzFactor& f, const OctSpinor& w);
SpinorPair act_cospinor(const LorentzFactor& f, const SpinorPair& w);

/// Max entry coefficient of (Sv)(Sv)^dag - S(v v^dag)S^dag.
double compatibility_residual(const LorentzFactor& f, const OctSpinor& v);

/// chi^A psi_A + o.c. (twice the real part of the contraction).
double spinor_contraction(const OctSpinor& chi, const OctSpinor& psi);

/// |transformed contraction - det(S) original contraction|.
double contraction_invariance_residual(const LorentzFactor& f, const OctSpinor& chi, const OctSpinor& psi);

/// Kinetic field sample on the world sheet: d_alpha c^A and d*^alpha_A for
/// alpha in {tau, sigma}.
struct KineticSample {
  std::array<SpinorPair, 2> dc;
  std::array<SpinorPair, 2> d;
};

/// d_alpha c^A . d*^alpha_A + o.c.
double lagrangian_kinetic_density(const KineticSample& s);

/// c -> (S (x) 1) c, d* -> -d* (S_A^F (x) 1).
KineticSample transform(const LorentzFactor& f, const KineticSample& s);

}  // namespace cliffstring
