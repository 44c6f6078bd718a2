#pragma once

#include <array>
#include <complex>
#include <map>
#include <vector>

#include <Eigen/Core>

namespace cliffstring {

using OpMatrix = Eigen::MatrixXcd;

/// Monomials x0^a x1^b x2^c x3^d of total degree <= N, sorted by degree.
/// Operators are checked on the safe subspace degree <= N - 1, which is the
/// leading block of columns.
class PolyBasis {
 public:
  using Exponents = std::array<int, 4>;

  explicit PolyBasis(int degree);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(monomials_.size()); }
  int safe_dim() const { return safe_dim_; }
  const Exponents& monomial(int i) const { return monomials_[static_cast<std::size_t>(i)]; }
  /// Index of a monomial, or -1 when its degree exceeds N.
  int index(const Exponents& e) const;

 private:
  int degree_;
  int safe_dim_ = 0;
  std::vector<Exponents> monomials_;
  std::map<Exponents, int> index_;
};

/// Linear operator on the truncated polynomial space; `shift` is the degree
/// change it applies to each monomial.
struct PolyOperator {
  OpMatrix m;
  int shift = 0;
};

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);

struct CanonicalPair {
  std::array<PolyOperator, 4> q;  // multiplication by x_mu
  std::array<PolyOperator, 4> r;  // -i hbar eta_{mu mu} d/dx_mu
};

/// Throws std::invalid_argument unless basis.degree() >= 2 and hbar > 0.
CanonicalPair build_canonical(const PolyBasis& basis, double hbar);

/// Max |entry| over the safe columns.
double safe_residual(const OpMatrix& x, const PolyBasis& basis);

/// [X, Y] applied to the safe columns. Valid when Y maps the safe subspace
/// into a range where X is still exact, as for every operator built here.
OpMatrix commutator_safe(const OpMatrix& x, const OpMatrix& y, const PolyBasis& basis);

/// Max residual of [Q,Q] = [R,R] = 0 and [Q_mu, R_nu] = i hbar eta_{mu nu}.
double canonical_residual(const CanonicalPair& qr, const PolyBasis& basis, double hbar);

// Quaternion units 1, i, j, k with jk = -kj = i, ki = j, ij = k.
enum class Quat { One = 0, I = 1, J = 2, K = 3 };

struct QuatUnit {
  Quat unit = Quat::One;
  int sign = 1;
};

QuatUnit operator*(QuatUnit a, QuatUnit b);

/// sum_u u (x) X_u over the four quaternion units. A component with zero
/// columns is absent.
class QuatOperator {
 public:
  QuatOperator() = default;
  QuatOperator(QuatUnit tag, const OpMatrix& op);

  const OpMatrix& part(Quat u) const { return parts_[static_cast<std::size_t>(u)]; }
  bool has(Quat u) const { return part(u).size() != 0; }
  void add(Quat u, const OpMatrix& op);

  /// Product restricted to the first `cols` columns of the right factor.
  friend QuatOperator multiply(const QuatOperator& a, const QuatOperator& b, Eigen::Index cols);
  friend QuatOperator operator+(QuatOperator a, const QuatOperator& b);
  friend QuatOperator operator-(QuatOperator a, const QuatOperator& b);
  friend QuatOperator operator*(std::complex<double> s, QuatOperator a);

 private:
  std::array<OpMatrix, 4> parts_;
};

/// Identifies the quaternion i with the complex i: 1 (x) X + i (x) Y -> X + iY.
/// Throws std::invalid_argument when a j or k component is present.
OpMatrix collapse_complex(const QuatOperator& q);

/// A_mu = j (x) Q_mu and K_mu = k (x) R_mu.
struct QuatMapping {
  std::array<QuatOperator, 4> a;
  std::array<QuatOperator, 4> k;
};
QuatMapping quaternion_mapping(const CanonicalPair& qr);

/// Max residual of [A,A] = [K,K] = 0 and {A_mu, K_nu} = -hbar eta_{mu nu}.
double mixed_algebra_residual(const QuatMapping& ak, const PolyBasis& basis, double hbar);

/// 2 x 2 array of operators indexed [A][B].
using SpinorOperators = std::array<std::array<OpMatrix, 2>, 2>;

/// Contraction order of the dotted index in M0_{AB}.
///
/// `Lowered`: M0_{AB} = i K_{AE} A_B^E. Closes the Lorentz algebra with +i hbar.
/// `Printed`: M0_{AB} = i K_A^E A_{BE} = -(Lowered); closes with -i hbar.
enum class Contraction { Lowered, Printed };

/// Coefficient c with M0_{AB} = sum_{mu nu} c R_mu Q_nu after the quaternion
/// product k j = -i has been collapsed.
std::complex<double> m0_coefficient(int a, int b, int mu, int nu, Contraction order);

/// Builds the quantum model: basis, canonical pair and the 16 products R_mu Q_nu.
struct QuantumModel {
  QuantumModel(int degree, double hbar);

  PolyBasis basis;
  double hbar;
  CanonicalPair qr;
  std::array<std::array<OpMatrix, 4>, 4> rq;
};

/// M0_{AB} from the coefficient table.
SpinorOperators m0_operators(const QuantumModel& model, Contraction order = Contraction::Lowered);
/// M0_{AB} from the spinor components K_{AB} = sigma^mu_{AB} K_mu, A_{AB} = sigma^mu_{AB} A_mu
/// multiplied as quaternion-tagged operators and collapsed.
SpinorOperators m0_from_quaternions(const QuantumModel& model, Contraction order = Contraction::Lowered);
/// Formal adjoint: Q, R self-adjoint, so (c R Q)^dag = c* Q R.
SpinorOperators m0_dagger(const QuantumModel& model, Contraction order = Contraction::Lowered);
/// (M_{AB} + M_{BA}) / 2.
SpinorOperators symmetrize(const SpinorOperators& m);

/// Max residual of [J_AB, J_EF] = i hbar sign ((J_AE eps_FB + J_BE eps_FA) + (J_AF eps_EB + J_BF eps_EA)).
double lorentz_closure_residual(const SpinorOperators& j, const PolyBasis& basis, double hbar, double sign = 1.0);
double lorentz_closure_residual_serial(const SpinorOperators& j, const PolyBasis& basis, double hbar,
                                       double sign = 1.0);

/// Max |[J_AB, J^dag_EF]| on the safe subspace.
double dotted_residual(const SpinorOperators& j, const SpinorOperators& jd, const PolyBasis& basis);

struct ThreeVector {
  std::array<OpMatrix, 3> n;
  std::array<OpMatrix, 3> n_dagger;
};

/// N_1 = i/4 (J+_11 - J+_22), N_2 = 1/4 (J+_11 + J+_22), N_3 = -i/2 J+_12 with
/// J+ the symmetrized adjoint; N_i^dag from J by conjugating the coefficients.
ThreeVector three_vector_form(const SpinorOperators& j, const SpinorOperators& jd);

/// Max residual of [N_i, N_j] = i hbar eps_ijk N_k and [N_i, N_j^dag] = 0.
double three_vector_residual(const ThreeVector& t, const PolyBasis& basis, double hbar);

using TensorOperators = std::array<std::array<OpMatrix, 4>, 4>;

/// M_{mu nu} = 1/4 sigma_mu^{AE} sigma_nu^{BF} (J_AB eps_EF + J^dag_EF eps_AB).
TensorOperators tensor_form(const SpinorOperators& j, const SpinorOperators& jd);
/// J_AB recovered as 1/2 eps^{EF} sigma^mu_{AE} sigma^nu_{BF} M_{mu nu}.
SpinorOperators spinor_from_tensor(const TensorOperators& m);

/// max |M_{mu nu} + M_{nu mu}| over all entries.
double tensor_antisymmetry_residual(const TensorOperators& m);

/// Max residual of [M_mn, M_rs] = i hbar ((eta_nr M_ms - eta_mr M_ns) - (eta_ns M_mr - eta_ms M_nr))
/// over the 6 x 6 independent index pairs.
double tensor_closure_residual(const TensorOperators& m, const PolyBasis& basis, double hbar);
double tensor_closure_residual_serial(const TensorOperators& m, const PolyBasis& basis, double hbar);

/// Q_1 R_2 - Q_2 R_1.
OpMatrix jz_operator(const QuantumModel& model);

/// Eigenvalues of Q_1 R_2 - Q_2 R_1 on polynomials in x_1, x_2 of degree <= n,
/// sorted ascending by real part.
std::vector<std::complex<double>> jz_spectrum(int n, double hbar);
/// The same restricted to homogeneous degree d.
std::vector<std::complex<double>> jz_spectrum_homogeneous(int d, double hbar);

/// Max distance of lambda / hbar from the nearest integer, imaginary parts included.
double integrality_residual(const std::vector<std::complex<double>>& eigenvalues, double hbar);

/// Every residual of the quantum suite at one truncation.
struct QuantumSuite {
  double canonical = 0.0;
  double mixed = 0.0;
  double m0_routes = 0.0;
  double closure = 0.0;
  double closure_printed_conjugate = 0.0;
  double closure_printed_plus = 0.0;
  double dotted = 0.0;
  double three_vector = 0.0;
  double jz_three_vector = 0.0;
  double tensor_antisymmetry = 0.0;
  double tensor_roundtrip = 0.0;
  double tensor_closure = 0.0;
  double jz_integrality = 0.0;
  std::vector<std::complex<double>> jz_eigenvalues;
};

/// `jz_degree` bounds the J^z spectrum check.
QuantumSuite run_quantum_suite(int degree, double hbar, int jz_degree);

}  // namespace cliffstring
