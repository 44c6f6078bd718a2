#pragma once

#include <array>
#include <complex>
#include <map>
#include <utility>

#include <Eigen/Core>

namespace cliffstring {

using Complex = std::complex<double>;
using CMatrix2 = Eigen::Matrix2cd;

struct PhysicalConstants {
  double ell = 1.0;
  double m = 1.0;
  double hbar = 1.0;
};

inline constexpr double kBoundaryTolerance = 1e-12;
inline constexpr double kSpectrumTolerance = 1e-12;

/// Coefficients of mode n: A_n (Hermitian) and A_{n,-n}.
struct Mode {
  CMatrix2 a = CMatrix2::Zero();
  CMatrix2 a_pair = CMatrix2::Zero();
};

/// Flat-gauge open-string solution with A^L = A^R. Index layout of every
/// matrix is [undotted][dotted] with both indices lowered.
///
/// Validated on construction: constants positive, K and every A_n Hermitian,
/// no n = 0 entry, and for each n the partner -n is present with
/// A_{-n,n} = A_{n,-n}^dag. Throws InvalidSpectrum.
class ModeSpectrum {
 public:
  ModeSpectrum(CMatrix2 k, CMatrix2 c0, std::map<int, Mode> modes, PhysicalConstants constants);

  const CMatrix2& k() const { return k_; }
  const CMatrix2& c0() const { return c0_; }
  const std::map<int, Mode>& modes() const { return modes_; }
  const PhysicalConstants& constants() const { return constants_; }
  /// max |n| over the support, 0 when there are no modes.
  int max_mode() const;

 private:
  CMatrix2 k_;
  CMatrix2 c0_;
  std::map<int, Mode> modes_;
  PhysicalConstants constants_;
};

/// Mode data before the endpoint condition is imposed.
struct RawMode {
  CMatrix2 left = CMatrix2::Zero();
  CMatrix2 right = CMatrix2::Zero();
  CMatrix2 a_pair = CMatrix2::Zero();
};

struct RawSpectrum {
  CMatrix2 k = CMatrix2::Zero();
  CMatrix2 c0 = CMatrix2::Zero();
  std::map<int, RawMode> modes;
  PhysicalConstants constants;
};

/// Unifies A^L and A^R. Accepts |A^L - A^R| <= tol * max(1, |A^L|) entrywise
/// and keeps A^L; throws BoundaryViolation otherwise.
ModeSpectrum enforce_boundary(const RawSpectrum& raw, double tol = kBoundaryTolerance);

/// P_{AB} = K_{AB}.
const CMatrix2& momentum_matrix(const ModeSpectrum& ms);
/// p_mu = 1/2 sigma_mu^{AB} K_{AB}.
std::array<Complex, 4> momentum_vector(const ModeSpectrum& ms);
/// p^mu p_mu.
Complex mass_shell(const ModeSpectrum& ms);

struct WorldsheetPoint {
  double tau = 0.0;
  double sigma = 0.0;
};

struct Current {
  CMatrix2 tau;
  CMatrix2 sigma;
};

/// J^alpha_{AB}, symmetric in AB. Requires 0 <= sigma <= pi.
Current current_density(const ModeSpectrum& ms, const WorldsheetPoint& pt);

/// n -> M^n_{(AB)}. The charge density is (1/pi) sum_n M^n cos(n sigma) e^{-i n tau}
/// and integrates over [0, pi] to M^0_{(AB)}.
std::map<int, CMatrix2> charge_density_coefficients(const ModeSpectrum& ms);

/// (1/pi) sum_n M^n cos(n sigma) e^{-i n tau}.
CMatrix2 charge_density(const std::map<int, CMatrix2>& coefficients, const WorldsheetPoint& pt);

/// Trapezoid rule for the integral of J^tau over [0, pi] at fixed tau.
CMatrix2 integrated_charge(const ModeSpectrum& ms, double tau, int n_sigma);

/// X^{AB} = C0 + (l/m^3) K^{AF} M_{EF} K^{EB} with
/// M = K tau^2 + 8 sum_n (A_n - A_{n,-n} e^{-i n tau} cos(n sigma)) / n^2.
/// Requires 0 <= sigma <= pi.
CMatrix2 coordinates(const ModeSpectrum& ms, const WorldsheetPoint& pt);
/// The same mode sum for any real sigma.
CMatrix2 coordinates_extended(const ModeSpectrum& ms, const WorldsheetPoint& pt);

/// tau in [0, tau_span) with step tau_span / n_tau, sigma in [0, pi] with step pi / n_sigma.
struct WorldsheetGrid {
  int n_tau = 512;
  int n_sigma = 512;
  double tau_span = 2.0 * 3.14159265358979323846;

  double h_tau() const { return tau_span / n_tau; }
  double h_sigma() const;
  WorldsheetGrid refined() const { return {2 * n_tau, 2 * n_sigma, tau_span}; }
};

/// Max |d_tau J^tau + d_sigma J^sigma| by centered differences at interior sigma nodes.
double divergence_residual(const ModeSpectrum& ms, const WorldsheetGrid& grid);
double divergence_residual_serial(const ModeSpectrum& ms, const WorldsheetGrid& grid);

/// Max coefficient residual of d_alpha C^A = g eta_{ab} K^{AB} D^b_B and
/// d_alpha D^alpha = 0 with g = sqrt(l m) / m^2, derivatives by centered
/// differences. C^A and D^alpha are expanded over the mode basis
/// {C0^A, K_B, A^L_{nB}, A^R_{nB}}; each A-vector carries the amplitude of its
/// mode so absent modes contribute nothing.
double eom_residual(const ModeSpectrum& ms, const WorldsheetGrid& grid);
double eom_residual_serial(const ModeSpectrum& ms, const WorldsheetGrid& grid);

/// Max |J^sigma| at sigma = 0 and sigma = pi over the grid's tau nodes.
double endpoint_flux(const ModeSpectrum& ms, const WorldsheetGrid& grid);

/// Residuals of the classical string checks. Convergence ratios compare the
/// grid with half the nodes per direction against `grid`.
struct StringSuite {
  double divergence_coarse = 0.0;
  double divergence_fine = 0.0;
  double divergence_ratio = 0.0;
  double eom_coarse = 0.0;
  double eom_fine = 0.0;
  double eom_ratio = 0.0;
  double endpoint_flux = 0.0;
  double charge = 0.0;             // max |trapezoid integral of J^tau - M0| at two tau values
  double charge_independence = 0.0;  // |Q(tau_1) - Q(tau_2)|
  double evenness = 0.0;           // max |X(tau, sigma) - X(tau, -sigma)|
  double endpoint_slope = 0.0;     // centered d_sigma X at sigma = 0 and pi
  double hermiticity = 0.0;        // max |X - X^dag|
};

StringSuite run_string_suite(const ModeSpectrum& ms, const WorldsheetGrid& grid);

/// z = sqrt(t_obsv / t_emit) - 1. Throws NonpositiveTime unless 0 < t_emit,
/// and std::invalid_argument unless t_emit <= t_obsv.
double redshift(double t_emit, double t_obsv);

/// Lower bound dt / ((1 + p z)^2 - 1) on the emission time. Requires 0 < p < 1,
/// dt >= 0 and z > 0.
double emission_bound(double dt, double p, double z_obsv);

}  // namespace cliffstring
