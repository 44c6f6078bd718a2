#include "cliffstring/string_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "cliffstring/errors.hpp"
#include "cliffstring/minkowski.hpp"

namespace cliffstring {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double max_abs(const CMatrix2& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const CMatrix2& m, double tol) { return max_abs(m - m.adjoint()) <= tol * std::max(1.0, max_abs(m)); }

// e^{-i n tau}
Complex phase(int n, double tau) { return std::polar(1.0, -n * tau); }

// (2 i l / m) K_A^E Y_{BE} + (A <-> B)
CMatrix2 symmetrized_contraction(const ModeSpectrum& ms, const CMatrix2& y) {
  const auto& c = ms.constants();
  const CMatrix2 t = (2.0 * kI * c.ell / c.m) * raise_second(ms.k()) * y.transpose();
  return t + t.transpose();
}

Current current_unchecked(const ModeSpectrum& ms, double tau, double sigma) {
  CMatrix2 y_tau = CMatrix2::Zero();
  CMatrix2 y_sigma = CMatrix2::Zero();
  for (const auto& [n, mode] : ms.modes()) {
    const Complex osc = phase(n, tau) / static_cast<double>(n);
    y_tau += (2.0 / n) * mode.a + (2.0 * std::cos(n * sigma)) * osc * mode.a_pair;
    y_sigma += (2.0 * kI * std::sin(n * sigma)) * osc * mode.a_pair;
  }
  return {symmetrized_contraction(ms, y_tau), symmetrized_contraction(ms, y_sigma)};
}

void require_sigma_range(double sigma) {
  if (!(sigma >= 0.0 && sigma <= kPi)) throw std::invalid_argument("sigma must lie in [0, pi]");
}

double amplitude(const Mode& mode) { return std::max(max_abs(mode.a), max_abs(mode.a_pair)); }

// Columns: C^0, C^1, D^tau_0, D^tau_1, D^sigma_0, D^sigma_1. Rows: C0^0, C0^1,
// K_0, K_1, then A^L_{n0}, A^L_{n1}, A^R_{n0}, A^R_{n1} per mode.
using FieldMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, 6>;

class ModeFields {
 public:
  explicit ModeFields(const ModeSpectrum& ms) : k_up_(raise_both(ms.k())) {
    const auto& c = ms.constants();
    g_ = std::sqrt(c.ell * c.m) / (c.m * c.m);
    for (const auto& [n, mode] : ms.modes()) {
      n_.push_back(n);
      amp_.push_back(amplitude(mode));
    }
  }

  Eigen::Index rows() const { return 4 + 4 * static_cast<Eigen::Index>(n_.size()); }
  double g() const { return g_; }
  const CMatrix2& k_up() const { return k_up_; }

  void evaluate(double tau, double sigma, FieldMatrix& f) const {
    f.setZero(rows(), 6);
    for (int a = 0; a < 2; ++a) {
      f(a, a) = 1.0;
      for (int b = 0; b < 2; ++b) f(2 + b, a) = g_ * k_up_(a, b) * tau;
    }
    f(2, 2) = 1.0;
    f(3, 3) = 1.0;
    constexpr double kL[2] = {1.0, -1.0};
    constexpr double kR[2] = {1.0, 1.0};
    for (std::size_t m = 0; m < n_.size(); ++m) {
      const int n = n_[m];
      const Complex el = amp_[m] * std::polar(1.0, -0.5 * n * (tau + sigma));
      const Complex er = amp_[m] * std::polar(1.0, -0.5 * n * (tau - sigma));
      const Eigen::Index base = 4 + 4 * static_cast<Eigen::Index>(m);
      for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
          const Complex w = g_ * k_up_(a, b) * 2.0 * kI / static_cast<double>(n);
          f(base + b, a) = w * el;
          f(base + 2 + b, a) = w * er;
        }
        for (int alpha = 0; alpha < 2; ++alpha) {
          f(base + b, 2 + 2 * alpha + b) = kL[alpha] * el;
          f(base + 2 + b, 2 + 2 * alpha + b) = kR[alpha] * er;
        }
      }
    }
  }

 private:
  CMatrix2 k_up_;
  double g_ = 0.0;
  std::vector<int> n_;
  std::vector<double> amp_;
};

double divergence_row(const ModeSpectrum& ms, const WorldsheetGrid& grid, int i) {
  const double ht = grid.h_tau();
  const double hs = grid.h_sigma();
  const double tau = i * ht;
  double r = 0.0;
  for (int j = 1; j < grid.n_sigma; ++j) {
    const double sigma = j * hs;
    const CMatrix2 dtau = (current_unchecked(ms, tau + ht, sigma).tau - current_unchecked(ms, tau - ht, sigma).tau) / (2.0 * ht);
    const CMatrix2 dsigma =
        (current_unchecked(ms, tau, sigma + hs).sigma - current_unchecked(ms, tau, sigma - hs).sigma) / (2.0 * hs);
    r = std::max(r, max_abs(dtau + dsigma));
  }
  return r;
}

double eom_row(const ModeFields& fields, const WorldsheetGrid& grid, int i) {
  const double ht = grid.h_tau();
  const double hs = grid.h_sigma();
  const double tau = i * ht;
  constexpr double kEta[2] = {1.0, -1.0};
  FieldMatrix f, tp, tm, sp, sm;
  double r = 0.0;
  for (int j = 1; j < grid.n_sigma; ++j) {
    const double sigma = j * hs;
    fields.evaluate(tau, sigma, f);
    fields.evaluate(tau + ht, sigma, tp);
    fields.evaluate(tau - ht, sigma, tm);
    fields.evaluate(tau, sigma + hs, sp);
    fields.evaluate(tau, sigma - hs, sm);
    const FieldMatrix d[2] = {(tp - tm) / (2.0 * ht), (sp - sm) / (2.0 * hs)};
    for (int alpha = 0; alpha < 2; ++alpha) {
      for (int a = 0; a < 2; ++a) {
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(f.rows());
        for (int b = 0; b < 2; ++b) rhs += fields.k_up()(a, b) * f.col(2 + 2 * alpha + b);
        r = std::max(r, (d[alpha].col(a) - fields.g() * kEta[alpha] * rhs).cwiseAbs().maxCoeff());
      }
    }
    for (int b = 0; b < 2; ++b) r = std::max(r, (d[0].col(2 + b) + d[1].col(4 + b)).cwiseAbs().maxCoeff());
  }
  return r;
}

}  // namespace

ModeSpectrum::ModeSpectrum(CMatrix2 k, CMatrix2 c0, std::map<int, Mode> modes, PhysicalConstants constants)
    : k_(std::move(k)), c0_(std::move(c0)), modes_(std::move(modes)), constants_(constants) {
  if (!(constants_.ell > 0.0 && constants_.m > 0.0 && constants_.hbar > 0.0)) {
    throw InvalidSpectrum("ell, m and hbar must be positive");
  }
  if (!is_hermitian(k_, kSpectrumTolerance)) throw InvalidSpectrum("K is not Hermitian");
  if (!is_hermitian(c0_, kSpectrumTolerance)) throw InvalidSpectrum("C0 is not Hermitian");
  for (const auto& [n, mode] : modes_) {
    std::ostringstream where;
    where << "mode " << n;
    if (n == 0) throw InvalidSpectrum("mode index 0 is not allowed");
    if (!is_hermitian(mode.a, kSpectrumTolerance)) throw InvalidSpectrum(where.str() + ": A_n is not Hermitian");
    const auto partner = modes_.find(-n);
    if (partner == modes_.end()) throw InvalidSpectrum(where.str() + ": partner mode missing");
    const CMatrix2& other = partner->second.a_pair;
    if (max_abs(other - mode.a_pair.adjoint()) > kSpectrumTolerance * std::max(1.0, max_abs(mode.a_pair))) {
      throw InvalidSpectrum(where.str() + ": A_{-n,n} is not the adjoint of A_{n,-n}");
    }
  }
}

int ModeSpectrum::max_mode() const {
  int out = 0;
  for (const auto& entry : modes_) out = std::max(out, std::abs(entry.first));
  return out;
}

ModeSpectrum enforce_boundary(const RawSpectrum& raw, double tol) {
  std::map<int, Mode> modes;
  for (const auto& [n, rm] : raw.modes) {
    if (max_abs(rm.left - rm.right) > tol * std::max(1.0, max_abs(rm.left))) {
      std::ostringstream msg;
      msg << "mode " << n << ": left and right coefficients differ, J^sigma would not vanish at the endpoints";
      throw BoundaryViolation(msg.str());
    }
    modes[n] = Mode{rm.left, rm.a_pair};
  }
  return ModeSpectrum(raw.k, raw.c0, std::move(modes), raw.constants);
}

const CMatrix2& momentum_matrix(const ModeSpectrum& ms) { return ms.k(); }

std::array<Complex, 4> momentum_vector(const ModeSpectrum& ms) {
  std::array<Complex, 4> p;
  for (int mu = 0; mu < 4; ++mu) p[static_cast<std::size_t>(mu)] = 0.5 * pauli_upper(mu).cwiseProduct(ms.k()).sum();
  return p;
}

Complex mass_shell(const ModeSpectrum& ms) {
  const auto p = momentum_vector(ms);
  Complex s = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) s += kEta4[mu] * p[mu] * p[mu];
  return s;
}

Current current_density(const ModeSpectrum& ms, const WorldsheetPoint& pt) {
  require_sigma_range(pt.sigma);
  return current_unchecked(ms, pt.tau, pt.sigma);
}

std::map<int, CMatrix2> charge_density_coefficients(const ModeSpectrum& ms) {
  const auto& c = ms.constants();
  const CMatrix2 k_mixed = raise_second(ms.k());
  // A_{BE} = (8 pi l / m) sum_n A_n / n
  CMatrix2 a_total = CMatrix2::Zero();
  for (const auto& [n, mode] : ms.modes()) a_total += mode.a / static_cast<double>(n);
  a_total *= 8.0 * kPi * c.ell / c.m;

  const auto symmetrize = [](const CMatrix2& m) -> CMatrix2 { return 0.5 * (m + m.transpose()); };
  std::map<int, CMatrix2> out;
  out[0] = symmetrize(kI * k_mixed * a_total.transpose());
  for (const auto& [n, mode] : ms.modes()) {
    out[n] = symmetrize((8.0 * kPi * c.ell * kI / (c.m * n)) * k_mixed * mode.a_pair.transpose());
  }
  return out;
}

CMatrix2 charge_density(const std::map<int, CMatrix2>& coefficients, const WorldsheetPoint& pt) {
  CMatrix2 rho = CMatrix2::Zero();
  for (const auto& [n, m] : coefficients) rho += (std::cos(n * pt.sigma) * phase(n, pt.tau)) * m;
  return rho / kPi;
}

CMatrix2 integrated_charge(const ModeSpectrum& ms, double tau, int n_sigma) {
  if (n_sigma < 1) throw std::invalid_argument("n_sigma must be positive");
  const double h = kPi / n_sigma;
  CMatrix2 sum = 0.5 * (current_unchecked(ms, tau, 0.0).tau + current_unchecked(ms, tau, kPi).tau);
  for (int j = 1; j < n_sigma; ++j) sum += current_unchecked(ms, tau, j * h).tau;
  return h * sum;
}

CMatrix2 coordinates_extended(const ModeSpectrum& ms, const WorldsheetPoint& pt) {
  const auto& c = ms.constants();
  CMatrix2 m = ms.k() * (pt.tau * pt.tau);
  for (const auto& [n, mode] : ms.modes()) {
    const double n2 = static_cast<double>(n) * n;
    m += (8.0 / n2) * (mode.a - (phase(n, pt.tau) * std::cos(n * pt.sigma)) * mode.a_pair);
  }
  const CMatrix2 k_up = raise_both(ms.k());
  return ms.c0() + (c.ell / (c.m * c.m * c.m)) * k_up * m.transpose() * k_up;
}

CMatrix2 coordinates(const ModeSpectrum& ms, const WorldsheetPoint& pt) {
  require_sigma_range(pt.sigma);
  return coordinates_extended(ms, pt);
}

double WorldsheetGrid::h_sigma() const { return kPi / n_sigma; }

double divergence_residual_serial(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  double r = 0.0;
  for (int i = 0; i < grid.n_tau; ++i) r = std::max(r, divergence_row(ms, grid, i));
  return r;
}

double divergence_residual(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(static)
  for (int i = 0; i < grid.n_tau; ++i) r = std::max(r, divergence_row(ms, grid, i));
  return r;
}

double eom_residual_serial(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  const ModeFields fields(ms);
  double r = 0.0;
  for (int i = 0; i < grid.n_tau; ++i) r = std::max(r, eom_row(fields, grid, i));
  return r;
}

double eom_residual(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  const ModeFields fields(ms);
  double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(static)
  for (int i = 0; i < grid.n_tau; ++i) r = std::max(r, eom_row(fields, grid, i));
  return r;
}

double endpoint_flux(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  double r = 0.0;
  for (int i = 0; i < grid.n_tau; ++i) {
    const double tau = i * grid.h_tau();
    r = std::max({r, max_abs(current_unchecked(ms, tau, 0.0).sigma), max_abs(current_unchecked(ms, tau, kPi).sigma)});
  }
  return r;
}

StringSuite run_string_suite(const ModeSpectrum& ms, const WorldsheetGrid& grid) {
  const WorldsheetGrid coarse{grid.n_tau / 2, grid.n_sigma / 2, grid.tau_span};
  if (coarse.n_tau < 2 || coarse.n_sigma < 2) throw std::invalid_argument("grid needs at least 4 nodes per direction");
  StringSuite s;
  s.divergence_coarse = divergence_residual(ms, coarse);
  s.divergence_fine = divergence_residual(ms, grid);
  s.divergence_ratio = s.divergence_coarse / s.divergence_fine;
  s.eom_coarse = eom_residual(ms, coarse);
  s.eom_fine = eom_residual(ms, grid);
  s.eom_ratio = s.eom_coarse / s.eom_fine;
  s.endpoint_flux = endpoint_flux(ms, grid);

  const CMatrix2 m0 = charge_density_coefficients(ms).at(0);
  const CMatrix2 q1 = integrated_charge(ms, 0.0, grid.n_sigma);
  const CMatrix2 q2 = integrated_charge(ms, 1.3, grid.n_sigma);
  s.charge = std::max(max_abs(q1 - m0), max_abs(q2 - m0));
  s.charge_independence = max_abs(q1 - q2);

  const double hs = grid.h_sigma();
  const int tau_samples = std::min(grid.n_tau, 64);
  const double tau_step = grid.tau_span / tau_samples;
  for (int i = 0; i < tau_samples; ++i) {
    const double tau = i * tau_step;
    for (int j = 0; j <= grid.n_sigma; j += std::max(1, grid.n_sigma / 64)) {
      const double sigma = j * hs;
      const CMatrix2 x = coordinates_extended(ms, {tau, sigma});
      s.evenness = std::max(s.evenness, max_abs(x - coordinates_extended(ms, {tau, -sigma})));
      s.hermiticity = std::max(s.hermiticity, max_abs(x - x.adjoint()));
    }
    for (double edge : {0.0, kPi}) {
      const CMatrix2 slope = (coordinates_extended(ms, {tau, edge + hs}) - coordinates_extended(ms, {tau, edge - hs})) / (2.0 * hs);
      s.endpoint_slope = std::max(s.endpoint_slope, max_abs(slope));
    }
  }
  return s;
}

double redshift(double t_emit, double t_obsv) {
  if (!(t_emit > 0.0)) throw NonpositiveTime("t_emit must be positive");
  if (!(t_obsv >= t_emit)) throw std::invalid_argument("t_obsv must not precede t_emit");
  return std::sqrt(t_obsv / t_emit) - 1.0;
}

double emission_bound(double dt, double p, double z_obsv) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0, 1)");
  if (!(dt >= 0.0)) throw std::invalid_argument("dt must be non-negative");
  if (!(z_obsv > 0.0)) throw std::invalid_argument("z_obsv must be positive");
  const double s = 1.0 + p * z_obsv;
  return dt / (s * s - 1.0);
}

}  // namespace cliffstring
