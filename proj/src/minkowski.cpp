#include "cliffstring/minkowski.hpp"

#include "cliffstring/errors.hpp"

namespace cliffstring {

namespace {

OctMatrix2 off_diagonal(const Octonion& lower_left) {
  OctMatrix2 m;
  m(0, 1) = conj(lower_left);
  m(1, 0) = lower_left;
  return m;
}

OctMatrix2 diagonal(double a, double b) {
  OctMatrix2 m;
  m(0, 0) = Octonion(a);
  m(1, 1) = Octonion(b);
  return m;
}

using Complex = std::complex<double>;

std::array<Eigen::Matrix2cd, 4> make_pauli_upper() {
  std::array<Eigen::Matrix2cd, 4> s;
  const Complex i(0.0, 1.0);
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -i, i, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

}  // namespace

const SigmaSet& SigmaSet::four() {
  static const SigmaSet set({diagonal(1, 1), off_diagonal(Octonion(1.0)), off_diagonal(Octonion::unit(1)),
                             diagonal(1, -1)});
  return set;
}

const SigmaSet& SigmaSet::ten() {
  static const SigmaSet set = [] {
    std::vector<OctMatrix2> m{diagonal(1, 1), diagonal(1, -1)};
    for (int k = 0; k < 8; ++k) m.push_back(off_diagonal(Octonion::unit(k)));
    return SigmaSet(std::move(m));
  }();
  return set;
}

OctHermitian vector_to_matrix(std::span<const double> x, const SigmaSet& sigma) {
  if (static_cast<int>(x.size()) != sigma.dim()) throw DimensionMismatch("vector length does not match sigma set");
  OctMatrix2 sum;
  for (int mu = 0; mu < sigma.dim(); ++mu) sum = sum + x[static_cast<std::size_t>(mu)] * sigma[mu];
  return hermitian_part(sum);
}

std::vector<double> matrix_to_vector(const OctHermitian& x, const SigmaSet& sigma) {
  if (x.size() != 2) throw DimensionMismatch("expected a 2x2 Hermitian matrix");
  std::vector<double> v(static_cast<std::size_t>(sigma.dim()));
  for (int mu = 0; mu < sigma.dim(); ++mu) {
    double trace = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) trace += (sigma[mu](a, b) * x(b, a)).real();
    }
    v[static_cast<std::size_t>(mu)] = 0.5 * trace;
  }
  return v;
}

double det2(const OctHermitian& x) {
  if (x.size() != 2) throw DimensionMismatch("det2 needs a 2x2 matrix");
  return x(0, 0).real() * x(1, 1).real() - norm_squared(x(0, 1));
}

double minkowski_norm(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i == 0 ? 1.0 : -1.0) * x[i] * x[i];
  return s;
}

Eigen::Matrix2d spinor_metric() {
  Eigen::Matrix2d e;
  e << epsilon(0, 0), epsilon(0, 1), epsilon(1, 0), epsilon(1, 1);
  return e;
}

// M_{AB} = M^{CD} eps_{CA} eps_{DB}
Eigen::Matrix2cd lower_both(const Eigen::Matrix2cd& upper) {
  const Eigen::Matrix2cd e = spinor_metric().cast<std::complex<double>>();
  return e.transpose() * upper * e;
}

// M^{AB} = eps^{AC} eps^{BD} M_{CD}
Eigen::Matrix2cd raise_both(const Eigen::Matrix2cd& lower) {
  const Eigen::Matrix2cd e = spinor_metric().cast<std::complex<double>>();
  return e * lower * e.transpose();
}

// M_A^{B} = eps^{BD} M_{AD}
Eigen::Matrix2cd raise_second(const Eigen::Matrix2cd& lower) {
  const Eigen::Matrix2cd e = spinor_metric().cast<std::complex<double>>();
  return lower * e.transpose();
}

// M_{AB} = M_A^{D} eps_{DB}
Eigen::Matrix2cd lower_second(const Eigen::Matrix2cd& upper) {
  const Eigen::Matrix2cd e = spinor_metric().cast<std::complex<double>>();
  return upper * e;
}

const Eigen::Matrix2cd& pauli_upper(int mu) {
  static const auto s = make_pauli_upper();
  return s.at(static_cast<std::size_t>(mu));
}

const Eigen::Matrix2cd& pauli_lower(int mu) {
  static const auto s = [] {
    std::array<Eigen::Matrix2cd, 4> out;
    for (int nu = 0; nu < 4; ++nu) out[static_cast<std::size_t>(nu)] = kEta4[static_cast<std::size_t>(nu)] * lower_both(pauli_upper(nu));
    return out;
  }();
  return s.at(static_cast<std::size_t>(mu));
}

Eigen::Matrix2cd complex_vector_to_matrix(const std::array<std::complex<double>, 4>& v) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  for (int mu = 0; mu < 4; ++mu) m += v[static_cast<std::size_t>(mu)] * pauli_upper(mu);
  return m;
}

std::array<std::complex<double>, 4> complex_matrix_to_vector(const Eigen::Matrix2cd& m) {
  std::array<std::complex<double>, 4> v;
  for (int mu = 0; mu < 4; ++mu) v[static_cast<std::size_t>(mu)] = 0.5 * pauli_lower(mu).cwiseProduct(m).sum();
  return v;
}

}  // namespace cliffstring
