#include "cliffstring/lorentz.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "cliffstring/errors.hpp"
#include "cliffstring/minkowski.hpp"

namespace cliffstring {

namespace {

using Complex = std::complex<double>;

// sinh(mu)/mu, series near zero.
Complex sinhc(Complex mu) {
  if (std::abs(mu) < 1e-4) {
    const Complex m2 = mu * mu;
    return 1.0 + m2 / 6.0 + m2 * m2 / 120.0;
  }
  return std::sinh(mu) / mu;
}

}  // namespace

int common_subspace(const OctMatrix2& m, double tol) {
  int found = 0;
  for (const auto& z : m.e) {
    for (int i = 1; i < 8; ++i) {
      if (std::abs(z[i]) <= tol) continue;
      if (found != 0 && found != i) {
        std::ostringstream msg;
        msg << "entries use both e" << found << " and e" << i;
        throw MixedSubspace(msg.str());
      }
      found = i;
    }
  }
  return found;
}

LorentzFactor LorentzFactor::make(const OctMatrix2& generator, double t) {
  const SubspaceIndex k(common_subspace(generator));
  if (max_abs(generator(0, 0) + generator(1, 1)) > kSubspaceTolerance) {
    throw std::invalid_argument("Lorentz generator must be traceless");
  }
  Complex g[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g[i][j] = t * to_complex(generator(i, j), k);
  }
  // Traceless: G^2 = -det(G) I, so exp(G) = cosh(mu) I + sinh(mu)/mu G with mu^2 = -det(G).
  const Complex mu = std::sqrt(-(g[0][0] * g[1][1] - g[0][1] * g[1][0]));
  const Complex ch = std::cosh(mu);
  const Complex sc = sinhc(mu);
  OctMatrix2 s;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex w = sc * g[i][j] + (i == j ? ch : Complex{});
      // A real generator has a real exponential; drop the round-off imaginary part.
      if (k.value() == 0) w = w.real();
      s(i, j) = from_complex(w, k);
    }
  }
  return from_matrix(s);
}

LorentzFactor LorentzFactor::reflection() {
  OctMatrix2 s;
  s(0, 0) = Octonion(1.0);
  s(1, 1) = Octonion(-1.0);
  return LorentzFactor(s, 0, -1.0);
}

LorentzFactor LorentzFactor::from_matrix(const OctMatrix2& s) {
  const int k = common_subspace(s);
  const Octonion d = cliffstring::det(s);
  if (max_abs(d.imaginary()) > kDeterminantTolerance) throw std::invalid_argument("det(S) is not real");
  const double re = d.real();
  if (std::abs(re - 1.0) > kDeterminantTolerance && std::abs(re + 1.0) > kDeterminantTolerance) {
    throw std::invalid_argument("det(S) must be +1 or -1");
  }
  return LorentzFactor(s, k, re > 0 ? 1.0 : -1.0);
}

LorentzFactor LorentzFactor::unchecked(const OctMatrix2& s) {
  return LorentzFactor(s, 0, cliffstring::det(s).real());
}

OctMatrix2 LorentzFactor::lowered() const {
  OctMatrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          const double w = epsilon(b, e) * epsilon(f, a);
          if (w != 0.0) out(a, b) += w * s_(f, e);
        }
      }
    }
  }
  return out;
}

namespace generators {

OctMatrix2 boost() {
  OctMatrix2 g;
  g(0, 0) = Octonion(0.5);
  g(1, 1) = Octonion(-0.5);
  return g;
}

OctMatrix2 real_rotation() {
  OctMatrix2 g;
  g(0, 1) = Octonion(0.5);
  g(1, 0) = Octonion(-0.5);
  return g;
}

OctMatrix2 rotation(int k) {
  OctMatrix2 g;
  g(0, 1) = 0.5 * Octonion::unit(k);
  g(1, 0) = 0.5 * Octonion::unit(k);
  return g;
}

OctMatrix2 subspace_boost(int k) {
  OctMatrix2 g;
  g(0, 1) = 0.5 * Octonion::unit(k);
  g(1, 0) = -0.5 * Octonion::unit(k);
  return g;
}

}  // namespace generators

OctMatrix2 act_vector(const LorentzFactor& f, const OctMatrix2& x) {
  return (f.matrix() * x) * dagger(f.matrix());
}

OctHermitian act_vector(const NestedTransform& t, const OctHermitian& x) {
  OctMatrix2 m = OctMatrix2::from(x);
  for (const auto& f : t.factors) m = act_vector(f, m);
  return hermitian_part(m);
}

OctSpinor act_spinor(const LorentzFactor& f, const OctSpinor& v) {
  const auto& s = f.matrix();
  return {s(0, 0) * v[0] + s(0, 1) * v[1], s(1, 0) * v[0] + s(1, 1) * v[1]};
}

SpinorPair act_spinor(const LorentzFactor& f, const SpinorPair& v) {
  const auto& s = f.matrix();
  SpinorPair out{TensorVector(v[0].rank()), TensorVector(v[0].rank())};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Octonion sab = s(a, b);
      out[static_cast<std::size_t>(a)] += v[static_cast<std::size_t>(b)].map_coefficients([&](const Octonion& z) { return sab * z; });
    }
  }
  return out;
}

OctSpinor act_cospinor(const LorentzFactor& f, const OctSpinor& w) {
  const OctMatrix2 l = f.lowered();
  return {-(w[0] * l(0, 0) + w[1] * l(0, 1)), -(w[0] * l(1, 0) + w[1] * l(1, 1))};
}

SpinorPair act_cospinor(const LorentzFactor& f, const SpinorPair& w) {
  const OctMatrix2 l = f.lowered();
  SpinorPair out{TensorVector(w[0].rank()), TensorVector(w[0].rank())};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Octonion lab = l(a, b);
      out[static_cast<std::size_t>(a)] += w[static_cast<std::size_t>(b)].map_coefficients([&](const Octonion& z) { return -(z * lab); });
    }
  }
  return out;
}

double compatibility_residual(const LorentzFactor& f, const OctSpinor& v) {
  const OctSpinor sv = act_spinor(f, v);
  OctMatrix2 outer_transformed;
  OctMatrix2 outer;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      outer_transformed(i, j) = sv[static_cast<std::size_t>(i)] * conj(sv[static_cast<std::size_t>(j)]);
      outer(i, j) = v[static_cast<std::size_t>(i)] * conj(v[static_cast<std::size_t>(j)]);
    }
  }
  return max_entry_difference(outer_transformed, act_vector(f, outer));
}

double spinor_contraction(const OctSpinor& chi, const OctSpinor& psi) {
  return 2.0 * (chi[0] * psi[0] + chi[1] * psi[1]).real();
}

double contraction_invariance_residual(const LorentzFactor& f, const OctSpinor& chi, const OctSpinor& psi) {
  const double before = spinor_contraction(chi, psi);
  const double after = spinor_contraction(act_spinor(f, chi), act_cospinor(f, psi));
  return std::abs(after - f.det() * before);
}

double lagrangian_kinetic_density(const KineticSample& s) {
  double total = 0.0;
  for (std::size_t alpha = 0; alpha < 2; ++alpha) {
    for (std::size_t a = 0; a < 2; ++a) total += 2.0 * inner(s.dc[alpha][a], s.d[alpha][a]).real();
  }
  return total;
}

KineticSample transform(const LorentzFactor& f, const KineticSample& s) {
  KineticSample out = s;
  for (std::size_t alpha = 0; alpha < 2; ++alpha) {
    out.dc[alpha] = act_spinor(f, s.dc[alpha]);
    out.d[alpha] = act_cospinor(f, s.d[alpha]);
  }
  return out;
}

}  // namespace cliffstring
