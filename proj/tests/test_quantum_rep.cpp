#include <gtest/gtest.h>

#include <Eigen/Geometry>
#include <cmath>
#include <map>

#include "cliffstring/minkowski.hpp"
#include "cliffstring/quantum_rep.hpp"
#include "support.hpp"

namespace cliffstring {
namespace {

using Complex = std::complex<double>;
using Exponents = PolyBasis::Exponents;
using Poly = std::map<Exponents, Complex>;
using testing::max_abs;
const Complex kI(0.0, 1.0);

// Sparse polynomials, independent of the matrix representation.
Poly times_x(const Poly& p, int mu) {
  Poly out;
  for (const auto& [key, c] : p) {
    Exponents e = key;
    e[static_cast<std::size_t>(mu)] += 1;
    out[e] += c;
  }
  return out;
}

// R_mu = -i hbar eta_{mu mu} d/dx_mu.
Poly apply_r(const Poly& p, int mu, double hbar) {
  Poly out;
  for (const auto& [key, c] : p) {
    Exponents e = key;
    const int k = e[static_cast<std::size_t>(mu)];
    if (k == 0) continue;
    e[static_cast<std::size_t>(mu)] = k - 1;
    out[e] += -kI * hbar * kEta4[static_cast<std::size_t>(mu)] * static_cast<double>(k) * c;
  }
  return out;
}

Eigen::VectorXcd to_vector(const Poly& p, const PolyBasis& basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dim());
  for (const auto& [e, c] : p) {
    const int i = basis.index(e);
    if (i < 0) throw std::out_of_range("monomial beyond the degree bound");
    v(i) += c;
  }
  return v;
}

Eigen::VectorXcd unit(const PolyBasis& basis, const Exponents& e) { return to_vector({{e, 1.0}}, basis); }

TEST(PolyBasis, Layout) {
  const PolyBasis b(3);
  EXPECT_EQ(b.dim(), 35);      // C(3 + 4, 4)
  EXPECT_EQ(b.safe_dim(), 15);  // degree <= 2
  for (int i = 0; i < b.dim(); ++i) {
    const auto& e = b.monomial(i);
    EXPECT_EQ(b.index(e), i);
    EXPECT_EQ(e[0] + e[1] + e[2] + e[3] < 3, i < b.safe_dim());
  }
  EXPECT_EQ(b.index({4, 0, 0, 0}), -1);
  EXPECT_THROW(PolyBasis(-1), std::invalid_argument);
}

TEST(Canonical, MatchesPolynomialOracle) {
  const double hbar = 0.7;
  const PolyBasis basis(4);
  const CanonicalPair qr = build_canonical(basis, hbar);
  for (int i = 0; i < basis.safe_dim(); ++i) {
    const Poly p{{basis.monomial(i), 1.0}};
    for (int mu = 0; mu < 4; ++mu) {
      const auto m = static_cast<std::size_t>(mu);
      EXPECT_LE(max_abs(qr.q[m].m.col(i) - to_vector(times_x(p, mu), basis)), 0.0);
      EXPECT_LE(max_abs(qr.r[m].m.col(i) - to_vector(apply_r(p, mu, hbar), basis)), 1e-15);
    }
  }
  EXPECT_THROW(build_canonical(PolyBasis(1), 1.0), std::invalid_argument);
  EXPECT_THROW(build_canonical(basis, 0.0), std::invalid_argument);
}

TEST(Canonical, WorkedCommutators) {
  const double hbar = 1.0;
  const PolyBasis basis(3);
  const CanonicalPair qr = build_canonical(basis, hbar);
  const OpMatrix c00 = commutator_safe(qr.q[0].m, qr.r[0].m, basis);
  EXPECT_LE(max_abs(c00 * Eigen::VectorXcd::Unit(basis.safe_dim(), basis.index({0, 0, 0, 0})) -
                    kI * hbar * unit(basis, {0, 0, 0, 0})), 1e-15);
  // [Q1, R1] x2 = i hbar eta_11 x2 = -i hbar x2.
  const OpMatrix c11 = commutator_safe(qr.q[1].m, qr.r[1].m, basis);
  EXPECT_LE(max_abs(c11 * Eigen::VectorXcd::Unit(basis.safe_dim(), basis.index({0, 0, 1, 0})) +
                    kI * hbar * unit(basis, {0, 0, 1, 0})), 1e-15);
}

TEST(Canonical, ExhaustiveSweep) {
  const PolyBasis basis(6);
  EXPECT_EQ(canonical_residual(build_canonical(basis, 1.0), basis, 1.0), 0.0);
  // 0.3 is not a binary fraction, so k * 0.3 - (k - 1) * 0.3 rounds.
  EXPECT_LE(canonical_residual(build_canonical(basis, 0.3), basis, 0.3), 1e-15);
}

TEST(Quaternion, TableMatchesHamiltonProduct) {
  auto as_eigen = [](QuatUnit u) {
    Eigen::Quaterniond q(0, 0, 0, 0);
    q.coeffs()(u.unit == Quat::One ? 3 : static_cast<int>(u.unit) - 1) = u.sign;
    return q;
  };
  for (Quat a : {Quat::One, Quat::I, Quat::J, Quat::K}) {
    for (Quat b : {Quat::One, Quat::I, Quat::J, Quat::K}) {
      const QuatUnit got = QuatUnit{a, 1} * QuatUnit{b, 1};
      const Eigen::Quaterniond expected = as_eigen({a, 1}) * as_eigen({b, 1});
      EXPECT_TRUE(expected.coeffs().isApprox(as_eigen(got).coeffs()));
    }
  }
  EXPECT_EQ((QuatUnit{Quat::J, 1} * QuatUnit{Quat::K, 1}).unit, Quat::I);
}

TEST(Quaternion, CollapseRejectsJAndK) {
  const OpMatrix one = OpMatrix::Identity(2, 2);
  EXPECT_THROW(collapse_complex(QuatOperator({Quat::J, 1}, one)), std::invalid_argument);
  EXPECT_LE(max_abs(collapse_complex(QuatOperator({Quat::I, -1}, one)) + kI * one), 0.0);
}

TEST(MixedAlgebra, WorkedExamples) {
  const double hbar = 1.0;
  const PolyBasis basis(4);
  const QuatMapping ak = quaternion_mapping(build_canonical(basis, hbar));
  const Eigen::Index s = basis.safe_dim();

  const QuatOperator aa = multiply(ak.a[0], ak.a[1], s) - multiply(ak.a[1], ak.a[0], s);
  const Eigen::VectorXcd x0x1 = Eigen::VectorXcd::Unit(s, basis.index({1, 1, 0, 0}));
  EXPECT_LE(max_abs(collapse_complex(aa) * x0x1), 0.0);

  // {A_0, K_0} 1 = -hbar eta_00.
  const QuatOperator anti = multiply(ak.a[0], ak.k[0], s) + multiply(ak.k[0], ak.a[0], s);
  const Eigen::VectorXcd one = Eigen::VectorXcd::Unit(s, basis.index({0, 0, 0, 0}));
  EXPECT_LE(max_abs(collapse_complex(anti) * one + hbar * unit(basis, {0, 0, 0, 0})), 1e-15);
}

TEST(MixedAlgebra, ExhaustiveSweep) {
  const PolyBasis basis(6);
  EXPECT_LE(mixed_algebra_residual(quaternion_mapping(build_canonical(basis, 1.0)), basis, 1.0), 1e-12);
}

SpinorOperators zero_operators(int dim) {
  SpinorOperators z;
  for (auto& row : z) {
    for (auto& x : row) x = OpMatrix::Zero(dim, dim);
  }
  return z;
}

TEST(LorentzClosure, ZeroOperators) {
  const PolyBasis basis(3);
  EXPECT_EQ(lorentz_closure_residual(zero_operators(basis.dim()), basis, 1.0), 0.0);
}

TEST(LorentzClosure, RoutesAgreeAndClose) {
  const QuantumModel model(5, 1.0);
  const SpinorOperators direct = m0_operators(model);
  const SpinorOperators routed = m0_from_quaternions(model);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) EXPECT_LE(max_abs(direct[a][b] - routed[a][b]), 1e-14);
  }
  const SpinorOperators j = symmetrize(direct);
  EXPECT_LE(lorentz_closure_residual(j, model.basis, model.hbar), 1e-10);
  EXPECT_LE(dotted_residual(j, symmetrize(m0_dagger(model)), model.basis), 1e-10);
}

TEST(LorentzClosure, SingleComponentByHand) {
  // All four terms of [J_11, J_22] reduce to eps_21 J_12, so the commutator is -4 i hbar J_12.
  const QuantumModel model(5, 1.0);
  const SpinorOperators j = symmetrize(m0_operators(model));
  const OpMatrix lhs = commutator_safe(j[0][0], j[1][1], model.basis);
  const OpMatrix rhs = (-4.0 * kI * model.hbar) * j[0][1].leftCols(model.basis.safe_dim());
  EXPECT_GT(max_abs(rhs), 0.1);
  EXPECT_LE(max_abs(lhs - rhs), 1e-12);
}

TEST(LorentzClosure, PrintedOrderClosesWithConjugateSign) {
  const QuantumModel model(5, 1.0);
  const SpinorOperators printed = symmetrize(m0_operators(model, Contraction::Printed));
  EXPECT_LE(lorentz_closure_residual(printed, model.basis, model.hbar, -1.0), 1e-10);
  EXPECT_GT(lorentz_closure_residual(printed, model.basis, model.hbar, 1.0), 0.1);
}

TEST(LorentzClosure, SerialMatchesParallel) {
  const QuantumModel model(5, 1.3);
  const SpinorOperators j = symmetrize(m0_operators(model));
  EXPECT_EQ(lorentz_closure_residual(j, model.basis, model.hbar),
            lorentz_closure_residual_serial(j, model.basis, model.hbar));
  const TensorOperators m = tensor_form(j, symmetrize(m0_dagger(model)));
  EXPECT_EQ(tensor_closure_residual(m, model.basis, model.hbar), tensor_closure_residual_serial(m, model.basis, model.hbar));
}

TEST(ThreeVector, ZeroInput) {
  const int dim = PolyBasis(3).dim();
  const ThreeVector t = three_vector_form(zero_operators(dim), zero_operators(dim));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(max_abs(t.n[i]), 0.0);
    EXPECT_EQ(max_abs(t.n_dagger[i]), 0.0);
  }
  const TensorOperators m = tensor_form(zero_operators(dim), zero_operators(dim));
  for (const auto& row : m) {
    for (const auto& x : row) EXPECT_EQ(max_abs(x), 0.0);
  }
}

TEST(ThreeVector, CommutatorTable) {
  const QuantumModel model(6, 1.0);
  const SpinorOperators j = symmetrize(m0_operators(model));
  const SpinorOperators jd = symmetrize(m0_dagger(model));
  EXPECT_LE(three_vector_residual(three_vector_form(j, jd), model.basis, model.hbar), 1e-10);
}

TEST(TensorForm, AntisymmetricAndInvertible) {
  const QuantumModel model(4, 1.0);
  const SpinorOperators j = symmetrize(m0_operators(model));
  const TensorOperators m = tensor_form(j, symmetrize(m0_dagger(model)));
  EXPECT_LE(tensor_antisymmetry_residual(m), 1e-14);
  const SpinorOperators back = spinor_from_tensor(m);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) EXPECT_LE(max_abs(back[a][b] - j[a][b]), 1e-13);
  }
  EXPECT_LE(tensor_closure_residual(m, model.basis, model.hbar), 1e-10);
}

TEST(Jz, MatchesAngularMomentumOracle) {
  // J^z = Q1 R2 - Q2 R1 = i hbar (x1 d2 - x2 d1).
  const double hbar = 0.9;
  const QuantumModel model(4, hbar);
  const OpMatrix jz = jz_operator(model);
  for (int i = 0; i < model.basis.safe_dim(); ++i) {
    const Poly p{{model.basis.monomial(i), 1.0}};
    Poly expected = times_x(apply_r(p, 2, hbar), 1);
    for (const auto& [e, c] : times_x(apply_r(p, 1, hbar), 2)) expected[e] -= c;
    EXPECT_LE(max_abs(jz.col(i) - to_vector(expected, model.basis)), 1e-14);
  }
}

TEST(Jz, Spectrum) {
  const auto constants = jz_spectrum(0, 1.0);
  ASSERT_EQ(constants.size(), 1u);
  EXPECT_LE(std::abs(constants[0]), 1e-15);

  const double hbar = 2.0;
  const auto linear = jz_spectrum_homogeneous(1, hbar);
  ASSERT_EQ(linear.size(), 2u);
  EXPECT_LE(std::abs(linear[0] + hbar), 1e-14);
  EXPECT_LE(std::abs(linear[1] - hbar), 1e-14);

  const auto up_to_four = jz_spectrum(4, 1.0);
  EXPECT_EQ(up_to_four.size(), 15u);
  EXPECT_LE(integrality_residual(up_to_four, 1.0), 1e-9);
  for (const Complex z : up_to_four) {
    EXPECT_LE(std::abs(z.real()), 4.0 + 1e-9);
    EXPECT_LE(std::abs(z.imag()), 1e-9);
  }
}

TEST(Suite, AllRelationsAtDegreeSix) {
  const QuantumSuite s = run_quantum_suite(6, 1.0, 4);
  EXPECT_EQ(s.canonical, 0.0);
  EXPECT_LE(s.mixed, 1e-10);
  EXPECT_LE(s.m0_routes, 1e-10);
  EXPECT_LE(s.closure, 1e-10);
  EXPECT_LE(s.dotted, 1e-10);
  EXPECT_LE(s.three_vector, 1e-10);
  EXPECT_LE(s.jz_three_vector, 1e-10);
  EXPECT_LE(s.tensor_closure, 1e-10);
  EXPECT_LE(s.jz_integrality, 1e-9);
  EXPECT_LE(s.closure_printed_conjugate, 1e-10);
  EXPECT_GT(s.closure_printed_plus, 0.1);
}

}  // namespace
}  // namespace cliffstring
