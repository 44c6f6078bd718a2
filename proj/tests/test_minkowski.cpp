#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "cliffstring/errors.hpp"
#include "cliffstring/minkowski.hpp"
#include "cliffstring/random.hpp"
#include "support.hpp"

namespace cliffstring {
namespace {

using Complex = std::complex<double>;
using testing::max_abs;

std::vector<double> random_vector(Rng& rng, int dim) {
  std::vector<double> x(static_cast<std::size_t>(dim));
  for (auto& c : x) c = rng.uniform(-1.0, 1.0);
  return x;
}

TEST(Sigma, TenDimensionalSet) {
  std::vector<double> x(10, 0.0);
  x[0] = 1.0;
  const OctHermitian id = vector_to_matrix(x, SigmaSet::ten());
  EXPECT_EQ(id(0, 0), Octonion(1.0));
  EXPECT_EQ(id(1, 1), Octonion(1.0));
  EXPECT_EQ(id(0, 1), Octonion());

  // First octonionic direction: [[0, e1*], [e1, 0]] = [[0, -e1], [e1, 0]].
  x.assign(10, 0.0);
  x[3] = 1.0;
  const OctHermitian s = vector_to_matrix(x, SigmaSet::ten());
  EXPECT_EQ(s(0, 1), -Octonion::unit(1));
  EXPECT_EQ(s(1, 0), Octonion::unit(1));
  EXPECT_EQ(s(0, 0), Octonion());
}

TEST(Sigma, DimensionMismatch) {
  const std::vector<double> x(5, 0.0);
  EXPECT_THROW(vector_to_matrix(x, SigmaSet::four()), DimensionMismatch);
}

TEST(Sigma, MatrixToVector) {
  OctHermitian h(2);
  h.set(0, 0, Octonion(1.0));
  h.set(1, 1, Octonion(1.0));
  EXPECT_EQ(matrix_to_vector(h, SigmaSet::ten()), (std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  h.set(1, 1, Octonion(-1.0));
  EXPECT_EQ(matrix_to_vector(h, SigmaSet::ten()), (std::vector<double>{0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(Sigma, RoundTrip) {
  Rng rng(12);
  for (int dim : {4, 10}) {
    const SigmaSet& s = dim == 4 ? SigmaSet::four() : SigmaSet::ten();
    for (int t = 0; t < 1000; ++t) {
      const auto x = random_vector(rng, dim);
      const auto back = matrix_to_vector(vector_to_matrix(x, s), s);
      for (int mu = 0; mu < dim; ++mu) EXPECT_NEAR(back[static_cast<std::size_t>(mu)], x[static_cast<std::size_t>(mu)], 1e-14);
    }
  }
}

TEST(Determinant, IsMinkowskiNorm) {
  OctHermitian id(2);
  id.set(0, 0, Octonion(1.0));
  id.set(1, 1, Octonion(1.0));
  EXPECT_EQ(det2(id), 1.0);

  std::vector<double> x(4, 0.0);
  x[2] = 1.0;
  EXPECT_EQ(det2(vector_to_matrix(x, SigmaSet::four())), -1.0);

  Rng rng(13);
  for (int t = 0; t < 1000; ++t) {
    const auto y = random_vector(rng, 10);
    double expected = y[0] * y[0];
    for (std::size_t i = 1; i < y.size(); ++i) expected -= y[i] * y[i];
    EXPECT_NEAR(det2(vector_to_matrix(y, SigmaSet::ten())), expected, 1e-12);
    EXPECT_NEAR(minkowski_norm(y), expected, 1e-14);
  }
}

TEST(SpinorMetric, RaiseAndLower) {
  // V^1 = eps^{12} V_2 = V_2.
  const std::array<double, 2> lower{0.0, 1.0};
  EXPECT_EQ(raise_index(lower), (std::array<double, 2>{1.0, 0.0}));
  EXPECT_EQ(lower_index(raise_index(lower)), lower);
  const std::array<double, 2> upper{1.0, 0.0};
  EXPECT_EQ(raise_index(lower_index(upper)), upper);

  double contraction = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) contraction += epsilon(a, b) * epsilon(a, b);
  }
  EXPECT_EQ(contraction, 2.0);
  EXPECT_EQ(epsilon(0, 1), 1.0);
}

TEST(SpinorMetric, MatrixHelpersInvertEachOther) {
  Rng rng(14);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = rng.complex();
  EXPECT_LE(max_abs(raise_both(lower_both(m)) - m), 1e-15);
  EXPECT_LE(max_abs(lower_second(raise_second(m)) - m), 1e-15);
}

TEST(Pauli, CompletenessAndOrthogonality) {
  // sigma_mu^{AB} sigma^nu_{AB} = 2 delta and eta^{mu mu} sigma_mu^{AB} sigma_mu^{EF} = 2 eps^{AE} eps^{BF}.
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Complex dot = pauli_upper(mu).cwiseProduct(pauli_lower(nu)).sum();
      EXPECT_LE(std::abs(dot - Complex(mu == nu ? 2.0 : 0.0)), 1e-15) << mu << nu;
    }
  }
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          Complex s = 0.0;
          for (int mu = 0; mu < 4; ++mu) s += kEta4[static_cast<std::size_t>(mu)] * pauli_upper(mu)(a, b) * pauli_upper(mu)(e, f);
          EXPECT_LE(std::abs(s - 2.0 * epsilon(a, e) * epsilon(b, f)), 1e-15);
        }
      }
    }
  }
}

TEST(Pauli, ComplexVectorRoundTrip) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    std::array<Complex, 4> v;
    for (auto& c : v) c = rng.complex();
    const auto back = complex_matrix_to_vector(complex_vector_to_matrix(v));
    for (int mu = 0; mu < 4; ++mu) EXPECT_LE(std::abs(back[static_cast<std::size_t>(mu)] - v[static_cast<std::size_t>(mu)]), 1e-15);
  }
}

TEST(Pauli, FourDimensionalSetMatchesComplexPaulis) {
  // The octonionic 4D set is the complex set with i carried by e1.
  for (int mu = 0; mu < 4; ++mu) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const Octonion z = SigmaSet::four()[mu](a, b);
        EXPECT_EQ(to_complex(z, SubspaceIndex(1)), pauli_upper(mu)(a, b));
        EXPECT_TRUE(in_subspace(z, SubspaceIndex(1)));
      }
    }
  }
}

}  // namespace
}  // namespace cliffstring
