#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "cliffstring/errors.hpp"
#include "cliffstring/octonion.hpp"
#include "cliffstring/random.hpp"
#include "support.hpp"

namespace cliffstring {
namespace {

using testing::oct;

// Cayley-Dickson doubling on plain coefficient vectors, built up from the reals:
// (a, b)(c, d) = (ac - d* b, da + b c*). Shares nothing with the frozen table.
std::vector<double> cd_conj(std::vector<double> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

std::vector<double> cd_mul(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const std::vector<double> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const std::vector<double> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const auto ac = cd_mul(a, c);
  const auto dsb = cd_mul(cd_conj(d), b);
  const auto da = cd_mul(d, a);
  const auto bcs = cd_mul(b, cd_conj(c));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - dsb[i];
    out[h + i] = da[i] + bcs[i];
  }
  return out;
}

std::vector<double> coeffs(const Octonion& z) { return {z.coefficients().begin(), z.coefficients().end()}; }

TEST(Octonion, TableMatchesIndependentDoubling) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto expected = cd_mul(coeffs(Octonion::unit(i)), coeffs(Octonion::unit(j)));
      const auto got = coeffs(Octonion::unit(i) * Octonion::unit(j));
      for (int k = 0; k < 8; ++k) EXPECT_EQ(got[k], expected[k]) << "e" << i << " e" << j << " coefficient " << k;
    }
  }
}

TEST(Octonion, RandomProductsMatchDoubling) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    const auto expected = cd_mul(coeffs(a), coeffs(b));
    const auto got = coeffs(a * b);
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(got[k], expected[k], 1e-14);
  }
}

TEST(Octonion, UnitsSquareToMinusOne) {
  for (int k = 1; k < 8; ++k) EXPECT_EQ(Octonion::unit(k) * Octonion::unit(k), Octonion(-1.0)) << "e" << k;
}

TEST(Octonion, OneIsTwoSidedIdentity) {
  const Octonion z = oct({{0, 0.3}, {2, -1.5}, {7, 2.0}});
  EXPECT_EQ(Octonion(1.0) * z, z);
  EXPECT_EQ(z * Octonion(1.0), z);
}

TEST(Octonion, DocumentedProducts) {
  EXPECT_EQ(Octonion::unit(1) * Octonion::unit(2), Octonion::unit(3));
  EXPECT_EQ(Octonion::unit(1) * Octonion::unit(4), Octonion::unit(5));
  EXPECT_EQ(Octonion::unit(2) * Octonion::unit(4), Octonion::unit(6));
  EXPECT_EQ(Octonion::unit(3) * Octonion::unit(4), Octonion::unit(7));
  // Distinct imaginary units anticommute.
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      EXPECT_EQ(Octonion::unit(i) * Octonion::unit(j), -(Octonion::unit(j) * Octonion::unit(i)));
    }
  }
}

TEST(Octonion, Conjugation) {
  EXPECT_EQ(conj(Octonion(1.0)), Octonion(1.0));
  EXPECT_EQ(conj(Octonion::unit(5)), -Octonion::unit(5));
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion();
    EXPECT_LE(max_abs(conj(a * b) - conj(b) * conj(a)), 1e-14);
    EXPECT_EQ(conj(conj(a)), a);
  }
}

TEST(Octonion, Norm) {
  EXPECT_EQ(norm(Octonion()), 0.0);
  EXPECT_EQ(norm(Octonion::unit(7)), 1.0);
  EXPECT_DOUBLE_EQ(norm(oct({{0, 3.0}, {2, 4.0}})), 5.0);
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = rng.octonion(2.0), b = rng.octonion(2.0);
    EXPECT_NEAR(norm(a * b), norm(a) * norm(b), 1e-13 * (1.0 + norm(a) * norm(b)));
    // z z* is the real number |z|^2.
    EXPECT_LE(max_abs(a * conj(a) - Octonion(norm_squared(a))), 1e-14 * (1.0 + norm_squared(a)));
  }
}

TEST(Octonion, SubspaceMembership) {
  EXPECT_TRUE(in_subspace(oct({{0, 2.0}, {4, 3.0}}), SubspaceIndex(4)));
  EXPECT_FALSE(in_subspace(oct({{1, 1.0}, {2, 1.0}}), SubspaceIndex(1)));
  EXPECT_TRUE(in_subspace(oct({{0, 1.0}, {3, 1e-15}}), SubspaceIndex(1)));
  EXPECT_FALSE(in_subspace(oct({{0, 1.0}, {3, 1e-9}}), SubspaceIndex(1)));
  EXPECT_TRUE(in_subspace(Octonion(4.0), SubspaceIndex(0)));
  EXPECT_THROW(SubspaceIndex(8), std::out_of_range);
  EXPECT_THROW(SubspaceIndex(-1), std::out_of_range);
}

TEST(Octonion, ComplexSubspaceIsAField) {
  Rng rng(9);
  for (int k = 1; k < 8; ++k) {
    const SubspaceIndex s(k);
    const std::complex<double> w1 = rng.complex(), w2 = rng.complex();
    const Octonion z = from_complex(w1, s) * from_complex(w2, s);
    EXPECT_TRUE(in_subspace(z, s));
    EXPECT_LE(std::abs(to_complex(z, s) - w1 * w2), 1e-15);
  }
}

TEST(Octonion, Alternativity) {
  EXPECT_EQ(alternativity_residual(Octonion::unit(1), Octonion::unit(2)), 0.0);
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) EXPECT_LE(alternativity_residual(rng.octonion(), rng.octonion()), 1e-14);
}

TEST(Octonion, NonAssociativityWitness) {
  const Octonion w = associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4));
  EXPECT_EQ(w, 2.0 * Octonion::unit(7));
  // The quaternion subalgebra span(1, e1, e2, e3) is associative.
  EXPECT_EQ(associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(3)), Octonion());
}

TEST(Octonion, AssociatorIsAlternating) {
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = rng.octonion(), b = rng.octonion(), c = rng.octonion();
    EXPECT_LE(max_abs(associator(a, b, c) + associator(b, a, c)), 1e-14);
    EXPECT_LE(max_abs(associator(a, b, c) + associator(a, c, b)), 1e-14);
  }
}

}  // namespace
}  // namespace cliffstring
