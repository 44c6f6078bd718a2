#pragma once

// Randomized identity sweeps. Trial inputs are drawn serially from one Rng;
// evaluation is data-parallel with max reductions, so results do not depend
// on the thread count. Each parallel kernel has a `_serial` twin used as the
// reference in tests and benchmarks.

#include <array>
#include <span>
#include <vector>

#include "cliffstring/lorentz.hpp"
#include "cliffstring/oct_matrix.hpp"
#include "cliffstring/octonion.hpp"
#include "cliffstring/random.hpp"
#include "cliffstring/string_modes.hpp"

namespace cliffstring {

struct OctonionPair {
  Octonion a;
  Octonion b;
};

std::vector<OctonionPair> random_octonion_pairs(Rng& rng, int count);

/// Relative residuals: |ab|^2 vs |a|^2 |b|^2, alternativity over |a|^2 |b|,
/// and (ab)* = b* a* over |a| |b|.
struct OctonionIdentityStats {
  double norm_composition = 0.0;
  double alternativity = 0.0;
  double conjugation = 0.0;
};

OctonionIdentityStats octonion_identity_sweep(std::span<const OctonionPair> pairs);
OctonionIdentityStats octonion_identity_sweep_serial(std::span<const OctonionPair> pairs);

/// (e1 e2) e4 - e1 (e2 e4) = 2 e7.
Octonion non_associativity_witness();

/// Hermitian n x n with entries uniform in [-1, 1] per coefficient.
OctHermitian random_hermitian(Rng& rng, int n);

/// Sets H_jj so that the diagonal residual of column j vanishes.
OctHermitian inject_degenerate_pivot(const OctHermitian& h, int j);

/// Sizes uniform in 1..max_n; every other matrix gets one degenerate pivot.
std::vector<OctHermitian> random_resolve_batch(Rng& rng, int count, int max_n = 6);

struct ResolveStats {
  double max_residual = 0.0;
  int degenerate_pivots = 0;
  int negative_pivots = 0;
};

ResolveStats resolve_sweep(std::span<const OctHermitian> batch);
ResolveStats resolve_sweep_serial(std::span<const OctHermitian> batch);

std::vector<std::array<double, 4>> random_spacetime_points(Rng& rng, int count);

/// x -> c -> X -> x round trip and max |c^A . c^B|.
struct SpacetimeStats {
  double roundtrip = 0.0;
  double isotropy = 0.0;
};

SpacetimeStats spacetime_sweep(std::span<const std::array<double, 4>> points);
SpacetimeStats spacetime_sweep_serial(std::span<const std::array<double, 4>> points);

struct LorentzTrial {
  NestedTransform transform;
  std::array<double, 10> x{};
  OctSpinor v;
  OctSpinor chi;
  OctSpinor psi;
};

/// Nest depths uniform in 1..max_depth. The first factor of trial i lives in
/// subspace e_{i mod 7 + 1}, so any 7 consecutive trials touch every subspace.
std::vector<LorentzTrial> random_lorentz_trials(Rng& rng, int count, int max_depth);

struct LorentzStats {
  double determinant = 0.0;      // relative change of det X
  double minkowski_norm = 0.0;   // relative change of x.x
  double compatibility = 0.0;    // every factor, spinor v
  double contraction = 0.0;      // every factor, chi and psi
  std::array<int, 8> subspace_hits{};  // factors per subspace, index 0 = real
  int reflections = 0;
  int max_depth = 0;
};

LorentzStats lorentz_sweep(std::span<const LorentzTrial> trials);
LorentzStats lorentz_sweep_serial(std::span<const LorentzTrial> trials);

/// Max compatibility residual of [[1, t e_i], [t e_j, 1]], i != j, over random spinors.
double mixed_subspace_control(Rng& rng, int count);

/// Complex Hermitian 2 x 2 with entries uniform in [-scale, scale].
CMatrix2 random_complex_hermitian(Rng& rng, double scale = 1.0);

/// Valid spectrum with modes +-1..max_mode, A_{-n,n} = A_{n,-n}^dag and
/// amplitudes decaying as 1/n.
ModeSpectrum random_spectrum(Rng& rng, int max_mode, PhysicalConstants constants = {});

}  // namespace cliffstring
