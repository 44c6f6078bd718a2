#include "cliffstring/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "cliffstring/minkowski.hpp"
#include "cliffstring/resolve.hpp"

namespace cliffstring {

namespace {

OctonionIdentityStats octonion_identities(const OctonionPair& p) {
  const double na = norm_squared(p.a);
  const double nb = norm_squared(p.b);
  const Octonion ab = p.a * p.b;
  OctonionIdentityStats s;
  s.norm_composition = std::abs(norm_squared(ab) - na * nb) / std::max(na * nb, 1e-300);
  s.alternativity = alternativity_residual(p.a, p.b) / std::max(na * std::sqrt(nb), 1e-300);
  s.conjugation = norm(conj(ab) - conj(p.b) * conj(p.a)) / std::max(std::sqrt(na * nb), 1e-300);
  return s;
}

ResolveStats resolve_one(const OctHermitian& h) {
  const Resolution r = resolve_hermitian(h);
  ResolveStats s;
  s.max_residual = reconstruction_residual(h, r);
  for (int j = 0; j < r.size(); ++j) {
    if (r.pivot(j) == Pivot::Degenerate) ++s.degenerate_pivots;
    if (r.pivot(j) == Pivot::Negative) ++s.negative_pivots;
  }
  return s;
}

SpacetimeStats spacetime_one(const std::array<double, 4>& x) {
  const SpacetimeResolution sr = resolve_spacetime(x);
  const std::vector<double> back = matrix_to_vector(gram_matrix(sr.c), SigmaSet::four());
  SpacetimeStats s;
  for (std::size_t mu = 0; mu < 4; ++mu) s.roundtrip = std::max(s.roundtrip, std::abs(back[mu] - x[mu]));
  s.isotropy = sr.isotropy_residual;
  return s;
}

LorentzStats lorentz_one(const LorentzTrial& t) {
  LorentzStats s;
  const OctHermitian x = vector_to_matrix(t.x, SigmaSet::ten());
  const OctHermitian y = act_vector(t.transform, x);
  const double scale = std::max(1.0, y.max_entry() * y.max_entry());
  s.determinant = std::abs(det2(y) - det2(x)) / scale;
  const std::vector<double> xv(t.x.begin(), t.x.end());
  s.minkowski_norm = std::abs(minkowski_norm(matrix_to_vector(y, SigmaSet::ten())) - minkowski_norm(xv)) / scale;
  for (const auto& f : t.transform.factors) {
    s.compatibility = std::max(s.compatibility, compatibility_residual(f, t.v));
    s.contraction = std::max(s.contraction, contraction_invariance_residual(f, t.chi, t.psi));
  }
  return s;
}

void merge(OctonionIdentityStats& into, const OctonionIdentityStats& s) {
  into.norm_composition = std::max(into.norm_composition, s.norm_composition);
  into.alternativity = std::max(into.alternativity, s.alternativity);
  into.conjugation = std::max(into.conjugation, s.conjugation);
}

void count_factors(std::span<const LorentzTrial> trials, LorentzStats& s) {
  for (const auto& t : trials) {
    s.max_depth = std::max(s.max_depth, static_cast<int>(t.transform.factors.size()));
    for (const auto& f : t.transform.factors) {
      ++s.subspace_hits[static_cast<std::size_t>(f.subspace())];
      if (f.det() < 0) ++s.reflections;
    }
  }
}

LorentzFactor random_factor(Rng& rng, int forced_subspace) {
  const double t = rng.uniform(-1.0, 1.0);
  if (forced_subspace > 0) {
    return LorentzFactor::make(rng.integer(0, 1) == 0 ? generators::rotation(forced_subspace)
                                                      : generators::subspace_boost(forced_subspace),
                               t);
  }
  const int k = rng.integer(1, 7);
  switch (rng.integer(0, 4)) {
    case 0:
      return LorentzFactor::make(generators::boost(), t);
    case 1:
      return LorentzFactor::make(generators::real_rotation(), t);
    case 2:
      return LorentzFactor::make(generators::rotation(k), t);
    case 3:
      return LorentzFactor::make(generators::subspace_boost(k), t);
    default:
      return LorentzFactor::reflection();
  }
}

}  // namespace

std::vector<OctonionPair> random_octonion_pairs(Rng& rng, int count) {
  std::vector<OctonionPair> out(static_cast<std::size_t>(count));
  for (auto& p : out) {
    p.a = rng.octonion();
    p.b = rng.octonion();
  }
  return out;
}

OctonionIdentityStats octonion_identity_sweep_serial(std::span<const OctonionPair> pairs) {
  OctonionIdentityStats s;
  for (const auto& p : pairs) merge(s, octonion_identities(p));
  return s;
}

OctonionIdentityStats octonion_identity_sweep(std::span<const OctonionPair> pairs) {
  double nc = 0.0, alt = 0.0, cj = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for reduction(max : nc, alt, cj) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto s = octonion_identities(pairs[static_cast<std::size_t>(i)]);
    nc = std::max(nc, s.norm_composition);
    alt = std::max(alt, s.alternativity);
    cj = std::max(cj, s.conjugation);
  }
  return {nc, alt, cj};
}

Octonion non_associativity_witness() { return associator(Octonion::unit(1), Octonion::unit(2), Octonion::unit(4)); }

OctHermitian random_hermitian(Rng& rng, int n) {
  OctHermitian h(n);
  for (int i = 0; i < n; ++i) {
    h.set(i, i, Octonion(rng.uniform(-1.0, 1.0)));
    for (int j = i + 1; j < n; ++j) h.set(i, j, rng.octonion());
  }
  return h;
}

OctHermitian inject_degenerate_pivot(const OctHermitian& h, int j) {
  const Resolution r = resolve_hermitian(h);
  double s = 0.0;
  for (int k = 0; k < j; ++k) s += norm_squared(r.a(j, k)) - norm_squared(r.b(j, k));
  OctHermitian out = h;
  out.set(j, j, Octonion(s));
  return out;
}

std::vector<OctHermitian> random_resolve_batch(Rng& rng, int count, int max_n) {
  std::vector<OctHermitian> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = rng.integer(1, max_n);
    OctHermitian h = random_hermitian(rng, n);
    if (i % 2 == 1) h = inject_degenerate_pivot(h, rng.integer(0, n - 1));
    out.push_back(std::move(h));
  }
  return out;
}

ResolveStats resolve_sweep_serial(std::span<const OctHermitian> batch) {
  ResolveStats total;
  for (const auto& h : batch) {
    const auto s = resolve_one(h);
    total.max_residual = std::max(total.max_residual, s.max_residual);
    total.degenerate_pivots += s.degenerate_pivots;
    total.negative_pivots += s.negative_pivots;
  }
  return total;
}

ResolveStats resolve_sweep(std::span<const OctHermitian> batch) {
  double residual = 0.0;
  int degenerate = 0;
  int negative = 0;
  const auto n = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for reduction(max : residual) reduction(+ : degenerate, negative) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto s = resolve_one(batch[static_cast<std::size_t>(i)]);
    residual = std::max(residual, s.max_residual);
    degenerate += s.degenerate_pivots;
    negative += s.negative_pivots;
  }
  return {residual, degenerate, negative};
}

std::vector<std::array<double, 4>> random_spacetime_points(Rng& rng, int count) {
  std::vector<std::array<double, 4>> out(static_cast<std::size_t>(count));
  for (auto& x : out) {
    for (auto& c : x) c = rng.uniform(-1.0, 1.0);
  }
  return out;
}

SpacetimeStats spacetime_sweep_serial(std::span<const std::array<double, 4>> points) {
  SpacetimeStats total;
  for (const auto& x : points) {
    const auto s = spacetime_one(x);
    total.roundtrip = std::max(total.roundtrip, s.roundtrip);
    total.isotropy = std::max(total.isotropy, s.isotropy);
  }
  return total;
}

SpacetimeStats spacetime_sweep(std::span<const std::array<double, 4>> points) {
  double roundtrip = 0.0, isotropy = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for reduction(max : roundtrip, isotropy) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto s = spacetime_one(points[static_cast<std::size_t>(i)]);
    roundtrip = std::max(roundtrip, s.roundtrip);
    isotropy = std::max(isotropy, s.isotropy);
  }
  return {roundtrip, isotropy};
}

std::vector<LorentzTrial> random_lorentz_trials(Rng& rng, int count, int max_depth) {
  std::vector<LorentzTrial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    LorentzTrial t;
    const int depth = rng.integer(1, max_depth);
    for (int d = 0; d < depth; ++d) t.transform.factors.push_back(random_factor(rng, d == 0 ? i % 7 + 1 : 0));
    for (auto& c : t.x) c = rng.uniform(-1.0, 1.0);
    t.v = {rng.octonion(), rng.octonion()};
    t.chi = {rng.octonion(), rng.octonion()};
    t.psi = {rng.octonion(), rng.octonion()};
    out.push_back(std::move(t));
  }
  return out;
}

LorentzStats lorentz_sweep_serial(std::span<const LorentzTrial> trials) {
  LorentzStats total;
  for (const auto& t : trials) {
    const auto s = lorentz_one(t);
    total.determinant = std::max(total.determinant, s.determinant);
    total.minkowski_norm = std::max(total.minkowski_norm, s.minkowski_norm);
    total.compatibility = std::max(total.compatibility, s.compatibility);
    total.contraction = std::max(total.contraction, s.contraction);
  }
  count_factors(trials, total);
  return total;
}

LorentzStats lorentz_sweep(std::span<const LorentzTrial> trials) {
  double det = 0.0, mn = 0.0, compat = 0.0, contr = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(trials.size());
#pragma omp parallel for reduction(max : det, mn, compat, contr) schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto s = lorentz_one(trials[static_cast<std::size_t>(i)]);
    det = std::max(det, s.determinant);
    mn = std::max(mn, s.minkowski_norm);
    compat = std::max(compat, s.compatibility);
    contr = std::max(contr, s.contraction);
  }
  LorentzStats total;
  total.determinant = det;
  total.minkowski_norm = mn;
  total.compatibility = compat;
  total.contraction = contr;
  count_factors(trials, total);
  return total;
}

double mixed_subspace_control(Rng& rng, int count) {
  double worst = 0.0;
  for (int trial = 0; trial < count; ++trial) {
    const int i = rng.integer(1, 7);
    int j = rng.integer(1, 6);
    if (j >= i) ++j;
    const double t = rng.uniform(0.3, 1.0);
    OctMatrix2 s = OctMatrix2::identity();
    s(0, 1) = t * Octonion::unit(i);
    s(1, 0) = t * Octonion::unit(j);
    const OctSpinor v{rng.octonion(), rng.octonion()};
    worst = std::max(worst, compatibility_residual(LorentzFactor::unchecked(s), v));
  }
  return worst;
}

CMatrix2 random_complex_hermitian(Rng& rng, double scale) {
  const double a = rng.uniform(-scale, scale);
  const double b = rng.uniform(-scale, scale);
  const Complex c = rng.complex(scale);
  CMatrix2 m;
  m << a, c, std::conj(c), b;
  return m;
}

ModeSpectrum random_spectrum(Rng& rng, int max_mode, PhysicalConstants constants) {
  const CMatrix2 k = random_complex_hermitian(rng);
  const CMatrix2 c0 = random_complex_hermitian(rng);
  std::map<int, Mode> modes;
  for (int n = 1; n <= max_mode; ++n) {
    const double scale = 1.0 / n;
    CMatrix2 pair;
    pair << rng.complex(scale), rng.complex(scale), rng.complex(scale), rng.complex(scale);
    const CMatrix2 a_pos = random_complex_hermitian(rng, scale);
    const CMatrix2 a_neg = random_complex_hermitian(rng, scale);
    modes[n] = Mode{a_pos, pair};
    modes[-n] = Mode{a_neg, pair.adjoint()};
  }
  return ModeSpectrum(k, c0, std::move(modes), constants);
}

}  // namespace cliffstring
