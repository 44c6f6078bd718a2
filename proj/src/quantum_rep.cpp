#include "cliffstring/quantum_rep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cliffstring/minkowski.hpp"

namespace cliffstring {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

double eta(int mu, int nu) { return mu == nu ? kEta4[static_cast<std::size_t>(mu)] : 0.0; }

// Levi-Civita symbol on {0, 1, 2}.
double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

double max_abs(const OpMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

OpMatrix identity_safe(const PolyBasis& basis) { return OpMatrix::Identity(basis.dim(), basis.safe_dim()); }

// sum_{E,F} eps[E][F] sigma^mu_{A?} sigma^nu_{B?} with the dotted slots set by the order.
Complex contraction_sum(int a, int b, int mu, int nu, Contraction order) {
  Complex s = 0.0;
  for (int e = 0; e < 2; ++e) {
    for (int f = 0; f < 2; ++f) {
      const double w = epsilon(e, f);
      if (w == 0.0) continue;
      s += order == Contraction::Lowered ? w * pauli_lower(mu)(a, e) * pauli_lower(nu)(b, f)
                                          : w * pauli_lower(mu)(a, f) * pauli_lower(nu)(b, e);
    }
  }
  return s;
}

double closure_entry(const SpinorOperators& j, const PolyBasis& basis, double hbar, double sign, int combo) {
  const int a = (combo >> 3) & 1;
  const int b = (combo >> 2) & 1;
  const int e = (combo >> 1) & 1;
  const int f = combo & 1;
  const auto js = [&](int x, int y) { return j[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].leftCols(basis.safe_dim()); };
  const OpMatrix rhs = (kI * hbar * sign) * ((epsilon(f, b) * js(a, e) + epsilon(f, a) * js(b, e)) +
                                            (epsilon(e, b) * js(a, f) + epsilon(e, a) * js(b, f)));
  const OpMatrix lhs = commutator_safe(j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                                       j[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)], basis);
  return max_abs(lhs - rhs);
}

constexpr std::array<std::array<int, 2>, 6> kIndependentPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

double tensor_entry(const TensorOperators& m, const PolyBasis& basis, double hbar, int combo) {
  const auto [mu, nu] = kIndependentPairs[static_cast<std::size_t>(combo / 6)];
  const auto [rho, sg] = kIndependentPairs[static_cast<std::size_t>(combo % 6)];
  const auto ms = [&](int x, int y) { return m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].leftCols(basis.safe_dim()); };
  const OpMatrix rhs = (kI * hbar) * ((eta(nu, rho) * ms(mu, sg) - eta(mu, rho) * ms(nu, sg)) -
                                      (eta(nu, sg) * ms(mu, rho) - eta(mu, sg) * ms(nu, rho)));
  const OpMatrix lhs = commutator_safe(m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)],
                                       m[static_cast<std::size_t>(rho)][static_cast<std::size_t>(sg)], basis);
  return max_abs(lhs - rhs);
}

SpinorOperators zero_spinor(int dim) {
  SpinorOperators s;
  for (auto& row : s) {
    for (auto& x : row) x = OpMatrix::Zero(dim, dim);
  }
  return s;
}

std::vector<Complex> sorted_eigenvalues(const OpMatrix& m) {
  std::vector<Complex> out;
  if (m.rows() == 0) return out;
  Eigen::ComplexEigenSolver<OpMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  out.assign(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
  return out;
}

// J^z on the x1, x2 monomials selected by `keep`.
std::vector<Complex> jz_restricted(int n, double hbar, bool homogeneous) {
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  const QuantumModel model(std::max(n, 2), hbar);
  const OpMatrix jz = jz_operator(model);
  std::vector<int> rows;
  for (int i = 0; i < model.basis.dim(); ++i) {
    const auto& e = model.basis.monomial(i);
    const int d = e[1] + e[2];
    if (e[0] == 0 && e[3] == 0 && (homogeneous ? d == n : d <= n)) rows.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(rows.size());
  OpMatrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = jz(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(c)]);
  }
  return sorted_eigenvalues(sub);
}

}  // namespace

PolyBasis::PolyBasis(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("polynomial degree must be non-negative");
  for (int d = 0; d <= degree; ++d) {
    if (d == degree) safe_dim_ = static_cast<int>(monomials_.size());
    for (int a = d; a >= 0; --a) {
      for (int b = d - a; b >= 0; --b) {
        for (int c = d - a - b; c >= 0; --c) {
          const Exponents e{a, b, c, d - a - b - c};
          index_[e] = static_cast<int>(monomials_.size());
          monomials_.push_back(e);
        }
      }
    }
  }
}

int PolyBasis::index(const Exponents& e) const {
  const auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b) { return {a.m * b.m, a.shift + b.shift}; }

CanonicalPair build_canonical(const PolyBasis& basis, double hbar) {
  if (basis.degree() < 2) throw std::invalid_argument("degree bound must be at least 2");
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  const int n = basis.dim();
  CanonicalPair qr;
  for (int mu = 0; mu < 4; ++mu) {
    auto& q = qr.q[static_cast<std::size_t>(mu)];
    auto& r = qr.r[static_cast<std::size_t>(mu)];
    q = {OpMatrix::Zero(n, n), 1};
    r = {OpMatrix::Zero(n, n), -1};
    for (int i = 0; i < n; ++i) {
      auto e = basis.monomial(i);
      const int p = e[static_cast<std::size_t>(mu)];
      e[static_cast<std::size_t>(mu)] = p + 1;
      if (const int up = basis.index(e); up >= 0) q.m(up, i) = 1.0;
      if (p > 0) {
        e[static_cast<std::size_t>(mu)] = p - 1;
        r.m(basis.index(e), i) = -kI * hbar * eta(mu, mu) * static_cast<double>(p);
      }
    }
  }
  return qr;
}

double safe_residual(const OpMatrix& x, const PolyBasis& basis) { return max_abs(x.leftCols(basis.safe_dim())); }

OpMatrix commutator_safe(const OpMatrix& x, const OpMatrix& y, const PolyBasis& basis) {
  const Eigen::Index s = basis.safe_dim();
  return x * y.leftCols(s) - y * x.leftCols(s);
}

double canonical_residual(const CanonicalPair& qr, const PolyBasis& basis, double hbar) {
  double r = 0.0;
  const OpMatrix id = identity_safe(basis);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      r = std::max(r, max_abs(commutator_safe(qr.q[mu].m, qr.q[nu].m, basis)));
      r = std::max(r, max_abs(commutator_safe(qr.r[mu].m, qr.r[nu].m, basis)));
      const OpMatrix expected = (kI * hbar * eta(static_cast<int>(mu), static_cast<int>(nu))) * id;
      r = std::max(r, max_abs(commutator_safe(qr.q[mu].m, qr.r[nu].m, basis) - expected));
    }
  }
  return r;
}

QuatUnit operator*(QuatUnit a, QuatUnit b) {
  // kTable[x][y] = signed one-based index of unit_x * unit_y.
  static constexpr int kTable[4][4] = {{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}};
  const int t = kTable[static_cast<int>(a.unit)][static_cast<int>(b.unit)];
  return {static_cast<Quat>(std::abs(t) - 1), a.sign * b.sign * (t > 0 ? 1 : -1)};
}

QuatOperator::QuatOperator(QuatUnit tag, const OpMatrix& op) { parts_[static_cast<std::size_t>(tag.unit)] = tag.sign * op; }

void QuatOperator::add(Quat u, const OpMatrix& op) {
  auto& p = parts_[static_cast<std::size_t>(u)];
  if (p.size() == 0) {
    p = op;
  } else {
    p += op;
  }
}

QuatOperator multiply(const QuatOperator& a, const QuatOperator& b, Eigen::Index cols) {
  QuatOperator out;
  for (int u = 0; u < 4; ++u) {
    if (!a.has(static_cast<Quat>(u))) continue;
    for (int v = 0; v < 4; ++v) {
      if (!b.has(static_cast<Quat>(v))) continue;
      const QuatUnit t = QuatUnit{static_cast<Quat>(u), 1} * QuatUnit{static_cast<Quat>(v), 1};
      out.add(t.unit, static_cast<double>(t.sign) * (a.part(static_cast<Quat>(u)) * b.part(static_cast<Quat>(v)).leftCols(cols)));
    }
  }
  return out;
}

QuatOperator operator+(QuatOperator a, const QuatOperator& b) {
  for (int u = 0; u < 4; ++u) {
    if (b.has(static_cast<Quat>(u))) a.add(static_cast<Quat>(u), b.part(static_cast<Quat>(u)));
  }
  return a;
}

QuatOperator operator-(QuatOperator a, const QuatOperator& b) { return a + Complex(-1.0) * b; }

QuatOperator operator*(Complex s, QuatOperator a) {
  for (auto& p : a.parts_) p *= s;
  return a;
}

OpMatrix collapse_complex(const QuatOperator& q) {
  if (q.has(Quat::J) || q.has(Quat::K)) throw std::invalid_argument("cannot collapse j or k components to complex scalars");
  if (!q.has(Quat::One) && !q.has(Quat::I)) return {};
  if (!q.has(Quat::I)) return q.part(Quat::One);
  if (!q.has(Quat::One)) return kI * q.part(Quat::I);
  return q.part(Quat::One) + kI * q.part(Quat::I);
}

QuatMapping quaternion_mapping(const CanonicalPair& qr) {
  QuatMapping ak;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    ak.a[mu] = QuatOperator({Quat::J, 1}, qr.q[mu].m);
    ak.k[mu] = QuatOperator({Quat::K, 1}, qr.r[mu].m);
  }
  return ak;
}

double mixed_algebra_residual(const QuatMapping& ak, const PolyBasis& basis, double hbar) {
  const Eigen::Index s = basis.safe_dim();
  const OpMatrix id = identity_safe(basis);
  double r = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const QuatOperator aa = multiply(ak.a[mu], ak.a[nu], s) - multiply(ak.a[nu], ak.a[mu], s);
      const QuatOperator kk = multiply(ak.k[mu], ak.k[nu], s) - multiply(ak.k[nu], ak.k[mu], s);
      const QuatOperator anti = multiply(ak.a[mu], ak.k[nu], s) + multiply(ak.k[nu], ak.a[mu], s);
      const OpMatrix expected = (-hbar * eta(static_cast<int>(mu), static_cast<int>(nu))) * id;
      r = std::max({r, max_abs(collapse_complex(aa)), max_abs(collapse_complex(kk)),
                    max_abs(collapse_complex(anti) - expected)});
    }
  }
  return r;
}

Complex m0_coefficient(int a, int b, int mu, int nu, Contraction order) {
  // i from the definition times k j = -i from the quaternion tags.
  return (kI * -kI) * contraction_sum(a, b, mu, nu, order);
}

QuantumModel::QuantumModel(int degree, double hbar_value)
    : basis(degree), hbar(hbar_value), qr(build_canonical(basis, hbar_value)) {
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) rq[mu][nu] = qr.r[mu].m * qr.q[nu].m;
  }
}

SpinorOperators m0_operators(const QuantumModel& model, Contraction order) {
  SpinorOperators out = zero_spinor(model.basis.dim());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
          const Complex c = m0_coefficient(a, b, mu, nu, order);
          if (c != 0.0) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += c * model.rq[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
        }
      }
    }
  }
  return out;
}

SpinorOperators m0_from_quaternions(const QuantumModel& model, Contraction order) {
  const QuatMapping ak = quaternion_mapping(model.qr);
  // K_{AB} = sigma^mu_{AB} K_mu and A_{AB} = sigma^mu_{AB} A_mu.
  std::array<std::array<QuatOperator, 2>, 2> k_spinor;
  std::array<std::array<QuatOperator, 2>, 2> a_spinor;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      auto& ks = k_spinor[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      auto& as = a_spinor[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      for (int mu = 0; mu < 4; ++mu) {
        ks = ks + pauli_lower(mu)(x, y) * ak.k[static_cast<std::size_t>(mu)];
        as = as + pauli_lower(mu)(x, y) * ak.a[static_cast<std::size_t>(mu)];
      }
    }
  }
  const Eigen::Index dim = model.basis.dim();
  SpinorOperators out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      QuatOperator sum;
      for (int e = 0; e < 2; ++e) {
        for (int f = 0; f < 2; ++f) {
          const double w = epsilon(e, f);
          if (w == 0.0) continue;
          // Lowered: i eps^{EF} K_{AE} A_{BF}; Printed: i eps^{EF} K_{AF} A_{BE}.
          const int kd = order == Contraction::Lowered ? e : f;
          const int ad = order == Contraction::Lowered ? f : e;
          sum = sum + (kI * w) * multiply(k_spinor[static_cast<std::size_t>(a)][static_cast<std::size_t>(kd)],
                                          a_spinor[static_cast<std::size_t>(b)][static_cast<std::size_t>(ad)], dim);
        }
      }
      out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = collapse_complex(sum);
    }
  }
  return out;
}

SpinorOperators m0_dagger(const QuantumModel& model, Contraction order) {
  SpinorOperators out = zero_spinor(model.basis.dim());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
          const Complex c = std::conj(m0_coefficient(a, b, mu, nu, order));
          if (c != 0.0) {
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                c * (model.qr.q[static_cast<std::size_t>(nu)].m * model.qr.r[static_cast<std::size_t>(mu)].m);
          }
        }
      }
    }
  }
  return out;
}

SpinorOperators symmetrize(const SpinorOperators& m) {
  SpinorOperators out;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) out[a][b] = 0.5 * (m[a][b] + m[b][a]);
  }
  return out;
}

double lorentz_closure_residual_serial(const SpinorOperators& j, const PolyBasis& basis, double hbar, double sign) {
  double r = 0.0;
  for (int combo = 0; combo < 16; ++combo) r = std::max(r, closure_entry(j, basis, hbar, sign, combo));
  return r;
}

double lorentz_closure_residual(const SpinorOperators& j, const PolyBasis& basis, double hbar, double sign) {
  double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(dynamic)
  for (int combo = 0; combo < 16; ++combo) r = std::max(r, closure_entry(j, basis, hbar, sign, combo));
  return r;
}

double dotted_residual(const SpinorOperators& j, const SpinorOperators& jd, const PolyBasis& basis) {
  double r = 0.0;
  for (const auto& jr : j) {
    for (const auto& x : jr) {
      for (const auto& dr : jd) {
        for (const auto& y : dr) r = std::max(r, max_abs(commutator_safe(x, y, basis)));
      }
    }
  }
  return r;
}

ThreeVector three_vector_form(const SpinorOperators& j, const SpinorOperators& jd) {
  ThreeVector t;
  t.n[0] = (0.25 * kI) * (jd[0][0] - jd[1][1]);
  t.n[1] = 0.25 * (jd[0][0] + jd[1][1]);
  t.n[2] = (-0.5 * kI) * jd[0][1];
  t.n_dagger[0] = (-0.25 * kI) * (j[0][0] - j[1][1]);
  t.n_dagger[1] = 0.25 * (j[0][0] + j[1][1]);
  t.n_dagger[2] = (0.5 * kI) * j[0][1];
  return t;
}

double three_vector_residual(const ThreeVector& t, const PolyBasis& basis, double hbar) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      OpMatrix rhs = OpMatrix::Zero(basis.dim(), basis.safe_dim());
      for (int k = 0; k < 3; ++k) {
        const double e = levi_civita(i, j, k);
        if (e != 0.0) rhs += (kI * hbar * e) * t.n[static_cast<std::size_t>(k)].leftCols(basis.safe_dim());
      }
      r = std::max(r, max_abs(commutator_safe(t.n[static_cast<std::size_t>(i)], t.n[static_cast<std::size_t>(j)], basis) - rhs));
      r = std::max(r, max_abs(commutator_safe(t.n[static_cast<std::size_t>(i)], t.n_dagger[static_cast<std::size_t>(j)], basis)));
    }
  }
  return r;
}

TensorOperators tensor_form(const SpinorOperators& j, const SpinorOperators& jd) {
  const Eigen::Index dim = j[0][0].rows();
  TensorOperators m;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      OpMatrix sum = OpMatrix::Zero(dim, dim);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          for (int e = 0; e < 2; ++e) {
            for (int f = 0; f < 2; ++f) {
              const Complex w = 0.25 * pauli_upper(mu)(a, e) * pauli_upper(nu)(b, f);
              if (w == 0.0) continue;
              if (epsilon(e, f) != 0.0) sum += (w * epsilon(e, f)) * j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
              if (epsilon(a, b) != 0.0) sum += (w * epsilon(a, b)) * jd[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)];
            }
          }
        }
      }
      m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = std::move(sum);
    }
  }
  return m;
}

SpinorOperators spinor_from_tensor(const TensorOperators& m) {
  const Eigen::Index dim = m[0][0].rows();
  SpinorOperators out = zero_spinor(static_cast<int>(dim));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
          Complex w = 0.0;
          for (int e = 0; e < 2; ++e) {
            for (int f = 0; f < 2; ++f) w += 0.5 * epsilon(e, f) * pauli_lower(mu)(a, e) * pauli_lower(nu)(b, f);
          }
          if (w != 0.0) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += w * m[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
        }
      }
    }
  }
  return out;
}

double tensor_antisymmetry_residual(const TensorOperators& m) {
  double r = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) r = std::max(r, max_abs(m[mu][nu] + m[nu][mu]));
  }
  return r;
}

double tensor_closure_residual_serial(const TensorOperators& m, const PolyBasis& basis, double hbar) {
  double r = 0.0;
  for (int combo = 0; combo < 36; ++combo) r = std::max(r, tensor_entry(m, basis, hbar, combo));
  return r;
}

double tensor_closure_residual(const TensorOperators& m, const PolyBasis& basis, double hbar) {
  double r = 0.0;
#pragma omp parallel for reduction(max : r) schedule(dynamic)
  for (int combo = 0; combo < 36; ++combo) r = std::max(r, tensor_entry(m, basis, hbar, combo));
  return r;
}

OpMatrix jz_operator(const QuantumModel& model) {
  return model.qr.q[1].m * model.qr.r[2].m - model.qr.q[2].m * model.qr.r[1].m;
}

std::vector<Complex> jz_spectrum(int n, double hbar) { return jz_restricted(n, hbar, false); }

std::vector<Complex> jz_spectrum_homogeneous(int d, double hbar) { return jz_restricted(d, hbar, true); }

double integrality_residual(const std::vector<Complex>& eigenvalues, double hbar) {
  double r = 0.0;
  for (const Complex& z : eigenvalues) {
    const Complex u = z / hbar;
    r = std::max(r, std::abs(u - std::round(u.real())));
  }
  return r;
}

QuantumSuite run_quantum_suite(int degree, double hbar, int jz_degree) {
  const QuantumModel model(degree, hbar);
  const PolyBasis& basis = model.basis;
  QuantumSuite s;
  s.canonical = canonical_residual(model.qr, basis, hbar);
  s.mixed = mixed_algebra_residual(quaternion_mapping(model.qr), basis, hbar);

  const SpinorOperators m0 = m0_operators(model);
  const SpinorOperators m0_quat = m0_from_quaternions(model);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) s.m0_routes = std::max(s.m0_routes, max_abs(m0[a][b] - m0_quat[a][b]));
  }

  const SpinorOperators j = symmetrize(m0);
  const SpinorOperators jd = symmetrize(m0_dagger(model));
  s.closure = lorentz_closure_residual(j, basis, hbar);
  s.dotted = dotted_residual(j, jd, basis);

  const SpinorOperators j_printed = symmetrize(m0_operators(model, Contraction::Printed));
  s.closure_printed_conjugate = lorentz_closure_residual(j_printed, basis, hbar, -1.0);
  s.closure_printed_plus = lorentz_closure_residual(j_printed, basis, hbar, 1.0);

  const ThreeVector t = three_vector_form(j, jd);
  s.three_vector = three_vector_residual(t, basis, hbar);
  s.jz_three_vector = safe_residual(t.n[2] + t.n_dagger[2] - jz_operator(model), basis);

  const TensorOperators m = tensor_form(j, jd);
  s.tensor_antisymmetry = tensor_antisymmetry_residual(m);
  const SpinorOperators back = spinor_from_tensor(m);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) s.tensor_roundtrip = std::max(s.tensor_roundtrip, max_abs(back[a][b] - j[a][b]));
  }
  s.tensor_closure = tensor_closure_residual(m, basis, hbar);

  s.jz_eigenvalues = jz_spectrum(jz_degree, hbar);
  s.jz_integrality = integrality_residual(s.jz_eigenvalues, hbar);
  return s;
}

}  // namespace cliffstring
