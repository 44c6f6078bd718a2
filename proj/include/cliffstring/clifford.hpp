#pragma once

#include <compare>
#include <map>
#include <span>
#include <string_view>

#include "cliffstring/oct_matrix.hpp"
#include "cliffstring/octonion.hpp"

namespace cliffstring {

/// Generating-space basis of Cl(2n,2n,R): e_k, e_k*, f_k, f_k*.
enum class GeneratorKind : std::uint8_t { E, Estar, F, Fstar };

std::string_view to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(std::string_view name);

/// The kind swapped by the conjugation antiautomorphism (E <-> E*, F <-> F*).
GeneratorKind conjugate_kind(GeneratorKind kind);

struct GeneratorIndex {
  GeneratorKind kind;
  int k;  // 1..n

  friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// Bracket of two basis generators: {e_i, e_j*} = delta_ij, {f_i, f_j*} = -delta_ij,
/// every other pair 0. The unhalved bracket is the basis form, so that
/// v_i . v_j* reproduces H_ii = sum |a|^2 - |b|^2 with unit weights.
double basis_form(const GeneratorIndex& u, const GeneratorIndex& v);

/// Octonion-coefficient vector in O (x) V, sparse over the generating basis.
class TensorVector {
 public:
  explicit TensorVector(int rank = 0);

  int rank() const { return rank_; }

  /// Adds z (x) basis; indices must satisfy 1 <= k <= rank.
  TensorVector& add(GeneratorIndex basis, const Octonion& z);
  Octonion coefficient(GeneratorIndex basis) const;
  const std::map<GeneratorIndex, Octonion>& terms() const { return terms_; }

  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator*=(double s);

  /// Applies f to every coefficient; f: Octonion -> Octonion.
  template <class F>
  TensorVector map_coefficients(F&& f) const {
    TensorVector out(rank_);
    for (const auto& [idx, z] : terms_) out.terms_.emplace(idx, f(z));
    return out;
  }

  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  int rank_;
  std::map<GeneratorIndex, Octonion> terms_;
};

TensorVector operator+(TensorVector a, const TensorVector& b);
TensorVector operator*(double s, TensorVector v);

/// Bilinear extension of (z1 (x) u1) . (z2 (x) u2) = (z1 z2) basis_form(u1, u2).
/// Throws RankMismatch.
Octonion inner(const TensorVector& u, const TensorVector& v);

/// (z (x) u)* = z* (x) u*.
TensorVector conj(const TensorVector& v);

/// H_ij = v_i . v_j*. The upper triangle is evaluated and mirrored, so the
/// result is exactly Hermitian.
OctHermitian gram_matrix(std::span<const TensorVector> vs);

/// Largest coefficient magnitude over all terms.
double max_abs(const TensorVector& v);

}  // namespace cliffstring
