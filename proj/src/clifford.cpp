#include "cliffstring/clifford.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliffstring/errors.hpp"

namespace cliffstring {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::E: return "E";
    case GeneratorKind::Estar: return "Estar";
    case GeneratorKind::F: return "F";
    case GeneratorKind::Fstar: return "Fstar";
  }
  return "?";
}

GeneratorKind generator_kind_from_string(std::string_view name) {
  if (name == "E") return GeneratorKind::E;
  if (name == "Estar") return GeneratorKind::Estar;
  if (name == "F") return GeneratorKind::F;
  if (name == "Fstar") return GeneratorKind::Fstar;
  throw std::invalid_argument("unknown generator kind '" + std::string(name) + "'");
}

GeneratorKind conjugate_kind(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::E: return GeneratorKind::Estar;
    case GeneratorKind::Estar: return GeneratorKind::E;
    case GeneratorKind::F: return GeneratorKind::Fstar;
    case GeneratorKind::Fstar: return GeneratorKind::F;
  }
  return kind;
}

double basis_form(const GeneratorIndex& u, const GeneratorIndex& v) {
  if (u.k != v.k) return 0.0;
  if (conjugate_kind(u.kind) != v.kind) return 0.0;
  const bool e_sector = u.kind == GeneratorKind::E || u.kind == GeneratorKind::Estar;
  return e_sector ? 1.0 : -1.0;
}

TensorVector::TensorVector(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
}

TensorVector& TensorVector::add(GeneratorIndex basis, const Octonion& z) {
  if (basis.k < 1 || basis.k > rank_) throw std::out_of_range("generator index outside 1..rank");
  auto [it, inserted] = terms_.try_emplace(basis, z);
  if (!inserted) it->second += z;
  return *this;
}

Octonion TensorVector::coefficient(GeneratorIndex basis) const {
  const auto it = terms_.find(basis);
  return it == terms_.end() ? Octonion{} : it->second;
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  if (other.rank_ != rank_) throw RankMismatch("tensor vectors have different ranks");
  for (const auto& [idx, z] : other.terms_) add(idx, z);
  return *this;
}

TensorVector& TensorVector::operator*=(double s) {
  for (auto& [idx, z] : terms_) z *= s;
  return *this;
}

TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
TensorVector operator*(double s, TensorVector v) { return v *= s; }

Octonion inner(const TensorVector& u, const TensorVector& v) {
  if (u.rank() != v.rank()) throw RankMismatch("inner product of tensor vectors with different ranks");
  Octonion out;
  for (const auto& [ui, uz] : u.terms()) {
    // Only the conjugate-kind partner with the same k pairs nontrivially.
    const GeneratorIndex partner{conjugate_kind(ui.kind), ui.k};
    const auto it = v.terms().find(partner);
    if (it == v.terms().end()) continue;
    out += basis_form(ui, partner) * (uz * it->second);
  }
  return out;
}

TensorVector conj(const TensorVector& v) {
  TensorVector out(v.rank());
  for (const auto& [idx, z] : v.terms()) out.add({conjugate_kind(idx.kind), idx.k}, conj(z));
  return out;
}

OctHermitian gram_matrix(std::span<const TensorVector> vs) {
  const int n = static_cast<int>(vs.size());
  for (const auto& v : vs) {
    if (v.rank() != vs.front().rank()) throw RankMismatch("gram matrix of vectors with different ranks");
  }
  OctHermitian h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      h.set(i, j, inner(vs[static_cast<std::size_t>(i)], conj(vs[static_cast<std::size_t>(j)])));
    }
  }
  return h;
}

double max_abs(const TensorVector& v) {
  double m = 0.0;
  for (const auto& [idx, z] : v.terms()) m = std::max(m, max_abs(z));
  return m;
}

}  // namespace cliffstring
