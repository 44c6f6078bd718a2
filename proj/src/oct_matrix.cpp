#include "cliffstring/oct_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cliffstring/errors.hpp"

namespace cliffstring {

OctHermitian::OctHermitian(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {
  if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
}

OctHermitian OctHermitian::from_entries(int n, const std::vector<Octonion>& entries, double tol) {
  if (n < 0 || entries.size() != static_cast<std::size_t>(n * n)) {
    throw DimensionMismatch("entry count does not match n*n");
  }
  OctHermitian h(n);
  for (int i = 0; i < n; ++i) {
    const Octonion& d = entries[static_cast<std::size_t>(i * n + i)];
    if (max_abs(d.imaginary()) > tol) {
      std::ostringstream msg;
      msg << "diagonal entry " << i << " is not real";
      throw NotHermitian(msg.str());
    }
    h.set(i, i, d);
    for (int j = i + 1; j < n; ++j) {
      const Octonion& upper = entries[static_cast<std::size_t>(i * n + j)];
      const Octonion& lower = entries[static_cast<std::size_t>(j * n + i)];
      if (max_abs(lower - conj(upper)) > tol) {
        std::ostringstream msg;
        msg << "entries (" << i << "," << j << ") and (" << j << "," << i << ") are not conjugate";
        throw NotHermitian(msg.str());
      }
      h.set(i, j, upper);
    }
  }
  return h;
}

OctHermitian OctHermitian::two_by_two(double a, double b, const Octonion& c) {
  OctHermitian h(2);
  h.set(0, 0, Octonion(a));
  h.set(1, 1, Octonion(b));
  h.set(0, 1, c);
  return h;
}

void OctHermitian::set(int i, int j, const Octonion& z) {
  if (i == j) {
    entries_[index(i, i)] = Octonion(z.real());
    return;
  }
  entries_[index(i, j)] = z;
  entries_[index(j, i)] = conj(z);
}

double OctHermitian::max_entry() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, max_abs(z));
  return m;
}

double max_entry_difference(const OctHermitian& h1, const OctHermitian& h2) {
  if (h1.size() != h2.size()) throw DimensionMismatch("matrix sizes differ");
  double m = 0.0;
  for (int i = 0; i < h1.size(); ++i) {
    for (int j = 0; j < h1.size(); ++j) m = std::max(m, max_abs(h1(i, j) - h2(i, j)));
  }
  return m;
}

OctMatrix2 OctMatrix2::identity() {
  OctMatrix2 m;
  m(0, 0) = Octonion(1.0);
  m(1, 1) = Octonion(1.0);
  return m;
}

OctMatrix2 OctMatrix2::from(const OctHermitian& h) {
  if (h.size() != 2) throw DimensionMismatch("expected a 2x2 matrix");
  OctMatrix2 m;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m(i, j) = h(i, j);
  }
  return m;
}

OctMatrix2 operator*(const OctMatrix2& lhs, const OctMatrix2& rhs) {
  OctMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = lhs(i, 0) * rhs(0, j) + lhs(i, 1) * rhs(1, j);
  }
  return out;
}

OctMatrix2 operator+(const OctMatrix2& lhs, const OctMatrix2& rhs) {
  OctMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = lhs.e[i] + rhs.e[i];
  return out;
}

OctMatrix2 operator-(const OctMatrix2& lhs, const OctMatrix2& rhs) {
  OctMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = lhs.e[i] - rhs.e[i];
  return out;
}

OctMatrix2 operator*(double s, const OctMatrix2& m) {
  OctMatrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = s * m.e[i];
  return out;
}

OctMatrix2 dagger(const OctMatrix2& m) {
  OctMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = conj(m(j, i));
  }
  return out;
}

Octonion det(const OctMatrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double max_entry_difference(const OctMatrix2& a, const OctMatrix2& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, max_abs(a.e[i] - b.e[i]));
  return m;
}

double hermiticity_residual(const OctMatrix2& m) {
  return std::max({max_abs(m(0, 0).imaginary()), max_abs(m(1, 1).imaginary()),
                   max_abs(m(1, 0) - conj(m(0, 1)))});
}

OctHermitian hermitian_part(const OctMatrix2& m) {
  return OctHermitian::two_by_two(m(0, 0).real(), m(1, 1).real(), m(0, 1));
}

}  // namespace cliffstring
