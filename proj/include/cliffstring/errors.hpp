#pragma once

#include <stdexcept>
#include <string>

namespace cliffstring {

// Malformed input: an octonionic matrix that fails H_ji = conj(H_ij).
class NotHermitian : public std::invalid_argument {
 public:
  explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

class RankMismatch : public std::invalid_argument {
 public:
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Lorentz-factor entries are not confined to a single complex subspace.
class MixedSubspace : public std::invalid_argument {
 public:
  explicit MixedSubspace(const std::string& what) : std::invalid_argument(what) {}
};

// Left- and right-moving coefficients differ, so J^sigma would not vanish
// at the string endpoints.
class BoundaryViolation : public std::invalid_argument {
 public:
  explicit BoundaryViolation(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidSpectrum : public std::invalid_argument {
 public:
  explicit InvalidSpectrum(const std::string& what) : std::invalid_argument(what) {}
};

class NonpositiveTime : public std::invalid_argument {
 public:
  explicit NonpositiveTime(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cliffstring
