#pragma once

#include <Eigen/Dense>

#include "cliffstring/octonion.hpp"

namespace cliffstring::testing {

inline double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline Octonion oct(std::initializer_list<std::pair<int, double>> terms) {
  Octonion z;
  for (const auto& [k, x] : terms) z[k] += x;
  return z;
}

}  // namespace cliffstring::testing
