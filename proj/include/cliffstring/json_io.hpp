#pragma once

// JSON encodings shared by the CLI, fixtures and tests.
//
//   octonion          [x0, ..., x7]
//   Hermitian n x n   {"n": n, "entries": [[oct, ...], ...]}  (row-major, "n" optional)
//   Hermitian 2 x 2   {"a": real, "b": real, "c": oct}         ([[a, c], [c*, b]])
//   tensor vector     {"rank": n, "terms": [{"kind": "E", "k": 1, "coefficient": oct}, ...]}
//   complex 2 x 2     {"re": [[..], [..]], "im": [[..], [..]]}  ("im" optional)
//   spectrum          {"K": C, "C0": C, "ell": real, "m": real, "hbar": real (optional),
//                      "modes": [{"n": int, "A": C, "Anm": C}, ...]}
//                     with "AL" and "AR" in place of "A" for separate left/right data.
//   spinor            {"components": [oct, oct]}
//
// Parse failures throw JsonFormatError.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffstring/clifford.hpp"
#include "cliffstring/lorentz.hpp"
#include "cliffstring/oct_matrix.hpp"
#include "cliffstring/string_modes.hpp"

namespace cliffstring {

class JsonFormatError : public std::invalid_argument {
 public:
  explicit JsonFormatError(const std::string& what) : std::invalid_argument(what) {}
};

using Json = nlohmann::json;

Json to_json(const Octonion& z);
Octonion octonion_from_json(const Json& j);

Json to_json(const OctHermitian& h);
/// Accepts both Hermitian encodings. Throws NotHermitian for asymmetric input.
OctHermitian hermitian_from_json(const Json& j, double tol = 1e-12);

Json to_json(const TensorVector& v);
TensorVector tensor_vector_from_json(const Json& j);

Json to_json(const CMatrix2& m);
CMatrix2 cmatrix_from_json(const Json& j);

Json to_json(std::complex<double> z);

Json to_json(const RawSpectrum& s);
Json to_json(const ModeSpectrum& s);
/// Raw form; pass through enforce_boundary for a validated spectrum.
RawSpectrum spectrum_from_json(const Json& j);

Json to_json(const OctSpinor& s);
OctSpinor spinor_from_json(const Json& j);

/// Reads and parses a file. Throws std::runtime_error when unreadable and
/// JsonFormatError when malformed.
Json read_json_file(const std::string& path);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cliffstring
