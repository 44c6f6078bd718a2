#include "cliffstring/json_io.hpp"

#include <fstream>
#include <sstream>

namespace cliffstring {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw JsonFormatError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw JsonFormatError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Eigen::Matrix2d real_matrix(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw JsonFormatError(std::string(what) + " must be a 2 x 2 array");
  Eigen::Matrix2d m;
  for (int r = 0; r < 2; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 2) throw JsonFormatError(std::string(what) + " must be a 2 x 2 array");
    for (int c = 0; c < 2; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

Json real_rows(const Eigen::Matrix2d& m) { return Json::array({{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}); }

}  // namespace

Json to_json(const Octonion& z) {
  Json j = Json::array();
  for (double c : z.coefficients()) j.push_back(c);
  return j;
}

Octonion octonion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 8) throw JsonFormatError("an octonion is an array of 8 numbers");
  Octonion z;
  for (int i = 0; i < 8; ++i) z[i] = number(j[static_cast<std::size_t>(i)], "octonion coefficient");
  return z;
}

Json to_json(const OctHermitian& h) {
  Json rows = Json::array();
  for (int i = 0; i < h.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < h.size(); ++k) row.push_back(to_json(h(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", h.size()}, {"entries", std::move(rows)}};
}

OctHermitian hermitian_from_json(const Json& j, double tol) {
  if (j.is_object() && j.contains("a")) {
    return OctHermitian::two_by_two(number(field(j, "a"), "a"), number(field(j, "b"), "b"), octonion_from_json(field(j, "c")));
  }
  const Json& rows = field(j, "entries");
  if (!rows.is_array()) throw JsonFormatError("entries must be an array of rows");
  const int n = j.contains("n") ? integer(j.at("n"), "n") : static_cast<int>(rows.size());
  if (n < 1) throw JsonFormatError("n must be positive");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw JsonFormatError("entries must have n rows");
  std::vector<Octonion> flat;
  flat.reserve(static_cast<std::size_t>(n * n));
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw JsonFormatError("each row must have n entries");
    for (const Json& z : row) flat.push_back(octonion_from_json(z));
  }
  return OctHermitian::from_entries(n, flat, tol);
}

Json to_json(const TensorVector& v) {
  Json terms = Json::array();
  for (const auto& [idx, z] : v.terms()) {
    terms.push_back({{"kind", std::string(to_string(idx.kind))}, {"k", idx.k}, {"coefficient", to_json(z)}});
  }
  return {{"rank", v.rank()}, {"terms", std::move(terms)}};
}

TensorVector tensor_vector_from_json(const Json& j) {
  TensorVector v(integer(field(j, "rank"), "rank"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw JsonFormatError("terms must be an array");
  for (const Json& t : terms) {
    const Json& kind = field(t, "kind");
    if (!kind.is_string()) throw JsonFormatError("kind must be a string");
    v.add({generator_kind_from_string(kind.get<std::string>()), integer(field(t, "k"), "k")},
          octonion_from_json(field(t, "coefficient")));
  }
  return v;
}

Json to_json(const CMatrix2& m) { return {{"re", real_rows(m.real())}, {"im", real_rows(m.imag())}}; }

CMatrix2 cmatrix_from_json(const Json& j) {
  const Eigen::Matrix2d re = real_matrix(field(j, "re"), "re");
  const Eigen::Matrix2d im = j.contains("im") ? real_matrix(j.at("im"), "im") : Eigen::Matrix2d::Zero();
  CMatrix2 m;
  m.real() = re;
  m.imag() = im;
  return m;
}

Json to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const RawSpectrum& s) {
  Json modes = Json::array();
  for (const auto& [n, mode] : s.modes) {
    Json entry{{"n", n}, {"Anm", to_json(mode.a_pair)}};
    if (mode.left == mode.right) {
      entry["A"] = to_json(mode.left);
    } else {
      entry["AL"] = to_json(mode.left);
      entry["AR"] = to_json(mode.right);
    }
    modes.push_back(std::move(entry));
  }
  return {{"K", to_json(s.k)},
          {"C0", to_json(s.c0)},
          {"ell", s.constants.ell},
          {"m", s.constants.m},
          {"hbar", s.constants.hbar},
          {"modes", std::move(modes)}};
}

Json to_json(const ModeSpectrum& s) {
  RawSpectrum raw;
  raw.k = s.k();
  raw.c0 = s.c0();
  raw.constants = s.constants();
  for (const auto& [n, mode] : s.modes()) raw.modes[n] = RawMode{mode.a, mode.a, mode.a_pair};
  return to_json(raw);
}

RawSpectrum spectrum_from_json(const Json& j) {
  RawSpectrum s;
  s.k = cmatrix_from_json(field(j, "K"));
  s.c0 = j.contains("C0") ? cmatrix_from_json(j.at("C0")) : CMatrix2::Zero();
  s.constants.ell = number(field(j, "ell"), "ell");
  s.constants.m = number(field(j, "m"), "m");
  if (j.contains("hbar")) s.constants.hbar = number(j.at("hbar"), "hbar");
  const Json& modes = field(j, "modes");
  if (!modes.is_array()) throw JsonFormatError("modes must be an array");
  for (const Json& entry : modes) {
    const int n = integer(field(entry, "n"), "n");
    RawMode mode;
    if (entry.contains("A")) {
      mode.left = mode.right = cmatrix_from_json(entry.at("A"));
    } else {
      mode.left = cmatrix_from_json(field(entry, "AL"));
      mode.right = cmatrix_from_json(field(entry, "AR"));
    }
    mode.a_pair = cmatrix_from_json(field(entry, "Anm"));
    if (!s.modes.emplace(n, mode).second) throw JsonFormatError("duplicate mode index " + std::to_string(n));
  }
  return s;
}

Json to_json(const OctSpinor& s) { return {{"components", Json::array({to_json(s[0]), to_json(s[1])})}}; }

OctSpinor spinor_from_json(const Json& j) {
  const Json& c = field(j, "components");
  if (!c.is_array() || c.size() != 2) throw JsonFormatError("components must hold two octonions");
  return {octonion_from_json(c[0]), octonion_from_json(c[1])};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cliffstring
