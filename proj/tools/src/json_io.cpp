#include "json_io.hpp"

#include <fstream>

namespace orbitkit::cli {

json encode_scalar(cplx v) {
  const double re = v.real() + 0.0;
  const double im = v.imag() + 0.0;
  if (im == 0.0) return re;
  return json::array({re, im});
}

cplx decode_scalar(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error("expected a number or a [re, im] pair, got " + j.dump());
}

json encode_matrix(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(encode_scalar(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Mat decode_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw Error("matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw Error("matrix rows have unequal length");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = decode_scalar(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json encode_algebra_element(const AlgebraElement& a) {
  switch (a.tag) {
    case Algebra::R: return a.coeffs[0];
    case Algebra::C: return json::array({a.coeffs[0], a.coeffs[1]});
    case Algebra::H:
    case Algebra::O: return json(a.coeffs);
    case Algebra::OC:
      return json::array({std::vector<double>(a.coeffs.begin(), a.coeffs.begin() + 8),
                          std::vector<double>(a.coeffs.begin() + 8, a.coeffs.end())});
  }
  return nullptr;
}

AlgebraElement decode_algebra_element(Algebra tag, const json& j) {
  std::vector<double> c;
  if (tag == Algebra::R) {
    if (!j.is_number()) throw Error("real element must be a number");
    c = {j.get<double>()};
  } else if (tag == Algebra::OC) {
    if (!j.is_array() || j.size() != 2) throw Error("complex octonion must be [[8 reals], [8 reals]]");
    c = j[0].get<std::vector<double>>();
    const auto im = j[1].get<std::vector<double>>();
    c.insert(c.end(), im.begin(), im.end());
  } else {
    c = j.get<std::vector<double>>();
  }
  return AlgebraElement(tag, std::move(c));
}

json encode_lie_element(const LieElement& x) {
  return {{"family", std::string(to_string(x.alg->family))}, {"params", x.alg->params}, {"matrix", encode_matrix(x.m)}};
}

LieElement decode_lie_element(const json& j, double tol) {
  if (!j.contains("family") || !j.contains("params") || !j.contains("matrix")) {
    throw Error("Lie element JSON needs \"family\", \"params\" and \"matrix\"");
  }
  const auto alg = make_algebra(family_from_string(j["family"].get<std::string>()), j["params"].get<std::vector<int>>());
  return make_element(alg, decode_matrix(j["matrix"]), tol);
}

json encode_albert(const AlbertElement& x) {
  json alpha = json::array();
  json a = json::array();
  for (int i = 0; i < 3; ++i) {
    alpha.push_back(encode_scalar(x.alpha[i]));
    json o = json::array();
    for (const cplx& c : x.a[i]) o.push_back(encode_scalar(c));
    a.push_back(o);
  }
  return {{"alpha", alpha}, {"a", a}};
}

AlbertElement decode_albert(const json& j) {
  if (!j.contains("alpha") || !j.contains("a")) throw Error("Albert JSON needs \"alpha\" and \"a\"");
  const json& alpha = j["alpha"];
  const json& a = j["a"];
  if (!alpha.is_array() || alpha.size() != 3 || !a.is_array() || a.size() != 3) {
    throw Error("Albert JSON needs three diagonal entries and three octonions");
  }
  AlbertElement x;
  bool complex = false;
  for (int i = 0; i < 3; ++i) {
    x.alpha[i] = decode_scalar(alpha[i]);
    complex = complex || x.alpha[i].imag() != 0.0;
    if (!a[i].is_array() || a[i].size() != 8) throw Error("octonion entries need 8 coefficients");
    for (int k = 0; k < 8; ++k) {
      x.a[i][k] = decode_scalar(a[i][k]);
      complex = complex || x.a[i][k].imag() != 0.0;
    }
  }
  x.field = j.value("field", complex ? std::string("C") : std::string("R")) == "R" && !complex ? Algebra::R : Algebra::C;
  return x;
}

json encode_pplus(const PPlusElement& w) {
  return {{"family", std::string(to_string(w.family))}, {"matrix", encode_matrix(w.z)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace orbitkit::cli
