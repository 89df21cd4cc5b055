#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/divalg.hpp"
#include "orbitkit/jordan.hpp"
#include "orbitkit/liealg.hpp"

namespace orbitkit::cli {

using nlohmann::json;

json encode_scalar(cplx v);
cplx decode_scalar(const json& j);

json encode_matrix(const Mat& m);
Mat decode_matrix(const json& j);

// R: number; C: [re, im]; H: 4 reals; O: 8 reals; OC: [[8 reals], [8 reals]].
json encode_algebra_element(const AlgebraElement& a);
AlgebraElement decode_algebra_element(Algebra tag, const json& j);

// {"family": ..., "params": [...], "matrix": [[...], ...]}
json encode_lie_element(const LieElement& x);
LieElement decode_lie_element(const json& j, double tol);

// {"alpha": [3 scalars], "a": [3 octonions]}; octonions as 8 reals or 8 scalars.
json encode_albert(const AlbertElement& x);
AlbertElement decode_albert(const json& j);

json encode_pplus(const PPlusElement& w);

json read_json_file(const std::string& path);

}  // namespace orbitkit::cli
