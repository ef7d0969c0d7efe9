#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bruhat/geocoeff.hpp"
#include "bruhat/mpoly.hpp"
#include "bruhat/orbitpoly.hpp"
#include "bruhat/radical.hpp"
#include "bruhat/rootsys.hpp"
#include "bruhat/volume.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings, radicals as {coeff, radicand}.
Json to_json(const Rational& q);
Json to_json(const RadScalar& r);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
// {"[e1,e2,...]": "p/q"}
Json to_json(const MPoly& p);
Json to_json(const AffineElement& w, const std::vector<int>* word = nullptr);
Json to_json(const VolumePolynomial& v);
Json to_json(const FaceDescriptor& f, const Coweight& lambda);
Json to_json(const RootSystemData& data);
Json to_json(const GeometricCoefficients& c);

Rational rational_from_json(const Json& j);
GeometricCoefficients coefficients_from_json(const Json& j);

// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace bruhat
