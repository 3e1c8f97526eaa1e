#pragma once

// JSON encodings of the core types. Rationals travel as strings "p/q" (or
// "n" when the denominator is 1); a root polynomial is a sorted list of
// [root, multiplicity] pairs; family files follow the affine b-function
// schema; Pi-set files are { "r_lambda": ..., "pi": { "<k>": [l, ...] } }.

#include "vfilt/affine_family.hpp"
#include "vfilt/dense_poly.hpp"
#include "vfilt/filtration.hpp"
#include "vfilt/linear_solve.hpp"
#include "vfilt/root_poly.hpp"
#include "vfilt/spaces.hpp"

#include <json.hpp>

namespace vfilt {

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RootPoly& p);
RootPoly root_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DensePoly& p);
nlohmann::json to_json(const Mat& m);

nlohmann::json to_json(const AffineBFamily& fam);
AffineBFamily affine_family_from_json(const nlohmann::json& j);
AffineBFamily load_affine_family(const std::string& path);

nlohmann::json to_json(const PiSets& pi);
PiSets pi_sets_from_json(const nlohmann::json& j);
PiSets load_pi_sets(const std::string& path);

nlohmann::json to_json(const WeightSet& set);

}  // namespace vfilt
