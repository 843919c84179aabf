#pragma once

#include <string>

#include "json.hpp"

#include "measure.hpp"

namespace trispec {

// {"atoms":[{"theta1":"p/q","theta2":"p/q","weight":w,"z":[re,im]}, ...]}
nlohmann::json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const nlohmann::json& j);

// Header row theta1,theta2,weight,re_z,im_z.
std::string measure_to_csv(const AtomicMeasure& mu);
AtomicMeasure measure_from_csv(const std::string& text);

// Rows re_z,im_z,abs_j for theta on the N x N grid (a/N, b/N).
std::string sample_discoid_csv(int grid);

}  // namespace trispec
