#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace trispec {

// The four atom-level identities between the measure families.
std::vector<std::string> relation_names();
VerificationReport verify_relation(const std::string& name, double tol = 1e-10);
std::vector<VerificationReport> verify_relations(double tol = 1e-10);

}  // namespace trispec
