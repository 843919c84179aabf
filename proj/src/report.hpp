#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "measure.hpp"

namespace trispec {

struct StatedAudit {
    std::string combination;
    double mass = 0.0;
    double max_delta = 0.0;
    bool consistent = false;
};

struct VerificationReport {
    std::string subject;
    std::string scope;          // graph, group, relation
    std::string mode = "moments";  // moments or atoms
    int max_moment = 0;
    double tol = 0.0;
    double scale = 1.0;
    std::vector<double> deltas;  // row-major (max_moment+1)^2 for moments, one entry for atoms
    double max_delta = 0.0;
    bool pass = false;
    std::string combination;
    std::optional<StatedAudit> stated;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

// Max |moment(a) - moment(b)| over the (max+1)^2 grid, with per-entry deltas.
std::vector<double> moment_deltas(const AtomicMeasure& a, const AtomicMeasure& b, int max);

// Fills deltas/max_delta/pass/scale by comparing `candidate` against `reference`.
// With normalize the candidate is rescaled to unit mass first.
void compare_moments(VerificationReport& r, const AtomicMeasure& candidate, const AtomicMeasure& reference,
                     bool normalize);

// Audits a secondary combination against the same reference and records it.
StatedAudit audit_combination(const std::string& description, const AtomicMeasure& candidate,
                              const AtomicMeasure& reference, int max, double tol);

std::string format_double(double v);

}  // namespace trispec
