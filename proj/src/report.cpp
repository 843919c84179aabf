#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace trispec {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> moment_deltas(const AtomicMeasure& a, const AtomicMeasure& b, int max) {
    auto ga = moment_grid(a, max);
    auto gb = moment_grid(b, max);
    std::vector<double> d(ga.size());
    for (std::size_t i = 0; i < ga.size(); ++i) d[i] = std::abs(ga[i] - gb[i]);
    return d;
}

void compare_moments(VerificationReport& r, const AtomicMeasure& candidate, const AtomicMeasure& reference,
                     bool normalize) {
    double mass = total_mass(candidate);
    r.scale = mass;
    AtomicMeasure used = candidate;
    if (normalize && mass != 0.0 && std::fabs(mass - 1.0) > 1e-12) used = candidate.scaled(1.0 / mass);
    r.deltas = moment_deltas(used, reference, r.max_moment);
    r.max_delta = r.deltas.empty() ? 0.0 : *std::max_element(r.deltas.begin(), r.deltas.end());
    r.pass = std::all_of(r.deltas.begin(), r.deltas.end(), [&](double d) { return d < r.tol; });
    if (!normalize && std::fabs(mass - 1.0) > 1e-9)
        r.notes.push_back("combination mass " + format_double(mass) + " is not 1 and normalization is off");
}

StatedAudit audit_combination(const std::string& description, const AtomicMeasure& candidate,
                              const AtomicMeasure& reference, int max, double tol) {
    StatedAudit a;
    a.combination = description;
    a.mass = total_mass(candidate);
    auto d = moment_deltas(candidate, reference, max);
    a.max_delta = d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
    a.consistent = a.max_delta < tol;
    return a;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["scope"] = scope;
    j["mode"] = mode;
    j["max_moment"] = max_moment;
    j["tol"] = tol;
    j["scale"] = scale;
    j["max_delta"] = max_delta;
    j["pass"] = pass;
    j["combination"] = combination;
    const std::size_t side = static_cast<std::size_t>(max_moment) + 1;
    if (mode == "moments" && deltas.size() == side * side) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t a = 0; a < side; ++a) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t b = 0; b < side; ++b) row.push_back(deltas.at(a * side + b));
            rows.push_back(row);
        }
        j["deltas"] = rows;
    } else {
        j["deltas"] = deltas;
    }
    if (stated) {
        j["stated"] = {{"combination", stated->combination},
                       {"mass", stated->mass},
                       {"max_delta", stated->max_delta},
                       {"consistent", stated->consistent}};
    }
    j["notes"] = notes;
    return j;
}

}  // namespace trispec
