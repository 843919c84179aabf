#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "measure.hpp"
#include "report.hpp"
#include "terms.hpp"

namespace trispec {

struct ConjClass {
    long size = 0;
    TorusPoint rep;
    std::string label;
};

struct GroupSpec {
    std::string name;
    long order = 0;
    std::vector<ConjClass> classes;
    std::vector<std::string> notes;
};

// Class equation and identity-class checks; throws std::invalid_argument.
void validate_group(const GroupSpec& g);

AtomicMeasure char_measure(const GroupSpec& g);

// Direct character sum sum_j |G_j|/|G| chi^m conj(chi)^n.
cplx character_moment(const GroupSpec& g, int m, int n);

// Ids: A(p,q), C(n), D(n), E, F, G, H, I, J, K, L.
GroupSpec group_classes(const std::string& id);
std::vector<std::string> group_names();

std::vector<TorusPoint> kn_set(int n);
std::vector<TorusPoint> knprime_set(int n);
// Throws std::logic_error if Phi of the result differs from e^{-2 pi i k}.
TorusPoint theta_k_map(const Rational& k);

struct GroupTheorem {
    Combination stated;
    std::optional<Combination> corrected;
    std::vector<std::string> notes;
};

GroupTheorem group_theorem(const std::string& id);
AtomicMeasure theorem_group_measure(const std::string& id);

// Parses and validates a group table document; throws std::invalid_argument.
struct GroupEntry {
    GroupSpec spec;
    GroupTheorem theorem;
};
std::vector<GroupEntry> load_group_table(std::string_view json_text);

VerificationReport verify_group(const std::string& id, int max_moment, double tol, bool normalize);

}  // namespace trispec
