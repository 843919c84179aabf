#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "measure.hpp"
#include "report.hpp"
#include "terms.hpp"

namespace trispec {

struct Exponent {
    int lambda1 = 0;
    int lambda2 = 0;
    double weight = 0.0;  // |psi^lambda_*|^2
};

struct GraphSpectrum {
    std::string name;
    int n = 0;
    std::vector<Exponent> exponents;
    double raw_weight_sum = 1.0;  // before rescaling to unit mass
    std::vector<std::string> notes;
};

struct GraphEntry {
    GraphSpectrum spectrum;
    Combination stated;
    std::optional<Combination> corrected;
    // Generated families carry their measures directly instead of a combination.
    std::optional<AtomicMeasure> theorem_override;
};

TorusPoint theta_of_exponent(int lambda1, int lambda2, int n);

// Weights are rescaled to sum to 1 before building the measure.
AtomicMeasure eigen_measure(const GraphSpectrum& spec);

// Parses and validates a graph table document; throws std::invalid_argument.
std::vector<GraphEntry> load_graph_table(std::string_view json_text);

// Registered ids: E8, E1_12, E2_12, E4_12, E5_12, E24, Dstar(n), A(n).
std::vector<std::string> graph_names();
GraphEntry graph_entry(const std::string& id);

GraphSpectrum dstar_spectrum(int n);
GraphSpectrum a_spectrum(int n);

// Mass-consistent theorem measure (corrected form where one exists).
AtomicMeasure theorem_measure(const std::string& id, bool normalize = true);

struct IntMatrix {
    int size = 0;
    std::vector<long long> a;  // row-major
    int star = 0;
    std::vector<std::pair<int, int>> labels;
    long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * size + j]; }
};

IntMatrix a_graph_adjacency(int n);
bool is_normal(const IntMatrix& m);
// (star, star) entry of A^m (A^T)^n; throws std::domain_error for a non-normal matrix.
long long matrix_moments(const IntMatrix& adj, int star, int m, int n);

VerificationReport verify_graph(const std::string& id, int max_moment, double tol, bool normalize);

}  // namespace trispec
