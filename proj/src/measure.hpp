#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "torus.hpp"

namespace trispec {

// Finite signed atomic measure on the torus. Atoms are keyed by exact point,
// so insertion merges weights; iteration order is lexicographic in (theta1, theta2).
class AtomicMeasure {
public:
    using Map = std::map<TorusPoint, double>;

    AtomicMeasure() = default;

    void add(const TorusPoint& p, double w);
    void add(const AtomicMeasure& other, double c = 1.0);

    // Drops atoms whose weight is negligible (|w| <= 1e-15).
    void prune();

    const Map& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    double weight_at(const TorusPoint& p) const;

    AtomicMeasure scaled(double c) const;

private:
    Map atoms_;
};

AtomicMeasure uniform_roots_product(int P, int Q);
AtomicMeasure d_measure(int n);
AtomicMeasure dd_measure(const Rational& n);
AtomicMeasure dnk_measure(const Rational& n, const Rational& k);
// Same seed orbits as dnk_measure without the parameter range check.
AtomicMeasure dnk_measure_unchecked(const Rational& n, const Rational& k);
AtomicMeasure dirac(const TorusPoint& p);
AtomicMeasure uniform_on(const std::vector<TorusPoint>& pts);

AtomicMeasure combine(const std::vector<std::pair<double, AtomicMeasure>>& terms);
AtomicMeasure j2_reweight(const AtomicMeasure& mu);
AtomicMeasure symmetrize(const AtomicMeasure& mu);

cplx moment(const AtomicMeasure& mu, int m, int n);

// All moments for 0 <= m,n <= max as a (max+1)^2 row-major grid.
std::vector<cplx> moment_grid(const AtomicMeasure& mu, int max);

double total_mass(const AtomicMeasure& mu);
bool is_positive(const AtomicMeasure& mu, double tol = -1e-10);
std::size_t support_size(const AtomicMeasure& mu);

// Largest pointwise weight difference over the union of supports.
double max_atom_delta(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace trispec
