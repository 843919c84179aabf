#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "measure.hpp"

namespace trispec {

// (sum_i c_i * sqrt(r_i)) / den, evaluated in double precision.
struct ClosedForm {
    std::vector<std::pair<long, long>> sqrt_terms;
    long den = 1;

    double value() const;
    std::string str() const;

    static ClosedForm rational(long num, long den);
    static ClosedForm from_json(const nlohmann::json& j);
};

// One constructor call of the measures module with its parameters.
struct MeasureSpec {
    std::string kind;  // d, j2_d, dd, dnk, prod, j2_prod, dirac, dirac_sum
    Rational n;
    Rational k;
    int p = 0;
    int q = 0;
    std::vector<TorusPoint> points;
    bool unchecked = false;

    AtomicMeasure build() const;
    std::string str() const;
    static MeasureSpec from_json(const nlohmann::json& j);
};

struct Term {
    ClosedForm coef;
    MeasureSpec measure;
};

using Combination = std::vector<Term>;

// Exact total mass of one constructor call (J^2 terms in J^2/pi^4 units).
Rational exact_mass(const MeasureSpec& m);

// Exact total mass of a combination grouped by square-root radicand:
// the result maps r to the rational multiplier of sqrt(r).
std::map<long, Rational> symbolic_mass(const Combination& c);

Combination combination_from_json(const nlohmann::json& j);
AtomicMeasure build(const Combination& c);
double coefficient_mass(const Combination& c);
std::string describe(const Combination& c);

}  // namespace trispec
