#pragma once

#include <array>
#include <complex>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace trispec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// (theta1, theta2) in full turns, both reduced into [0,1).
struct TorusPoint {
    Rational theta1;
    Rational theta2;

    TorusPoint() = default;
    TorusPoint(Rational a, Rational b) : theta1(a.mod1()), theta2(b.mod1()) {}

    std::string str() const { return "(" + theta1.str() + "," + theta2.str() + ")"; }

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
    friend std::strong_ordering operator<=>(const TorusPoint& a, const TorusPoint& b) {
        if (auto c = a.theta1 <=> b.theta1; c != 0) return c;
        return a.theta2 <=> b.theta2;
    }
};

struct WeylElement {
    std::array<std::array<int, 2>, 2> m{};
    int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);

// I, T2, T3, T3^2, T2 T3, T3 T2.
const std::array<WeylElement, 6>& weyl_group();

TorusPoint weyl_apply(const WeylElement& g, const TorusPoint& p);
std::vector<TorusPoint> weyl_orbit(const TorusPoint& p);

cplx phi(const TorusPoint& p);
cplx phi_angles(double t1, double t2);

double jacobian_theta(const TorusPoint& p);
double jacobian_theta_angles(double t1, double t2);

// Radicand 27 - 18|z|^2 + 4z^3 + 4conj(z)^3 - |z|^4; nonnegative on the discoid.
double deltoid_radicand(cplx z);

// Throws DomainError when z lies outside the discoid by more than the tolerance.
double jacobian_abs_z(cplx z);

struct InversePair {
    int k;
    int l;
    cplx w1;
    cplx w2;
};

// The three roots of w^3 - z w^2 + conj(z) w - 1, in branch order k = 0,1,2.
std::array<cplx, 3> cubic_roots(cplx z);

// Pairs (w^(k), conj w^(l)) for k != l in the order (0,1),(0,2),(1,0),(1,2),(2,0),(2,1).
std::array<InversePair, 6> phi_inverse(cplx z);

// Pair built from a single root, (w^(k), conj w^(k)); not a preimage in general.
std::pair<cplx, cplx> phi_inverse_diagonal(cplx z, int k);

bool in_fundamental_domain(const TorusPoint& p);
bool in_fundamental_domain_interior(const TorusPoint& p);

// Angle of a unit complex number in full turns, in [0,1).
double turns_of(cplx w);

// Distance on R/Z.
double circle_distance(double a, double b);

}  // namespace trispec
