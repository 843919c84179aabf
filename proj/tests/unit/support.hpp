#pragma once

#include <array>
#include <cmath>
#include <random>
#include <utility>

#include "torus.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline trispec::TorusPoint random_rational_point(int max_den = 60) {
    std::uniform_int_distribution<int> den(1, max_den);
    int d1 = den(rng()), d2 = den(rng());
    std::uniform_int_distribution<int> a(0, d1 - 1), b(0, d2 - 1);
    return {trispec::Rational(a(rng()), d1), trispec::Rational(b(rng()), d2)};
}

// Phi of a random angle pair, rejected until the radicand is comfortably positive.
inline std::complex<double> random_interior_z(double margin = 1e-3) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        auto z = trispec::phi_angles(u(rng()), u(rng()));
        if (trispec::deltoid_radicand(z) > margin) return z;
    }
}

// Integer-linear action of a Weyl element on angles in turns, reduced to [0,1).
inline std::pair<double, double> apply_angles(const trispec::WeylElement& g, double t1, double t2) {
    auto red = [](double x) { return x - std::floor(x); };
    return {red(g.m[0][0] * t1 + g.m[0][1] * t2), red(g.m[1][0] * t1 + g.m[1][1] * t2)};
}

}  // namespace testsupport
