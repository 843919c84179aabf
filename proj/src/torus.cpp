#include "torus.hpp"

#include <algorithm>
#include <cmath>

namespace trispec {

namespace {

constexpr double kRadicandTol = 1e-9;

double turns_sin(double t) { return std::sin(2.0 * kPi * t); }

cplx unit(double t) { return std::polar(1.0, 2.0 * kPi * t); }

// Rational angle to unit complex number; reduces first so large numerators
// do not lose precision.
cplx unit(const Rational& r) {
    Rational m = r.mod1();
    return unit(m.to_double());
}

}  // namespace

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return c;
}

const std::array<WeylElement, 6>& weyl_group() {
    static const std::array<WeylElement, 6> g = [] {
        WeylElement id{{{{1, 0}, {0, 1}}}};
        WeylElement t2{{{{0, -1}, {-1, 0}}}};
        WeylElement t3{{{{0, -1}, {1, -1}}}};
        return std::array<WeylElement, 6>{id, t2, t3, weyl_compose(t3, t3), weyl_compose(t2, t3),
                                          weyl_compose(t3, t2)};
    }();
    return g;
}

TorusPoint weyl_apply(const WeylElement& g, const TorusPoint& p) {
    Rational a = Rational(g.m[0][0]) * p.theta1 + Rational(g.m[0][1]) * p.theta2;
    Rational b = Rational(g.m[1][0]) * p.theta1 + Rational(g.m[1][1]) * p.theta2;
    return TorusPoint(a, b);
}

std::vector<TorusPoint> weyl_orbit(const TorusPoint& p) {
    std::vector<TorusPoint> out;
    for (const auto& g : weyl_group()) out.push_back(weyl_apply(g, p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

cplx phi(const TorusPoint& p) {
    cplx w1 = unit(p.theta1);
    cplx w2 = unit(p.theta2);
    return w1 + std::conj(w2) + unit(p.theta2 - p.theta1);
}

cplx phi_angles(double t1, double t2) { return unit(t1) + unit(-t2) + unit(t2 - t1); }

double jacobian_theta_angles(double t1, double t2) {
    return 4.0 * kPi * kPi * (turns_sin(t1 + t2) - turns_sin(2.0 * t1 - t2) - turns_sin(2.0 * t2 - t1));
}

double jacobian_theta(const TorusPoint& p) {
    // Reduce each argument exactly before taking sines.
    auto s = [](const Rational& r) { return turns_sin(r.mod1().to_double()); };
    const Rational& a = p.theta1;
    const Rational& b = p.theta2;
    return 4.0 * kPi * kPi * (s(a + b) - s(Rational(2) * a - b) - s(Rational(2) * b - a));
}

double deltoid_radicand(cplx z) {
    double zz = std::norm(z);
    cplx z3 = z * z * z;
    return 27.0 - 18.0 * zz + 8.0 * z3.real() - zz * zz;
}

double jacobian_abs_z(cplx z) {
    double r = deltoid_radicand(z);
    if (r < -kRadicandTol) throw DomainError("point lies outside the discoid");
    if (r < 0) r = 0;
    return 2.0 * kPi * kPi * std::sqrt(r);
}

std::array<cplx, 3> cubic_roots(cplx z) {
    double r = deltoid_radicand(z);
    if (r < -kRadicandTol) throw DomainError("point lies outside the discoid");
    if (r < 0) r = 0;
    const double s3 = std::sqrt(3.0);
    const cplx zb = std::conj(z);
    const cplx base = 27.0 - 9.0 * z * zb + 2.0 * z * z * z;
    const cplx q = z * z - 3.0 * zb;

    auto principal_p = [](cplx v) {
        if (std::abs(v) == 0.0) return cplx(0.0, 0.0);
        double mod = std::cbrt(std::abs(v));
        double arg = std::arg(v);
        if (arg < 0) arg += 2.0 * kPi;
        // Phase of the cube root lands in [0, 2pi/3).
        return std::polar(mod, arg / 3.0);
    };

    cplx radicand = base + 3.0 * s3 * std::sqrt(r);
    cplx p = principal_p(radicand);
    if (std::abs(p) < 1e-7) p = principal_p(base - 3.0 * s3 * std::sqrt(r));

    const double c13 = std::cbrt(2.0);
    std::array<cplx, 3> out{};
    for (int k = 0; k < 3; ++k) {
        cplx eps = unit(static_cast<double>(k) / 3.0);
        cplx second = std::abs(p) < 1e-12 ? cplx(0.0, 0.0) : c13 * std::conj(eps) * q / p;
        out[k] = (z + eps * p / c13 + second) / 3.0;
    }
    return out;
}

std::array<InversePair, 6> phi_inverse(cplx z) {
    auto w = cubic_roots(z);
    std::array<InversePair, 6> out{};
    int idx = 0;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            if (k != l) out[idx++] = InversePair{k, l, w[k], std::conj(w[l])};
    return out;
}

std::pair<cplx, cplx> phi_inverse_diagonal(cplx z, int k) {
    auto w = cubic_roots(z);
    if (k < 0 || k > 2) throw std::invalid_argument("branch index out of range");
    return {w[k], std::conj(w[k])};
}

bool in_fundamental_domain(const TorusPoint& p) {
    const Rational& a = p.theta1;
    const Rational& b = p.theta2;
    return b <= Rational(2) * a && a <= Rational(2) * b && a + b <= Rational(1);
}

bool in_fundamental_domain_interior(const TorusPoint& p) {
    const Rational& a = p.theta1;
    const Rational& b = p.theta2;
    return b < Rational(2) * a && a < Rational(2) * b && a + b < Rational(1);
}

double turns_of(cplx w) {
    double t = std::arg(w) / (2.0 * kPi);
    if (t < 0) t += 1.0;
    if (t >= 1.0) t -= 1.0;
    return t;
}

double circle_distance(double a, double b) {
    double d = std::fmod(std::fabs(a - b), 1.0);
    return std::min(d, 1.0 - d);
}

}  // namespace trispec
