#include "measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace trispec {

void AtomicMeasure::add(const TorusPoint& p, double w) {
    if (!std::isfinite(w)) throw std::invalid_argument("non-finite atom weight");
    atoms_[p] += w;
}

void AtomicMeasure::add(const AtomicMeasure& other, double c) {
    for (const auto& [p, w] : other.atoms_) add(p, c * w);
}

void AtomicMeasure::prune() {
    for (auto it = atoms_.begin(); it != atoms_.end();) {
        if (std::fabs(it->second) <= 1e-15)
            it = atoms_.erase(it);
        else
            ++it;
    }
}

double AtomicMeasure::weight_at(const TorusPoint& p) const {
    auto it = atoms_.find(p);
    return it == atoms_.end() ? 0.0 : it->second;
}

AtomicMeasure AtomicMeasure::scaled(double c) const {
    AtomicMeasure out;
    out.add(*this, c);
    out.prune();
    return out;
}

AtomicMeasure uniform_on(const std::vector<TorusPoint>& pts) {
    std::set<TorusPoint> uniq(pts.begin(), pts.end());
    AtomicMeasure out;
    if (uniq.empty()) return out;
    double w = 1.0 / static_cast<double>(uniq.size());
    for (const auto& p : uniq) out.add(p, w);
    return out;
}

AtomicMeasure uniform_roots_product(int P, int Q) {
    if (P < 1 || Q < 1) throw std::invalid_argument("root counts must be positive");
    std::vector<TorusPoint> pts;
    pts.reserve(static_cast<std::size_t>(P) * Q);
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < Q; ++b) pts.emplace_back(Rational(a, P), Rational(b, Q));
    return uniform_on(pts);
}

AtomicMeasure d_measure(int n) {
    if (n < 1) throw std::invalid_argument("d_measure needs n >= 1");
    std::vector<TorusPoint> pts;
    const int m = 3 * n;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if ((a + b) % 3 == 0) pts.emplace_back(Rational(a, m), Rational(b, m));
    return uniform_on(pts);
}

namespace {

std::vector<TorusPoint> orbit_union(const std::vector<TorusPoint>& seeds) {
    std::vector<TorusPoint> out;
    for (const auto& s : seeds) {
        auto o = weyl_orbit(s);
        out.insert(out.end(), o.begin(), o.end());
    }
    return out;
}

}  // namespace

AtomicMeasure dd_measure(const Rational& n) {
    if (n < Rational(2)) throw std::invalid_argument("dd_measure needs n >= 2");
    const Rational t = Rational(1) / n;
    const Rational third(1, 3), two_thirds(2, 3);
    return uniform_on(orbit_union({TorusPoint(t, t), TorusPoint(two_thirds - t, third),
                                   TorusPoint(third, two_thirds - t)}));
}

AtomicMeasure dnk_measure_unchecked(const Rational& n, const Rational& k) {
    if (n.num() == 0) throw std::invalid_argument("dnk_measure needs n != 0");
    const Rational t = Rational(1) / n;
    const Rational a = Rational(2, 3) - t;
    const Rational b(1, 3);
    return uniform_on(orbit_union({TorusPoint(t + k, t), TorusPoint(t, t + k), TorusPoint(a, b + k),
                                   TorusPoint(b + k, a), TorusPoint(a - k, b - k),
                                   TorusPoint(b - k, a - k)}));
}

AtomicMeasure dnk_measure(const Rational& n, const Rational& k) {
    if (n <= Rational(2)) throw std::invalid_argument("dnk_measure needs n > 2");
    if (k < Rational(0) || k > Rational(1) / n)
        throw std::invalid_argument("dnk_measure needs 0 <= k <= 1/n");
    return dnk_measure_unchecked(n, k);
}

AtomicMeasure dirac(const TorusPoint& p) {
    AtomicMeasure out;
    out.add(p, 1.0);
    return out;
}

AtomicMeasure combine(const std::vector<std::pair<double, AtomicMeasure>>& terms) {
    AtomicMeasure out;
    for (const auto& [c, mu] : terms) out.add(mu, c);
    out.prune();
    return out;
}

AtomicMeasure j2_reweight(const AtomicMeasure& mu) {
    AtomicMeasure out;
    const double pi4 = kPi * kPi * kPi * kPi;
    for (const auto& [p, w] : mu.atoms()) {
        double j = jacobian_theta(p);
        double v = w * j * j / pi4;
        // Points on the deltoid preimage carry J = 0 up to rounding.
        if (std::fabs(j) < 1e-9) continue;
        out.add(p, v);
    }
    out.prune();
    return out;
}

AtomicMeasure symmetrize(const AtomicMeasure& mu) {
    AtomicMeasure out;
    for (const auto& [p, w] : mu.atoms())
        for (const auto& g : weyl_group()) out.add(weyl_apply(g, p), w / 6.0);
    out.prune();
    return out;
}

cplx moment(const AtomicMeasure& mu, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment orders must be nonnegative");
    cplx acc(0.0, 0.0);
    for (const auto& [p, w] : mu.atoms()) {
        cplx z = phi(p);
        acc += w * std::pow(z, m) * std::pow(std::conj(z), n);
    }
    return acc;
}

std::vector<cplx> moment_grid(const AtomicMeasure& mu, int max) {
    if (max < 0) throw std::invalid_argument("moment grid size must be nonnegative");
    const std::size_t side = static_cast<std::size_t>(max) + 1;
    std::vector<cplx> grid(side * side, cplx(0.0, 0.0));
    std::vector<cplx> zp(side), zbp(side);
    for (const auto& [p, w] : mu.atoms()) {
        cplx z = phi(p);
        zp[0] = zbp[0] = 1.0;
        for (std::size_t i = 1; i < side; ++i) {
            zp[i] = zp[i - 1] * z;
            zbp[i] = zbp[i - 1] * std::conj(z);
        }
        for (std::size_t a = 0; a < side; ++a)
            for (std::size_t b = 0; b < side; ++b) grid[a * side + b] += w * zp[a] * zbp[b];
    }
    return grid;
}

double total_mass(const AtomicMeasure& mu) {
    double s = 0.0;
    for (const auto& [p, w] : mu.atoms()) s += w;
    return s;
}

bool is_positive(const AtomicMeasure& mu, double tol) {
    return std::all_of(mu.atoms().begin(), mu.atoms().end(),
                       [tol](const auto& a) { return a.second >= tol; });
}

std::size_t support_size(const AtomicMeasure& mu) { return mu.size(); }

double max_atom_delta(const AtomicMeasure& a, const AtomicMeasure& b) {
    double best = 0.0;
    for (const auto& [p, w] : a.atoms()) best = std::max(best, std::fabs(w - b.weight_at(p)));
    for (const auto& [p, w] : b.atoms())
        if (a.atoms().find(p) == a.atoms().end()) best = std::max(best, std::fabs(w));
    return best;
}

}  // namespace trispec
