#include "counting.hpp"

#include <stdexcept>
#include <vector>

namespace trispec {

LaurentPoly2 LaurentPoly2::constant(long c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int a, int b, long c) {
    LaurentPoly2 p;
    p.add_term(a, b, BigInt(c));
    return p;
}

void LaurentPoly2::add_term(int a, int b, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly2::coefficient(int a, int b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly2::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

cplx LaurentPoly2::evaluate(double t1, double t2) const {
    cplx acc(0.0, 0.0);
    for (const auto& [k, c] : terms_)
        acc += c.convert_to<double>() * std::polar(1.0, 2.0 * kPi * (k.first * t1 + k.second * t2));
    return acc;
}

LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y) {
    LaurentPoly2 out;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) out.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return out;
}

LaurentPoly2 operator+(const LaurentPoly2& x, const LaurentPoly2& y) {
    LaurentPoly2 out = x;
    for (const auto& [k, c] : y.terms_) out.add_term(k.first, k.second, c);
    return out;
}

LaurentPoly2 LaurentPoly2::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    LaurentPoly2 result = constant(1);
    LaurentPoly2 base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly2 phi_poly() {
    return LaurentPoly2::monomial(1, 0) + LaurentPoly2::monomial(0, -1) + LaurentPoly2::monomial(-1, 1);
}

LaurentPoly2 phi_bar_poly() {
    return LaurentPoly2::monomial(-1, 0) + LaurentPoly2::monomial(0, 1) + LaurentPoly2::monomial(1, -1);
}

LaurentPoly2 r_poly(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("r_poly needs m, n >= 0");
    return phi_poly().pow(m) * phi_bar_poly().pow(n);
}

LaurentPoly2 q_poly() {
    LaurentPoly2 q;
    q.add_term(1, 1, 1);
    q.add_term(-1, -1, -1);
    q.add_term(2, -1, -1);
    q.add_term(-2, 1, 1);
    q.add_term(-1, 2, -1);
    q.add_term(1, -2, 1);
    return q;
}

LaurentPoly2 kuperberg_sextic() {
    LaurentPoly2 s;
    s.add_term(-1, 2, 1);
    s.add_term(1, 1, -1);
    s.add_term(2, -1, 1);
    s.add_term(1, -2, -1);
    s.add_term(-1, -1, 1);
    s.add_term(-2, 1, -1);
    return s;
}

BigInt dim_torus_invariants(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    return r_poly(k, k).constant_term();
}

BigInt dim_su3_invariants(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    LaurentPoly2 q = q_poly();
    BigInt c = -(r_poly(k, k) * (q * q)).constant_term();
    if (c % 6 != 0) throw std::logic_error("constant term not divisible by 6");
    return c / 6;
}

// Closed walks on Z^2: k steps from {(1,0),(0,-1),(-1,1)} then k steps of their negatives.
BigInt torus_walk_oracle(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const int off = k + 1;
    const int side = 2 * off + 1;
    std::vector<BigInt> cur(static_cast<std::size_t>(side) * side, 0), next;
    auto at = [side](int x, int y) { return static_cast<std::size_t>(y) * side + x; };
    cur[at(off, off)] = 1;
    const int fwd[3][2] = {{1, 0}, {0, -1}, {-1, 1}};
    for (int step = 0; step < 2 * k; ++step) {
        int sign = step < k ? 1 : -1;
        next.assign(cur.size(), 0);
        for (int y = 0; y < side; ++y)
            for (int x = 0; x < side; ++x) {
                const BigInt& c = cur[at(x, y)];
                if (c == 0) continue;
                for (const auto& s : fwd) {
                    int nx = x + sign * s[0], ny = y + sign * s[1];
                    if (nx < 0 || ny < 0 || nx >= side || ny >= side) continue;
                    next[at(nx, ny)] += c;
                }
            }
        cur.swap(next);
    }
    return cur[at(off, off)];
}

// Multiplicity of the trivial weight in V^k (x) Vbar^k, by fusing dominant
// weights (a, b) with rho = (1,0) k times and then rhobar = (0,1) k times.
BigInt fusion_walk_oracle(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k > 8) throw std::invalid_argument("fusion oracle is capped at k = 8");
    std::map<std::pair<int, int>, BigInt> cur{{{0, 0}, 1}};
    for (int step = 0; step < 2 * k; ++step) {
        bool bar = step >= k;
        std::map<std::pair<int, int>, BigInt> next;
        for (const auto& [w, c] : cur) {
            auto [a, b] = w;
            if (!bar) {
                next[{a + 1, b}] += c;
                if (a >= 1) next[{a - 1, b + 1}] += c;
                if (b >= 1) next[{a, b - 1}] += c;
            } else {
                next[{a, b + 1}] += c;
                if (b >= 1) next[{a + 1, b - 1}] += c;
                if (a >= 1) next[{a - 1, b}] += c;
            }
        }
        cur.swap(next);
    }
    auto it = cur.find({0, 0});
    return it == cur.end() ? BigInt(0) : it->second;
}

BigInt kuperberg_coeff(int k, int n) {
    if (k < 0 || n < 0) throw std::invalid_argument("k, n must be nonnegative");
    if (k + n > 12) throw std::invalid_argument("kuperberg_coeff is limited to k + n <= 12");
    return (r_poly(k, n) * kuperberg_sextic()).coefficient(-1, 2);
}

}  // namespace trispec
