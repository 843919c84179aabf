#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trispec {

// Small exact rational over int64. Intermediate products go through __int128
// and throw on overflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // Representative in [0,1).
    Rational mod1() const {
        std::int64_t r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p/q", "p" or "-p/q".
    static Rational parse(std::string_view s);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

private:
    using i128 = __int128;
    static i128 wide(std::int64_t v) { return static_cast<i128>(v); }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lim = static_cast<i128>(INT64_MAX);
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) { *this = from128(n, d); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view s) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    auto to_int = [](std::string_view v) -> std::int64_t {
        if (v.empty()) throw std::invalid_argument("empty integer in rational");
        std::size_t i = 0;
        bool neg = false;
        if (v[0] == '-' || v[0] == '+') {
            neg = v[0] == '-';
            i = 1;
        }
        if (i == v.size()) throw std::invalid_argument("bad rational");
        std::int64_t out = 0;
        for (; i < v.size(); ++i) {
            char c = v[i];
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + std::string(v));
            if (out > (INT64_MAX - (c - '0')) / 10) throw std::overflow_error("rational literal too large");
            out = out * 10 + (c - '0');
        }
        return neg ? -out : out;
    };
    s = trim(s);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(to_int(s));
    std::int64_t n = to_int(trim(s.substr(0, slash)));
    std::int64_t d = to_int(trim(s.substr(slash + 1)));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
}

}  // namespace trispec
