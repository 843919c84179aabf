#pragma once

#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "torus.hpp"

namespace trispec {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in w1, w2. Keys are exponent pairs (a, b) for w1^a w2^b.
class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, BigInt>;

    LaurentPoly2() = default;
    static LaurentPoly2 constant(long c);
    static LaurentPoly2 monomial(int a, int b, long c = 1);

    void add_term(int a, int b, const BigInt& c);
    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    BigInt coefficient(int a, int b) const;
    BigInt constant_term() const { return coefficient(0, 0); }
    BigInt coefficient_sum() const;

    cplx evaluate(double t1, double t2) const;

    friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
    friend LaurentPoly2 operator+(const LaurentPoly2& x, const LaurentPoly2& y);
    LaurentPoly2 pow(int e) const;

private:
    Map terms_;
};

LaurentPoly2 phi_poly();       // w1 + w2^-1 + w1^-1 w2
LaurentPoly2 phi_bar_poly();   // w1^-1 + w2 + w1 w2^-1
LaurentPoly2 r_poly(int m, int n);
LaurentPoly2 q_poly();         // iJ / 2 pi^2
LaurentPoly2 kuperberg_sextic();

BigInt dim_torus_invariants(int k);
BigInt dim_su3_invariants(int k);
BigInt torus_walk_oracle(int k);
BigInt fusion_walk_oracle(int k);
BigInt kuperberg_coeff(int k, int n);

}  // namespace trispec
