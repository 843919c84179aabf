#include "doctest.h"

#include "counting.hpp"
#include "measure.hpp"
#include "support.hpp"

using namespace trispec;

TEST_CASE("Laurent polynomial basics") {
    CHECK(r_poly(0, 0).size() == 1);
    CHECK(r_poly(0, 0).constant_term() == 1);
    auto r10 = r_poly(1, 0);
    CHECK(r10.size() == 3);
    for (const auto& [key, c] : r10.terms()) CHECK(c == 1);
    CHECK(r_poly(1, 1).constant_term() == 3);
    auto q = q_poly();
    CHECK(q.size() == 6);
    CHECK(q.coefficient_sum() == 0);
    CHECK((q * q).constant_term() == -6);
    auto zero = q + q * LaurentPoly2::constant(-1);
    CHECK(zero.size() == 0);
    CHECK(LaurentPoly2::monomial(2, -1, 5).pow(3).coefficient(6, -3) == 125);
}

TEST_CASE("q evaluates to iJ/2pi^2") {
    for (int i = 0; i < 100; ++i) {
        auto p = testsupport::random_rational_point();
        double t1 = p.theta1.to_double(), t2 = p.theta2.to_double();
        cplx want(0.0, jacobian_theta(p) / (2 * kPi * kPi));
        CHECK(std::abs(q_poly().evaluate(t1, t2) - want) < 1e-9);
    }
    cplx v = q_poly().evaluate(0.25, 0.25);
    CHECK(std::abs(v - cplx(0, jacobian_theta({Rational(1, 4), Rational(1, 4)}) / (2 * kPi * kPi))) < 1e-12);
}

TEST_CASE("phi polynomial evaluates to phi") {
    for (int i = 0; i < 100; ++i) {
        auto p = testsupport::random_rational_point();
        CHECK(std::abs(phi_poly().evaluate(p.theta1.to_double(), p.theta2.to_double()) - phi(p)) < 1e-12);
    }
}

TEST_CASE("invariant dimensions: small values") {
    CHECK(dim_torus_invariants(0) == 1);
    CHECK(dim_torus_invariants(1) == 3);
    CHECK(dim_su3_invariants(0) == 1);
    CHECK(dim_su3_invariants(1) == 1);
    CHECK(dim_su3_invariants(2) == 2);
    CHECK(fusion_walk_oracle(0) == 1);
    CHECK(fusion_walk_oracle(1) == 1);
    CHECK_THROWS_AS(fusion_walk_oracle(9), std::invalid_argument);
}

TEST_CASE("invariant dimensions agree with the walk oracles") {
    for (int k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(dim_torus_invariants(k) == torus_walk_oracle(k));
        CHECK(dim_su3_invariants(k) == fusion_walk_oracle(k));
    }
}

TEST_CASE("divisibility by 6 up to k = 8") {
    for (int k = 0; k <= 8; ++k) {
        BigInt c = -(r_poly(k, k) * (q_poly() * q_poly())).constant_term();
        CHECK(c % 6 == 0);
        CHECK(c >= 0);
    }
}

TEST_CASE("Kuperberg coefficient") {
    CHECK(kuperberg_sextic().coefficient(-1, 2) == 1);
    CHECK(kuperberg_coeff(0, 0) == 1);
    for (int k = 0; k <= 5; ++k) CHECK(kuperberg_coeff(k, k) == dim_su3_invariants(k));
    CHECK_THROWS_AS(kuperberg_coeff(7, 6), std::invalid_argument);
}

TEST_CASE("lattice rule on D_N reproduces the SU(3) dimensions") {
    for (int k = 0; k <= 4; ++k) {
        auto mu = j2_reweight(d_measure(3 * k + 3));
        double v = moment(mu, k, k).real() / 24.0;
        CHECK(v == doctest::Approx(static_cast<double>(dim_su3_invariants(k))).epsilon(1e-10));
    }
}
