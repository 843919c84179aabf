#include "doctest.h"

#include "measure.hpp"
#include "support.hpp"
#include "terms.hpp"

using namespace trispec;
using testsupport::rng;

namespace {

TorusPoint P(long a, long b, long c, long d) { return {Rational(a, b), Rational(c, d)}; }

bool weyl_invariant(const AtomicMeasure& mu) { return max_atom_delta(symmetrize(mu), mu) < 1e-14; }

AtomicMeasure random_measure(int atoms) {
    AtomicMeasure mu;
    std::uniform_real_distribution<double> w(-1.0, 1.0);
    for (int i = 0; i < atoms; ++i) mu.add(testsupport::random_rational_point(24), w(rng()));
    return mu;
}

}  // namespace

TEST_CASE("product of roots of unity") {
    auto one = uniform_roots_product(1, 1);
    CHECK(one.size() == 1);
    CHECK(total_mass(one) == doctest::Approx(1.0));
    auto nine = uniform_roots_product(3, 3);
    CHECK(nine.size() == 9);
    CHECK(moment(nine, 1, 1).real() == doctest::Approx(3.0));
    auto four = uniform_roots_product(2, 2);
    CHECK(four.size() == 4);
    CHECK(four.weight_at(P(1, 2, 1, 2)) == doctest::Approx(0.25));
}

TEST_CASE("d(n) is uniform on 3n^2 points") {
    auto d1 = d_measure(1);
    CHECK(d1.size() == 3);
    CHECK(d1.weight_at(P(1, 3, 2, 3)) == doctest::Approx(1.0 / 3));
    CHECK(d1.weight_at(P(2, 3, 1, 3)) == doctest::Approx(1.0 / 3));
    for (int n = 1; n <= 9; ++n) {
        auto d = d_measure(n);
        CHECK(d.size() == static_cast<std::size_t>(3 * n * n));
        CHECK(total_mass(d) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(weyl_invariant(d));
    }
}

TEST_CASE("dd(n) supports") {
    auto d4 = dd_measure(Rational(4));
    CHECK(d4.size() == 18);
    for (const auto& p : {P(1, 4, 1, 4), P(5, 12, 1, 3), P(1, 3, 5, 12)}) CHECK(d4.weight_at(p) > 0);
    CHECK(dd_measure(Rational(2)).size() == 9);
    auto d8 = dd_measure(Rational(8));
    for (const auto& p : {P(1, 8, 1, 8), P(1, 3, 13, 24), P(13, 24, 1, 3)}) CHECK(d8.weight_at(p) > 0);
    CHECK_THROWS_AS(dd_measure(Rational(3, 2)), std::invalid_argument);
    for (auto n : {Rational(5, 2), Rational(12, 5), Rational(4), Rational(7), Rational(24, 7), Rational(8, 3), Rational(24)}) {
        auto d = dd_measure(n);
        CHECK(d.size() == 18);
        CHECK(total_mass(d) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(weyl_invariant(d));
    }
}

TEST_CASE("dnk supports") {
    auto e = dnk_measure(Rational(24, 5), Rational(1, 12));
    CHECK(e.size() == 36);
    CHECK(e.weight_at(P(1, 4, 3, 8)) > 0);
    CHECK(e.weight_at(P(7, 24, 5, 24)) > 0);
    CHECK(support_size(dnk_measure(Rational(8), Rational(1, 12))) == 36);
    CHECK(dnk_measure(Rational(8), Rational(0)).size() == 18);
    CHECK(dnk_measure(Rational(8), Rational(1, 8)).size() == 18);
    CHECK_THROWS_AS(dnk_measure(Rational(8), Rational(1, 7)), std::invalid_argument);
    CHECK_THROWS_AS(dnk_measure(Rational(2), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(dnk_measure(Rational(8), Rational(-1, 8)), std::invalid_argument);
    for (auto [n, k] : std::vector<std::pair<Rational, Rational>>{{Rational(5), Rational(1, 12)},
                                                                 {Rational(7), Rational(1, 10)},
                                                                 {Rational(8), Rational(1, 24)},
                                                                 {Rational(21, 4), Rational(1, 21)},
                                                                 {Rational(10), Rational(1, 30)},
                                                                 {Rational(24, 5), Rational(1, 12)}}) {
        auto d = dnk_measure(n, k);
        CHECK(d.size() == 36);
    }
}

TEST_CASE("property: every dnk measure is a Weyl-invariant probability measure") {
    for (int n = 3; n <= 12; ++n)
        for (int j = 0; j <= 12; ++j) {
            Rational k(j, 12 * n);
            if (k > Rational(1, n)) continue;
            auto d = dnk_measure(Rational(n), k);
            CHECK(d.size() <= 36);
            CHECK(weyl_invariant(d));
            CHECK(total_mass(d) == doctest::Approx(1.0).epsilon(1e-12));
        }
}

TEST_CASE("coincident seed orbits merge at degenerate parameters") {
    // tau = e^{2 pi i/3}: the three dd seeds coincide on the zero orbit.
    auto d3 = dd_measure(Rational(3));
    CHECK(d3.size() == 6);
    for (const auto& [p, w] : d3.atoms()) CHECK(std::abs(phi(p)) < 1e-12);
    // (a, b + k) = (b + k, a) when a = b + k.
    CHECK(dnk_measure(Rational(4), Rational(1, 12)).size() == 18);
    CHECK(dnk_measure(Rational(6), Rational(1, 6)).size() == 9);
    CHECK(dnk_measure(Rational(3), Rational(1, 12)).size() == 18);
}

TEST_CASE("the four relations between families hold atom for atom") {
    CHECK(max_atom_delta(j2_reweight(d_measure(3)).scaled(3), j2_reweight(uniform_roots_product(3, 3))) < 1e-10);
    CHECK(max_atom_delta(dd_measure(Rational(4)), j2_reweight(d_measure(4)).scaled(1.0 / 24)) < 1e-10);
    for (int n = 3; n <= 10; ++n)
        CHECK(max_atom_delta(dnk_measure(Rational(n), Rational(0)), dd_measure(Rational(n))) < 1e-10);
    CHECK(max_atom_delta(dnk_measure(Rational(6), Rational(1, 6)), dd_measure(Rational(2))) < 1e-10);
    CHECK(max_atom_delta(combine({{4.0 / 3, d_measure(2)}, {-1.0 / 3, d_measure(1)}}), dd_measure(Rational(2))) < 1e-10);
}

TEST_CASE("dirac and combine") {
    auto d = dirac(P(0, 1, 0, 1));
    CHECK(total_mass(d) == 1.0);
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) CHECK(moment(d, m, n).real() == doctest::Approx(std::pow(3.0, m + n)));
    auto zero = d.scaled(0.0);
    zero.prune();
    CHECK(zero.empty());
    CHECK(combine({}).empty());
    auto mu = d_measure(3);
    CHECK(total_mass(combine({{2.0, mu}})) == doctest::Approx(2 * total_mass(mu)));
}

TEST_CASE("J^2 reweighting drops deltoid atoms") {
    CHECK(j2_reweight(dirac(P(1, 3, 2, 3))).empty());
    auto w = j2_reweight(dirac(P(1, 4, 1, 4)));
    CHECK(w.weight_at(P(1, 4, 1, 4)) == doctest::Approx(64.0));
}

TEST_CASE("symmetrize") {
    CHECK(max_atom_delta(symmetrize(dirac(P(0, 1, 0, 1))), dirac(P(0, 1, 0, 1))) < 1e-15);
    auto s = symmetrize(dirac(P(1, 3, 0, 1)));
    CHECK(s.size() == 6);
    for (const auto& [p, w] : s.atoms()) {
        CHECK(w == doctest::Approx(1.0 / 6));
        CHECK(std::abs(phi(p)) < 1e-12);
    }
    for (int i = 0; i < 100; ++i) {
        auto mu = random_measure(5);
        auto once = symmetrize(mu);
        CHECK(max_atom_delta(symmetrize(once), once) < 1e-15);
        CHECK(total_mass(once) == doctest::Approx(total_mass(mu)));
    }
}

TEST_CASE("property: moments are Hermitian and linear") {
    for (int i = 0; i < 50; ++i) {
        auto a = random_measure(6), b = random_measure(4);
        std::uniform_real_distribution<double> c(-2.0, 2.0);
        double ca = c(rng()), cb = c(rng());
        auto mix = combine({{ca, a}, {cb, b}});
        CHECK(std::abs(moment(a, 0, 0) - total_mass(a)) < 1e-12);
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                CHECK(std::abs(moment(a, m, n) - std::conj(moment(a, n, m))) < 1e-10);
                CHECK(std::abs(moment(mix, m, n) - (ca * moment(a, m, n) + cb * moment(b, m, n))) < 1e-9);
            }
    }
}

TEST_CASE("moment grid matches pointwise moments") {
    auto mu = dd_measure(Rational(7));
    auto g = moment_grid(mu, 4);
    REQUIRE(g.size() == 25);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) CHECK(std::abs(g[m * 5 + n] - moment(mu, m, n)) < 1e-12);
}

TEST_CASE("positivity") {
    CHECK(is_positive(d_measure(4)));
    CHECK_FALSE(is_positive(dirac(P(0, 1, 0, 1)).scaled(-1)));
}

TEST_CASE("exact masses of constructor calls") {
    MeasureSpec m;
    m.kind = "j2_d";
    m.n = Rational(4);
    CHECK(exact_mass(m) == Rational(24));
    CHECK(total_mass(m.build()) == doctest::Approx(24.0));
    m.n = Rational(3);
    CHECK(exact_mass(m) == Rational(24));
    m.n = Rational(2);
    CHECK(exact_mass(m) == Rational(0));
    m.kind = "j2_prod";
    m.p = m.q = 3;
    CHECK(exact_mass(m) == Rational(72));
    for (int n = 1; n <= 8; ++n) {
        m.kind = "j2_d";
        m.n = Rational(n);
        CHECK(total_mass(m.build()) == doctest::Approx(exact_mass(m).to_double()).epsilon(1e-12));
        m.kind = "j2_prod";
        m.p = n;
        m.q = n + 1;
        CHECK(total_mass(m.build()) == doctest::Approx(exact_mass(m).to_double()).epsilon(1e-12));
    }
}
