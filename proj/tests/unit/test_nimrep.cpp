#include "doctest.h"

#include <set>

#include "data.hpp"
#include "nimrep.hpp"

using namespace trispec;

namespace {

TorusPoint P(long a, long b, long c, long d) { return {Rational(a, b), Rational(c, d)}; }

std::set<TorusPoint> support(const AtomicMeasure& mu) {
    std::set<TorusPoint> s;
    for (const auto& [p, w] : mu.atoms()) s.insert(p);
    return s;
}

}  // namespace

TEST_CASE("exponent to angle map") {
    CHECK(theta_of_exponent(0, 0, 8) == P(1, 8, 1, 8));
    CHECK(theta_of_exponent(3, 3, 12) == P(1, 3, 1, 3));
    CHECK(theta_of_exponent(21, 0, 24) == P(1, 3, 5, 8));
    CHECK(theta_of_exponent(0, 21, 24) == P(5, 8, 1, 3));
}

TEST_CASE("shipped tables load and are unit mass") {
    auto table = load_graph_table(data::graphs_json());
    CHECK(table.size() == 6);
    for (const auto& e : table) {
        double s = 0.0;
        for (const auto& x : e.spectrum.exponents) s += x.weight;
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(total_mass(eigen_measure(e.spectrum)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    auto names = graph_names();
    for (const char* want : {"E8", "E24", "Dstar(n)", "A(n)"})
        CHECK(std::find(names.begin(), names.end(), std::string(want)) != names.end());
}

TEST_CASE("table loader rejects malformed documents") {
    CHECK_THROWS_AS(load_graph_table("{"), std::invalid_argument);
    CHECK_THROWS_AS(load_graph_table(R"({"schema_version":2,"graphs":[]})"), std::invalid_argument);
    const char* bad_sum = R"({"schema_version":1,"graphs":[{"name":"X","n":4,
        "exponents":[{"lambda":[0,0],"weight":"1/2"}],"stated":[]}]})";
    CHECK_THROWS_AS(load_graph_table(bad_sum), std::invalid_argument);
    const char* bad_range = R"({"schema_version":1,"graphs":[{"name":"X","n":4,
        "exponents":[{"lambda":[2,0],"weight":"1"}],"stated":[]}]})";
    CHECK_THROWS_AS(load_graph_table(bad_range), std::invalid_argument);
    const char* bad_weight = R"({"schema_version":1,"graphs":[{"name":"X","n":4,
        "exponents":[{"lambda":[0,0],"weight":"0"},{"lambda":[1,0],"weight":"1"}],"stated":[]}]})";
    CHECK_THROWS_AS(load_graph_table(bad_weight), std::invalid_argument);
    const char* ok = R"({"schema_version":1,"graphs":[{"name":"X","n":4,
        "exponents":[{"lambda":[0,0],"weight":"1/3"},{"lambda":[1,0],"weight":"1/3"},{"lambda":[0,1],"weight":"1/3"}],
        "stated":[{"coef":"1","measure":{"kind":"dd","n":"4"}}]}]})";
    auto t = load_graph_table(ok);
    REQUIRE(t.size() == 1);
    CHECK(max_atom_delta(eigen_measure(t[0].spectrum), dd_measure(Rational(4))) < 1e-12);
    CHECK(max_atom_delta(build(t[0].stated), dd_measure(Rational(4))) < 1e-12);
}

TEST_CASE("E8 measure has 72 atoms and equals its theorem atom for atom") {
    auto e = graph_entry("E8");
    auto mu = eigen_measure(e.spectrum);
    CHECK(mu.size() == 72);
    CHECK(max_atom_delta(mu, theorem_measure("E8", false)) < 1e-12);
    CHECK(total_mass(theorem_measure("E8", false)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("E1 and E2 at level 12 share a support with swapped weights") {
    auto a = eigen_measure(graph_entry("E1_12").spectrum);
    auto b = eigen_measure(graph_entry("E2_12").spectrum);
    CHECK(support(a) == support(b));
    CHECK(max_atom_delta(a, b) > 1e-3);
    // Vertex moments count closed paths at *, so they are integers; the two
    // graphs are isospectral but their * vertices see different path counts.
    for (int m = 0; m <= 6; ++m) {
        double x = moment(a, m, m).real(), y = moment(b, m, m).real();
        CHECK(std::fabs(x - std::round(x)) < 1e-8);
        CHECK(std::fabs(y - std::round(y)) < 1e-8);
    }
    CHECK(moment(a, 1, 1).real() != doctest::Approx(moment(b, 1, 1).real()));
}

TEST_CASE("property: every exceptional graph has integer vertex moments") {
    for (const char* id : {"E8", "E1_12", "E2_12", "E4_12", "E5_12", "E24"}) {
        auto mu = eigen_measure(graph_entry(id).spectrum);
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; n <= 6; ++n) {
                auto v = moment(mu, m, n);
                CHECK(std::fabs(v.real() - std::round(v.real())) < 1e-8);
                CHECK(std::fabs(v.imag()) < 1e-8);
            }
    }
}

TEST_CASE("A(4) spectrum is dd(4)") {
    CHECK(max_atom_delta(eigen_measure(a_spectrum(4)), dd_measure(Rational(4))) < 1e-12);
}

TEST_CASE("A(n) adjacency") {
    auto a4 = a_graph_adjacency(4);
    CHECK(a4.size == 3);
    for (int i = 0; i < 3; ++i) {
        long long row = 0;
        for (int j = 0; j < 3; ++j) row += a4.at(i, j);
        CHECK(row == 1);
    }
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(matrix_moments(a4, a4.star, m, n) == ((m - n) % 3 == 0 ? 1 : 0));
    auto a5 = a_graph_adjacency(5);
    CHECK(a5.size == 6);
    for (int i = 0; i < 6; ++i) {
        long long row = 0;
        for (int j = 0; j < 6; ++j) row += a5.at(i, j);
        CHECK(row <= 3);
    }
    for (int n = 4; n <= 12; ++n) {
        auto a = a_graph_adjacency(n);
        CHECK(is_normal(a));
        CHECK(matrix_moments(a, a.star, 0, 0) == 1);
        CHECK(matrix_moments(a, a.star, 1, 0) == 0);
    }
    IntMatrix skew;
    skew.size = 2;
    skew.a = {0, 1, 0, 0};
    CHECK_THROWS_AS(matrix_moments(skew, 0, 1, 1), std::domain_error);
}

TEST_CASE("property: A(n) adjacency moments match unit J^2 d(n)") {
    for (int n = 4; n <= 9; ++n) {
        auto adj = a_graph_adjacency(n);
        auto mu = j2_reweight(d_measure(n));
        mu = mu.scaled(1.0 / total_mass(mu));
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b)
                CHECK(std::abs(moment(mu, a, b) - static_cast<double>(matrix_moments(adj, adj.star, a, b))) < 1e-8);
    }
}

TEST_CASE("Dstar tables sum to 3 before rescaling") {
    for (int n = 5; n <= 12; ++n) {
        auto s = dstar_spectrum(n);
        CHECK(s.raw_weight_sum == doctest::Approx(3.0).epsilon(1e-12));
        auto thm = theorem_measure("Dstar(" + std::to_string(n) + ")", false);
        CHECK(total_mass(thm) == doctest::Approx(3.0).epsilon(1e-12));
    }
}

TEST_CASE("verify_graph reports") {
    auto e8 = verify_graph("E8", 6, 1e-8, false);
    CHECK(e8.pass);
    CHECK(e8.scale == doctest::Approx(1.0));
    auto d5 = verify_graph("Dstar(5)", 6, 1e-8, true);
    CHECK(d5.pass);
    CHECK(d5.scale == doctest::Approx(3.0));
    auto e4 = verify_graph("E4_12", 6, 1e-8, true);
    CHECK(e4.pass);
    REQUIRE(e4.stated.has_value());
    CHECK_FALSE(e4.stated->consistent);
    bool flagged = false;
    for (const auto& n : e4.notes) flagged = flagged || n.find("inconsistent") != std::string::npos;
    CHECK(flagged);
    CHECK(verify_graph("A(6)", 6, 1e-8, true).pass);
    CHECK_THROWS_AS(verify_graph("E9", 6, 1e-8, true), std::invalid_argument);
    CHECK_THROWS_AS(verify_graph("Dstar(4)", 6, 1e-8, true), std::invalid_argument);
}

TEST_CASE("report JSON carries the delta matrix") {
    auto r = verify_graph("E24", 3, 1e-8, true);
    auto j = r.to_json();
    CHECK(j["subject"] == "E24");
    CHECK(j["deltas"].size() == 4);
    CHECK(j["deltas"][0].size() == 4);
    CHECK(j["pass"] == true);
}
