#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"

#include "trispec/trispec.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    ts_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("torus functions through the C API") {
    double re = 0, im = 0;
    REQUIRE(ts_phi("0", "0", &re, &im) == TS_OK);
    CHECK(re == doctest::Approx(3.0));
    CHECK(im == doctest::Approx(0.0));
    double j = 0;
    REQUIRE(ts_jacobian("1/4", "1/4", &j) == TS_OK);
    CHECK(j * j == doctest::Approx(64 * std::pow(3.14159265358979323846, 4)));
    double pairs[24];
    REQUIRE(ts_phi_inverse(0.5, 0.1, pairs) == TS_OK);
    CHECK(ts_phi("1/x", "0", &re, &im) == TS_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(ts_last_error()) > 0);
    CHECK(ts_phi(nullptr, "0", &re, &im) == TS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("measure handles") {
    ts_measure* m = nullptr;
    REQUIRE(ts_measure_family("dnk", "8", "1/12", 0, 0, &m) == TS_OK);
    size_t n = 0;
    ts_measure_size(m, &n);
    CHECK(n == 36);
    double mass = 0;
    ts_measure_mass(m, &mass);
    CHECK(mass == doctest::Approx(1.0));
    double re, im;
    REQUIRE(ts_measure_moment(m, 0, 0, &re, &im) == TS_OK);
    CHECK(re == doctest::Approx(1.0));
    CHECK(ts_measure_moment(m, -1, 0, &re, &im) == TS_ERR_INVALID_ARGUMENT);
    ts_measure_free(m);

    CHECK(ts_measure_family("dnk", "8", "1/7", 0, 0, &m) == TS_ERR_INVALID_ARGUMENT);
    CHECK(ts_measure_family("nope", "8", nullptr, 0, 0, &m) == TS_ERR_NOT_FOUND);
    CHECK(ts_measure_graph("E9", 0, &m) == TS_ERR_NOT_FOUND);

    REQUIRE(ts_measure_graph("E8", 1, &m) == TS_OK);
    ts_measure_size(m, &n);
    CHECK(n == 72);
    ts_measure_free(m);
    REQUIRE(ts_measure_group("H", 1, &m) == TS_OK);
    ts_measure_free(m);
    ts_measure_free(nullptr);
}

TEST_CASE("round trip through JSON and CSV is exact") {
    for (const char* g : {"E8", "E24", "Dstar(7)"}) {
        ts_measure* m = nullptr;
        REQUIRE(ts_measure_graph(g, 0, &m) == TS_OK);
        char* js = nullptr;
        char* cs = nullptr;
        REQUIRE(ts_measure_to_json(m, &js) == TS_OK);
        REQUIRE(ts_measure_to_csv(m, &cs) == TS_OK);
        std::string json_text = take(js), csv_text = take(cs);
        ts_measure *a = nullptr, *b = nullptr;
        REQUIRE(ts_measure_from_json(json_text.c_str(), &a) == TS_OK);
        REQUIRE(ts_measure_from_csv(csv_text.c_str(), &b) == TS_OK);
        double d1 = 1, d2 = 1;
        ts_measure_max_delta(m, a, &d1);
        ts_measure_max_delta(m, b, &d2);
        CHECK(d1 == 0.0);
        CHECK(d2 == 0.0);
        char* again = nullptr;
        ts_measure_to_json(a, &again);
        CHECK(take(again) == json_text);
        auto doc = nlohmann::json::parse(json_text);
        CHECK(doc["atoms"][0]["theta1"].is_string());
        CHECK(doc["atoms"][0]["z"].size() == 2);
        CHECK(csv_text.rfind("theta1,theta2,weight,re_z,im_z\n", 0) == 0);
        ts_measure_free(m);
        ts_measure_free(a);
        ts_measure_free(b);
    }
    ts_measure* bad = nullptr;
    CHECK(ts_measure_from_json("{\"atoms\":[{\"theta1\":1}]}", &bad) != TS_OK);
    CHECK(ts_measure_from_json("not json", &bad) == TS_ERR_PARSE);
    CHECK(ts_measure_from_csv("a,b\n", &bad) == TS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("listing, verification, dims, sampling") {
    char* s = nullptr;
    REQUIRE(ts_list("groups", &s) == TS_OK);
    auto groups = nlohmann::json::parse(take(s));
    CHECK(groups.size() == 11);
    REQUIRE(ts_list("measures", &s) == TS_OK);
    CHECK(nlohmann::json::parse(take(s)).size() == 6);
    CHECK(ts_list("shapes", &s) == TS_ERR_NOT_FOUND);

    ts_report* r = nullptr;
    REQUIRE(ts_verify("group", "C(4)", 6, 1e-8, 1, &r) == TS_OK);
    int pass = 0;
    ts_report_pass(r, &pass);
    CHECK(pass == 1);
    char* js = nullptr;
    ts_report_to_json(r, &js);
    CHECK(nlohmann::json::parse(take(js))["subject"] == "C(4)");
    ts_report_free(r);
    CHECK(ts_verify("graph", "E8", 6, -1.0, 1, &r) == TS_ERR_INVALID_ARGUMENT);
    CHECK(ts_verify("planet", "E8", 6, 1e-8, 1, &r) == TS_ERR_NOT_FOUND);

    REQUIRE(ts_dims(2, 1, &s) == TS_OK);
    auto row = nlohmann::json::parse(take(s));
    CHECK(row["dim_su3"] == "2");
    CHECK(row["fusion_oracle"] == "2");
    CHECK(ts_dims(9, 0, &s) == TS_ERR_INVALID_ARGUMENT);

    REQUIRE(ts_sample_discoid(2, &s) == TS_OK);
    std::string csv = take(s);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(ts_sample_discoid(1, &s) == TS_ERR_INVALID_ARGUMENT);
}
