#include "serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "report.hpp"

namespace trispec {

namespace {

double parse_double(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("not a number: " + s);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

nlohmann::json measure_to_json(const AtomicMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& [p, w] : mu.atoms()) {
        cplx z = phi(p);
        atoms.push_back({{"theta1", p.theta1.str()},
                         {"theta2", p.theta2.str()},
                         {"weight", w},
                         {"z", {z.real(), z.imag()}}});
    }
    return {{"atoms", atoms}, {"size", mu.size()}, {"mass", total_mass(mu)}};
}

AtomicMeasure measure_from_json(const nlohmann::json& j) {
    AtomicMeasure mu;
    try {
        for (const auto& a : j.at("atoms"))
            mu.add(TorusPoint(Rational::parse(a.at("theta1").get<std::string>()),
                              Rational::parse(a.at("theta2").get<std::string>())),
                   a.at("weight").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed measure document: ") + e.what());
    }
    return mu;
}

std::string measure_to_csv(const AtomicMeasure& mu) {
    std::string out = "theta1,theta2,weight,re_z,im_z\n";
    for (const auto& [p, w] : mu.atoms()) {
        cplx z = phi(p);
        out += p.theta1.str() + "," + p.theta2.str() + "," + format_double(w) + "," + format_double(z.real()) + "," +
               format_double(z.imag()) + "\n";
    }
    return out;
}

AtomicMeasure measure_from_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line) || line.rfind("theta1,theta2,weight", 0) != 0)
        throw std::invalid_argument("measure CSV needs a theta1,theta2,weight header");
    AtomicMeasure mu;
    while (std::getline(ss, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() < 3) throw std::invalid_argument("short CSV row: " + line);
        mu.add(TorusPoint(Rational::parse(cells[0]), Rational::parse(cells[1])), parse_double(cells[2]));
    }
    return mu;
}

std::string sample_discoid_csv(int grid) {
    if (grid < 2) throw std::invalid_argument("grid must be at least 2");
    std::string out = "theta1,theta2,re_z,im_z,abs_j\n";
    for (int a = 0; a < grid; ++a)
        for (int b = 0; b < grid; ++b) {
            TorusPoint p(Rational(a, grid), Rational(b, grid));
            cplx z = phi(p);
            double j = std::fabs(jacobian_theta(p));
            if (j < 1e-12) j = 0.0;
            out += p.theta1.str() + "," + p.theta2.str() + "," + format_double(z.real()) + "," +
                   format_double(z.imag()) + "," + format_double(j) + "\n";
        }
    return out;
}

}  // namespace trispec
