#include "relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "measure.hpp"

namespace trispec {

namespace {

struct Side {
    std::string description;
    AtomicMeasure lhs;
    AtomicMeasure rhs;
};

std::vector<Side> sides(const std::string& name) {
    if (name == "relation1")
        return {{"3 J^2 d3 = J^2 d_{3/2} x d_{3/2}", j2_reweight(d_measure(3)).scaled(3.0),
                 j2_reweight(uniform_roots_product(3, 3))}};
    if (name == "relation2")
        return {{"dd(4) = (1/24) J^2 d4", dd_measure(Rational(4)), j2_reweight(d_measure(4)).scaled(1.0 / 24.0)}};
    if (name == "relation3") {
        std::vector<Side> out;
        for (int n = 3; n <= 12; ++n)
            out.push_back({"dnk(" + std::to_string(n) + ",0) = dd(" + std::to_string(n) + ")",
                           dnk_measure(Rational(n), Rational(0)), dd_measure(Rational(n))});
        out.push_back({"dnk(7/2,0) = dd(7/2)", dnk_measure(Rational(7, 2), Rational(0)), dd_measure(Rational(7, 2))});
        return out;
    }
    if (name == "relation4")
        return {{"dnk(6,1/6) = dd(2)", dnk_measure(Rational(6), Rational(1, 6)), dd_measure(Rational(2))},
                {"dd(2) = (1/3)(4 d2 - d1)", dd_measure(Rational(2)),
                 combine({{4.0 / 3.0, d_measure(2)}, {-1.0 / 3.0, d_measure(1)}})}};
    throw std::invalid_argument("unknown relation: " + name);
}

}  // namespace

std::vector<std::string> relation_names() { return {"relation1", "relation2", "relation3", "relation4"}; }

VerificationReport verify_relation(const std::string& name, double tol) {
    VerificationReport r;
    r.subject = name;
    r.scope = "relation";
    r.mode = "atoms";
    r.tol = tol;
    r.pass = true;
    std::vector<std::string> parts;
    for (const auto& s : sides(name)) {
        double d = max_atom_delta(s.lhs, s.rhs);
        r.deltas.push_back(d);
        r.max_delta = std::max(r.max_delta, d);
        r.notes.push_back(s.description + ": " + std::to_string(s.lhs.size()) + " vs " +
                          std::to_string(s.rhs.size()) + " atoms, max weight delta " + format_double(d));
        parts.push_back(s.description);
    }
    r.pass = r.max_delta < tol;
    for (std::size_t i = 0; i < parts.size(); ++i) r.combination += (i ? "; " : "") + parts[i];
    return r;
}

std::vector<VerificationReport> verify_relations(double tol) {
    std::vector<VerificationReport> out;
    for (const auto& n : relation_names()) out.push_back(verify_relation(n, tol));
    return out;
}

}  // namespace trispec
