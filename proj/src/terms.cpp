#include "terms.hpp"

#include "counting.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trispec {

double ClosedForm::value() const {
    double s = 0.0;
    for (const auto& [c, r] : sqrt_terms) s += static_cast<double>(c) * std::sqrt(static_cast<double>(r));
    return s / static_cast<double>(den);
}

std::string ClosedForm::str() const {
    std::ostringstream os;
    bool plain = sqrt_terms.size() == 1 && sqrt_terms[0].second == 1;
    if (plain) {
        os << sqrt_terms[0].first;
        if (den != 1) os << "/" << den;
        return os.str();
    }
    os << "(";
    bool first = true;
    for (const auto& [c, r] : sqrt_terms) {
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        first = false;
        long a = c < 0 ? -c : c;
        if (r == 1) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << "sqrt" << r;
        }
    }
    os << ")/" << den;
    return os.str();
}

ClosedForm ClosedForm::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    ClosedForm f;
    f.sqrt_terms = {{num, 1}};
    f.den = den;
    return f;
}

ClosedForm ClosedForm::from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        Rational r = Rational::parse(j.get<std::string>());
        return rational(static_cast<long>(r.num()), static_cast<long>(r.den()));
    }
    if (j.is_number_integer()) return rational(j.get<long>(), 1);
    if (j.is_object() && j.contains("sqrt") && j.contains("den")) {
        ClosedForm f;
        for (const auto& t : j.at("sqrt")) {
            long r = t.at(1).get<long>();
            if (r < 1) throw std::invalid_argument("sqrt radicand must be positive");
            f.sqrt_terms.emplace_back(t.at(0).get<long>(), r);
        }
        f.den = j.at("den").get<long>();
        if (f.den <= 0) throw std::invalid_argument("closed form denominator must be positive");
        return f;
    }
    throw std::invalid_argument("unrecognised closed-form value");
}

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw std::invalid_argument(std::string("field '") + key + "' must be a rational string or integer");
}

TorusPoint point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("torus point must be a pair");
    return TorusPoint(Rational::parse(j.at(0).get<std::string>()), Rational::parse(j.at(1).get<std::string>()));
}

int small_int(const Rational& r, const char* what) {
    if (r.den() != 1) throw std::invalid_argument(std::string(what) + " must be an integer");
    return static_cast<int>(r.num());
}

}  // namespace

AtomicMeasure MeasureSpec::build() const {
    if (kind == "d") return d_measure(small_int(n, "d parameter"));
    if (kind == "j2_d") return j2_reweight(d_measure(small_int(n, "d parameter")));
    if (kind == "dd") return dd_measure(n);
    if (kind == "dnk") return unchecked ? dnk_measure_unchecked(n, k) : dnk_measure(n, k);
    if (kind == "prod") return uniform_roots_product(p, q);
    if (kind == "j2_prod") return j2_reweight(uniform_roots_product(p, q));
    if (kind == "dirac") {
        if (points.size() != 1) throw std::invalid_argument("dirac needs one point");
        return dirac(points[0]);
    }
    if (kind == "dirac_sum") {
        AtomicMeasure out;
        for (const auto& pt : points) out.add(pt, 1.0);
        return out;
    }
    if (kind == "sym_dirac_sum") {
        AtomicMeasure out;
        for (const auto& pt : points) out.add(symmetrize(dirac(pt)), 1.0);
        return out;
    }
    throw std::invalid_argument("unknown measure kind: " + kind);
}

std::string MeasureSpec::str() const {
    if (kind == "d") return "d(" + std::to_string(n.num()) + ")";
    if (kind == "j2_d") return "J2*d(" + std::to_string(n.num()) + ")";
    auto rs = [](const Rational& r) { return r.den() == 1 ? std::to_string(r.num()) : r.str(); };
    if (kind == "dd") return "dd(" + rs(n) + ")";
    if (kind == "dnk") return "dnk(" + rs(n) + "," + rs(k) + ")";
    if (kind == "prod") return "prod(" + std::to_string(p) + "," + std::to_string(q) + ")";
    if (kind == "j2_prod") return "J2*prod(" + std::to_string(p) + "," + std::to_string(q) + ")";
    if (kind == "dirac") return "delta" + (points.empty() ? std::string("()") : points[0].str());
    if (kind == "dirac_sum") return "sum of " + std::to_string(points.size()) + " deltas";
    if (kind == "sym_dirac_sum") return "sum of " + std::to_string(points.size()) + " symmetrized deltas";
    return kind;
}

MeasureSpec MeasureSpec::from_json(const nlohmann::json& j) {
    MeasureSpec s;
    s.kind = j.at("kind").get<std::string>();
    if (s.kind == "d" || s.kind == "j2_d" || s.kind == "dd") {
        s.n = rational_field(j, "n");
    } else if (s.kind == "dnk") {
        s.n = rational_field(j, "n");
        s.k = rational_field(j, "k");
    } else if (s.kind == "prod" || s.kind == "j2_prod") {
        s.p = j.at("p").get<int>();
        s.q = j.at("q").get<int>();
    } else if (s.kind == "dirac") {
        s.points = {point_from_json(j.at("at"))};
    } else if (s.kind == "dirac_sum" || s.kind == "sym_dirac_sum") {
        for (const auto& p : j.at("points")) s.points.push_back(point_from_json(p));
    } else {
        throw std::invalid_argument("unknown measure kind: " + s.kind);
    }
    return s;
}

Combination combination_from_json(const nlohmann::json& j) {
    Combination c;
    for (const auto& t : j) c.push_back(Term{ClosedForm::from_json(t.at("coef")), MeasureSpec::from_json(t.at("measure"))});
    return c;
}

AtomicMeasure build(const Combination& c) {
    AtomicMeasure out;
    for (const auto& t : c) out.add(t.measure.build(), t.coef.value());
    out.prune();
    return out;
}

double coefficient_mass(const Combination& c) {
    double s = 0.0;
    for (const auto& t : c) s += t.coef.value() * total_mass(t.measure.build());
    return s;
}

namespace {

// Lattice average of -4 q^2 where the lattice average of w1^a w2^b is 1 if
// `in_dual(a, b)` and 0 otherwise.
template <class Dual>
Rational j2_lattice_mass(Dual in_dual) {
    LaurentPoly2 q = q_poly();
    LaurentPoly2 q2 = q * q;
    BigInt s = 0;
    for (const auto& [key, c] : q2.terms())
        if (in_dual(key.first, key.second)) s += c;
    return Rational(-4 * s.convert_to<std::int64_t>());
}

long pos_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Rational exact_mass(const MeasureSpec& m) {
    if (m.kind == "d" || m.kind == "dd" || m.kind == "dnk" || m.kind == "prod" || m.kind == "dirac")
        return Rational(1);
    if (m.kind == "dirac_sum" || m.kind == "sym_dirac_sum") return Rational(static_cast<std::int64_t>(m.points.size()));
    if (m.kind == "j2_d") {
        const long n = static_cast<long>(m.n.num());
        return j2_lattice_mass([n](long a, long b) { return pos_mod(b, n) == 0 && pos_mod(a + 2 * b, 3 * n) == 0; });
    }
    if (m.kind == "j2_prod") {
        const long P = m.p, Q = m.q;
        return j2_lattice_mass([P, Q](long a, long b) { return pos_mod(a, P) == 0 && pos_mod(b, Q) == 0; });
    }
    throw std::invalid_argument("unknown measure kind: " + m.kind);
}

std::map<long, Rational> symbolic_mass(const Combination& c) {
    std::map<long, Rational> out;
    for (const auto& t : c) {
        Rational mass = exact_mass(t.measure);
        for (const auto& [coef, r] : t.coef.sqrt_terms) out[r] += Rational(coef, t.coef.den) * mass;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == Rational(0))
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::string describe(const Combination& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += " + ";
        out += c[i].coef.str() + "*" + c[i].measure.str();
    }
    return out;
}

}  // namespace trispec
