#include "subgroups.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "data.hpp"
#include "ids.hpp"

namespace trispec {

void validate_group(const GroupSpec& g) {
    if (g.order <= 0) throw std::invalid_argument(g.name + ": order must be positive");
    long sum = 0;
    int identity = 0;
    const TorusPoint origin(Rational(0), Rational(0));
    for (const auto& c : g.classes) {
        if (c.size < 1) throw std::invalid_argument(g.name + ": class size must be positive");
        if (deltoid_radicand(phi(c.rep)) < -1e-9) throw std::invalid_argument(g.name + ": class value outside the discoid");
        sum += c.size;
        if (c.size == 1 && c.rep == origin) ++identity;
    }
    if (sum != g.order)
        throw std::invalid_argument(g.name + ": class equation fails (" + std::to_string(sum) +
                                    " != " + std::to_string(g.order) + ")");
    if (identity != 1) throw std::invalid_argument(g.name + ": expected exactly one identity class");
}

AtomicMeasure char_measure(const GroupSpec& g) {
    validate_group(g);
    AtomicMeasure raw;
    for (const auto& c : g.classes) raw.add(c.rep, static_cast<double>(c.size) / static_cast<double>(g.order));
    return symmetrize(raw);
}

cplx character_moment(const GroupSpec& g, int m, int n) {
    cplx acc(0.0, 0.0);
    for (const auto& c : g.classes) {
        cplx z = phi(c.rep);
        acc += static_cast<double>(c.size) / static_cast<double>(g.order) * std::pow(z, m) * std::pow(std::conj(z), n);
    }
    return acc;
}

namespace {

bool in_closed_c(const TorusPoint& p) { return in_fundamental_domain(p); }
bool in_open_c(const TorusPoint& p) { return in_fundamental_domain_interior(p); }

std::vector<TorusPoint> lattice(int n) {
    std::vector<TorusPoint> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.emplace_back(Rational(a, n), Rational(b, n));
    return out;
}

const TorusPoint& vertex(int i) {
    static const TorusPoint v[3] = {TorusPoint(Rational(0), Rational(0)), TorusPoint(Rational(1, 3), Rational(2, 3)),
                                    TorusPoint(Rational(2, 3), Rational(1, 3))};
    return v[i];
}

}  // namespace

std::vector<TorusPoint> kn_set(int n) {
    if (n < 2) throw std::invalid_argument("K_n needs n >= 2");
    const WeylElement& t2 = weyl_group()[1];
    std::vector<TorusPoint> out;
    for (const auto& p : lattice(n)) {
        if (p == vertex(0) || p == vertex(1) || p == vertex(2)) continue;
        if (in_closed_c(p) || in_open_c(weyl_apply(t2, p))) out.push_back(p);
    }
    return out;
}

std::vector<TorusPoint> knprime_set(int n) {
    if (n < 2) throw std::invalid_argument("K_n' needs n >= 2");
    std::vector<TorusPoint> out;
    for (const auto& p : lattice(n))
        if (in_open_c(p)) out.push_back(p);
    return out;
}

TorusPoint theta_k_map(const Rational& kin) {
    const Rational k = kin.mod1();
    const Rational half(1, 2), quarter(1, 4);
    TorusPoint out;
    if (Rational(1, 6) <= k && k < half)
        out = TorusPoint(k / Rational(2) + quarter, k);
    else if (half <= k && k < Rational(5, 6))
        out = TorusPoint(Rational(1) - k, Rational(3, 4) - k / Rational(2));
    else
        out = TorusPoint(k / Rational(2) + quarter, quarter - k / Rational(2));
    cplx want = std::polar(1.0, -2.0 * kPi * k.to_double());
    if (std::abs(phi(out) - want) > 1e-9) throw std::logic_error("theta_k_map branch mismatch at k = " + k.str());
    return out;
}

namespace {

void push(GroupSpec& g, long size, const TorusPoint& rep) {
    g.classes.push_back(ConjClass{size, rep, "C" + std::to_string(g.classes.size() + 1)});
}

GroupSpec a_group(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("A(p,q) needs p, q >= 1");
    GroupSpec g;
    g.name = "A(" + std::to_string(p) + "," + std::to_string(q) + ")";
    g.order = static_cast<long>(p) * q;
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < q; ++l) push(g, 1, TorusPoint(Rational(k, p), Rational(l, q)));
    return g;
}

GroupSpec c_group(int n) {
    if (n < 2) throw std::invalid_argument("C(n) needs n >= 2");
    GroupSpec g;
    g.name = "C(" + std::to_string(n) + ")";
    g.order = 3L * n * n;
    const TorusPoint zero(Rational(1, 3), Rational(0));
    push(g, 1, vertex(0));
    if (n % 3 == 0) {
        push(g, 1, vertex(1));
        push(g, 1, vertex(2));
    }
    for (const auto& p : kn_set(n)) push(g, 3, p);
    if (n % 3 == 0)
        for (int j = 0; j < 6; ++j) push(g, static_cast<long>(n) * n / 3, zero);
    else
        for (int j = 0; j < 2; ++j) push(g, static_cast<long>(n) * n, zero);
    return g;
}

GroupSpec d_group(int n) {
    if (n < 2) throw std::invalid_argument("D(n) needs n >= 2");
    GroupSpec g;
    g.name = "D(" + std::to_string(n) + ")";
    g.order = 6L * n * n;
    const TorusPoint zero(Rational(1, 3), Rational(0));
    push(g, 1, vertex(0));
    if (n % 3 == 0) {
        push(g, 1, vertex(1));
        push(g, 1, vertex(2));
    }
    for (int a = 1; a < n; ++a) {
        Rational k(a, n);
        if (n % 3 == 0 && (k == Rational(1, 3) || k == Rational(2, 3))) continue;
        push(g, 3, TorusPoint(k, -k));
    }
    for (const auto& p : knprime_set(n)) push(g, 6, p);
    if (n % 3 == 0)
        for (int j = 0; j < 3; ++j) push(g, 2L * n * n / 3, zero);
    else
        push(g, 2L * n * n, zero);
    for (int a = 0; a < n; ++a) push(g, 3L * n, theta_k_map(Rational(a, n)));
    return g;
}

std::vector<GroupEntry> shipped_entries() {
    static const std::vector<GroupEntry> table = load_group_table(data::groups_json());
    return table;
}

TorusPoint point_of(const nlohmann::json& j) {
    return TorusPoint(Rational::parse(j.at(0).get<std::string>()), Rational::parse(j.at(1).get<std::string>()));
}

Term term(ClosedForm c, MeasureSpec m) { return Term{std::move(c), std::move(m)}; }

MeasureSpec spec_prod(int p, int q) {
    MeasureSpec m;
    m.kind = "prod";
    m.p = p;
    m.q = q;
    return m;
}

MeasureSpec spec_n(const char* kind, Rational n) {
    MeasureSpec m;
    m.kind = kind;
    m.n = n;
    return m;
}

MeasureSpec spec_dnk(Rational n, Rational k, bool unchecked) {
    MeasureSpec m;
    m.kind = "dnk";
    m.n = n;
    m.k = k;
    m.unchecked = unchecked;
    return m;
}

// D(n), n divisible by 3, with the given upper summation limit.
Combination d_theorem_div3(int n, int upper, bool unchecked) {
    Combination c{term(ClosedForm::rational(1, 6), spec_prod(n, n)),
                  term(ClosedForm::rational(1, 72), spec_n("j2_d", Rational(3))),
                  term(ClosedForm::rational(3, 2L * n), spec_n("dd", Rational(4)))};
    for (int j = 1; j <= upper; ++j)
        c.push_back(term(ClosedForm::rational(3, n), spec_dnk(Rational(4L * n, n - 2L * j), Rational(j, n), unchecked)));
    if (n % 6 == 0) c.push_back(term(ClosedForm::rational(3, 2L * n), spec_n("dd", Rational(2))));
    return c;
}

GroupTheorem theorem_for_family(const SubjectId& sid) {
    GroupTheorem t;
    if (sid.head == "A") {
        t.stated = {term(ClosedForm::rational(1, 1), spec_prod(int_arg(sid, 0), int_arg(sid, 1)))};
        return t;
    }
    const int n = int_arg(sid, 0);
    if (sid.head == "C") {
        t.stated = {term(ClosedForm::rational(1, 3), spec_prod(n, n)),
                    term(ClosedForm::rational(1, 36), spec_n("j2_d", Rational(3)))};
        return t;
    }
    // D(n)
    if (n % 3 == 0) {
        t.stated = d_theorem_div3(n, (n + 3) / 6, true);
        t.corrected = d_theorem_div3(n, (n - 3) / 6, false);
        t.notes.push_back("stated upper summation limit floor((n+3)/6) replaced by floor((n-3)/6); the last stated "
                          "term has k = j/n above 1/n' and double counts the line classes");
        return t;
    }
    Combination stated{term(ClosedForm::rational(1, 6), spec_prod(n, n)),
                       term(ClosedForm::rational(1, 72), spec_n("j2_d", Rational(3))),
                       term(ClosedForm::rational(3, 2L * n), spec_n("dd", Rational(4)))};
    for (int j = 1; j <= (n + 3) / 6; ++j) {
        if (n - 2 * j <= 0) break;
        stated.push_back(term(ClosedForm::rational(3, n), spec_dnk(Rational(4L * n, n - 2L * j), Rational(j, n), true)));
    }
    MeasureSpec comb;
    comb.kind = "dirac_sum";
    for (int j = 1; j <= n; ++j) {
        comb.points.emplace_back(Rational(j, n), Rational(1 + 2 * j, 2 * n));
        comb.points.emplace_back(Rational(1 + 2 * j, 2 * n), Rational(j, n));
        comb.points.emplace_back(Rational(1 + 2 * j, 2 * n), Rational(1 - 2 * j, 2 * n));
    }
    stated.push_back(term(ClosedForm::rational(1, 12L * n), comb));
    t.stated = stated;

    MeasureSpec line;
    line.kind = "sym_dirac_sum";
    for (int a = 0; a < n; ++a) line.points.push_back(theta_k_map(Rational(a, n)));
    t.corrected = Combination{term(ClosedForm::rational(1, 6), spec_prod(n, n)),
                              term(ClosedForm::rational(1, 72), spec_n("j2_d", Rational(3))),
                              term(ClosedForm::rational(1, 2L * n), line)};
    t.notes.push_back("line classes carry mass 1/2; they are represented as (1/2n) times the symmetrized deltas at "
                      "theta(k) for nk in Z_n");
    return t;
}

}  // namespace

std::vector<GroupEntry> load_group_table(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("group table is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema_version", 0) != 1) throw std::invalid_argument("unsupported group table schema version");
    std::vector<GroupEntry> out;
    std::set<std::string> seen;
    try {
        for (const auto& g : doc.at("groups")) {
            GroupEntry e;
            e.spec.name = g.at("name").get<std::string>();
            if (!seen.insert(e.spec.name).second) throw std::invalid_argument("duplicate group " + e.spec.name);
            e.spec.order = g.at("order").get<long>();
            for (const auto& c : g.at("classes"))
                e.spec.classes.push_back(
                    ConjClass{c.at("size").get<long>(), point_of(c.at("rep")), c.value("label", std::string())});
            if (g.contains("table_notes"))
                for (const auto& s : g.at("table_notes")) e.spec.notes.push_back(s.get<std::string>());
            validate_group(e.spec);
            e.theorem.stated = combination_from_json(g.at("stated"));
            if (g.contains("corrected")) e.theorem.corrected = combination_from_json(g.at("corrected"));
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("group table is malformed: ") + ex.what());
    }
    return out;
}

std::vector<std::string> group_names() {
    std::vector<std::string> out{"A(p,q)", "C(n)", "D(n)"};
    for (const auto& e : shipped_entries()) out.push_back(e.spec.name);
    return out;
}

GroupSpec group_classes(const std::string& id) {
    SubjectId sid = parse_subject(id);
    GroupSpec g;
    if (sid.head == "A" && sid.args.size() == 2) {
        g = a_group(int_arg(sid, 0), int_arg(sid, 1));
    } else if (sid.head == "C" && sid.args.size() == 1) {
        g = c_group(int_arg(sid, 0));
    } else if (sid.head == "D" && sid.args.size() == 1) {
        g = d_group(int_arg(sid, 0));
    } else if (sid.args.empty()) {
        for (const auto& e : shipped_entries())
            if (e.spec.name == sid.head) return e.spec;
        throw std::invalid_argument("unknown group: " + id);
    } else {
        throw std::invalid_argument("unknown group: " + id);
    }
    validate_group(g);
    return g;
}

GroupTheorem group_theorem(const std::string& id) {
    SubjectId sid = parse_subject(id);
    if ((sid.head == "A" && sid.args.size() == 2) || ((sid.head == "C" || sid.head == "D") && sid.args.size() == 1))
        return theorem_for_family(sid);
    if (sid.args.empty())
        for (const auto& e : shipped_entries())
            if (e.spec.name == sid.head) return e.theorem;
    throw std::invalid_argument("unknown group: " + id);
}

AtomicMeasure theorem_group_measure(const std::string& id) {
    GroupTheorem t = group_theorem(id);
    return build(t.corrected ? *t.corrected : t.stated);
}

VerificationReport verify_group(const std::string& id, int max_moment, double tol, bool normalize) {
    if (max_moment < 0) throw std::invalid_argument("max_moment must be nonnegative");
    GroupSpec spec = group_classes(id);
    GroupTheorem thm = group_theorem(id);
    VerificationReport r;
    r.subject = spec.name;
    r.scope = "group";
    r.max_moment = max_moment;
    r.tol = tol;

    AtomicMeasure reference = char_measure(spec);
    const Combination& used = thm.corrected ? *thm.corrected : thm.stated;
    r.combination = describe(used);
    compare_moments(r, build(used), reference, normalize);

    long classes_total = 0;
    for (const auto& c : spec.classes) classes_total += c.size;
    r.notes.push_back("class equation: " + std::to_string(classes_total) + " = " + std::to_string(spec.order));
    double s11 = character_moment(spec, 1, 1).real();
    r.notes.push_back("character norm varsigma(1,1) = " + format_double(s11));

    SubjectId sid = parse_subject(id);
    const bool exceptional = sid.args.empty();
    if (exceptional && std::fabs(s11 - 1.0) > 1e-9) {
        r.pass = false;
        r.notes.push_back("expected varsigma(1,1) = 1 for an exceptional group");
    }
    if (sid.head == "A" && sid.args.size() == 2 && int_arg(sid, 0) >= 2 && int_arg(sid, 1) >= 2 &&
        std::fabs(s11 - 3.0) > 1e-9) {
        r.pass = false;
        r.notes.push_back("expected varsigma(1,1) = 3 for A(p,q) with p, q >= 2");
    }

    for (const auto& n : spec.notes) r.notes.push_back(n);
    for (const auto& n : thm.notes) r.notes.push_back(n);
    if (thm.corrected) {
        auto audit = audit_combination(describe(thm.stated), build(thm.stated), reference, max_moment, tol);
        r.notes.push_back("stated combination: mass " + format_double(audit.mass) + ", max moment delta " +
                          format_double(audit.max_delta) + (audit.consistent ? "" : "; inconsistent with the class data") +
                          "; verified against the corrected combination");
        r.stated = audit;
    }
    return r;
}

}  // namespace trispec
