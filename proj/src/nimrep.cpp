#include "nimrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "data.hpp"
#include "ids.hpp"

namespace trispec {

TorusPoint theta_of_exponent(int lambda1, int lambda2, int n) {
    if (lambda1 < 0 || lambda2 < 0) throw std::invalid_argument("exponent labels must be nonnegative");
    if (n < 1) throw std::invalid_argument("level parameter must be positive");
    return TorusPoint(Rational(lambda1 + 2 * lambda2 + 3, 3 * n), Rational(2 * lambda1 + lambda2 + 3, 3 * n));
}

AtomicMeasure eigen_measure(const GraphSpectrum& spec) {
    double total = 0.0;
    for (const auto& e : spec.exponents) total += e.weight;
    if (total <= 0.0) throw std::invalid_argument("spectrum has no positive weight");
    AtomicMeasure raw;
    for (const auto& e : spec.exponents) raw.add(theta_of_exponent(e.lambda1, e.lambda2, spec.n), e.weight / total);
    return symmetrize(raw);
}

std::vector<GraphEntry> load_graph_table(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph table is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema_version", 0) != 1) throw std::invalid_argument("unsupported graph table schema version");
    std::vector<GraphEntry> out;
    std::set<std::string> seen;
    try {
        for (const auto& g : doc.at("graphs")) {
            GraphEntry e;
            e.spectrum.name = g.at("name").get<std::string>();
            e.spectrum.n = g.at("n").get<int>();
            if (!seen.insert(e.spectrum.name).second)
                throw std::invalid_argument("duplicate graph " + e.spectrum.name);
            if (e.spectrum.n < 4) throw std::invalid_argument(e.spectrum.name + ": level parameter below 4");
            double sum = 0.0;
            for (const auto& x : g.at("exponents")) {
                Exponent ex;
                ex.lambda1 = x.at("lambda").at(0).get<int>();
                ex.lambda2 = x.at("lambda").at(1).get<int>();
                ex.weight = ClosedForm::from_json(x.at("weight")).value();
                if (ex.lambda1 < 0 || ex.lambda2 < 0 || ex.lambda1 + ex.lambda2 > e.spectrum.n - 3)
                    throw std::invalid_argument(e.spectrum.name + ": exponent outside the level triangle");
                if (!(ex.weight > 0.0)) throw std::invalid_argument(e.spectrum.name + ": nonpositive vacuum weight");
                sum += ex.weight;
                e.spectrum.exponents.push_back(ex);
            }
            if (std::fabs(sum - 1.0) > 1e-9)
                throw std::invalid_argument(e.spectrum.name + ": vacuum weights do not sum to 1");
            e.spectrum.raw_weight_sum = sum;
            if (g.contains("table_notes"))
                for (const auto& s : g.at("table_notes")) e.spectrum.notes.push_back(s.get<std::string>());
            e.stated = combination_from_json(g.at("stated"));
            if (g.contains("corrected")) e.corrected = combination_from_json(g.at("corrected"));
            out.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("graph table is malformed: ") + ex.what());
    }
    return out;
}

namespace {

const std::vector<GraphEntry>& shipped_graphs() {
    static const std::vector<GraphEntry> table = load_graph_table(data::graphs_json());
    return table;
}

}  // namespace

std::vector<std::string> graph_names() {
    std::vector<std::string> out;
    for (const auto& g : shipped_graphs()) out.push_back(g.spectrum.name);
    out.push_back("Dstar(n)");
    out.push_back("A(n)");
    return out;
}

GraphSpectrum dstar_spectrum(int n) {
    if (n < 5) throw std::invalid_argument("Dstar(n) needs n >= 5");
    GraphSpectrum s;
    s.name = "Dstar(" + std::to_string(n) + ")";
    s.n = n;
    double sum = 0.0;
    for (int l = 0; l <= (n - 3) / 2; ++l) {
        double w = 4.0 / n * std::pow(std::sin(2.0 * kPi * (l + 1) / n), 2);
        // Orbit of (l,l) under (m1,m2) -> (n-3-m1-m2, m1).
        int rows[3][2] = {{l, l}, {n - 3 - 2 * l, l}, {l, n - 3 - 2 * l}};
        for (auto& r : rows) {
            s.exponents.push_back({r[0], r[1], w});
            sum += w;
        }
    }
    s.raw_weight_sum = sum;
    s.notes.push_back("tabulated weights sum to " + format_double(sum) + "; rescaled to unit mass");
    return s;
}

GraphSpectrum a_spectrum(int n) {
    if (n < 4) throw std::invalid_argument("A(n) needs n >= 4");
    GraphSpectrum s;
    s.name = "A(" + std::to_string(n) + ")";
    s.n = n;
    double sum = 0.0;
    for (int a = 0; a <= n - 3; ++a)
        for (int b = 0; a + b <= n - 3; ++b) {
            double j = jacobian_theta(theta_of_exponent(a, b, n));
            s.exponents.push_back({a, b, j * j});
            sum += j * j;
        }
    for (auto& e : s.exponents) e.weight /= sum;
    s.raw_weight_sum = 1.0;
    return s;
}

GraphEntry graph_entry(const std::string& id) {
    SubjectId sid = parse_subject(id);
    if (sid.args.empty()) {
        for (const auto& g : shipped_graphs())
            if (g.spectrum.name == sid.head) return g;
        throw std::invalid_argument("unknown graph: " + id);
    }
    if (sid.args.size() != 1) throw std::invalid_argument("unknown graph: " + id);
    const int n = int_arg(sid, 0);
    GraphEntry e;
    if (sid.head == "Dstar") {
        e.spectrum = dstar_spectrum(n);
        AtomicMeasure thm;
        for (int j = 1; j <= (n - 1) / 2; ++j)
            thm.add(dd_measure(Rational(n, j)), 12.0 / n * std::pow(std::sin(2.0 * kPi * j / n), 2));
        thm.prune();
        e.theorem_override = thm;
        return e;
    }
    if (sid.head == "A") {
        e.spectrum = a_spectrum(n);
        e.theorem_override = j2_reweight(d_measure(n));
        return e;
    }
    throw std::invalid_argument("unknown graph: " + id);
}

namespace {

std::string theorem_description(const GraphEntry& e) {
    if (e.spectrum.name.rfind("Dstar", 0) == 0) {
        const std::string n = std::to_string(e.spectrum.n);
        std::string out;
        for (int j = 1; j <= (e.spectrum.n - 1) / 2; ++j) {
            if (j > 1) out += " + ";
            out += "(12/" + n + ")sin^2(2pi*" + std::to_string(j) + "/" + n + ")*dd(" + n +
                   (j > 1 ? "/" + std::to_string(j) : "") + ")";
        }
        return out;
    }
    if (e.spectrum.name.rfind("A(", 0) == 0) return "J2*d(" + std::to_string(e.spectrum.n) + ") normalized";
    return describe(e.corrected ? *e.corrected : e.stated);
}

std::string mass_string(const std::map<long, Rational>& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [r, c] : m) {
        if (!out.empty()) out += " + ";
        out += c.den() == 1 ? std::to_string(c.num()) : c.str();
        if (r != 1) out += "*sqrt" + std::to_string(r);
    }
    return out;
}

}  // namespace

AtomicMeasure theorem_measure(const std::string& id, bool normalize) {
    GraphEntry e = graph_entry(id);
    AtomicMeasure m = e.theorem_override ? *e.theorem_override : build(e.corrected ? *e.corrected : e.stated);
    double mass = total_mass(m);
    if (normalize && mass != 0.0 && std::fabs(mass - 1.0) > 1e-12) m = m.scaled(1.0 / mass);
    return m;
}

IntMatrix a_graph_adjacency(int n) {
    if (n < 4) throw std::invalid_argument("A(n) adjacency needs n >= 4");
    IntMatrix m;
    std::map<std::pair<int, int>, int> index;
    for (int a = 0; a <= n - 3; ++a)
        for (int b = 0; a + b <= n - 3; ++b) {
            index[{a, b}] = static_cast<int>(m.labels.size());
            m.labels.emplace_back(a, b);
        }
    m.size = static_cast<int>(m.labels.size());
    m.a.assign(static_cast<std::size_t>(m.size) * m.size, 0);
    m.star = index.at({0, 0});
    for (const auto& [lab, i] : index) {
        auto [a, b] = lab;
        const int moves[3][2] = {{a + 1, b}, {a - 1, b + 1}, {a, b - 1}};
        for (const auto& mv : moves) {
            auto it = index.find({mv[0], mv[1]});
            if (it != index.end()) m.a[static_cast<std::size_t>(i) * m.size + it->second] += 1;
        }
    }
    return m;
}

namespace {

std::vector<long long> matmul(const std::vector<long long>& x, const std::vector<long long>& y, int n) {
    std::vector<long long> z(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long v = x[static_cast<std::size_t>(i) * n + k];
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(i) * n + j] += v * y[static_cast<std::size_t>(k) * n + j];
        }
    return z;
}

std::vector<long long> transpose(const std::vector<long long>& x, int n) {
    std::vector<long long> t(x.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(j) * n + i] = x[static_cast<std::size_t>(i) * n + j];
    return t;
}

}  // namespace

bool is_normal(const IntMatrix& m) {
    auto t = transpose(m.a, m.size);
    return matmul(m.a, t, m.size) == matmul(t, m.a, m.size);
}

long long matrix_moments(const IntMatrix& adj, int star, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("moment orders must be nonnegative");
    if (star < 0 || star >= adj.size) throw std::invalid_argument("vertex index out of range");
    if (!is_normal(adj)) throw std::domain_error("adjacency matrix is not normal");
    const int s = adj.size;
    // Row vector e_star^T A^m (A^T)^n, then read its star entry.
    std::vector<long long> row(static_cast<std::size_t>(s), 0);
    row[static_cast<std::size_t>(star)] = 1;
    auto step = [&](bool transposed) {
        std::vector<long long> next(row.size(), 0);
        for (int i = 0; i < s; ++i) {
            if (row[i] == 0) continue;
            for (int j = 0; j < s; ++j) {
                long long a = transposed ? adj.at(j, i) : adj.at(i, j);
                next[j] += row[i] * a;
            }
        }
        row.swap(next);
    };
    for (int i = 0; i < m; ++i) step(false);
    for (int i = 0; i < n; ++i) step(true);
    return row[static_cast<std::size_t>(star)];
}

VerificationReport verify_graph(const std::string& id, int max_moment, double tol, bool normalize) {
    if (max_moment < 0) throw std::invalid_argument("max_moment must be nonnegative");
    GraphEntry e = graph_entry(id);
    VerificationReport r;
    r.subject = e.spectrum.name;
    r.scope = "graph";
    r.max_moment = max_moment;
    r.tol = tol;

    AtomicMeasure reference = eigen_measure(e.spectrum);
    AtomicMeasure thm = e.theorem_override ? *e.theorem_override : build(e.corrected ? *e.corrected : e.stated);
    r.combination = theorem_description(e);
    compare_moments(r, thm, reference, normalize);

    for (const auto& n : e.spectrum.notes) r.notes.push_back(n);
    if (!e.theorem_override) {
        auto sym = symbolic_mass(e.corrected ? *e.corrected : e.stated);
        r.notes.push_back("exact coefficient mass: " + mass_string(sym));
    }
    if (e.corrected) {
        auto audit = audit_combination(describe(e.stated), build(e.stated), reference, max_moment, tol);
        r.notes.push_back("stated coefficients are inconsistent: exact mass " + mass_string(symbolic_mass(e.stated)) +
                          ", max moment delta " + format_double(audit.max_delta) +
                          "; verified against the corrected combination");
        r.stated = audit;
    }
    if (r.subject.rfind("A(", 0) == 0) {
        IntMatrix adj = a_graph_adjacency(e.spectrum.n);
        AtomicMeasure unit = thm.scaled(1.0 / total_mass(thm));
        double worst = 0.0;
        for (int a = 0; a <= 8; ++a)
            for (int b = 0; a + b <= 8; ++b) {
                double mm = static_cast<double>(matrix_moments(adj, adj.star, a, b));
                worst = std::max(worst, std::abs(moment(unit, a, b) - mm));
            }
        r.notes.push_back("adjacency oracle max delta for m+n <= 8: " + format_double(worst));
        if (!(worst < tol)) r.pass = false;
        if (e.spectrum.n == 4) {
            double d = max_atom_delta(unit, dd_measure(Rational(4)));
            r.notes.push_back("atom-level delta against dd(4): " + format_double(d));
            if (!(d < 1e-10)) r.pass = false;
        }
    }
    return r;
}

}  // namespace trispec
