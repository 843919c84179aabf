#include "trispec/trispec.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "counting.hpp"
#include "measure.hpp"
#include "nimrep.hpp"
#include "relations.hpp"
#include "report.hpp"
#include "serialize.hpp"
#include "subgroups.hpp"
#include "terms.hpp"

struct ts_measure {
    trispec::AtomicMeasure mu;
};

struct ts_report {
    trispec::VerificationReport report;
};

namespace {

thread_local std::string g_error;

ts_status fail(ts_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

template <class F>
ts_status guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const nlohmann::json::exception& e) {
        return fail(TS_ERR_PARSE, e.what());
    } catch (const std::domain_error& e) {
        return fail(TS_ERR_DOMAIN, e.what());
    } catch (const std::out_of_range& e) {
        return fail(TS_ERR_NOT_FOUND, e.what());
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        if (what.rfind("unknown", 0) == 0) return fail(TS_ERR_NOT_FOUND, what);
        return fail(TS_ERR_INVALID_ARGUMENT, what);
    } catch (const std::overflow_error& e) {
        return fail(TS_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(TS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TS_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what) {
    if (!p) throw std::invalid_argument(std::string("null argument: ") + what);
}

trispec::TorusPoint point(const char* a, const char* b) {
    need(a, "theta1");
    need(b, "theta2");
    return {trispec::Rational::parse(a), trispec::Rational::parse(b)};
}

ts_status emit(ts_measure** out, trispec::AtomicMeasure mu) {
    *out = new ts_measure{std::move(mu)};
    return TS_OK;
}

}  // namespace

extern "C" {

const char* ts_last_error(void) { return g_error.c_str(); }
const char* ts_version(void) { return "1.0.0"; }
void ts_string_free(char* s) { std::free(s); }

ts_status ts_phi(const char* theta1, const char* theta2, double* re, double* im) {
    return guarded([&] {
        need(re, "re");
        need(im, "im");
        auto z = trispec::phi(point(theta1, theta2));
        *re = z.real();
        *im = z.imag();
        return TS_OK;
    });
}

ts_status ts_jacobian(const char* theta1, const char* theta2, double* out) {
    return guarded([&] {
        need(out, "out");
        *out = trispec::jacobian_theta(point(theta1, theta2));
        return TS_OK;
    });
}

ts_status ts_phi_inverse(double re, double im, double out[24]) {
    return guarded([&] {
        need(out, "out");
        auto pairs = trispec::phi_inverse({re, im});
        for (int i = 0; i < 6; ++i) {
            out[4 * i] = pairs[i].w1.real();
            out[4 * i + 1] = pairs[i].w1.imag();
            out[4 * i + 2] = pairs[i].w2.real();
            out[4 * i + 3] = pairs[i].w2.imag();
        }
        return TS_OK;
    });
}

ts_status ts_measure_family(const char* family, const char* n, const char* k, int p, int q, ts_measure** out) {
    return guarded([&] {
        need(family, "family");
        need(out, "out");
        trispec::MeasureSpec spec;
        spec.kind = family;
        if (spec.kind != "d" && spec.kind != "j2_d" && spec.kind != "dd" && spec.kind != "dnk" &&
            spec.kind != "prod" && spec.kind != "j2_prod")
            throw std::invalid_argument("unknown measure family: " + spec.kind);
        if (spec.kind == "prod" || spec.kind == "j2_prod") {
            spec.p = p;
            spec.q = q;
        } else {
            need(n, "n");
            spec.n = trispec::Rational::parse(n);
            if (spec.kind == "dnk") {
                need(k, "k");
                spec.k = trispec::Rational::parse(k);
            }
        }
        return emit(out, spec.build());
    });
}

ts_status ts_measure_graph(const char* id, int source, ts_measure** out) {
    return guarded([&] {
        need(id, "id");
        need(out, "out");
        if (source == 0) return emit(out, trispec::theorem_measure(id, true));
        return emit(out, trispec::eigen_measure(trispec::graph_entry(id).spectrum));
    });
}

ts_status ts_measure_group(const char* id, int source, ts_measure** out) {
    return guarded([&] {
        need(id, "id");
        need(out, "out");
        if (source == 0) return emit(out, trispec::theorem_group_measure(id));
        return emit(out, trispec::char_measure(trispec::group_classes(id)));
    });
}

ts_status ts_measure_from_json(const char* text, ts_measure** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        return emit(out, trispec::measure_from_json(nlohmann::json::parse(text)));
    });
}

ts_status ts_measure_from_csv(const char* text, ts_measure** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        return emit(out, trispec::measure_from_csv(text));
    });
}

void ts_measure_free(ts_measure* m) { delete m; }

ts_status ts_measure_size(const ts_measure* m, size_t* out) {
    return guarded([&] {
        need(m, "measure");
        need(out, "out");
        *out = m->mu.size();
        return TS_OK;
    });
}

ts_status ts_measure_mass(const ts_measure* m, double* out) {
    return guarded([&] {
        need(m, "measure");
        need(out, "out");
        *out = trispec::total_mass(m->mu);
        return TS_OK;
    });
}

ts_status ts_measure_moment(const ts_measure* m, int p, int q, double* re, double* im) {
    return guarded([&] {
        need(m, "measure");
        need(re, "re");
        need(im, "im");
        if (p < 0 || q < 0) throw std::invalid_argument("moment orders must be nonnegative");
        auto v = trispec::moment(m->mu, p, q);
        *re = v.real();
        *im = v.imag();
        return TS_OK;
    });
}

ts_status ts_measure_max_delta(const ts_measure* a, const ts_measure* b, double* out) {
    return guarded([&] {
        need(a, "a");
        need(b, "b");
        need(out, "out");
        *out = trispec::max_atom_delta(a->mu, b->mu);
        return TS_OK;
    });
}

ts_status ts_measure_to_json(const ts_measure* m, char** out) {
    return guarded([&] {
        need(m, "measure");
        need(out, "out");
        *out = dup(trispec::measure_to_json(m->mu).dump(2) + "\n");
        return TS_OK;
    });
}

ts_status ts_measure_to_csv(const ts_measure* m, char** out) {
    return guarded([&] {
        need(m, "measure");
        need(out, "out");
        *out = dup(trispec::measure_to_csv(m->mu));
        return TS_OK;
    });
}

ts_status ts_list(const char* kind, char** out) {
    return guarded([&] {
        need(kind, "kind");
        need(out, "out");
        std::string k = kind;
        nlohmann::json arr = nlohmann::json::array();
        auto params = [](const std::string& id) {
            auto open = id.find('(');
            if (open == std::string::npos) return nlohmann::json::array();
            nlohmann::json p = nlohmann::json::array();
            std::string inner = id.substr(open + 1, id.size() - open - 2);
            for (char c : inner)
                if (c != ',') p.push_back({{"name", std::string(1, c)}, {"type", "integer"}});
            return p;
        };
        if (k == "graphs") {
            for (const auto& g : trispec::graph_names()) arr.push_back({{"id", g}, {"params", params(g)}});
        } else if (k == "groups") {
            for (const auto& g : trispec::group_names()) arr.push_back({{"id", g}, {"params", params(g)}});
        } else if (k == "measures") {
            arr.push_back({{"id", "d"}, {"params", {{{"name", "n"}, {"type", "integer >= 1"}}}}});
            arr.push_back({{"id", "dd"}, {"params", {{{"name", "n"}, {"type", "rational >= 2"}}}}});
            arr.push_back({{"id", "dnk"},
                           {"params",
                            {{{"name", "n"}, {"type", "rational > 2"}}, {{"name", "k"}, {"type", "rational in [0,1/n]"}}}}});
            arr.push_back({{"id", "prod"},
                           {"params", {{{"name", "p"}, {"type", "integer >= 1"}}, {{"name", "q"}, {"type", "integer >= 1"}}}}});
            arr.push_back({{"id", "j2_d"}, {"params", {{{"name", "n"}, {"type", "integer >= 1"}}}}});
            arr.push_back({{"id", "j2_prod"},
                           {"params", {{{"name", "p"}, {"type", "integer >= 1"}}, {{"name", "q"}, {"type", "integer >= 1"}}}}});
        } else if (k == "relations") {
            for (const auto& r : trispec::relation_names()) arr.push_back({{"id", r}, {"params", nlohmann::json::array()}});
        } else {
            throw std::invalid_argument("unknown listing kind: " + k);
        }
        *out = dup(arr.dump(2) + "\n");
        return TS_OK;
    });
}

ts_status ts_verify(const char* scope, const char* subject, int max_moment, double tol, int normalize,
                    ts_report** out) {
    return guarded([&] {
        need(scope, "scope");
        need(subject, "subject");
        need(out, "out");
        if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
        std::string s = scope;
        trispec::VerificationReport r;
        if (s == "graph")
            r = trispec::verify_graph(subject, max_moment, tol, normalize != 0);
        else if (s == "group")
            r = trispec::verify_group(subject, max_moment, tol, normalize != 0);
        else if (s == "relation")
            r = trispec::verify_relation(subject, tol);
        else
            throw std::invalid_argument("unknown verification scope: " + s);
        *out = new ts_report{std::move(r)};
        return TS_OK;
    });
}

void ts_report_free(ts_report* r) { delete r; }

ts_status ts_report_pass(const ts_report* r, int* out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = r->report.pass ? 1 : 0;
        return TS_OK;
    });
}

ts_status ts_report_max_delta(const ts_report* r, double* out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = r->report.max_delta;
        return TS_OK;
    });
}

ts_status ts_report_to_json(const ts_report* r, char** out) {
    return guarded([&] {
        need(r, "report");
        need(out, "out");
        *out = dup(r->report.to_json().dump(2) + "\n");
        return TS_OK;
    });
}

ts_status ts_dims(int k, int with_oracle, char** out) {
    return guarded([&] {
        need(out, "out");
        if (k < 0 || k > 8) throw std::invalid_argument("k must be in 0..8");
        auto s = [](const trispec::BigInt& v) { return v.str(); };
        nlohmann::json row = {{"k", k},
                              {"dim_torus", s(trispec::dim_torus_invariants(k))},
                              {"dim_su3", s(trispec::dim_su3_invariants(k))}};
        if (2 * k <= 12) row["kuperberg"] = s(trispec::kuperberg_coeff(k, k));
        if (with_oracle) {
            row["torus_oracle"] = s(trispec::torus_walk_oracle(k));
            row["fusion_oracle"] = s(trispec::fusion_walk_oracle(k));
        }
        *out = dup(row.dump());
        return TS_OK;
    });
}

ts_status ts_sample_discoid(int grid, char** out) {
    return guarded([&] {
        need(out, "out");
        *out = dup(trispec::sample_discoid_csv(grid));
        return TS_OK;
    });
}

}  // extern "C"
