#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trispec/trispec.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ApiError {
    ts_status status;
    std::string message;
};

void check(ts_status s) {
    if (s != TS_OK) throw ApiError{s, ts_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ts_string_free(s);
    return out;
}

int exit_code_for(const ApiError& e) { return e.status == TS_ERR_INTERNAL ? kExitFail : kExitUsage; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

// ---- verify ----

struct Job {
    std::string scope;
    std::string subject;
};

struct Outcome {
    Job job;
    bool ok = false;
    bool pass = false;
    std::string json_text;
    std::string error;
    ts_status status = TS_OK;
};

std::vector<std::string> default_graphs() {
    std::vector<std::string> v{"E8", "E1_12", "E2_12", "E4_12", "E5_12", "E24"};
    for (int n = 5; n <= 10; ++n) v.push_back("Dstar(" + std::to_string(n) + ")");
    for (int n = 4; n <= 9; ++n) v.push_back("A(" + std::to_string(n) + ")");
    return v;
}

std::vector<std::string> default_groups() {
    std::vector<std::string> v;
    for (int p = 2; p <= 5; ++p)
        for (int q = 2; q <= 5; ++q) v.push_back("A(" + std::to_string(p) + "," + std::to_string(q) + ")");
    for (int n = 2; n <= 6; ++n) v.push_back("C(" + std::to_string(n) + ")");
    for (int n = 2; n <= 6; ++n) v.push_back("D(" + std::to_string(n) + ")");
    for (const char* g : {"E", "F", "G", "H", "I", "J", "K", "L"}) v.emplace_back(g);
    return v;
}

std::vector<std::string> relation_ids() {
    std::vector<std::string> out;
    for (const auto& r : json::parse(take([] {
             char* s = nullptr;
             check(ts_list("relations", &s));
             return s;
         }())))
        out.push_back(r.at("id").get<std::string>());
    return out;
}

Outcome run_job(const Job& job, int max_moment, double tol, bool normalize) {
    Outcome o{job};
    ts_report* r = nullptr;
    ts_status s = ts_verify(job.scope.c_str(), job.subject.c_str(), max_moment, tol, normalize ? 1 : 0, &r);
    if (s != TS_OK) {
        o.error = ts_last_error();
        o.status = s;
        return o;
    }
    int pass = 0;
    char* text = nullptr;
    ts_report_pass(r, &pass);
    ts_report_to_json(r, &text);
    ts_report_free(r);
    o.ok = true;
    o.pass = pass != 0;
    o.json_text = take(text);
    return o;
}

std::string file_stem(const Outcome& o) {
    std::string s = o.job.scope + "_";
    for (char c : o.job.subject) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '-';
    while (!s.empty() && s.back() == '-') s.pop_back();
    return s;
}

fs::path make_run_dir(const std::string& root) {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%S", std::gmtime(&t));
    fs::path base = fs::path(root) / buf;
    fs::path dir = base;
    for (int i = 1; fs::exists(dir); ++i) dir = base.string() + "-" + std::to_string(i);
    fs::create_directories(dir);
    return dir;
}

int cmd_verify(const std::string& scope, const std::vector<std::string>& subjects, int max_moment,
               std::optional<double> tol_opt, bool normalize, bool persist, std::string out_dir, int jobs,
               bool verbose) {
    if (max_moment < 0 || max_moment > 20) {
        std::cerr << "error: --max-moment must be in 0..20\n";
        return kExitUsage;
    }
    std::vector<Job> work;
    auto add = [&](const std::string& sc, const std::vector<std::string>& ids) {
        for (const auto& id : ids) work.push_back({sc, id});
    };
    if (scope == "graph") {
        add("graph", subjects.empty() ? default_graphs() : subjects);
    } else if (scope == "group") {
        add("group", subjects.empty() ? default_groups() : subjects);
    } else if (scope == "relations") {
        add("relation", subjects.empty() ? relation_ids() : subjects);
    } else if (scope == "all") {
        if (!subjects.empty()) {
            std::cerr << "error: verify all takes no subjects\n";
            return kExitUsage;
        }
        add("relation", relation_ids());
        add("graph", default_graphs());
        add("group", default_groups());
    }

    std::vector<Outcome> results(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
            double tol = tol_opt ? *tol_opt : (work[i].scope == "relation" ? 1e-10 : 1e-8);
            results[i] = run_job(work[i], max_moment, tol, normalize);
        }
    };
    int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool usage_error = false;
    bool internal_error = false;
    bool all_pass = true;
    json summary = json::array();
    for (const auto& o : results) {
        if (!o.ok) {
            std::cerr << "error: " << o.job.scope << " " << o.job.subject << ": " << o.error << "\n";
            (o.status == TS_ERR_INTERNAL ? internal_error : usage_error) = true;
            all_pass = false;
            continue;
        }
        json rep = json::parse(o.json_text);
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << o.job.scope << " " << rep.value("subject", o.job.subject)
                  << "  max_delta=" << rep.value("max_delta", 0.0) << "  scale=" << rep.value("scale", 1.0) << "\n";
        if (verbose || !o.pass)
            for (const auto& n : rep.value("notes", json::array())) std::cout << "    " << n.get<std::string>() << "\n";
        summary.push_back({{"scope", o.job.scope},
                           {"subject", rep.value("subject", o.job.subject)},
                           {"pass", o.pass},
                           {"max_delta", rep.value("max_delta", 0.0)},
                           {"file", file_stem(o) + ".json"}});
    }

    if (persist) {
        if (out_dir.empty()) {
            const char* env = std::getenv("TRISPEC_OUT");
            out_dir = env && *env ? env : "trispec-runs";
        }
        fs::path dir = make_run_dir(out_dir);
        for (const auto& o : results)
            if (o.ok) write_text((dir / (file_stem(o) + ".json")).string(), o.json_text);
        write_text((dir / "summary.json").string(), summary.dump(2) + "\n");
        std::cout << "reports: " << dir.string() << "\n";
    }
    if (usage_error && !internal_error) return kExitUsage;
    std::size_t passed = 0;
    for (const auto& o : results) passed += o.pass;
    std::cout << passed << "/" << results.size() << " passed\n";
    return all_pass ? kExitPass : kExitFail;
}

// ---- dims ----

int cmd_dims(int max_k, bool oracle, bool as_json) {
    if (max_k < 0 || max_k > 8) {
        std::cerr << "error: --max-k must be in 0..8\n";
        return kExitUsage;
    }
    json rows = json::array();
    bool ok = true;
    for (int k = 0; k <= max_k; ++k) {
        char* s = nullptr;
        check(ts_dims(k, oracle ? 1 : 0, &s));
        json row = json::parse(take(s));
        if (oracle) {
            ok = ok && row["dim_torus"] == row["torus_oracle"] && row["dim_su3"] == row["fusion_oracle"];
        }
        if (row.contains("kuperberg") && k <= 5) ok = ok && row["kuperberg"] == row["dim_su3"];
        rows.push_back(row);
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        std::printf("%3s %14s %10s", "k", "dim_T2", "dim_SU3");
        if (oracle) std::printf(" %14s %10s", "walk_oracle", "fusion");
        std::printf(" %10s\n", "kuperberg");
        for (const auto& r : rows) {
            std::printf("%3d %14s %10s", r["k"].get<int>(), r["dim_torus"].get<std::string>().c_str(),
                        r["dim_su3"].get<std::string>().c_str());
            if (oracle)
                std::printf(" %14s %10s", r["torus_oracle"].get<std::string>().c_str(),
                            r["fusion_oracle"].get<std::string>().c_str());
            std::printf(" %10s\n", r.contains("kuperberg") ? r["kuperberg"].get<std::string>().c_str() : "-");
        }
    }
    if (!ok) std::cerr << "mismatch between independent counts\n";
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral measures of SU(3) nimrep graphs and finite subgroups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ts_version()));

    // list
    auto* list = app.add_subcommand("list", "List registered subjects");
    std::string list_kind;
    bool list_json = false;
    list->add_option("kind", list_kind, "graphs, groups, measures or relations")
        ->required()
        ->check(CLI::IsMember({"graphs", "groups", "measures", "relations"}));
    list->add_flag("--json", list_json, "Print JSON");

    // measure
    auto* meas = app.add_subcommand("measure", "Build a measure and write its atoms");
    std::string m_graph, m_group, m_family, m_n, m_k, m_format = "json", m_out, m_source = "theorem";
    int m_p = 0, m_q = 0;
    auto* og = meas->add_option("--graph", m_graph, "Graph id, e.g. E8 or Dstar(7)");
    auto* ogr = meas->add_option("--group", m_group, "Group id, e.g. H or C(4)");
    auto* of = meas->add_option("--family", m_family, "Measure family")
                   ->check(CLI::IsMember({"d", "j2_d", "dd", "dnk", "prod", "j2_prod"}));
    og->excludes(ogr)->excludes(of);
    ogr->excludes(of);
    meas->add_option("--n", m_n, "Family parameter n (rational)");
    meas->add_option("--k", m_k, "Family parameter k (rational)");
    meas->add_option("--p", m_p, "prod parameter p");
    meas->add_option("--q", m_q, "prod parameter q");
    meas->add_option("--source", m_source, "theorem, or table (graph exponents / group classes)")
        ->check(CLI::IsMember({"theorem", "table"}));
    meas->add_option("--format", m_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    meas->add_option("--out", m_out, "Output file (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "Check theorem measures against independent references");
    std::string v_scope;
    std::vector<std::string> v_subjects;
    int v_max = 6;
    std::optional<double> v_tol;
    bool v_normalize = true, v_no_persist = false, v_verbose = false;
    std::string v_out;
    int v_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    ver->add_option("scope", v_scope, "graph, group, relations or all")
        ->required()
        ->check(CLI::IsMember({"graph", "group", "relations", "all"}));
    ver->add_option("subjects", v_subjects, "Subject ids (default: the standard suite for the scope)");
    ver->add_option("--max-moment", v_max, "Largest moment order m, n")->capture_default_str();
    ver->add_option("--tol", v_tol, "Tolerance (default 1e-8, relations 1e-10)");
    ver->add_flag("--normalize,!--no-normalize", v_normalize, "Rescale theorem measures to unit mass (default on)");
    ver->add_flag("--no-persist", v_no_persist, "Do not write report files");
    ver->add_option("--out-dir", v_out, "Report root directory (default $TRISPEC_OUT or ./trispec-runs)");
    ver->add_option("--jobs,-j", v_jobs, "Worker threads")->check(CLI::PositiveNumber);
    ver->add_flag("--verbose,-v", v_verbose, "Print notes for passing subjects too");

    // dims
    auto* dims = app.add_subcommand("dims", "Invariant dimensions from exact constant terms");
    int d_max = 6;
    bool d_oracle = false, d_json = false;
    dims->add_option("--max-k", d_max, "Largest k (at most 8)")->capture_default_str();
    dims->add_flag("--oracle", d_oracle, "Also run the walk-counting oracles");
    dims->add_flag("--json", d_json, "Print JSON");

    // sample-discoid
    auto* samp = app.add_subcommand("sample-discoid", "Write Phi and |J| on a theta grid as CSV");
    int s_grid = 64;
    std::string s_out;
    samp->add_option("--grid", s_grid, "Grid size N")->capture_default_str();
    samp->add_option("--out", s_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*list) {
            char* s = nullptr;
            check(ts_list(list_kind.c_str(), &s));
            json arr = json::parse(take(s));
            if (list_json) {
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& e : arr) {
                    std::cout << e["id"].get<std::string>();
                    for (const auto& p : e["params"])
                        std::cout << "  " << p["name"].get<std::string>() << ":" << p["type"].get<std::string>();
                    std::cout << "\n";
                }
            }
            return kExitPass;
        }
        if (*meas) {
            ts_measure* m = nullptr;
            int source = m_source == "table" ? 1 : 0;
            if (!m_graph.empty())
                check(ts_measure_graph(m_graph.c_str(), source, &m));
            else if (!m_group.empty())
                check(ts_measure_group(m_group.c_str(), source, &m));
            else if (!m_family.empty())
                check(ts_measure_family(m_family.c_str(), m_n.empty() ? nullptr : m_n.c_str(),
                                        m_k.empty() ? nullptr : m_k.c_str(), m_p, m_q, &m));
            else {
                std::cerr << "error: one of --graph, --group or --family is required\n";
                return kExitUsage;
            }
            char* text = nullptr;
            ts_status s = m_format == "csv" ? ts_measure_to_csv(m, &text) : ts_measure_to_json(m, &text);
            ts_measure_free(m);
            check(s);
            write_text(m_out, take(text));
            return kExitPass;
        }
        if (*ver)
            return cmd_verify(v_scope, v_subjects, v_max, v_tol, v_normalize, !v_no_persist, v_out, v_jobs,
                              v_verbose);
        if (*dims) return cmd_dims(d_max, d_oracle, d_json);
        if (*samp) {
            char* text = nullptr;
            check(ts_sample_discoid(s_grid, &text));
            write_text(s_out, take(text));
            return kExitPass;
        }
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.message << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
