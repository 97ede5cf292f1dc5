// prmkit command-line frontend.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prmkit/ghw.hpp"
#include "prmkit/io.hpp"
#include "prmkit/subfield.hpp"
#include "prmkit/tables.hpp"
#include "prmkit/verify.hpp"

using namespace prmkit;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kInfeasible = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "txt";
    std::string out;

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + out);
        f << text;
        if (!f) throw std::runtime_error("write failed: " + out);
    }
    bool json() const { return format == "json"; }
    bool csv() const { return format == "csv"; }
};

json envelope(const std::string& command) { return json{{"schema", "prmkit/1"}, {"command", command}}; }

struct SpecArgs {
    std::string family = "prm";
    int q = 2;
    int s = 1;
    int m = 2;
    std::optional<int> d;
    std::optional<int> lambda;

    void add(CLI::App* app) {
        app->add_option("--family", family, "rm, prm, ssc-rm, ssc-prm, dual-rm, dual-prm, dual-ssc-rm, dual-ssc-prm");
        app->add_option("--q", q, "base field order");
        app->add_option("--s", s, "extension degree; codes live over GF(q^s)");
        app->add_option("--m", m, "dimension of the ambient space");
        app->add_option("--d", d, "degree");
        app->add_option("--lambda", lambda, "SSC degree index, d = lambda (q^s-1)/(q-1)");
    }

    CodeSpec spec() const {
        CodeSpec c;
        c.family = family_from_string(family);
        c.q = q;
        c.s = s;
        c.m = m;
        if (lambda) {
            c.lambda = lambda;
            c.d = d_lambda(q, s, *lambda);
        } else if (d) {
            c.d = *d;
        } else {
            throw UsageError("one of --d or --lambda is required");
        }
        if (q < 2 || s < 1 || m < 1) throw UsageError("need q >= 2, s >= 1, m >= 1");
        return c;
    }
};

// ------------------------------------------------------------------- params

int cmd_params(const SpecArgs& a, std::uint64_t cap, const Output& out) {
    const CodeSpec spec = a.spec();
    const auto Q = spec.field_order();
    std::optional<CodeParams> formula;
    std::string formula_kind;
    if (spec.family == Family::PRM) {
        formula = prm_params(Q, spec.m, spec.d);
        formula_kind = "exact";
    } else if (spec.family == Family::RM) {
        formula = rm_params(Q, spec.m, spec.d);
        formula_kind = "exact";
    } else if (spec.family == Family::SscPRM) {
        formula = prm_params(Q, spec.m, spec.d);
        formula_kind = "lower bound";
    } else if (spec.family == Family::SscRM) {
        formula = rm_params(Q, spec.m, spec.d);
        formula_kind = "lower bound";
    }
    LinearCode code = build_code(spec);
    std::optional<OracleResult> oracle;
    if (cap > 0) {
        MinDistanceOptions mo;
        mo.cap = cap;
        oracle = min_distance_exact(code, mo);
    }
    int rc = kPass;
    if (formula && formula_kind == "exact" && formula->k != code.k()) rc = kMismatch;
    if (oracle && oracle->exact() && formula) {
        if (formula_kind == "exact" && oracle->value != formula->d1) rc = kMismatch;
        if (formula_kind != "exact" && oracle->value < formula->d1) rc = kMismatch;
    }
    if (oracle && !oracle->exact() && rc == kPass && !formula) rc = kInfeasible;

    if (out.json()) {
        json j = envelope("params");
        j["code"] = spec.describe();
        j["n"] = code.n();
        j["k"] = code.k();
        if (formula) j["d1_formula"] = {{"value", formula->d1}, {"kind", formula_kind}};
        if (oracle) {
            if (oracle->exact())
                j["d1_oracle"] = {{"value", oracle->value}, {"method", oracle->method}};
            else
                j["d1_oracle"] = {{"value", nullptr}, {"method", "infeasible"}};
        }
        j["status"] = rc == kPass ? "pass" : rc == kMismatch ? "mismatch" : "infeasible";
        out.emit(j.dump(2) + "\n");
    } else if (out.csv()) {
        std::ostringstream o;
        o << "code,n,k,d1_formula,d1_kind,d1_oracle\n";
        o << '"' << spec.describe() << "\"," << code.n() << ',' << code.k() << ','
          << (formula ? std::to_string(formula->d1) : "") << ',' << formula_kind << ','
          << (oracle && oracle->exact() ? std::to_string(oracle->value) : "") << '\n';
        out.emit(o.str());
    } else {
        std::ostringstream o;
        o << spec.describe() << "\n";
        o << "n=" << code.n() << " k=" << code.k() << "\n";
        if (formula) o << "d1 " << (formula_kind == "exact" ? "= " : ">= ") << formula->d1 << " (formula)\n";
        if (oracle) {
            if (oracle->exact())
                o << "d1 = " << oracle->value << " (oracle, " << oracle->method << ")\n";
            else
                o << "d1 oracle: infeasible under cap\n";
        }
        if (rc == kMismatch) o << "MISMATCH\n";
        out.emit(o.str());
    }
    return rc;
}

// ------------------------------------------------------------------- genmat

int cmd_genmat(const SpecArgs& a, const Output& out) {
    LinearCode code = build_code(a.spec());
    out.emit(write_matrix(code.generator, matrix_format_from_string(out.format)));
    return kPass;
}

// ---------------------------------------------------------------------- ghw

struct GhwArgs {
    int q = 2;
    int s = 1;
    int m = 2;
    int d = 1;
    std::optional<int> r;
    bool all = false;
    bool refine = false;
    bool trace = false;
    std::uint64_t oracle_cap = 0;
};

json trace_json(const GhwBoundTrace& t) {
    json b = json::array();
    for (const auto& [ag, v] : t.B) b.push_back({{"alpha", ag.first}, {"gamma", ag.second}, {"value", v}});
    return {{"B", b}, {"argmin", {t.argmin.first, t.argmin.second}}, {"inner_exact", t.inner_exact}};
}

int cmd_ghw(const GhwArgs& a, const Output& out) {
    if (a.q < 2 || a.s < 1 || a.m < 1) throw UsageError("need q >= 2, s >= 1, m >= 1");
    const auto Q = ipow(static_cast<std::uint64_t>(a.q), a.s);
    (void)Field::of_order(Q);
    if (a.d < 1 || a.d > a.m * static_cast<int>(Q - 1)) throw UsageError("d outside 1..m(q^s-1)");
    auto& eng = default_engine();
    auto rep = a.refine ? eng.refined(Q, a.m, a.d) : eng.bounds(Q, a.m, a.d);
    std::vector<int> rs;
    if (a.all || !a.r) {
        for (int r = 1; r <= static_cast<int>(rep->k); ++r) rs.push_back(r);
    } else {
        if (*a.r < 1 || *a.r > static_cast<int>(rep->k)) throw UsageError("r outside 1..k");
        rs.push_back(*a.r);
    }
    std::optional<LinearCode> code;
    if (a.oracle_cap > 0) code = prm_generator(Field::of_order(Q), a.m, a.d);

    int rc = kPass;
    bool infeasible = false;
    json records = json::array();
    std::ostringstream txt;
    std::ostringstream csv;
    txt << "PRM_" << a.d << "(" << a.m << ") over GF(" << Q << "): n=" << rep->n << " k=" << rep->k
        << (a.refine ? " refined" : "") << "\n";
    csv << "r,lower,upper,exact,oracle\n";
    for (int r : rs) {
        const auto& rec = rep->at(r);
        json jr{{"r", r}, {"lower", rec.lower}, {"upper", rec.upper}, {"exact", rec.exact()},
                {"status", rec.exact() ? "exact" : "interval"}, {"provenance", rec.provenance}};
        std::string oracle_txt;
        if (code) {
            GhwOracleOptions go;
            go.cap = a.oracle_cap;
            auto res = ghw_exact(*code, r, go);
            if (res.exact()) {
                const bool inside = rec.lower <= res.value && res.value <= rec.upper;
                if (!inside) rc = kMismatch;
                jr["oracle"] = {{"value", res.value}, {"status", inside ? "within" : "outside"}};
                oracle_txt = std::to_string(res.value);
            } else {
                infeasible = true;
                jr["oracle"] = {{"value", nullptr}, {"status", "infeasible"}};
                oracle_txt = "infeasible";
            }
        }
        if (a.trace && r >= 2 && a.m >= 2) {
            auto t = eng.lower(Q, a.m, a.d, r);
            jr["trace"] = trace_json(t);
            txt << "  trace r=" << r << ":";
            for (const auto& [ag, v] : t.B) txt << " B(" << ag.first << "," << ag.second << ")=" << v;
            txt << "\n";
            if (a.m == 2) {
                auto m2 = eng.m2_lower(Q, a.d, r);
                json h = json::object();
                for (const auto& [g, v] : m2.H) h[std::to_string(g)] = v;
                json al = json::object();
                for (const auto& [g, v] : m2.alpha) al[std::to_string(g)] = v;
                jr["m2"] = {{"E", m2.E}, {"alpha", al}, {"lambda_star", m2.lambda_star}, {"H", h}, {"value", m2.value}};
            }
        }
        txt << "r=" << r << " lower=" << rec.lower << " upper=" << rec.upper << (rec.exact() ? " exact" : "");
        if (!oracle_txt.empty()) txt << " oracle=" << oracle_txt;
        txt << "\n";
        csv << r << ',' << rec.lower << ',' << rec.upper << ',' << (rec.exact() ? 1 : 0) << ',' << oracle_txt << '\n';
        records.push_back(jr);
    }
    if (rc == kPass && infeasible) rc = kInfeasible;
    if (out.json()) {
        json j = envelope("ghw");
        j["Q"] = Q;
        j["m"] = a.m;
        j["d"] = a.d;
        j["n"] = rep->n;
        j["k"] = rep->k;
        j["refined"] = a.refine;
        j["records"] = records;
        if (a.d % static_cast<int>(Q - 1) == 0 && a.m >= 1 && a.all) {
            auto dd = eng.dual_min_distance_deq0(Q, a.m, a.d);
            j["dual_min_distance"] = {{"lower", dd.lower}, {"upper", dd.upper}, {"exact", dd.exact()}};
        }
        out.emit(j.dump(2) + "\n");
    } else {
        out.emit(out.csv() ? csv.str() : txt.str());
    }
    return rc;
}

// -------------------------------------------------------------------- table

std::string render_ghw_table(const GhwTable& t, const Output& out) {
    if (out.json()) {
        json j = envelope("table");
        j["table"] = to_string(t.id);
        j["Q"] = t.Q;
        j["m"] = t.m;
        j["refined"] = t.refined;
        json cells = json::array();
        for (const auto& c : t.cells) cells.push_back({{"d", c.d}, {"r", c.r}, {"lower", c.lo}, {"upper", c.hi}});
        j["cells"] = cells;
        return j.dump(2) + "\n";
    }
    std::ostringstream o;
    if (out.csv()) {
        o << "d,r,value\n";
        for (const auto& c : t.cells) o << c.d << ',' << c.r << ',' << c.text() << '\n';
        return o.str();
    }
    o << "GHWs of PRM_d(" << t.m << ") over GF(" << t.Q << ")" << (t.refined ? ", duality-refined" : "") << "\n";
    std::map<int, std::vector<GhwCell>> rows;
    for (const auto& c : t.cells) rows[c.d].push_back(c);
    for (const auto& [d, cells] : rows) {
        o << "d=" << d << ":";
        for (const auto& c : cells) o << " " << c.text();
        o << "\n";
    }
    return o.str();
}

std::string render_good_params(const std::vector<GoodParamsRow>& rows, const Output& out) {
    auto status = [](const GoodParamsRow& r) {
        return r.status == DistanceStatus::Exact ? "exact" : r.status == DistanceStatus::Bound ? "bound" : "unknown";
    };
    if (out.json()) {
        json j = envelope("table");
        j["table"] = "goodparams";
        json arr = json::array();
        for (const auto& r : rows) {
            json e{{"q", r.q}, {"s", r.s}, {"m", r.m}, {"lambda", r.lambda}, {"kind", r.dual ? "dual" : "ssc"},
                   {"n", r.n}, {"k", r.k}, {"d1_status", status(r)}, {"method", r.method}};
            e["d1"] = r.status == DistanceStatus::Unknown ? json(nullptr) : json(r.d1);
            arr.push_back(e);
        }
        j["rows"] = arr;
        return j.dump(2) + "\n";
    }
    std::ostringstream o;
    const char sep = out.csv() ? ',' : ' ';
    if (out.csv()) o << "q,s,m,lambda,kind,n,k,d1,d1_status\n";
    for (const auto& r : rows) {
        o << r.q << sep << r.s << sep << r.m << sep << r.lambda << sep << (r.dual ? "dual" : "ssc") << sep;
        if (out.csv()) {
            o << r.n << sep << r.k << sep << (r.status == DistanceStatus::Unknown ? "" : std::to_string(r.d1)) << sep
              << status(r) << '\n';
        } else {
            o << "[" << r.n << "," << r.k << "] d1";
            if (r.status == DistanceStatus::Exact) o << " = " << r.d1;
            if (r.status == DistanceStatus::Bound) o << " >= " << r.d1;
            if (r.status == DistanceStatus::Unknown) o << " unknown (over cap)";
            o << '\n';
        }
    }
    return o.str();
}

int cmd_table(const std::string& name, bool check, std::uint64_t cap, const Output& out) {
    auto id = table_from_string(name);
    if (!id) throw UsageError("unknown table: " + name);
    CheckResult res;
    if (*id == TableId::GoodParams) {
        MinDistanceOptions mo;
        mo.cap = cap;
        auto rows = generate_good_params(mo);
        out.emit(render_good_params(rows, out));
        if (!check) return kPass;
        res = check_good_params(rows, parse_good_params(golden_source(*id)));
    } else {
        auto t = generate_ghw_table(*id, default_engine());
        out.emit(render_ghw_table(t, out));
        if (!check) return kPass;
        res = check_ghw_table(t, parse_ghw_cells(golden_source(*id)));
    }
    for (const auto& m : res.mismatches) std::cerr << "mismatch: " << m << "\n";
    std::cerr << "check " << name << ": " << (res.pass ? "pass" : "FAIL") << "\n";
    return res.pass ? kPass : kMismatch;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& name, VerifyOptions opt, const Output& out) {
    auto suite = suite_from_string(name);
    if (!suite) throw UsageError("unknown suite: " + name);
    auto rep = run_suite(*suite, opt, default_engine());
    if (out.json()) {
        json j = envelope("verify");
        j["suite"] = name;
        j["pass"] = rep.pass;
        j["checked"] = rep.checked;
        j["skipped"] = rep.skipped;
        if (rep.all_exact) j["all_exact"] = *rep.all_exact;
        j["counterexamples"] = rep.counterexamples;
        out.emit(j.dump(2) + "\n");
    } else {
        std::ostringstream o;
        o << name << ": " << (rep.pass ? "pass" : "FAIL") << " checked=" << rep.checked << " skipped=" << rep.skipped;
        if (rep.all_exact) o << (*rep.all_exact ? " all exact" : " not all exact");
        o << "\n";
        for (const auto& c : rep.counterexamples) o << "  " << c << "\n";
        out.emit(o.str());
    }
    if (!rep.pass) return kMismatch;
    if (rep.checked == 0 && rep.skipped > 0) return kInfeasible;
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective Reed-Muller codes: parameters, subfield subcodes and generalized Hamming weights"};
    app.require_subcommand(1);
    Output out;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", out.format, "txt, csv or json")->check(CLI::IsMember({"txt", "csv", "json"}));
        sub->add_option("--out", out.out, "write to a file instead of stdout");
    };

    SpecArgs spec;
    std::uint64_t params_cap = kDefaultCodewordCap;
    auto* params = app.add_subcommand("params", "n, k and d1 of a code");
    spec.add(params);
    params->add_option("--oracle-cap", params_cap, "codeword cap for the exact distance; 0 disables");
    add_output(params);

    auto* genmat = app.add_subcommand("genmat", "write the RREF generator matrix");
    spec.add(genmat);
    add_output(genmat);

    GhwArgs ga;
    auto* ghw = app.add_subcommand("ghw", "bounds on generalized Hamming weights of PRM_d(m)");
    ghw->add_option("--q", ga.q);
    ghw->add_option("--s", ga.s);
    ghw->add_option("--m", ga.m);
    ghw->add_option("--d", ga.d)->required();
    auto* r_opt = ghw->add_option("--r", ga.r);
    ghw->add_flag("--all", ga.all)->excludes(r_opt);
    ghw->add_flag("--refine", ga.refine, "tighten with the dual hierarchy");
    ghw->add_flag("--trace", ga.trace, "include the recursive-bound terms");
    ghw->add_option("--oracle-cap", ga.oracle_cap, "check against the exhaustive oracle up to this many subspaces");
    add_output(ghw);

    std::string table_name;
    bool table_check = false;
    std::uint64_t table_cap = kDefaultCodewordCap;
    auto* table = app.add_subcommand("table", "regenerate a table of parameters or weights");
    table->add_option("id", table_name, "goodparams, q3m2, q3m3, q4m2, q5m2, q3m3bis, q4m2bis, q5m2bis")->required();
    table->add_flag("--check", table_check, "compare with the embedded transcription");
    table->add_option("--oracle-cap", table_cap, "codeword cap for goodparams distances");
    add_output(table);

    std::string suite_name;
    VerifyOptions vopt;
    std::optional<int> vq, vs, vm;
    std::uint64_t vcap = vopt.oracle.cap;
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", suite_name, "recursion, duality, ssc, ghw-sandwich, ordering")->required();
    verify->add_option("--max-n", vopt.max_n);
    verify->add_option("--max-m", vopt.max_m);
    verify->add_option("--q", vq);
    verify->add_option("--s", vs);
    verify->add_option("--m", vm);
    verify->add_option("--oracle-cap", vcap);
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*params) return cmd_params(spec, params_cap, out);
        if (*genmat) return cmd_genmat(spec, out);
        if (*ghw) return cmd_ghw(ga, out);
        if (*table) return cmd_table(table_name, table_check, table_cap, out);
        if (*verify) {
            vopt.q = vq;
            vopt.s = vs;
            vopt.m = vm;
            vopt.oracle.cap = vcap;
            return cmd_verify(suite_name, vopt, out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
