// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

#include "prmkit/ghw.hpp"
#include "prmkit/subfield.hpp"
#include "prmkit/tables.hpp"
#include "prmkit/verify.hpp"

using namespace prmkit;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << "first failure: " << what << "; ";
            ok = false;
        }
    }
};

const std::vector<std::uint64_t> kSweepFields{2, 3, 4, 5, 8, 9};
constexpr std::uint64_t kMaxN = 400;

std::string tag(std::uint64_t Q, int m, int d) {
    return "Q=" + std::to_string(Q) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
}

VerifyOptions sweep_options() {
    VerifyOptions o;
    o.fields = kSweepFields;
    o.max_n = kMaxN;
    o.max_m = 3;
    return o;
}

void criterion_params(Outcome& out) {
    int codes = 0;
    for (auto Q : kSweepFields) {
        auto f = Field::of_order(Q);
        for (int m = 1; m <= 3; ++m) {
            const int top = m * static_cast<int>(Q - 1);
            if (projective_count(Q, m) <= kMaxN)
                for (int d = 1; d <= top; ++d, ++codes) {
                    auto c = prm_generator(f, m, d);
                    out.require(rank(c.generator) == prm_params(Q, m, d).k, "PRM " + tag(Q, m, d));
                }
            if (ipow(Q, m) <= kMaxN)
                for (int d = 0; d <= top; ++d, ++codes) {
                    auto c = rm_generator(f, m, d);
                    out.require(rank(c.generator) == rm_params(Q, m, d).k, "RM " + tag(Q, m, d));
                }
        }
    }
    out.detail << codes << " codes";
}

void criterion_report(Outcome& out, const VerifyReport& rep) {
    out.require(rep.pass, rep.counterexamples.empty() ? "suite failed" : rep.counterexamples.front());
    out.detail << rep.checked << " instances";
}

void criterion_distances(Outcome& out) {
    MinDistanceOptions opt;
    opt.cap = 1u << 22;
    opt.method = DistanceMethod::Enumerate;
    int checked = 0, skipped = 0;
    for (auto Q : kSweepFields) {
        auto f = Field::of_order(Q);
        for (int m = 1; m <= 3; ++m) {
            const int top = m * static_cast<int>(Q - 1);
            auto run = [&](const LinearCode& c, std::uint64_t formula, const std::string& what) {
                if (std::pow(static_cast<double>(Q), static_cast<double>(c.k())) > static_cast<double>(opt.cap)) {
                    ++skipped;
                    return;
                }
                auto res = min_distance_exact(c, opt);
                ++checked;
                out.require(res.exact() && res.value == formula,
                            what + " oracle " + std::to_string(res.value) + " formula " + std::to_string(formula));
            };
            if (projective_count(Q, m) <= kMaxN)
                for (int d = 1; d <= top; ++d) run(prm_generator(f, m, d), prm_params(Q, m, d).d1, "PRM " + tag(Q, m, d));
            if (ipow(Q, m) <= kMaxN)
                for (int d = 0; d <= top; ++d) run(rm_generator(f, m, d), rm_params(Q, m, d).d1, "RM " + tag(Q, m, d));
        }
    }
    out.detail << checked << " codes by enumeration, " << skipped << " over 2^22";
}

void criterion_good_params(Outcome& out) {
    const auto golden = parse_good_params(golden_source(TableId::GoodParams));
    int exact = 0, bounded = 0;
    for (const auto& g : golden) {
        MinDistanceOptions opt;
        // The dual [85,25] over GF(2) has 2^25 codewords, just above the default cap.
        if (g.n == 85 && g.k == 25) opt.cap = 1u << 26;
        auto row = good_params_row(g.q, g.s, g.m, g.lambda, g.dual, opt);
        const std::string what = "[" + std::to_string(g.n) + "," + std::to_string(g.k) + "]";
        out.require(row.n == g.n && row.k == g.k, what + " dimensions");
        const bool must_be_exact = std::pow(static_cast<double>(g.q), static_cast<double>(g.k)) <= double(1u << 22) ||
                                   (g.n == 85 && g.k == 25);
        if (must_be_exact) out.require(row.status == DistanceStatus::Exact, what + " distance not computed");
        out.require(row.status != DistanceStatus::Unknown, what + " no distance information");
        out.require(row.d1 >= g.d1, what + " d1 " + std::to_string(row.d1) + " below " + std::to_string(g.d1));
        (row.status == DistanceStatus::Exact ? exact : bounded)++;
    }
    struct Extra {
        int q, s, m, lambda;
        bool dual;
        std::uint64_t n, k;
    };
    const Extra extras[] = {{2, 2, 4, 1, false, 341, 25}, {2, 2, 4, 3, false, 341, 295}, {2, 2, 4, 1, true, 341, 316},
                            {3, 2, 3, 1, false, 820, 16}, {3, 2, 3, 1, true, 820, 804}};
    MinDistanceOptions off;
    off.cap = 1;
    off.column_budget = 1;
    for (const auto& e : extras) {
        auto row = good_params_row(e.q, e.s, e.m, e.lambda, e.dual, off);
        out.require(row.n == e.n && row.k == e.k, "extra [" + std::to_string(e.n) + "," + std::to_string(e.k) + "]");
    }
    out.detail << exact << " distances exact, " << bounded << " by bound, 5 extra dimensions";
}

void criterion_examples(Outcome& out, double& worst) {
    using clock = std::chrono::steady_clock;
    auto timed = [&](const std::function<void()>& f) {
        const auto t0 = clock::now();
        f();
        worst = std::max(worst, std::chrono::duration<double>(clock::now() - t0).count());
    };
    timed([&] {
        GhwEngine eng;
        auto t = eng.lower(4, 2, 5, 2);
        std::map<AlphaGamma, std::uint64_t> want{{{0, 0}, 4}, {{1, 0}, 4}, {{1, 1}, 6},
                                                 {{2, 0}, 5}, {{2, 1}, 5}, {{2, 2}, 4}};
        out.require(t.value == 4 && t.B == want, "six-term example");
    });
    timed([&] {
        GhwEngine eng;
        auto t = eng.lower(4, 2, 3, 2);
        std::map<AlphaGamma, std::uint64_t> want{{{0, 0}, 11}, {{1, 0}, 10}, {{2, 0}, 10}};
        out.require(t.value == 10 && t.B == want, "three-term example");
    });
    timed([&] {
        GhwEngine eng;
        auto t = eng.m2_lower(4, 5, 5);
        bool all8 = !t.H.empty();
        for (auto [g, h] : t.H) all8 = all8 && h == 8;
        out.require(t.value == 8 && all8 && t.alpha == std::map<int, int>{{0, 2}, {1, 3}, {2, 3}, {3, 4}},
                    "fast-path example");
        out.require(eng.lower(4, 2, 5, 5).value == 8, "fast-path example against the generic bound");
    });
    out.detail << "slowest example " << worst << " s";
}

void criterion_tables(Outcome& out, std::initializer_list<TableId> ids) {
    GhwEngine eng;
    std::size_t cells = 0;
    for (auto id : ids) {
        auto golden = parse_ghw_cells(golden_source(id));
        auto res = check_ghw_table(generate_ghw_table(id, eng), golden);
        out.require(res.pass, to_string(id) + ": " + (res.mismatches.empty() ? "" : res.mismatches.front()));
        cells += golden.size();
    }
    out.detail << cells << " cells";
}

void criterion_refined(Outcome& out) {
    criterion_tables(out, {TableId::Q3M3Bis, TableId::Q4M2Bis, TableId::Q5M2Bis});
    GhwEngine eng;
    auto rep = eng.refined(3, 3, 3);
    out.require(rep->at(3).exact() && rep->at(3).lower == 13, "d_3 = 13");
    out.require(rep->at(6).exact() && rep->at(6).lower == 22, "d_6 = 22");
    out.require(rep->at(11).exact() && rep->at(11).lower == 30, "d_11 = 30");
    out.require(rep->at(12).exact() && rep->at(12).lower == 31, "d_12 = 31");
}

void criterion_binary_sharpness(Outcome& out) {
    GhwEngine eng;
    GhwOracleOptions opt;
    auto f = Field::of_order(2);
    int checked = 0;
    for (int m = 2; m <= 3; ++m)
        for (int d = 1; d <= m; ++d) {
            auto code = prm_generator(f, m, d);
            auto rep = eng.refined(2, m, d);
            for (int r = 1; r <= static_cast<int>(code.k()); ++r) {
                auto res = ghw_exact(code, r, opt);
                ++checked;
                out.require(res.exact(), tag(2, m, d) + " r=" + std::to_string(r) + " oracle over cap");
                out.require(res.value == rep->at(r).lower,
                            tag(2, m, d) + " r=" + std::to_string(r) + ": oracle " + std::to_string(res.value) +
                                " lower " + std::to_string(rep->at(r).lower));
            }
        }
    out.detail << checked << " weights";
}

void criterion_properties(Outcome& out) {
    GhwEngine eng;
    // Sandwich over q^s <= 4, m = 2, 3.
    VerifyOptions vo;
    vo.max_m = 3;
    vo.oracle.cap = 2'000'000;
    auto sw = verify_ghw_sandwich_suite(vo, eng);
    out.require(sw.pass, sw.counterexamples.empty() ? "sandwich" : sw.counterexamples.front());

    // Monotonicity and Singleton on every report.
    int reports = 0;
    for (std::uint64_t Q : {2, 3, 4, 5, 7, 8, 9})
        for (int m = 1; m <= 3; ++m) {
            if (projective_count(Q, m) > kMaxN) continue;
            for (int d = 1; d <= m * static_cast<int>(Q - 1); ++d)
                for (bool refined : {false, true}) {
                    auto rep = refined ? eng.refined(Q, m, d) : eng.bounds(Q, m, d);
                    ++reports;
                    for (std::size_t i = 0; i < rep->records.size(); ++i) {
                        const auto& rec = rep->records[i];
                        out.require(rec.lower <= rec.upper, "interval " + tag(Q, m, d));
                        out.require(rec.upper <= rep->n - rep->k + static_cast<std::uint64_t>(rec.r),
                                    "Singleton " + tag(Q, m, d));
                        if (i > 0) {
                            out.require(rec.lower > rep->records[i - 1].lower, "monotone lower " + tag(Q, m, d));
                            out.require(rec.upper > rep->records[i - 1].upper, "monotone upper " + tag(Q, m, d));
                        }
                    }
                }
        }

    // Wei duality on every code/dual pair whose hierarchies the oracle completes.
    GhwOracleOptions go;
    go.cap = 2'000'000;
    int pairs = 0;
    for (std::uint64_t Q : {2, 3, 4})
        for (int m = 1; m <= 3; ++m) {
            if (projective_count(Q, m) > 40) continue;
            auto f = Field::of_order(Q);
            for (int d = 1; d <= m * static_cast<int>(Q - 1); ++d) {
                auto c = prm_generator(f, m, d);
                auto dual = dual_code(c);
                if (dual.k() == 0) continue;
                auto hc = weight_hierarchy_exact(c, go);
                if (!hc.complete) continue;
                auto hd = weight_hierarchy_exact(dual, go);
                if (!hd.complete) continue;
                std::vector<std::uint64_t> a, b;
                for (auto& v : hc.values) a.push_back(*v);
                for (auto& v : hd.values) b.push_back(*v);
                ++pairs;
                out.require(wei_partition(c.n(), a, b), "Wei partition " + tag(Q, m, d));
            }
        }

    // m = 2 fast path.
    int cells = 0;
    for (std::uint64_t Q : {2, 3, 4, 5})
        for (int d = 1; d <= 2 * static_cast<int>(Q - 1); ++d)
            for (int r = 1; r <= static_cast<int>(prm_dim(Q, 2, d)); ++r, ++cells)
                out.require(eng.m2_lower(Q, d, r).value == eng.lower(Q, 2, d, r).value,
                            "fast path " + tag(Q, 2, d) + " r=" + std::to_string(r));

    out.detail << sw.checked << " sandwich checks (" << sw.skipped << " over cap 2e6), " << reports << " reports, "
               << pairs << " dual pairs, " << cells << " fast-path cells";
}

void criterion_ssc(Outcome& out) {
    VerifyOptions vo;
    vo.fields = {4, 8, 9, 16};
    vo.max_n = kMaxN;
    vo.max_m = 3;
    auto rep = verify_ssc_suite(vo);
    out.require(rep.pass, rep.counterexamples.empty() ? "ssc suite" : rep.counterexamples.front());
    auto [rm_polys, prm_polys] = generic_ssc_polys(2, 2, 3, 1);
    auto basis = ssc_basis_recursive(2, 2, 3, 1, rm_polys, prm_polys);
    out.require(basis.polys.size() == 16 && basis.rank == 16 && basis.is_basis(), "basis of the worked example");
    out.detail << rep.checked << " (q,s,m,lambda) cases, basis of " << basis.polys.size() << " polynomials";
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<void(Outcome&)> run;
    };
    double worst_example = 0;
    const std::vector<Criterion> criteria{
        {1, "parameter formulas", 60, criterion_params},
        {2, "recursive construction", 120, [](Outcome& o) { criterion_report(o, verify_recursion_suite(sweep_options())); }},
        {3, "duality", 60, [](Outcome& o) { criterion_report(o, verify_duality_suite(sweep_options())); }},
        {4, "minimum distances", 300, criterion_distances},
        {5, "good parameters", 900, criterion_good_params},
        {6, "GHW bound examples", 3, [&](Outcome& o) {
             criterion_examples(o, worst_example);
             o.require(worst_example < 1.0, "an example took over 1 s");
         }},
        {7, "GHW tables", 120,
         [](Outcome& o) { criterion_tables(o, {TableId::Q3M2, TableId::Q3M3, TableId::Q4M2, TableId::Q5M2}); }},
        {8, "duality-improved tables", 120, criterion_refined},
        {9, "sharpness over GF(2)", 600, criterion_binary_sharpness},
        {10, "property suite", 900, criterion_properties},
        {11, "subfield subcode recursions", 300, criterion_ssc},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto t0 = clock::now();
        try {
            c.run(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        if (secs > c.limit) out.require(false, "over the time limit");
        if (!out.ok) ++failed;
        std::printf("criterion %2d %s: %s (%.1fs of %.0fs) %s\n", c.id, c.name, out.ok ? "PASS" : "FAIL", secs, c.limit,
                    out.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
