#include "prmkit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "prmkit/subfield.hpp"

namespace prmkit {

namespace {

std::string tag(std::uint64_t Q, int m, int d) {
    std::ostringstream o;
    o << "Q=" << Q << " m=" << m << " d=" << d;
    return o.str();
}

// (Q, m) pairs of the sweep with at most max_n projective points.
std::vector<std::pair<std::uint64_t, int>> sweep(const VerifyOptions& opt) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (auto Q : opt.fields)
        for (int m = 1; m <= opt.max_m; ++m)
            if (projective_count(Q, m) <= opt.max_n) out.emplace_back(Q, m);
    return out;
}

bool normalized(std::span<const Elem> pt) {
    for (Elem c : pt)
        if (c != 0) return c == 1;
    return false;
}

}  // namespace

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Recursion: return "recursion";
        case Suite::Duality: return "duality";
        case Suite::Ssc: return "ssc";
        case Suite::GhwSandwich: return "ghw-sandwich";
        case Suite::Ordering: return "ordering";
    }
    return "?";
}

std::optional<Suite> suite_from_string(const std::string& s) {
    for (auto v : {Suite::Recursion, Suite::Duality, Suite::Ssc, Suite::GhwSandwich, Suite::Ordering})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

VerifyReport verify_recursion_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = Suite::Recursion;
    for (auto [Q, m] : sweep(opt)) {
        auto f = Field::of_order(Q);
        for (int d = 1; d <= m * static_cast<int>(Q - 1); ++d) {
            auto chk = verify_recursion(f, m, d);
            ++rep.checked;
            if (!chk.row_space_equal) rep.fail(tag(Q, m, d) + ": row spaces differ");
            if (!chk.dimension_identity)
                rep.fail(tag(Q, m, d) + ": k=" + std::to_string(chk.k) + " but " + std::to_string(chk.k_rm) + "+" +
                         std::to_string(chk.k_prm_lower));
            if (chk.k != prm_dim(Q, m, d)) rep.fail(tag(Q, m, d) + ": rank differs from the closed form");
        }
    }
    return rep;
}

VerifyReport verify_duality_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = Suite::Duality;
    for (auto [Q, m] : sweep(opt)) {
        auto f = Field::of_order(Q);
        const int top = m * static_cast<int>(Q - 1);
        for (int d = 1; d <= top; ++d) {
            auto c = prm_generator(f, m, d);
            auto dual = dual_code(c);
            Matrix expect = prm_code_any(f, m, top - d).generator;
            if (d % static_cast<int>(Q - 1) == 0) expect.append_row(std::vector<Elem>(c.n(), 1));
            ++rep.checked;
            const bool ok = expect.rows() == 0 ? dual.k() == 0 : row_space_equal(dual.generator, expect);
            if (!ok) rep.fail(tag(Q, m, d) + ": dual differs from the predicted code");
        }
    }
    return rep;
}

VerifyReport verify_ssc_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = Suite::Ssc;
    for (auto Q : opt.fields) {
        const auto [p, e] = prime_power(Q);
        // Every proper subfield GF(q) with q^s = Q.
        for (int a = 1; a < e; ++a) {
            if (e % a) continue;
            const int q = static_cast<int>(ipow(static_cast<std::uint64_t>(p), a));
            const int s = e / a;
            for (int m = 2; m <= opt.max_m; ++m) {
                if (projective_count(Q, m) > opt.max_n) continue;
                for (int lam = 1; lam <= m * (q - 1); ++lam) {
                    const std::string where = "q=" + std::to_string(q) + " s=" + std::to_string(s) +
                                              " m=" + std::to_string(m) + " lambda=" + std::to_string(lam);
                    auto r = ssc_recursion_check(q, s, m, lam);
                    ++rep.checked;
                    if (!r.row_space_equal) rep.fail(where + ": recursive SSC differs");
                    if (!r.dimension_identity) rep.fail(where + ": dimension identity fails");
                    auto dr = ssc_dual_recursive(q, s, m, lam);
                    if (!dr.row_space_equal) rep.fail(where + ": recursive dual SSC differs");
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_ghw_sandwich_suite(const VerifyOptions& opt, GhwEngine& engine) {
    VerifyReport rep;
    rep.suite = Suite::GhwSandwich;
    std::vector<std::pair<std::uint64_t, int>> cases;
    if (opt.q || opt.s || opt.m) {
        const auto Q = ipow(static_cast<std::uint64_t>(opt.q.value_or(2)), opt.s.value_or(1));
        cases.emplace_back(Q, opt.m.value_or(2));
    } else {
        for (std::uint64_t Q : {2, 3, 4})
            for (int m = 2; m <= opt.max_m; ++m) cases.emplace_back(Q, m);
    }
    bool all_exact = true;
    for (auto [Q, m] : cases) {
        auto f = Field::of_order(Q);
        for (int d = 1; d <= m * static_cast<int>(Q - 1); ++d) {
            auto code = prm_generator(f, m, d);
            auto report = engine.refined(Q, m, d);
            for (int r = 1; r <= static_cast<int>(code.k()); ++r) {
                auto res = ghw_exact(code, r, opt.oracle);
                if (!res.exact()) {
                    ++rep.skipped;
                    all_exact = false;
                    continue;
                }
                ++rep.checked;
                const auto& rec = report->at(r);
                if (res.value < rec.lower || res.value > rec.upper)
                    rep.fail(tag(Q, m, d) + " r=" + std::to_string(r) + ": oracle " + std::to_string(res.value) +
                             " outside [" + std::to_string(rec.lower) + "," + std::to_string(rec.upper) + "]");
                if (res.value != rec.lower) all_exact = false;
            }
        }
    }
    rep.all_exact = all_exact;
    return rep;
}

VerifyReport verify_ordering_suite(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.suite = Suite::Ordering;
    for (auto [Q, m] : sweep(opt)) {
        auto f = Field::of_order(Q);
        auto P = enumerate_projective(f, m);
        auto prev = enumerate_projective(f, m - 1);
        auto A = enumerate_affine(f, m);
        ++rep.checked;
        const std::string where = "Q=" + std::to_string(Q) + " m=" + std::to_string(m);
        if (P.size() != projective_count(Q, m)) rep.fail(where + ": projective count");
        std::set<std::vector<Elem>> seen;
        for (std::size_t i = 0; i < P.size(); ++i) {
            auto pt = P.point(i);
            if (!normalized(pt)) rep.fail(where + ": point " + std::to_string(i) + " not normalized");
            seen.emplace(pt.begin(), pt.end());
        }
        if (seen.size() != P.size()) rep.fail(where + ": repeated point");
        if (A.size() != ipow(Q, m)) {
            rep.fail(where + ": affine count");
            continue;
        }
        // {1} x affine(m), then {0} x P^(m-1).
        for (std::size_t i = 0; i < A.size(); ++i) {
            auto pt = P.point(i);
            auto a = A.point(i);
            if (pt[0] != 1 || !std::equal(a.begin(), a.end(), pt.begin() + 1))
                rep.fail(where + ": affine block at " + std::to_string(i));
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            auto pt = P.point(A.size() + i);
            auto b = prev.point(i);
            if (pt[0] != 0 || !std::equal(b.begin(), b.end(), pt.begin() + 1))
                rep.fail(where + ": infinity block at " + std::to_string(i));
        }
        // affine(m) = xi^j * P^(m-1) for j = 0..Q-2, then the origin.
        std::size_t idx = 0;
        for (std::uint64_t j = 0; j + 1 < Q; ++j)
            for (std::size_t i = 0; i < prev.size(); ++i, ++idx) {
                auto a = A.point(idx);
                auto b = prev.point(i);
                for (int c = 0; c < m; ++c)
                    if (a[static_cast<std::size_t>(c)] != f->mul(f->exp(static_cast<std::int64_t>(j)), b[static_cast<std::size_t>(c)]))
                        rep.fail(where + ": affine coset at " + std::to_string(idx));
            }
        auto origin = A.point(A.size() - 1);
        if (std::any_of(origin.begin(), origin.end(), [](Elem c) { return c != 0; }))
            rep.fail(where + ": origin not last");
    }
    return rep;
}

VerifyReport run_suite(Suite s, const VerifyOptions& opt, GhwEngine& engine) {
    switch (s) {
        case Suite::Recursion: return verify_recursion_suite(opt);
        case Suite::Duality: return verify_duality_suite(opt);
        case Suite::Ssc: return verify_ssc_suite(opt);
        case Suite::GhwSandwich: return verify_ghw_sandwich_suite(opt, engine);
        case Suite::Ordering: return verify_ordering_suite(opt);
    }
    return {};
}

bool wei_partition(std::uint64_t n, const std::vector<std::uint64_t>& code, const std::vector<std::uint64_t>& dual) {
    if (code.size() + dual.size() != n) return false;
    std::vector<int> hits(n + 1, 0);
    for (auto v : code) {
        if (v < 1 || v > n) return false;
        ++hits[v];
    }
    for (auto v : dual) {
        if (v < 1 || v > n) return false;
        ++hits[n + 1 - v];
    }
    for (std::uint64_t i = 1; i <= n; ++i)
        if (hits[i] != 1) return false;
    return true;
}

}  // namespace prmkit
