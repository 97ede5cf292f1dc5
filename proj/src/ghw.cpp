#include "prmkit/ghw.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "prmkit/pspace.hpp"

namespace prmkit {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kInf - b ? kInf : a + b; }

int top_degree(std::uint64_t Q, int m) { return m * static_cast<int>(Q - 1); }

// (nu, mu) = divmod(e, Q-1); (Q - mu) Q^(m-nu-1), or 1 once the exponent is negative.
std::uint64_t first_weight(std::uint64_t Q, int m, int e) {
    const int nu = e / static_cast<int>(Q - 1);
    const int mu = e % static_cast<int>(Q - 1);
    if (m - nu - 1 < 0) return 1;
    return (Q - static_cast<std::uint64_t>(mu)) * ipow(Q, m - nu - 1);
}

using Hier = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // index r, entry 0 is (0, 0)

// Exact hierarchy for the zero code, the full space and m = 1; nullopt otherwise.
std::optional<Hier> base_hierarchy(std::uint64_t Q, int m, int d) {
    if (d <= 0) return Hier{{0, 0}};
    const std::uint64_t k = prm_dim(Q, m, d);
    Hier h{{0, 0}};
    if (m == 0 || d > top_degree(Q, m)) {
        for (std::uint64_t r = 1; r <= k; ++r) h.emplace_back(r, r);
        return h;
    }
    if (m == 1) {
        for (std::uint64_t r = 1; r <= k; ++r) {
            const auto v = ghw_prs(Q, d, r);
            h.emplace_back(v, v);
        }
        return h;
    }
    return std::nullopt;
}

bool propagate(Hier& h) {
    bool changed = false;
    for (std::size_t r = 2; r < h.size(); ++r)
        if (h[r].first < h[r - 1].first + 1) {
            h[r].first = h[r - 1].first + 1;
            changed = true;
        }
    for (std::size_t r = h.size(); r-- > 2;)
        if (h[r - 1].second + 1 > h[r].second) {
            h[r - 1].second = h[r].second - 1;
            changed = true;
        }
    return changed;
}

Hier to_hier(const GhwReport& rep) {
    Hier h{{0, 0}};
    for (const auto& rec : rep.records) h.emplace_back(rec.lower, rec.upper);
    return h;
}

}  // namespace

std::uint64_t ghw_rm(std::uint64_t Q, int m, int d, std::uint64_t r) {
    if (r == 0) return 0;
    if (Q < 2 || m < 0) throw std::invalid_argument("ghw_rm: bad parameters");
    const std::uint64_t k = rm_dim(Q, m, d);
    if (r > k) throw std::out_of_range("ghw_rm: r exceeds the dimension");
    // Wanted: the r-th smallest N < Q^m whose base-Q digit sum exceeds m(Q-1) - d - 1.
    const int top = top_degree(Q, m);
    // ways[L][s]: strings of L digits summing to s.
    std::vector<std::vector<std::uint64_t>> ways(static_cast<std::size_t>(m) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(top) + 1, 0));
    ways[0][0] = 1;
    for (int L = 1; L <= m; ++L)
        for (int s = 0; s <= top; ++s) {
            std::uint64_t acc = 0;
            for (int v = 0; v < static_cast<int>(Q) && v <= s; ++v) acc += ways[L - 1][s - v];
            ways[L][s] = acc;
        }
    auto at_least = [&](int L, int need) {
        std::uint64_t c = 0;
        for (int s = std::max(need, 0); s <= L * static_cast<int>(Q - 1); ++s) c += ways[L][s];
        return c;
    };
    int need = top - d;
    std::uint64_t rank = r;
    std::uint64_t N = 0;
    for (int i = m - 1; i >= 0; --i) {
        for (std::uint64_t v = 0; v < Q; ++v) {
            const std::uint64_t c = at_least(i, need - static_cast<int>(v));
            if (rank <= c) {
                N += v * ipow(Q, i);
                need -= static_cast<int>(v);
                break;
            }
            rank -= c;
        }
    }
    return N + 1;
}

std::uint64_t ghw_prs(std::uint64_t Q, int d, std::uint64_t r) {
    if (r == 0) return 0;
    if (d < 1) throw std::invalid_argument("ghw_prs: degree must be positive");
    const std::uint64_t k = prm_dim(Q, 1, d);
    if (r > k) throw std::out_of_range("ghw_prs: r exceeds the dimension");
    const std::int64_t v = static_cast<std::int64_t>(Q) - d + static_cast<std::int64_t>(r);
    return std::max<std::uint64_t>(v > 0 ? static_cast<std::uint64_t>(v) : 0, r);
}

std::optional<int> GhwReport::r_star() const {
    if (records.empty()) return std::nullopt;
    int r = static_cast<int>(records.size());
    if (!records.back().exact()) return std::nullopt;
    while (r > 1) {
        const auto& prev = records[static_cast<std::size_t>(r - 2)];
        const auto& cur = records[static_cast<std::size_t>(r - 1)];
        if (!prev.exact() || prev.lower + 1 != cur.lower) break;
        --r;
    }
    return r;
}

bool wei_refine(std::uint64_t n, Hier& a, Hier& b) {
    const std::size_t k = a.size() - 1;
    const std::size_t kb = b.size() - 1;
    if (k + kb != n) throw std::invalid_argument("wei_refine: dimensions do not sum to n");
    // The weights of the dual, reflected v -> n+1-v, fill the complement of the hierarchy of the code.
    Hier c(kb + 1, {0, 0});
    for (std::size_t i = 1; i <= kb; ++i) {
        const auto& e = b[kb + 1 - i];
        if (e.second > n || e.first > n) return false;
        c[i] = {n + 1 - e.second, n + 1 - e.first};
    }
    auto in = [](const std::pair<std::uint64_t, std::uint64_t>& iv, std::uint64_t v) {
        return iv.first <= v && v <= iv.second;
    };
    // State after deciding 1..v: number of values assigned to the code so far.
    std::vector<std::vector<char>> fwd(n + 1, std::vector<char>(k + 1, 0));
    fwd[0][0] = 1;
    for (std::uint64_t v = 1; v <= n; ++v)
        for (std::size_t s = 0; s <= k; ++s) {
            if (!fwd[v - 1][s]) continue;
            if (s + 1 <= k && in(a[s + 1], v)) fwd[v][s + 1] = 1;
            const std::uint64_t ci = v - s;
            if (ci >= 1 && ci <= kb && in(c[ci], v)) fwd[v][s] = 1;
        }
    if (!fwd[n][k]) return false;
    std::vector<std::vector<char>> live(n + 1, std::vector<char>(k + 1, 0));
    live[n][k] = 1;
    for (std::uint64_t v = n; v >= 1; --v)
        for (std::size_t s = 0; s <= k; ++s) {
            if (!live[v][s]) continue;
            if (s >= 1 && fwd[v - 1][s - 1] && in(a[s], v)) live[v - 1][s - 1] = 1;
            const std::uint64_t ci = v - s;
            if (ci >= 1 && ci <= kb && fwd[v - 1][s] && in(c[ci], v)) live[v - 1][s] = 1;
        }
    Hier na(k + 1, {kInf, 0});
    Hier nc(kb + 1, {kInf, 0});
    na[0] = nc[0] = {0, 0};
    for (std::uint64_t v = 1; v <= n; ++v)
        for (std::size_t s = 0; s <= k; ++s) {
            if (!live[v][s]) continue;
            if (s >= 1 && live[v - 1][s - 1] && in(a[s], v)) {
                na[s].first = std::min(na[s].first, v);
                na[s].second = std::max(na[s].second, v);
            }
            const std::uint64_t ci = v - s;
            if (ci >= 1 && ci <= kb && live[v - 1][s] && in(c[ci], v)) {
                nc[ci].first = std::min(nc[ci].first, v);
                nc[ci].second = std::max(nc[ci].second, v);
            }
        }
    for (std::size_t r = 1; r <= k; ++r)
        if (na[r].first > na[r].second) return false;
    a = na;
    for (std::size_t j = 1; j <= kb; ++j) {
        const auto& iv = nc[kb + 1 - j];
        if (iv.first > iv.second) return false;
        b[j] = {n + 1 - iv.second, n + 1 - iv.first};
    }
    return true;
}

GhwEngine::ReportPtr GhwEngine::bounds(std::uint64_t Q, int m, int d) {
    const Key key{Q, m, d, false};
    {
        std::lock_guard lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto rep = compute_bounds(Q, m, d);
    std::lock_guard lock(mu_);
    return memo_.emplace(key, rep).first->second;
}

GhwEngine::ReportPtr GhwEngine::refined(std::uint64_t Q, int m, int d) {
    const Key key{Q, m, d, true};
    {
        std::lock_guard lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto rep = compute_refined(Q, m, d);
    std::lock_guard lock(mu_);
    return memo_.emplace(key, rep).first->second;
}

std::pair<std::uint64_t, std::uint64_t> GhwEngine::inner(std::uint64_t Q, int m, int d, int r) {
    if (r == 0) return {0, 0};
    const auto& rec = refined(Q, m, d)->at(r);
    return {rec.lower, rec.upper};
}

GhwBoundTrace GhwEngine::lower(std::uint64_t Q, int m, int d, int r) {
    if (Q < 2 || m < 2 || d < 1 || d > top_degree(Q, m))
        throw std::invalid_argument("recursive lower bound needs m >= 2 and 1 <= d <= m(Q-1)");
    const auto k = static_cast<int>(prm_dim(Q, m, d));
    if (r < 1 || r > k) throw std::out_of_range("r outside 1..k");
    const int q1 = static_cast<int>(Q - 1);
    const auto kR1 = static_cast<int>(rm_dim(Q, m, d - 1));
    const auto kR = static_cast<int>(rm_dim(Q, m, d));
    const auto kP = static_cast<int>(prm_dim(Q, m - 1, d));
    const auto kP2 = static_cast<int>(prm_dim(Q, m - 1, d - q1));

    GhwBoundTrace t;
    t.Q = Q;
    t.m = m;
    t.d = d;
    t.r = r;
    bool first = true;
    for (int a = std::max(r - kR1, 0); a <= std::min(kP, r); ++a) {
        const auto pa = inner(Q, m - 1, d, a);
        for (int g = std::max(r - kR, 0); g <= std::min(kP2, a); ++g) {
            const auto pg = inner(Q, m - 1, d - q1, g);
            t.inner_exact = t.inner_exact && pa.first == pa.second && pg.first == pg.second;
            const std::uint64_t v = std::max(ghw_rm(Q, m, d, static_cast<std::uint64_t>(r - g)),
                                             ghw_rm(Q, m, d - 1, static_cast<std::uint64_t>(r - a))) +
                                    std::max(pa.first, pg.first);
            t.Y.emplace_back(a, g);
            t.B[{a, g}] = v;
            if (first || v < t.value) {
                t.value = v;
                t.argmin = {a, g};
                first = false;
            }
        }
    }
    if (first) throw std::logic_error("empty index set in the recursive lower bound");
    return t;
}

std::uint64_t GhwEngine::upper(std::uint64_t Q, int m, int d, int r) {
    return bounds(Q, m, d)->at(r).upper;
}

M2Trace GhwEngine::m2_lower(std::uint64_t Q, int d, int r) {
    const int q1 = static_cast<int>(Q - 1);
    if (Q < 2 || d < 1 || d > 2 * q1) throw std::invalid_argument("m2_lower: d outside 1..2(Q-1)");
    const auto k = static_cast<int>(prm_dim(Q, 2, d));
    if (r < 1 || r > k) throw std::out_of_range("r outside 1..k");
    const auto kR1 = static_cast<int>(rm_dim(Q, 2, d - 1));
    const auto kR = static_cast<int>(rm_dim(Q, 2, d));
    const int iQ = static_cast<int>(Q);
    auto rm1 = [&](int j) { return j > kR1 ? kInf : ghw_rm(Q, 2, d - 1, static_cast<std::uint64_t>(j)); };
    auto rm0 = [&](int j) { return ghw_rm(Q, 2, d, static_cast<std::uint64_t>(j)); };
    auto smallest_alpha = [&](int from, std::uint64_t bound) {
        for (int a = from; a <= r; ++a)
            if (rm1(r - a) <= bound) return a;
        return r;
    };

    M2Trace t;
    t.small_degree = d < iQ;
    std::uint64_t h = kInf;
    if (t.small_degree) {
        t.E = {0};
        t.lambda_star = std::min(d + 1, r);
        const int a0 = smallest_alpha(0, rm0(r));
        const int mu0 = std::max(a0, r - kR1);
        const std::uint64_t v = a0 <= t.lambda_star
                                    ? rm0(r) + static_cast<std::uint64_t>(iQ - d + mu0)
                                    : sat_add(rm1(r - t.lambda_star), static_cast<std::uint64_t>(iQ - d + t.lambda_star));
        t.alpha[0] = a0;
        t.mu[0] = mu0;
        t.H[0] = v;
        h = v;
    } else {
        t.lambda_star = std::min(iQ + 1, r);
        for (int g = std::max(r - kR, 0); g <= std::min(d - iQ + 2, r); ++g) t.E.push_back(g);
        for (int g : t.E) {
            const int ag = smallest_alpha(g, rm0(r - g));
            const int mg = std::max(ag, r - kR1);
            std::uint64_t v;
            if (g == 0) {
                v = ag <= t.lambda_star ? rm0(r) + static_cast<std::uint64_t>(mg)
                                        : sat_add(rm1(r - t.lambda_star), static_cast<std::uint64_t>(t.lambda_star));
            } else {
                const int shift = 2 * iQ - d + g - 1;
                v = ag <= t.lambda_star
                        ? rm0(r - g) + static_cast<std::uint64_t>(std::max(mg, shift))
                        : sat_add(rm1(r - t.lambda_star), static_cast<std::uint64_t>(std::max(t.lambda_star, shift)));
            }
            t.alpha[g] = ag;
            t.mu[g] = mg;
            t.H[g] = v;
            h = std::min(h, v);
        }
    }
    if (r <= kR1) {
        t.B00 = ghw_rm(Q, 2, d - 1, static_cast<std::uint64_t>(r));
        h = std::min(h, *t.B00);
    }
    t.value = h;
    return t;
}

GhwEngine::ReportPtr GhwEngine::compute_bounds(std::uint64_t Q, int m, int d) {
    auto rep = std::make_shared<GhwReport>();
    rep->Q = Q;
    rep->m = m;
    rep->d = d;
    rep->n = projective_count(Q, m);
    rep->k = d <= 0 ? 0 : prm_dim(Q, m, d);
    const auto k = static_cast<int>(rep->k);
    if (auto base = base_hierarchy(Q, m, d)) {
        const char* why = d > top_degree(Q, m) || m == 0 ? "full space" : "projective Reed-Solomon";
        for (int r = 1; r <= k; ++r)
            rep->records.push_back({r, (*base)[static_cast<std::size_t>(r)].first,
                                    (*base)[static_cast<std::size_t>(r)].second, {why}});
        return rep;
    }
    const std::uint64_t n = rep->n;
    const auto kR1 = static_cast<int>(rm_dim(Q, m, d - 1));
    const auto kP = static_cast<int>(prm_dim(Q, m - 1, d));
    const std::uint64_t d1 = first_weight(Q, m, d - 1);
    rep->records.push_back({1, d1, d1, {"minimum distance"}});
    for (int r = 2; r <= k; ++r) {
        GhwRecord rec;
        rec.r = r;
        const auto t = lower(Q, m, d, r);
        rec.lower = t.value;
        rec.provenance.push_back("lower: recursive bound at (" + std::to_string(t.argmin.first) + "," +
                                 std::to_string(t.argmin.second) + ")");
        rec.upper = n - rep->k + static_cast<std::uint64_t>(r);
        std::string up = "Singleton";
        if (r <= kR1) {
            const auto v = ghw_rm(Q, m, d - 1, static_cast<std::uint64_t>(r));
            if (v < rec.upper) {
                rec.upper = v;
                up = "RM_{d-1}";
            }
        }
        if (r <= kP) {
            const auto v = Q * inner(Q, m - 1, d, r).second;
            if (v < rec.upper) {
                rec.upper = v;
                up = "Q x PRM_d(m-1)";
            }
        }
        rec.provenance.push_back("upper: " + up);
        rep->records.push_back(std::move(rec));
    }
    Hier h = to_hier(*rep);
    propagate(h);
    for (int r = 1; r <= k; ++r) {
        auto& rec = rep->records[static_cast<std::size_t>(r - 1)];
        const auto& iv = h[static_cast<std::size_t>(r)];
        if (iv.first != rec.lower) rec.provenance.push_back("lower: monotonicity");
        if (iv.second != rec.upper) rec.provenance.push_back("upper: monotonicity");
        rec.lower = iv.first;
        rec.upper = iv.second;
        if (rec.lower > rec.upper) throw std::logic_error("inconsistent GHW bounds for " + std::to_string(r));
    }
    return rep;
}

GhwEngine::ReportPtr GhwEngine::compute_refined(std::uint64_t Q, int m, int d) {
    auto base = bounds(Q, m, d);
    const int q1 = static_cast<int>(Q - 1);
    if (d <= 0 || d > top_degree(Q, m) || m <= 1 || d % q1 == 0) {
        auto rep = std::make_shared<GhwReport>(*base);
        rep->refined = true;
        return rep;
    }
    const int dd = top_degree(Q, m) - d;
    Hier a = to_hier(*base);
    Hier b = to_hier(*bounds(Q, m, dd));
    for (int iter = 0; iter < 100; ++iter) {
        const Hier pa = a;
        const Hier pb = b;
        if (!wei_refine(base->n, a, b)) throw std::logic_error("GHW bounds inconsistent with duality");
        propagate(a);
        propagate(b);
        if (a == pa && b == pb) break;
    }
    auto rep = std::make_shared<GhwReport>(*base);
    rep->refined = true;
    for (std::size_t r = 1; r < a.size(); ++r) {
        auto& rec = rep->records[r - 1];
        if (a[r].first > a[r].second) throw std::logic_error("refined interval is empty");
        if (a[r].first != rec.lower) rec.provenance.push_back("lower: duality");
        if (a[r].second != rec.upper) rec.provenance.push_back("upper: duality");
        rec.lower = a[r].first;
        rec.upper = a[r].second;
    }
    return rep;
}

DualDistance GhwEngine::dual_min_distance_deq0(std::uint64_t Q, int m, int d) {
    if (m < 1 || d < 1 || d > top_degree(Q, m) || d % static_cast<int>(Q - 1) != 0)
        throw std::invalid_argument("dual distance: d must be a positive multiple of Q-1 up to m(Q-1)");
    auto rep = refined(Q, m, d);
    const std::uint64_t n = rep->n;
    DualDistance out;
    out.upper = std::min<std::uint64_t>(n, rep->k + 1);
    out.r_star = rep->r_star();
    if (!out.r_star) {
        out.lower = 2;
        return out;
    }
    const int rs = *out.r_star;
    const std::uint64_t top = rep->at(rs).lower;
    out.lower = n + 2 - top;
    if (rs == 1 || rep->at(rs - 1).upper + 1 < top) out.upper = out.lower;
    out.upper = std::max(out.upper, out.lower);
    return out;
}

GhwEngine& default_engine() {
    static GhwEngine engine;
    return engine;
}

// ------------------------------------------------------------- subfield subcodes

ProvidedWeight OracleProvider::weight(SscRole, const SscCode& code, int r) {
    if (r == 0) return {0, 0};
    const auto res = ghw_exact(code.code, r, opt_);
    if (!res.exact()) return {};
    return {res.value, res.value};
}

ProvidedWeight SupercodeProvider::weight(SscRole, const SscCode& code, int r) {
    if (r == 0) return {0, 0};
    if (!code.parent.spec) return {};
    const auto& sp = *code.parent.spec;
    const auto Q = static_cast<std::uint64_t>(sp.q);
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    if (sp.family == Family::RM) {
        lo = hi = ghw_rm(Q, sp.m, sp.d, static_cast<std::uint64_t>(r));
    } else if (sp.family == Family::PRM) {
        const auto& rec = engine_.refined(Q, sp.m, sp.d)->at(r);
        lo = rec.lower;
        hi = rec.upper;
    } else {
        return {};
    }
    if (code.k() != code.parent.k()) hi = code.n() - code.k() + static_cast<std::uint64_t>(r);
    return {lo, hi};
}

SscGhwContext SscGhwContext::make(int q, int s, int m, int lambda) {
    if (m < 2) throw std::invalid_argument("SSC bounds need m >= 2");
    if (lambda < 1 || lambda > m * (q - 1)) throw std::invalid_argument("lambda outside 1..m(q-1)");
    const int d = d_lambda(q, s, lambda);
    const int q1 = static_cast<int>(ipow(static_cast<std::uint64_t>(q), s) - 1);
    return SscGhwContext{q,
                         s,
                         m,
                         lambda,
                         d,
                         ssc_prm(q, s, m, d),
                         ssc_rm(q, s, m, d),
                         ssc_rm(q, s, m, d - 1),
                         ssc_prm(q, s, m - 1, d),
                         ssc_prm(q, s, m - 1, d - q1)};
}

SscGhwBound ghw_ssc_lower(const SscGhwContext& ctx, int r, SscGhwProvider& provider) {
    const auto k = static_cast<int>(ctx.whole.k());
    if (r < 1 || r > k) throw std::out_of_range("r outside 1..k");
    const auto kR1 = static_cast<int>(ctx.rm_dm1.k());
    const auto kR = static_cast<int>(ctx.rm_d.k());
    const auto kP = static_cast<int>(ctx.prm_lower.k());
    const auto kP2 = static_cast<int>(ctx.prm_lower_shift.k());
    SscGhwBound out;
    auto low = [&](SscRole role, const SscCode& code, int j) -> std::uint64_t {
        if (j == 0) return 0;
        const auto w = provider.weight(role, code, j);
        if (w.lower) return *w.lower;
        out.partial = true;
        return static_cast<std::uint64_t>(j);
    };
    bool first = true;
    for (int a = std::max(r - kR1, 0); a <= std::min(kP, r); ++a) {
        const auto pa = low(SscRole::PrmLower, ctx.prm_lower, a);
        const auto ra = low(SscRole::RmDm1, ctx.rm_dm1, r - a);
        for (int g = std::max(r - kR, 0); g <= std::min(kP2, a); ++g) {
            const auto v = std::max(low(SscRole::RmD, ctx.rm_d, r - g), ra) +
                           std::max(pa, low(SscRole::PrmLowerShift, ctx.prm_lower_shift, g));
            out.Y.emplace_back(a, g);
            out.B[{a, g}] = v;
            if (first || v < out.value) out.value = v;
            first = false;
        }
    }
    if (first) throw std::logic_error("empty index set in the SSC lower bound");
    return out;
}

SscGhwBound ghw_ssc_upper(const SscGhwContext& ctx, int r, SscGhwProvider& provider) {
    const auto k = ctx.whole.k();
    if (r < 1 || static_cast<std::size_t>(r) > k) throw std::out_of_range("r outside 1..k");
    SscGhwBound out;
    out.value = ctx.whole.n() - k + static_cast<std::uint64_t>(r);
    const auto Q = ipow(static_cast<std::uint64_t>(ctx.q), ctx.s);
    if (static_cast<std::size_t>(r) <= ctx.rm_dm1.k()) {
        const auto w = provider.weight(SscRole::RmDm1, ctx.rm_dm1, r);
        if (w.upper)
            out.value = std::min(out.value, *w.upper);
        else
            out.partial = true;
    }
    if (static_cast<std::size_t>(r) <= ctx.prm_lower.k()) {
        const auto w = provider.weight(SscRole::PrmLower, ctx.prm_lower, r);
        if (w.upper)
            out.value = std::min(out.value, Q * *w.upper);
        else
            out.partial = true;
    }
    return out;
}

namespace {

std::uint64_t field_order(int q, int s) {
    if (q < 2 || s < 1) throw std::invalid_argument("need q >= 2 and s >= 1");
    return ipow(static_cast<std::uint64_t>(q), s);
}

}  // namespace

std::uint64_t ghw_rm(int q, int s, int m, int d, std::uint64_t r) { return ghw_rm(field_order(q, s), m, d, r); }

std::uint64_t ghw_prs(int q, int s, int d, std::uint64_t r) { return ghw_prs(field_order(q, s), d, r); }

GhwBoundTrace ghw_prm_lower(int q, int s, int m, int d, int r) {
    const auto Q = field_order(q, s);
    if (r != 1) return default_engine().lower(Q, m, d, r);
    GhwBoundTrace t;
    t.Q = Q;
    t.m = m;
    t.d = d;
    t.r = 1;
    t.value = default_engine().bounds(Q, m, d)->at(1).lower;
    return t;
}

std::uint64_t ghw_prm_upper(int q, int s, int m, int d, int r) { return default_engine().upper(field_order(q, s), m, d, r); }

M2Trace ghw_prm_m2_lower(int q, int s, int d, int r) { return default_engine().m2_lower(field_order(q, s), d, r); }

GhwEngine::ReportPtr refine_hierarchy(int q, int s, int m, int d) { return default_engine().refined(field_order(q, s), m, d); }

DualDistance dual_min_distance_deq0(int q, int s, int m, int d) {
    return default_engine().dual_min_distance_deq0(field_order(q, s), m, d);
}

SscGhwBound ghw_ssc_lower(int q, int s, int m, int lambda, int r, SscGhwProvider& provider) {
    return ghw_ssc_lower(SscGhwContext::make(q, s, m, lambda), r, provider);
}

SscGhwBound ghw_ssc_upper(int q, int s, int m, int lambda, int r, SscGhwProvider& provider) {
    return ghw_ssc_upper(SscGhwContext::make(q, s, m, lambda), r, provider);
}

}  // namespace prmkit
