#include "prmkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace prmkit {

std::uint64_t gaussian_binomial(int k, int r, std::uint64_t q) {
    if (r < 0 || r > k) return 0;
    if (r == 0 || r == k) return 1;
    // [k r]_q = prod_{i<r} (q^(k-i) - 1) / (q^(i+1) - 1); long double keeps the saturation test honest.
    long double v = 1;
    for (int i = 0; i < r; ++i) {
        v *= (std::pow(static_cast<long double>(q), k - i) - 1) / (std::pow(static_cast<long double>(q), i + 1) - 1);
        if (v > 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(std::llround(v));
}

double binomial_real(int n, int k) {
    if (k < 0 || k > n) return 0;
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PRMKIT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------- SubspaceIter

SubspaceIter::SubspaceIter(FieldPtr field, int k, int r) : field_(std::move(field)), k_(k), r_(r) {
    if (r < 0 || r > k) throw std::invalid_argument("subspace rank out of range");
    current_ = Matrix(field_, static_cast<std::size_t>(r), static_cast<std::size_t>(k));
}

void SubspaceIter::load() {
    free_.clear();
    std::vector<bool> is_pivot(static_cast<std::size_t>(k_), false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < r_; ++i)
        for (int j = pivots_[i] + 1; j < k_; ++j)
            if (!is_pivot[j]) free_.emplace_back(i, j);
    values_.assign(free_.size(), 0);
    current_ = Matrix(field_, static_cast<std::size_t>(r_), static_cast<std::size_t>(k_));
    for (int i = 0; i < r_; ++i) current_.at(i, pivots_[i]) = 1;
}

bool SubspaceIter::next_pivots() {
    int i = r_ - 1;
    while (i >= 0 && pivots_[i] == k_ - r_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    return true;
}

bool SubspaceIter::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        pivots_.resize(static_cast<std::size_t>(r_));
        for (int i = 0; i < r_; ++i) pivots_[i] = i;
        load();
        return true;
    }
    const Elem top = static_cast<Elem>(field_->order() - 1);
    for (std::size_t t = 0; t < values_.size(); ++t) {
        auto [i, j] = free_[t];
        if (values_[t] < top) {
            current_.at(i, j) = ++values_[t];
            return true;
        }
        values_[t] = 0;
        current_.at(i, j) = 0;
    }
    if (r_ == 0 || !next_pivots()) {
        done_ = true;
        return false;
    }
    load();
    return true;
}

// ---------------------------------------------------------- SupportAccumulator

void SupportAccumulator::add(std::span<const Elem> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
    recount();
}

void SupportAccumulator::merge(const SupportAccumulator& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    recount();
}

void SupportAccumulator::clear() {
    std::fill(words_.begin(), words_.end(), 0);
    weight_ = 0;
}

void SupportAccumulator::recount() {
    weight_ = 0;
    for (auto w : words_) weight_ += static_cast<std::size_t>(std::popcount(w));
}

namespace {

using Bits = std::vector<std::uint64_t>;

void require_small_field(const Field& f) {
    if (f.order() > 256) throw std::invalid_argument("oracle supports fields of order <= 256");
}

// Addition table for byte-per-symbol codewords.
std::vector<std::uint8_t> add_table(const Field& f) {
    const std::uint32_t Q = f.order();
    std::vector<std::uint8_t> t(static_cast<std::size_t>(Q) * Q);
    for (std::uint32_t a = 0; a < Q; ++a)
        for (std::uint32_t b = 0; b < Q; ++b) t[a * Q + b] = static_cast<std::uint8_t>(f.add(static_cast<Elem>(a), static_cast<Elem>(b)));
    return t;
}

// F_p-basis {p^t} of GF(p^e) in the integer encoding.
std::vector<Elem> prime_basis(const Field& f) {
    std::vector<Elem> b;
    Elem v = 1;
    for (int t = 0; t < f.degree(); ++t, v = static_cast<Elem>(v * f.characteristic())) b.push_back(v);
    return b;
}

// Position of the digit a modular p-ary Gray code changes when the counter goes from step-1 to step.
inline std::size_t gray_digit(std::uint64_t step, std::uint64_t p) {
    std::size_t j = 0;
    while (step % p == 0) {
        step /= p;
        ++j;
    }
    return j;
}

Bits pack_bits(std::span<const Elem> v) {
    Bits b((v.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
}

std::size_t popcount(const Bits& b) {
    std::size_t w = 0;
    for (auto x : b) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

// Walks every codeword of the form row_lead + sum_{j > lead} x_j row_j and reports weights.
template <typename Visit>
void walk_projective(const LinearCode& code, Visit&& visit) {
    const Field& f = *code.field;
    const Matrix& g = code.generator;
    const std::size_t n = g.cols(), k = g.rows();
    const std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
    auto basis = prime_basis(f);
    if (f.order() == 2) {
        std::vector<Bits> rows;
        for (std::size_t i = 0; i < k; ++i) rows.push_back(pack_bits(g.row(i)));
        for (std::size_t lead = 0; lead < k; ++lead) {
            Bits cur = rows[lead];
            if (!visit(popcount(cur))) return;
            const std::size_t L = k - lead - 1;
            const std::uint64_t total = std::uint64_t{1} << L;
            for (std::uint64_t step = 1; step < total; ++step) {
                const Bits& add = rows[lead + 1 + static_cast<std::size_t>(std::countr_zero(step))];
                std::size_t w = 0;
                for (std::size_t t = 0; t < cur.size(); ++t) {
                    cur[t] ^= add[t];
                    w += static_cast<std::size_t>(std::popcount(cur[t]));
                }
                if (!visit(w)) return;
            }
        }
        return;
    }
    const std::uint32_t Q = f.order();
    auto tab = add_table(f);
    std::vector<std::vector<std::uint8_t>> vecs;  // beta_t * row_j, j ascending
    for (std::size_t j = 0; j < k; ++j)
        for (Elem b : basis) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t c = 0; c < n; ++c) v[c] = static_cast<std::uint8_t>(f.mul(b, g.at(j, c)));
            vecs.push_back(std::move(v));
        }
    const std::size_t e = basis.size();
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<std::uint8_t> cur(n);
        std::size_t w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            cur[c] = static_cast<std::uint8_t>(g.at(lead, c));
            w += cur[c] != 0;
        }
        if (!visit(w)) return;
        const std::size_t L = (k - lead - 1) * e;
        std::uint64_t total = 1;
        for (std::size_t t = 0; t < L; ++t) total *= p;
        for (std::uint64_t step = 1; step < total; ++step) {
            const auto& add = vecs[(lead + 1) * e + gray_digit(step, p)];
            for (std::size_t c = 0; c < n; ++c) {
                if (!add[c]) continue;
                std::uint8_t old = cur[c];
                std::uint8_t nv = tab[old * Q + add[c]];
                cur[c] = nv;
                w += (nv != 0) - (old != 0);
            }
            if (!visit(w)) return;
        }
    }
}

// Incremental echelon basis over a field, used by the column-subset searches.
struct Echelon {
    const Field* f;
    std::vector<std::vector<Elem>> rows;
    std::vector<std::size_t> pivots;

    // Reduces v in place; true iff the residual is zero.
    bool reduce(std::vector<Elem>& v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Elem c = v[pivots[i]];
            if (!c) continue;
            Elem nc = f->neg(c);
            const auto& r = rows[i];
            for (std::size_t t = 0; t < v.size(); ++t)
                if (r[t]) v[t] = f->add(v[t], f->mul(nc, r[t]));
        }
        return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
    }
    // v must already be reduced and nonzero.
    void push(std::vector<Elem> v) {
        std::size_t piv = 0;
        while (v[piv] == 0) ++piv;
        Elem inv = f->inv(v[piv]);
        for (auto& x : v) x = f->mul(x, inv);
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }
    void pop() {
        rows.pop_back();
        pivots.pop_back();
    }
};

std::vector<std::vector<Elem>> matrix_columns(const Matrix& m) {
    std::vector<std::vector<Elem>> cols(m.cols(), std::vector<Elem>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cols[j][i] = m.at(i, j);
    return cols;
}

// Smallest w such that some w columns are dependent; nullopt if the budget runs out.
std::optional<std::uint64_t> smallest_dependency(const Matrix& h, std::uint64_t budget, double& spent) {
    const std::size_t n = h.cols();
    auto cols = matrix_columns(h);
    for (std::size_t j = 0; j < n; ++j)
        if (std::all_of(cols[j].begin(), cols[j].end(), [](Elem x) { return x == 0; })) return 1;
    std::uint64_t visited = 0;
    Echelon ech{h.field().get(), {}, {}};
    for (std::size_t w = 2; w <= h.rows() + 1; ++w) {
        bool found = false, exhausted = false;
        // DFS over increasing column subsets of size w whose proper prefixes are independent.
        auto dfs = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
            for (std::size_t j = start; j + (w - depth) <= n && !found && !exhausted; ++j) {
                if (++visited > budget) {
                    exhausted = true;
                    return;
                }
                auto v = cols[j];
                bool zero = ech.reduce(v);
                if (depth + 1 == w) {
                    if (zero) found = true;
                    continue;
                }
                if (zero) continue;  // cannot happen after shorter lengths were ruled out
                ech.push(std::move(v));
                self(self, j + 1, depth + 1);
                ech.pop();
            }
        };
        dfs(dfs, 0, 0);
        spent = static_cast<double>(visited);
        if (exhausted) return std::nullopt;
        if (found) return w;
    }
    return h.rows() + 1;
}

void atomic_min(std::atomic<std::size_t>& a, std::size_t v) {
    std::size_t cur = a.load();
    while (v < cur && !a.compare_exchange_weak(cur, v)) {
    }
}

template <typename Fn>
void run_workers(unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0u, 1u);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { fn(w, workers); });
    for (auto& t : pool) t.join();
}

// Branch-and-bound over canonical r x k message matrices, last row first.
std::size_t ghw_by_subspaces(const LinearCode& code, int r, unsigned workers) {
    const Field& f = *code.field;
    const Matrix& g = code.generator;
    const std::size_t n = g.cols(), k = g.rows();
    const std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
    auto basis = prime_basis(f);
    const std::size_t e = basis.size();
    auto tab = add_table(f);
    const std::uint32_t Q = f.order();
    std::vector<std::vector<std::uint8_t>> vecs;  // index j*e + t
    for (std::size_t j = 0; j < k; ++j)
        for (Elem b : basis) {
            std::vector<std::uint8_t> v(n);
            for (std::size_t c = 0; c < n; ++c) v[c] = static_cast<std::uint8_t>(f.mul(b, g.at(j, c)));
            vecs.push_back(std::move(v));
        }
    std::atomic<std::size_t> best(n - k + static_cast<std::size_t>(r) + 1);

    run_workers(workers, [&](unsigned wid, unsigned nworkers) {
        std::vector<bool> is_pivot(k, false);
        std::uint64_t top_counter = 0;
        // level = number of rows already fixed; supp = their union support
        auto dfs = [&](auto&& self, int level, std::size_t max_pivot, const Bits& supp) -> void {
            const int remaining = r - level;
            for (std::size_t piv = max_pivot; piv-- > static_cast<std::size_t>(remaining - 1);) {
                std::vector<std::size_t> frees;
                for (std::size_t j = piv + 1; j < k; ++j)
                    if (!is_pivot[j]) frees.push_back(j);
                std::vector<std::uint8_t> cur(n);
                for (std::size_t c = 0; c < n; ++c) cur[c] = static_cast<std::uint8_t>(g.at(piv, c));
                std::uint64_t total = 1;
                for (std::size_t t = 0; t < frees.size() * e; ++t) total *= p;
                is_pivot[piv] = true;
                for (std::uint64_t step = 0; step < total; ++step) {
                    if (step > 0) {
                        std::size_t dig = gray_digit(step, p);
                        const auto& add = vecs[frees[dig / e] * e + dig % e];
                        for (std::size_t c = 0; c < n; ++c)
                            if (add[c]) cur[c] = tab[cur[c] * Q + add[c]];
                    }
                    if (level == 0 && (top_counter++ % nworkers) != wid) continue;
                    Bits u = supp;
                    for (std::size_t c = 0; c < n; ++c)
                        if (cur[c]) u[c / 64] |= std::uint64_t{1} << (c % 64);
                    std::size_t wgt = popcount(u);
                    if (wgt >= best.load(std::memory_order_relaxed)) continue;
                    if (remaining == 1) atomic_min(best, wgt);
                    else self(self, level + 1, piv, u);
                }
                is_pivot[piv] = false;
            }
        };
        dfs(dfs, 0, k, Bits((n + 63) / 64, 0));
    });
    return best.load();
}

// d_r = n - max closure size over independent (k-r)-subsets of generator columns.
std::size_t ghw_by_flats(const LinearCode& code, int r, unsigned workers) {
    const Field& f = *code.field;
    const Matrix& g = code.generator;
    const std::size_t n = g.cols(), k = g.rows();
    const std::size_t t = k - static_cast<std::size_t>(r);
    auto cols = matrix_columns(g);
    std::size_t zero_cols = 0;
    for (const auto& c : cols) zero_cols += std::all_of(c.begin(), c.end(), [](Elem x) { return x == 0; });
    if (t == 0) return n - zero_cols;

    std::atomic<std::size_t> best_closure(0);
    run_workers(workers, [&](unsigned wid, unsigned nworkers) {
        // residuals[depth][j]: column j reduced against the first `depth` chosen columns
        std::vector<std::vector<std::vector<Elem>>> res(t + 1);
        res[0] = cols;
        std::vector<std::size_t> zero_count(t + 1, zero_cols);
        auto dfs = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
            for (std::size_t j = start; j + (t - depth) <= n; ++j) {
                if (depth == 0 && j % nworkers != wid) continue;
                const auto& pivot_vec = res[depth][j];
                std::size_t piv = 0;
                while (piv < k && pivot_vec[piv] == 0) ++piv;
                if (piv == k) continue;  // already in the closure
                Elem inv = f.inv(pivot_vec[piv]);
                std::vector<Elem> b(k);
                for (std::size_t x = 0; x < k; ++x) b[x] = f.mul(pivot_vec[x], inv);
                auto& next = res[depth + 1];
                next = res[depth];
                std::size_t zeros = 0;
                for (auto& v : next) {
                    Elem c = v[piv];
                    if (c) {
                        Elem nc = f.neg(c);
                        for (std::size_t x = 0; x < k; ++x)
                            if (b[x]) v[x] = f.add(v[x], f.mul(nc, b[x]));
                    }
                    zeros += std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
                }
                if (depth + 1 == t) {
                    std::size_t cur = best_closure.load();
                    while (zeros > cur && !best_closure.compare_exchange_weak(cur, zeros)) {
                    }
                } else {
                    self(self, depth + 1, j + 1);
                }
            }
        };
        dfs(dfs, 0, 0);
    });
    return n - best_closure.load();
}

}  // namespace

OracleResult min_distance_exact(const LinearCode& code, const MinDistanceOptions& opt) {
    require_small_field(*code.field);
    OracleResult res;
    const std::size_t k = code.k(), n = code.n();
    if (k == 0) {
        res.status = OracleStatus::Exact;
        res.value = 0;
        res.method = "zero-code";
        return res;
    }
    const double words = std::pow(static_cast<double>(code.field->order()), static_cast<double>(k));
    const bool enum_ok = words <= static_cast<double>(opt.cap);
    const bool use_enum = opt.method == DistanceMethod::Enumerate ||
                          (opt.method == DistanceMethod::Auto && enum_ok);
    if (use_enum) {
        res.cost = words;
        if (!enum_ok) {
            res.method = "enumerate";
            return res;
        }
        std::size_t best = n + 1;
        walk_projective(code, [&](std::size_t w) {
            if (w < best) best = w;
            return best > 1;
        });
        res.status = OracleStatus::Exact;
        res.value = best;
        res.method = "enumerate";
        return res;
    }
    res.method = "dependent-columns";
    if (k == n) {
        res.status = OracleStatus::Exact;
        res.value = 1;
        return res;
    }
    Matrix h = kernel(code.generator);
    auto d = smallest_dependency(h, opt.column_budget, res.cost);
    if (d) {
        res.status = OracleStatus::Exact;
        res.value = *d;
    }
    return res;
}

OracleResult ghw_exact(const LinearCode& code, int r, const GhwOracleOptions& opt) {
    require_small_field(*code.field);
    const int k = static_cast<int>(code.k());
    if (r < 0 || r > k) throw std::invalid_argument("GHW rank out of range");
    OracleResult res;
    if (r == 0) {
        res.status = OracleStatus::Exact;
        res.method = "trivial";
        return res;
    }
    const double subspaces = static_cast<double>(gaussian_binomial(k, r, code.field->order()));
    const double flats = binomial_real(static_cast<int>(code.n()), k - r);
    GhwStrategy s = opt.strategy;
    if (s == GhwStrategy::Auto) s = subspaces <= flats ? GhwStrategy::Subspaces : GhwStrategy::Flats;
    res.cost = s == GhwStrategy::Subspaces ? subspaces : flats;
    res.method = s == GhwStrategy::Subspaces ? "subspaces" : "flats";
    if (res.cost > static_cast<double>(opt.cap)) return res;
    const unsigned workers = worker_count(opt.threads);
    res.value = s == GhwStrategy::Subspaces ? ghw_by_subspaces(code, r, workers) : ghw_by_flats(code, r, workers);
    res.status = OracleStatus::Exact;
    return res;
}

HierarchyResult weight_hierarchy_exact(const LinearCode& code, const GhwOracleOptions& opt,
                                       const MinDistanceOptions& dopt) {
    HierarchyResult out;
    const int k = static_cast<int>(code.k());
    std::optional<std::uint64_t> prev;
    for (int r = 1; r <= k; ++r) {
        OracleResult res = ghw_exact(code, r, opt);
        if (!res.exact() && r == 1) res = min_distance_exact(code, dopt);
        if (res.exact()) {
            out.values.emplace_back(res.value);
            if (prev && *prev >= res.value) out.strictly_increasing = false;
            prev = res.value;
        } else {
            out.values.emplace_back(std::nullopt);
            out.complete = false;
            prev.reset();
        }
    }
    return out;
}

}  // namespace prmkit
