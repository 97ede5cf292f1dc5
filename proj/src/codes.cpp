#include "prmkit/codes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prmkit {

std::string to_string(Family f) {
    switch (f) {
        case Family::RM: return "rm";
        case Family::PRM: return "prm";
        case Family::SscRM: return "ssc-rm";
        case Family::SscPRM: return "ssc-prm";
        case Family::DualRM: return "dual-rm";
        case Family::DualPRM: return "dual-prm";
        case Family::DualSscRM: return "dual-ssc-rm";
        case Family::DualSscPRM: return "dual-ssc-prm";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    static const std::map<std::string, Family> names = {
        {"rm", Family::RM},           {"prm", Family::PRM},           {"ssc-rm", Family::SscRM},
        {"ssc-prm", Family::SscPRM},  {"dual-rm", Family::DualRM},    {"dual-prm", Family::DualPRM},
        {"dual-ssc-rm", Family::DualSscRM}, {"dual-ssc-prm", Family::DualSscPRM}};
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown code family: " + s);
    return it->second;
}

std::uint64_t CodeSpec::field_order() const { return ipow(static_cast<std::uint64_t>(q), s); }

std::string CodeSpec::describe() const {
    std::string out = to_string(family) + "(q=" + std::to_string(q) + ",s=" + std::to_string(s) +
                      ",m=" + std::to_string(m) + ",d=" + std::to_string(d);
    if (lambda) out += ",lambda=" + std::to_string(*lambda);
    return out + ")";
}

LinearCode make_code(Matrix generator, std::optional<CodeSpec> spec) {
    FieldPtr f = generator.field();
    return LinearCode{std::move(spec), std::move(f), rref(generator).reduced};
}

std::size_t MonomialBasis::size() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.size();
    return n;
}

std::vector<Exponents> MonomialBasis::flatten() const {
    std::vector<Exponents> out;
    for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
    return out;
}

namespace {

// All tuples in [0, bound]^len with coordinate sum <= max_sum, lexicographic order.
void bounded_tuples(int len, int bound, int max_sum, Exponents& cur, std::vector<Exponents>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int a = 0; a <= bound && a <= max_sum; ++a) {
        cur.push_back(a);
        bounded_tuples(len, bound, max_sum - a, cur, out);
        cur.pop_back();
    }
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

MonomialBasis prm_monomial_basis(std::uint64_t Q, int m, int d) {
    MonomialBasis b;
    b.m = m;
    b.d = d;
    b.classes.resize(static_cast<std::size_t>(m) + 1);
    if (d <= 0) return b;
    const int top = static_cast<int>(Q) - 1;
    for (int i = 0; i <= m; ++i) {
        std::vector<Exponents> tails;
        Exponents cur;
        bounded_tuples(m - i, top, d - 1, cur, tails);
        auto& cls = b.classes[i];
        for (const auto& t : tails) {
            int rest = 0;
            for (int a : t) rest += a;
            Exponents alpha(static_cast<std::size_t>(m) + 1, 0);
            alpha[i] = d - rest;
            std::copy(t.begin(), t.end(), alpha.begin() + i + 1);
            cls.push_back(std::move(alpha));
        }
        std::sort(cls.begin(), cls.end());
    }
    return b;
}

std::vector<Exponents> rm_monomials(std::uint64_t Q, int m, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents cur;
    bounded_tuples(m, static_cast<int>(Q) - 1, d, cur, out);
    return out;
}

std::uint64_t prm_dim(std::uint64_t Q, int m, int d) {
    if (d <= 0) return 0;
    if (m == 0) return 1;
    const std::int64_t q = static_cast<std::int64_t>(Q);
    if (d > m * (q - 1)) return projective_count(Q, m);
    std::int64_t k = 0;
    for (std::int64_t t = 1; t <= d; ++t) {
        if ((d - t) % (q - 1) != 0) continue;
        for (int j = 0; j <= m + 1; ++j) {
            std::int64_t term = binom(m + 1, j) * binom(t - j * q + m, t - j * q);
            k += (j % 2 == 0) ? term : -term;
        }
    }
    return static_cast<std::uint64_t>(k);
}

std::uint64_t rm_dim(std::uint64_t Q, int m, int d) {
    if (d < 0) return 0;
    const std::int64_t q = static_cast<std::int64_t>(Q);
    if (d >= m * (q - 1)) return ipow(Q, m);
    std::int64_t k = 0;
    for (std::int64_t t = 0; t <= d; ++t)
        for (int j = 0; j <= m; ++j) {
            std::int64_t term = binom(m, j) * binom(t - j * q + m - 1, t - j * q);
            k += (j % 2 == 0) ? term : -term;
        }
    return static_cast<std::uint64_t>(k);
}

std::uint64_t rm_dim_m2(std::uint64_t Q, int d) {
    const std::int64_t q = static_cast<std::int64_t>(Q);
    if (d < q) return static_cast<std::uint64_t>(binom(d + 2, 2));
    return static_cast<std::uint64_t>(binom(d + 2, 2) - 2 * binom(d - q + 2, 2));
}

namespace {

// (Q - mu) * Q^(m - nu - 1) with x = nu (Q-1) + mu.
std::uint64_t distance_formula(std::uint64_t Q, int m, int x) {
    const int nu = x / static_cast<int>(Q - 1);
    const std::uint64_t mu = static_cast<std::uint64_t>(x % static_cast<int>(Q - 1));
    if (m - nu - 1 < 0) return 1;
    return (Q - mu) * ipow(Q, m - nu - 1);
}

}  // namespace

CodeParams prm_params(std::uint64_t Q, int m, int d) {
    if (d < 1 || d > m * static_cast<int>(Q - 1))
        throw std::invalid_argument("PRM degree out of range 1..m(q^s-1): " + std::to_string(d));
    return {projective_count(Q, m), prm_dim(Q, m, d), distance_formula(Q, m, d - 1)};
}

CodeParams rm_params(std::uint64_t Q, int m, int d) {
    if (d < 0 || d > m * static_cast<int>(Q - 1))
        throw std::invalid_argument("RM degree out of range 0..m(q^s-1): " + std::to_string(d));
    return {ipow(Q, m), rm_dim(Q, m, d), distance_formula(Q, m, d)};
}

Elem eval_monomial(const Field& f, const Exponents& alpha, std::span<const Elem> point) {
    Elem v = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] == 0) continue;
        if (point[j] == 0) return 0;
        v = f.mul(v, f.pow(point[j], alpha[j]));
    }
    return v;
}

Matrix evaluate_monomials(const FieldPtr& field, const std::vector<Exponents>& monomials, const PointSet& points) {
    Matrix g(field, monomials.size(), points.size());
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) g.at(i, j) = eval_monomial(*field, monomials[i], points.point(j));
    return g;
}

LinearCode prm_code_any(const FieldPtr& field, int m, int d) {
    const std::uint64_t Q = field->order();
    CodeSpec spec;
    spec.q = static_cast<int>(Q);
    spec.m = m;
    spec.d = d;
    spec.family = Family::PRM;
    PointSet pts = enumerate_projective(field, m);
    auto mons = prm_monomial_basis(Q, m, d).flatten();
    return make_code(evaluate_monomials(field, mons, pts), spec);
}

LinearCode rm_code_any(const FieldPtr& field, int m, int d) {
    CodeSpec spec;
    spec.q = static_cast<int>(field->order());
    spec.m = m;
    spec.d = d;
    spec.family = Family::RM;
    PointSet pts = enumerate_affine(field, m);
    return make_code(evaluate_monomials(field, rm_monomials(field->order(), m, d), pts), spec);
}

LinearCode prm_generator(const FieldPtr& field, int m, int d) {
    if (m < 1) throw std::invalid_argument("PRM requires m >= 1");
    if (d < 1 || d > m * static_cast<int>(field->order() - 1))
        throw std::invalid_argument("PRM degree out of range 1..m(q^s-1): " + std::to_string(d));
    return prm_code_any(field, m, d);
}

LinearCode rm_generator(const FieldPtr& field, int m, int d) {
    if (m < 1) throw std::invalid_argument("RM requires m >= 1");
    if (d < 0 || d > m * static_cast<int>(field->order() - 1))
        throw std::invalid_argument("RM degree out of range 0..m(q^s-1): " + std::to_string(d));
    return rm_code_any(field, m, d);
}

LinearCode dual_code(const LinearCode& c) {
    LinearCode out{std::nullopt, c.field, rref(kernel(c.generator)).reduced};
    if (c.spec) {
        CodeSpec s = *c.spec;
        switch (s.family) {
            case Family::RM: s.family = Family::DualRM; break;
            case Family::PRM: s.family = Family::DualPRM; break;
            case Family::SscRM: s.family = Family::DualSscRM; break;
            case Family::SscPRM: s.family = Family::DualSscPRM; break;
            case Family::DualRM: s.family = Family::RM; break;
            case Family::DualPRM: s.family = Family::PRM; break;
            case Family::DualSscRM: s.family = Family::SscRM; break;
            case Family::DualSscPRM: s.family = Family::SscPRM; break;
        }
        out.spec = s;
    }
    return out;
}

std::vector<Elem> expand_v(const Field& f, std::span<const Elem> v, int d) {
    const std::uint32_t blocks = f.order() - 1;
    std::vector<Elem> out;
    out.reserve(blocks * v.size() + 1);
    for (std::uint32_t i = 0; i < blocks; ++i) {
        Elem c = f.exp(static_cast<std::int64_t>(i) * d);
        for (Elem x : v) out.push_back(f.mul(c, x));
    }
    out.push_back(0);
    return out;
}

std::vector<Elem> assemble_recursive(const Field& f, std::span<const Elem> u, std::span<const Elem> v, int d) {
    auto ev = expand_v(f, v, d);
    if (ev.size() != u.size()) throw std::invalid_argument("recursive assembly: length mismatch between u and v");
    std::vector<Elem> out = add_vectors(f, u, ev);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

Matrix recursive_generator(const Matrix& rm_rows, const Matrix& prm_rows, int d) {
    const Field& f = *rm_rows.field();
    const std::size_t n = rm_rows.cols() + prm_rows.cols();
    Matrix g(rm_rows.field(), 0, n);
    std::vector<Elem> zero_v(prm_rows.cols(), 0), zero_u(rm_rows.cols(), 0);
    for (std::size_t i = 0; i < rm_rows.rows(); ++i) g.append_row(assemble_recursive(f, rm_rows.row(i), zero_v, d));
    for (std::size_t j = 0; j < prm_rows.rows(); ++j) g.append_row(assemble_recursive(f, zero_u, prm_rows.row(j), d));
    return g;
}

RecursionCheck verify_recursion(const FieldPtr& field, int m, int d) {
    if (m < 1) throw std::invalid_argument("recursion needs m >= 1");
    LinearCode whole = prm_generator(field, m, d);
    LinearCode u = rm_code_any(field, m, d - 1);
    LinearCode v = prm_code_any(field, m - 1, d);
    Matrix g = recursive_generator(u.generator, v.generator, d);
    RecursionCheck res;
    res.k = whole.k();
    res.k_rm = u.k();
    res.k_prm_lower = v.k();
    res.row_space_equal = row_space_equal(g, whole.generator);
    res.dimension_identity = res.k == res.k_rm + res.k_prm_lower && rank(g) == res.k;
    return res;
}

}  // namespace prmkit
