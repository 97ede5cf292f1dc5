#include "prmkit/subfield.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace prmkit {

// ------------------------------------------------------------ SubfieldEmbedding

EmbeddingPtr SubfieldEmbedding::make(FieldPtr big, std::uint32_t q) {
    const int s = big->subfield_degree(q);
    const int p = big->characteristic();
    const int a = big->degree() / s;
    auto emb = std::shared_ptr<SubfieldEmbedding>(new SubfieldEmbedding());
    emb->big_ = big;
    emb->small_ = Field::build(p, a);
    emb->q_ = q;
    emb->s_ = s;
    const Field& B = *big;
    const Field& S = *emb->small_;

    auto is_root = [&](Elem x) {
        Elem v = 0;
        const auto& mod = S.modulus();
        for (std::size_t i = mod.size(); i-- > 0;) v = B.add(B.mul(v, x), static_cast<Elem>(mod[i]));
        return v == 0;
    };
    // xi^((Q-1)/(q-1)) first, so that s = 1 gives the identity map.
    Elem root = B.exp(static_cast<std::int64_t>((B.order() - 1) / (q - 1)));
    if (!is_root(root)) {
        root = 0;
        for (std::uint32_t x = 1; x < B.order() && root == 0; ++x)
            if (B.in_subfield(q, static_cast<Elem>(x)) && is_root(static_cast<Elem>(x))) root = static_cast<Elem>(x);
        if (root == 0) throw FieldError("no root of the subfield modulus found");
    }
    emb->to_big_.assign(q, 0);
    emb->to_small_.assign(B.order(), -1);
    emb->to_small_[0] = 0;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        Elem sm = S.exp(i), bg = B.pow(root, i);
        emb->to_big_[sm] = bg;
        emb->to_small_[bg] = sm;
    }
    // Coordinates in the basis 1, xi, ..., xi^(s-1), by enumerating all GF(q)-combinations.
    auto basis = B.subfield_basis(q);
    emb->coords_.assign(static_cast<std::size_t>(B.order()) * static_cast<std::size_t>(s), 0);
    std::vector<Elem> digits(static_cast<std::size_t>(s), 0);
    for (std::uint32_t idx = 0; idx < B.order(); ++idx) {
        std::uint32_t t = idx;
        Elem z = 0;
        for (int j = 0; j < s; ++j) {
            digits[j] = static_cast<Elem>(t % q);
            t /= q;
            z = B.add(z, B.mul(emb->to_big_[digits[j]], basis[j]));
        }
        std::copy(digits.begin(), digits.end(), emb->coords_.begin() + static_cast<std::ptrdiff_t>(z) * s);
    }
    return emb;
}

Elem SubfieldEmbedding::down(Elem big_elem) const {
    int v = to_small_[big_elem];
    if (v < 0) throw std::domain_error("element " + std::to_string(big_elem) + " is not in the subfield");
    return static_cast<Elem>(v);
}

Matrix SubfieldEmbedding::up(const Matrix& m) const {
    Matrix out(big_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = up(m.at(i, j));
    return out;
}

Matrix SubfieldEmbedding::down(const Matrix& m) const {
    Matrix out(small_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = down(m.at(i, j));
    return out;
}

// ------------------------------------------------------------------- SSC core

namespace {

Matrix ssc_by_generator(const LinearCode& parent, const SubfieldEmbedding& emb) {
    const Field& B = *emb.big();
    const Matrix& g = parent.generator;
    const std::size_t k = g.rows(), n = g.cols();
    const std::size_t s = static_cast<std::size_t>(emb.s());
    auto basis = B.subfield_basis(emb.q());
    // Unknown (i, t) multiplies basis[t] * row i.
    Matrix constraints(emb.small(), 0, k * s);
    Matrix value(emb.small(), k * s, n);
    std::vector<Elem> eq(k * s);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < s; ++t) value.at(i * s + t, j) = emb.coords(B.mul(basis[t], g.at(i, j)))[0];
        for (std::size_t c = 1; c < s; ++c) {
            bool any = false;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t t = 0; t < s; ++t) {
                    eq[i * s + t] = emb.coords(B.mul(basis[t], g.at(i, j)))[c];
                    any |= eq[i * s + t] != 0;
                }
            if (any) constraints.append_row(eq);
        }
    }
    Matrix sol = constraints.rows() ? kernel(constraints) : Matrix::identity(emb.small(), k * s);
    if (sol.rows() == 0) return Matrix(emb.small(), 0, n);
    return sol.multiply(value);
}

Matrix ssc_by_parity(const LinearCode& parent, const SubfieldEmbedding& emb) {
    const std::size_t n = parent.n();
    const std::size_t s = static_cast<std::size_t>(emb.s());
    if (parent.k() == n) return Matrix::identity(emb.small(), n);
    Matrix h = kernel(parent.generator);
    Matrix constraints(emb.small(), 0, n);
    std::vector<Elem> eq(n);
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < s; ++c) {
            bool any = false;
            for (std::size_t j = 0; j < n; ++j) {
                eq[j] = emb.coords(h.at(r, j))[c];
                any |= eq[j] != 0;
            }
            if (any) constraints.append_row(eq);
        }
    return kernel(constraints);
}

std::vector<Elem> expand_scalar(const Field& f, std::span<const Elem> v, Elem c, std::uint32_t blocks) {
    std::vector<Elem> out;
    out.reserve(blocks * v.size() + 1);
    Elem scale = 1;
    for (std::uint32_t i = 0; i < blocks; ++i, scale = f.mul(scale, c))
        for (Elem x : v) out.push_back(f.mul(scale, x));
    out.push_back(0);
    return out;
}

void check_lambda(int q, int s, int m, int lambda) {
    if (m < 1) throw std::invalid_argument("subfield recursion needs m >= 1");
    if (lambda < 1 || lambda > m * (q - 1))
        throw std::invalid_argument("lambda out of range 1..m(q-1): " + std::to_string(lambda));
    (void)s;
}

FieldPtr big_field(int q, int s) { return Field::of_order(ipow(static_cast<std::uint64_t>(q), s)); }

}  // namespace

SscCode subfield_subcode(const LinearCode& parent, std::uint32_t q, SscRoute route) {
    auto emb = SubfieldEmbedding::make(parent.field, q);
    if (route == SscRoute::Auto) route = 2 * parent.k() <= parent.n() ? SscRoute::Generator : SscRoute::ParityCheck;
    Matrix g = route == SscRoute::Generator ? ssc_by_generator(parent, *emb) : ssc_by_parity(parent, *emb);
    std::optional<CodeSpec> spec;
    if (parent.spec) {
        spec = parent.spec;
        spec->q = static_cast<int>(q);
        spec->s = emb->s();
        if (spec->family == Family::PRM) spec->family = Family::SscPRM;
        if (spec->family == Family::RM) spec->family = Family::SscRM;
    }
    return SscCode{parent, emb, make_code(g, spec)};
}

int d_lambda(int q, int s, int lambda) {
    const auto Q = ipow(static_cast<std::uint64_t>(q), s);
    return static_cast<int>(static_cast<std::uint64_t>(lambda) * (Q - 1) / static_cast<std::uint64_t>(q - 1));
}

SscCode ssc_prm(int q, int s, int m, int d) {
    return subfield_subcode(prm_code_any(big_field(q, s), m, d), static_cast<std::uint32_t>(q));
}

SscCode ssc_rm(int q, int s, int m, int d) {
    return subfield_subcode(rm_code_any(big_field(q, s), m, d), static_cast<std::uint32_t>(q));
}

LinearCode build_code(const CodeSpec& spec) {
    auto field = big_field(spec.q, spec.s);
    const int top = spec.m * static_cast<int>(field->order() - 1);
    int d = spec.d;
    const bool ssc = spec.family == Family::SscPRM || spec.family == Family::SscRM ||
                     spec.family == Family::DualSscPRM || spec.family == Family::DualSscRM;
    if (ssc && spec.lambda) d = d_lambda(spec.q, spec.s, *spec.lambda);
    LinearCode out;
    switch (spec.family) {
        case Family::PRM:
        case Family::DualPRM: out = prm_generator(field, spec.m, d); break;
        case Family::RM:
        case Family::DualRM: out = rm_generator(field, spec.m, d); break;
        case Family::SscPRM:
        case Family::DualSscPRM:
            if (d < 1 || d > top) throw std::invalid_argument("PRM degree out of range 1..m(q^s-1): " + std::to_string(d));
            out = ssc_prm(spec.q, spec.s, spec.m, d).code;
            break;
        case Family::SscRM:
        case Family::DualSscRM:
            if (d < 0 || d > top) throw std::invalid_argument("RM degree out of range 0..m(q^s-1): " + std::to_string(d));
            out = ssc_rm(spec.q, spec.s, spec.m, d).code;
            break;
    }
    const bool dual = spec.family == Family::DualPRM || spec.family == Family::DualRM ||
                      spec.family == Family::DualSscPRM || spec.family == Family::DualSscRM;
    if (dual) out = dual_code(out);
    CodeSpec named = spec;
    named.d = d;
    out.spec = named;
    return out;
}

SscRecursionReport ssc_recursion_check(int q, int s, int m, int lambda) {
    check_lambda(q, s, m, lambda);
    SscRecursionReport rep;
    rep.d = d_lambda(q, s, lambda);
    auto whole = ssc_prm(q, s, m, rep.d);
    auto u = ssc_rm(q, s, m, rep.d - 1);
    auto v = ssc_prm(q, s, m - 1, rep.d);
    const auto& emb = *whole.embedding;
    const Field& S = *emb.small();
    const Elem c = emb.down(emb.big()->exp(rep.d));
    const std::uint32_t blocks = emb.big()->order() - 1;

    Matrix g(emb.small(), 0, whole.n());
    std::vector<Elem> zero_v(v.n(), 0);
    for (std::size_t i = 0; i < u.k(); ++i) {
        std::vector<Elem> row(u.code.generator.row(i).begin(), u.code.generator.row(i).end());
        row.insert(row.end(), zero_v.begin(), zero_v.end());
        g.append_row(row);
    }
    for (std::size_t j = 0; j < v.k(); ++j) {
        auto row = expand_scalar(S, v.code.generator.row(j), c, blocks);
        row.insert(row.end(), v.code.generator.row(j).begin(), v.code.generator.row(j).end());
        g.append_row(row);
    }
    rep.k = whole.k();
    rep.k_rm = u.k();
    rep.k_prm_lower = v.k();
    rep.row_space_equal = row_space_equal(g, whole.code.generator);
    rep.dimension_identity = rep.k == rep.k_rm + rep.k_prm_lower;
    return rep;
}

SscDualReport ssc_dual_recursive(int q, int s, int m, int lambda) {
    check_lambda(q, s, m, lambda);
    SscDualReport rep;
    rep.d = d_lambda(q, s, lambda);
    auto whole = ssc_prm(q, s, m, rep.d);
    auto u = dual_code(ssc_rm(q, s, m, rep.d - 1).code);
    auto v = dual_code(ssc_prm(q, s, m - 1, rep.d).code);
    const auto& emb = *whole.embedding;
    const Field& S = *emb.small();
    const Elem c = emb.down(emb.big()->exp(rep.d));
    const std::size_t block = v.n();
    const std::uint32_t blocks = emb.big()->order() - 1;

    Matrix g(emb.small(), 0, whole.n());
    for (std::size_t i = 0; i < u.k(); ++i) {
        auto ut = u.generator.row(i);
        std::vector<Elem> tail(block, 0);
        Elem scale = 1;
        for (std::uint32_t b = 0; b < blocks; ++b, scale = S.mul(scale, c))
            for (std::size_t x = 0; x < block; ++x) tail[x] = S.add(tail[x], S.mul(scale, ut[b * block + x]));
        std::vector<Elem> row(ut.begin(), ut.end());
        for (Elem t : tail) row.push_back(S.neg(t));
        g.append_row(row);
    }
    for (std::size_t j = 0; j < v.k(); ++j) {
        std::vector<Elem> row(u.n(), 0);
        row.insert(row.end(), v.generator.row(j).begin(), v.generator.row(j).end());
        g.append_row(row);
    }
    rep.k_rm_dual = u.k();
    rep.k_prm_dual_lower = v.k();
    rep.code = make_code(g);
    CodeSpec spec{q, s, m, rep.d, Family::DualSscPRM, lambda};
    rep.code.spec = spec;
    rep.row_space_equal = row_space_equal(rep.code.generator, dual_code(whole.code).generator);
    return rep;
}

// ----------------------------------------------------------------- polynomials

void Polynomial::add_term(const Exponents& e, Elem c) {
    if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("monomial arity mismatch");
    Elem v = field->add(terms.count(e) ? terms[e] : Elem{0}, c);
    if (v == 0) terms.erase(e);
    else terms[e] = v;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (int a : e) t += a;
        d = std::max(d, t);
    }
    return d;
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms) {
        int t = 0;
        for (int a : e) t += a;
        if (t != d) return false;
    }
    return true;
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
    Elem v = 0;
    for (const auto& [e, c] : terms) v = field->add(v, field->mul(c, eval_monomial(*field, e, point)));
    return v;
}

HomogenizedPoly homogenize(const Polynomial& f, int d) {
    if (f.degree() >= d) throw std::invalid_argument("homogenization needs deg f < d");
    HomogenizedPoly h{f.field, f.nvars + 1, {}};
    for (const auto& [e, c] : f.terms) {
        int t = 0;
        for (int a : e) t += a;
        Exponents he{d - t};
        he.insert(he.end(), e.begin(), e.end());
        h.terms[he] = c;
    }
    return h;
}

HomogenizedPoly lift(const Polynomial& g) {
    HomogenizedPoly h{g.field, g.nvars + 1, {}};
    for (const auto& [e, c] : g.terms) {
        Exponents he{0};
        he.insert(he.end(), e.begin(), e.end());
        h.terms[he] = c;
    }
    return h;
}

Matrix evaluate_polys(const std::vector<Polynomial>& polys, const PointSet& points) {
    Matrix out(points.field(), polys.size(), points.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) out.at(i, j) = polys[i].evaluate(points.point(j));
    return out;
}

namespace {

Polynomial interpolate(const FieldPtr& field, int nvars, const std::vector<Exponents>& monos, const PointSet& pts,
                       std::span<const Elem> word) {
    Matrix e = evaluate_monomials(field, monos, pts);
    auto x = solve_left(e, word);
    if (!x) throw std::invalid_argument("word is not in the evaluation code");
    Polynomial p{field, nvars, {}};
    for (std::size_t i = 0; i < monos.size(); ++i)
        if ((*x)[i]) p.add_term(monos[i], (*x)[i]);
    return p;
}

// Checks that the polynomials evaluate to a basis of `code` (rows over the big field).
void require_basis(const std::vector<Polynomial>& polys, const PointSet& pts, const Matrix& code, const char* what) {
    Matrix ev = evaluate_polys(polys, pts);
    if (rank(ev) != polys.size() || !row_space_equal(ev, code))
        throw std::invalid_argument(std::string("input polynomials do not evaluate to a basis of ") + what);
}

}  // namespace

Polynomial interpolate_affine(const FieldPtr& field, int m, int d, std::span<const Elem> word) {
    return interpolate(field, m, rm_monomials(field->order(), m, d), enumerate_affine(field, m), word);
}

Polynomial interpolate_projective(const FieldPtr& field, int m, int d, std::span<const Elem> word) {
    return interpolate(field, m + 1, prm_monomial_basis(field->order(), m, d).flatten(),
                       enumerate_projective(field, m), word);
}

SscBasisReport ssc_basis_recursive(int q, int s, int m, int lambda, const std::vector<Polynomial>& rm_polys,
                                   const std::vector<Polynomial>& prm_polys) {
    check_lambda(q, s, m, lambda);
    const int d = d_lambda(q, s, lambda);
    auto field = big_field(q, s);
    require_basis(rm_polys, enumerate_affine(field, m), ssc_rm(q, s, m, d - 1).lifted(), "RM^sigma_{d-1}(m)");
    require_basis(prm_polys, enumerate_projective(field, m - 1), ssc_prm(q, s, m - 1, d).lifted(),
                  "PRM^sigma_d(m-1)");
    SscBasisReport rep;
    for (const auto& f : rm_polys) rep.polys.push_back(homogenize(f, d));
    for (const auto& g : prm_polys) rep.polys.push_back(lift(g));
    rep.evaluations = evaluate_polys(rep.polys, enumerate_projective(field, m));
    rep.rank = rank(rep.evaluations);
    rep.spans_ssc = row_space_equal(rep.evaluations, ssc_prm(q, s, m, d).lifted());
    return rep;
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> generic_ssc_polys(int q, int s, int m, int lambda) {
    check_lambda(q, s, m, lambda);
    const int d = d_lambda(q, s, lambda);
    auto field = big_field(q, s);
    std::vector<Polynomial> f, g;
    Matrix u = ssc_rm(q, s, m, d - 1).lifted();
    for (std::size_t i = 0; i < u.rows(); ++i) f.push_back(interpolate_affine(field, m, d - 1, u.row(i)));
    Matrix v = ssc_prm(q, s, m - 1, d).lifted();
    for (std::size_t j = 0; j < v.rows(); ++j) g.push_back(interpolate_projective(field, m - 1, d, v.row(j)));
    return {f, g};
}

SscInequalityReport ssc_inequalities_check(int q, int s, int m, int d, const MinDistanceOptions& opt) {
    const auto Q = ipow(static_cast<std::uint64_t>(q), s);
    SscInequalityReport rep;
    rep.d1_rm = rm_params(Q, m, d - 1).d1;
    auto prm = ssc_prm(q, s, m, d);
    auto rm = ssc_rm(q, s, m, d - 1);
    rep.dim_ssc_prm = prm.k();
    rep.dim_ssc_rm = rm.k();
    rep.dimension_holds = rep.dim_ssc_prm >= rep.dim_ssc_rm;
    rep.dimension_strict = rep.dim_ssc_prm > rep.dim_ssc_rm;
    rep.nondegenerate = prm.k() > 0;
    for (std::size_t j = 0; j < prm.n() && rep.nondegenerate; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < prm.k() && !any; ++i) any = prm.code.generator.at(i, j) != 0;
        rep.nondegenerate = any;
    }
    if (prm.k() == 0) return rep;  // vacuous
    rep.d1_ssc_prm = min_distance_exact(prm.code, opt);
    if (rm.k() > 0) rep.d1_ssc_rm = min_distance_exact(rm.code, opt);
    if (rep.d1_ssc_prm.exact()) {
        rep.distances_hold = rep.d1_rm <= rep.d1_ssc_prm.value;
        if (rm.k() > 0 && rep.d1_ssc_rm.exact()) rep.distances_hold &= rep.d1_ssc_prm.value <= rep.d1_ssc_rm.value;
    }
    rep.distances_complete = rep.d1_ssc_prm.exact() && (rm.k() == 0 || rep.d1_ssc_rm.exact());
    return rep;
}

}  // namespace prmkit
