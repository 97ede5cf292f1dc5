#include <random>

#include "doctest.h"
#include "prmkit/subfield.hpp"

using namespace prmkit;

namespace {

// Counts parent codewords with every coordinate in GF(q) by walking all Q^k messages.
std::uint64_t count_subfield_words(const LinearCode& parent, std::uint32_t q) {
    const Field& f = *parent.field;
    const std::size_t k = parent.k(), n = parent.n();
    std::vector<Elem> msg(k, 0);
    std::uint64_t count = 0;
    while (true) {
        auto w = combine_rows(parent.generator, msg);
        bool all = true;
        for (std::size_t j = 0; j < n && all; ++j) all = f.in_subfield(q, w[j]);
        count += all;
        std::size_t i = 0;
        while (i < k && msg[i] == f.order() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
    }
    return count;
}

Polynomial poly(const FieldPtr& f, int nvars, std::vector<std::pair<Exponents, Elem>> terms) {
    Polynomial p{f, nvars, {}};
    for (auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("embedding is a field homomorphism onto the subfield") {
    for (auto [p, e, a] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {2, 4, 2}, {3, 2, 1}, {2, 6, 2}, {2, 6, 3}, {2, 3, 3}}) {
        auto big = Field::build(p, e);
        std::uint32_t q = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(p), a));
        auto emb = SubfieldEmbedding::make(big, q);
        const Field& S = *emb->small();
        CHECK(emb->s() == e / a);
        for (std::uint32_t x = 0; x < q; ++x)
            for (std::uint32_t y = 0; y < q; ++y) {
                Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
                CHECK(emb->up(S.add(ex, ey)) == big->add(emb->up(ex), emb->up(ey)));
                CHECK(emb->up(S.mul(ex, ey)) == big->mul(emb->up(ex), emb->up(ey)));
            }
        for (std::uint32_t z = 0; z < big->order(); ++z) {
            Elem ez = static_cast<Elem>(z);
            CHECK(emb->contains(ez) == big->in_subfield(q, ez));
            if (emb->contains(ez)) CHECK(emb->up(emb->down(ez)) == ez);
            // coordinates reconstruct the element
            auto c = emb->coords(ez);
            auto basis = big->subfield_basis(q);
            Elem back = 0;
            for (int t = 0; t < emb->s(); ++t) back = big->add(back, big->mul(emb->up(c[t]), basis[t]));
            CHECK(back == ez);
        }
        if (a == e) CHECK(emb->up(S.xi()) == big->xi());
    }
}

TEST_CASE("subfield subcode examples") {
    auto f4 = Field::build(2, 2);
    auto c = prm_generator(f4, 2, 3);
    auto ssc = subfield_subcode(c, 2);
    CHECK(ssc.k() == 9);
    CHECK(ssc.n() == 21);
    CHECK(ssc.code.field->order() == 2);
    CHECK(count_subfield_words(c, 2) == 512);
    CHECK(ssc_prm(2, 2, 3, 3).k() == 16);

    // A code spanned by GF(q)-rows keeps its dimension.
    auto f2 = Field::build(2, 1);
    auto base = prm_generator(f2, 2, 1);
    auto lifted = make_code(SubfieldEmbedding::make(f4, 2)->up(base.generator));
    CHECK(subfield_subcode(lifted, 2).k() == base.k());
    CHECK_THROWS(subfield_subcode(c, 3));
}

TEST_CASE("both SSC routes agree and are maximal") {
    std::mt19937_64 rng(17);
    for (auto [q, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        auto big = Field::of_order(ipow(static_cast<std::uint64_t>(q), s));
        const int Q = static_cast<int>(big->order());
        for (int m = 1; m <= 2; ++m)
            for (int d = 1; d <= m * (Q - 1); ++d) {
                if (projective_count(static_cast<std::uint64_t>(Q), m) > 300) continue;
                auto parent = prm_generator(big, m, d);
                auto a = subfield_subcode(parent, static_cast<std::uint32_t>(q), SscRoute::Generator);
                auto b = subfield_subcode(parent, static_cast<std::uint32_t>(q), SscRoute::ParityCheck);
                CAPTURE(Q);
                CAPTURE(m);
                CAPTURE(d);
                CHECK(row_space_equal(a.code.generator, b.code.generator));
                CHECK(row_space_contains(parent.generator, a.lifted()));
                if (parent.k() <= 7 && Q <= 9) CHECK(count_subfield_words(parent, static_cast<std::uint32_t>(q)) ==
                                                     ipow(static_cast<std::uint64_t>(q), static_cast<int>(a.k())));
                // random GF(q) combinations of SSC rows stay in the parent
                const Field& S = *a.embedding->small();
                for (int t = 0; t < 5 && a.k() > 0; ++t) {
                    std::vector<Elem> coeff(a.k());
                    for (auto& x : coeff) x = static_cast<Elem>(rng() % S.order());
                    auto w = combine_rows(a.code.generator, coeff);
                    std::vector<Elem> up(w.size());
                    for (std::size_t j = 0; j < w.size(); ++j) up[j] = a.embedding->up(w[j]);
                    CHECK(in_row_space(parent.generator, up));
                }
            }
    }
}

TEST_CASE("SSC recursion examples") {
    auto r = ssc_recursion_check(2, 2, 2, 1);
    CHECK(r.ok());
    CHECK(r.k == 9);
    CHECK(r.k == r.k_rm + r.k_prm_lower);
    auto r2 = ssc_recursion_check(2, 2, 3, 2);
    CHECK(r2.ok());
    CHECK(r2.k == 60);
    auto r3 = ssc_recursion_check(3, 2, 2, 1);
    CHECK(r3.ok());
    CHECK(r3.k == 9);
    CHECK_THROWS(ssc_recursion_check(2, 2, 2, 3));
    CHECK(d_lambda(2, 2, 1) == 3);
    CHECK(d_lambda(3, 2, 2) == 8);
}

TEST_CASE("SSC dual recursion examples") {
    auto r = ssc_dual_recursive(2, 2, 2, 1);
    CHECK(r.row_space_equal);
    CHECK(r.code.n() == 21);
    CHECK(r.code.k() == 12);
    auto r2 = ssc_dual_recursive(2, 2, 3, 2);
    CHECK(r2.row_space_equal);
    CHECK(r2.code.n() == 85);
    CHECK(r2.code.k() == 25);
}

TEST_CASE("homogenize") {
    auto f4 = Field::build(2, 2);
    auto one = poly(f4, 1, {{{0}, 1}});
    auto h = homogenize(one, 3);
    CHECK(h.terms.size() == 1);
    CHECK(h.terms.count({3, 0}) == 1);
    auto g = poly(f4, 1, {{{1}, 1}, {{2}, 1}});
    auto hg = homogenize(g, 3);
    CHECK(hg.terms == std::map<Exponents, Elem>{{{2, 1}, 1}, {{1, 2}, 1}});
    CHECK(hg.is_homogeneous(3));
    Polynomial zero{f4, 2, {}};
    CHECK(homogenize(zero, 3).is_zero());
    CHECK_THROWS(homogenize(poly(f4, 1, {{{3}, 1}}), 3));
    // distinct monomials stay distinct and every term is divisible by x_0
    auto many = poly(f4, 2, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 3}, {{1, 1}, 1}, {{2, 0}, 1}});
    auto hm = homogenize(many, 4);
    CHECK(hm.terms.size() == many.terms.size());
    for (const auto& [e, c] : hm.terms) CHECK(e[0] > 0);
    CHECK(hm.is_homogeneous(4));
}

TEST_CASE("basis from homogenized and lifted polynomials, worked example") {
    auto f4 = Field::build(2, 2);
    const Elem x = f4->xi(), x2 = f4->mul(x, x), x1 = f4->add(x, 1);
    std::vector<Polynomial> b1 = {
        poly(f4, 3, {{{0, 0, 0}, 1}}),
        poly(f4, 3, {{{1, 0, 0}, 1}, {{2, 0, 0}, 1}}),
        poly(f4, 3, {{{1, 0, 0}, x}, {{2, 0, 0}, x2}}),
        poly(f4, 3, {{{0, 1, 0}, 1}, {{0, 2, 0}, 1}}),
        poly(f4, 3, {{{0, 1, 0}, x}, {{0, 2, 0}, x2}}),
        poly(f4, 3, {{{0, 0, 1}, 1}, {{0, 0, 2}, 1}}),
        poly(f4, 3, {{{0, 0, 1}, x}, {{0, 0, 2}, x2}}),
    };
    // variables x_1, x_2, x_3 on P^2
    std::vector<Polynomial> b2 = {
        poly(f4, 3, {{{3, 0, 0}, 1}}),
        poly(f4, 3, {{{1, 0, 2}, 1}, {{2, 0, 1}, 1}}),
        poly(f4, 3, {{{1, 0, 2}, x1}, {{2, 0, 1}, x}}),
        poly(f4, 3, {{{1, 2, 0}, 1}, {{2, 1, 0}, 1}}),
        poly(f4, 3, {{{1, 2, 0}, x1}, {{2, 1, 0}, x}}),
        poly(f4, 3, {{{0, 3, 0}, 1}}),
        poly(f4, 3, {{{0, 2, 1}, 1}, {{0, 1, 2}, 1}}),
        poly(f4, 3, {{{0, 2, 1}, x1}, {{0, 1, 2}, x}}),
        poly(f4, 3, {{{0, 0, 3}, 1}}),
    };
    auto rep = ssc_basis_recursive(2, 2, 3, 1, b1, b2);
    CHECK(rep.polys.size() == 16);
    CHECK(rep.rank == 16);
    CHECK(rep.spans_ssc);
    CHECK(rep.is_basis());
    CHECK(rep.polys[1].terms == std::map<Exponents, Elem>{{{2, 1, 0, 0}, 1}, {{1, 2, 0, 0}, 1}});
    for (const auto& p : rep.polys) CHECK(p.is_homogeneous(3));

    // dropping a polynomial breaks the precondition
    auto short_b1 = b1;
    short_b1.pop_back();
    CHECK_THROWS_AS(ssc_basis_recursive(2, 2, 3, 1, short_b1, b2), std::invalid_argument);
}

TEST_CASE("basis from generic SSC polynomials") {
    for (auto [q, s, m, lambda] : std::vector<std::tuple<int, int, int, int>>{{2, 2, 2, 1}, {2, 2, 3, 1}, {3, 2, 2, 1}, {2, 2, 2, 2}}) {
        auto [f, g] = generic_ssc_polys(q, s, m, lambda);
        auto rep = ssc_basis_recursive(q, s, m, lambda, f, g);
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(lambda);
        CHECK(rep.is_basis());
        CHECK(rep.polys.size() == ssc_prm(q, s, m, d_lambda(q, s, lambda)).k());
        if (q == 2 && m == 2 && lambda == 1) CHECK(rep.polys.size() == 9);
    }
}

TEST_CASE("SSC inequalities") {
    auto rep = ssc_inequalities_check(2, 2, 2, 3);
    REQUIRE(rep.d1_ssc_prm.exact());
    CHECK(rep.d1_ssc_prm.value >= 8);
    CHECK(rep.dim_ssc_prm == 9);
    CHECK(rep.dimension_strict);
    CHECK(rep.distances_hold);
    CHECK(rep.distances_complete);
    auto rep3 = ssc_inequalities_check(2, 2, 3, 3);
    CHECK(rep3.dim_ssc_prm == 16);
    CHECK(rep3.dim_ssc_prm >= rep3.dim_ssc_rm);
}

TEST_CASE("build_code families") {
    CodeSpec spec{2, 2, 3, 0, Family::SscPRM, 1};
    auto c = build_code(spec);
    CHECK(c.n() == 85);
    CHECK(c.k() == 16);
    CHECK(c.spec->d == 3);
    spec.family = Family::DualSscPRM;
    CHECK(build_code(spec).k() == 69);
    CHECK(build_code(CodeSpec{2, 2, 2, 5, Family::PRM, {}}).k() == 18);
    CHECK(build_code(CodeSpec{2, 2, 2, 4, Family::RM, {}}).k() == 13);
    CHECK_THROWS(build_code(CodeSpec{2, 2, 2, 0, Family::PRM, {}}));
}
