#include <random>

#include "doctest.h"
#include "prmkit/codes.hpp"
#include "prmkit/linalg.hpp"

using namespace prmkit;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(f, r, c);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1 + static_cast<std::uint32_t>(zero_bias));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::uint32_t v = pick(rng);
            m.at(i, j) = v >= f->order() ? 0 : static_cast<Elem>(v);
        }
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto f2 = Field::build(2, 1);
    Matrix z(f2, 3, 5);
    CHECK(rref(z).rank == 0);
    CHECK(rref(z).reduced.rows() == 0);

    Matrix id = Matrix::identity(f2, 3);
    auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    auto g = prm_code_any(f2, 2, 1);
    CHECK(g.generator.cols() == 7);
    CHECK(rank(g.generator) == 3);
}

TEST_CASE("kernel examples") {
    auto f2 = Field::build(2, 1);
    CHECK(kernel(Matrix::identity(f2, 4)).rows() == 0);

    Matrix ones(f2, 4, {{1, 1, 1, 1}});
    Matrix k = kernel(ones);
    CHECK(k.rows() == 3);
    CHECK(rank(k) == 3);
    for (std::size_t i = 0; i < k.rows(); ++i) {
        int w = 0;
        for (Elem x : k.row(i)) w += x != 0;
        CHECK(w % 2 == 0);
    }
    auto g = prm_code_any(f2, 2, 1);
    CHECK(rank(kernel(g.generator)) == 4);
}

TEST_CASE("row space equality examples") {
    auto f4 = Field::build(2, 2);
    std::mt19937_64 rng(3);
    Matrix a = random_matrix(f4, 4, 9, rng);
    Matrix perm(f4, 0, 9);
    for (std::size_t i : {2, 0, 3, 1}) perm.append_row(a.row(i));
    CHECK(row_space_equal(a, perm));
    Matrix scaled = a;
    for (auto& x : scaled.row(1)) x = f4->mul(x, f4->xi());
    CHECK(row_space_equal(a, scaled));

    auto f2 = Field::build(2, 1);
    // Q=2, m=2, d=1: d_perp = 2*1-1 = 1 and d = 1 is divisible by Q-1 = 1, so the all-ones word joins.
    auto c = prm_code_any(f2, 2, 1);
    auto dual = dual_code(c);
    CHECK(dual.k() == 4);
    CHECK_THROWS(row_space_equal(a, Matrix(f4, 2, 3)));
}

TEST_CASE("rref idempotent and kernel annihilates") {
    std::mt19937_64 rng(11);
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}, {2, 4}}) {
        auto f = Field::build(p, e);
        for (int t = 0; t < 40; ++t) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 10;
            Matrix m = random_matrix(f, r, c, rng, t % 3 == 0 ? static_cast<int>(f->order()) * 2 : 0);
            auto once = rref(m);
            auto twice = rref(once.reduced);
            CHECK(twice.reduced == once.reduced);
            CHECK(twice.pivots == once.pivots);
            Matrix k = kernel(m);
            CHECK(once.rank + k.rows() == c);
            if (k.rows() > 0) CHECK(m.multiply(k.transpose()).is_zero());
        }
    }
}

TEST_CASE("row_space_equal is an equivalence on random triples") {
    std::mt19937_64 rng(5);
    auto f = Field::build(3, 1);
    for (int t = 0; t < 100; ++t) {
        Matrix a = random_matrix(f, 2, 4, rng, 6);
        Matrix b = random_matrix(f, 2, 4, rng, 6);
        Matrix c = random_matrix(f, 2, 4, rng, 6);
        CHECK(row_space_equal(a, a));
        CHECK(row_space_equal(a, b) == row_space_equal(b, a));
        if (row_space_equal(a, b) && row_space_equal(b, c)) CHECK(row_space_equal(a, c));
    }
}

TEST_CASE("intersection and containment") {
    std::mt19937_64 rng(9);
    auto f = Field::build(2, 2);
    for (int t = 0; t < 30; ++t) {
        Matrix common = random_matrix(f, 2, 8, rng);
        Matrix a = vstack(common, random_matrix(f, 2, 8, rng));
        Matrix b = vstack(common, random_matrix(f, 2, 8, rng));
        Matrix i = row_space_intersection(a, b);
        CHECK(row_space_contains(a, i));
        CHECK(row_space_contains(b, i));
        CHECK(row_space_contains(i, common));
        // dim(A + B) + dim(A ∩ B) = dim A + dim B
        CHECK(rank(vstack(a, b)) + rank(i) == rank(a) + rank(b));
        for (std::size_t r = 0; r < common.rows(); ++r) CHECK(in_row_space(a, common.row(r)));
    }
}
