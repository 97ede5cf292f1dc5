#include <random>
#include <set>

#include "doctest.h"
#include "prmkit/oracle.hpp"

using namespace prmkit;

namespace {

LinearCode random_code(const FieldPtr& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    Matrix g(f, k, n);
    std::uniform_int_distribution<std::uint32_t> pick(0, f->order() - 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) = static_cast<Elem>(pick(rng));
    return make_code(g);
}

// Support of the span of the rows of msg * G, computed without any pruning.
std::size_t span_support(const LinearCode& c, const Matrix& msg) {
    Matrix words = msg.multiply(c.generator);
    SupportAccumulator acc(c.n());
    for (std::size_t i = 0; i < words.rows(); ++i) acc.add(words.row(i));
    return acc.weight();
}

std::size_t naive_ghw(const LinearCode& c, int r) {
    SubspaceIter it(c.field, static_cast<int>(c.k()), r);
    std::size_t best = c.n() + 1;
    while (it.next()) best = std::min(best, span_support(c, it.current()));
    return best;
}

}  // namespace

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(3, 2, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(5, 6, 7) == 0);
    CHECK(gaussian_binomial(60, 30, 256) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("SubspaceIter yields each subspace once") {
    for (auto [p, e, k] : std::vector<std::tuple<int, int, int>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {2, 1, 5}}) {
        auto f = Field::build(p, e);
        for (int r = 0; r <= k; ++r) {
            SubspaceIter it(f, k, r);
            std::set<std::vector<Elem>> seen;
            std::uint64_t count = 0;
            while (it.next()) {
                ++count;
                auto red = rref(it.current());
                CHECK(red.rank == static_cast<std::size_t>(r));
                CHECK(red.reduced.data() == it.current().data());
                seen.insert(it.current().data());
            }
            CHECK(count == it.count());
            CHECK(seen.size() == count);
        }
    }
}

TEST_CASE("SupportAccumulator is the union of row supports") {
    SupportAccumulator acc(70);
    std::vector<Elem> a(70, 0), b(70, 0);
    a[0] = 1;
    a[65] = 2;
    b[65] = 1;
    b[3] = 1;
    acc.add(a);
    CHECK(acc.weight() == 2);
    acc.add(b);
    CHECK(acc.weight() == 3);
    CHECK(acc.contains(65));
    CHECK_FALSE(acc.contains(64));
    acc.clear();
    CHECK(acc.weight() == 0);
}

TEST_CASE("minimum distance examples") {
    auto f2 = Field::build(2, 1);
    for (std::size_t n : {1u, 5u, 64u, 130u}) {
        Matrix g(f2, n, {std::vector<Elem>(n, 1)});
        auto r = min_distance_exact(make_code(g));
        CHECK(r.exact());
        CHECK(r.value == n);
    }
    auto c = prm_generator(f2, 2, 1);
    CHECK(min_distance_exact(c).value == 4);
    MinDistanceOptions dual;
    dual.method = DistanceMethod::DependentColumns;
    CHECK(min_distance_exact(c, dual).value == 4);

    MinDistanceOptions tiny;
    tiny.cap = 4;
    tiny.method = DistanceMethod::Enumerate;
    auto inf = min_distance_exact(c, tiny);
    CHECK_FALSE(inf.exact());
    CHECK(inf.status == OracleStatus::Infeasible);
}

TEST_CASE("minimum distance methods agree on random codes") {
    std::mt19937_64 rng(21);
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto f = Field::build(p, e);
        for (int t = 0; t < 25; ++t) {
            std::size_t n = 3 + rng() % 12, k = 1 + rng() % std::min<std::size_t>(n, 5);
            auto c = random_code(f, k, n, rng);
            if (c.k() == 0) continue;
            MinDistanceOptions a, b;
            a.method = DistanceMethod::Enumerate;
            b.method = DistanceMethod::DependentColumns;
            auto da = min_distance_exact(c, a), db = min_distance_exact(c, b);
            CAPTURE(f->order());
            REQUIRE(da.exact());
            REQUIRE(db.exact());
            CHECK(da.value == db.value);
            CHECK(da.value == naive_ghw(c, 1));
            CHECK(ghw_exact(c, 1).value == da.value);
        }
    }
}

TEST_CASE("GHW oracle examples") {
    auto f2 = Field::build(2, 1);
    auto c = prm_generator(f2, 2, 1);
    CHECK(ghw_exact(c, 2).value == 6);
    CHECK(ghw_exact(c, 3).value == 7);
    CHECK(ghw_exact(c, 0).value == 0);
    auto f3 = Field::build(3, 1);
    auto c3 = prm_generator(f3, 2, 2);
    CHECK(ghw_exact(c3, 2).value == 8);
    CHECK(ghw_exact(c3, static_cast<int>(c3.k())).value == 13);
    CHECK_THROWS(ghw_exact(c3, 7));

    GhwOracleOptions small;
    small.cap = 3;
    CHECK_FALSE(ghw_exact(c3, 2, small).exact());
}

TEST_CASE("GHW strategies agree with unpruned enumeration") {
    std::mt19937_64 rng(4);
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        auto f = Field::build(p, e);
        for (int t = 0; t < 12; ++t) {
            std::size_t n = 4 + rng() % 8, k = 1 + rng() % 4;
            auto c = random_code(f, k, n, rng);
            for (int r = 1; r <= static_cast<int>(c.k()); ++r) {
                GhwOracleOptions a, b, threaded;
                a.strategy = GhwStrategy::Subspaces;
                b.strategy = GhwStrategy::Flats;
                threaded.strategy = GhwStrategy::Subspaces;
                threaded.threads = 3;
                std::size_t want = naive_ghw(c, r);
                CHECK(ghw_exact(c, r, a).value == want);
                CHECK(ghw_exact(c, r, b).value == want);
                CHECK(ghw_exact(c, r, threaded).value == want);
                b.threads = 2;
                CHECK(ghw_exact(c, r, b).value == want);
            }
        }
    }
}

TEST_CASE("weight hierarchy") {
    auto f4 = Field::build(2, 2);
    // PRM_2(1) over GF(4) is a [5, 3] MDS code.
    auto prs = prm_generator(f4, 1, 2);
    auto h = weight_hierarchy_exact(prs);
    REQUIRE(h.complete);
    CHECK(h.values.size() == 3);
    for (int r = 1; r <= 3; ++r) CHECK(*h.values[r - 1] == static_cast<std::uint64_t>(5 - 3 + r));

    auto f2 = Field::build(2, 1);
    auto h2 = weight_hierarchy_exact(prm_generator(f2, 2, 1));
    CHECK(h2.strictly_increasing);
    CHECK(*h2.values.back() <= 7);

    Matrix empty(f2, 0, 5);
    CHECK(weight_hierarchy_exact(make_code(empty)).values.empty());
}

TEST_CASE("Wei duality partitions the coordinates") {
    std::mt19937_64 rng(8);
    auto check_pair = [](const LinearCode& c) {
        auto d = dual_code(c);
        auto hc = weight_hierarchy_exact(c), hd = weight_hierarchy_exact(d);
        REQUIRE(hc.complete);
        REQUIRE(hd.complete);
        CHECK(hc.strictly_increasing);
        CHECK(hd.strictly_increasing);
        std::set<std::uint64_t> all;
        for (auto v : hc.values) all.insert(*v);
        for (auto v : hd.values) all.insert(c.n() + 1 - *v);
        CHECK(all.size() == c.n());
        CHECK(*all.begin() == 1);
        CHECK(*all.rbegin() == c.n());
    };
    for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
        auto f = Field::build(p, e);
        for (int t = 0; t < 8; ++t) {
            std::size_t n = 5 + rng() % 8, k = 1 + rng() % (n - 1);
            auto c = random_code(f, k, n, rng);
            if (c.k() == 0 || c.k() == c.n()) continue;
            check_pair(c);
        }
    }
    check_pair(prm_generator(Field::build(2, 1), 2, 1));
    check_pair(prm_generator(Field::build(3, 1), 2, 2));
}
