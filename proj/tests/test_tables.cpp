#include <random>

#include "doctest.h"
#include "prmkit/io.hpp"
#include "prmkit/tables.hpp"

using namespace prmkit;

TEST_CASE("table ids round-trip") {
    for (auto id : all_tables()) CHECK(table_from_string(to_string(id)) == id);
    CHECK_FALSE(table_from_string("q9m9"));
}

TEST_CASE("golden GHW tables are reproduced") {
    GhwEngine eng;
    for (auto id : all_tables()) {
        if (id == TableId::GoodParams) continue;
        auto golden = parse_ghw_cells(golden_source(id));
        REQUIRE_FALSE(golden.empty());
        auto res = check_ghw_table(generate_ghw_table(id, eng), golden);
        INFO(to_string(id));
        for (const auto& m : res.mismatches) INFO(m);
        CHECK(res.pass);
        CHECK(res.mismatches.empty());
    }
}

TEST_CASE("golden cells match the transcription shape") {
    auto cells = parse_ghw_cells(golden_source(TableId::Q3M2));
    CHECK(cells.front() == GhwCell{1, 2, 12, 12});
    auto q3m3 = parse_ghw_cells(golden_source(TableId::Q3M3));
    auto it = std::find_if(q3m3.begin(), q3m3.end(), [](const GhwCell& c) { return c.d == 3 && c.r == 3; });
    REQUIRE(it != q3m3.end());
    CHECK(it->text() == "13-17");
}

TEST_CASE("check mode catches every single-cell perturbation") {
    GhwEngine eng;
    std::mt19937 rng(7);
    for (auto id : {TableId::Q3M2, TableId::Q4M2Bis, TableId::Q3M3}) {
        auto table = generate_ghw_table(id, eng);
        auto golden = parse_ghw_cells(golden_source(id));
        for (std::size_t i = 0; i < golden.size(); ++i) {
            for (int kind = 0; kind < 3; ++kind) {
                auto mutated = golden;
                auto& c = mutated[i];
                if (kind == 0) {
                    ++c.hi;
                    if (c.lo + 1 == c.hi) ++c.lo;  // keep exact cells exact
                } else if (kind == 1) {
                    if (c.lo == 0) continue;
                    --c.lo;
                } else {
                    auto w = 1 + static_cast<std::uint64_t>(rng() % 3);
                    if (c.lo + w == c.hi) ++w;
                    c.hi = c.lo + w;
                }
                REQUIRE(!(c == golden[i]));
                CHECK_FALSE(check_ghw_table(table, mutated).pass);
            }
            auto dropped = golden;
            dropped.erase(dropped.begin() + static_cast<long>(i));
            CHECK_FALSE(check_ghw_table(table, dropped).pass);
        }
    }
}

TEST_CASE("good parameter rows: small codes") {
    auto golden = parse_good_params(golden_source(TableId::GoodParams));
    REQUIRE(golden.size() == 11);
    for (std::size_t i : {0u, 1u, 2u}) {
        const auto& g = golden[i];
        auto row = good_params_row(g.q, g.s, g.m, g.lambda, g.dual);
        CHECK(row.n == g.n);
        CHECK(row.k == g.k);
        CHECK(row.status == DistanceStatus::Exact);
        CHECK(row.d1 >= g.d1);
    }
}

TEST_CASE("matrix formats round-trip") {
    auto f = Field::build(3, 2);
    std::mt19937 rng(1);
    Matrix m(f, 4, 7);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = static_cast<Elem>(rng() % 9);
    for (auto fmt : {MatrixFormat::Txt, MatrixFormat::Csv, MatrixFormat::Json}) {
        auto text = write_matrix(m, fmt);
        CHECK(read_matrix(text, fmt) == m);
        CHECK(read_matrix(text) == m);
    }
    auto txt = write_matrix(prm_generator(Field::build(2, 1), 2, 1).generator, MatrixFormat::Txt);
    CHECK(txt.substr(0, txt.find('\n')) == "2 1 3 7");
    CHECK_THROWS_AS(read_matrix("2 1 1 2\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix("2 1 1 2\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_matrix("{\"schema\":\"other\"}"), std::invalid_argument);
}
