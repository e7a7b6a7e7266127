#include <doctest.h>

#include <map>
#include <random>

#include "knights/builder2d.hpp"
#include "knights/validator.hpp"

using namespace kt;

TEST_CASE("plan parameters on 30x30") {
    TourPlan p = plan(BoardDims::wh(30, 30));
    CHECK(p.top_height == 5);
    CHECK(p.bottom_id == 1);
    CHECK(p.length() == 900);
}

TEST_CASE("plan parameters cycle with the board size") {
    for (int w = 16; w <= 40; w += 2)
        for (int h = 12; h <= 40; ++h) {
            TourPlan p = plan(BoardDims::wh(w, h));
            CHECK(p.top_height == 5 + (w / 2 + h - 1) % 4);
            CHECK(p.bottom_id == (w / 2 + 2) % 4);
        }
}

TEST_CASE("junction contracts") {
    CHECK(check_junction(junction_local(5, Matching::Horizontal)) == "");
    for (int h = 5; h <= 9; ++h) CHECK(check_junction(junction_local(h, Matching::Vertical)) == "");
}

TEST_CASE("traversal effect closes one cycle") {
    for (int w = 16; w <= 64; w += 2)
        for (int h : {12, 13, 14, 15, 21, 30, 47}) {
            TourPlan p = plan(BoardDims::wh(w, h));
            std::string e = p.effect().word();
            CHECK((e == "D" || e == "V"));
            CHECK(single_cycle(Matching::Horizontal, p.effect(), Matching::Vertical));
        }
}

TEST_CASE("pieces partition the 16x12 board") {
    TourPlan p = plan(BoardDims::wh(16, 12));
    PathSet ps = run_tokens(BoardDims({p.h, p.w}), p.start_origin, 2, p.tokens, p.gadgets);
    std::vector<std::vector<Cell>> pieces = ps.paths;
    for (const auto* j : {&p.bottom, &p.top}) {
        pieces.push_back(j->cells_a);
        pieces.push_back(j->cells_b);
    }
    std::map<Cell, int> inner, ends;
    for (const auto& path : pieces)
        for (std::size_t i = 0; i < path.size(); ++i) {
            bool end = i == 0 || i + 1 == path.size();
            ++(end ? ends : inner)[path[i]];
        }
    CHECK(inner.size() + ends.size() == 192);
    for (auto& [c, n] : inner) {
        CHECK(n == 1);
        CHECK(ends.count(c) == 0);
    }
    for (auto& [c, n] : ends) CHECK(n == 2);
}

TEST_CASE("build small boards") {
    Tour t = build(BoardDims::wh(16, 12));
    CHECK(t.size() == 192);
    CHECK(t.closed);
    CHECK(validate(t).ok());

    Tour odd = build(BoardDims::wh(17, 16));
    CHECK(odd.dims == BoardDims::wh(17, 16));
    CHECK(odd.size() == 272);
    CHECK(validate(odd).ok());

    CHECK_THROWS_AS(build(BoardDims::wh(14, 12)), UnsupportedDims);
    CHECK_THROWS_AS(build(BoardDims::wh(16, 11)), UnsupportedDims);
    CHECK_THROWS_AS(build(BoardDims::wh(17, 13)), UnsupportedDims);
    CHECK_THROWS_AS(build(BoardDims({12, 16, 5})), UnsupportedDims);
}

TEST_CASE("indexing matches the materialized tour") {
    for (auto [w, h] : {std::pair{16, 12}, {24, 20}, {30, 30}, {17, 16}, {48, 40}, {34, 27}}) {
        TourPlan p = plan(BoardDims::wh(w, h));
        Tour t = build(p);
        REQUIRE(static_cast<long long>(t.size()) == p.length());
        for (long long k = 0; k < p.length(); ++k) {
            REQUIRE(cell_at(p, k) == t.cells[k]);
            REQUIRE(index_of(p, t.cells[k]) == k);
        }
    }
}

TEST_CASE("index endpoints") {
    TourPlan p = plan(BoardDims::wh(30, 30));
    Cell first = cell_at(p, 0), last = cell_at(p, p.length() - 1);
    CHECK(is_leaper_move(last, first, Leaper::knight()));
    Tour t = build(p);
    CHECK(first == t.cells.front());
    CHECK_THROWS(cell_at(p, p.length()));
    CHECK_THROWS(cell_at(p, -1));
    CHECK_THROWS(index_of(p, Cell(30, 0)));
}

TEST_CASE("indexing on a large board is self-consistent") {
    TourPlan p = plan(BoardDims::wh(300, 300));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        long long k = static_cast<long long>(rng() % p.length());
        Cell c = cell_at(p, k);
        REQUIRE(index_of(p, c) == k);
        Cell n = cell_at(p, (k + 1) % p.length());
        REQUIRE(is_leaper_move(c, n, Leaper::knight()));
    }
}

TEST_CASE("validity sweep") {
    for (int w = 16; w <= 40; w += 2)
        for (int h = 12; h <= 40; ++h) {
            Tour t = build(BoardDims::wh(w, h));
            Verdict v = validate(t);
            INFO(w, "x", h, ": ", v.message());
            CHECK(v.ok());
        }
}
