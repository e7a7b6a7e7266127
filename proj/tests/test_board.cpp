#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "knights/board.hpp"

using namespace kt;

TEST_CASE("knight and giraffe moves") {
    CHECK(is_leaper_move(Cell(0, 0), Cell(1, 2), Leaper::knight()));
    CHECK_FALSE(is_leaper_move(Cell(0, 0), Cell(2, 2), Leaper::knight()));
    CHECK(is_leaper_move(Cell{0, 0, 0}, Cell{0, 1, 2}, Leaper::knight()));
    CHECK_FALSE(is_leaper_move(Cell{0, 0, 0}, Cell{1, 1, 2}, Leaper::knight()));
    CHECK(is_leaper_move(Cell(0, 0), Cell(1, 4), Leaper::giraffe()));
    CHECK_FALSE(is_leaper_move(Cell(0, 0), Cell(1, 2), Leaper::giraffe()));
    CHECK_THROWS(is_leaper_move(Cell(0, 0), Cell{0, 1, 2}, Leaper::knight()));
}

TEST_CASE("neighbors") {
    auto corner = neighbors(Cell(0, 0), BoardDims::wh(8, 8), Leaper::knight());
    std::set<Cell> got(corner.begin(), corner.end());
    CHECK(got == std::set<Cell>{Cell(1, 2), Cell(2, 1)});
    CHECK(neighbors(Cell(4, 4), BoardDims::wh(9, 9), Leaper::knight()).size() == 8);
    CHECK(neighbors(Cell(0, 2), BoardDims::wh(40, 40), Leaper::knight()).size() == 4);
    CHECK(neighbors(Cell{2, 2, 2}, BoardDims({5, 5, 5}), Leaper::knight()).size() == 24);
    CHECK(neighbors(Cell{1, 1, 1}, BoardDims({5, 5, 5}), Leaper::knight()).size() == 12);
    CHECK(leaper_offsets(3, Leaper::knight()).size() == 24);
    CHECK(leaper_offsets(2, Leaper::giraffe()).size() == 8);
}

TEST_CASE("neighbor relation is symmetric") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        int d = 2 + static_cast<int>(rng() % 2);
        std::vector<int> dv;
        for (int k = 0; k < d; ++k) dv.push_back(3 + static_cast<int>(rng() % 6));
        BoardDims dims(dv);
        Leaper l = rng() % 2 ? Leaper::knight() : Leaper::giraffe();
        Cell c = dims.unlinear(static_cast<long long>(rng() % dims.size()));
        for (const Cell& n : neighbors(c, dims, l)) {
            CHECK(dims.contains(n));
            CHECK(is_leaper_move(c, n, l));
            auto back = neighbors(n, dims, l);
            CHECK(std::find(back.begin(), back.end(), c) != back.end());
        }
    }
}

TEST_CASE("linear index roundtrip") {
    BoardDims dims({3, 4, 5});
    CHECK(dims.size() == 60);
    for (long long i = 0; i < dims.size(); ++i) CHECK(dims.linear(dims.unlinear(i)) == i);
    CHECK_FALSE(dims.contains(Cell{3, 0, 0}));
    CHECK_FALSE(dims.contains(Cell(0, 0)));
}

TEST_CASE("tour capable leapers") {
    CHECK(Leaper::knight().tour_capable());
    CHECK(Leaper::giraffe().tour_capable());
    CHECK_FALSE(Leaper(1, 3).tour_capable());
    CHECK_FALSE(Leaper(2, 4).tour_capable());
}
