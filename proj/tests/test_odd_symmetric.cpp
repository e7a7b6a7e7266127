#include <doctest.h>

#include <algorithm>
#include <set>

#include "knights/builder2d.hpp"
#include "knights/metrics.hpp"
#include "knights/odd_symmetric.hpp"
#include "knights/validator.hpp"

using namespace kt;

namespace {

bool has_edge(const Tour& t, const Cell& a, const Cell& b) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Cell& x = t.cells[i];
        const Cell& y = t.cells[(i + 1) % t.size()];
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("odd junction") {
    JunctionSpec j = odd_junction();
    std::set<Cell> cells;
    for (const auto* p : {&j.cells_a, &j.cells_b})
        for (std::size_t i = 0; i < p->size(); ++i) {
            CHECK(cells.insert((*p)[i]).second);
            if (i) CHECK(is_leaper_move((*p)[i - 1], (*p)[i], Leaper::knight()));
        }
    CHECK(cells.count(Cell(0, 0)) == 0);
    for (int r = 1; r <= 6; ++r) CHECK(cells.count(Cell(r, 0)) == 1);
    std::set<Cell> ends{j.cells_a.front(), j.cells_a.back(), j.cells_b.front(), j.cells_b.back()};
    auto iface = j.interface();
    CHECK(ends == std::set<Cell>(iface.begin(), iface.end()));
}

TEST_CASE("odd boards") {
    Tour t = build_odd(BoardDims::wh(17, 13));
    CHECK(t.size() == 220);
    CHECK(validate(t, {Cell(0, 0)}).ok());
    CHECK(has_edge(t, Cell(0, 1), Cell(2, 0)));
    CHECK(std::find(t.cells.begin(), t.cells.end(), Cell(0, 0)) == t.cells.end());

    CHECK_THROWS_AS(build_odd(BoardDims::wh(15, 13)), UnsupportedDims);
    CHECK_THROWS_AS(build_odd(BoardDims::wh(17, 11)), UnsupportedDims);
    CHECK_THROWS_AS(build_odd(BoardDims::wh(18, 13)), UnsupportedDims);
}

TEST_CASE("odd sweep") {
    for (int w = 17; w <= 41; w += 2)
        for (int h = 13; h <= 41; h += 2) {
            Tour t = build_odd(BoardDims::wh(w, h));
            INFO(w, "x", h);
            CHECK(validate(t, {Cell(0, 0)}).ok());
            CHECK(has_edge(t, Cell(0, 1), Cell(2, 0)));
        }
}

TEST_CASE("symmetric tours") {
    for (int n : {38, 42, 46, 50}) {
        Tour t = build_symmetric(n);
        INFO(n);
        CHECK(t.size() == static_cast<std::size_t>(n) * n);
        CHECK(validate(t).ok());
        CHECK(quarter_turn_symmetric(t));
        MetricsReport m = measure(t);
        CHECK(m.turns == count_turns(t.cells, true));
    }
    CHECK_THROWS_AS(build_symmetric(40), UnsupportedDims);
    CHECK_THROWS_AS(build_symmetric(30), UnsupportedDims);
    CHECK(validate(build_symmetric(34)).ok());
    CHECK_THROWS_AS(build_symmetric(39), UnsupportedDims);
}

TEST_CASE("symmetry check") {
    Tour q = build_symmetric(38);
    for (Cell& c : q.cells) c = Cell(c.row(), 37 - c.col());
    CHECK(validate(q).ok());
    CHECK(quarter_turn_symmetric(q));
    CHECK_FALSE(quarter_turn_symmetric(build(BoardDims::wh(38, 38))));
}
