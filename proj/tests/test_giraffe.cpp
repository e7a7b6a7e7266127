#include <doctest.h>

#include <set>

#include "knights/giraffe.hpp"
#include "knights/metrics.hpp"
#include "knights/validator.hpp"

using namespace kt;

namespace {

GiraffePerm identity() {
    GiraffePerm p{};
    for (int i = 0; i < 16; ++i) p[i] = i;
    return p;
}

}  // namespace

TEST_CASE("sequence effects") {
    const GiraffePerm U = giraffe_state_effect(GiraffeSeq::U);
    CHECK(compose(U, U) == identity());
    CHECK(giraffe_state_effect(GiraffeSeq::Heel) == U);
    CHECK(giraffe_state_effect(GiraffeSeq::FlippedHeel) == U);
    CHECK(U == column_swap());
    GiraffePerm acc = identity();
    for (int m = 1; m <= 6; ++m) {
        acc = compose(acc, compose(U, U));
        CHECK(acc == identity());
    }
}

TEST_CASE("heel paths are giraffe paths") {
    Formation f(Cell(100, 100), 4, true);
    for (int i = 0; i < 3; ++i) f.apply(FMove::d(-1, 4));
    f.apply(giraffe_moves(GiraffeSeq::Heel));
    for (int i = 0; i < 3; ++i) f.apply(FMove::d(1, -4));
    std::set<Cell> seen;
    CHECK(f.paths().size() == 16);
    for (const auto& p : f.paths())
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(seen.insert(p[i]).second);
            if (i) CHECK(is_leaper_move(p[i - 1], p[i], Leaper::giraffe()));
        }
    for (const FMove& m : giraffe_moves(GiraffeSeq::Heel)) CHECK(valid_fmove(m, 4, Leaper::giraffe()));
}

TEST_CASE("flipped heel is the heel reversed") {
    auto h = giraffe_moves(GiraffeSeq::Heel);
    auto f = giraffe_moves(GiraffeSeq::FlippedHeel);
    REQUIRE(h.size() == f.size());
    for (std::size_t i = 0; i < h.size(); ++i) CHECK(f[i] == h[h.size() - 1 - i]);
}

TEST_CASE("junctions") {
    CHECK(check_giraffe_junctions() == "");
    for (Corner c : {Corner::BottomLeft, Corner::TopRight}) {
        const GiraffeJunction& j = giraffe_junction(c);
        CHECK(j.paths.size() == 8);
        std::set<Cell> ends;
        for (const auto& p : j.paths) {
            ends.insert(p.front());
            ends.insert(p.back());
        }
        std::set<Cell> block;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) block.insert(Cell(kGiraffeBlock[0] + i, kGiraffeBlock[1] + k));
        CHECK(ends == block);
    }
}

TEST_CASE("giraffe boards") {
    Tour t = build_giraffe(BoardDims::wh(52, 30));
    CHECK(t.size() == 1560);
    CHECK(t.leaper == Leaper::giraffe());
    CHECK(validate(t).ok());
    CHECK(validate(build_giraffe(BoardDims::wh(84, 30))).ok());
    CHECK_THROWS_AS(build_giraffe(BoardDims::wh(50, 30)), UnsupportedDims);
    CHECK_THROWS_AS(build_giraffe(BoardDims::wh(52, 28)), UnsupportedDims);
    CHECK_THROWS_AS(build_giraffe(BoardDims::wh(20, 14)), UnsupportedDims);
    CHECK(giraffe_dims_ok(52, 22));
    CHECK_FALSE(giraffe_dims_ok(20, 22));
}

TEST_CASE("giraffe sweep") {
    for (int w : {52, 84, 116})
        for (int h : {22, 30, 38, 46}) {
            INFO(w, "x", h);
            CHECK(validate(build_giraffe(BoardDims::wh(w, h))).ok());
        }
}

TEST_CASE("giraffe turns grow linearly") {
    auto turns = [](int w, int h) { return measure(build_giraffe(BoardDims::wh(w, h))).turns; };
    long long a = turns(52, 30), b = turns(84, 30), c = turns(116, 30);
    CHECK(c - b == b - a);
    long long d = turns(52, 38), e = turns(52, 46);
    CHECK(e - d == d - a);
}
