#include <doctest.h>

#include <algorithm>
#include <set>

#include "knights/matching.hpp"

using namespace kt;

namespace {
GroupElement g(const char* w) { return GroupElement::from_word(w); }
}

TEST_CASE("single move action") {
    using M = Matching;
    using K = MoveKind;
    CHECK(apply(K::D, M::Horizontal) == M::Horizontal);
    CHECK(apply(K::D, M::Vertical) == M::Vertical);
    CHECK(apply(K::D, M::Cross) == M::Cross);
    CHECK(apply(K::V, M::Horizontal) == M::Horizontal);
    CHECK(apply(K::V, M::Vertical) == M::Cross);
    CHECK(apply(K::V, M::Cross) == M::Vertical);
    CHECK(apply(K::H, M::Horizontal) == M::Cross);
    CHECK(apply(K::H, M::Vertical) == M::Vertical);
    CHECK(apply(K::H, M::Cross) == M::Horizontal);
}

TEST_CASE("compose words") {
    CHECK(compose(parse_word("VV")).word() == "D");
    CHECK(compose(parse_word("VVHHVHHV")).word() == "D");
    CHECK(compose({}).word() == "D");
    CHECK(compose(parse_word("VHV")).word() == "VHV");
    CHECK(compose(parse_word("HVH")).word() == "VHV");
    CHECK(compose(parse_word("VHVH")).word() == "HV");
}

TEST_CASE("cayley table") {
    auto t = cayley_table();
    const auto& e = group_elements();
    auto idx = [&](const char* w) {
        return static_cast<int>(std::find(e.begin(), e.end(), g(w)) - e.begin());
    };
    CHECK(t[idx("V")][idx("H")].word() == "VH");
    CHECK(t[idx("VH")][idx("HV")].word() == "D");
    const char* expect[6][6] = {
        {"D", "V", "H", "VH", "HV", "VHV"},
        {"V", "D", "VH", "H", "VHV", "HV"},
        {"H", "HV", "D", "VHV", "V", "VH"},
        {"VH", "VHV", "V", "HV", "D", "H"},
        {"HV", "H", "VHV", "D", "VH", "V"},
        {"VHV", "VH", "HV", "V", "H", "D"},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(t[i][j].word() == expect[i][j]);
}

TEST_CASE("group axioms") {
    const auto& e = group_elements();
    for (const auto& a : e) {
        CHECK(a.then(GroupElement::identity()) == a);
        CHECK(a.then(a.inverse()) == GroupElement::identity());
        for (const auto& b : e)
            for (const auto& c : e) CHECK(a.then(b).then(c) == a.then(b.then(c)));
    }
    std::multiset<int> orders;
    for (const auto& a : e) orders.insert(a.order());
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("every word of length 8 folds to its letter-wise product") {
    const MoveKind ks[3] = {MoveKind::D, MoveKind::V, MoveKind::H};
    for (int code = 0; code < 6561; ++code) {
        std::vector<MoveKind> seq;
        GroupElement acc;
        int c = code;
        for (int i = 0; i < 8; ++i, c /= 3) {
            seq.push_back(ks[c % 3]);
            acc = acc.then(GroupElement::of(ks[c % 3]));
        }
        REQUIRE(compose(seq) == acc);
        for (Matching m : {Matching::Horizontal, Matching::Vertical, Matching::Cross}) {
            Matching x = m;
            for (MoveKind k : seq) x = apply(k, x);
            REQUIRE(acc(m) == x);
        }
    }
}

TEST_CASE("junction matchings joined through the effect") {
    CHECK(single_cycle(Matching::Horizontal, g("D"), Matching::Vertical));
    CHECK(single_cycle(Matching::Horizontal, g("V"), Matching::Vertical));
    CHECK_FALSE(single_cycle(Matching::Horizontal, g("D"), Matching::Horizontal));
    CHECK(single_cycle(Matching::Horizontal, g("H"), Matching::Vertical));
    CHECK_FALSE(single_cycle(Matching::Horizontal, g("HV"), Matching::Vertical));
}
