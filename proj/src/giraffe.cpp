#include "knights/giraffe.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

#include "knights/builder2d.hpp"

namespace kt {

namespace {

const char* const kHeel =
    "V-x6 H+x4 V+x5 D-1,4 V-x4 H+x4 V+x3 D-1,4 V-x2 H+x4 V+ D-1,4 H+x4 V+x3";

// heel entry and exit blocks, relative to the left column of its 32-wide window
constexpr int kEntryRow = 6, kExitRow = 3, kExitCol = 28;

const char* const kBottomLeft[] = {
    "11,0 7,1 8,5 7,9 6,5 5,9 6,13 5,17 1,16 0,12 1,8 0,4 4,3 0,2 1,6 0,10 1,14 5,13 4,9 8,10 7,14 3,13 2,17 6,16 5,12 1,11 5,10 6,6 5,2 9,3 13,2",
    "11,1 7,0 8,4 9,0 13,1",
    "11,2 7,3 8,7 7,11 3,10 4,14 3,18 2,14 1,18 0,14 4,13 3,17 2,13 1,17 0,13 1,9 5,8 6,4 5,0 9,1 13,0",
    "11,3 7,2 8,6 7,10 3,11 4,7 3,3 2,7 1,3 0,7 4,8 8,9 7,5 6,9 2,10 3,6 2,2 6,3 10,2 14,3",
    "12,0 8,1 12,2",
    "12,1 8,0 7,4 8,8 7,12 6,8 2,9 1,5 5,6 9,5 10,1 14,0",
    "12,3 8,2 9,6 5,5 4,1 0,0 1,4 0,8 1,12 0,16 4,17 0,18 4,19 5,15 6,19 2,18 6,17 2,16 6,15 5,19 4,15 3,19 2,15 6,14 5,18 1,19 0,15 4,16 3,12 7,13 3,14 7,15 3,16 4,12 8,11 9,7 8,3 7,7 3,8 2,12 6,11 5,7 4,11 3,15 2,19 6,18 5,14 6,10 2,11 6,12 5,16 1,15 0,19 4,18 0,17 1,13 0,9 4,10 0,11 1,7 2,3 6,2 10,3 14,2",
    "13,3 9,4 5,3 9,2 5,1 1,0 2,4 3,0 4,4 0,3 4,2 0,1 4,0 5,4 6,0 2,1 3,5 7,6 3,7 7,8 3,9 4,5 3,1 2,5 1,1 0,5 4,6 3,2 2,6 1,2 0,6 1,10 5,11 6,7 2,8 3,4 2,0 6,1 10,0 14,1"
};

const char* const kTopRight[] = {
    "14,3 10,2 6,3 2,2 1,6 0,2 4,1 0,0 1,4 0,8 1,12 5,11 6,7 7,11 6,15 5,19 1,18 0,14 1,10 0,6 1,2 5,3 9,2 13,3",
    "14,2 10,3 9,7 5,6 9,5 10,1 14,0",
    "14,1 10,0 9,4 8,0 12,1",
    "13,2 9,3 8,7 7,3 11,2",
    "13,1 9,0 5,1 1,0 0,4 1,8 5,7 6,11 2,10 3,6 7,5 8,9 7,13 6,9 5,13 1,14 0,10 4,9 3,5 7,6 8,10 9,6 5,5 6,1 2,0 3,4 2,8 3,12 2,16 6,17 2,18 6,19 5,15 4,19 0,18 4,17 0,16 4,15 3,19 2,15 6,16 7,12 3,11 7,10 3,9 7,8 3,7 4,11 0,12 4,13 3,17 2,13 6,14 5,18 1,19 0,15 4,16 5,12 4,8 0,7 1,3 5,4 6,8 2,9 1,5 0,9 1,13 0,17 4,18 0,19 1,15 2,19 3,15 7,14 3,13 2,17 6,18 5,14 6,10 2,11 6,12 5,16 1,17 0,13 1,9 5,8 4,12 8,11 7,7 3,8 2,4 3,0 7,1 11,0",
    "13,0 9,1 8,5 7,9 6,5 5,9 6,13 5,17 1,16 2,12 3,16 7,15 3,14 4,10 0,11 1,7 0,3 4,2 0,1 4,0 8,1 12,0",
    "12,3 8,2 4,3 8,4 7,0 11,1",
    "12,2 8,3 4,4 0,5 4,6 3,2 2,6 3,10 2,14 3,18 4,14 5,10 1,11 2,7 3,3 4,7 8,8 7,4 6,0 2,1 6,2 2,3 6,4 5,0 1,1 5,2 6,6 2,5 3,1 4,5 8,6 7,2 11,3"
};

std::vector<Cell> parse_cells(const char* text) {
    std::istringstream in(text);
    std::vector<Cell> out;
    int r = 0, c = 0;
    char comma = 0;
    while (in >> r >> comma >> c) out.emplace_back(r, c);
    return out;
}

GiraffeJunction make_junction(Corner corner, const char* const* rows, std::size_t n) {
    GiraffeJunction j;
    j.corner = corner;
    for (std::size_t i = 0; i < n; ++i) j.paths.push_back(parse_cells(rows[i]));
    return j;
}

int slot_in_block(const Cell& c) {
    const int i = c[0] - kGiraffeBlock[0], j = c[1] - kGiraffeBlock[1];
    return i >= 0 && i < 4 && j >= 0 && j < 4 ? i * 4 + j : -1;
}

}  // namespace

const char* name(GiraffeSeq s) {
    switch (s) {
        case GiraffeSeq::U: return "U";
        case GiraffeSeq::Heel: return "HEEL";
        case GiraffeSeq::FlippedHeel: return "FLIPPED_HEEL";
    }
    return "?";
}

const std::vector<FMove>& giraffe_moves(GiraffeSeq s) {
    static const std::vector<FMove> u = parse_fmoves("V+x4");
    static const std::vector<FMove> heel = parse_fmoves(kHeel);
    // the heel walked backwards and turned by a half turn: both flips cancel move by move
    static const std::vector<FMove> flipped(heel.rbegin(), heel.rend());
    switch (s) {
        case GiraffeSeq::U: return u;
        case GiraffeSeq::Heel: return heel;
        case GiraffeSeq::FlippedHeel: return flipped;
    }
    throw std::invalid_argument("unknown giraffe sequence");
}

GiraffePerm giraffe_effect(const std::vector<FMove>& seq) {
    Formation f(Cell(0, 0), 4, false);
    f.apply(seq);
    GiraffePerm p{};
    for (int q = 0; q < 16; ++q) p[q] = f.slot_of(q);
    return p;
}

GiraffePerm giraffe_state_effect(GiraffeSeq s) { return giraffe_effect(giraffe_moves(s)); }

GiraffePerm column_swap() {
    GiraffePerm p{};
    for (int q = 0; q < 16; ++q) p[q] = q ^ 1;
    return p;
}

GiraffePerm compose(const GiraffePerm& first, const GiraffePerm& then) {
    GiraffePerm p{};
    for (int q = 0; q < 16; ++q) p[q] = then[first[q]];
    return p;
}

std::vector<Cell> GiraffeJunction::region() const {
    std::vector<Cell> out;
    for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) out.push_back(p[i]);
    std::sort(out.begin(), out.end());
    return out;
}

const GiraffeJunction& giraffe_junction(Corner c) {
    static const GiraffeJunction bl = make_junction(Corner::BottomLeft, kBottomLeft, std::size(kBottomLeft));
    static const GiraffeJunction tr = make_junction(Corner::TopRight, kTopRight, std::size(kTopRight));
    return c == Corner::BottomLeft ? bl : tr;
}

std::string check_giraffe_junctions() {
    std::array<std::array<int, 16>, 2> match{};
    int which = 0;
    for (Corner corner : {Corner::BottomLeft, Corner::TopRight}) {
        const GiraffeJunction& j = giraffe_junction(corner);
        std::set<Cell> seen;
        std::array<int, 16>& m = match[which++];
        m.fill(-1);
        for (const auto& p : j.paths) {
            if (p.size() < 3) return "junction path too short";
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (!is_leaper_move(p[i], p[i + 1], Leaper::giraffe()))
                    return "not a giraffe move: " + to_string(p[i]) + " " + to_string(p[i + 1]);
            for (std::size_t i = 0; i < p.size(); ++i) {
                const int s = slot_in_block(p[i]);
                const bool end = i == 0 || i + 1 == p.size();
                if (end != (s >= 0)) return "path ends must be exactly the block cells: " + to_string(p[i]);
                if (!seen.insert(p[i]).second) return "cell used twice: " + to_string(p[i]);
            }
            const int a = slot_in_block(p.front()), b = slot_in_block(p.back());
            m[a] = b;
            m[b] = a;
        }
        for (int x : m)
            if (x < 0) return "block cell without a junction path";
    }
    // the top-right frame is turned by a half turn, so its slot q is slot 15-q of the block
    int q = 0, len = 0;
    bool bottom = true;
    do {
        q = bottom ? match[0][q] : 15 - match[1][15 - q];
        bottom = !bottom;
        ++len;
    } while (!(q == 0 && bottom) && len <= 32);
    if (len != 16) return "junction matchings split into several cycles";
    return {};
}

bool giraffe_dims_ok(int w, int h) { return w >= 52 && (w - 20) % 32 == 0 && h >= 22 && (h - 14) % 8 == 0; }

std::vector<FMove> giraffe_zigzag(int w, int h) {
    if (!giraffe_dims_ok(w, h))
        throw UnsupportedDims("giraffe tours need w = 32k+20 and h = 8l+14 with k, l >= 1, got " + std::to_string(w) + "x" +
                              std::to_string(h));
    std::set<std::pair<int, int>> heel_at, flip_at;
    for (int c0 = w - 32; c0 >= 0; c0 -= 32) {
        heel_at.insert({kEntryRow, c0});
        flip_at.insert({h - 4 - kExitRow, w - 4 - (c0 + kExitCol)});
    }
    const int dr = kExitRow - kEntryRow, dc = kExitCol;
    std::pair<int, int> o{kGiraffeBlock[0], kGiraffeBlock[1]};
    const std::pair<int, int> end{h - 4 - kGiraffeBlock[0], w - 4 - kGiraffeBlock[1]};
    std::vector<FMove> out;
    bool down = true;
    auto add = [&](GiraffeSeq s) {
        const auto& m = giraffe_moves(s);
        out.insert(out.end(), m.begin(), m.end());
    };
    while (o != end) {
        if (down && heel_at.count(o)) {
            add(GiraffeSeq::Heel);
            o = {o.first + dr, o.second + dc};
            down = false;
        } else if (!down && flip_at.count(o)) {
            add(GiraffeSeq::FlippedHeel);
            o = {o.first + dr, o.second + dc};
            down = true;
        } else if (o.second == (down ? w - 4 : 0)) {
            add(GiraffeSeq::U);
            o.first += 4;
            down = !down;
        } else {
            const FMove m = down ? FMove::d(-1, 4) : FMove::d(1, -4);
            out.push_back(m);
            o = {o.first + m.dr, o.second + m.dc};
            if (o.first < 0 || o.first > h - 4 || o.second < 0 || o.second > w - 4)
                throw std::logic_error("giraffe zigzag leaves the board");
        }
    }
    return out;
}

Tour build_giraffe(const BoardDims& dims) {
    if (dims.dim() != 2) throw UnsupportedDims("giraffe tours are 2D");
    const int w = dims.width(), h = dims.height();
    const std::vector<FMove> moves = giraffe_zigzag(w, h);
    std::vector<Token> tokens;
    tokens.reserve(moves.size());
    for (const FMove& m : moves) tokens.push_back({Token::Run, m, 1, -1});
    PathSet ps = run_tokens(dims, kGiraffeBlock, 4, tokens, {});
    std::vector<std::vector<Cell>> pieces = ps.paths;
    for (const auto& p : giraffe_junction(Corner::BottomLeft).paths) pieces.push_back(p);
    for (auto p : giraffe_junction(Corner::TopRight).paths) {
        for (Cell& c : p) c = Cell(h - 1 - c[0], w - 1 - c[1]);
        pieces.push_back(std::move(p));
    }
    const auto& first = giraffe_junction(Corner::BottomLeft).paths.front();
    return {dims, Leaper::giraffe(), stitch(dims, pieces, first[0], first[1], dims.size()), true};
}

}  // namespace kt
