#pragma once

#include <array>
#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/formation.hpp"
#include "knights/gadgets.hpp"
#include "knights/matching.hpp"

namespace kt {

// Fixed move list with everything the indexer needs precomputed.
struct GadgetTable {
    std::string name;
    std::vector<FMove> moves;
    int size = 2;
    std::array<int, 2> disp{};
    std::vector<int> perm;                                  // slot before -> slot after
    std::vector<std::vector<std::array<int, 2>>> landing;   // per start slot, relative to the start origin
    // footprint lookup over a bounding box: (start slot, step) or (-1, -1)
    int r0 = 0, c0 = 0, rows = 0, cols = 0;
    std::vector<std::array<int, 2>> at;

    static GadgetTable make(std::string name, std::vector<FMove> moves, int size = 2);
    const std::array<int, 2>* lookup(int dr, int dc) const;
};

struct Token {
    enum Type { Run, Gadget } type = Run;
    FMove step{};          // Run: the repeated move
    long long length = 0;  // Run: repetitions
    int gadget = -1;       // Gadget: index into the plan's tables
};

// Consecutive rounds of tokens whose run lengths and origins are affine in the round.
struct Family {
    int first_token = 0, period = 1;
    long long rounds = 1;
    std::vector<Token> pattern;
    std::vector<long long> dlen;
    std::vector<std::array<long long, 2>> tok_origin, tok_delta;
    std::array<int, 4> member_at{}, slot_of{};
    int order = 1;
    std::vector<std::array<int, 4>> pow, inv_pow;      // round permutation powers on slots
    std::array<std::vector<int>, 4> slot_at_token;     // by slot at round start
    std::array<std::vector<long long>, 4> gsteps;      // gadget steps before each position, by slot at round start
    std::array<std::vector<long long>, 4> gcycle;      // prefix over rounds of gadget steps, by slot at family start
    long long run_a = 0, run_b = 0;                    // run steps of round r: run_a + run_b * r
    std::array<long long, 4> base{}, total{};          // member steps before / inside the family
};

struct CycleSegment {
    enum Kind { Junction, Member } kind = Junction;
    std::vector<Cell> cells;  // Junction
    int member = -1;
    bool forward = true;
    long long length = 0;
    long long start = 0;
};

struct TourPlan {
    BoardDims dims;
    bool transposed = false;
    int w = 0, h = 0;  // working frame: w even
    int top_height = 5, bottom_id = 1, top_id = 1;
    bool cut_corner = false;
    bool odd_left = false;  // an extra column sits left of column 0
    JunctionSpec bottom, top;
    std::vector<GadgetTable> gadgets;
    std::vector<Token> tokens;
    std::vector<std::array<long long, 2>> token_origin;  // origin before each token, plus the final one
    Cell start_origin, end_origin;
    std::vector<Family> families;
    std::array<long long, 4> member_steps{};
    std::array<Cell, 4> member_end;
    std::vector<CycleSegment> cycle;
    std::vector<std::pair<long long, long long>> junction_index;  // (row*w+col, cycle index), sorted

    long long length() const { return static_cast<long long>(w) * h; }
    std::vector<FMove> moves() const;
    GroupElement effect() const { return compose(kinds(moves())); }
};

struct ZigzagOptions {
    int top_height = 0;     // 0: the natural height for (w, h)
    bool odd_left = false;
};
// formation moves from block (5,0) to the end block of a w x h frame, w even; no junctions
TourPlan zigzag(int w, int h, const ZigzagOptions& opt = {});

TourPlan plan(const BoardDims& dims);
Tour build(const TourPlan& p);
Tour build(const BoardDims& dims);
Cell cell_at(const TourPlan& p, long long index);
long long index_of(const TourPlan& p, const Cell& c);

// shared with the other builders
struct PathSet {
    std::vector<std::vector<Cell>> paths;  // per member, start cell first
};
// applies the tokens; throws std::logic_error if a cell is entered twice or leaves the board
PathSet run_tokens(const BoardDims& dims, const Cell& start, int size, const std::vector<Token>& tokens,
                   const std::vector<GadgetTable>& gadgets, std::vector<char>* seen = nullptr);
// closes member paths and junction paths into one cycle, walking from `start` towards `next`;
// throws std::logic_error unless the union is a single cycle through all given cells
std::vector<Cell> stitch(const BoardDims& dims, const std::vector<std::vector<Cell>>& pieces, const Cell& start,
                         const Cell& next, long long expected);

}  // namespace kt
