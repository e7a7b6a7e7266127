#pragma once

#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/matching.hpp"

namespace kt {

// One move of an s x s formation. D translates every member by (dr, dc) in the
// plane of axes 0,1, plus dz along `axis` when axis >= 2. V moves the block one
// row (dr = +1 or -1), H one column (dc = +1 or -1); the leaving row or column
// jumps over the block with neighbouring members swapped.
struct FMove {
    MoveKind kind = MoveKind::D;
    int dr = 0, dc = 0;
    int axis = -1, dz = 0;

    static FMove d(int dr, int dc) { return {MoveKind::D, dr, dc}; }
    static FMove v(int s) { return {MoveKind::V, s, 0}; }
    static FMove h(int s) { return {MoveKind::H, 0, s}; }
    static FMove cross(int dr, int dc, int axis, int dz) { return {MoveKind::D, dr, dc, axis, dz}; }

    friend bool operator==(const FMove&, const FMove&) = default;
};

std::string to_string(const FMove& m);
// tokens like "D-1,2", "V+", "H-", "Z1,0,2,1" (dr,dc,axis,dz)
FMove parse_fmove(const std::string& tok);
// whitespace separated tokens; "D-1,2x3" repeats a move
std::vector<FMove> parse_fmoves(const std::string& text);
std::vector<MoveKind> kinds(const std::vector<FMove>& seq);
// a leaper is at least as long as the formation edge, so the block vector of D
// must itself be a leaper move
bool valid_fmove(const FMove& m, int size, const Leaper& l);

// A member's jump in one move. Slots are i*size + j, i the row offset.
struct Landing {
    int slot_before;
    int slot_after;
    int dr, dc;  // landing cell relative to the origin before the move
};

std::vector<Landing> landings(const FMove& m, int size);
// net displacement of the block origin
std::array<int, 2> displacement(const FMove& m);

class Formation {
public:
    Formation(const Cell& origin, int size, bool record_paths = true);

    const Cell& origin() const { return origin_; }
    int size() const { return size_; }
    int members() const { return size_ * size_; }
    int member_at(int slot) const { return slot_[slot]; }
    int slot_of(int member) const;
    Cell slot_cell(int slot) const;
    std::vector<Cell> block() const;
    // cells occupied by the move that the block does not cover now
    std::vector<Cell> entering(const FMove& m) const;
    void apply(const FMove& m);
    void apply(const std::vector<FMove>& seq) {
        for (const FMove& m : seq) apply(m);
    }
    const std::vector<std::vector<Cell>>& paths() const { return paths_; }

private:
    Cell origin_;
    int size_;
    bool record_;
    std::vector<int> slot_;
    std::vector<std::vector<Cell>> paths_;
};

}  // namespace kt
