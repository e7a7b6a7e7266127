#pragma once

#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/formation.hpp"
#include "knights/matching.hpp"
#include "knights/metrics.hpp"

namespace kt {

enum class Corner { BottomLeft, TopRight };

// Two disjoint knight paths covering a corner region. In the local frame the
// formation's first block sits at rows height, height+1 of columns 0,1;
// cells_a starts at (height+1, 0).
struct JunctionSpec {
    Corner corner = Corner::BottomLeft;
    int height = 5;
    Matching matching = Matching::Horizontal;
    std::vector<Cell> cells_a, cells_b;

    std::vector<Cell> region() const;
    // the 2x2 block the paths end on
    std::vector<Cell> interface() const;
};

// local-frame junction; Horizontal exists for height 5, Vertical for 5..9
JunctionSpec junction_local(int height, Matching m);
// rotate a local junction into the top-right corner of a w x h board
JunctionSpec place_top_right(const JunctionSpec& local, int w, int h);
// empty string when the contract holds, else the first problem
std::string check_junction(const JunctionSpec& j);

// A part of a corner sequence. Bottom-right parts fire when the formation,
// moving down-right, reaches block (row, w + col_from_right).
struct CornerPart {
    int row = 0;
    int col_from_right = 0;
    std::vector<FMove> moves;
};

struct CornerSequenceSpec {
    int id = 1;
    std::vector<CornerPart> parts;  // id 1: the heel, untriggered (row/col unused)

    std::vector<FMove> all_moves() const;
    GroupElement effect() const { return compose(kinds(all_moves())); }
};

const std::vector<FMove>& heel_moves();
std::vector<FMove> reversed(const std::vector<FMove>& seq);
// Turns and crossings of the member paths of a sequence walked between two
// straight runs of `lead` moves (`in` before, `out` after).
MetricsReport sequence_metrics(const std::vector<FMove>& seq, const FMove& in, const FMove& out, int size = 2,
                               int lead = 2);
CornerSequenceSpec corner_sequence(int id);
// cells entered by the parts of a sequence on a board of width w (bottom-right frame)
std::vector<Cell> corner_footprint(const CornerSequenceSpec& s, int w);

}  // namespace kt
