#pragma once

#include <array>
#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/formation.hpp"
#include "knights/gadgets.hpp"

namespace kt {

// 4x4 formation of (1,4) leapers. A permutation maps a member's slot before a
// sequence to its slot after; slots are i*4 + j.
using GiraffePerm = std::array<int, 16>;

enum class GiraffeSeq { U, Heel, FlippedHeel };

const char* name(GiraffeSeq s);
const std::vector<FMove>& giraffe_moves(GiraffeSeq s);
GiraffePerm giraffe_effect(const std::vector<FMove>& seq);
GiraffePerm giraffe_state_effect(GiraffeSeq s);
// j -> j^1 in every row
GiraffePerm column_swap();
GiraffePerm compose(const GiraffePerm& first, const GiraffePerm& then);

// Paths of one corner, each joining two cells of the formation block. Bottom-left
// paths are in board coordinates. Top-right paths are in the frame turned by a
// half turn, (h-1-r, w-1-c).
struct GiraffeJunction {
    Corner corner = Corner::BottomLeft;
    std::vector<std::vector<Cell>> paths;

    // cells strictly inside the paths
    std::vector<Cell> region() const;
};

// block origin of the formation in either junction's local frame
inline const Cell kGiraffeBlock{11, 0};

const GiraffeJunction& giraffe_junction(Corner c);
// empty when both junctions hold: disjoint giraffe paths, ends exactly the block,
// and the two end matchings joined slot to slot form one cycle through all 16 slots
std::string check_giraffe_junctions();

// true for w = 32k+20 and h = 8l+14, k, l >= 1
bool giraffe_dims_ok(int w, int h);
// formation moves from the bottom-left block to the top-right block
std::vector<FMove> giraffe_zigzag(int w, int h);
Tour build_giraffe(const BoardDims& dims);

}  // namespace kt
