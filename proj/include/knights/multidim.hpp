#pragma once

#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/formation.hpp"

namespace kt {

// Escape from the junction corner of one layer into the next. Coordinates and
// moves are in the junction frame (the corner region at rows 0.., columns 0..,
// formation arriving at block (height, 0)).
struct LayerEscape {
    int height = 6;
    std::vector<FMove> moves;
    Cell exit;   // block after the moves
    Cell entry;  // block reached in the next layer, same frame
};

struct LayerPlan {
    BoardDims dims;              // as requested
    std::vector<int> axes;       // working axis k is dims[axes[k]]; axes[0] rows, axes[1] columns
    int w = 0, h = 0;
    int top_height = 5;          // junction height used in every layer
    std::vector<std::vector<int>> layers;  // extra coordinates in visiting order
    bool vertical_start = false;           // bottom junction swapped to the vertical one
};

const LayerEscape& layer_escape(int height);
// moves from the entry block through the start corner, ending at block (5,0)
const std::vector<FMove>& layer_start(const Cell& entry);
FMove rotate_half(const FMove& m);

LayerPlan plan_multidim(const BoardDims& dims);
Tour build_multidim(const BoardDims& dims, LayerPlan* used = nullptr);

}  // namespace kt
