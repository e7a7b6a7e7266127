#pragma once

#include <vector>

#include "knights/board.hpp"
#include "knights/gadgets.hpp"

namespace kt {

// Bottom-left junction of an odd board: covers the corner region shifted one
// column right plus column 0 rows 1..6, leaving (0,0) out.
JunctionSpec odd_junction();

// Closed tour of an odd x odd board (w > 16, h > 12) through every cell but (0,0).
// It always uses the move (0,1)-(2,0).
Tour build_odd(const BoardDims& dims);

// Closed tour of an n x n board, n = 2 mod 4 and n/2 > 16, unchanged by a quarter turn.
Tour build_symmetric(int n);

// true when rotating every move by 90 degrees about the board centre gives the same move set
bool quarter_turn_symmetric(const Tour& t);

}  // namespace kt
