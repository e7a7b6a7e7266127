#pragma once

#include <optional>
#include <vector>

#include "knights/board.hpp"

namespace kt {

struct OracleLimits {
    int max_cells_tour = 36;
    int max_cells_metric = 30;
};

enum class Metric { Turns, Crossings };

struct MetricResult {
    std::optional<Tour> best;
    long long value = -1;
    bool optimal = false;  // search ran to exhaustion
    long long nodes = 0;
};

// 2D only. Full backtracking; candidate order is Warnsdorff but never prunes a live branch.
std::optional<Tour> find_closed_tour(const BoardDims& dims, const Leaper& leaper = Leaper::knight(),
                                     const std::vector<Cell>& allowed_missing = {},
                                     const OracleLimits& lim = {});

MetricResult min_metric_tour(const BoardDims& dims, Metric metric, long long node_budget,
                             const Leaper& leaper = Leaper::knight(), const OracleLimits& lim = {});

// cells on the outer boundary of a 2D board; each must host a turn in any closed tour
long long forced_turns(const BoardDims& dims);

}  // namespace kt
