#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knights/board.hpp"
#include "knights/metrics.hpp"

namespace kt {

struct TourFile {
    Tour tour;
    std::vector<Cell> missing;
    std::optional<MetricsReport> metrics;
};

nlohmann::json to_json(const TourFile& f);
// throws std::invalid_argument on a malformed document
TourFile tour_from_json(const nlohmann::json& j);

// 2D: grid of step numbers, top row first. Otherwise one cell per line.
std::string to_text(const Tour& t);

struct SvgOptions {
    int cell_size = 12;
    bool mark_crossings = false;
};
// 2D only
std::string to_svg(const Tour& t, const SvgOptions& opt = {});

}  // namespace kt
