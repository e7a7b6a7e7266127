#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "knights/board.hpp"

namespace kt {

struct Point {
    long long r = 0, c = 0;
    friend bool operator==(const Point&, const Point&) = default;
};
using Segment = std::pair<Point, Point>;

// sign of (b-a) x (c-a)
int orient(const Point& a, const Point& b, const Point& c);
// Open segments cross at a single interior point. Shared endpoints never count.
bool segments_cross(const Segment& s, const Segment& t);

struct MetricsReport {
    long long turns = 0;
    long long crossings = -1;  // -1 when undefined (d >= 3)
};

long long count_turns(const std::vector<Cell>& cells, bool closed);
long long count_turns(const Tour& t);

std::vector<Segment> tour_segments(const Tour& t);
long long count_crossings(const std::vector<Segment>& segs);
long long count_crossings(const Tour& t);
long long count_crossings_bruteforce(const std::vector<Segment>& segs);
long long count_crossings_bruteforce(const Tour& t);
// every crossing pair, as indices into segs
std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const std::vector<Segment>& segs);

MetricsReport measure(const Tour& t);

}  // namespace kt
