#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "knights/board.hpp"
#include "knights/metrics.hpp"

namespace kt {

struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Moves out of a cell on the left edge: D1=(+2,+1) D2=(+1,+2) D3=(-1,+2) D4=(-2,+1).
inline constexpr std::array<std::array<int, 2>, 4> kEdgeDirs{{{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}};
// The six unordered direction pairs, in order 12 13 14 23 24 34.
inline constexpr std::array<std::array<int, 2>, 6> kDirPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

struct TripletConfig {
    std::array<int, 3> pair{};  // index into kDirPairs for rows 0,1,2

    int id() const { return pair[0] + 6 * pair[1] + 36 * pair[2]; }
    static TripletConfig from_id(int id) { return {{id % 6, id / 6 % 6, id / 36}}; }
    // six moves with the triplet's bottom cell at (row0, 0)
    std::vector<Segment> segments(long long row0 = 0) const;
    std::vector<Segment> segments_for(long long row0, const Leaper& l) const;
    std::string str() const;
};

// Node- and edge-weighted digraph. A missing edge has has_edge = 0.
struct ConfigGraph {
    int n = 0;
    std::vector<long long> node_w;
    std::vector<long long> edge_w;
    std::vector<unsigned char> has_edge;

    long long edge(int u, int v) const { return edge_w[static_cast<std::size_t>(u) * n + v]; }
    bool linked(int u, int v) const { return has_edge[static_cast<std::size_t>(u) * n + v]; }
};

struct WeightedEdge {
    int from, to;
    long long w;
};

// v_in = v, v_out = v + original
struct SplitGraph {
    int original = 0;
    int n = 0;
    std::vector<WeightedEdge> edges;
};

struct MeanCycle {
    Rational mean;           // per original node
    std::vector<int> cycle;  // original node ids in order
};

ConfigGraph build_config_graph(const Leaper& leaper = Leaper::knight());
SplitGraph split_node_weights(const ConfigGraph& g);
// Karp on a plain edge-weighted digraph; mean per edge and the vertex cycle
std::pair<Rational, std::vector<int>> karp_min_mean(int n, const std::vector<WeightedEdge>& edges);
MeanCycle min_mean_cycle(const SplitGraph& g);
// exhaustive over simple cycles (small graphs only)
MeanCycle min_mean_cycle_bruteforce(const ConfigGraph& g);

struct BoundReport {
    int nodes = 0;
    Rational mean;                        // crossings per triplet (three rows of one edge)
    std::vector<TripletConfig> witness;
    Rational per_row_per_edge;            // mean / 3
    Rational coefficient;                 // crossings >= coefficient * n - O(1), four edges
};

BoundReport crossing_lower_bound();

}  // namespace kt
