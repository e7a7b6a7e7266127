#include "knights/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace kt {

int orient(const Point& a, const Point& b, const Point& c) {
    long long v = (b.r - a.r) * (c.c - a.c) - (b.c - a.c) * (c.r - a.r);
    return (v > 0) - (v < 0);
}

bool segments_cross(const Segment& s, const Segment& t) {
    const auto& [p1, p2] = s;
    const auto& [p3, p4] = t;
    if (p1 == p3 || p1 == p4 || p2 == p3 || p2 == p4) return false;
    int d1 = orient(p3, p4, p1), d2 = orient(p3, p4, p2);
    int d3 = orient(p1, p2, p3), d4 = orient(p1, p2, p4);
    if (d1 == 0 && d2 == 0) {
        // collinear distinct leaper segments of equal length may only touch at endpoints
        auto lo = [](long long a, long long b) { return std::min(a, b); };
        auto hi = [](long long a, long long b) { return std::max(a, b); };
        bool overlap = hi(lo(p1.r, p2.r), lo(p3.r, p4.r)) < lo(hi(p1.r, p2.r), hi(p3.r, p4.r)) ||
                       hi(lo(p1.c, p2.c), lo(p3.c, p4.c)) < lo(hi(p1.c, p2.c), hi(p3.c, p4.c));
        if (overlap) throw std::logic_error("collinear overlapping segments");
        return false;
    }
    return d1 * d2 < 0 && d3 * d4 < 0;
}

long long count_turns(const std::vector<Cell>& cells, bool closed) {
    const std::size_t n = cells.size();
    if (n < 3) return 0;
    long long t = 0;
    auto turn_at = [&](std::size_t i) {
        const Cell& a = cells[(i + n - 1) % n];
        const Cell& b = cells[i];
        const Cell& c = cells[(i + 1) % n];
        int d = b.dim;
        long long u[kMaxDim], v[kMaxDim];
        for (int k = 0; k < d; ++k) {
            u[k] = b.x[k] - a.x[k];
            v[k] = c.x[k] - b.x[k];
        }
        for (int i1 = 0; i1 < d; ++i1)
            for (int i2 = i1 + 1; i2 < d; ++i2)
                if (u[i1] * v[i2] - u[i2] * v[i1] != 0) return true;
        // parallel but opposite counts as a reversal, still collinear
        return false;
    };
    for (std::size_t i = closed ? 0 : 1; i < (closed ? n : n - 1); ++i) t += turn_at(i);
    return t;
}

long long count_turns(const Tour& t) { return count_turns(t.cells, t.closed); }

std::vector<Segment> tour_segments(const Tour& t) {
    if (t.dims.dim() != 2) throw UnsupportedDims("crossings are only defined in 2D");
    std::vector<Segment> segs;
    const std::size_t n = t.cells.size();
    if (n < 2) return segs;
    segs.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        segs.push_back({{t.cells[i].x[0], t.cells[i].x[1]}, {t.cells[i + 1].x[0], t.cells[i + 1].x[1]}});
    if (t.closed && n > 2)
        segs.push_back({{t.cells[n - 1].x[0], t.cells[n - 1].x[1]}, {t.cells[0].x[0], t.cells[0].x[1]}});
    return segs;
}

namespace {

struct Box {
    long long r0, r1, c0, c1;
};

Box box(const Segment& s) {
    return {std::min(s.first.r, s.second.r), std::max(s.first.r, s.second.r),
            std::min(s.first.c, s.second.c), std::max(s.first.c, s.second.c)};
}

template <class F>
void for_candidate_pairs(const std::vector<Segment>& segs, F&& f) {
    if (segs.empty()) return;
    std::vector<Box> boxes(segs.size());
    long long rmin = box(segs[0]).r0, rmax = rmin, cmin = box(segs[0]).c0, cmax = cmin;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        boxes[i] = box(segs[i]);
        rmin = std::min(rmin, boxes[i].r0);
        rmax = std::max(rmax, boxes[i].r1);
        cmin = std::min(cmin, boxes[i].c0);
        cmax = std::max(cmax, boxes[i].c1);
    }
    const long long R = rmax - rmin + 1, C = cmax - cmin + 1;
    // bucket (r,c) lists every segment whose closed box contains the lattice point
    std::vector<std::uint32_t> start(static_cast<std::size_t>(R * C + 1), 0);
    auto key = [&](long long r, long long c) { return static_cast<std::size_t>((r - rmin) * C + (c - cmin)); };
    for (const Box& b : boxes)
        for (long long r = b.r0; r <= b.r1; ++r)
            for (long long c = b.c0; c <= b.c1; ++c) ++start[key(r, c) + 1];
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<std::uint32_t> items(start.back());
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const Box& b = boxes[i];
        for (long long r = b.r0; r <= b.r1; ++r)
            for (long long c = b.c0; c <= b.c1; ++c) items[fill[key(r, c)]++] = static_cast<std::uint32_t>(i);
    }
    // a pair is examined only in the bucket at the low corner of its box intersection
    for (long long r = rmin; r <= rmax; ++r)
        for (long long c = cmin; c <= cmax; ++c) {
            std::size_t k = key(r, c);
            for (std::uint32_t a = start[k]; a < start[k + 1]; ++a)
                for (std::uint32_t b = a + 1; b < start[k + 1]; ++b) {
                    std::uint32_t i = items[a], j = items[b];
                    if (std::max(boxes[i].r0, boxes[j].r0) != r || std::max(boxes[i].c0, boxes[j].c0) != c) continue;
                    f(i, j);
                }
        }
}

}  // namespace

long long count_crossings(const std::vector<Segment>& segs) {
    long long n = 0;
    for_candidate_pairs(segs, [&](std::size_t i, std::size_t j) { n += segments_cross(segs[i], segs[j]); });
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const std::vector<Segment>& segs) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for_candidate_pairs(segs, [&](std::size_t i, std::size_t j) {
        if (segments_cross(segs[i], segs[j])) out.emplace_back(std::min(i, j), std::max(i, j));
    });
    std::sort(out.begin(), out.end());
    return out;
}

long long count_crossings(const Tour& t) { return count_crossings(tour_segments(t)); }

long long count_crossings_bruteforce(const std::vector<Segment>& segs) {
    long long n = 0;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) n += segments_cross(segs[i], segs[j]);
    return n;
}

long long count_crossings_bruteforce(const Tour& t) { return count_crossings_bruteforce(tour_segments(t)); }

MetricsReport measure(const Tour& t) {
    MetricsReport m;
    m.turns = count_turns(t);
    if (t.dims.dim() == 2) m.crossings = count_crossings(t);
    return m;
}

}  // namespace kt
