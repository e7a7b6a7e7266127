#include "knights/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kt {

namespace {

using Path = std::vector<Cell>;

Path P(std::initializer_list<std::pair<int, int>> pts) {
    Path out;
    for (auto [r, c] : pts) out.emplace_back(r, c);
    return out;
}

const FMove Vp = FMove::v(1), Vm = FMove::v(-1), Hp = FMove::h(1), Hm = FMove::h(-1);

}  // namespace

const std::vector<FMove>& heel_moves() {
    static const std::vector<FMove> heel{Vm, Vm, Hp, Hp, Vp, FMove::d(-1, 2), Hp, Hp, Vp};
    return heel;
}

std::vector<FMove> reversed(const std::vector<FMove>& seq) { return {seq.rbegin(), seq.rend()}; }

std::vector<FMove> CornerSequenceSpec::all_moves() const {
    std::vector<FMove> out;
    for (const CornerPart& p : parts) out.insert(out.end(), p.moves.begin(), p.moves.end());
    return out;
}

CornerSequenceSpec corner_sequence(int id) {
    CornerSequenceSpec s;
    s.id = id;
    switch (id) {
        case 0:
            s.parts = {{2, -6, {Vm, Vm, FMove::d(1, 2), Vm, Hp, Hp, Vp, Vp}}};
            break;
        case 1:
            s.parts = {{2, 0, heel_moves()}};
            break;
        case 2:
            s.parts = {{2, -10, {Vm, Vm, FMove::d(1, 2), Vm, Hp, Hp, Vp, Vp}},
                       {3, -4, {Vm, Vm, Vm, Hp, Hp, Vp, Vp, Vp, Vp}}};
            break;
        case 3:
            s.parts = {{2, -4, {Vm, Vm, Hp, Hp, Vp, Vp, Vp}}};
            break;
        default:
            throw std::out_of_range("corner sequence id must be 0..3");
    }
    return s;
}

std::vector<Cell> corner_footprint(const CornerSequenceSpec& s, int w) {
    std::vector<Cell> out;
    for (const CornerPart& p : s.parts) {
        Formation f(Cell(p.row, w + p.col_from_right), 2, false);
        for (const FMove& m : p.moves) {
            auto e = f.entering(m);
            out.insert(out.end(), e.begin(), e.end());
            f.apply(m);
        }
    }
    return out;
}

JunctionSpec junction_local(int height, Matching m) {
    JunctionSpec j;
    j.height = height;
    j.matching = m;
    if (m == Matching::Horizontal && height == 5) {
        j.cells_a = P({{6, 0}, {4, 1}, {2, 0}, {0, 1}, {1, 3}, {0, 5}, {2, 4}, {3, 2}, {4, 0}, {6, 1}});
        j.cells_b = P({{5, 0}, {3, 1}, {1, 0}, {2, 2}, {1, 4}, {0, 2}, {2, 1}, {0, 0}, {1, 2},
                       {3, 3}, {2, 5}, {0, 4}, {2, 3}, {1, 5}, {0, 3}, {1, 1}, {3, 0}, {5, 1}});
        return j;
    }
    if (m != Matching::Vertical) throw std::invalid_argument("no junction with that matching");
    switch (height) {
        case 5:
            j.cells_a = P({{6, 0}, {4, 1}, {2, 0}, {0, 1}, {1, 3}, {0, 5}, {2, 4}, {3, 2},
                           {1, 1}, {0, 3}, {1, 5}, {2, 3}, {0, 2}, {1, 0}, {3, 1}, {5, 0}});
            j.cells_b = P({{6, 1}, {4, 0}, {2, 1}, {0, 0}, {1, 2}, {0, 4}, {2, 5}, {3, 3}, {1, 4}, {2, 2}, {3, 0}, {5, 1}});
            break;
        case 6:
            j.cells_a = P({{7, 0}, {5, 1}, {3, 0}, {1, 1}, {0, 3}, {1, 5}, {0, 7}, {2, 6}, {0, 5}, {1, 7}, {2, 5},
                           {0, 6}, {2, 7}, {3, 5}, {1, 6}, {0, 4}, {2, 3}, {0, 2}, {1, 4}, {3, 3}, {4, 1}, {6, 0}});
            j.cells_b = P({{7, 1}, {5, 0}, {4, 2}, {3, 4}, {2, 2}, {1, 0}, {3, 1}, {4, 3}, {2, 4}, {1, 2}, {0, 0},
                           {2, 1}, {1, 3}, {0, 1}, {2, 0}, {3, 2}, {4, 0}, {6, 1}});
            break;
        case 7:
            j.cells_a = P({{8, 0}, {6, 1}, {4, 0}, {2, 1}, {0, 0}, {1, 2}, {0, 4}, {1, 6}, {0, 8}, {2, 9}, {3, 7}, {1, 8}, {0, 6},
                           {2, 7}, {1, 9}, {0, 7}, {2, 8}, {0, 9}, {1, 7}, {3, 6}, {1, 5}, {0, 3}, {1, 1}, {3, 0}, {5, 1}, {7, 0}});
            j.cells_b = P({{8, 1}, {6, 0}, {5, 2}, {4, 4}, {2, 5}, {3, 3}, {4, 5}, {2, 4}, {0, 5}, {2, 6}, {1, 4}, {3, 5}, {4, 3}, {3, 1},
                           {2, 3}, {0, 2}, {1, 0}, {2, 2}, {0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 1}, {5, 3}, {3, 4}, {4, 2}, {5, 0}, {7, 1}});
            break;
        case 8:
            j.cells_a = P({{9, 0}, {7, 1}, {5, 0}, {3, 1}, {1, 0}, {0, 2}, {1, 4}, {0, 6}, {1, 8}, {0, 10}, {2, 11}, {3, 9}, {1, 10}, {0, 8},
                           {2, 9}, {1, 11}, {0, 9}, {2, 10}, {0, 11}, {1, 9}, {3, 8}, {1, 7}, {0, 5}, {2, 6}, {0, 7}, {2, 8}, {4, 7}, {5, 5},
                           {3, 6}, {1, 5}, {2, 7}, {4, 6}, {5, 4}, {3, 5}, {1, 6}, {3, 7}, {4, 5}, {5, 3}, {6, 1}, {8, 0}});
            j.cells_b = P({{9, 1}, {7, 0}, {6, 2}, {4, 3}, {2, 4}, {0, 3}, {1, 1}, {2, 3}, {0, 4}, {2, 5}, {4, 4}, {6, 3}, {5, 1}, {3, 0}, {4, 2},
                           {3, 4}, {2, 2}, {0, 1}, {1, 3}, {3, 2}, {4, 0}, {5, 2}, {3, 3}, {2, 1}, {0, 0}, {1, 2}, {2, 0}, {4, 1}, {6, 0}, {8, 1}});
            break;
        case 9:
            j.cells_a = P({{10, 0}, {8, 1}, {6, 0}, {4, 1}, {2, 0}, {0, 1}, {1, 3}, {0, 5}, {1, 7}, {0, 9}, {1, 11}, {0, 13},
                           {2, 12}, {0, 11}, {1, 13}, {2, 11}, {0, 12}, {2, 13}, {3, 11}, {1, 12}, {0, 10}, {2, 9}, {0, 8},
                           {1, 10}, {3, 9}, {1, 8}, {2, 10}, {4, 9}, {3, 7}, {1, 6}, {0, 4}, {2, 5}, {0, 6}, {1, 4}, {0, 2},
                           {1, 0}, {2, 2}, {3, 0}, {1, 1}, {0, 3}, {2, 4}, {1, 2}, {0, 0}, {2, 1}, {3, 3}, {4, 5}, {5, 7},
                           {3, 8}, {1, 9}, {3, 10}, {4, 8}, {2, 7}, {4, 6}, {6, 5}, {7, 3}, {5, 4}, {6, 2}, {7, 0}, {5, 1},
                           {3, 2}, {4, 0}, {6, 1}, {5, 3}, {3, 4}, {2, 6}, {0, 7}, {2, 8}, {4, 7}, {3, 5}, {5, 6}, {6, 4},
                           {4, 3}, {5, 5}, {3, 6}, {1, 5}, {2, 3}, {3, 1}, {5, 2}, {4, 4}, {6, 3}, {4, 2}, {5, 0}, {7, 1},
                           {9, 0}});
            j.cells_b = P({{10, 1}, {8, 0}, {7, 2}, {9, 1}});
            break;
        default:
            throw std::invalid_argument("junction height must be 5..9");
    }
    return j;
}

// Lattice region below the first diagonal in the local frame, plus the interface block.
static std::vector<Cell> local_region(int H) {
    const int p = H % 2, as = (H - p) / 2;
    std::set<std::pair<int, int>> cells;
    for (int a = -3; a < as; ++a)
        for (int b = 0; 2 * a + p - b >= -1; ++b) {
            if (a == as - 1 && b >= 2 * a + p) continue;
            int r = 2 * a + p - b, c = 2 * b;
            for (int dr = 0; dr < 2; ++dr)
                for (int dc = 0; dc < 2; ++dc)
                    if (r + dr >= 0) cells.insert({r + dr, c + dc});
        }
    for (int dr = 0; dr < 2; ++dr)
        for (int dc = 0; dc < 2; ++dc) cells.insert({H + dr, dc});
    std::vector<Cell> out;
    for (auto [r, c] : cells) out.emplace_back(r, c);
    return out;
}

static Cell rot(const Cell& c, int w, int h) { return Cell(h - 1 - c[0], w - 1 - c[1]); }

JunctionSpec place_top_right(const JunctionSpec& local, int w, int h) {
    JunctionSpec j = local;
    j.corner = Corner::TopRight;
    for (Cell& c : j.cells_a) c = rot(c, w, h);
    for (Cell& c : j.cells_b) c = rot(c, w, h);
    return j;
}

std::vector<Cell> JunctionSpec::region() const {
    auto cells = local_region(height);
    if (corner == Corner::TopRight) {
        // recover the board size from the placed interface corner
        int h = cells_a.front()[0] + height + 2, w = cells_a.front()[1] + 1;
        for (Cell& c : cells) c = rot(c, w, h);
        std::sort(cells.begin(), cells.end());
    }
    return cells;
}

std::vector<Cell> JunctionSpec::interface() const {
    std::vector<Cell> out{cells_a.front(), cells_a.back(), cells_b.front(), cells_b.back()};
    std::sort(out.begin(), out.end());
    return out;
}

std::string check_junction(const JunctionSpec& j) {
    const Leaper kn = Leaper::knight();
    for (const Path* p : {&j.cells_a, &j.cells_b}) {
        if (p->size() < 2) return "path too short";
        for (std::size_t i = 0; i + 1 < p->size(); ++i)
            if (!is_leaper_move((*p)[i], (*p)[i + 1], kn)) return "illegal move at " + to_string((*p)[i]);
    }
    std::vector<Cell> all = j.cells_a;
    all.insert(all.end(), j.cells_b.begin(), j.cells_b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "paths are not disjoint";
    if (all != j.region()) return "paths do not cover the region";
    auto in = j.interface();
    int r0 = in[0][0], c0 = in[0][1];
    for (int q = 0; q < 4; ++q)
        if (in[q] != Cell(r0 + q / 2, c0 + q % 2)) return "endpoints are not a 2x2 block";
    auto same_row = [](const Cell& a, const Cell& b) { return a[0] == b[0]; };
    auto same_col = [](const Cell& a, const Cell& b) { return a[1] == b[1]; };
    const Cell &a0 = j.cells_a.front(), &a1 = j.cells_a.back();
    Matching got = same_row(a0, a1) ? Matching::Horizontal : same_col(a0, a1) ? Matching::Vertical : Matching::Cross;
    if (got != j.matching) return "endpoint matching differs";
    Matching want = j.corner == Corner::BottomLeft ? Matching::Horizontal : Matching::Vertical;
    if (j.corner == Corner::TopRight && got != want) return "top-right junction must match vertically";
    return {};
}

MetricsReport sequence_metrics(const std::vector<FMove>& seq, const FMove& in, const FMove& out, int size, int lead) {
    Formation f(Cell(1000, 1000), size, true);
    for (int i = 0; i < lead; ++i) f.apply(in);
    f.apply(seq);
    for (int i = 0; i < lead; ++i) f.apply(out);
    MetricsReport r;
    r.turns = 0;
    std::vector<Segment> segs;
    for (const auto& p : f.paths()) {
        r.turns += count_turns(p, false);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) segs.push_back({{p[i][0], p[i][1]}, {p[i + 1][0], p[i + 1][1]}});
    }
    r.crossings = count_crossings(segs);
    return r;
}

}  // namespace kt
