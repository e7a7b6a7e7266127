#include "knights/odd_symmetric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "knights/builder2d.hpp"

namespace kt {

namespace {

std::vector<Cell> P(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<Cell> out;
    for (auto [r, c] : pts) out.emplace_back(r, c);
    return out;
}

bool is_edge(const Cell& a, const Cell& b, const Cell& x, const Cell& y) { return (a == x && b == y) || (a == y && b == x); }

}  // namespace

JunctionSpec odd_junction() {
    JunctionSpec j;
    j.height = 5;
    j.matching = Matching::Horizontal;
    j.cells_a = P({{6, 1}, {4, 0}, {2, 1}, {0, 2}, {1, 0}, {3, 1}, {5, 0}, {6, 2}});
    j.cells_b = P({{5, 1}, {3, 0}, {4, 2}, {2, 3}, {1, 5}, {0, 3}, {1, 1}, {3, 2}, {2, 4}, {1, 6}, {0, 4}, {1, 2}, {2, 0},
                   {0, 1}, {2, 2}, {3, 4}, {2, 6}, {0, 5}, {1, 3}, {2, 5}, {0, 6}, {1, 4}, {3, 3}, {4, 1}, {6, 0}, {5, 2}});
    return j;
}

Tour build_odd(const BoardDims& dims) {
    if (dims.dim() != 2) throw UnsupportedDims("odd boards are 2D");
    const int w = dims.width(), h = dims.height();
    if (w % 2 == 0 || h % 2 == 0 || w <= 16 || h <= 12)
        throw UnsupportedDims("needs odd w > 16 and odd h > 12, got " + std::to_string(w) + "x" + std::to_string(h));
    TourPlan z = zigzag(w - 1, h, {0, true});
    GroupElement e;
    for (const Token& t : z.tokens)
        if (t.type == Token::Gadget) e = e.then(compose(kinds(z.gadgets[t.gadget].moves)));
    if (!e.fixes(Matching::Horizontal)) throw std::logic_error("odd zigzag effect moves the horizontal matching");
    std::vector<char> seen(dims.size(), 0);
    seen[dims.linear(Cell(0, 0))] = 1;
    PathSet ps = run_tokens(dims, Cell(5, 1), 2, z.tokens, z.gadgets, &seen);
    JunctionSpec bottom = odd_junction();
    JunctionSpec top = place_top_right(junction_local(z.top_height, Matching::Vertical), w - 1, h);
    for (auto* path : {&top.cells_a, &top.cells_b})
        for (Cell& c : *path) c[1] += 1;
    std::vector<std::vector<Cell>> pieces = ps.paths;
    pieces.push_back(bottom.cells_a);
    pieces.push_back(bottom.cells_b);
    pieces.push_back(top.cells_a);
    pieces.push_back(top.cells_b);
    const auto& A = bottom.cells_a;
    auto it = std::min_element(A.begin(), A.end());
    return {dims, Leaper::knight(), stitch(dims, pieces, *it, *(it - 1), dims.size() - 1), true};
}

Tour build_symmetric(int n) {
    if (n % 4 != 2 || n / 2 <= 16)
        throw UnsupportedDims("quarter-turn symmetric tours need n = 2 mod 4 and n/2 > 16, got " + std::to_string(n));
    const int q = n / 2;
    const Tour quad = build_odd(BoardDims({q, q}));
    const Cell e0(0, 1), e1(2, 0);
    // open the quadrant cycle at the edge (0,1)-(2,0), walking from (2,0) to (0,1)
    const auto& cs = quad.cells;
    const std::size_t L = cs.size();
    std::size_t at = L;
    bool fwd = true;
    for (std::size_t i = 0; i < L; ++i) {
        const Cell &a = cs[i], &b = cs[(i + 1) % L];
        if (is_edge(a, b, e0, e1)) {
            at = i;
            fwd = b == e1;
            break;
        }
    }
    if (at == L) throw std::logic_error("quadrant tour lacks the splice edge");
    std::vector<Cell> open;
    open.reserve(L);
    for (std::size_t k = 0; k < L; ++k) open.push_back(fwd ? cs[(at + 1 + k) % L] : cs[(at + L - k) % L]);
    auto place = [&](Cell c, int turns) {
        c = Cell(q - 1 - c[0], q - 1 - c[1]);
        for (int t = 0; t < turns; ++t) c = Cell(c[1], n - 1 - c[0]);
        return c;
    };
    const BoardDims dims({n, n});
    std::vector<std::vector<Cell>> pieces;
    for (int k = 0; k < 4; ++k) {
        std::vector<Cell> p;
        p.reserve(L);
        for (const Cell& c : open) p.push_back(place(c, k));
        pieces.push_back(std::move(p));
    }
    // the missing corners meet at the centre; each opened edge end links to one of them
    for (int k = 0; k < 4; ++k) {
        pieces.push_back({place(e0, k), place(Cell(0, 0), (k + 2) % 4)});
        pieces.push_back({place(e1, k), place(Cell(0, 0), (k + 1) % 4)});
    }
    std::vector<Cell> cells = stitch(dims, pieces, pieces[0].back(), pieces[0][pieces[0].size() - 2], dims.size());
    auto lo = std::min_element(cells.begin(), cells.end());
    std::rotate(cells.begin(), lo, cells.end());
    return {dims, Leaper::knight(), std::move(cells), true};
}

bool quarter_turn_symmetric(const Tour& t) {
    if (t.dims.dim() != 2 || t.dims.width() != t.dims.height()) return false;
    const int n = t.dims.width();
    using Seg = std::pair<Cell, Cell>;
    auto norm = [](Cell a, Cell b) { return a < b ? Seg{a, b} : Seg{b, a}; };
    std::set<Seg> segs;
    const std::size_t L = t.cells.size();
    for (std::size_t i = 0; i < L; ++i) {
        if (!t.closed && i + 1 == L) break;
        segs.insert(norm(t.cells[i], t.cells[(i + 1) % L]));
    }
    auto rot = [n](const Cell& c) { return Cell(c[1], n - 1 - c[0]); };
    for (const Seg& s : segs)
        if (!segs.count(norm(rot(s.first), rot(s.second)))) return false;
    return true;
}

}  // namespace kt
