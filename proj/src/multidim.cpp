#include "knights/multidim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "knights/builder2d.hpp"
#include "knights/gadgets.hpp"

namespace kt {

namespace {

int natural_height(int w, int h) { return 5 + static_cast<int>(mod(w / 2 + h - 1, 4)); }

Cell lift(const Cell& c, const std::vector<int>& extra) {
    std::vector<int> v{c[0], c[1]};
    v.insert(v.end(), extra.begin(), extra.end());
    return Cell(v);
}

Cell rot_cell(const Cell& c, int w, int h) { return Cell(h - 1 - c[0], w - 1 - c[1]); }

}  // namespace

FMove rotate_half(const FMove& m) {
    FMove r = m;
    r.dr = -m.dr;
    r.dc = -m.dc;
    return r;
}

const LayerEscape& layer_escape(int height) {
    static const std::map<int, LayerEscape> table = [] {
        std::map<int, LayerEscape> t;
        t[6] = {6, parse_fmoves("V- V- D-1,2x3 V- H- H- D1,-2 V- H- H- V+ V+"), Cell(2, 0), Cell(0, 0)};
        t[7] = {7, parse_fmoves("V- V- D-1,2x4 V- H- H- D1,-2 V- H- D2,-1 D-2,-1 H- V+ V+ V+"), Cell(3, 0), Cell(1, 0)};
        t[8] = {8, parse_fmoves("V- V- D-1,2x5 V- H- H- D1,-2 V- H- D2,-1 D-2,-1 H- H- H- V+ D1,2 V+ D1,-2 V-"), Cell(3, 0), Cell(1, 0)};
        t[9] = {9,
                parse_fmoves("V- V- D-1,2x6 V- H- H- D1,-2 V- H- D2,-1 D1,-2x3 V- V- D-1,2 D-1,-2 V- H+ H+ D1,2 V- H+"),
                Cell(0, 5), Cell(0, 3)};
        return t;
    }();
    auto it = table.find(height);
    if (it == table.end()) throw std::invalid_argument("no layer escape for height " + std::to_string(height));
    return it->second;
}

const std::vector<FMove>& layer_start(const Cell& entry) {
    static const std::map<std::pair<int, int>, std::vector<FMove>> table{
        {{0, 0}, parse_fmoves("V+ D-1,2 H+ H+ V+ D1,-2 D1,-2 V+ V+")},
        {{1, 0}, parse_fmoves("V- H+ H+ H+ H+ V+ D1,-2 D1,-2 V+ V+")},
        {{0, 3}, parse_fmoves("H+ V+ D1,-2 D-2,-1 H- V+ V+ V+ V+ V+")},
    };
    auto it = table.find({entry[0], entry[1]});
    if (it == table.end()) throw std::invalid_argument("no layer start from " + to_string(entry));
    return it->second;
}

LayerPlan plan_multidim(const BoardDims& dims) {
    const int d = dims.dim();
    if (d < 3) throw UnsupportedDims("layered tours need at least three dimensions");
    if (d > kMaxDim) throw UnsupportedDims("too many dimensions");
    int best_h = -1, best_w = -1;
    bool best_natural = false;
    for (int hi = 0; hi < d; ++hi)
        for (int wi = 0; wi < d; ++wi) {
            if (hi == wi || dims[wi] % 2 || dims[wi] < 16 || dims[hi] < 12) continue;
            const bool natural = natural_height(dims[wi], dims[hi]) != 5;
            if (best_h < 0 || (natural && !best_natural)) {
                best_h = hi;
                best_w = wi;
                best_natural = natural;
            }
        }
    if (best_h < 0) throw UnsupportedDims("needs one even axis of at least 16 and another of at least 12");
    LayerPlan p;
    p.dims = dims;
    p.axes = {best_h, best_w};
    for (int k = 0; k < d; ++k)
        if (k != best_h && k != best_w) p.axes.push_back(k);
    p.h = dims[best_h];
    p.w = dims[best_w];
    p.layers = {{}};
    for (int k = 2; k < d; ++k) {
        std::vector<std::vector<int>> next;
        for (int v = 0; v < dims[p.axes[k]]; ++v) {
            auto order = p.layers;
            if (v % 2) std::reverse(order.begin(), order.end());
            for (auto& l : order) {
                l.push_back(v);
                next.push_back(std::move(l));
            }
        }
        p.layers = std::move(next);
    }
    p.top_height = natural_height(p.w, p.h);
    if (p.top_height == 5 && p.layers.size() > 1) {
        if (p.w == 16 || p.h == 12)
            throw UnsupportedDims("no layer escape fits a " + std::to_string(p.w) + "x" + std::to_string(p.h) + " layer");
        p.top_height = 9;
    }
    return p;
}

Tour build_multidim(const BoardDims& dims, LayerPlan* used) {
    LayerPlan p = plan_multidim(dims);
    const int w = p.w, h = p.h, d = dims.dim();
    std::vector<int> wd;
    for (int a : p.axes) wd.push_back(dims[a]);
    const BoardDims work(wd);

    const std::vector<FMove> zig = zigzag(w, h, {p.top_height, false}).moves();
    const std::size_t L = p.layers.size();
    std::vector<FMove> all;
    for (std::size_t k = 0; k < L; ++k) {
        std::vector<FMove> local;
        if (k > 0) {
            const auto& s = layer_start(layer_escape(p.top_height).entry);
            local = s;
        }
        local.insert(local.end(), zig.begin(), zig.end());
        if (k + 1 < L) {
            const LayerEscape& e = layer_escape(p.top_height);
            Formation f(Cell(e.height, 0), 2, false);
            f.apply(e.moves);
            if (f.origin() != e.exit) throw std::logic_error("layer escape does not end at its exit block");
            for (const FMove& m : e.moves) local.push_back(rotate_half(m));
        }
        if (k % 2)
            for (FMove& m : local) m = rotate_half(m);
        all.insert(all.end(), local.begin(), local.end());
        if (k + 1 < L) {
            const LayerEscape& e = layer_escape(p.top_height);
            int axis = -1, dz = 0;
            for (int j = 0; j + 2 < d; ++j)
                if (p.layers[k][j] != p.layers[k + 1][j]) {
                    axis = j + 2;
                    dz = p.layers[k + 1][j] - p.layers[k][j];
                }
            int dr = e.entry[0] - e.exit[0], dc = e.entry[1] - e.exit[1];
            if (k % 2 == 0) dr = -dr, dc = -dc;
            all.push_back(FMove::cross(dr, dc, axis, dz));
        }
    }
    std::vector<Token> tokens;
    tokens.reserve(all.size());
    for (const FMove& m : all) tokens.push_back({Token::Run, m, 1, -1});
    PathSet ps = run_tokens(work, lift(Cell(5, 0), p.layers.front()), 2, tokens, {});

    const bool last_rotated = (L - 1) % 2;
    JunctionSpec top = place_top_right(junction_local(p.top_height, Matching::Vertical), w, h);
    auto lift_path = [](const std::vector<Cell>& path, const std::vector<int>& extra, bool rotate, int w, int h) {
        std::vector<Cell> out;
        for (const Cell& c : path) out.push_back(lift(rotate ? rot_cell(c, w, h) : c, extra));
        return out;
    };
    Tour out{dims, Leaper::knight(), {}, true};
    for (bool vertical : {false, true}) {
        JunctionSpec bottom = junction_local(5, vertical ? Matching::Vertical : Matching::Horizontal);
        std::vector<std::vector<Cell>> pieces = ps.paths;
        pieces.push_back(lift_path(bottom.cells_a, p.layers.front(), false, w, h));
        pieces.push_back(lift_path(bottom.cells_b, p.layers.front(), false, w, h));
        pieces.push_back(lift_path(top.cells_a, p.layers.back(), last_rotated, w, h));
        pieces.push_back(lift_path(top.cells_b, p.layers.back(), last_rotated, w, h));
        const auto& A = pieces[4];
        auto it = std::min_element(A.begin() + 1, A.end() - 1);
        try {
            out.cells = stitch(work, pieces, *it, *(it - 1), work.size());
        } catch (const std::logic_error&) {
            if (vertical) throw;
            continue;
        }
        p.vertical_start = vertical;
        break;
    }
    for (Cell& c : out.cells) {
        Cell g = c;
        for (int k = 0; k < d; ++k) g[p.axes[k]] = c[k];
        c = g;
    }
    if (used) *used = p;
    return out;
}

}  // namespace kt
