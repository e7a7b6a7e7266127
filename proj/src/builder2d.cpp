#include "knights/builder2d.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace kt {

GadgetTable GadgetTable::make(std::string name, std::vector<FMove> moves, int size) {
    GadgetTable g;
    g.name = std::move(name);
    g.moves = std::move(moves);
    g.size = size;
    const int n = size * size;
    Formation f(Cell(0, 0), size, true);
    f.apply(g.moves);
    g.disp = {f.origin()[0], f.origin()[1]};
    g.perm.resize(n);
    g.landing.resize(n);
    int rmin = INT_MAX, rmax = INT_MIN, cmin = INT_MAX, cmax = INT_MIN;
    for (int m = 0; m < n; ++m) {
        g.perm[m] = f.slot_of(m);
        const auto& p = f.paths()[m];
        for (std::size_t i = 1; i < p.size(); ++i) {
            g.landing[m].push_back({p[i][0], p[i][1]});
            rmin = std::min(rmin, p[i][0]);
            rmax = std::max(rmax, p[i][0]);
            cmin = std::min(cmin, p[i][1]);
            cmax = std::max(cmax, p[i][1]);
        }
    }
    if (rmin == INT_MAX) return g;
    g.r0 = rmin;
    g.c0 = cmin;
    g.rows = rmax - rmin + 1;
    g.cols = cmax - cmin + 1;
    g.at.assign(static_cast<std::size_t>(g.rows) * g.cols, {-1, -1});
    for (int m = 0; m < n; ++m)
        for (std::size_t i = 0; i < g.landing[m].size(); ++i) {
            auto [r, c] = g.landing[m][i];
            g.at[(r - g.r0) * g.cols + (c - g.c0)] = {m, static_cast<int>(i)};
        }
    return g;
}

const std::array<int, 2>* GadgetTable::lookup(int dr, int dc) const {
    int r = dr - r0, c = dc - c0;
    if (r < 0 || c < 0 || r >= rows || c >= cols) return nullptr;
    const auto& e = at[r * cols + c];
    return e[0] < 0 ? nullptr : &e;
}

std::vector<FMove> TourPlan::moves() const {
    std::vector<FMove> out;
    for (const Token& t : tokens) {
        if (t.type == Token::Run) out.insert(out.end(), t.length, t.step);
        else out.insert(out.end(), gadgets[t.gadget].moves.begin(), gadgets[t.gadget].moves.end());
    }
    return out;
}

PathSet run_tokens(const BoardDims& dims, const Cell& start, int size, const std::vector<Token>& tokens,
                   const std::vector<GadgetTable>& gadgets, std::vector<char>* seen) {
    std::vector<char> local;
    std::vector<char>& vis = seen ? *seen : local;
    if (vis.size() != static_cast<std::size_t>(dims.size())) vis.assign(dims.size(), 0);
    Formation f(start, size, true);
    auto claim = [&](const Cell& c) {
        if (!dims.contains(c)) throw std::logic_error("formation leaves the board at " + to_string(c));
        char& v = vis[dims.linear(c)];
        if (v) throw std::logic_error("cell entered twice: " + to_string(c));
        v = 1;
    };
    for (const Cell& c : f.block()) claim(c);
    auto step = [&](const FMove& m) {
        for (const Cell& c : f.entering(m)) claim(c);
        f.apply(m);
    };
    for (const Token& t : tokens) {
        if (t.type == Token::Run)
            for (long long i = 0; i < t.length; ++i) step(t.step);
        else
            for (const FMove& m : gadgets[t.gadget].moves) step(m);
    }
    return {f.paths()};
}

std::vector<Cell> stitch(const BoardDims& dims, const std::vector<std::vector<Cell>>& pieces, const Cell& start,
                         const Cell& next, long long expected) {
    std::vector<std::array<long long, 2>> nb(dims.size(), {-1, -1});
    auto link = [&](long long u, long long v) {
        auto& a = nb[u];
        if (a[0] < 0) a[0] = v;
        else if (a[1] < 0) a[1] = v;
        else throw std::logic_error("cell with more than two tour moves");
    };
    for (const auto& p : pieces)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            long long u = dims.linear(p[i]), v = dims.linear(p[i + 1]);
            link(u, v);
            link(v, u);
        }
    std::vector<Cell> out;
    out.reserve(expected);
    long long s = dims.linear(start), prev = s, cur = dims.linear(next);
    if (nb[s][0] != cur && nb[s][1] != cur) throw std::logic_error("start direction is not a tour move");
    out.push_back(start);
    while (cur != s) {
        if (static_cast<long long>(out.size()) >= expected) throw std::logic_error("walk does not close");
        out.push_back(dims.unlinear(cur));
        long long nx = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
        if (nx < 0) throw std::logic_error("path end inside the tour");
        prev = cur;
        cur = nx;
    }
    if (static_cast<long long>(out.size()) != expected) throw std::logic_error("tour splits into several cycles");
    return out;
}

namespace {

constexpr int kHeel = 0, kTopHeel = 1, kEdge = 2, kLeft = 3;

const FMove Vp = FMove::v(1), Vm = FMove::v(-1), Hp = FMove::h(1), Hm = FMove::h(-1);

// top-left parts when column 0 has a neighbour column on its left: (rows below h, column, moves)
struct OddTop {
    int below, col;
    std::vector<FMove> moves;
};

std::vector<OddTop> odd_top(int id) {
    if (id == 0) return {{4, 0, {Hm, Vp, Vp, Hp, FMove::d(-1, 2), Vp, Hp, Hp, Vm, Vm}}};
    if (id == 2)
        return {{6, 8, {FMove::d(1, 2)}},
                {7, 2, {Vp, Hp, Vp, FMove::d(1, -2), FMove::d(-2, -1), Hm, Vp, Vp, Vp, Vp, Hp, Hp, FMove::d(-1, 2),
                        Vp, FMove::d(-1, 2), Vp, Hp, Hp, Hp, Vm, Vm, Hm, FMove::d(-1, -2), Vm, Hp, Vm}}};
    throw std::logic_error("odd boards have top sequence 0 or 2");
}

struct Trig {
    int r, c;
    bool dr;
    int gadget;
};

bool fits(int w, int h, int r, int c, const std::vector<FMove>& mv) {
    for (const FMove& m : mv) {
        for (const Landing& l : landings(m, 2)) {
            int rr = r + l.dr, cc = c + l.dc;
            if (rr < 0 || cc < 0 || rr >= h || cc >= w) return false;
        }
        auto d = displacement(m);
        r += d[0];
        c += d[1];
    }
    return true;
}

Cell rot_block(int r, int c, int w, int h) { return Cell(h - 2 - r, w - 2 - c); }

void make_tokens(TourPlan& p) {
    const int w = p.w, h = p.h;
    p.gadgets.push_back(GadgetTable::make("heel", heel_moves()));
    p.gadgets.push_back(GadgetTable::make("heel-top", reversed(heel_moves())));
    p.gadgets.push_back(GadgetTable::make("edge", {Vp, Vp}));
    p.gadgets.push_back(GadgetTable::make("left", {Hm, Vp, Vp, Hp}));
    std::vector<Trig> trig;
    auto bottom = corner_sequence(p.bottom_id);
    if (p.bottom_id != 1) {
        if (p.cut_corner) bottom.parts[1].moves.resize(7);
        for (std::size_t i = 0; i < bottom.parts.size(); ++i) {
            const CornerPart& part = bottom.parts[i];
            trig.push_back({part.row, w + part.col_from_right, true, static_cast<int>(p.gadgets.size())});
            p.gadgets.push_back(GadgetTable::make("corner" + std::to_string(p.bottom_id) + "." + std::to_string(i), part.moves));
        }
    }
    if (p.odd_left) {
        for (const OddTop& t : odd_top(p.top_id)) {
            trig.push_back({h - t.below, t.col, false, static_cast<int>(p.gadgets.size())});
            p.gadgets.push_back(GadgetTable::make("corner" + std::to_string(p.top_id) + "-left", t.moves));
        }
    } else if (p.top_id != 1) {
        auto top = corner_sequence(p.top_id);
        for (std::size_t i = 0; i < top.parts.size(); ++i) {
            const CornerPart& part = top.parts[i];
            Formation f(Cell(part.row, w + part.col_from_right), 2, false);
            f.apply(part.moves);
            Cell at = rot_block(f.origin()[0], f.origin()[1], w, h);
            trig.push_back({at[0], at[1], false, static_cast<int>(p.gadgets.size())});
            p.gadgets.push_back(
                GadgetTable::make("corner" + std::to_string(p.top_id) + "." + std::to_string(i) + "-top", reversed(part.moves)));
        }
    }
    const int er = p.end_origin[0], ec = p.end_origin[1];
    int r = p.start_origin[0], c = p.start_origin[1];
    bool dr = true;
    auto emit_gadget = [&](int g) {
        p.token_origin.push_back({r, c});
        p.tokens.push_back({Token::Gadget, {}, 0, g});
        r += p.gadgets[g].disp[0];
        c += p.gadgets[g].disp[1];
        dr = !dr;
    };
    const std::size_t cap = 8 * static_cast<std::size_t>(w + h) + 64;
    while (p.tokens.size() < cap) {
        if (dr && r == er && c == ec) break;
        auto hit = std::find_if(trig.begin(), trig.end(), [&](const Trig& t) { return t.dr == dr && t.r == r && t.c == c; });
        if (hit != trig.end()) {
            emit_gadget(hit->gadget);
            if (r == er && c == ec) break;
            continue;
        }
        long long k = LLONG_MAX;
        auto consider = [&](long long kk) {
            if (kk >= 1 && kk < k) k = kk;
        };
        // blocks (r - s*k, c + 2k) for s = +1 going down-right
        const int s = dr ? 1 : -1;
        auto on_diag = [&](int tr, int tc) -> long long {
            int dc = tc - c;
            if (dc % 2 || dc * s <= 0) return -1;
            long long kk = dc / 2 * s;
            return tr == r - s * kk ? kk : -1;
        };
        if (dr) {
            if (r == 2 && fits(w, h, r, c, heel_moves())) {
                emit_gadget(kHeel);
                continue;
            }
            if (c == w - 2) {
                emit_gadget(kEdge);
                continue;
            }
            consider(on_diag(er, ec));
            if (r > 2 && fits(w, h, 2, c + 2 * (r - 2), heel_moves())) consider(r - 2);
            consider((w - 2 - c) / 2);
        } else {
            if (r == h - 3 && fits(w, h, r, c, p.gadgets[kTopHeel].moves)) {
                emit_gadget(kTopHeel);
                continue;
            }
            if (c == 0) {
                emit_gadget(p.odd_left ? kLeft : kEdge);
                continue;
            }
            if (r < h - 3 && fits(w, h, h - 3, c - 2 * (h - 3 - r), p.gadgets[kTopHeel].moves)) consider(h - 3 - r);
            consider(c / 2);
        }
        for (const Trig& t : trig)
            if (t.dr == dr) consider(on_diag(t.r, t.c));
        if (k == LLONG_MAX) throw std::logic_error("zigzag has nowhere to go");
        p.token_origin.push_back({r, c});
        p.tokens.push_back({Token::Run, dr ? FMove::d(-1, 2) : FMove::d(1, -2), k, -1});
        r -= static_cast<int>(s * k);
        c += static_cast<int>(2 * k * s);
        if (r < 0 || r > h - 2 || c < 0 || c > w - 2) throw std::logic_error("diagonal run leaves the board");
    }
    if (r != er || c != ec) throw std::logic_error("zigzag does not reach the end block");
    p.token_origin.push_back({r, c});
}

long long steps_in(const TourPlan& p, const Token& t, int slot) {
    return t.type == Token::Run ? t.length : static_cast<long long>(p.gadgets[t.gadget].landing[slot].size());
}

bool same_key(const Token& a, const Token& b) {
    return a.type == b.type && (a.type == Token::Run ? a.step == b.step : a.gadget == b.gadget);
}

long long round_steps(const Family& f, int s0, long long r) {
    const long long q = f.order;
    return f.run_a * r + f.run_b * (r * (r - 1) / 2) + (r / q) * f.gcycle[s0][q] + f.gcycle[s0][r % q];
}

// number of rounds the family spans with period p starting at token i (0 when p does not fit)
long long span(const TourPlan& p, int i, int per) {
    const int n = static_cast<int>(p.tokens.size());
    if (i + 2 * per > n) return 0;
    for (int j = 0; j < per; ++j)
        if (!same_key(p.tokens[i + j], p.tokens[i + per + j])) return 0;
    auto org = [&](int t, int a) { return p.token_origin[t][a]; };
    const long long d0 = org(i + per, 0) - org(i, 0), d1 = org(i + per, 1) - org(i, 1);
    long long R = 2;
    while (i + (R + 1) * per <= n) {
        bool ok = true;
        const int b = static_cast<int>(i + R * per);
        for (int j = 0; j < per && ok; ++j) {
            const Token &t0 = p.tokens[i + j], &t1 = p.tokens[i + per + j], &t = p.tokens[b + j];
            ok = same_key(t0, t) && t.length == t0.length + R * (t1.length - t0.length);
        }
        ok = ok && org(b, 0) == org(i, 0) + R * d0 && org(b, 1) == org(i, 1) + R * d1;
        if (!ok) break;
        ++R;
    }
    // every round must be locatable from a cell: token origins may not slide along the run
    for (int j = 0; j < per; ++j) {
        long long q0 = org(i + per + j, 0) - org(i + j, 0), q1 = org(i + per + j, 1) - org(i + j, 1);
        const Token& t = p.tokens[i + j];
        if (t.type == Token::Run && q0 * t.step.dc - q1 * t.step.dr == 0) return 0;
        if (t.type == Token::Gadget && q0 == 0 && q1 == 0) return 0;
    }
    return R;
}

void compress(TourPlan& p) {
    const int n = static_cast<int>(p.tokens.size());
    std::array<int, 4> member_at{0, 1, 2, 3};
    std::array<long long, 4> steps{};
    int i = 0;
    while (i < n) {
        int per = 1;
        long long R = 1;
        for (int cand = 1; cand <= 4; ++cand) {
            long long rr = span(p, i, cand);
            if (rr >= 2 && rr * cand > R * per) {
                R = rr;
                per = cand;
            }
        }
        Family f;
        f.first_token = i;
        f.period = per;
        f.rounds = R;
        f.member_at = member_at;
        for (int s = 0; s < 4; ++s) f.slot_of[member_at[s]] = s;
        for (int j = 0; j < per; ++j) {
            const Token& t = p.tokens[i + j];
            f.pattern.push_back(t);
            f.tok_origin.push_back(p.token_origin[i + j]);
            if (R > 1) {
                f.dlen.push_back(p.tokens[i + per + j].length - t.length);
                f.tok_delta.push_back({p.token_origin[i + per + j][0] - p.token_origin[i + j][0],
                                       p.token_origin[i + per + j][1] - p.token_origin[i + j][1]});
            } else {
                f.dlen.push_back(0);
                f.tok_delta.push_back({0, 0});
            }
            if (t.type == Token::Run) {
                f.run_a += t.length;
                f.run_b += f.dlen.back();
            }
        }
        std::array<int, 4> perm{0, 1, 2, 3};
        for (int s = 0; s < 4; ++s) {
            int cur = s;
            long long acc = 0;
            for (const Token& t : f.pattern) {
                f.slot_at_token[s].push_back(cur);
                f.gsteps[s].push_back(acc);
                if (t.type == Token::Gadget) {
                    acc += steps_in(p, t, cur);
                    cur = p.gadgets[t.gadget].perm[cur];
                }
            }
            f.gsteps[s].push_back(acc);
            perm[s] = cur;
        }
        std::array<int, 4> cur{0, 1, 2, 3};
        do {
            f.pow.push_back(cur);
            std::array<int, 4> inv{};
            for (int s = 0; s < 4; ++s) inv[cur[s]] = s;
            f.inv_pow.push_back(inv);
            for (int s = 0; s < 4; ++s) cur[s] = perm[cur[s]];
        } while (cur != std::array<int, 4>{0, 1, 2, 3});
        f.order = static_cast<int>(f.pow.size());
        for (int s0 = 0; s0 < 4; ++s0) {
            f.gcycle[s0].assign(f.order + 1, 0);
            for (int t = 0; t < f.order; ++t) f.gcycle[s0][t + 1] = f.gcycle[s0][t] + f.gsteps[f.pow[t][s0]][per];
        }
        for (int m = 0; m < 4; ++m) {
            f.base[m] = steps[m];
            f.total[m] = round_steps(f, f.slot_of[m], R);
            steps[m] += f.total[m];
        }
        // member positions after the family
        std::array<int, 4> next{};
        const auto& pw = f.pow[R % f.order];
        for (int s = 0; s < 4; ++s) next[pw[s]] = member_at[s];
        member_at = next;
        p.families.push_back(std::move(f));
        i += static_cast<int>(R * per);
    }
    p.member_steps = steps;
    for (int s = 0; s < 4; ++s) {
        Cell c = p.end_origin;
        c[0] += s / 2;
        c[1] += s % 2;
        p.member_end[member_at[s]] = c;
    }
}

Cell member_start(const TourPlan& p, int m) {
    Cell c = p.start_origin;
    c[0] += m / 2;
    c[1] += m % 2;
    return c;
}

void make_cycle(TourPlan& p) {
    const std::vector<Cell>* paths[4] = {&p.bottom.cells_a, &p.bottom.cells_b, &p.top.cells_a, &p.top.cells_b};
    const auto& A = p.bottom.cells_a;
    const int i0 = static_cast<int>(std::min_element(A.begin(), A.end()) - A.begin());
    if (i0 == 0 || i0 + 1 == static_cast<int>(A.size())) throw std::logic_error("start cell must be inside path A");
    long long at = 0;
    auto junction = [&](std::vector<Cell> cells) {
        CycleSegment s;
        s.kind = CycleSegment::Junction;
        s.length = static_cast<long long>(cells.size());
        s.cells = std::move(cells);
        s.start = at;
        at += s.length;
        p.cycle.push_back(std::move(s));
    };
    junction({A.rend() - i0 - 1, A.rend() - 1});
    Cell e = A.front();
    std::array<bool, 4> used{};
    for (int guard = 0; guard < 4; ++guard) {
        int m = -1;
        bool fwd = true;
        for (int k = 0; k < 4; ++k) {
            if (member_start(p, k) == e) m = k, fwd = true;
            else if (p.member_end[k] == e) m = k, fwd = false;
        }
        if (m < 0 || used[m]) throw std::logic_error("junction matchings do not close a single cycle");
        used[m] = true;
        CycleSegment s;
        s.kind = CycleSegment::Member;
        s.member = m;
        s.forward = fwd;
        s.length = p.member_steps[m] + 1;
        s.start = at;
        at += s.length;
        p.cycle.push_back(s);
        Cell x = fwd ? p.member_end[m] : member_start(p, m);
        if (x == A.back()) {
            if (guard != 3) throw std::logic_error("junction matchings do not close a single cycle");
            junction({A.rbegin() + 1, A.rend() - i0 - 1});
            break;
        }
        bool found = false;
        for (const auto* q : paths) {
            if (q == &A) continue;
            if (q->front() == x) {
                junction({q->begin() + 1, q->end() - 1});
                e = q->back();
                found = true;
            } else if (q->back() == x) {
                junction({q->rbegin() + 1, q->rend() - 1});
                e = q->front();
                found = true;
            }
            if (found) break;
        }
        if (!found) throw std::logic_error("member path ends outside the junctions");
    }
    if (at != p.length()) throw std::logic_error("cycle segments do not cover the board");
    for (const CycleSegment& s : p.cycle)
        if (s.kind == CycleSegment::Junction)
            for (std::size_t k = 0; k < s.cells.size(); ++k)
                p.junction_index.push_back({static_cast<long long>(s.cells[k][0]) * p.w + s.cells[k][1],
                                            s.start + static_cast<long long>(k)});
    std::sort(p.junction_index.begin(), p.junction_index.end());
}

// cell reached by member m after j of its own steps
Cell member_cell(const TourPlan& p, int m, long long j) {
    if (j == 0) return member_start(p, m);
    for (const Family& f : p.families) {
        if (j > f.base[m] + f.total[m]) continue;
        const long long t = j - f.base[m];
        const int s0 = f.slot_of[m];
        const long long R = f.rounds;
        long long r = 0;
        if (R > 1) {
            double a = f.run_b / 2.0, b = f.run_a - f.run_b / 2.0 + static_cast<double>(f.gcycle[s0][f.order]) / f.order;
            double est;
            if (std::abs(a) < 1e-9) est = b > 0 ? t / b : 0;
            else {
                double disc = b * b + 4 * a * static_cast<double>(t);
                est = disc <= 0 ? -b / (2 * a) : (-b + std::sqrt(disc)) / (2 * a);
            }
            r = std::clamp(static_cast<long long>(std::floor(est)), 0LL, R - 1);
            while (r > 0 && round_steps(f, s0, r) >= t) --r;
            while (r + 1 < R && round_steps(f, s0, r + 1) < t) ++r;
        }
        long long u = t - round_steps(f, s0, r);
        const int s = f.pow[r % f.order][s0];
        for (int k = 0; k < f.period; ++k) {
            const Token& tok = f.pattern[k];
            const int slot = f.slot_at_token[s][k];
            long long len = tok.type == Token::Run ? tok.length + f.dlen[k] * r : steps_in(p, tok, slot);
            if (u > len) {
                u -= len;
                continue;
            }
            long long orr = f.tok_origin[k][0] + r * f.tok_delta[k][0], oc = f.tok_origin[k][1] + r * f.tok_delta[k][1];
            if (tok.type == Token::Run)
                return Cell(static_cast<int>(orr + u * tok.step.dr + slot / 2), static_cast<int>(oc + u * tok.step.dc + slot % 2));
            auto d = p.gadgets[tok.gadget].landing[slot][u - 1];
            return Cell(static_cast<int>(orr + d[0]), static_cast<int>(oc + d[1]));
        }
        break;
    }
    throw std::logic_error("member step outside the plan");
}

long long cycle_index(const TourPlan& p, int m, long long step) {
    for (const CycleSegment& s : p.cycle)
        if (s.kind == CycleSegment::Member && s.member == m) return s.start + (s.forward ? step : s.length - 1 - step);
    throw std::logic_error("member missing from cycle");
}

// member steps taken in family f before position k of round r, for the member in slot s at round start
long long before_token(const Family& f, int s, long long r, int k) {
    long long acc = f.gsteps[s][k];
    for (int j = 0; j < k; ++j)
        if (f.pattern[j].type == Token::Run) acc += f.pattern[j].length + f.dlen[j] * r;
    return acc;
}

bool locate(const TourPlan& p, int cr, int cc, int& member, long long& step) {
    for (const Family& f : p.families) {
        const long long R = f.rounds;
        for (int k = 0; k < f.period; ++k) {
            const Token& tok = f.pattern[k];
            const long long o0 = f.tok_origin[k][0], o1 = f.tok_origin[k][1];
            const long long q0 = f.tok_delta[k][0], q1 = f.tok_delta[k][1];
            auto finish = [&](long long r, int slot_tok, long long local) {
                int s = 0;
                while (f.slot_at_token[s][k] != slot_tok) ++s;
                const int s0 = f.inv_pow[r % f.order][s];
                member = f.member_at[s0];
                step = f.base[member] + round_steps(f, s0, r) + before_token(f, s, r, k) + local;
            };
            if (tok.type == Token::Run) {
                const long long d0 = tok.step.dr, d1 = tok.step.dc;
                for (int slot = 0; slot < 4; ++slot) {
                    const long long x0 = cr - slot / 2 - o0, x1 = cc - slot % 2 - o1;
                    long long r = 0, q = 0;
                    if (R == 1) {
                        if (x0 * d1 - x1 * d0 != 0 || x0 % d0) continue;
                        q = x0 / d0;
                    } else {
                        // x = r*Q + q*d
                        const long long det = q0 * d1 - q1 * d0;
                        const long long rn = x0 * d1 - x1 * d0, qn = q0 * x1 - q1 * x0;
                        if (rn % det || qn % det) continue;
                        r = rn / det;
                        q = qn / det;
                    }
                    if (r < 0 || r >= R || q < 1 || q > tok.length + f.dlen[k] * r) continue;
                    finish(r, slot, q);
                    return true;
                }
            } else {
                const GadgetTable& g = p.gadgets[tok.gadget];
                long long lo = 0, hi = 0;
                if (R > 1) {
                    // r with (x - o - r*Q) inside the gadget's box, along the larger component of Q
                    const bool use0 = std::abs(q0) >= std::abs(q1);
                    const long long qq = use0 ? q0 : q1, x = (use0 ? cr - o0 : cc - o1);
                    const long long bmin = use0 ? g.r0 : g.c0, bmax = bmin + (use0 ? g.rows : g.cols) - 1;
                    long long a = x - bmax, b = x - bmin;  // r*qq in [a, b]
                    if (qq < 0) {
                        std::swap(a, b);
                        a = -a;
                        b = -b;
                    }
                    const long long aq = std::abs(qq);
                    lo = std::max(0LL, a >= 0 ? (a + aq - 1) / aq : -((-a) / aq));
                    hi = std::min(R - 1, b >= 0 ? b / aq : -((-b + aq - 1) / aq));
                }
                for (long long r = lo; r <= hi; ++r) {
                    const auto* e = g.lookup(static_cast<int>(cr - o0 - r * q0), static_cast<int>(cc - o1 - r * q1));
                    if (!e) continue;
                    finish(r, (*e)[0], (*e)[1] + 1);
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

TourPlan zigzag(int w, int h, const ZigzagOptions& opt) {
    TourPlan p;
    p.w = w;
    p.h = h;
    p.odd_left = opt.odd_left;
    p.top_height = opt.top_height ? opt.top_height : 5 + static_cast<int>(mod(w / 2 + h - 1, 4));
    p.bottom_id = static_cast<int>(mod(w / 2 + 2, 4));
    p.top_id = static_cast<int>(mod(3 - h, 4));
    p.cut_corner = p.bottom_id == 2 && h - 2 - p.top_height == 2;
    p.start_origin = Cell(5, 0);
    p.end_origin = Cell(h - 2 - p.top_height, w - 2);
    make_tokens(p);
    return p;
}

TourPlan plan(const BoardDims& dims) {
    if (dims.dim() != 2) throw UnsupportedDims("the quartet builder works on 2D boards");
    int w = dims.width(), h = dims.height();
    if (w % 2 && h % 2) throw UnsupportedDims("both sides odd: use build_odd");
    const bool transposed = w % 2;
    if (transposed) std::swap(w, h);
    if (w < 16 || h < 12)
        throw UnsupportedDims("needs an even side of at least 16 and another side of at least 12, got " +
                              std::to_string(dims.width()) + "x" + std::to_string(dims.height()));
    TourPlan p = zigzag(w, h);
    p.dims = dims;
    p.transposed = transposed;
    p.bottom = junction_local(5, Matching::Horizontal);
    p.top = place_top_right(junction_local(p.top_height, Matching::Vertical), w, h);
    GroupElement e;
    for (const Token& t : p.tokens)
        if (t.type == Token::Gadget) e = e.then(compose(kinds(p.gadgets[t.gadget].moves)));
    if (!e.fixes(Matching::Horizontal)) throw std::logic_error("zigzag effect moves the horizontal matching");
    compress(p);
    make_cycle(p);
    return p;
}

Tour build(const TourPlan& p) {
    BoardDims work({p.h, p.w});
    PathSet ps = run_tokens(work, p.start_origin, 2, p.tokens, p.gadgets);
    std::vector<std::vector<Cell>> pieces = ps.paths;
    pieces.push_back(p.bottom.cells_a);
    pieces.push_back(p.bottom.cells_b);
    pieces.push_back(p.top.cells_a);
    pieces.push_back(p.top.cells_b);
    const auto& A = p.bottom.cells_a;
    auto it = std::min_element(A.begin(), A.end());
    std::vector<Cell> cells = stitch(work, pieces, *it, *(it - 1), p.length());
    if (p.transposed)
        for (Cell& c : cells) std::swap(c[0], c[1]);
    return {p.dims, Leaper::knight(), std::move(cells), true};
}

Tour build(const BoardDims& dims) { return build(plan(dims)); }

Cell cell_at(const TourPlan& p, long long index) {
    if (index < 0 || index >= p.length()) throw std::out_of_range("tour index out of range");
    Cell out;
    for (const CycleSegment& s : p.cycle) {
        if (index >= s.start + s.length) continue;
        const long long off = index - s.start;
        out = s.kind == CycleSegment::Junction ? s.cells[off] : member_cell(p, s.member, s.forward ? off : s.length - 1 - off);
        break;
    }
    if (p.transposed) std::swap(out[0], out[1]);
    return out;
}

long long index_of(const TourPlan& p, const Cell& c) {
    if (!p.dims.contains(c)) throw std::out_of_range("cell outside the board");
    int r = c[0], col = c[1];
    if (p.transposed) std::swap(r, col);
    const long long lin = static_cast<long long>(r) * p.w + col;
    auto it = std::lower_bound(p.junction_index.begin(), p.junction_index.end(), std::pair<long long, long long>{lin, LLONG_MIN});
    if (it != p.junction_index.end() && it->first == lin) return it->second;
    const int dr = r - p.start_origin[0], dc = col - p.start_origin[1];
    if (dr >= 0 && dr < 2 && dc >= 0 && dc < 2) return cycle_index(p, dr * 2 + dc, 0);
    int m = -1;
    long long step = 0;
    if (!locate(p, r, col, m, step)) throw std::logic_error("cell not covered by the plan: " + to_string(c));
    return cycle_index(p, m, step);
}

}  // namespace kt
