#include "knights/formation.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kt {

std::string to_string(const FMove& m) {
    char buf[48];
    if (m.kind == MoveKind::V) return m.dr > 0 ? "V+" : "V-";
    if (m.kind == MoveKind::H) return m.dc > 0 ? "H+" : "H-";
    if (m.axis >= 2)
        std::snprintf(buf, sizeof buf, "Z%d,%d,%d,%d", m.dr, m.dc, m.axis, m.dz);
    else
        std::snprintf(buf, sizeof buf, "D%d,%d", m.dr, m.dc);
    return buf;
}

FMove parse_fmove(const std::string& tok) {
    if (tok == "V+") return FMove::v(1);
    if (tok == "V-") return FMove::v(-1);
    if (tok == "H+") return FMove::h(1);
    if (tok == "H-") return FMove::h(-1);
    int a = 0, b = 0, c = 0, d = 0;
    if (tok.size() > 1 && tok[0] == 'D' && std::sscanf(tok.c_str() + 1, "%d,%d", &a, &b) == 2) return FMove::d(a, b);
    if (tok.size() > 1 && tok[0] == 'Z' && std::sscanf(tok.c_str() + 1, "%d,%d,%d,%d", &a, &b, &c, &d) == 4)
        return FMove::cross(a, b, c, d);
    throw std::invalid_argument("bad formation move: " + tok);
}

std::vector<FMove> parse_fmoves(const std::string& text) {
    std::istringstream in(text);
    std::vector<FMove> out;
    std::string tok;
    while (in >> tok) {
        int times = 1;
        if (auto x = tok.find('x'); x != std::string::npos) {
            times = std::stoi(tok.substr(x + 1));
            tok.resize(x);
        }
        out.insert(out.end(), times, parse_fmove(tok));
    }
    return out;
}

std::vector<MoveKind> kinds(const std::vector<FMove>& seq) {
    std::vector<MoveKind> out;
    out.reserve(seq.size());
    for (const FMove& m : seq) out.push_back(m.kind);
    return out;
}

bool valid_fmove(const FMove& m, int size, const Leaper& l) {
    if (m.kind == MoveKind::V) return (m.dr == 1 || m.dr == -1) && m.dc == 0 && size == l.b && l.a == 1;
    if (m.kind == MoveKind::H) return (m.dc == 1 || m.dc == -1) && m.dr == 0 && size == l.b && l.a == 1;
    Cell from(0, 0), to(m.dr, m.dc);
    if (m.axis >= 2) {
        from = Cell(std::vector<int>(m.axis + 1, 0));
        to = from;
        to[0] = m.dr;
        to[1] = m.dc;
        to[m.axis] = m.dz;
    }
    return is_leaper_move(from, to, l);
}

std::vector<Landing> landings(const FMove& m, int s) {
    std::vector<Landing> out;
    switch (m.kind) {
        case MoveKind::D:
            for (int q = 0; q < s * s; ++q) out.push_back({q, q, q / s + m.dr, q % s + m.dc});
            break;
        case MoveKind::V:
            if (m.dr > 0) {
                for (int j = 0; j < s; ++j) out.push_back({j, (s - 1) * s + (j ^ 1), s, j ^ 1});
            } else {
                for (int j = 0; j < s; ++j) out.push_back({(s - 1) * s + j, j ^ 1, -1, j ^ 1});
            }
            break;
        case MoveKind::H:
            if (m.dc > 0) {
                for (int i = 0; i < s; ++i) out.push_back({i * s, (i ^ 1) * s + s - 1, i ^ 1, s});
            } else {
                for (int i = 0; i < s; ++i) out.push_back({i * s + s - 1, (i ^ 1) * s, i ^ 1, -1});
            }
            break;
    }
    return out;
}

std::array<int, 2> displacement(const FMove& m) {
    if (m.kind == MoveKind::V) return {m.dr, 0};
    if (m.kind == MoveKind::H) return {0, m.dc};
    return {m.dr, m.dc};
}

Formation::Formation(const Cell& origin, int size, bool record_paths)
    : origin_(origin), size_(size), record_(record_paths), slot_(size * size) {
    if (size < 2 || size % 2) throw std::invalid_argument("formation size must be even");
    for (int q = 0; q < members(); ++q) slot_[q] = q;
    if (record_) {
        paths_.resize(members());
        for (int q = 0; q < members(); ++q) paths_[q].push_back(slot_cell(q));
    }
}

int Formation::slot_of(int member) const {
    for (int q = 0; q < members(); ++q)
        if (slot_[q] == member) return q;
    throw std::out_of_range("no such member");
}

Cell Formation::slot_cell(int slot) const {
    Cell c = origin_;
    c[0] += slot / size_;
    c[1] += slot % size_;
    return c;
}

std::vector<Cell> Formation::block() const {
    std::vector<Cell> out;
    for (int q = 0; q < members(); ++q) out.push_back(slot_cell(q));
    return out;
}

std::vector<Cell> Formation::entering(const FMove& m) const {
    std::vector<Cell> out;
    for (const Landing& l : landings(m, size_)) {
        Cell c = origin_;
        c[0] += l.dr;
        c[1] += l.dc;
        if (m.axis >= 2) c[m.axis] += m.dz;
        out.push_back(c);
    }
    return out;
}

void Formation::apply(const FMove& m) {
    auto land = landings(m, size_);
    std::vector<int> next = slot_;
    if (m.kind != MoveKind::D) {
        // the block shifts one step; members that stay move down (or left) a slot
        const int s = size_;
        for (int q = 0; q < members(); ++q) {
            int i = q / s, j = q % s;
            int ni = i, nj = j;
            if (m.kind == MoveKind::V) ni -= m.dr;
            else nj -= m.dc;
            if (ni >= 0 && ni < s && nj >= 0 && nj < s) next[ni * s + nj] = slot_[q];
        }
    }
    for (const Landing& l : land) {
        int who = slot_[l.slot_before];
        next[l.slot_after] = who;
        if (record_) {
            Cell c = origin_;
            c[0] += l.dr;
            c[1] += l.dc;
            if (m.axis >= 2) c[m.axis] += m.dz;
            paths_[who].push_back(c);
        }
    }
    auto d = displacement(m);
    origin_[0] += d[0];
    origin_[1] += d[1];
    if (m.axis >= 2) origin_[m.axis] += m.dz;
    slot_ = std::move(next);
}

}  // namespace kt
