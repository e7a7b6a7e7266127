#include "knights/board.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kt {

Cell::Cell(std::initializer_list<int> v) : dim(static_cast<int>(v.size())) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("cell dimension out of range");
    std::copy(v.begin(), v.end(), x.begin());
}

Cell::Cell(const std::vector<int>& v) : dim(static_cast<int>(v.size())) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("cell dimension out of range");
    std::copy(v.begin(), v.end(), x.begin());
}

bool operator==(const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i)
        if (a.x[i] != b.x[i]) return false;
    return true;
}

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (a.dim != b.dim) return a.dim <=> b.dim;
    for (int i = 0; i < a.dim; ++i)
        if (a.x[i] != b.x[i]) return a.x[i] <=> b.x[i];
    return std::strong_ordering::equal;
}

std::string to_string(const Cell& c) {
    std::string s = "(";
    for (int i = 0; i < c.dim; ++i) {
        if (i) s += ",";
        s += std::to_string(c.x[i]);
    }
    return s + ")";
}

std::size_t CellHash::operator()(const Cell& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.dim);
    for (int i = 0; i < c.dim; ++i)
        h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(c.x[i]));
    return h;
}

BoardDims::BoardDims(std::vector<int> dims) : d_(std::move(dims)) {
    if (d_.size() < 2 || d_.size() > static_cast<std::size_t>(kMaxDim))
        throw std::invalid_argument("board needs between 2 and 8 dimensions");
    for (int v : d_)
        if (v < 1) throw std::invalid_argument("board dimensions must be positive");
}

long long BoardDims::size() const {
    long long n = 1;
    for (int v : d_) n *= v;
    return n;
}

bool BoardDims::contains(const Cell& c) const {
    if (c.dim != dim()) return false;
    for (int i = 0; i < c.dim; ++i)
        if (c.x[i] < 0 || c.x[i] >= d_[i]) return false;
    return true;
}

long long BoardDims::linear(const Cell& c) const {
    long long k = 0;
    for (int i = 0; i < dim(); ++i) k = k * d_[i] + c.x[i];
    return k;
}

Cell BoardDims::unlinear(long long k) const {
    Cell c;
    c.dim = dim();
    for (int i = dim() - 1; i >= 0; --i) {
        c.x[i] = static_cast<int>(k % d_[i]);
        k /= d_[i];
    }
    return c;
}

Leaper::Leaper(int a_, int b_) : a(a_), b(b_) {
    if (a < 1 || b < 1 || a >= b) throw std::invalid_argument("leaper needs 0 < a < b");
}

bool Leaper::tour_capable() const { return std::gcd(a, b) == 1 && (a + b) % 2 == 1; }

bool is_leaper_move(const Cell& from, const Cell& to, const Leaper& l) {
    if (from.dim != to.dim) throw std::invalid_argument("cells differ in dimension");
    int nz = 0, lo = 0, hi = 0;
    for (int i = 0; i < from.dim; ++i) {
        int d = std::abs(to.x[i] - from.x[i]);
        if (!d) continue;
        if (++nz > 2) return false;
        if (nz == 1) lo = d; else hi = d;
    }
    if (nz != 2) return false;
    if (lo > hi) std::swap(lo, hi);
    return lo == l.a && hi == l.b;
}

std::vector<Cell> leaper_offsets(int d, const Leaper& l) {
    std::vector<Cell> out;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    Cell o;
                    o.dim = d;
                    o.x[i] = si * l.a;
                    o.x[j] = sj * l.b;
                    out.push_back(o);
                }
        }
    return out;
}

std::vector<Cell> neighbors(const Cell& c, const BoardDims& dims, const Leaper& l) {
    std::vector<Cell> out;
    for (const Cell& o : leaper_offsets(dims.dim(), l)) {
        Cell n = c;
        for (int i = 0; i < c.dim; ++i) n.x[i] += o.x[i];
        if (dims.contains(n)) out.push_back(n);
    }
    return out;
}

}  // namespace kt
