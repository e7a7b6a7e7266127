#include "knights/validator.hpp"

namespace kt {

const char* name(Violation v) {
    switch (v) {
        case Violation::None: return "ok";
        case Violation::DimMismatch: return "dimension mismatch";
        case Violation::OutOfBounds: return "out of bounds";
        case Violation::Duplicate: return "duplicate cell";
        case Violation::Missing: return "missing cell";
        case Violation::IllegalMove: return "illegal move";
        case Violation::NotClosed: return "not closed";
    }
    return "?";
}

std::string Verdict::message() const {
    if (ok()) return "ok";
    std::string s = name(kind);
    if (index >= 0) s += " at index " + std::to_string(index);
    if (kind != Violation::NotClosed && kind != Violation::DimMismatch) s += " " + to_string(cell);
    return s;
}

Verdict validate(const Tour& t, const std::vector<Cell>& allowed_missing) {
    const BoardDims& dims = t.dims;
    std::vector<unsigned char> seen(static_cast<std::size_t>(dims.size()), 0);
    for (const Cell& m : allowed_missing) {
        if (!dims.contains(m)) return {Violation::OutOfBounds, -1, m};
        seen[dims.linear(m)] = 2;
    }
    const long long n = static_cast<long long>(t.cells.size());
    for (long long i = 0; i < n; ++i) {
        const Cell& c = t.cells[i];
        if (c.dim != dims.dim()) return {Violation::DimMismatch, i, c};
        if (!dims.contains(c)) return {Violation::OutOfBounds, i, c};
        auto& s = seen[dims.linear(c)];
        if (s) return {Violation::Duplicate, i, c};
        s = 1;
    }
    for (long long k = 0; k < dims.size(); ++k)
        if (!seen[k]) return {Violation::Missing, -1, dims.unlinear(k)};
    if (!t.closed || n < 3) return {Violation::NotClosed, -1, Cell{}};
    for (long long i = 0; i < n; ++i)
        if (!is_leaper_move(t.cells[i], t.cells[(i + 1) % n], t.leaper)) return {Violation::IllegalMove, i, t.cells[i]};
    return {};
}

}  // namespace kt
