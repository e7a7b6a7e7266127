#pragma once

#include <string>
#include <vector>

#include "knights/board.hpp"

namespace kt {

enum class Violation { None, DimMismatch, OutOfBounds, Duplicate, Missing, IllegalMove, NotClosed };

struct Verdict {
    Violation kind = Violation::None;
    long long index = -1;  // position in the sequence, when meaningful
    Cell cell;

    bool ok() const { return kind == Violation::None; }
    explicit operator bool() const { return ok(); }
    std::string message() const;
};

const char* name(Violation v);

Verdict validate(const Tour& t, const std::vector<Cell>& allowed_missing = {});

}  // namespace kt
