#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kt {

inline constexpr int kMaxDim = 8;

// Euclidean mod, result in [0, m).
constexpr long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

struct Cell {
    std::array<int, kMaxDim> x{};
    int dim = 2;

    Cell() = default;
    Cell(int r, int c) : dim(2) { x[0] = r; x[1] = c; }
    Cell(std::initializer_list<int> v);
    explicit Cell(const std::vector<int>& v);

    int row() const { return x[0]; }
    int col() const { return x[1]; }
    int operator[](int i) const { return x[i]; }
    int& operator[](int i) { return x[i]; }
    std::vector<int> coords() const { return {x.begin(), x.begin() + dim}; }

    friend bool operator==(const Cell& a, const Cell& b);
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);
};

std::string to_string(const Cell& c);

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept;
};

class BoardDims {
public:
    BoardDims() = default;
    explicit BoardDims(std::vector<int> dims);
    static BoardDims wh(int width, int height) { return BoardDims({height, width}); }

    int dim() const { return static_cast<int>(d_.size()); }
    int operator[](int i) const { return d_[i]; }
    const std::vector<int>& dims() const { return d_; }
    int height() const { return d_[0]; }
    int width() const { return d_[1]; }
    long long size() const;
    bool contains(const Cell& c) const;
    long long linear(const Cell& c) const;
    Cell unlinear(long long i) const;

    friend bool operator==(const BoardDims&, const BoardDims&) = default;

private:
    std::vector<int> d_;
};

struct Leaper {
    int a = 1;
    int b = 2;

    Leaper() = default;
    Leaper(int a_, int b_);
    static Leaper knight() { return {1, 2}; }
    static Leaper giraffe() { return {1, 4}; }
    // (a,b) with gcd 1 and a+b odd; otherwise closed tours are impossible
    bool tour_capable() const;

    friend bool operator==(const Leaper&, const Leaper&) = default;
};

struct Move {
    Cell from;
    Cell to;
};

struct Tour {
    BoardDims dims;
    Leaper leaper;
    std::vector<Cell> cells;
    bool closed = true;

    std::size_t size() const { return cells.size(); }
};

struct UnsupportedDims : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_leaper_move(const Cell& from, const Cell& to, const Leaper& l);
std::vector<Cell> neighbors(const Cell& c, const BoardDims& dims, const Leaper& l);
// all displacement vectors of a leaper in dimension d
std::vector<Cell> leaper_offsets(int d, const Leaper& l);

}  // namespace kt
