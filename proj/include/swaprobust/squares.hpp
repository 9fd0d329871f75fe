#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace swaprobust {

// Square integer matrix, 1-based accessors.
struct Square {
    int order = 0;
    std::vector<std::int64_t> cells;  // row-major

    std::int64_t at(int i, int j) const { return cells[(i - 1) * order + (j - 1)]; }
    std::int64_t& at(int i, int j) { return cells[(i - 1) * order + (j - 1)]; }
    std::vector<std::int64_t> row(int i) const;
    std::vector<std::int64_t> column(int j) const;
};

struct LittleSquare {
    int q = 0;
    int rot = 0;
    Square entries;
};

struct WeavingSquare {
    int q = 0;
    Square entries;
};

// rot=k is L_q rotated clockwise k quarter turns (L^1_3 starts 7,4,1).
LittleSquare little_square(int q, int rot);
Square base_square();
WeavingSquare weaving_square(int q);

struct PropertyResult {
    bool ok = true;
    std::string witness;  // first violating row/column/cell, empty on success
};

struct WeavingReport {
    bool pass = false;
    std::array<PropertyResult, 4> property;  // weaving properties (1)..(4)
    std::int64_t line_sum = 0;               // common row/column sum when property (2) holds
};

WeavingReport check_weaving(const Square& w);
inline WeavingReport check_weaving(const WeavingSquare& w) { return check_weaving(w.entries); }

std::string square_to_csv(const Square& s);

}  // namespace swaprobust
