#include "swaprobust/squares.hpp"

#include <algorithm>
#include <sstream>

#include "swaprobust/errors.hpp"

namespace swaprobust {

std::vector<std::int64_t> Square::row(int i) const {
    return {cells.begin() + (i - 1) * order, cells.begin() + i * order};
}

std::vector<std::int64_t> Square::column(int j) const {
    std::vector<std::int64_t> out(order);
    for (int i = 1; i <= order; ++i) out[i - 1] = at(i, j);
    return out;
}

static std::int64_t little_entry(int q, int rot, int i, int j) {
    int r = i, c = j;
    switch (rot) {
        case 1: r = q + 1 - j; c = i; break;
        case 2: r = q + 1 - i; c = q + 1 - j; break;
        case 3: r = j; c = q + 1 - i; break;
        default: break;
    }
    return static_cast<std::int64_t>(q) * (r - 1) + c;
}

LittleSquare little_square(int q, int rot) {
    if (q < 1) throw InvalidArgument("little_square: q must be >= 1");
    if (rot < 0 || rot > 3) throw InvalidArgument("little_square: rot must be in {0,1,2,3}");
    LittleSquare ls{q, rot, Square{q, std::vector<std::int64_t>(static_cast<std::size_t>(q) * q)}};
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) ls.entries.at(i, j) = little_entry(q, rot, i, j);
    return ls;
}

Square base_square() {
    return Square{4, {1, 6, 11, 16, 7, 4, 13, 10, 12, 15, 2, 5, 14, 9, 8, 3}};
}

WeavingSquare weaving_square(int q) {
    if (q < 1) throw InvalidArgument("weaving_square: q must be >= 1");
    const Square b = base_square();
    const int order = 4 * q;
    const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
    WeavingSquare w{q, Square{order, std::vector<std::int64_t>(static_cast<std::size_t>(order) * order)}};
    for (int i = 1; i <= order; ++i) {
        int i1 = (i - 1) / q + 1, i2 = (i - 1) % q + 1;
        for (int j = 1; j <= order; ++j) {
            int j1 = (j - 1) / q + 1, j2 = (j - 1) % q + 1;
            int rot = ((j1 - i1) % 4 + 4) % 4;
            w.entries.at(i, j) = (b.at(i1, j1) - 1) * q2 + little_entry(q, rot, i2, j2);
        }
    }
    return w;
}

// Number of disjoint length-q runs available in a set of distinct values.
static int disjoint_runs(std::vector<std::int64_t> vals, int q) {
    std::sort(vals.begin(), vals.end());
    int count = 0;
    std::size_t k = 0;
    while (k < vals.size()) {
        std::size_t e = k;
        while (e + 1 < vals.size() && vals[e + 1] == vals[e] + 1) ++e;
        count += static_cast<int>((e - k + 1) / q);
        k = e + 1;
    }
    return count;
}

WeavingReport check_weaving(const Square& w) {
    WeavingReport rep;
    if (w.order < 4 || w.order % 4 != 0) {
        rep.property[0] = {false, "order " + std::to_string(w.order) + " not a positive multiple of 4"};
        return rep;
    }
    const int order = w.order;
    const int q = order / 4;
    const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
    const std::int64_t cells = 16 * q2;

    std::vector<char> seen(cells + 1, 0);
    for (int i = 1; i <= order && rep.property[0].ok; ++i) {
        for (int j = 1; j <= order; ++j) {
            std::int64_t x = w.at(i, j);
            if (x < 1 || x > cells || seen[x]) {
                rep.property[0] = {false, "cell (" + std::to_string(i) + "," + std::to_string(j) + ")"};
                break;
            }
            seen[x] = 1;
        }
    }

    const std::int64_t target = 32 * q2 * q + 2 * q;
    for (int k = 1; k <= order; ++k) {
        auto r = w.row(k);
        auto c = w.column(k);
        std::int64_t rs = 0, cs = 0;
        for (auto x : r) rs += x;
        for (auto x : c) cs += x;
        if (rep.property[1].ok && rs != target) rep.property[1] = {false, "row " + std::to_string(k)};
        if (rep.property[1].ok && cs != target) rep.property[1] = {false, "column " + std::to_string(k)};
        if (rep.property[2].ok && disjoint_runs(r, q) < 2) rep.property[2] = {false, "row " + std::to_string(k)};
        if (rep.property[2].ok && disjoint_runs(c, q) < 2) rep.property[2] = {false, "column " + std::to_string(k)};
    }
    if (rep.property[1].ok) rep.line_sum = target;

    for (int i = 1; i <= order && rep.property[3].ok; ++i) {
        for (int j = 1; j <= order; ++j) {
            bool low = w.at(i, j) <= 8 * q2;
            bool diag = (i <= 2 * q) == (j <= 2 * q);
            if (low != diag) {
                rep.property[3] = {false, "cell (" + std::to_string(i) + "," + std::to_string(j) + ")"};
                break;
            }
        }
    }
    rep.pass = std::all_of(rep.property.begin(), rep.property.end(), [](const PropertyResult& p) { return p.ok; });
    return rep;
}

std::string square_to_csv(const Square& s) {
    std::ostringstream os;
    for (int i = 1; i <= s.order; ++i) {
        for (int j = 1; j <= s.order; ++j) os << (j > 1 ? "," : "") << s.at(i, j);
        os << '\n';
    }
    return os.str();
}

}  // namespace swaprobust
