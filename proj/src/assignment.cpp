#include "swaprobust/assignment.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "swaprobust/errors.hpp"

namespace swaprobust {

BandAssignment max_band_assignment(int m, int p, const std::function<std::int64_t(int, int)>& weight) {
    if (m < 0 || p < 0) throw InvalidArgument("max_band_assignment: negative size");
    BandAssignment out;
    out.col.assign(m, 0);
    if (m == 0) return out;
    p = std::min(p, m - 1);
    const int width = 2 * p + 1;
    auto lo = [&](int r) { return std::max(1, r - p); };
    auto hi = [&](int r) { return std::min(m, r + p); };

    // cost = top - weight >= 0, cached per (row, offset).
    std::vector<std::int64_t> cost(static_cast<std::size_t>(m) * width, 0);
    std::int64_t top = std::numeric_limits<std::int64_t>::min();
    for (int r = 1; r <= m; ++r)
        for (int c = lo(r); c <= hi(r); ++c) top = std::max(top, weight(r, c));
    for (int r = 1; r <= m; ++r)
        for (int c = lo(r); c <= hi(r); ++c)
            cost[static_cast<std::size_t>(r - 1) * width + (c - r + p)] = top - weight(r, c);
    auto cst = [&](int r, int c) { return cost[static_cast<std::size_t>(r - 1) * width + (c - r + p)]; };

    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> pu(m + 1, 0), pv(m + 1, 0), dist(m + 1, inf);
    std::vector<int> match_row(m + 1, 0), match_col(m + 1, 0), prev(m + 1, 0);
    std::vector<char> done(m + 1, 0);
    std::vector<int> touched, settled;
    using Item = std::pair<std::int64_t, int>;

    for (int r0 = 1; r0 <= m; ++r0) {
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        auto relax = [&](int r, std::int64_t base) {
            for (int c = lo(r); c <= hi(r); ++c) {
                if (done[c]) continue;
                std::int64_t nd = base + cst(r, c) - pu[r] - pv[c];
                if (nd < dist[c]) {
                    if (dist[c] == inf) touched.push_back(c);
                    dist[c] = nd;
                    prev[c] = r;
                    heap.push({nd, c});
                }
            }
        };
        relax(r0, 0);
        int end = 0;
        while (!heap.empty()) {
            auto [d, c] = heap.top();
            heap.pop();
            if (done[c] || d != dist[c]) continue;
            done[c] = 1;
            settled.push_back(c);
            if (match_col[c] == 0) {
                end = c;
                break;
            }
            relax(match_col[c], d);
        }
        if (end == 0) throw InternalError("band assignment: no augmenting path");
        const std::int64_t big_d = dist[end];
        pu[r0] += big_d;
        for (int c : settled) {
            if (c == end) continue;
            pv[c] += dist[c] - big_d;
            pu[match_col[c]] += big_d - dist[c];
        }
        for (int c = end;;) {
            int r = prev[c];
            int next = match_row[r];
            match_row[r] = c;
            match_col[c] = r;
            if (r == r0) break;
            c = next;
        }
        for (int c : touched) dist[c] = inf, done[c] = 0;
        for (int c : settled) done[c] = 0;
        touched.clear();
        settled.clear();
    }
    for (int r = 1; r <= m; ++r) {
        out.col[r - 1] = match_row[r];
        out.value += weight(r, match_row[r]);
    }
    return out;
}

BandAssignment max_band_linear(int p, const std::vector<int>& coef) {
    return max_band_assignment(static_cast<int>(coef.size()), p, [&](int r, int c) {
        return static_cast<std::int64_t>(coef[r - 1]) * c;
    });
}

}  // namespace swaprobust
