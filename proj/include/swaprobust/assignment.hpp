#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace swaprobust {

struct BandAssignment {
    std::int64_t value = 0;
    std::vector<int> col;  // col[r-1] = column matched to row r
};

// Maximum-weight perfect matching of rows 1..m to columns 1..m where row r may only take
// columns within distance p. Shortest augmenting paths with Dijkstra and potentials;
// each row has at most 2p+1 candidates.
BandAssignment max_band_assignment(int m, int p, const std::function<std::int64_t(int, int)>& weight);

// Special case weight(r, c) = coef[r-1] * c, the form used by all robustness objectives.
BandAssignment max_band_linear(int p, const std::vector<int>& coef);

}  // namespace swaprobust
