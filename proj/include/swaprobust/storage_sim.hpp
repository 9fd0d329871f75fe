#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swaprobust/graph.hpp"

namespace swaprobust {

// Uniform integer in [0, bound) from a 64-bit engine, identical on every platform.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

struct SimConfig {
    EdgeLabeling base;
    int epochs = 10;
    int step_budget = 1;  // max displacement of any edge within one epoch
    int p = 1;            // max cumulative displacement from base
    std::uint64_t seed = 1;
    int attempts_per_epoch = 0;  // 0: one attempt per edge
};

struct SimRecord {
    int epoch = 0;
    std::int64_t discrepancy = 0;
    Vertex u = 0;  // heaviest vertex
    Vertex v = 0;  // lightest vertex
    int max_disp = 0;
};

struct SimTrace {
    std::vector<SimRecord> records;
    SwapRecord final_swap;
    std::optional<std::int64_t> bound;  // drift bound from the base certificate
    bool bound_held = true;
    std::int64_t max_discrepancy = 0;
};

SwapRecord sample_p_swap(const EdgeLabeling& t, int p, std::uint64_t seed);
SimTrace simulate(const SimConfig& cfg);
std::string trace_csv(const SimTrace& tr);

}  // namespace swaprobust
