#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "swaprobust/graph.hpp"
#include "swaprobust/verification.hpp"

namespace swaprobust {

struct BadPairIndex {
    int n = 0;
    int p = 0;
    std::vector<std::vector<Edge>> u_plus, u_minus;  // [v-1]
    std::vector<int> b1, b2;                         // n*n symmetric, [(u-1)*n + (v-1)]
    std::int64_t b1_total = 0, b2_total = 0;         // over unordered vertex pairs

    int b(Vertex u, Vertex v) const { return b1[(u - 1) * n + (v - 1)] + b2[(u - 1) * n + (v - 1)]; }
};

BadPairIndex bad_pair_index(const EdgeLabeling& t, int p);

struct PairChoice {
    Vertex u = 0;
    Vertex v = 0;
    int score = 0;
};

PairChoice select_pair(const EdgeLabeling& t, int p);
PairChoice select_pair(const BadPairIndex& idx);

struct AttackResult {
    SwapRecord swap;
    Vertex u = 0;
    Vertex v = 0;
    int score = 0;
    int shifted = 0;                 // |D'| + |D''|
    std::int64_t base_gap = 0;       // s(t,u) - s(t,v)
    std::int64_t discrepancy = 0;    // |s(θt,u) - s(θt,v)|
    std::int64_t guarantee = 0;      // p(2n-2p-4-score) - |s(t,u)-s(t,v)|
};

// Swap construction for a given ordered pair; score is recomputed for that pair.
AttackResult attack_pair(const EdgeLabeling& t, int p, Vertex u, Vertex v);
AttackResult attack(const EdgeLabeling& t, int p);
// Same construction tried on every ordered pair; the largest discrepancy wins.
AttackResult best_attack(const EdgeLabeling& t, int p);

constexpr int kDefaultExactCap = 105;

struct ExactResult {
    std::int64_t value = 0;
    Vertex u = 0;
    Vertex v = 0;
    SwapRecord witness;
};

ExactResult exact_robustness(const EdgeLabeling& t, int p, int cap = kDefaultExactCap);
// Max of s(θt,u) - s(θt,v) for one ordered pair.
std::int64_t exact_pair(const EdgeLabeling& t, int p, Vertex u, Vertex v);

std::pair<std::int64_t, std::int64_t> theorem_bounds(std::int64_t n, std::int64_t p, std::int64_t alpha);

std::pair<std::int64_t, std::int64_t> block_shift_extremes(const EdgeLabeling& t, const std::vector<Edge>& f, int p);

std::int64_t drift_bound(std::int64_t m, std::int64_t ell, std::int64_t p, std::int64_t n, std::int64_t alpha);

struct DriftCertificate {
    int m = 0;
    int ell = 0;
    std::int64_t bound = 0;
};
// Tightest drift bound over every (m, l) the witness certifies.
DriftCertificate best_drift_bound(const TypeWitness& w, int n, std::int64_t alpha);

struct RobustnessReport {
    int n = 0;
    int p = 0;
    std::int64_t alpha = 0;
    AttackResult attack;
    std::pair<std::int64_t, std::int64_t> bounds;
    std::optional<ExactResult> exact;
};

nlohmann::json to_json(const RobustnessReport& r);

struct SweepRow {
    int n = 0;
    int p = 0;
    std::int64_t alpha = 0;
    std::int64_t attack_lb = 0;
    std::optional<std::int64_t> exact;
    std::int64_t upper = 0;
    double ratio_lb = 0;
    std::optional<double> ratio_exact;
    std::optional<double> seconds;
    std::string error;
};

struct SweepOptions {
    bool exact = false;
    int cap = kDefaultExactCap;
    int s = 2;            // pipeline rounds
    bool timing = false;  // fills the seconds column
};

// family: factorial | factorial-style | t8q | tau | pipeline. Parameters are family-native
// (s, n, q, q, n). p_rule: sqrt | const:K | div:D | half-q.
int p_from_rule(const std::string& rule, int n, int param);
std::vector<SweepRow> ratio_sweep(const std::string& family, const std::vector<int>& params, const std::string& p_rule,
                                  const SweepOptions& opts = {});
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace swaprobust
