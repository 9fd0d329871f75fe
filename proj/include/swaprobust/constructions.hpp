#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swaprobust/cocktail.hpp"
#include "swaprobust/graph.hpp"

namespace swaprobust {

// Labeling with a b-astray decomposition. L and H are implied by the labels:
// L = labels below the astray interval, H = labels above it.
struct AstrayLabeling {
    EdgeLabeling t;
    std::vector<Edge> astray;  // sorted canonically
    int b = 0;

    int a() const { return static_cast<int>(astray.size()); }
    int l() const { return (t.edges() - a()) / 2; }
};

EdgeLabeling tau(int q, const CocktailOptions& opts = {});
AstrayLabeling t8q(int q, const CocktailOptions& opts = {});

enum class AstrayPlan {
    Ascending,  // new astray edges take the top of the centre interval in canonical order
    TChain,     // explicit labels for the T_{8q+2i} chain
};

// step 1 and 3 share a pattern; step 2 adds five astray edges. Input order N must satisfy
// N = 8q + 2(step-1), q >= 1.
AstrayLabeling extend_even(const AstrayLabeling& in, int step, AstrayPlan plan = AstrayPlan::Ascending);
// Step implied by N mod 8.
AstrayLabeling extend_even(const AstrayLabeling& in, AstrayPlan plan = AstrayPlan::Ascending);

EdgeLabeling extend_odd(const AstrayLabeling& in);

// K_{4q} -> K_{8q}.
AstrayLabeling double_up(const AstrayLabeling& in);

struct TypeClaim {
    int m = 0;
    int ell = 0;
};

struct PipelineMeta {
    int s = 0;
    std::vector<int> sequence;  // n_0 .. n_s
    std::vector<std::string> tags;
    TypeClaim claim;  // (m, l) tracked through the recursive steps
    int p_max = 0;    // largest p for which every step precondition holds
    bool astray_valid = false;
};

struct PipelineResult {
    EdgeLabeling t;
    std::vector<Edge> astray;  // empty when the last step was extend_odd
    int b = 0;
    PipelineMeta meta;
};

std::vector<int> pipeline_sequence(int n, int s);
PipelineResult pipeline(int n, int s, const CocktailOptions& opts = {});

// K_{4s+2} on Z_{4s+1} u {inf}; inf is vertex 4s+2 and i in Z_{4s+1} is vertex i+1.
EdgeLabeling factorial_baseline(int s);
// Same round-robin layout for any even n >= 4; supermagic when n = 2 mod 4, alpha = n/2 otherwise.
EdgeLabeling factorial_style(int n);

// Checks the astray conditions and throws InternalError if they fail.
void assert_astray(const AstrayLabeling& x, const std::string& where);

}  // namespace swaprobust

#include "json.hpp"

namespace swaprobust {

// Named constructions for the CLI and sweeps. param: s for factorial, n for
// factorial-style and pipeline, q for tau and t8q.
struct BuiltLabeling {
    EdgeLabeling t;
    std::vector<Edge> astray;
    int b = 0;
    bool has_astray = false;
    nlohmann::json meta = nlohmann::json::object();  // file meta block
    std::optional<TypeClaim> claim;
    int p_max = 0;
};

BuiltLabeling build_family(const std::string& family, int param, int s = 2, const CocktailOptions& opts = {});

}  // namespace swaprobust
