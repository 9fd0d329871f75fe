#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swaprobust/graph.hpp"

namespace swaprobust {

enum class CocktailMethod { Construct, Search };

struct CocktailOptions {
    CocktailMethod method = CocktailMethod::Construct;
    std::int64_t budget = 20'000'000;  // search nodes
    std::string cache_dir;             // empty: $SWAPROBUST_CACHE_DIR, or no cache if unset
    std::string input_file;            // externally supplied labeling, takes precedence
};

// Cocktail-party graph K_{2q[2]} on vertices 1..4q with parts {2i-1, 2i}; edges in lexicographic order.
std::vector<Edge> cocktail_edges(int q);

// Supermagic labeling of K_{2q[2]}, q >= 2.
GraphLabeling supermagic_cocktail(int q, const CocktailOptions& opts = {});

// Direct construction (no search).
GraphLabeling cocktail_construct(int q);
// Depth-first search with vertex-sum pruning; throws BudgetExhausted.
GraphLabeling cocktail_search(int q, std::int64_t budget);

// Checks that g is a supermagic labeling of K_{2q[2]} with labels [|E|].
bool is_supermagic_cocktail(const GraphLabeling& g, int q);

// Two disjoint cocktail copies H (1..4q) and H' (4q+1..8q), labels [2|E(H)|].
struct BarT {
    int q = 0;
    GraphLabeling g;
    std::vector<char> low;  // low[i]: edge i carries a label <= |E(H)|
};
BarT bar_t(int q, const CocktailOptions& opts = {});

}  // namespace swaprobust
