#include "swaprobust/cocktail.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>

#include "json.hpp"
#include "swaprobust/constructions.hpp"
#include "swaprobust/errors.hpp"
#include "swaprobust/labeling_io.hpp"

namespace swaprobust {

namespace {

int part_vertex(int part, int side) { return 2 * part + side + 1; }

// One K_{2,2} block between parts; rows belong to the tail part (equal row sums),
// columns to the head part, whose two vertices receive -mag / +mag around the mean.
struct Block {
    int tail = 0;
    int head = 0;
    int m[2][2] = {{0, 0}, {0, 0}};
    int sign = 1;  // +1: head vertex 0 takes the high column
};

// Rotational near-regular tournament on k = 2q parts: heads[{a,b}] in {a,b}.
std::map<std::pair<int, int>, int> rotational_heads(int k) {
    const int q = k / 2;
    std::map<std::pair<int, int>, int> heads;
    for (int i = 0; i < k; ++i) {
        for (int d = 1; d < q; ++d) {
            int j = (i + d) % k;
            heads[{std::min(i, j), std::max(i, j)}] = j;
        }
    }
    for (int i = 0; i < q; ++i) heads[{i, i + q}] = i + q;
    return heads;
}

GraphLabeling assemble(int q, std::vector<Block>& blocks, const std::vector<int>& mags) {
    const int k = 2 * q;
    std::vector<std::vector<int>> by_head(k);
    for (std::size_t g = 0; g < blocks.size(); ++g) by_head[blocks[g].head].push_back(static_cast<int>(g));
    for (int part = 0; part < k; ++part) {
        auto& list = by_head[part];
        std::size_t start = 0;
        // Magnitude-2 block (only ever first in the list) is balanced by the next two.
        if (!list.empty() && mags[list[0]] == 2) {
            if (list.size() < 3) throw InternalError("cocktail: magnitude-2 block without partners");
            blocks[list[0]].sign = 1;
            blocks[list[1]].sign = -1;
            blocks[list[2]].sign = -1;
            start = 3;
        }
        if ((list.size() - start) % 2 != 0) throw InternalError("cocktail: unbalanced head parity");
        for (std::size_t i = start; i < list.size(); ++i) blocks[list[i]].sign = ((i - start) % 2 == 0) ? 1 : -1;
    }
    GraphLabeling g{4 * q, {}, {}};
    std::map<Edge, Label> lab;
    for (const Block& b : blocks) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                int head_side = (b.sign == 1) ? 1 - c : c;
                lab[make_edge(part_vertex(b.tail, r), part_vertex(b.head, head_side))] = b.m[r][c];
            }
        }
    }
    for (const auto& [e, x] : lab) {
        g.edges.push_back(e);
        g.labels.push_back(x);
    }
    return g;
}

// q even: complementary label pairs, every block has offset magnitude 1.
GraphLabeling construct_even(int q) {
    const int k = 2 * q;
    const int big_e = 2 * k * (k - 1);
    auto heads = rotational_heads(k);
    std::vector<int> indeg(k, 0);
    for (const auto& [pr, h] : heads) ++indeg[h];
    std::vector<int> odd;
    for (int i = 0; i < k; ++i)
        if (indeg[i] % 2) odd.push_back(i);
    if (odd.size() % 2) throw InternalError("cocktail: odd number of odd in-degrees");
    for (std::size_t i = 0; i < odd.size(); i += 2) {
        auto key = std::make_pair(odd[i], odd[i + 1]);
        heads[key] = (heads[key] == key.first) ? key.second : key.first;
    }
    std::vector<Block> blocks;
    int r = 0;
    for (const auto& [pr, h] : heads) {
        ++r;
        int x = 2 * r - 1, y = 2 * r;
        Block b;
        b.head = h;
        b.tail = (h == pr.first) ? pr.second : pr.first;
        b.m[0][0] = x;
        b.m[0][1] = big_e + 1 - x;
        b.m[1][0] = big_e + 1 - y;
        b.m[1][1] = y;
        blocks.push_back(b);
    }
    return assemble(q, blocks, std::vector<int>(blocks.size(), 1));
}

// q odd: blow up a supermagic K_{2q} (factorial construction) into blocks of four consecutive labels.
GraphLabeling construct_odd(int q) {
    const int k = 2 * q;
    const int s = (q - 1) / 2;
    EdgeLabeling f = factorial_baseline(s);
    auto heads = rotational_heads(k);
    std::vector<int> indeg(k, 0);
    for (const auto& [pr, h] : heads) ++indeg[h];
    std::vector<Block> blocks;
    std::vector<int> mags;
    std::vector<int> seen_heads(k, 0);
    for (const auto& [pr, h] : heads) {
        int base = 4 * (f(pr.first + 1, pr.second + 1) - 1);
        bool two = (indeg[h] % 2 == 1) && seen_heads[h] == 0;
        ++seen_heads[h];
        Block b;
        b.head = h;
        b.tail = (h == pr.first) ? pr.second : pr.first;
        b.m[0][0] = base + 1;
        b.m[0][1] = base + 4;
        b.m[1][0] = base + (two ? 2 : 3);
        b.m[1][1] = base + (two ? 3 : 2);
        blocks.push_back(b);
        mags.push_back(two ? 2 : 1);
    }
    return assemble(q, blocks, mags);
}

std::string resolve_cache_dir(const CocktailOptions& opts) {
    if (!opts.cache_dir.empty()) return opts.cache_dir;
    if (const char* env = std::getenv("SWAPROBUST_CACHE_DIR")) return env;
    return {};
}

GraphLabeling from_triples(int q, const nlohmann::json& edges) {
    std::map<Edge, Label> lab;
    for (const auto& tr : edges) lab[make_edge(tr.at(0).get<int>(), tr.at(1).get<int>())] = tr.at(2).get<int>();
    GraphLabeling g{4 * q, {}, {}};
    for (const auto& [e, x] : lab) {
        g.edges.push_back(e);
        g.labels.push_back(x);
    }
    return g;
}

nlohmann::json to_triples(const GraphLabeling& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < g.edges.size(); ++i) arr.push_back({g.edges[i].u, g.edges[i].v, g.labels[i]});
    return arr;
}

}  // namespace

std::vector<Edge> cocktail_edges(int q) {
    std::vector<Edge> out;
    const int n = 4 * q;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!(u % 2 == 1 && v == u + 1)) out.push_back({u, v});
    return out;
}

bool is_supermagic_cocktail(const GraphLabeling& g, int q) {
    auto expected = cocktail_edges(q);
    if (g.vertices != 4 * q || g.edges != expected || g.labels.size() != expected.size()) return false;
    std::vector<Label> sorted = g.labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<Label>(i) + 1) return false;
    return alpha_of(g) == 0;
}

GraphLabeling cocktail_construct(int q) {
    if (q < 2) throw InvalidArgument("supermagic K_{2q[2]} needs q >= 2");
    GraphLabeling g = (q % 2 == 0) ? construct_even(q) : construct_odd(q);
    if (!is_supermagic_cocktail(g, q)) throw InternalError("cocktail construction not supermagic at q=" + std::to_string(q));
    return g;
}

GraphLabeling cocktail_search(int q, std::int64_t budget) {
    if (q < 2) throw InvalidArgument("supermagic K_{2q[2]} needs q >= 2");
    const auto edges = cocktail_edges(q);
    const int ne = static_cast<int>(edges.size());
    const int nv = 4 * q;
    const std::int64_t target = static_cast<std::int64_t>(2 * q - 1) * (ne + 1);
    std::vector<std::int64_t> sum(nv + 1, 0);
    std::vector<int> left(nv + 1, 4 * q - 2);
    std::vector<char> used(ne + 2, 0);
    std::vector<Label> lab(ne, 0);
    std::int64_t nodes = 0;

    // Feasible iff need can be met by `cnt` distinct unused labels (range check only).
    auto feasible = [&](std::int64_t need, int cnt) {
        if (cnt == 0) return need == 0;
        std::int64_t lo = 0, hi = 0;
        int taken = 0;
        for (int x = 1; x <= ne && taken < cnt; ++x)
            if (!used[x]) lo += x, ++taken;
        if (taken < cnt) return false;
        taken = 0;
        for (int x = ne; x >= 1 && taken < cnt; --x)
            if (!used[x]) hi += x, ++taken;
        return lo <= need && need <= hi;
    };

    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == ne) return true;
        if (++nodes > budget) throw BudgetExhausted("cocktail search exceeded " + std::to_string(budget) + " nodes at q=" + std::to_string(q));
        const Edge e = edges[i];
        for (int x = 1; x <= ne; ++x) {
            if (used[x]) continue;
            std::int64_t nu = target - sum[e.u] - x, nv2 = target - sum[e.v] - x;
            if (nu < 0 || nv2 < 0) break;  // larger labels overshoot too
            used[x] = 1;
            sum[e.u] += x, sum[e.v] += x;
            --left[e.u], --left[e.v];
            bool ok = feasible(nu, left[e.u]) && feasible(nv2, left[e.v]);
            if (ok) {
                lab[i] = x;
                if (self(self, i + 1)) return true;
            }
            used[x] = 0;
            sum[e.u] -= x, sum[e.v] -= x;
            ++left[e.u], ++left[e.v];
        }
        return false;
    };
    if (!dfs(dfs, 0)) throw InternalError("cocktail search space exhausted without a solution");
    return GraphLabeling{nv, edges, lab};
}

GraphLabeling supermagic_cocktail(int q, const CocktailOptions& opts) {
    if (q < 2) throw InvalidArgument("supermagic K_{2q[2]} needs q >= 2 (k = 2q >= 3)");
    if (!opts.input_file.empty()) {
        auto doc = nlohmann::json::parse(read_file(opts.input_file));
        GraphLabeling g = from_triples(q, doc.at("edges"));
        if (!is_supermagic_cocktail(g, q)) throw FormatError("supplied cocktail labeling is not supermagic for q=" + std::to_string(q));
        return g;
    }
    const std::string dir = resolve_cache_dir(opts);
    const std::string tag = opts.method == CocktailMethod::Search ? "search" : "construct";
    std::string path;
    if (!dir.empty()) {
        path = (std::filesystem::path(dir) / ("cocktail_q" + std::to_string(q) + "_" + tag + ".json")).string();
        if (std::filesystem::exists(path)) {
            auto doc = nlohmann::json::parse(read_file(path));
            GraphLabeling g = from_triples(q, doc.at("edges"));
            if (is_supermagic_cocktail(g, q)) return g;
        }
    }
    GraphLabeling g = opts.method == CocktailMethod::Search ? cocktail_search(q, opts.budget) : cocktail_construct(q);
    if (!is_supermagic_cocktail(g, q)) throw InternalError("cocktail labeling failed verification");
    if (!path.empty()) {
        std::filesystem::create_directories(dir);
        nlohmann::json doc{{"q", q}, {"edges", to_triples(g)}};
        write_file_atomic(path, doc.dump() + "\n");
    }
    return g;
}

BarT bar_t(int q, const CocktailOptions& opts) {
    GraphLabeling t0 = supermagic_cocktail(q, opts);
    const int eh = static_cast<int>(t0.edges.size());
    const int shift = 4 * q;
    BarT out{q, GraphLabeling{8 * q, {}, {}}, {}};
    // F1: both endpoints odd or both even (first/second vertex of every part).
    auto in_f1 = [](const Edge& e) { return (e.u % 2) == (e.v % 2); };
    for (int copy = 0; copy < 2; ++copy) {
        for (int i = 0; i < eh; ++i) {
            const Edge& e = t0.edges[i];
            bool keep = copy == 0 ? in_f1(e) : !in_f1(e);
            out.g.edges.push_back({e.u + copy * shift, e.v + copy * shift});
            out.g.labels.push_back(keep ? t0.labels[i] : t0.labels[i] + eh);
            out.low.push_back(keep ? 1 : 0);
        }
    }
    return out;
}

}  // namespace swaprobust
