#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace swaprobust {

using Vertex = int;
using Label = int;

// Unordered edge, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

inline int edge_count(int n) { return n * (n - 1) / 2; }

// Canonical 1-based lexicographic index of {u,v}, u < v.
int edge_index(int n, Vertex u, Vertex v);
Edge edge_at(int n, int index);

class EdgeLabeling {
public:
    EdgeLabeling() = default;
    // values[i] is the label of the edge with canonical index i+1; must be a bijection onto [ε].
    EdgeLabeling(int n, std::vector<Label> values);

    int order() const { return n_; }
    int edges() const { return static_cast<int>(values_.size()); }

    Label operator()(Vertex u, Vertex v) const;
    Label at(int index) const { return values_[index - 1]; }
    std::span<const Label> values() const { return values_; }

    // inverse()[x-1] is the canonical index of the edge labeled x.
    std::vector<int> inverse() const;

    bool operator==(const EdgeLabeling&) const = default;

private:
    int n_ = 0;
    std::vector<Label> values_;
};

// Collects (u, v, label) assignments from a construction and validates on finish.
class LabelingBuilder {
public:
    explicit LabelingBuilder(int n);
    void set(Vertex a, Vertex b, Label x);
    bool has(Vertex a, Vertex b) const;
    EdgeLabeling finish() const;  // throws InternalError on gaps or duplicates

private:
    int n_;
    std::vector<Label> values_;
};

// sums[v-1] = s(t, v).
std::vector<std::int64_t> vertex_sums(const EdgeLabeling& t);
std::int64_t alpha_of(const EdgeLabeling& t);
std::int64_t alpha_of_sums(std::span<const std::int64_t> sums);

// Edges incident to v, in canonical order.
std::vector<Edge> incident(int n, Vertex v);

// perm[v-1] is the new name of vertex v.
EdgeLabeling relabel_vertices(const EdgeLabeling& t, std::span<const Vertex> perm);

// Labeling on an arbitrary simple graph (used for cocktail-party pieces).
struct GraphLabeling {
    int vertices = 0;
    std::vector<Edge> edges;
    std::vector<Label> labels;
};
std::vector<std::int64_t> vertex_sums(const GraphLabeling& g);
std::int64_t alpha_of(const GraphLabeling& g);

struct SwapRecord {
    EdgeLabeling base;
    EdgeLabeling swapped;
    int p = 0;
};

int max_displacement(const EdgeLabeling& a, const EdgeLabeling& b);
bool is_valid_swap(const SwapRecord& r);

}  // namespace swaprobust
