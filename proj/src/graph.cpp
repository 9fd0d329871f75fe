#include "swaprobust/graph.hpp"

#include <algorithm>
#include <string>

#include "swaprobust/errors.hpp"

namespace swaprobust {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw InvalidArgument("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return a < b ? Edge{a, b} : Edge{b, a};
}

int edge_index(int n, Vertex u, Vertex v) {
    if (n < 2 || u < 1 || v > n || u >= v)
        throw InvalidArgument("edge_index: need 1 <= u < v <= n, got n=" + std::to_string(n) +
                              " u=" + std::to_string(u) + " v=" + std::to_string(v));
    return (u - 1) * (2 * n - u) / 2 + (v - u);
}

Edge edge_at(int n, int index) {
    if (index < 1 || index > edge_count(n))
        throw InvalidArgument("edge_at: index " + std::to_string(index) + " outside [1," +
                              std::to_string(edge_count(n)) + "]");
    int u = 1;
    int before = 0;  // edges with smaller first vertex
    while (before + (n - u) < index) {
        before += n - u;
        ++u;
    }
    return {u, u + (index - before)};
}

EdgeLabeling::EdgeLabeling(int n, std::vector<Label> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw InvalidArgument("labeling order must be positive");
    const int eps = edge_count(n);
    if (static_cast<int>(values_.size()) != eps)
        throw InvalidArgument("labeling has " + std::to_string(values_.size()) + " values, expected " +
                              std::to_string(eps));
    std::vector<char> seen(eps + 1, 0);
    for (Label x : values_) {
        if (x < 1 || x > eps) throw InvalidArgument("label " + std::to_string(x) + " out of range");
        if (seen[x]) throw InvalidArgument("not a bijection: label " + std::to_string(x) + " repeated");
        seen[x] = 1;
    }
}

Label EdgeLabeling::operator()(Vertex u, Vertex v) const {
    Edge e = make_edge(u, v);
    return values_[edge_index(n_, e.u, e.v) - 1];
}

std::vector<int> EdgeLabeling::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

LabelingBuilder::LabelingBuilder(int n) : n_(n), values_(edge_count(n), 0) {}

void LabelingBuilder::set(Vertex a, Vertex b, Label x) {
    Edge e = make_edge(a, b);
    int idx = edge_index(n_, e.u, e.v);
    if (values_[idx - 1] != 0)
        throw InternalError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} labeled twice");
    values_[idx - 1] = x;
}

bool LabelingBuilder::has(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    return values_[edge_index(n_, e.u, e.v) - 1] != 0;
}

EdgeLabeling LabelingBuilder::finish() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) {
            Edge e = edge_at(n_, static_cast<int>(i) + 1);
            throw InternalError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} unlabeled");
        }
    }
    try {
        return EdgeLabeling(n_, values_);
    } catch (const InvalidArgument& ex) {
        throw InternalError(std::string("construction output invalid: ") + ex.what());
    }
}

std::vector<std::int64_t> vertex_sums(const EdgeLabeling& t) {
    const int n = t.order();
    std::vector<std::int64_t> sums(n, 0);
    int idx = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            Label x = t.values()[idx++];
            sums[u - 1] += x;
            sums[v - 1] += x;
        }
    }
    return sums;
}

std::int64_t alpha_of_sums(std::span<const std::int64_t> sums) {
    if (sums.empty()) return 0;
    auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
    return *hi - *lo;
}

std::int64_t alpha_of(const EdgeLabeling& t) { return alpha_of_sums(vertex_sums(t)); }

std::vector<Edge> incident(int n, Vertex v) {
    std::vector<Edge> out;
    out.reserve(n - 1);
    for (int w = 1; w <= n; ++w)
        if (w != v) out.push_back(make_edge(v, w));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeLabeling relabel_vertices(const EdgeLabeling& t, std::span<const Vertex> perm) {
    const int n = t.order();
    if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation size mismatch");
    LabelingBuilder b(n);
    int idx = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) b.set(perm[u - 1], perm[v - 1], t.values()[idx++]);
    return b.finish();
}

std::vector<std::int64_t> vertex_sums(const GraphLabeling& g) {
    std::vector<std::int64_t> sums(g.vertices, 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        sums[g.edges[i].u - 1] += g.labels[i];
        sums[g.edges[i].v - 1] += g.labels[i];
    }
    return sums;
}

std::int64_t alpha_of(const GraphLabeling& g) { return alpha_of_sums(vertex_sums(g)); }

int max_displacement(const EdgeLabeling& a, const EdgeLabeling& b) {
    if (a.order() != b.order()) throw InvalidArgument("labelings on different graphs");
    int best = 0;
    for (int i = 0; i < a.edges(); ++i) best = std::max(best, std::abs(a.values()[i] - b.values()[i]));
    return best;
}

bool is_valid_swap(const SwapRecord& r) {
    // Both labelings are bijections by construction of EdgeLabeling.
    return r.base.order() == r.swapped.order() && r.p >= 0 && max_displacement(r.base, r.swapped) <= r.p;
}

}  // namespace swaprobust
