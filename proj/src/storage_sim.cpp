#include "swaprobust/storage_sim.hpp"

#include <algorithm>
#include <sstream>

#include "swaprobust/errors.hpp"
#include "swaprobust/robustness.hpp"
#include "swaprobust/verification.hpp"

namespace swaprobust {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("bounded_draw: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

namespace {

// Current state of a drifting labeling: label of each edge and owner of each label.
struct Walk {
    std::vector<Label> base, cur, epoch_start;
    std::vector<int> owner;  // owner[x] = edge index (0-based) holding label x

    explicit Walk(const EdgeLabeling& t)
        : base(t.values().begin(), t.values().end()), cur(base), epoch_start(base), owner(base.size() + 1) {
        for (std::size_t i = 0; i < cur.size(); ++i) owner[cur[i]] = static_cast<int>(i);
    }

    void step(std::mt19937_64& rng, int p, int budget, int attempts) {
        const int eps = static_cast<int>(cur.size());
        const int reach = std::min(p, budget);
        if (reach < 1 || eps < 2) return;
        for (int k = 0; k < attempts; ++k) {
            int x = static_cast<int>(bounded_draw(rng, eps)) + 1;
            int d = static_cast<int>(bounded_draw(rng, reach)) + 1;
            int y = x + d;
            if (y > eps) continue;
            int e = owner[x], f = owner[y];
            // e moves x -> y, f moves y -> x
            if (std::abs(y - base[e]) > p || std::abs(x - base[f]) > p) continue;
            if (std::abs(y - epoch_start[e]) > budget || std::abs(x - epoch_start[f]) > budget) continue;
            cur[e] = y;
            cur[f] = x;
            owner[y] = e;
            owner[x] = f;
        }
        epoch_start = cur;
    }

    int max_disp() const {
        int m = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) m = std::max(m, std::abs(cur[i] - base[i]));
        return m;
    }
};

SimRecord measure(const EdgeLabeling& t, int epoch, int max_disp) {
    auto sums = vertex_sums(t);
    auto hi = std::max_element(sums.begin(), sums.end());
    auto lo = std::min_element(sums.begin(), sums.end());
    return {epoch, *hi - *lo, static_cast<Vertex>(hi - sums.begin()) + 1, static_cast<Vertex>(lo - sums.begin()) + 1,
            max_disp};
}

}  // namespace

SwapRecord sample_p_swap(const EdgeLabeling& t, int p, std::uint64_t seed) {
    if (p < 0) throw InvalidArgument("sample_p_swap: p must be >= 0");
    std::mt19937_64 rng(seed);
    Walk w(t);
    w.step(rng, p, p, 4 * t.edges());
    SwapRecord r{t, EdgeLabeling(t.order(), w.cur), p};
    if (!is_valid_swap(r)) throw InternalError("sampled swap exceeds magnitude");
    return r;
}

SimTrace simulate(const SimConfig& cfg) {
    if (cfg.epochs < 0 || cfg.step_budget < 0 || cfg.p < 0) throw InvalidArgument("simulate: negative parameter");
    const EdgeLabeling& t = cfg.base;
    SimTrace tr;
    const std::int64_t alpha = alpha_of(t);
    if (cfg.p == 0) tr.bound = alpha;
    else if (t.order() >= 2) tr.bound = best_drift_bound(find_type_witness(t, cfg.p), t.order(), alpha).bound;

    std::mt19937_64 rng(cfg.seed);
    Walk w(t);
    const int attempts = cfg.attempts_per_epoch > 0 ? cfg.attempts_per_epoch : t.edges();
    tr.records.push_back(measure(t, 0, 0));
    for (int ep = 1; ep <= cfg.epochs; ++ep) {
        w.step(rng, cfg.p, cfg.step_budget, attempts);
        int md = w.max_disp();
        if (md > cfg.p) throw InternalError("simulate: cumulative displacement exceeded p");
        tr.records.push_back(measure(EdgeLabeling(t.order(), w.cur), ep, md));
    }
    tr.final_swap = SwapRecord{t, EdgeLabeling(t.order(), w.cur), cfg.p};
    for (const SimRecord& r : tr.records) {
        tr.max_discrepancy = std::max(tr.max_discrepancy, r.discrepancy);
        if (tr.bound && r.discrepancy > *tr.bound) tr.bound_held = false;
    }
    return tr;
}

std::string trace_csv(const SimTrace& tr) {
    std::ostringstream os;
    os << "epoch,discrepancy,u,v,max_disp\n";
    for (const SimRecord& r : tr.records)
        os << r.epoch << ',' << r.discrepancy << ',' << r.u << ',' << r.v << ',' << r.max_disp << '\n';
    return os.str();
}

}  // namespace swaprobust
