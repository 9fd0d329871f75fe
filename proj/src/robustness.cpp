#include "swaprobust/robustness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "swaprobust/assignment.hpp"
#include "swaprobust/constructions.hpp"
#include "swaprobust/errors.hpp"

namespace swaprobust {

namespace {

// owner[x] = 1 when label x is incident to the vertex.
std::vector<char> label_mask(const EdgeLabeling& t, Vertex v) {
    std::vector<char> mask(t.edges() + 1, 0);
    for (Vertex w = 1; w <= t.order(); ++w)
        if (w != v) mask[t(v, w)] = 1;
    return mask;
}

std::vector<Label> labels_at(const EdgeLabeling& t, Vertex v) {
    std::vector<Label> out;
    for (Vertex w = 1; w <= t.order(); ++w)
        if (w != v) out.push_back(t(v, w));
    std::sort(out.begin(), out.end());
    return out;
}

struct AttackPlan {
    int score = 0;
    std::vector<Label> d1, d2;  // label sets D' and D''
};

AttackPlan plan_attack(const EdgeLabeling& t, int p, Vertex u, Vertex v, const std::vector<char>& mu,
                       const std::vector<char>& mv) {
    const int eps = t.edges();
    const Label uv = t(u, v);
    auto in = [&](const std::vector<char>& m, long x) { return x >= 1 && x <= eps && m[x]; };
    AttackPlan plan;
    int up = 0, um = 0, bad = 0;
    const int ds[4] = {p, -p, 2 * p, -2 * p};
    for (Label x : labels_at(t, u)) {
        bool in_up = in(mu, static_cast<long>(x) + p);
        bool in_bu = false;
        for (int d : ds) {
            if (in(mv, static_cast<long>(x) + d)) {
                in_bu = true;
                ++bad;
            }
        }
        up += in_up;
        if (!in_up && !in_bu && x <= eps - p && x != uv) plan.d1.push_back(x);
    }
    for (Label x : labels_at(t, v)) {
        bool in_um = in(mv, static_cast<long>(x) - p);
        bool in_bv = false;
        for (int d : ds) in_bv = in_bv || in(mu, static_cast<long>(x) + d);
        um += in_um;
        if (!in_um && !in_bv && x > p && x != uv) plan.d2.push_back(x);
    }
    plan.score = up + um + 2 * bad;
    return plan;
}

AttackResult realize(const EdgeLabeling& t, int p, Vertex u, Vertex v, const AttackPlan& plan) {
    const int eps = t.edges();
    std::vector<int> shift(eps + 1, 0);
    auto mark = [&](long x, int d) {
        if (x < 1 || x > eps) throw InternalError("attack: shifted label out of range");
        if (shift[x] != 0 && shift[x] != d) throw InternalError("attack: E1 and E2 overlap");
        shift[x] = d;
    };
    for (Label x : plan.d1) mark(x, +p), mark(static_cast<long>(x) + p, -p);
    for (Label x : plan.d2) mark(x, -p), mark(static_cast<long>(x) - p, +p);
    std::vector<Label> vals(t.values().begin(), t.values().end());
    for (Label& x : vals) x += shift[x];
    AttackResult r;
    try {
        r.swap = SwapRecord{t, EdgeLabeling(t.order(), std::move(vals)), p};
    } catch (const InvalidArgument& ex) {
        throw InternalError(std::string("attack produced an invalid swap: ") + ex.what());
    }
    if (!is_valid_swap(r.swap)) throw InternalError("attack swap exceeds magnitude");
    auto s0 = vertex_sums(t);
    auto s1 = vertex_sums(r.swap.swapped);
    r.u = u;
    r.v = v;
    r.score = plan.score;
    r.shifted = static_cast<int>(plan.d1.size() + plan.d2.size());
    r.base_gap = s0[u - 1] - s0[v - 1];
    r.discrepancy = std::llabs(s1[u - 1] - s1[v - 1]);
    r.guarantee = static_cast<std::int64_t>(p) * (2LL * t.order() - 2LL * p - 4 - plan.score) - std::llabs(r.base_gap);
    if (s1[u - 1] - s1[v - 1] != r.base_gap + static_cast<std::int64_t>(p) * r.shifted)
        throw InternalError("attack: shift count disagrees with recount");
    return r;
}

void attack_pre(const EdgeLabeling& t, int p) {
    if (p < 1 || p >= t.edges()) throw InvalidArgument("attack: need 1 <= p < epsilon");
    if (2 * p + 2 >= t.order())
        throw InvalidArgument("attack: degenerate size, need 2p+2 < n (n=" + std::to_string(t.order()) +
                              ", p=" + std::to_string(p) + ")");
}

}  // namespace

BadPairIndex bad_pair_index(const EdgeLabeling& t, int p) {
    const int n = t.order();
    const int eps = t.edges();
    if (p < 1 || p >= eps) throw InvalidArgument("bad_pair_index: need 1 <= p < epsilon");
    BadPairIndex idx;
    idx.n = n;
    idx.p = p;
    idx.u_plus.resize(n);
    idx.u_minus.resize(n);
    for (Vertex v = 1; v <= n; ++v) {
        auto mask = label_mask(t, v);
        for (Vertex w = 1; w <= n; ++w) {
            if (w == v) continue;
            Label x = t(v, w);
            if (x + p <= eps && mask[x + p]) idx.u_plus[v - 1].push_back(make_edge(v, w));
            if (x - p >= 1 && mask[x - p]) idx.u_minus[v - 1].push_back(make_edge(v, w));
        }
    }
    idx.b1.assign(n * n, 0);
    idx.b2.assign(n * n, 0);
    const auto inv = t.inverse();
    for (int type = 1; type <= 2; ++type) {
        const int d = type * p;
        auto& mat = type == 1 ? idx.b1 : idx.b2;
        auto& total = type == 1 ? idx.b1_total : idx.b2_total;
        for (int x = 1; x + d <= eps; ++x) {
            Edge e = edge_at(n, inv[x - 1]);
            Edge f = edge_at(n, inv[x + d - 1]);
            std::vector<std::pair<int, int>> prs;
            for (Vertex a : {e.u, e.v})
                for (Vertex c : {f.u, f.v})
                    if (a != c) prs.push_back({std::min(a, c), std::max(a, c)});
            std::sort(prs.begin(), prs.end());
            prs.erase(std::unique(prs.begin(), prs.end()), prs.end());
            for (auto [a, c] : prs) {
                ++mat[(a - 1) * n + (c - 1)];
                ++mat[(c - 1) * n + (a - 1)];
            }
            total += static_cast<std::int64_t>(prs.size());
        }
    }
    return idx;
}

PairChoice select_pair(const BadPairIndex& idx) {
    PairChoice best{0, 0, -1};
    for (Vertex u = 1; u <= idx.n; ++u) {
        for (Vertex v = 1; v <= idx.n; ++v) {
            if (u == v) continue;
            int sc = static_cast<int>(idx.u_plus[u - 1].size() + idx.u_minus[v - 1].size()) + 2 * idx.b(u, v);
            if (best.score < 0 || sc < best.score) best = {u, v, sc};
        }
    }
    return best;
}

PairChoice select_pair(const EdgeLabeling& t, int p) { return select_pair(bad_pair_index(t, p)); }

AttackResult attack_pair(const EdgeLabeling& t, int p, Vertex u, Vertex v) {
    attack_pre(t, p);
    if (u == v || u < 1 || v < 1 || u > t.order() || v > t.order()) throw InvalidArgument("attack: bad vertex pair");
    auto plan = plan_attack(t, p, u, v, label_mask(t, u), label_mask(t, v));
    return realize(t, p, u, v, plan);
}

AttackResult attack(const EdgeLabeling& t, int p) {
    attack_pre(t, p);
    PairChoice c = select_pair(t, p);
    AttackResult r = attack_pair(t, p, c.u, c.v);
    if (r.score != c.score) throw InternalError("attack: pair score mismatch");
    return r;
}

AttackResult best_attack(const EdgeLabeling& t, int p) {
    attack_pre(t, p);
    const int n = t.order();
    std::vector<std::vector<char>> masks;
    for (Vertex v = 1; v <= n; ++v) masks.push_back(label_mask(t, v));
    auto sums = vertex_sums(t);
    std::int64_t best = -1;
    Vertex bu = 0, bv = 0;
    AttackPlan best_plan;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v) continue;
            auto plan = plan_attack(t, p, u, v, masks[u - 1], masks[v - 1]);
            std::int64_t d = std::llabs(sums[u - 1] - sums[v - 1] +
                                        static_cast<std::int64_t>(p) * static_cast<std::int64_t>(plan.d1.size() + plan.d2.size()));
            if (d > best) best = d, bu = u, bv = v, best_plan = std::move(plan);
        }
    }
    return realize(t, p, bu, bv, best_plan);
}

std::int64_t exact_pair(const EdgeLabeling& t, int p, Vertex u, Vertex v) {
    const int eps = t.edges();
    std::vector<int> coef(eps, 0);
    for (Vertex w = 1; w <= t.order(); ++w) {
        if (w != u && w != v) {
            coef[t(u, w) - 1] = 1;
            coef[t(v, w) - 1] = -1;
        }
    }
    return max_band_linear(p, coef).value;
}

ExactResult exact_robustness(const EdgeLabeling& t, int p, int cap) {
    if (p < 0) throw InvalidArgument("exact_robustness: p must be >= 0");
    if (t.edges() > cap)
        throw CapExceeded("exact oracle refused: epsilon=" + std::to_string(t.edges()) + " exceeds cap " +
                          std::to_string(cap) + " (raise with --cap)");
    const int n = t.order();
    const int eps = t.edges();
    ExactResult best;
    best.value = -1;
    BandAssignment best_asg;
    std::vector<int> coef(eps);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v) continue;
            std::fill(coef.begin(), coef.end(), 0);
            for (Vertex w = 1; w <= n; ++w) {
                if (w != u && w != v) {
                    coef[t(u, w) - 1] = 1;
                    coef[t(v, w) - 1] = -1;
                }
            }
            auto asg = max_band_linear(p, coef);
            if (asg.value > best.value) {
                best.value = asg.value;
                best.u = u;
                best.v = v;
                best_asg = std::move(asg);
            }
        }
    }
    if (n < 2) {
        best.value = 0;
        return best;
    }
    std::vector<Label> vals(t.values().begin(), t.values().end());
    for (Label& x : vals) x = best_asg.col[x - 1];
    best.witness = SwapRecord{t, EdgeLabeling(n, std::move(vals)), p};
    if (!is_valid_swap(best.witness)) throw InternalError("exact witness is not a valid swap");
    auto s = vertex_sums(best.witness.swapped);
    if (s[best.u - 1] - s[best.v - 1] != best.value) throw InternalError("exact witness value mismatch");
    return best;
}

std::pair<std::int64_t, std::int64_t> theorem_bounds(std::int64_t n, std::int64_t p, std::int64_t alpha) {
    return {std::max<std::int64_t>(0, (n - 2 * p - 19) * p - alpha), (2 * n - 4) * p + alpha};
}

std::pair<std::int64_t, std::int64_t> block_shift_extremes(const EdgeLabeling& t, const std::vector<Edge>& f, int p) {
    if (p < 0) throw InvalidArgument("block_shift_extremes: p must be >= 0");
    if (static_cast<int>(f.size()) < 2 * p) throw InvalidArgument("block_shift_extremes: |F| < 2p");
    std::vector<Label> labs;
    for (const Edge& e : f) labs.push_back(t(e.u, e.v));
    std::sort(labs.begin(), labs.end());
    for (std::size_t i = 1; i < labs.size(); ++i)
        if (labs[i] != labs[i - 1] + 1) throw InvalidArgument("block_shift_extremes: labels of F are not consecutive");
    if (p == 0 || labs.empty()) return {0, 0};
    std::int64_t base = 0;
    for (Label x : labs) base += x;
    std::vector<int> coef(t.edges(), 0);
    for (Label x : labs) coef[x - 1] = 1;
    std::int64_t hi = max_band_linear(p, coef).value - base;
    for (Label x : labs) coef[x - 1] = -1;
    std::int64_t lo = -max_band_linear(p, coef).value - base;
    return {lo, hi};
}

std::int64_t drift_bound(std::int64_t m, std::int64_t ell, std::int64_t p, std::int64_t n, std::int64_t alpha) {
    return alpha + 2 * m * p * p + 2 * p * (n - ell - 1);
}

DriftCertificate best_drift_bound(const TypeWitness& w, int n, std::int64_t alpha) {
    DriftCertificate best{0, 0, drift_bound(0, 0, w.p, n, alpha)};
    for (int m = 1; m <= w.m; ++m) {
        int ell = w.ell_for(m);
        std::int64_t b = drift_bound(m, ell, w.p, n, alpha);
        if (b < best.bound) best = {m, ell, b};
    }
    return best;
}

nlohmann::json to_json(const RobustnessReport& r) {
    nlohmann::json j{{"n", r.n},
                     {"p", r.p},
                     {"alpha", r.alpha},
                     {"attack",
                      {{"u", r.attack.u},
                       {"v", r.attack.v},
                       {"score", r.attack.score},
                       {"shifted", r.attack.shifted},
                       {"discrepancy", r.attack.discrepancy},
                       {"guarantee", r.attack.guarantee},
                       {"swapped", std::vector<Label>(r.attack.swap.swapped.values().begin(),
                                                      r.attack.swap.swapped.values().end())}}},
                     {"theorem_lower", r.bounds.first},
                     {"theorem_upper", r.bounds.second}};
    const double denom = 2.0 * r.p * r.n;
    if (denom > 0) j["ratio_lb"] = static_cast<double>(r.attack.discrepancy) / denom;
    if (r.exact) {
        j["exact"] = {{"value", r.exact->value},
                      {"u", r.exact->u},
                      {"v", r.exact->v},
                      {"swapped", std::vector<Label>(r.exact->witness.swapped.values().begin(),
                                                     r.exact->witness.swapped.values().end())}};
        if (denom > 0) j["ratio_exact"] = static_cast<double>(r.exact->value) / denom;
    }
    return j;
}

int p_from_rule(const std::string& rule, int n, int param) {
    (void)param;
    if (rule == "sqrt") return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    if (rule == "half-q") return std::max(1, (n / 8) / 2);
    auto colon = rule.find(':');
    if (colon != std::string::npos) {
        std::string kind = rule.substr(0, colon);
        int k = std::stoi(rule.substr(colon + 1));
        if (kind == "const") return k;
        if (kind == "div" && k > 0) return std::max(1, n / k);
    }
    throw InvalidArgument("unknown p rule '" + rule + "' (sqrt, half-q, const:K, div:D)");
}

std::vector<SweepRow> ratio_sweep(const std::string& family, const std::vector<int>& params, const std::string& p_rule,
                                  const SweepOptions& opts) {
    std::vector<SweepRow> rows;
    for (int param : params) {
        SweepRow row;
        auto start = std::chrono::steady_clock::now();
        try {
            BuiltLabeling b = build_family(family, param, opts.s);
            const EdgeLabeling& t = b.t;
            row.n = t.order();
            row.p = p_from_rule(p_rule, row.n, param);
            row.alpha = alpha_of(t);
            AttackResult a = attack(t, row.p);
            row.attack_lb = a.discrepancy;
            DriftCertificate dc = best_drift_bound(find_type_witness(t, row.p), row.n, row.alpha);
            row.upper = std::min(theorem_bounds(row.n, row.p, row.alpha).second, dc.bound);
            const double denom = 2.0 * row.p * row.n;
            row.ratio_lb = static_cast<double>(row.attack_lb) / denom;
            if (opts.exact && t.edges() <= opts.cap) {
                row.exact = exact_robustness(t, row.p, opts.cap).value;
                row.ratio_exact = static_cast<double>(*row.exact) / denom;
            }
        } catch (const std::exception& ex) {
            row.error = ex.what();
        }
        if (opts.timing)
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n,p,alpha,attack_lb,exact,upper,ratio_lb,ratio_exact,seconds\n";
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.6f", x);
        return std::string(buf);
    };
    for (const SweepRow& r : rows) {
        if (!r.error.empty()) {
            os << r.n << ',' << r.p << ",,,,,,," << (r.seconds ? fmt(*r.seconds) : "") << '\n';
            continue;
        }
        os << r.n << ',' << r.p << ',' << r.alpha << ',' << r.attack_lb << ','
           << (r.exact ? std::to_string(*r.exact) : "") << ',' << r.upper << ',' << fmt(r.ratio_lb) << ','
           << (r.ratio_exact ? fmt(*r.ratio_exact) : "") << ',' << (r.seconds ? fmt(*r.seconds) : "") << '\n';
    }
    return os.str();
}

}  // namespace swaprobust
