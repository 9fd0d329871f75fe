// One PASS/FAIL line per acceptance criterion; exit code is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "swaprobust/cli.hpp"
#include "swaprobust/constructions.hpp"
#include "swaprobust/labeling_io.hpp"
#include "swaprobust/robustness.hpp"
#include "swaprobust/squares.hpp"
#include "swaprobust/storage_sim.hpp"
#include "swaprobust/verification.hpp"

using namespace swaprobust;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome weaving_suite() {
    Outcome o;
    auto t0 = Clock::now();
    for (int q = 1; q <= 64; ++q) {
        auto w = weaving_square(q);
        auto r = check_weaving(w);
        std::int64_t want = 32LL * q * q * q + 2LL * q;
        if (!r.pass) o.fail(fmt("q=%d property failed", q));
        if (r.line_sum != want) o.fail(fmt("q=%d line sum %lld", q, static_cast<long long>(r.line_sum)));
    }
    double secs = seconds_since(t0);
    auto w3 = weaving_square(3).entries;
    if (w3.at(1, 1) != 1 || w3.at(1, 4) != 52 || w3.at(12, 12) != 27) o.fail("q=3 spot values differ");
    if (secs >= 5.0) o.fail(fmt("took %.2fs", secs));
    if (o.pass) o.detail = fmt("q in [1,64], %.3fs", secs);
    return o;
}

Outcome baseline_suite() {
    Outcome o;
    auto t = factorial_baseline(1);
    for (auto s : vertex_sums(t))
        if (s != 40) o.fail("s=1 vertex sum != 40");
    for (int s = 1; s <= 12; ++s) {
        auto ts = factorial_baseline(s);
        std::int64_t want = (4LL * s + 1) * (4LL * s * s + 3 * s + 1);
        for (auto v : vertex_sums(ts))
            if (v != want) o.fail(fmt("s=%d sum mismatch", s));
        if (alpha_of(ts) != 0) o.fail(fmt("s=%d alpha != 0", s));
    }
    if (o.pass) o.detail = "s in [1,12] supermagic";
    return o;
}

std::int64_t non_astray_sum(const AstrayLabeling& x, Vertex v) {
    int n = x.t.order();
    std::vector<char> in_a(x.t.edges() + 1, 0);
    for (const Edge& e : x.astray) in_a[edge_index(n, e.u, e.v)] = 1;
    std::int64_t s = 0;
    for (Vertex w = 1; w <= n; ++w)
        if (w != v && !in_a[edge_index(n, std::min(v, w), std::max(v, w))]) s += x.t(v, w);
    return s;
}

Outcome t8q_suite() {
    Outcome o;
    for (int q = 2; q <= 16; ++q) {
        auto x = t8q(q);
        if (!check_astray(x.t, x.astray, 1).pass) o.fail(fmt("q=%d astray check", q));
        std::int64_t want = (4LL * q - 1) * (32LL * q * q - 4LL * q + 1);
        for (Vertex v = 1; v <= 8 * q; ++v)
            if (non_astray_sum(x, v) != want) {
                o.fail(fmt("q=%d vertex %d sum", q, v));
                break;
            }
        auto w = find_type_witness(x.t, q / 2);
        if (!validate_witness(x.t, w) || !w.certifies(2, 2 * q)) o.fail(fmt("q=%d not (2,%d) at p=%d", q, 2 * q, q / 2));
    }
    if (o.pass) o.detail = "q in [2,16]";
    return o;
}

// Input K_{4q} astray labeling: T_{4q} when 8 | 4q, else T_{4q-4} extended twice.
AstrayLabeling k4q_input(int q) {
    if (q % 2 == 0) return t8q(q / 2);
    auto base = t8q((q - 1) / 2);
    return extend_even(extend_even(base, 1, AstrayPlan::TChain), 2, AstrayPlan::TChain);
}

Outcome recursion_suite() {
    Outcome o;
    std::string notes;
    for (int q = 2; q <= 8; ++q) {
        auto base = t8q(q);
        AstrayLabeling cur = base;
        for (int step = 1; step <= 3; ++step) {
            auto next = extend_even(cur, step, AstrayPlan::TChain);
            int n = next.t.order();
            if (!check_astray(next.t, next.astray, 3).pass) o.fail(fmt("extend_even n=%d astray", n));
            for (int p = 1; 2 * p <= q; ++p) {
                auto win = find_type_witness(base.t, p);
                auto wout = find_type_witness(next.t, p);
                if (!wout.certifies(win.m, win.ell)) o.fail(fmt("extend_even n=%d p=%d loses (%d,%d)", n, p, win.m, win.ell));
            }
            auto odd = extend_odd(next);
            if (alpha_of(odd) > 7LL * odd.order()) o.fail(fmt("extend_odd n=%d alpha", odd.order()));
            cur = next;
        }
        auto odd = extend_odd(base);
        if (alpha_of(odd) > 7LL * odd.order()) o.fail(fmt("extend_odd n=%d alpha", odd.order()));
    }
    for (int q = 4; q <= 8; ++q) {
        auto in = k4q_input(q);
        auto out = double_up(in);
        if (!check_astray(out.t, out.astray, 3).pass) o.fail(fmt("double 4q=%d astray", 4 * q));
        for (int p = 1; 2 * p <= q; ++p) {
            auto win = find_type_witness(in.t, p);
            auto wout = find_type_witness(out.t, p);
            if (!wout.certifies(win.m + 2, win.ell + 2 * q))
                o.fail(fmt("double 4q=%d p=%d not (%d,%d)", 4 * q, p, win.m + 2, win.ell + 2 * q));
        }
    }
    for (int n : {64, 65, 66, 128, 130, 257}) {
        for (int s : {2, 3}) {
            auto r = pipeline(n, s);
            std::int64_t a = alpha_of(r.t);
            if (a > 7LL * n) o.fail(fmt("pipeline n=%d s=%d alpha=%lld", n, s, static_cast<long long>(a)));
            if (r.meta.claim.m > 2 * s + 3) o.fail(fmt("pipeline n=%d s=%d m=%d", n, s, r.meta.claim.m));
            if (r.meta.p_max >= 1) {
                auto w = find_type_witness(r.t, r.meta.p_max);
                if (!w.certifies(r.meta.claim.m, r.meta.claim.ell))
                    o.fail(fmt("pipeline n=%d s=%d claim (%d,%d) not certified", n, s, r.meta.claim.m, r.meta.claim.ell));
            }
            notes += fmt(" %d/%d:(%d,%d)", n, s, r.meta.claim.m, r.meta.claim.ell);
        }
    }
    if (o.pass) o.detail = "pipelines" + notes;
    return o;
}

std::vector<EdgeLabeling> desk_labelings() {
    std::vector<EdgeLabeling> out;
    for (int s = 1; s <= 3; ++s) out.push_back(factorial_baseline(s));
    for (int n = 4; n <= 14; n += 2) out.push_back(factorial_style(n));
    for (int n = 3; n <= 8; ++n) {
        std::vector<Label> id(edge_count(n));
        for (int i = 0; i < edge_count(n); ++i) id[i] = i + 1;
        out.emplace_back(n, id);
        std::reverse(id.begin(), id.end());
        out.emplace_back(n, id);
    }
    std::mt19937_64 rng(2024);
    for (int n = 4; n <= 14; ++n) {
        std::vector<Label> v(edge_count(n));
        for (int i = 0; i < edge_count(n); ++i) v[i] = i + 1;
        std::shuffle(v.begin(), v.end(), rng);
        out.emplace_back(n, v);
    }
    // Vertex-permuted copies of the supermagic baselines.
    for (int s = 1; s <= 3; ++s) {
        auto t = factorial_baseline(s);
        std::vector<Vertex> perm(t.order());
        for (int i = 0; i < t.order(); ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        out.push_back(relabel_vertices(t, perm));
    }
    return out;
}

Outcome sandwich_suite() {
    Outcome o;
    auto t0 = Clock::now();
    int checked = 0, enumerated = 0, dp = 0, no_attack = 0;
    for (const auto& t : desk_labelings()) {
        int n = t.order();
        std::int64_t alpha = alpha_of(t);
        for (int p = 1; p <= 3; ++p) {
            if (t.edges() < 2 * p + 1) continue;
            auto ex = exact_robustness(t, p);
            std::int64_t upper = (2LL * n - 4) * p + alpha;
            std::int64_t lower = 0;
            if (2 * p + 2 < n)
                lower = attack(t, p).discrepancy;
            else
                ++no_attack;  // attack needs 2p+2 < n
            if (lower > ex.value || ex.value > upper)
                o.fail(fmt("n=%d p=%d: %lld <= %lld <= %lld broken", n, p, static_cast<long long>(lower),
                           static_cast<long long>(ex.value), static_cast<long long>(upper)));
            if (n <= 8 && p <= 2) {
                std::int64_t ref;
                if (oracle::count_band_permutations(t.edges(), p) <= 2'000'000) {
                    ref = oracle::brute_force_robustness(t, p).best;
                    ++enumerated;
                } else {
                    ref = oracle::dp_robustness(t, p);
                    ++dp;
                }
                if (ref != ex.value)
                    o.fail(fmt("n=%d p=%d exact %lld vs reference %lld", n, p, static_cast<long long>(ex.value),
                               static_cast<long long>(ref)));
            }
            ++checked;
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) o.fail(fmt("took %.1fs", secs));
    if (o.pass) o.detail = fmt("%d cases (%d without attack), %d enumerated, %d by window DP, %.1fs", checked, no_attack,
                               enumerated, dp, secs);
    return o;
}

Outcome block_suite() {
    Outcome o;
    std::vector<EdgeLabeling> ts;
    for (int s = 1; s <= 3; ++s) ts.push_back(factorial_baseline(s));
    for (int n = 4; n <= 14; n += 2) ts.push_back(factorial_style(n));
    for (int n = 4; n <= 14; ++n) {
        std::vector<Label> id(edge_count(n));
        for (int i = 0; i < edge_count(n); ++i) id[i] = i + 1;
        ts.emplace_back(n, id);
    }
    long blocks = 0, tight = 0;
    for (const auto& t : ts) {
        int n = t.order(), eps = t.edges();
        auto inv = t.inverse();
        for (int p = 1; p <= 3; ++p) {
            auto w = find_type_witness(t, p);
            for (Vertex v = 1; v <= n; ++v) {
                for (const Run& r : w.runs[v - 1]) {
                    for (int lo = r.lo; lo <= r.hi; ++lo) {
                        for (int hi = lo + 2 * p - 1; hi <= r.hi; ++hi) {
                            if (lo <= p || hi + p > eps) continue;
                            std::vector<Edge> f;
                            for (int x = lo; x <= hi; ++x) f.push_back(edge_at(n, inv[x - 1]));
                            auto [mn, mx] = block_shift_extremes(t, f, p);
                            ++blocks;
                            if (mn < -p * p || mx > p * p) o.fail(fmt("n=%d p=%d block [%d,%d] out of range", n, p, lo, hi));
                            if (hi - lo + 1 == 2 * p) {
                                ++tight;
                                if (mn != -p * p || mx != p * p) o.fail(fmt("n=%d p=%d block [%d,%d] not tight", n, p, lo, hi));
                            }
                        }
                    }
                }
            }
        }
    }
    if (blocks == 0) o.fail("no interior blocks found");
    if (o.pass) o.detail = fmt("%ld blocks, %ld of length 2p", blocks, tight);
    return o;
}

Outcome drift_suite() {
    Outcome o;
    int certs = 0;
    for (const auto& t : desk_labelings()) {
        int n = t.order();
        if (t.edges() > kDefaultExactCap) continue;
        std::int64_t alpha = alpha_of(t);
        for (int p = 1; p <= 3; ++p) {
            if (t.edges() < 2 * p + 1) continue;
            auto w = find_type_witness(t, p);
            auto ex = exact_robustness(t, p).value;
            for (int m = 0; m <= w.m; ++m) {
                int ell = m == 0 ? 0 : w.ell_for(m);
                ++certs;
                if (ex > drift_bound(m, ell, p, n, alpha))
                    o.fail(fmt("n=%d p=%d (m,l)=(%d,%d) exact %lld", n, p, m, ell, static_cast<long long>(ex)));
            }
        }
    }
    auto x = t8q(2);
    std::int64_t t16_exact = exact_robustness(x.t, 1, x.t.edges()).value;
    if (t16_exact > 34) o.fail(fmt("T_16 exact %lld > 34", static_cast<long long>(t16_exact)));
    std::int64_t worst = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SimConfig cfg;
        cfg.base = x.t;
        cfg.p = 1;
        cfg.epochs = 10;
        cfg.seed = seed;
        auto tr = simulate(cfg);
        worst = std::max(worst, tr.max_discrepancy);
    }
    if (worst > 34) o.fail(fmt("simulation reached %lld", static_cast<long long>(worst)));
    if (o.pass)
        o.detail = fmt("%d certificates, T_16 exact %lld, sim max %lld <= 34", certs, static_cast<long long>(t16_exact),
                       static_cast<long long>(worst));
    return o;
}

Outcome ordering_suite() {
    Outcome o;
    std::string rows;
    for (int q = 2; q <= 8; ++q) {
        int n = 8 * q, p = q / 2;
        auto fs = factorial_style(n);
        auto att = best_attack(fs, p);
        auto x = t8q(q);
        auto cert = best_drift_bound(find_type_witness(x.t, p), n, alpha_of(x.t));
        rows += fmt(" q=%d:%lld/%lld", q, static_cast<long long>(att.discrepancy), static_cast<long long>(cert.bound));
        if (att.discrepancy <= cert.bound) o.fail("");
    }
    o.detail = "attack/drift_bound" + rows;
    return o;
}

Outcome determinism_suite() {
    Outcome o;
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "swaprobust_acceptance";
    fs::create_directories(dir);
    auto path = [&](const std::string& name, int run) { return (dir / (name + "_" + std::to_string(run))).string(); };
    auto run_cli_args = [](std::vector<std::string> args, std::string& out) {
        args.insert(args.begin(), "swaprobust");
        std::vector<const char*> argv;
        for (auto& a : args) argv.push_back(a.c_str());
        std::ostringstream os, es;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), os, es);
        out = os.str();
        return code;
    };
    using Cmd = std::function<std::vector<std::string>(int)>;
    std::vector<std::pair<std::string, Cmd>> cmds = {
        {"t8q", [&](int r) { return std::vector<std::string>{"construct", "t8q", "--q", "2", "--out", path("t8q", r)}; }},
        {"fact", [&](int r) { return std::vector<std::string>{"construct", "factorial", "--s", "3", "--out", path("fact", r)}; }},
        {"pipe", [&](int r) { return std::vector<std::string>{"construct", "pipeline", "--n", "66", "--s", "2", "--out", path("pipe", r)}; }},
        {"verify", [&](int r) { return std::vector<std::string>{"verify", path("t8q", r), "--astray", "--b", "1", "--p", "1", "--format", "json"}; }},
        {"attack", [&](int r) { return std::vector<std::string>{"attack", path("t8q", r), "--p", "1", "--best", "--out", path("attack", r)}; }},
        {"exact", [&](int r) { return std::vector<std::string>{"exact", path("fact", r), "--p", "2", "--out", path("exact", r)}; }},
        {"sweep", [&](int r) { return std::vector<std::string>{"sweep", "--family", "factorial", "--params", "1,2,3", "--p-rule", "const:1", "--exact", "--out", path("sweep", r)}; }},
        {"sim", [&](int r) { return std::vector<std::string>{"simulate", "--file", path("t8q", r), "--p", "1", "--epochs", "20", "--seed", "7", "--out", path("sim", r)}; }},
        {"square", [&](int r) { return std::vector<std::string>{"square", "weaving", "--q", "3", "--out", path("square", r)}; }},
    };
    for (auto& [name, make] : cmds) {
        std::string out[2];
        for (int r = 0; r < 2; ++r) {
            int code = run_cli_args(make(r), out[r]);
            if (code != 0) o.fail(fmt("%s exited %d", name.c_str(), code));
        }
        if (out[0] != out[1]) o.fail(name + " stdout differs");
        if (fs::exists(path(name, 0))) {
            if (read_file(path(name, 0)) != read_file(path(name, 1))) o.fail(name + " artifact differs");
        }
    }
    if (o.pass) o.detail = fmt("%zu commands byte-identical", cmds.size());
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"weaving squares", weaving_suite},      {"baseline reproduction", baseline_suite},
        {"T_8q certificates", t8q_suite},        {"recursion contracts", recursion_suite},
        {"robustness sandwich", sandwich_suite}, {"block shift bound", block_suite},
        {"drift bound", drift_suite},            {"robustness ordering", ordering_suite},
        {"determinism", determinism_suite},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
