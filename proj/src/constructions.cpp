#include "swaprobust/constructions.hpp"

#include <algorithm>
#include <map>

#include "swaprobust/errors.hpp"
#include "swaprobust/squares.hpp"
#include "swaprobust/verification.hpp"

namespace swaprobust {

namespace {

void require_astray_input(const AstrayLabeling& in, const char* op) {
    auto rep = check_astray(in.t, in.astray, std::min(in.b, 3));
    if (!rep.pass || in.b > 3)
        throw InvalidArgument(std::string(op) + ": input is not 3-astray good (" + rep.violation + ")");
}

std::vector<Edge> sorted_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    return es;
}

// Labels an edge of the old graph under the L/A/H shift pattern.
struct ShiftPlan {
    int lo = 0, hi = 0;  // old astray interval
    int shift_l = 0, shift_h = 0;
    Label map(Label x) const { return x < lo ? x + shift_l : (x > hi ? x + shift_h : x); }
};

std::vector<Edge> matching(int pairs) {
    std::vector<Edge> out;
    for (int k = 1; k <= pairs; ++k) out.push_back({2 * k - 1, 2 * k});
    return out;
}

// Cross edges among v_{8q+1..8q+4} in the order the T-chain plans list them.
std::vector<Edge> tchain_cross(int q) {
    int b = 8 * q;
    return {make_edge(b + 4, b + 1), make_edge(b + 3, b + 2), make_edge(b + 3, b + 1), make_edge(b + 4, b + 2)};
}

}  // namespace

void assert_astray(const AstrayLabeling& x, const std::string& where) {
    if (x.a() % 2 != x.t.edges() % 2) throw InternalError(where + ": astray parity guard failed");
    auto rep = check_astray(x.t, x.astray, x.b);
    if (!rep.pass) throw InternalError(where + ": output not " + std::to_string(x.b) + "-astray good: " + rep.violation);
}

EdgeLabeling tau(int q, const CocktailOptions& opts) {
    if (q < 2) throw InvalidArgument("tau: q must be >= 2");
    const int n = 8 * q, h = 4 * q;
    const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
    WeavingSquare w = weaving_square(q);
    BarT bar = bar_t(q, opts);
    LabelingBuilder b(n);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) b.set(j, h + i, static_cast<Label>(w.entries.at(i, j)));
    for (std::size_t k = 0; k < bar.g.edges.size(); ++k)
        b.set(bar.g.edges[k].u, bar.g.edges[k].v, bar.g.labels[k] + static_cast<Label>(16 * q2));
    int k = 0;
    for (const Edge& e : matching(h)) b.set(e.u, e.v, static_cast<Label>(32 * q2 - 8 * q) + (++k));
    return b.finish();
}

AstrayLabeling t8q(int q, const CocktailOptions& opts) {
    if (q < 2) throw InvalidArgument("t8q: q must be >= 2");
    const int n = 8 * q, h = 4 * q;
    const int q2 = q * q;
    WeavingSquare w = weaving_square(q);
    BarT bar = bar_t(q, opts);
    LabelingBuilder b(n);
    for (std::size_t k = 0; k < bar.g.edges.size(); ++k) {
        Label x = bar.g.labels[k];
        b.set(bar.g.edges[k].u, bar.g.edges[k].v, bar.low[k] ? x : x + 16 * q2 + 4 * q);
    }
    for (int i = 1; i <= h; ++i) {
        for (int j = 1; j <= h; ++j) {
            Label x = static_cast<Label>(w.entries.at(i, j));
            b.set(j, h + i, x <= 8 * q2 ? x + 8 * q2 - 4 * q : x + 8 * q2);
        }
    }
    AstrayLabeling out;
    out.astray = matching(h);
    int k = 0;
    for (const Edge& e : out.astray) b.set(e.u, e.v, 16 * q2 - 4 * q + (++k));
    out.t = b.finish();
    out.b = 1;
    assert_astray(out, "t8q");
    return out;
}

AstrayLabeling extend_even(const AstrayLabeling& in, AstrayPlan plan) {
    const int n = in.t.order();
    if (n % 2 != 0 || n % 8 == 6) throw InvalidArgument("extend_even: order must be 0, 2 or 4 mod 8");
    return extend_even(in, n % 8 / 2 + 1, plan);
}

AstrayLabeling extend_even(const AstrayLabeling& in, int step, AstrayPlan plan) {
    if (step < 1 || step > 3) throw InvalidArgument("extend_even: step must be 1, 2 or 3");
    const int n = in.t.order();
    if (n < 8 || (n - 2 * (step - 1)) % 8 != 0)
        throw InvalidArgument("extend_even: step " + std::to_string(step) + " needs order 8q+" +
                              std::to_string(2 * (step - 1)) + ", got " + std::to_string(n));
    require_astray_input(in, "extend_even");
    const int q = (n - 2 * (step - 1)) / 8;
    const int eps = in.t.edges();
    const int a = in.a();
    const int n2 = n + 2;
    const int eps2 = edge_count(n2);

    // Star pattern over the first `span` old vertices.
    const int span = step == 2 ? 8 * q : n;
    std::vector<Edge> fresh;
    if (step == 2) {
        fresh = {make_edge(n + 1, n + 2), make_edge(n + 2, n - 1), make_edge(n + 1, n), make_edge(n + 1, n - 1),
                 make_edge(n + 2, n)};
    } else {
        fresh = {make_edge(n + 1, n + 2)};
    }
    ShiftPlan sp{(eps - a) / 2 + 1, (eps + a) / 2, span, span + static_cast<int>(fresh.size())};
    if (sp.shift_l + sp.shift_h != eps2 - eps) throw InternalError("extend_even: shift bookkeeping");

    LabelingBuilder b(n2);
    std::vector<char> old_astray(eps + 1, 0);
    for (const Edge& e : in.astray) old_astray[edge_index(n, e.u, e.v)] = 1;
    for (int idx = 1; idx <= eps; ++idx) {
        if (old_astray[idx]) continue;
        Edge e = edge_at(n, idx);
        b.set(e.u, e.v, sp.map(in.t.at(idx)));
    }
    for (int i = 1; i <= span; ++i) {
        bool low = i <= span / 4 || i > 3 * span / 4;
        Label x = low ? i : eps2 + 1 - i;
        b.set(n + 1, i, x);
        b.set(n + 2, i, eps2 + 1 - x);
    }

    AstrayLabeling out;
    out.b = 3;
    out.astray = sorted_edges([&] {
        auto all = in.astray;
        all.insert(all.end(), fresh.begin(), fresh.end());
        return all;
    }());
    const int lo2 = (eps2 - static_cast<int>(out.astray.size())) / 2 + 1;

    if (plan == AstrayPlan::Ascending) {
        for (const Edge& e : in.astray) b.set(e.u, e.v, in.t(e.u, e.v) + sp.shift_l);
        int next = lo2 + a;
        for (const Edge& e : sorted_edges(fresh)) b.set(e.u, e.v, next++);
    } else {
        const int q2 = q * q;
        auto expect = matching(n / 2);
        if (step == 3) {
            auto cross = tchain_cross(q);
            expect.insert(expect.end(), cross.begin(), cross.end());
        }
        if (sorted_edges(expect) != sorted_edges(in.astray))
            throw InvalidArgument("extend_even: T-chain plan needs the T-chain astray part on the input");
        if (step == 1) {
            for (int k = 1; k <= 4 * q + 1; ++k) b.set(2 * k - 1, 2 * k, 16 * q2 + 4 * q + k);
        } else if (step == 2) {
            for (int k = 1; k <= 2 * q + 1; ++k) b.set(2 * k - 1, 2 * k, 16 * q2 + 12 * q + k);
            for (int k = 2 * q + 2; k <= 4 * q + 2; ++k) b.set(2 * k - 1, 2 * k, 16 * q2 + 12 * q + 4 + k);
            int off = 2;
            for (const Edge& e : tchain_cross(q)) b.set(e.u, e.v, 16 * q2 + 14 * q + (off++));
        } else {
            const int offs[4] = {6, 7, 9, 10};
            int c = 0;
            for (const Edge& e : tchain_cross(q)) b.set(e.u, e.v, 16 * q2 + 22 * q + offs[c++]);
            for (int k = 1; k <= 4 * q + 3; ++k) {
                Label x = k <= 2 * q + 1 ? 16 * q2 + 20 * q + 4 + k
                                         : (k == 2 * q + 2 ? 16 * q2 + 22 * q + 8 : 16 * q2 + 20 * q + 8 + k);
                b.set(2 * k - 1, 2 * k, x);
            }
        }
    }
    out.t = b.finish();
    assert_astray(out, "extend_even(step " + std::to_string(step) + ")");
    return out;
}

EdgeLabeling extend_odd(const AstrayLabeling& in) {
    require_astray_input(in, "extend_odd");
    const int n = in.t.order();
    if (n % 2 != 0) throw InvalidArgument("extend_odd: input order must be even");
    const int k = n / 2;
    const int eps = in.t.edges();
    const int a = in.a();
    const int l = (eps - a) / 2;
    const int n2 = n + 1;
    ShiftPlan sp{l + 1, l + a, 0, 2 * k};
    LabelingBuilder b(n2);
    for (int idx = 1; idx <= eps; ++idx) {
        Edge e = edge_at(n, idx);
        Label x = in.t.at(idx);
        b.set(e.u, e.v, (x >= sp.lo && x <= sp.hi) ? x + k : sp.map(x));
    }
    for (int i = 1; i <= n; ++i) b.set(n2, i, i <= k ? l + a + k + i : l + i - k);
    return b.finish();
}

AstrayLabeling double_up(const AstrayLabeling& in) {
    const int n = in.t.order();
    if (n < 4 || n % 4 != 0) throw InvalidArgument("double: input order must be 4q");
    require_astray_input(in, "double");
    const int q = n / 4;
    const int eps = in.t.edges();
    const int a = in.a();
    const int l = (eps - a) / 2;
    const int n2 = 2 * n;
    const int eps2 = edge_count(n2);
    const int delta = eps2 - eps;
    const int q2 = q * q;
    WeavingSquare w = weaving_square(q);

    std::vector<char> in_a(eps + 1, 0);
    for (const Edge& e : in.astray) in_a[edge_index(n, e.u, e.v)] = 1;

    LabelingBuilder b(n2);
    std::vector<Edge> astray;
    for (int idx = 1; idx <= eps; ++idx) {
        Edge e = edge_at(n, idx);
        Label x = in.t.at(idx);
        if (in_a[idx]) {
            astray.push_back(e);
            astray.push_back({e.u + n, e.v + n});
        } else if (x <= l) {
            b.set(e.u, e.v, x);
            b.set(e.u + n, e.v + n, x + l);
        } else {
            b.set(e.u, e.v, x + delta);
            b.set(e.u + n, e.v + n, x + delta - l);
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Label x = static_cast<Label>(w.entries.at(i, j));
            b.set(j, n + i, x <= 8 * q2 ? x + 2 * l : x + 2 * l + 2 * a);
        }
    }
    AstrayLabeling out;
    out.b = 3;
    out.astray = sorted_edges(astray);
    Label next = (eps2 - 2 * a) / 2 + 1;
    for (const Edge& e : out.astray) b.set(e.u, e.v, next++);
    out.t = b.finish();
    assert_astray(out, "double");
    return out;
}

std::vector<int> pipeline_sequence(int n, int s) {
    if (s < 1) throw InvalidArgument("pipeline: s must be >= 1");
    std::vector<int> seq{n, 8 * (n / 8)};
    for (int i = 2; i <= s; ++i) seq.push_back(4 * (seq.back() / 8));
    for (int i = 1; i <= s; ++i)
        if (seq[i] < 16)
            throw InvalidArgument("pipeline: n=" + std::to_string(n) + " too small for s=" + std::to_string(s) +
                                  " (n_" + std::to_string(i) + "=" + std::to_string(seq[i]) + " < 16)");
    return seq;
}

PipelineResult pipeline(int n, int s, const CocktailOptions& opts) {
    auto seq = pipeline_sequence(n, s);
    PipelineMeta meta;
    meta.s = s;
    meta.sequence = seq;
    const int ns = seq[s];
    const int qb = ns / 8;
    AstrayLabeling cur = t8q(qb, opts);
    meta.tags.push_back("t8q(q=" + std::to_string(qb) + ")");
    meta.claim = {2, 2 * qb};
    meta.p_max = qb / 2;
    bool tchain = true;  // astray part still has the T-chain shape

    auto grow = [&](int steps) {
        for (int i = 0; i < steps; ++i) {
            int step = cur.t.order() % 8 / 2 + 1;
            AstrayPlan plan = tchain ? AstrayPlan::TChain : AstrayPlan::Ascending;
            cur = extend_even(cur, step, plan);
            meta.tags.push_back("extend_even(step=" + std::to_string(step) + (tchain ? ",plan=tchain)" : ",plan=ascending)"));
            meta.claim.m = std::max(meta.claim.m, 3);
        }
    };

    if (ns % 8 == 4) grow(2);
    for (int i = s - 1; i >= 1; --i) {
        const int qd = cur.t.order() / 4;
        cur = double_up(cur);
        tchain = false;
        meta.tags.push_back("double(q=" + std::to_string(qd) + ")");
        meta.claim = {meta.claim.m + 2, meta.claim.ell + 2 * qd};
        if (seq[i] == cur.t.order() + 4) grow(2);
        if (cur.t.order() != seq[i]) throw InternalError("pipeline: order drifted from the sequence");
    }

    PipelineResult res;
    if (n % 2 == 0) {
        grow((n - seq[1]) / 2);
        res.t = cur.t;
        res.astray = cur.astray;
        res.b = cur.b;
        meta.astray_valid = true;
    } else {
        grow((n - 1 - seq[1]) / 2);
        res.t = extend_odd(cur);
        meta.tags.push_back("extend_odd");
        meta.claim.m = std::max(meta.claim.m, 2);
    }
    res.meta = meta;
    return res;
}

EdgeLabeling factorial_baseline(int s) {
    if (s < 1) throw InvalidArgument("factorial_baseline: s must be >= 1");
    const int mod = 4 * s + 1;
    const int n = 4 * s + 2;
    auto vx = [mod](int z) { return ((z % mod) + mod) % mod + 1; };
    LabelingBuilder b(n);
    for (int i = 0; i < mod; ++i) {
        const int base = i * (2 * s + 1);
        for (int j = 1; j <= s; ++j) b.set(vx(j + i), vx(4 * s + 1 - j + i), j + base);
        b.set(n, vx(i), s + 1 + base);
        for (int j = s + 2; j <= 2 * s + 1; ++j) b.set(vx(j - 1 + i), vx(4 * s + 2 - j + i), j + base);
    }
    return b.finish();
}

EdgeLabeling factorial_style(int n) {
    if (n < 4 || n % 2 != 0) throw InvalidArgument("factorial_style: n must be even and >= 4");
    const int mod = n - 1;
    const int h = n / 2;
    const int c = (h % 2 == 1) ? (h - 1) / 2 : h / 2 - 1;  // pairs at distance <= c sit below the inf edge
    auto vx = [mod](int z) { return ((z % mod) + mod) % mod + 1; };
    LabelingBuilder b(n);
    for (int i = 0; i < mod; ++i) {
        const int base = i * h;
        b.set(n, vx(i), base + c + 1);
        for (int d = 1; d <= (mod - 1) / 2; ++d) b.set(vx(i - d), vx(i + d), base + (d <= c ? d : d + 1));
    }
    return b.finish();
}

}  // namespace swaprobust

#include "swaprobust/labeling_io.hpp"

namespace swaprobust {

BuiltLabeling build_family(const std::string& family, int param, int s, const CocktailOptions& opts) {
    BuiltLabeling out;
    auto set_astray = [&](const AstrayLabeling& x) {
        out.t = x.t;
        out.astray = x.astray;
        out.b = x.b;
        out.has_astray = true;
    };
    if (family == "factorial") {
        out.t = factorial_baseline(param);
    } else if (family == "factorial-style") {
        out.t = factorial_style(param);
    } else if (family == "tau") {
        out.t = tau(param, opts);
    } else if (family == "t8q") {
        set_astray(t8q(param, opts));
        out.claim = TypeClaim{2, 2 * param};
        out.p_max = param / 2;
    } else if (family == "pipeline") {
        PipelineResult r = pipeline(param, s, opts);
        out.t = r.t;
        if (r.meta.astray_valid) {
            out.astray = r.astray;
            out.b = r.b;
            out.has_astray = true;
        }
        out.claim = r.meta.claim;
        out.p_max = r.meta.p_max;
        out.meta["pipeline"] = {{"s", r.meta.s},
                                {"sequence", r.meta.sequence},
                                {"tags", r.meta.tags},
                                {"m", r.meta.claim.m},
                                {"ell", r.meta.claim.ell},
                                {"p_max", r.meta.p_max}};
    } else {
        throw InvalidArgument("unknown construction '" + family + "'");
    }
    if (out.has_astray) {
        out.meta["astray"] = edge_triples(out.t, out.astray);
        out.meta["b"] = out.b;
    }
    if (out.claim && out.p_max >= 1)
        out.meta["type_witness"] = {{"p", out.p_max}, {"m", out.claim->m}, {"ell", out.claim->ell}};
    return out;
}

}  // namespace swaprobust
