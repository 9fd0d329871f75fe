#include "swaprobust/verification.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "swaprobust/errors.hpp"

namespace swaprobust {

AstrayReport check_astray(const EdgeLabeling& t, const std::vector<Edge>& astray, int b) {
    AstrayReport rep;
    rep.b_requested = b;
    const int n = t.order();
    const int eps = t.edges();
    std::vector<char> in_a(eps + 1, 0);
    for (const Edge& e : astray) {
        int idx = edge_index(n, e.u, e.v);
        if (in_a[idx]) {
            rep.violation = "astray edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} listed twice";
            return rep;
        }
        in_a[idx] = 1;
    }
    const int a = static_cast<int>(astray.size());
    rep.a = a;
    auto fail = [&](const std::string& why) {
        if (rep.violation.empty()) rep.violation = why;
    };

    // (1) parity and centring; L and H are then forced to the two outer intervals.
    rep.cond1 = (a % 2) == (eps % 2);
    if (!rep.cond1) fail("a and epsilon differ in parity");
    const int lo = (eps - a) / 2 + 1, hi = (eps + a) / 2;
    if (rep.cond1) {
        for (int idx = 1; idx <= eps; ++idx) {
            Label x = t.at(idx);
            if (in_a[idx] && (x < lo || x > hi)) {
                Edge e = edge_at(n, idx);
                rep.cond1 = false;
                fail("astray edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has label " +
                     std::to_string(x) + " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
                break;
            }
        }
    }

    // (2) and (3) per vertex.
    rep.cond2 = rep.cond3 = true;
    std::vector<int> cnt_a(n + 1, 0), cnt_l(n + 1, 0), cnt_h(n + 1, 0);
    std::vector<std::int64_t> sum_rest(n + 1, 0);
    for (int idx = 1; idx <= eps; ++idx) {
        Edge e = edge_at(n, idx);
        Label x = t.at(idx);
        for (Vertex w : {e.u, e.v}) {
            if (in_a[idx]) {
                ++cnt_a[w];
            } else {
                sum_rest[w] += x;
                if (x < lo) ++cnt_l[w];
                else ++cnt_h[w];
            }
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        rep.b_actual = std::max(rep.b_actual, cnt_a[v]);
        if (cnt_a[v] > b || cnt_l[v] != cnt_h[v]) {
            if (rep.cond2)
                fail("vertex " + std::to_string(v) + ": |A|=" + std::to_string(cnt_a[v]) + " |L|=" +
                     std::to_string(cnt_l[v]) + " |H|=" + std::to_string(cnt_h[v]));
            rep.cond2 = false;
        }
        std::int64_t deg_rest = n - 1 - cnt_a[v];
        if (2 * sum_rest[v] != deg_rest * (eps + 1)) {
            if (rep.cond3) fail("vertex " + std::to_string(v) + ": non-astray sum " + std::to_string(sum_rest[v]));
            rep.cond3 = false;
        }
    }
    rep.pass = rep.cond1 && rep.cond2 && rep.cond3 && rep.b_actual <= b;
    return rep;
}

bool TypeWitness::certifies(int m_claim, int ell_claim) const { return ell_for(m_claim) >= ell_claim; }

int TypeWitness::ell_for(int m_claim) const {
    int best = -1;
    for (const auto& vr : runs) {
        std::vector<int> lens;
        for (const Run& r : vr) lens.push_back(r.length());
        std::sort(lens.rbegin(), lens.rend());
        int tot = 0;
        for (int i = 0; i < m_claim && i < static_cast<int>(lens.size()); ++i) tot += lens[i];
        best = best < 0 ? tot : std::min(best, tot);
    }
    return std::max(best, 0);
}

TypeWitness find_type_witness(const EdgeLabeling& t, int p) {
    if (p < 1) throw InvalidArgument("find_type_witness: p must be >= 1");
    const int n = t.order();
    TypeWitness w;
    w.p = p;
    w.runs.resize(n);
    int ell = -1;
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<std::pair<Label, Edge>> lab;
        for (Vertex x = 1; x <= n; ++x)
            if (x != v) lab.push_back({t(v, x), make_edge(v, x)});
        std::sort(lab.begin(), lab.end());
        int total = 0;
        std::size_t k = 0;
        while (k < lab.size()) {
            std::size_t e = k;
            while (e + 1 < lab.size() && lab[e + 1].first == lab[e].first + 1) ++e;
            if (static_cast<int>(e - k + 1) >= 2 * p) {
                Run r{lab[k].first, lab[e].first, {}};
                for (std::size_t i = k; i <= e; ++i) r.edges.push_back(lab[i].second);
                total += r.length();
                w.runs[v - 1].push_back(std::move(r));
            }
            k = e + 1;
        }
        w.m = std::max(w.m, static_cast<int>(w.runs[v - 1].size()));
        ell = ell < 0 ? total : std::min(ell, total);
    }
    w.ell = std::max(ell, 0);
    return w;
}

bool validate_witness(const EdgeLabeling& t, const TypeWitness& w) {
    const int n = t.order();
    if (static_cast<int>(w.runs.size()) != n) return false;
    int m = 0, ell = -1;
    for (Vertex v = 1; v <= n; ++v) {
        std::set<Label> used;
        int total = 0;
        for (const Run& r : w.runs[v - 1]) {
            if (r.length() < 2 * w.p || static_cast<int>(r.edges.size()) != r.length()) return false;
            for (int i = 0; i < r.length(); ++i) {
                const Edge& e = r.edges[i];
                if (e.u != v && e.v != v) return false;
                if (t(e.u, e.v) != r.lo + i) return false;
                if (!used.insert(r.lo + i).second) return false;
            }
            total += r.length();
        }
        m = std::max(m, static_cast<int>(w.runs[v - 1].size()));
        ell = ell < 0 ? total : std::min(ell, total);
    }
    return m == w.m && std::max(ell, 0) == w.ell;
}

nlohmann::json to_json(const AstrayReport& r) {
    return {{"pass", r.pass},           {"cond1", r.cond1},         {"cond2", r.cond2},
            {"cond3", r.cond3},         {"a", r.a},                 {"b_requested", r.b_requested},
            {"b_actual", r.b_actual},   {"violation", r.violation}};
}

nlohmann::json to_json(const TypeWitness& w, bool with_runs) {
    nlohmann::json j{{"p", w.p}, {"m", w.m}, {"ell", w.ell}};
    if (with_runs) {
        nlohmann::json per = nlohmann::json::array();
        for (const auto& vr : w.runs) {
            nlohmann::json arr = nlohmann::json::array();
            for (const Run& r : vr) arr.push_back({r.lo, r.hi});
            per.push_back(arr);
        }
        j["runs"] = per;
    }
    return j;
}

}  // namespace swaprobust
