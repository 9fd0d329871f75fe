#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "swaprobust/graph.hpp"

namespace swaprobust {

struct AstrayReport {
    bool pass = false;
    bool cond1 = false;  // parity and centred astray interval
    bool cond2 = false;  // per-vertex astray count and L/H balance
    bool cond3 = false;  // per-vertex non-astray average
    int a = 0;
    int b_requested = 0;
    int b_actual = 0;
    std::string violation;  // first failure, empty on pass
};

AstrayReport check_astray(const EdgeLabeling& t, const std::vector<Edge>& astray, int b);

struct Run {
    int lo = 0;
    int hi = 0;  // inclusive
    std::vector<Edge> edges;
    int length() const { return hi - lo + 1; }
};

struct TypeWitness {
    int p = 0;
    std::vector<std::vector<Run>> runs;  // runs[v-1]: maximal runs of length >= 2p at v
    int m = 0;                           // max run count over vertices
    int ell = 0;                         // min total run length over vertices

    // (m, l) holds when, at every vertex, the m longest runs total at least l.
    bool certifies(int m_claim, int ell_claim) const;
    // Largest l such that (m_claim, l) is certified.
    int ell_for(int m_claim) const;
};

TypeWitness find_type_witness(const EdgeLabeling& t, int p);
// Re-checks the witness invariants against t (disjoint, long enough, inside S(t,v), edges match).
bool validate_witness(const EdgeLabeling& t, const TypeWitness& w);

nlohmann::json to_json(const AstrayReport& r);
nlohmann::json to_json(const TypeWitness& w, bool with_runs = false);

}  // namespace swaprobust
