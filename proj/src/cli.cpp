#include "swaprobust/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "swaprobust/constructions.hpp"
#include "swaprobust/errors.hpp"
#include "swaprobust/labeling_io.hpp"
#include "swaprobust/robustness.hpp"
#include "swaprobust/squares.hpp"
#include "swaprobust/storage_sim.hpp"
#include "swaprobust/verification.hpp"

namespace swaprobust {

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") out << text;
    else write_file_atomic(path, text);
}

struct CocktailFlags {
    std::string method = "construct";
    std::int64_t budget = 20'000'000;
    std::string cache_dir;
    std::string file;

    void add(CLI::App* app) {
        app->add_option("--cocktail", method, "construct | search")->check(CLI::IsMember({"construct", "search"}));
        app->add_option("--budget", budget, "search node budget");
        app->add_option("--cache-dir", cache_dir, "cocktail cache directory (overrides SWAPROBUST_CACHE_DIR)");
        app->add_option("--cocktail-file", file, "externally supplied K_{2q[2]} labeling");
    }
    CocktailOptions opts() const {
        return {method == "search" ? CocktailMethod::Search : CocktailMethod::Construct, budget, cache_dir, file};
    }
};

AstrayLabeling astray_from_file(const std::string& path) {
    LabelingFile f = load_labeling(path);
    auto a = f.astray();
    if (!a) throw FormatError(path + ": no meta.astray block");
    return AstrayLabeling{f.t, *a, f.astray_b().value_or(3)};
}

nlohmann::json astray_meta(const AstrayLabeling& x) {
    return {{"astray", edge_triples(x.t, x.astray)}, {"b", x.b}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Swap-robust almost-supermagic labelings of complete graphs", "swaprobust"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a labeling and write it as JSON");
    std::string family, in_path, out_path;
    int q = 0, s = 0, n = 0, step = 0;
    std::string plan = "ascending";
    CocktailFlags cflags;
    c_construct->add_option("family", family,
                            "factorial | factorial-style | tau | t8q | pipeline | extend-even | extend-odd | double")
        ->required();
    c_construct->add_option("--q", q, "q for tau / t8q");
    c_construct->add_option("--s", s, "s for factorial; rounds for pipeline");
    c_construct->add_option("--n", n, "order for factorial-style / pipeline");
    c_construct->add_option("--in", in_path, "input labeling for extend-even / extend-odd / double");
    c_construct->add_option("--step", step, "extend-even step (default from order mod 8)");
    c_construct->add_option("--plan", plan, "astray plan for extend-even")->check(CLI::IsMember({"ascending", "tchain"}));
    c_construct->add_option("--out", out_path, "output path (default stdout)");
    cflags.add(c_construct);

    // verify
    auto* c_verify = app.add_subcommand("verify", "check alpha, astray goodness and type witness");
    std::string file;
    bool want_astray = false;
    int b = -1, p = 0;
    std::int64_t alpha_max = -1;
    std::string format = "human";
    c_verify->add_option("file", file)->required();
    c_verify->add_flag("--astray", want_astray, "check the astray decomposition from meta");
    c_verify->add_option("--b", b, "astray tolerance (default meta.b)");
    c_verify->add_option("--p", p, "magnitude for the type witness (default meta.type_witness.p)");
    c_verify->add_option("--alpha-max", alpha_max, "fail if alpha exceeds this");
    c_verify->add_option("--format", format)->check(CLI::IsMember({"human", "json"}));

    // attack / exact
    auto* c_attack = app.add_subcommand("attack", "construct the pair attack swap");
    bool best = false;
    c_attack->add_option("file", file)->required();
    c_attack->add_option("--p", p)->required();
    c_attack->add_flag("--best", best, "try the attack on every ordered pair");
    c_attack->add_option("--out", out_path);
    auto* c_exact = app.add_subcommand("exact", "exact p-robustness via band-limited assignment");
    int cap = kDefaultExactCap;
    c_exact->add_option("file", file)->required();
    c_exact->add_option("--p", p)->required();
    c_exact->add_option("--cap", cap, "maximum edge count for the oracle");
    c_exact->add_option("--out", out_path);

    // sweep
    auto* c_sweep = app.add_subcommand("sweep", "ratio sweep as CSV");
    std::vector<int> params;
    std::string p_rule = "sqrt";
    bool do_exact = false, timing = false;
    int rounds = 2;
    c_sweep->add_option("--family", family)->required();
    c_sweep->add_option("--params", params, "family parameters")->delimiter(',')->required();
    c_sweep->add_option("--p-rule", p_rule, "sqrt | half-q | const:K | div:D");
    c_sweep->add_flag("--exact", do_exact, "run the exact oracle where feasible");
    c_sweep->add_option("--cap", cap);
    c_sweep->add_option("--s", rounds, "pipeline rounds");
    c_sweep->add_flag("--timing", timing, "fill the seconds column (non-deterministic)");
    c_sweep->add_option("--out", out_path);

    // simulate
    auto* c_sim = app.add_subcommand("simulate", "bounded drift simulation");
    int epochs = 10, step_budget = 1, attempts = 0, param = 0;
    std::uint64_t seed = 1;
    c_sim->add_option("--file", file, "labeling file");
    c_sim->add_option("--construct", family, "construction name instead of a file");
    c_sim->add_option("--param", param, "construction parameter");
    c_sim->add_option("--s", rounds, "pipeline rounds");
    c_sim->add_option("--epochs", epochs);
    c_sim->add_option("--p", p)->required();
    c_sim->add_option("--step-budget", step_budget);
    c_sim->add_option("--attempts", attempts, "transposition attempts per epoch (default epsilon)");
    c_sim->add_option("--seed", seed);
    c_sim->add_option("--out", out_path, "trace CSV");

    // square
    auto* c_square = app.add_subcommand("square", "dump a square as CSV");
    std::string kind = "weaving";
    int rot = 0;
    c_square->add_option("kind", kind)->check(CLI::IsMember({"weaving", "base", "little"}));
    c_square->add_option("--q", q);
    c_square->add_option("--rot", rot);
    c_square->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c_construct->parsed()) {
            CocktailOptions copts = cflags.opts();
            std::string text;
            if (family == "extend-even" || family == "extend-odd" || family == "double") {
                if (in_path.empty()) throw InvalidArgument(family + " needs --in");
                AstrayLabeling in = astray_from_file(in_path);
                if (family == "extend-odd") {
                    text = labeling_to_json(extend_odd(in));
                } else {
                    AstrayLabeling o;
                    if (family == "double") o = double_up(in);
                    else {
                        AstrayPlan pl = plan == "tchain" ? AstrayPlan::TChain : AstrayPlan::Ascending;
                        o = step ? extend_even(in, step, pl) : extend_even(in, pl);
                    }
                    text = labeling_to_json(o.t, astray_meta(o));
                }
            } else {
                int prm = family == "factorial" ? s : (family == "tau" || family == "t8q") ? q : n;
                int rs = family == "pipeline" ? (s ? s : 2) : 2;
                BuiltLabeling bl = build_family(family, prm, rs, copts);
                text = labeling_to_json(bl.t, bl.meta);
            }
            emit(text, out_path, out);
            return kOk;
        }

        if (c_verify->parsed()) {
            LabelingFile f = load_labeling(file);
            bool ok = true;
            nlohmann::json rep;
            const std::int64_t alpha = alpha_of(f.t);
            rep["n"] = f.t.order();
            rep["alpha"] = alpha;
            if (alpha_max >= 0 && alpha > alpha_max) ok = false;
            if (want_astray) {
                auto a = f.astray();
                if (!a) throw FormatError(file + ": --astray requested but meta.astray is missing");
                int bb = b >= 0 ? b : f.astray_b().value_or(0);
                AstrayReport ar = check_astray(f.t, *a, bb);
                rep["astray"] = to_json(ar);
                rep["alpha_bound"] = static_cast<double>(bb) * bb / 2.0 * f.t.order();
                ok = ok && ar.pass;
            }
            int pp = p;
            std::optional<TypeClaim> claim;
            if (f.meta.contains("type_witness")) {
                const auto& tw = f.meta["type_witness"];
                if (pp == 0) pp = tw.value("p", 0);
                if (tw.value("p", 0) == pp) claim = TypeClaim{tw.value("m", 0), tw.value("ell", 0)};
            }
            if (pp >= 1) {
                TypeWitness w = find_type_witness(f.t, pp);
                rep["type_witness"] = to_json(w);
                if (claim) {
                    bool cert = w.certifies(claim->m, claim->ell);
                    rep["type_witness"]["claimed"] = {{"m", claim->m}, {"ell", claim->ell}, {"certified", cert}};
                    ok = ok && cert;
                }
                rep["type_witness"]["drift_bound"] = best_drift_bound(w, f.t.order(), alpha).bound;
            }
            rep["pass"] = ok;
            if (format == "json") {
                out << rep.dump(2) << '\n';
            } else {
                out << "n=" << f.t.order() << " alpha=" << alpha << '\n';
                if (rep.contains("astray")) {
                    const auto& ar = rep["astray"];
                    out << "astray: " << (ar["pass"].get<bool>() ? "pass" : "FAIL") << " a=" << ar["a"]
                        << " b_actual=" << ar["b_actual"] << " b=" << ar["b_requested"];
                    if (!ar["violation"].get<std::string>().empty()) out << " (" << ar["violation"].get<std::string>() << ")";
                    out << '\n';
                }
                if (rep.contains("type_witness")) {
                    const auto& tw = rep["type_witness"];
                    out << "type_witness: p=" << tw["p"] << " m=" << tw["m"] << " ell=" << tw["ell"];
                    if (tw.contains("claimed"))
                        out << " claimed=(" << tw["claimed"]["m"] << "," << tw["claimed"]["ell"] << ") "
                            << (tw["claimed"]["certified"].get<bool>() ? "certified" : "NOT certified");
                    out << " drift_bound=" << tw["drift_bound"] << '\n';
                }
                out << (ok ? "PASS" : "FAIL") << '\n';
            }
            return ok ? kOk : kCheckFailed;
        }

        if (c_attack->parsed() || c_exact->parsed()) {
            LabelingFile f = load_labeling(file);
            RobustnessReport r;
            r.n = f.t.order();
            r.p = p;
            r.alpha = alpha_of(f.t);
            r.bounds = theorem_bounds(r.n, p, r.alpha);
            if (c_exact->parsed()) r.exact = exact_robustness(f.t, p, cap);
            r.attack = best ? best_attack(f.t, p) : attack(f.t, p);
            emit(to_json(r).dump(2) + "\n", out_path, out);
            bool ok = r.attack.discrepancy <= r.bounds.second &&
                      (!r.exact || (r.attack.discrepancy <= r.exact->value && r.exact->value <= r.bounds.second));
            return ok ? kOk : kCheckFailed;
        }

        if (c_sweep->parsed()) {
            SweepOptions so{do_exact, cap, rounds, timing};
            auto rows = ratio_sweep(family, params, p_rule, so);
            emit(sweep_csv(rows), out_path, out);
            bool ok = true;
            for (const auto& r : rows) {
                if (!r.error.empty()) {
                    err << "row n=" << r.n << ": " << r.error << '\n';
                    ok = false;
                }
            }
            return ok ? kOk : kCheckFailed;
        }

        if (c_sim->parsed()) {
            SimConfig cfg;
            if (!file.empty()) cfg.base = load_labeling(file).t;
            else if (!family.empty()) cfg.base = build_family(family, param, rounds).t;
            else throw InvalidArgument("simulate needs --file or --construct");
            cfg.epochs = epochs;
            cfg.p = p;
            cfg.step_budget = step_budget;
            cfg.seed = seed;
            cfg.attempts_per_epoch = attempts;
            SimTrace tr = simulate(cfg);
            emit(trace_csv(tr), out_path, out);
            if (tr.bound && !tr.bound_held) {
                err << "drift bound " << *tr.bound << " exceeded (max " << tr.max_discrepancy << ")\n";
                return kCheckFailed;
            }
            return kOk;
        }

        if (c_square->parsed()) {
            Square sq;
            if (kind == "base") sq = base_square();
            else if (kind == "little") sq = little_square(q, rot).entries;
            else sq = weaving_square(q).entries;
            emit(square_to_csv(sq), out_path, out);
            if (kind == "weaving" && !check_weaving(sq).pass) return kCheckFailed;
            return kOk;
        }
    } catch (const CapExceeded& e) {
        err << e.what() << '\n';
        return kCap;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace swaprobust
