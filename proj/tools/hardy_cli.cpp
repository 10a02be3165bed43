// hardy: Gini means, Hardy-constant bounds, and empirical verification.
//
// Subcommands:
//   bound   the four Hardy-constant estimates for one (p, q)
//   sweep   bound reports over a rectangular (p, q) grid -> CSV / JSON-lines
//   verify  truncated Hardy ratios against the applicable bound (CI-friendly)
//   mean    evaluate a single Gini / concavized mean
//
// Exit codes: 0 ok, 1 bound violation (verify), 2 domain error, 64 usage,
// 74 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "hardy/empirical.hpp"
#include "hardy/hardy_bounds.hpp"

using json = nlohmann::json;
using namespace hardy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundViolation = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct RunConfig {
    numerics::Tolerance tol;
    double quad_tol = 1e-9;
    std::uint64_t seed = 0;
};

// Shortest round-trip decimal representation; keeps sweep files diffable
// and lossless.
std::string fmt(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

json report_to_json(const bounds::BoundsReport& r) {
    json j;
    j["p"] = r.params.p;
    j["q"] = r.params.q;
    j["is_hardy"] = r.is_hardy;
    j["h_is_exact"] = r.h_is_exact;
    auto put = [&j](const char* key, const std::optional<double>& v,
                    const std::string& reason) {
        if (v) {
            j[key] = *v;
        } else {
            j[key] = nullptr;
            j[std::string(key) + "_reason"] = reason;
        }
    };
    put("lower_H", r.lower_H, r.lower_H_reason);
    put("trivial_upper", r.trivial_upper, r.trivial_upper_reason);
    put("pas_upper", r.pas_upper, r.pas_upper_reason);
    put("c_upper", r.c_upper, r.c_upper_reason);
    if (r.residual_integral) j["residual_integral"] = *r.residual_integral;
    if (r.residual_algebraic) j["residual_algebraic"] = *r.residual_algebraic;
    return j;
}

void print_report_text(const bounds::BoundsReport& r) {
    std::printf("Gini mean G(p=%.17g, q=%.17g)\n", r.params.p, r.params.q);
    if (!r.is_hardy) {
        std::printf("  not a Hardy mean (requires min(p,q) <= 0 and "
                    "max(p,q) < 1)\n");
        return;
    }
    if (r.h_is_exact) {
        std::printf("  Hardy constant (exact, concave region): %.15g\n",
                    *r.lower_H);
        return;
    }
    std::printf("  lower bound  H_pq        : %.15g\n", *r.lower_H);
    std::printf("  upper bound  c_pq (new)  : %.15g\n", *r.c_upper);
    std::printf("  upper bound  2020        : %.15g\n", *r.pas_upper);
    std::printf("  upper bound  trivial     : %.15g\n", *r.trivial_upper);
    std::printf("  residual (algebraic)     : %.3g\n", *r.residual_algebraic);
    std::printf("  residual (integral)      : %.3g\n", *r.residual_integral);
}

empirical::SequenceSpec parse_seq(const std::string& text, std::size_t n,
                                  std::uint64_t default_seed) {
    using empirical::SequenceSpec;
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "harmonic") return SequenceSpec::harmonic(n);
    if (kind == "constant") {
        return SequenceSpec::constant(arg.empty() ? 1.0 : std::stod(arg), n);
    }
    if (kind == "geometric") {
        return SequenceSpec::geometric(arg.empty() ? 0.5 : std::stod(arg), n);
    }
    if (kind == "lognormal") {
        std::uint64_t seed = default_seed;
        double sigma = 1.0;
        if (!arg.empty()) {
            auto comma = arg.find(',');
            seed = std::stoull(arg.substr(0, comma));
            if (comma != std::string::npos) {
                sigma = std::stod(arg.substr(comma + 1));
            }
        }
        return SequenceSpec::random_lognormal(seed, sigma, n);
    }
    if (kind == "explicit") {
        std::vector<double> vals;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        return SequenceSpec::explicit_values(std::move(vals));
    }
    throw empirical::InvalidSpec("unknown sequence kind: " + kind);
}

// ---------------------------------------------------------------------------
// bound

int cmd_bound(GiniParams pq, const RunConfig& cfg, bool as_json) {
    auto r = bounds::bounds_report(pq, cfg.tol, cfg.quad_tol);
    if (as_json) {
        std::cout << report_to_json(r).dump(2) << "\n";
    } else {
        print_report_text(r);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepGrid {
    double p_min, p_max, q_min, q_max;
    double step = 0.5;
    std::string output_path;
    std::string format = "csv";
};

struct SweepRow {
    bounds::BoundsReport report;
    std::optional<double> gap;  // c_upper - lower_H
};

int cmd_sweep(const SweepGrid& grid, const RunConfig& cfg) {
    std::vector<GiniParams> nodes;
    // Row-major, p outer; half-step slack absorbs accumulated rounding at
    // the far edge.
    for (double p = grid.p_min; p <= grid.p_max + grid.step * 0.5;
         p += grid.step) {
        for (double q = grid.q_min; q <= grid.q_max + grid.step * 0.5;
             q += grid.step) {
            nodes.push_back({p, q});
        }
    }

    std::vector<SweepRow> rows(nodes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= nodes.size()) return;
            SweepRow row;
            row.report = bounds::bounds_report(nodes[i], cfg.tol,
                                               cfg.quad_tol);
            if (row.report.c_upper && row.report.lower_H) {
                row.gap = *row.report.c_upper - *row.report.lower_H;
            }
            rows[i] = std::move(row);
        }
    };
    unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    pool.clear();  // join

    std::ofstream out(grid.output_path);
    if (!out) {
        std::cerr << "cannot open output file: " << grid.output_path << "\n";
        return kExitIo;
    }

    auto cell = [](const std::optional<double>& v) {
        return v ? fmt(*v) : std::string();
    };
    if (grid.format == "csv") {
        out << "p,q,H,trivial,pas,c,residual_integral,gap_c_minus_H\n";
        for (const auto& row : rows) {
            const auto& r = row.report;
            out << fmt(r.params.p) << ',' << fmt(r.params.q) << ','
                << cell(r.lower_H) << ',' << cell(r.trivial_upper) << ','
                << cell(r.pas_upper) << ',' << cell(r.c_upper) << ','
                << cell(r.residual_integral) << ',' << cell(row.gap) << '\n';
        }
    } else {
        for (const auto& row : rows) {
            json j = report_to_json(row.report);
            j["gap_c_minus_H"] = row.gap ? json(*row.gap) : json(nullptr);
            out << j.dump() << '\n';
        }
    }
    out.close();
    if (!out) {
        std::cerr << "write failed: " << grid.output_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(GiniParams pq, std::size_t n, const std::string& seq,
               std::size_t ef_n, const RunConfig& cfg, bool trace,
               bool fault_inject, bool as_json) {
    if (!pq.is_hardy()) {
        std::cerr << "G(" << pq.p << "," << pq.q
                  << ") is not a Hardy mean; nothing to verify\n";
        return kExitDomain;
    }
    double bound = pq.is_negative_quadrant()
                       ? bounds::c_upper(pq, cfg.tol)
                       : bounds::hardy_lower_limit(pq);
    const char* bound_kind =
        pq.is_negative_quadrant() ? "c_pq" : "H_pq (exact)";

    auto spec = parse_seq(seq, n, cfg.seed);
    std::vector<empirical::RatioResult> results;
    results.push_back(empirical::hardy_ratio_gini(pq, spec, trace));

    if (pq.is_negative_quadrant()) {
        // The generic solver is O(n^2) in mean evaluations; the concavized
        // ratio is checked on a capped prefix length.
        auto ef_spec = parse_seq(seq, std::min(n, ef_n), cfg.seed);
        auto ev = empirical::quasideviation_evaluator(
            "concavized", concavized_generator(pq), cfg.tol);
        results.push_back(empirical::hardy_ratio(ev, ef_spec, trace));
    }

    if (fault_inject) {
        for (auto& r : results) r.ratio += 1.0;  // harness self-test hook
    }

    bool violated = false;
    json jout;
    jout["p"] = pq.p;
    jout["q"] = pq.q;
    jout["bound"] = bound;
    jout["bound_kind"] = bound_kind;
    jout["ratios"] = json::array();
    for (const auto& r : results) {
        bool over = r.ratio > bound + 1e-6;
        violated = violated || over;
        if (as_json) {
            jout["ratios"].push_back({{"mean", r.mean_id},
                                      {"n", r.n},
                                      {"ratio", r.ratio},
                                      {"exceeds_bound", over}});
        } else {
            std::printf("%-24s n=%-8zu ratio=%.12g  bound(%s)=%.12g  %s\n",
                        r.mean_id.c_str(), r.n, r.ratio, bound_kind, bound,
                        over ? "VIOLATION" : "ok");
        }
        if (trace && r.partial_trace && !as_json) {
            std::printf("k,partial_ratio\n");
            for (std::size_t k = 0; k < r.partial_trace->size(); ++k) {
                std::printf("%zu,%s\n", k + 1,
                            fmt((*r.partial_trace)[k]).c_str());
            }
        }
    }
    if (as_json) {
        jout["violated"] = violated;
        std::cout << jout.dump(2) << "\n";
    }
    return violated ? kExitBoundViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// mean

int cmd_mean(GiniParams pq, const std::vector<double>& values,
             bool concavized, bool closed_form, const RunConfig& cfg) {
    for (double v : values) {
        if (!(v > 0.0)) {
            std::cerr << "mean: values must be strictly positive\n";
            return kExitDomain;
        }
    }
    PositiveVector x{values};
    double m;
    if (closed_form) {
        if (pq.p != -1.0 || pq.q != -2.0) {
            std::cerr << "--closed-form is only available for "
                         "(p,q)=(-1,-2)\n";
            return kExitUsage;
        }
        m = special_mean_m12(x).value;
    } else if (concavized) {
        if (!pq.is_negative_quadrant()) {
            std::cerr << "--concavized requires max(p,q) < 0\n";
            return kExitDomain;
        }
        m = quasideviation_mean(concavized_generator(pq), x, cfg.tol);
    } else {
        m = gini_mean(pq, x);
    }
    std::printf("%.15g\n", m);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gini means and Hardy-constant bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--tol-x", cfg.tol.abs_x, "root solver x tolerance")
        ->envname("HARDY_TOL_X");
    app.add_option("--tol-f", cfg.tol.abs_f, "root solver f tolerance")
        ->envname("HARDY_TOL_F");
    app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")
        ->envname("HARDY_QUAD_TOL");
    app.add_option("--seed", cfg.seed, "default RNG seed")
        ->envname("HARDY_SEED");

    double p = 0.0, q = 0.0;
    bool as_json = false;

    auto* bound = app.add_subcommand("bound", "Hardy-constant estimates");
    bound->add_option("-p", p, "first exponent")->required();
    bound->add_option("-q", q, "second exponent")->required();
    bound->add_flag("--json", as_json, "JSON output");

    SweepGrid grid{};
    auto* sweep = app.add_subcommand("sweep", "bounds over a (p,q) grid");
    sweep->add_option("--p-min", grid.p_min)->required();
    sweep->add_option("--p-max", grid.p_max)->required();
    sweep->add_option("--q-min", grid.q_min)->required();
    sweep->add_option("--q-max", grid.q_max)->required();
    sweep->add_option("--step", grid.step, "grid step")->check(CLI::PositiveNumber);
    sweep->add_option("-o,--out", grid.output_path, "output file")->required();
    sweep->add_option("--format", grid.format)
        ->check(CLI::IsMember({"csv", "jsonl"}));

    std::size_t n = 1000, ef_n = 1000;
    std::string seq = "harmonic";
    bool trace = false, fault_inject = false;
    auto* verify = app.add_subcommand("verify",
                                      "truncated Hardy ratios vs bounds");
    verify->add_option("-p", p)->required();
    verify->add_option("-q", q)->required();
    verify->add_option("-n", n, "sequence length");
    verify->add_option("--seq", seq,
                       "harmonic | constant:c | geometric:r | "
                       "lognormal:seed[,sigma] | explicit:a,b,...");
    verify->add_option("--ef-n", ef_n,
                       "prefix cap for the concavized-mean ratio");
    verify->add_flag("--trace", trace, "stream partial ratios as CSV");
    verify->add_flag("--fault-inject", fault_inject)->group("");
    verify->add_flag("--json", as_json, "JSON output");

    std::vector<double> values;
    bool concavized = false, closed_form = false;
    auto* mean = app.add_subcommand("mean", "evaluate one mean");
    mean->add_option("-p", p)->required();
    mean->add_option("-q", q)->required();
    mean->add_flag("--concavized", concavized,
                   "concavized quasideviation mean");
    mean->add_flag("--closed-form", closed_form,
                   "closed form for (p,q)=(-1,-2)");
    mean->add_option("values", values, "positive entries")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound->parsed()) return cmd_bound({p, q}, cfg, as_json);
        if (sweep->parsed()) return cmd_sweep(grid, cfg);
        if (verify->parsed()) {
            return cmd_verify({p, q}, n, seq, ef_n, cfg, trace, fault_inject,
                              as_json);
        }
        if (mean->parsed()) {
            return cmd_mean({p, q}, values, concavized, closed_form, cfg);
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitDomain;
    } catch (const empirical::InvalidSpec& e) {
        std::cerr << "invalid sequence spec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
