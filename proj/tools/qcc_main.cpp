// qcc: command-line interface to the color coding toolkit.
// stdout carries data (CSV or JSON), stderr carries diagnostics.
// Exit codes: 0 ok, 2 validation, 3 feasibility, 4 convergence, 5 d-range.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcc/errors.hpp"
#include "qcc/output_record.hpp"
#include "qcc/quantum_oracle.hpp"
#include "qcc/rep_data.hpp"
#include "qcc/sampler.hpp"
#include "qcc/success.hpp"
#include "qcc/tracy_widom.hpp"

namespace {

using namespace qcc;

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

// "3", "2..4" (inclusive), or "2,5,7"
std::vector<uint32_t> parse_u32_range(const std::string& s) {
    std::vector<uint32_t> out;
    try {
        if (const size_t dots = s.find(".."); dots != std::string::npos) {
            const unsigned long a = std::stoul(s.substr(0, dots));
            const unsigned long b = std::stoul(s.substr(dots + 2));
            if (a == 0 || b < a) throw ValidationFailure("bad range: " + s);
            for (unsigned long v = a; v <= b; ++v)
                out.push_back(static_cast<uint32_t>(v));
        } else {
            for (const std::string& tok : split(s, ','))
                out.push_back(static_cast<uint32_t>(std::stoul(tok)));
        }
    } catch (const std::logic_error&) {
        throw ValidationFailure("cannot parse integer list: " + s);
    }
    if (out.empty()) throw ValidationFailure("empty integer list: " + s);
    for (uint32_t v : out)
        if (v == 0) throw ValidationFailure("values must be >= 1: " + s);
    return out;
}

// "0.5", "-2,-1,0", or "start:stop:step" (inclusive stop up to rounding)
std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    try {
        const std::vector<std::string> colon = split(s, ':');
        if (colon.size() == 3) {
            const double start = std::stod(colon[0]);
            const double stop = std::stod(colon[1]);
            const double step = std::stod(colon[2]);
            if (step <= 0 || stop < start)
                throw ValidationFailure("bad grid: " + s);
            const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
            for (long i = 0; i <= count; ++i) out.push_back(start + step * i);
        } else if (colon.size() == 1) {
            for (const std::string& tok : split(s, ','))
                out.push_back(std::stod(tok));
        } else {
            throw ValidationFailure("bad float list: " + s);
        }
    } catch (const std::logic_error&) {
        throw ValidationFailure("cannot parse float list: " + s);
    }
    if (out.empty()) throw ValidationFailure("empty float list: " + s);
    return out;
}

std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void check_format(const std::string& f) {
    if (f != "csv" && f != "json")
        throw ValidationFailure("--format must be csv or json");
}

void emit(const OutputRecord& rec, const std::string& format) {
    std::cout << (format == "json" ? to_json(rec) : to_csv(rec));
}

// ---------------------------------------------------------------- table ---

struct TableArgs {
    std::string n_range, d_range;
    std::string scheme;
    std::string ancilla = "1";
    std::string format = "csv";
    bool breakdown = false;
};

int run_table(const TableArgs& args) {
    check_format(args.format);
    const std::optional<Scheme> scheme = scheme_from_name(args.scheme);
    if (!scheme)
        throw ValidationFailure("unknown scheme: " + args.scheme);
    mpz_class ancilla;
    if (ancilla.set_str(args.ancilla, 10) != 0 || ancilla < 1)
        throw ValidationFailure("--ancilla must be a positive integer");

    ExactOptions opts;
    opts.breakdown = args.breakdown;

    OutputRecord rec;
    rec.command = "table";
    rec.parameters = {{"n", args.n_range},
                      {"d", args.d_range},
                      {"scheme", args.scheme},
                      {"ancilla", args.ancilla},
                      {"breakdown", args.breakdown ? "true" : "false"}};
    rec.provenance = {{"method", "exact-rational"},
                      {"max_partitions", std::to_string(opts.max_partitions)}};
    if (args.breakdown)
        rec.columns = {"n", "d", "scheme", "ancilla", "row_type", "partition",
                       "dim", "mult", "contribution", "p_exact", "p_float"};
    else
        rec.columns = {"n", "d", "scheme", "ancilla", "p_exact", "p_float"};

    for (uint32_t n : parse_u32_range(args.n_range)) {
        for (uint32_t d : parse_u32_range(args.d_range)) {
            SuccessReport report;
            std::string ancilla_cell;
            switch (*scheme) {
                case Scheme::classical: {
                    const mpq_class p = p_classical(n, d);
                    report.query = {n, d, Scheme::classical, std::nullopt};
                    report.p_exact = p;
                    report.p_float = mpq_get_d(p.get_mpq_t());
                    break;
                }
                case Scheme::nonextended:
                    report = p_nonextended(n, d, opts);
                    break;
                case Scheme::extended_limited:
                    report = p_extended_limited(n, d, ancilla, opts);
                    ancilla_cell = ancilla.get_str();
                    break;
                case Scheme::extended:
                    report = p_extended(n, d, opts);
                    break;
            }
            const std::string p_str = rational_str(*report.p_exact);
            if (args.breakdown && report.terms) {
                for (const TermBreakdown& t : *report.terms)
                    rec.rows.push_back({n, d, args.scheme, ancilla_cell, "term",
                                        t.partition.to_string(),
                                        t.dim.get_str(), t.mult.get_str(),
                                        rational_str(t.contribution), "", ""});
                rec.rows.push_back({n, d, args.scheme, ancilla_cell, "total", "",
                                    "", "", "", p_str, report.p_float});
            } else if (args.breakdown) {
                rec.rows.push_back({n, d, args.scheme, ancilla_cell, "total", "",
                                    "", "", "", p_str, report.p_float});
            } else {
                rec.rows.push_back(
                    {n, d, args.scheme, ancilla_cell, p_str, report.p_float});
            }
        }
    }
    emit(rec, args.format);
    return 0;
}

// --------------------------------------------------------------- sample ---

struct SampleArgs {
    uint32_t n = 0, d = 0;
    uint64_t trials = 0, seed = 0;
    std::string estimator = "extended";
    std::string format = "csv";
};

int run_sample(const SampleArgs& args) {
    check_format(args.format);
    if (args.estimator != "extended" && args.estimator != "nonextended")
        throw ValidationFailure("--estimator must be extended or nonextended");
    if (args.n == 0 || args.d == 0 || args.trials == 0)
        throw ValidationFailure("--n, --d, --trials must be >= 1");

    const SampleRun run =
        args.estimator == "extended"
            ? estimate_p_extended(args.n, args.d, args.trials, args.seed)
            : estimate_p_nonextended(args.n, args.d, args.trials, args.seed);

    OutputRecord rec;
    rec.command = "sample";
    rec.parameters = {{"n", std::to_string(args.n)},
                      {"d", std::to_string(args.d)},
                      {"trials", std::to_string(args.trials)},
                      {"seed", std::to_string(args.seed)},
                      {"estimator", args.estimator}};
    rec.provenance = {{"seed", std::to_string(args.seed)},
                      {"method", args.estimator == "extended"
                                     ? "rsk-patience-mc"
                                     : "rsk-insertion-mc"},
                      {"interval", args.estimator == "extended"
                                       ? "wilson95"
                                       : "normal95"}};
    rec.columns = {"n",        "d",      "estimator", "trials", "seed",
                   "estimate", "stderr", "ci_low",    "ci_high"};
    rec.rows.push_back({run.n, run.d, args.estimator,
                        static_cast<int64_t>(run.trials),
                        std::to_string(run.seed), run.estimate, run.std_error,
                        run.ci95.first, run.ci95.second});
    emit(rec, args.format);
    return 0;
}

// ------------------------------------------------------------------- tw ---

struct TwArgs {
    std::string xs;
    std::string method = "painleve";
    std::string ns;
    uint64_t trials = 200000, seed = 0;
    std::string format = "csv";
};

TwMethod parse_method(const std::string& m) {
    if (m == "painleve") return TwMethod::painleve;
    if (m == "fredholm") return TwMethod::fredholm;
    throw ValidationFailure("--method must be painleve or fredholm");
}

int run_tw_eval(const TwArgs& args) {
    check_format(args.format);
    const TwMethod method = parse_method(args.method);
    std::vector<double> xs = parse_double_list(args.xs);
    std::sort(xs.begin(), xs.end());
    const TwOptions opts;
    const TWTable table = tw_grid(xs, method, opts);

    OutputRecord rec;
    rec.command = "tw eval";
    rec.parameters = {{"x", args.xs}, {"method", args.method}};
    rec.provenance = {{"method", args.method},
                      {"ode_rtol", format_double(opts.ode_rtol)},
                      {"right_cutoff", format_double(opts.right_cutoff)},
                      {"nystrom", std::to_string(opts.nystrom_coarse) + "+" +
                                      std::to_string(opts.nystrom_fine)},
                      {"agreement_budget", format_double(opts.agreement_budget)}};
    rec.columns = {"x", "f_tw", "err_est"};
    for (size_t i = 0; i < table.xs.size(); ++i)
        rec.rows.push_back({table.xs[i], table.fs[i], table.errs[i]});
    emit(rec, args.format);
    return 0;
}

int run_tw_selftest(const TwArgs& args) {
    check_format(args.format);
    const TwSelfTestReport rep = tw_selftest();
    OutputRecord rec;
    rec.command = "tw selftest";
    rec.provenance = {{"method", "painleve+fredholm"}};
    rec.columns = {"check", "value", "threshold", "pass"};
    for (const TwCheck& c : rep.checks)
        rec.rows.push_back({c.name, c.value, c.threshold,
                            std::string(c.pass ? "true" : "false")});
    emit(rec, args.format);
    return rep.pass ? 0 : 1;
}

int run_tw_theoremb(const TwArgs& args) {
    check_format(args.format);
    const std::vector<uint32_t> ns = parse_u32_range(args.ns);
    const std::vector<double> xs = parse_double_list(args.xs);
    const std::vector<TheoremBReport> reports =
        theorem_b_scan(ns, xs, args.trials, args.seed);

    OutputRecord rec;
    rec.command = "tw theoremB";
    rec.parameters = {{"n", args.ns},
                      {"x", args.xs},
                      {"trials", std::to_string(args.trials)},
                      {"seed", std::to_string(args.seed)}};
    rec.provenance = {{"seed", std::to_string(args.seed)},
                      {"method", "painleve"},
                      {"estimator", "rsk-patience-mc"}};
    rec.columns = {"n",        "d", "x_requested", "x",   "p_est",
                   "p_stderr", "source", "f_tw",   "gap"};
    for (const TheoremBReport& r : reports)
        rec.rows.push_back({r.n, r.d, r.x_requested, r.x, r.p_est, r.p_stderr,
                            std::string(r.exact ? "exact" : "mc"), r.f, r.gap});
    emit(rec, args.format);
    return 0;
}

// --------------------------------------------------------------- verify ---

struct VerifyArgs {
    uint32_t n = 0, d = 0, ancilla = 1;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    if (args.format != "text" && args.format != "json" && args.format != "csv")
        throw ValidationFailure("--format must be text, csv or json");
    if (args.n < 1 || args.n > 4 || args.d < 1 || args.d > 3 || args.ancilla < 1)
        throw ValidationFailure(
            "size guard: verify requires 1 <= n <= 4, 1 <= d <= 3, ancilla >= 1");

    const PermutationRep rep = build_permutation_rep(args.n, args.d);
    const IsotypicDecomposition decomp = decompose(rep);
    const CovariantMeasurement meas =
        build_optimal_measurement(decomp, args.ancilla);
    const EvaluationReport eval = verify_measurement(meas, rep);
    const SuccessReport closed =
        p_extended_limited(args.n, args.d, mpz_class(args.ancilla));
    const double deviation = std::abs(eval.probability - closed.p_float);
    const bool ok = deviation <= 1e-10;

    if (args.format == "text") {
        std::printf("permutation representation: n=%u d=%u dim=%u |R|=%u\n",
                    args.n, args.d, rep.dim, args.ancilla);
        std::printf("%-12s %6s %6s\n", "partition", "D", "m");
        for (const IsotypicComponent& c : decomp.components)
            std::printf("%-12s %6u %6u\n", c.partition.to_string().c_str(),
                        c.dim, c.mult);
        std::printf("achieved probability   : %.12f\n", eval.probability);
        std::printf("closed form (exact)    : %s = %.12f\n",
                    rational_str(*closed.p_exact).c_str(), closed.p_float);
        std::printf("deviation              : %.3e\n", deviation);
        std::printf("completeness residual  : %.3e\n", eval.completeness_residual);
        std::printf("min POVM eigenvalue    : %.3e\n", eval.min_eigenvalue);
        std::printf("min outcome probability: %.3e\n", eval.min_outcome);
        std::printf("%s\n", ok ? "OK" : "FAILED");
    } else {
        OutputRecord rec;
        rec.command = "verify";
        rec.parameters = {{"n", std::to_string(args.n)},
                          {"d", std::to_string(args.d)},
                          {"ancilla", std::to_string(args.ancilla)}};
        rec.provenance = {{"method", "dense-oracle"},
                          {"structural_tol", format_double(1e-10)},
                          {"positivity_floor", format_double(1e-12)}};
        rec.columns = {"row_type", "partition", "dim",  "mult",
                       "achieved", "closed_form", "deviation",
                       "completeness_residual", "min_eigenvalue", "min_outcome"};
        for (const IsotypicComponent& c : decomp.components)
            rec.rows.push_back({"component", c.partition.to_string(), c.dim,
                                c.mult, "", "", "", "", "", ""});
        rec.rows.push_back({"summary", "", "", "", eval.probability,
                            rational_str(*closed.p_exact), deviation,
                            eval.completeness_residual, eval.min_eigenvalue,
                            eval.min_outcome});
        emit(rec, args.format);
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"color coding success probabilities: exact, Monte Carlo, and "
                 "Tracy-Widom asymptotics"};
    app.require_subcommand(1);

    TableArgs table_args;
    CLI::App* table = app.add_subcommand(
        "table", "exact success probabilities over (n, d) grids");
    table->add_option("--n", table_args.n_range, "boxes: int, a..b, or list")
        ->required();
    table->add_option("--d", table_args.d_range, "colors: int, a..b, or list")
        ->required();
    table->add_option("--scheme", table_args.scheme,
                      "classical|nonextended|extended-limited|extended")
        ->required();
    table->add_option("--ancilla", table_args.ancilla,
                      "|R| for extended-limited (default 1)");
    table->add_option("--format", table_args.format, "csv|json");
    table->add_flag("--breakdown", table_args.breakdown,
                    "per-partition contributions");

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand(
        "sample", "seeded Monte Carlo estimates via RSK sampling");
    sample->add_option("--n", sample_args.n)->required();
    sample->add_option("--d", sample_args.d)->required();
    sample->add_option("--trials", sample_args.trials)->required();
    sample->add_option("--seed", sample_args.seed)->required();
    sample->add_option("--estimator", sample_args.estimator,
                       "extended|nonextended");
    sample->add_option("--format", sample_args.format, "csv|json");

    TwArgs tw_args;
    CLI::App* tw = app.add_subcommand("tw", "Tracy-Widom distribution tools");
    tw->require_subcommand(1);
    CLI::App* tw_eval = tw->add_subcommand("eval", "evaluate F_TW on a grid");
    tw_eval->add_option("--x", tw_args.xs, "float list or start:stop:step")
        ->required();
    tw_eval->add_option("--method", tw_args.method, "painleve|fredholm");
    tw_eval->add_option("--format", tw_args.format, "csv|json");
    CLI::App* tw_self = tw->add_subcommand("selftest", "dual-method self test");
    tw_self->add_option("--format", tw_args.format, "csv|json");
    CLI::App* tw_thb = tw->add_subcommand(
        "theoremB", "compare p_max(n, d) against F_TW at scaled arguments");
    tw_thb->add_option("--n", tw_args.ns, "list of n")->required();
    tw_thb->add_option("--x", tw_args.xs, "list of x")->required();
    tw_thb->add_option("--trials", tw_args.trials);
    tw_thb->add_option("--seed", tw_args.seed);
    tw_thb->add_option("--format", tw_args.format, "csv|json");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "dense-matrix verification of the covariant measurement");
    verify->add_option("--n", verify_args.n)->required();
    verify->add_option("--d", verify_args.d)->required();
    verify->add_option("--ancilla", verify_args.ancilla);
    verify->add_option("--format", verify_args.format, "text|csv|json");

    try {
        app.parse(argc, argv);
        if (*table) return run_table(table_args);
        if (*sample) return run_sample(sample_args);
        if (*tw) {
            if (*tw_eval) return run_tw_eval(tw_args);
            if (*tw_self) return run_tw_selftest(tw_args);
            if (*tw_thb) return run_tw_theoremb(tw_args);
        }
        if (*verify) return run_verify(verify_args);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FeasibilityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const DOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const SizeGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
