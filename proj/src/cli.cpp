#include "pbf/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pbf/bounds.hpp"
#include "pbf/draw.hpp"
#include "pbf/errors.hpp"
#include "pbf/io.hpp"
#include "pbf/maxlin.hpp"
#include "pbf/moments.hpp"
#include "pbf/transform.hpp"

namespace pbf {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::bad_args, "cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return std::move(text).str();
}

std::optional<long long> env_int(const char* name) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return std::nullopt;
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(raw, &used);
    } catch (...) {
        used = 0;
    }
    if (used != std::string(raw).size())
        throw Error(Errc::bad_args,
                    std::string(name) + " must be an integer, got '" + raw + "'");
    return value;
}

Limits env_limits() {
    Limits limits;
    if (const auto cap = env_int("PBF_DENSE_CAP")) {
        if (*cap < 0 || *cap > 30)
            throw Error(Errc::bad_args, "PBF_DENSE_CAP outside 0..30");
        limits.dense_exact_cap = static_cast<int>(*cap);
        limits.dense_float_cap = std::max(limits.dense_float_cap, limits.dense_exact_cap);
    }
    return limits;
}

const char* verdict_word(bool holds) { return holds ? "HOLDS" : "VIOLATED"; }
const char* yes_no(bool v) { return v ? "yes" : "no"; }

void print_report(std::ostream& out, const std::string& label, const BoundReport& report) {
    out << "check " << label << ": " << verdict_word(report.holds)
        << " tight=" << yes_no(report.tight);
    if (report.exact)
        out << "  lhs=" << report.lhs_exact.to_string()
            << "  rhs=" << report.rhs_exact.to_string()
            << "  slack=" << report.slack_exact.to_string();
    else
        out << "  lhs=" << fmt(report.lhs) << "  rhs=" << fmt(report.rhs);
    out << '\n';
}

json report_json(const BoundReport& report) {
    json j;
    j["kind"] = bound_kind_name(report.kind);
    j["exact"] = report.exact;
    j["holds"] = report.holds;
    j["tight"] = report.tight;
    if (report.exact) {
        j["lhs"] = report.lhs_exact.to_string();
        j["rhs"] = report.rhs_exact.to_string();
        j["slack"] = report.slack_exact.to_string();
    }
    j["lhs_float"] = report.lhs;
    j["rhs_float"] = report.rhs;
    j["slack_float"] = report.slack;
    return j;
}

json system_json(const EquationSystem& system) {
    json j;
    j["n"] = system.var_count();
    j["m"] = system.size();
    j["k"] = system.k();
    j["total_weight"] = system.total_weight();
    json equations = json::array();
    for (const Equation& eq : system.equations()) {
        json e;
        e["weight"] = eq.weight;
        e["rhs"] = eq.rhs;
        json lhs = json::array();
        for (int i = 1; i <= system.var_count(); ++i)
            if (eq.lhs.contains(i)) lhs.push_back(i);
        e["lhs"] = std::move(lhs);
        equations.push_back(std::move(e));
    }
    j["equations"] = std::move(equations);
    return j;
}

// --- analyze -------------------------------------------------------------

struct AnalyzeArgs {
    std::string file;
    std::vector<int> moments;
    std::vector<double> norms;
    bool as_json = false;
};

int run_analyze(const AnalyzeArgs& args, const Limits& limits, std::ostream& out) {
    const FourierExpansion f = parse_function(read_file(args.file));
    const WidthProfile profile = width(f);
    const Rational s2 = second_moment(f);
    const int deg = degree(f);

    for (int r : args.moments)
        if (r < 1) throw Error(Errc::bad_args, "--moments entries must be >= 1");
    for (double p : args.norms)
        if (!(p >= 1.0)) throw Error(Errc::bad_exponent, "--norms entries must be >= 1");

    // A cap overflow on an optional extra only annotates the row; anything
    // else is a real error.
    struct MomentRow {
        int r = 0;
        std::optional<Rational> value;
        std::string skipped;
    };
    std::vector<MomentRow> moment_rows;
    for (int r : args.moments) {
        MomentRow row{r, {}, {}};
        try {
            row.value = even_moment(f, r, limits);
        } catch (const Error& e) {
            if (e.code() != Errc::too_many_variables) throw;
            row.skipped = e.what();
        }
        moment_rows.push_back(std::move(row));
    }

    struct NormRow {
        double p = 0.0;
        std::optional<double> value;
        std::string skipped;
    };
    std::vector<NormRow> norm_rows;
    for (double p : args.norms) {
        NormRow row{p, {}, {}};
        try {
            row.value = p_norm(f, p, limits);
        } catch (const Error& e) {
            if (e.code() != Errc::too_many_variables) throw;
            row.skipped = e.what();
        }
        norm_rows.push_back(std::move(row));
    }

    struct Entry {
        std::string label;
        std::optional<BoundReport> report;
        std::string skipped;
    };
    std::vector<Entry> entries;
    const auto add = [&](const std::string& label, auto&& compute) {
        Entry entry{label, {}, {}};
        try {
            entry.report = compute();
        } catch (const Error& e) {
            if (e.code() != Errc::too_many_variables) throw;
            entry.skipped = e.what();
        }
        entries.push_back(std::move(entry));
    };
    add("width42", [&] { return check_theorem_42(f, limits); });
    add("width2r r=2", [&] { return check_theorem_2r(f, 2, limits); });
    add("classical q=4 p=2", [&] { return check_classical(f, 4.0, 2.0, limits); });
    add("corollary q=4 p=2", [&] { return check_corollary(f, 4.0, 2.0, limits); });

    bool all_hold = true;
    for (const Entry& entry : entries)
        if (entry.report && !entry.report->holds) all_hold = false;

    if (args.as_json) {
        json j;
        j["n"] = f.var_count();
        j["m"] = f.term_count();
        j["degree"] = deg;
        j["width"] = profile.width;
        j["per_variable"] = profile.per_variable;
        j["second_moment"] = s2.to_string();
        j["second_moment_float"] = s2.to_double();
        json moments = json::array();
        for (const auto& row : moment_rows) {
            json jrow;
            jrow["r"] = row.r;
            if (row.value) {
                jrow["moment"] = row.value->to_string();
                jrow["float"] = row.value->to_double();
            } else {
                jrow["skipped"] = row.skipped;
            }
            moments.push_back(std::move(jrow));
        }
        j["moments"] = std::move(moments);
        json norms = json::array();
        for (const auto& row : norm_rows) {
            json jrow;
            jrow["p"] = row.p;
            if (row.value)
                jrow["value"] = *row.value;
            else
                jrow["skipped"] = row.skipped;
            norms.push_back(std::move(jrow));
        }
        j["norms"] = std::move(norms);
        json bounds = json::array();
        for (const Entry& entry : entries) {
            if (entry.report) {
                bounds.push_back(report_json(*entry.report));
            } else {
                json jrow;
                jrow["kind"] = entry.label;
                jrow["skipped"] = entry.skipped;
                bounds.push_back(std::move(jrow));
            }
        }
        j["bounds"] = std::move(bounds);
        j["holds"] = all_hold;
        out << j.dump(2) << '\n';
    } else {
        out << "function: n=" << f.var_count() << " m=" << f.term_count()
            << " degree=" << deg << " width=" << profile.width << '\n';
        out << "per-variable widths:";
        for (int w : profile.per_variable) out << ' ' << w;
        out << '\n';
        out << "E[f^2] = " << s2.to_string() << '\n';
        for (const auto& row : moment_rows) {
            if (row.value)
                out << "moment r=" << row.r << ": E[f^" << 2 * row.r
                    << "] = " << row.value->to_string() << '\n';
            else
                out << "moment r=" << row.r << ": skipped (" << row.skipped << ")\n";
        }
        for (const auto& row : norm_rows) {
            if (row.value)
                out << "norm p=" << fmt(row.p) << ": " << fmt(*row.value) << '\n';
            else
                out << "norm p=" << fmt(row.p) << ": skipped (" << row.skipped << ")\n";
        }
        for (const Entry& entry : entries) {
            if (entry.report)
                print_report(out, entry.label, *entry.report);
            else
                out << "check " << entry.label << ": skipped (" << entry.skipped << ")\n";
        }
        out << "overall: " << (all_hold ? "all checks hold" : "VIOLATION FOUND") << '\n';
    }
    return all_hold ? 0 : 1;
}

// --- bound ---------------------------------------------------------------

struct BoundArgs {
    std::vector<double> classical;  // q p d
    std::vector<int> width42;       // rho m
    std::vector<int> width2r;       // r rho
    std::vector<double> qp;         // q p rho
    bool refined = false;
    int given = 0;
};

int run_bound(const BoundArgs& args, std::ostream& out) {
    if (!args.classical.empty()) {
        const double q = args.classical[0], p = args.classical[1];
        const double d_raw = args.classical[2];
        const int d = static_cast<int>(d_raw);
        if (d_raw != d || d < 0)
            throw Error(Errc::bad_args, "--classical degree must be an integer >= 0");
        out << "classical q=" << fmt(q) << " p=" << fmt(p) << " d=" << d
            << ": C = " << fmt(coeff_classical(q, p, d)) << '\n';
    } else if (!args.width42.empty()) {
        const int rho = args.width42[0], m = args.width42[1];
        const Width42Coeff c = coeff_width_42(rho, m);
        out << "width42 rho=" << rho << " m=" << m << ": C^4 = "
            << c.fourth_power.to_string() << " (~" << fmt(c.fourth_power.to_double())
            << ")  C = " << fmt(c.root) << '\n';
    } else if (!args.width2r.empty()) {
        const int r = args.width2r[0], rho = args.width2r[1];
        const Width2rCoeff c =
            args.refined ? coeff_width_2r_refined(r, rho) : coeff_width_2r(r, rho);
        out << "width2r" << (args.refined ? " refined" : "") << " r=" << r
            << " rho=" << rho << ": C^" << 2 * r << " = " << c.power.get_str()
            << "  C = " << fmt(c.root) << '\n';
        if (args.refined)
            out << "bell(" << r << ") = " << bell(r).get_str()
                << "  upper bound (0.792 r / ln(r+1))^r = " << fmt(bell_upper(r)) << '\n';
    } else {
        const double q = args.qp[0], p = args.qp[1];
        const double rho_raw = args.qp[2];
        const int rho = static_cast<int>(rho_raw);
        if (rho_raw != rho || rho < 1)
            throw Error(Errc::bad_args, "--qp rho must be an integer >= 1");
        const QpCoeff c = coeff_width_qp(q, p, rho);
        out << "qp q=" << fmt(q) << " p=" << fmt(p) << " rho=" << rho
            << ": r = " << c.r << "  C = " << fmt(c.value) << '\n';
    }
    return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string mode;
    long long trials = 100;
    int nmax = 8;
    int mmax = 16;
    std::uint64_t seed = 1;
    int r = 0;  // 0: the default set {1,2,3}
    double q = 4.0;
    double p = 2.0;
};

int run_verify(const VerifyArgs& args, const Limits& limits, std::ostream& out) {
    if (args.trials < 0) throw Error(Errc::bad_args, "--trials must be >= 0");
    if (args.nmax < 1 || args.nmax > 20)
        throw Error(Errc::bad_args, "--nmax outside 1..20");
    if (args.mmax < 1) throw Error(Errc::bad_args, "--mmax must be >= 1");
    if (args.r < 0 || args.r > 8) throw Error(Errc::bad_args, "--r outside 1..8");

    std::vector<int> r_values;
    if (args.mode == "theorem2") r_values = args.r ? std::vector{args.r} : std::vector{1, 2, 3};

    constexpr long long coefficient_range = 10;
    Draw shapes(args.seed);
    long long violations = 0;
    for (long long trial = 0; trial < args.trials; ++trial) {
        const int n = 1 + static_cast<int>(shapes.below(args.nmax));
        const std::uint64_t universe = std::uint64_t{1} << n;
        const std::uint64_t m_cap =
            std::min<std::uint64_t>(static_cast<std::uint64_t>(args.mmax), universe);
        const int m = 1 + static_cast<int>(shapes.below(m_cap));
        const FourierExpansion f = random_function(n, m, coefficient_range, shapes.raw());

        std::vector<BoundReport> reports;
        if (args.mode == "theorem1") {
            reports.push_back(check_theorem_42(f, limits));
        } else if (args.mode == "theorem2") {
            for (int r : r_values) {
                reports.push_back(check_theorem_2r(f, r, limits));
                reports.push_back(check_theorem_2r_refined(f, r, limits));
            }
        } else {
            reports.push_back(check_corollary(f, args.q, args.p, limits));
        }
        for (const BoundReport& report : reports) {
            if (report.holds) continue;
            ++violations;
            out << "violation at trial " << trial << " (" << bound_kind_name(report.kind)
                << ", n=" << n << " m=" << m << "):\n"
                << format_function(f);
            print_report(out, bound_kind_name(report.kind), report);
        }
    }

    out << "verify " << args.mode << ": trials=" << args.trials << " nmax=" << args.nmax
        << " mmax=" << args.mmax << " seed=" << args.seed;
    if (args.mode == "theorem2") {
        out << " r=";
        if (args.r)
            out << args.r;
        else
            out << "{1,2,3}";
    }
    if (args.mode == "corollary") out << " q=" << fmt(args.q) << " p=" << fmt(args.p);
    out << "\nviolations: " << violations << '\n';
    return violations == 0 ? 0 : 1;
}

// --- maxlin --------------------------------------------------------------

struct MaxlinArgs {
    std::string action;
    std::string file;
    bool as_json = false;
};

int run_maxlin(const MaxlinArgs& args, const Limits& limits, std::ostream& out) {
    const EquationSystem system = parse_maxlin(read_file(args.file));
    const int rho = system_width(system).width;

    if (args.action == "kernel") {
        const KernelResult result = kernelize(system);
        BigInt sum_c2 = 0;
        for (const Equation& eq : system.equations())
            sum_c2 += BigInt(static_cast<long>(eq.weight)) * static_cast<long>(eq.weight);
        BigInt requirement(static_cast<long>(system.k()));
        requirement *= static_cast<long>(system.k());
        requirement *= 16 * (2 * rho + 1);
        if (args.as_json) {
            json j;
            j["system"] = system_json(system);
            j["rho"] = rho;
            j["sum_c2"] = sum_c2.get_str();
            j["requirement"] = requirement.get_str();
            j["threshold"] = result.threshold;
            j["exact_test"] = result.exact_test;
            j["verdict"] = kernel_verdict_name(result.verdict);
            j["k_prime"] = result.k_prime;
            j["kernel"] = system_json(result.kernel);
            out << j.dump(2) << '\n';
        } else {
            out << "system: n=" << system.var_count() << " m=" << system.size()
                << " k=" << system.k() << " W=" << system.total_weight() << '\n';
            out << "rho = " << rho << '\n';
            out << "sum c^2 = " << sum_c2.get_str() << '\n';
            out << "requirement 16 k^2 (2 rho + 1) = " << requirement.get_str() << '\n';
            out << "threshold (1/2) sqrt(sum c^2 / (2 rho + 1)) = " << fmt(result.threshold)
                << '\n';
            out << "verdict: " << kernel_verdict_name(result.verdict)
                << " (k' = " << result.k_prime << ")\n";
            out << "kernel:\n" << format_maxlin(result.kernel);
        }
        return 0;
    }

    if (args.action == "solve") {
        const SolveResult result = solve_bruteforce(system, limits);
        const bool yes = result.max_q >= 2 * system.k();
        if (args.as_json) {
            json j;
            j["system"] = system_json(system);
            j["max_weight"] = result.max_weight;
            j["max_q"] = result.max_q;
            j["witness"] = result.witness;
            j["decide"] = yes;
            out << j.dump(2) << '\n';
        } else {
            out << "system: n=" << system.var_count() << " m=" << system.size()
                << " k=" << system.k() << " W=" << system.total_weight() << '\n';
            out << "max weight = " << result.max_weight << '\n';
            out << "max Q = " << result.max_q << '\n';
            out << "witness:";
            for (int v : result.witness) out << ' ' << v;
            out << '\n';
            out << "decide (max Q >= 2k): " << (yes ? "YES" : "NO") << '\n';
        }
        return 0;
    }

    // action == "check"
    const AlonWitness witness = alon_witness_check(system, limits);
    if (args.as_json) {
        json j;
        j["system"] = system_json(system);
        j["rho"] = rho;
        j["max_q"] = witness.max_q;
        j["bound"] = witness.rhs;
        j["holds"] = witness.holds;
        out << j.dump(2) << '\n';
    } else {
        out << "system: n=" << system.var_count() << " m=" << system.size()
            << " k=" << system.k() << " W=" << system.total_weight() << '\n';
        out << "max Q = " << witness.max_q << '\n';
        out << "bound (1/2) sqrt(E[Q^2] / (2 rho + 1)) = " << fmt(witness.rhs) << '\n';
        out << "holds: " << yes_no(witness.holds) << '\n';
    }
    return witness.holds ? 0 : 1;
}

// --- examples ------------------------------------------------------------

struct ExamplesArgs {
    std::string family;
    int n = 1;
    std::string out_file;
};

int run_examples(const ExamplesArgs& args, const Limits& limits, std::ostream& out) {
    FourierExpansion f;
    if (args.family == "affine")
        f = example_affine(args.n);
    else if (args.family == "full")
        f = example_full(args.n, limits);
    else
        f = example_linear(args.n);
    const std::string text =
        "# " + args.family + " family, n=" + std::to_string(args.n) + "\n" +
        format_function(f);
    if (args.out_file.empty()) {
        out << text;
    } else {
        std::ofstream file(args.out_file, std::ios::binary);
        if (!file) throw Error(Errc::bad_args, "cannot write '" + args.out_file + "'");
        file << text;
        out << "wrote " << args.out_file << '\n';
    }
    return 0;
}

// --- scan ----------------------------------------------------------------

struct ScanArgs {
    std::string family = "all";
    int nmax = 8;
    int rmax = 3;
};

int run_scan(const ScanArgs& args, const Limits& limits, std::ostream& out) {
    if (args.nmax < 1) throw Error(Errc::bad_args, "--nmax must be >= 1");
    if ((args.family == "full" || args.family == "all") &&
        args.nmax > limits.dense_exact_cap)
        throw Error(Errc::bad_args, "full family needs --nmax <= " +
                                        std::to_string(limits.dense_exact_cap) +
                                        " (dense cap)");
    std::vector<FamilyRange> families;
    if (args.family == "all") {
        families = {{"affine", args.nmax}, {"full", args.nmax}, {"linear", args.nmax}};
    } else {
        families = {{args.family, args.nmax}};
    }
    out << "family,n,r,rho,ratio,reference,implied_c\n";
    for (const ConjectureScanRow& row : conjecture_scan(families, args.rmax, limits)) {
        out << row.family << ',' << row.n << ',' << row.r << ',' << row.rho << ','
            << fmt(row.ratio) << ',' << fmt(row.reference) << ',' << fmt(row.implied_c)
            << '\n';
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Fourier analysis of pseudo-Boolean functions"};
    app.name("pbf");
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "report exact invariants and bound checks for a function file");
    analyze->add_option("file", analyze_args.file, "function file (.pbf)")->required();
    analyze->add_option("--moments", analyze_args.moments,
                        "comma-separated r values; reports E[f^2r]")
        ->delimiter(',');
    analyze->add_option("--norms", analyze_args.norms, "comma-separated p values (p >= 1)")
        ->delimiter(',');
    analyze->add_flag("--json", analyze_args.as_json, "machine-readable report");

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "coefficient calculators");
    CLI::Option* opt_classical =
        bound->add_option("--classical", bound_args.classical, "q p d")->expected(3);
    CLI::Option* opt_width42 =
        bound->add_option("--width42", bound_args.width42, "rho m")->expected(2);
    CLI::Option* opt_width2r =
        bound->add_option("--width2r", bound_args.width2r, "r rho")->expected(2);
    CLI::Option* opt_qp = bound->add_option("--qp", bound_args.qp, "q p rho")->expected(3);
    bound->add_flag("--refined", bound_args.refined,
                    "Bell-refined coefficient (with --width2r)");

    VerifyArgs verify_args;
    CLI::App* verify =
        app.add_subcommand("verify", "randomized checks of the width inequalities");
    verify->add_option("mode", verify_args.mode, "theorem1 | theorem2 | corollary")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "corollary"}));
    verify->add_option("--trials", verify_args.trials, "number of random functions");
    verify->add_option("--nmax", verify_args.nmax, "variables drawn from 1..nmax");
    verify->add_option("--mmax", verify_args.mmax, "terms drawn from 1..min(mmax,2^n)");
    CLI::Option* opt_seed = verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--r", verify_args.r, "theorem2: check only this r");
    verify->add_option("--q", verify_args.q, "corollary: larger exponent");
    verify->add_option("--p", verify_args.p, "corollary: smaller exponent");

    MaxlinArgs maxlin_args;
    CLI::App* maxlin = app.add_subcommand("maxlin", "equation-system tools");
    maxlin->add_option("action", maxlin_args.action, "kernel | solve | check")
        ->required()
        ->check(CLI::IsMember({"kernel", "solve", "check"}));
    maxlin->add_option("file", maxlin_args.file, "equation file (.mla)")->required();
    maxlin->add_flag("--json", maxlin_args.as_json, "machine-readable report");

    ExamplesArgs examples_args;
    CLI::App* examples = app.add_subcommand("examples", "emit a sharpness family");
    examples->add_option("family", examples_args.family, "affine | full | linear")
        ->required()
        ->check(CLI::IsMember({"affine", "full", "linear"}));
    examples->add_option("--n", examples_args.n, "number of variables")->required();
    examples->add_option("--out", examples_args.out_file, "write to a file instead of stdout");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "norm-growth ratios across families");
    scan->add_option("--family", scan_args.family, "affine | full | linear | all")
        ->check(CLI::IsMember({"affine", "full", "linear", "all"}));
    scan->add_option("--nmax", scan_args.nmax, "scan n = 1..nmax");
    scan->add_option("--rmax", scan_args.rmax, "scan r = 1..rmax");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        const Limits limits = env_limits();
        if (analyze->parsed()) return run_analyze(analyze_args, limits, out);
        if (bound->parsed()) {
            bound_args.given = (opt_classical->count() ? 1 : 0) +
                               (opt_width42->count() ? 1 : 0) +
                               (opt_width2r->count() ? 1 : 0) + (opt_qp->count() ? 1 : 0);
            if (bound_args.given != 1)
                throw Error(Errc::bad_args,
                            "bound: give exactly one of --classical, --width42, "
                            "--width2r, --qp");
            if (bound_args.refined && !opt_width2r->count())
                throw Error(Errc::bad_args, "--refined only applies to --width2r");
            return run_bound(bound_args, out);
        }
        if (verify->parsed()) {
            if (!opt_seed->count())
                if (const auto seed = env_int("PBF_SEED"))
                    verify_args.seed = static_cast<std::uint64_t>(*seed);
            return run_verify(verify_args, limits, out);
        }
        if (maxlin->parsed()) return run_maxlin(maxlin_args, limits, out);
        if (examples->parsed()) return run_examples(examples_args, limits, out);
        if (scan->parsed()) return run_scan(scan_args, limits, out);
    } catch (const Error& e) {
        err << "error";
        if (e.line() > 0) err << " at line " << e.line();
        err << ": " << e.what() << " [" << errc_name(e.code()) << "]\n";
        return 2;
    }
    return 2;
}

} // namespace pbf
