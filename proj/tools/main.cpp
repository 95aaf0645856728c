// Command-line surface for the semigroup prime census and the verification
// battery. Exit codes: 0 = success and every check passed, 1 = a check
// failed or a scan found window violations, 2 = usage/validation error,
// 3 = a computation exceeded the sieve ceiling.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "frobprimes/census.hpp"
#include "frobprimes/report.hpp"
#include "frobprimes/scanner.hpp"
#include "frobprimes/semigroup.hpp"
#include "frobprimes/util.hpp"
#include "frobprimes/verifier.hpp"

using namespace frobprimes;

namespace {

constexpr std::uint64_t kCeilingHardCap = 10'000'000'000ull;

struct CliConfig {
    std::string format = "text"; // text | json | csv
    std::string out_path;
    int workers = 0;
    std::uint64_t sieve_ceiling = 1'000'000'000ull;
    bool unsafe_ceiling = false;
    std::uint64_t seed = 0;
    std::string cache_path;

    VerifyOptions verify_options() const
    {
        VerifyOptions opts;
        opts.sieve.ceiling = sieve_ceiling;
        opts.workers = workers;
        if (!cache_path.empty())
            opts.cache_path = cache_path;
        return opts;
    }

    ScanOptions scan_options() const
    {
        ScanOptions opts;
        opts.sieve.ceiling = sieve_ceiling;
        opts.workers = workers;
        return opts;
    }

    SieveConfig sieve() const
    {
        SieveConfig cfg;
        cfg.ceiling = sieve_ceiling;
        return cfg;
    }
};

// Where normal output goes: --out redirects the machine-readable stream.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::trunc);
            if (!file_)
                raise(errc::io_error, "cannot open output file " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

int exit_code_for(const error& e)
{
    switch (e.code()) {
    case errc::limit_too_large:
        return 3;
    default:
        return 2;
    }
}

void print_reports(const std::vector<CheckReport>& reports,
                   const CliConfig& cfg, OutputTarget& out)
{
    if (cfg.format == "json") {
        for (const CheckReport& r : reports)
            out.stream() << to_json(r) << '\n';
    } else if (cfg.format == "csv") {
        out.stream() << kReportCsvHeader << '\n';
        for (const CheckReport& r : reports)
            out.stream() << to_csv_row(r) << '\n';
    } else {
        for (const CheckReport& r : reports)
            out.stream() << to_text_line(r) << '\n';
    }
}

int reports_exit_code(const std::vector<CheckReport>& reports)
{
    for (const CheckReport& r : reports)
        if (!r.pass)
            return 1;
    return 0;
}

std::vector<CoprimePair> load_pairs_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        raise(errc::io_error, "cannot open pair file " + path);
    std::vector<CoprimePair> pairs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "a,b")
            continue;
        unsigned long long a = 0, b = 0;
        if (std::sscanf(line.c_str(), "%llu,%llu", &a, &b) != 2)
            raise(errc::bad_argument, "bad pair row: " + line);
        pairs.push_back(make_pair(a, b));
    }
    return pairs;
}

std::string count_result_json(const CountResult& r)
{
    return "{\"a\":" + std::to_string(r.a) + ",\"b\":" + std::to_string(r.b) +
           ",\"s\":" + std::to_string(r.s) +
           ",\"pi_ab\":" + std::to_string(r.pi_ab) +
           ",\"pi_s\":" + std::to_string(r.pi_s) +
           ",\"ratio\":" + format_real(r.ratio) + '}';
}

int run_scan(const CliConfig& cfg, std::uint64_t a_min, std::uint64_t a_max,
             std::uint64_t b_max)
{
    OutputTarget out(cfg.out_path);
    ScanSummary summary;

    if (cfg.format == "json") {
        out.stream() << "{\"rows\":[";
        bool first = true;
        summary = scan(a_min, a_max, b_max,
                       [&](const ScanRow& r) {
                           if (!first)
                               out.stream() << ',';
                           first = false;
                           out.stream() << to_json(r);
                       },
                       cfg.scan_options());
        out.stream() << "],\"summary\":" << to_json(summary) << "}\n";
    } else if (cfg.format == "csv" || out.to_file()) {
        out.stream() << kScanCsvHeader << '\n';
        summary = scan(a_min, a_max, b_max,
                       [&](const ScanRow& r) { out.stream() << to_csv_row(r) << '\n'; },
                       cfg.scan_options());
        std::ostream& side = out.to_file() ? std::cout : std::cerr;
        side << "scanned " << summary.pairs_scanned << " pairs, min_ratio="
             << format_real(summary.min_ratio) << ", max_ratio="
             << format_real(summary.max_ratio) << ", violations="
             << summary.violations.size() << '\n';
    } else {
        // plain text with no output file: rows are suppressed, summary only
        summary = scan(a_min, a_max, b_max, nullptr, cfg.scan_options());
        std::ostream& os = out.stream();
        os << "rectangle: a in [" << a_min << ", " << a_max << "], b <= "
           << b_max << '\n';
        os << "pairs_scanned: " << summary.pairs_scanned << '\n';
        os << "min_ratio: " << format_real(summary.min_ratio) << " at";
        for (auto [a, b] : summary.min_witnesses)
            os << " (" << a << "," << b << ")";
        os << '\n';
        os << "max_ratio: " << format_real(summary.max_ratio) << " at";
        for (auto [a, b] : summary.max_witnesses)
            os << " (" << a << "," << b << ")";
        os << '\n';
        os << "violations: " << summary.violations.size();
        for (auto [a, b] : summary.violations)
            os << " (" << a << "," << b << ")";
        os << '\n';
    }
    return summary.violations.empty() ? 0 : 1;
}

int run_trend(const CliConfig& cfg, std::uint64_t a,
              const std::vector<std::uint64_t>& b_values)
{
    OutputTarget out(cfg.out_path);
    auto rows = trend(a, b_values, cfg.scan_options());
    if (cfg.format == "json") {
        out.stream() << '[';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0)
                out.stream() << ',';
            out.stream() << "{\"b\":" << rows[i].b
                         << ",\"ratio\":" << format_real(rows[i].ratio)
                         << ",\"predicted\":" << format_real(rows[i].predicted)
                         << '}';
        }
        out.stream() << "]\n";
    } else {
        out.stream() << "b,ratio,predicted\n";
        for (const TrendRow& r : rows)
            out.stream() << r.b << ',' << format_real(r.ratio) << ','
                         << format_real(r.predicted) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"prime census and proof-constant verification for numerical "
                 "semigroups with two generators"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "write machine-readable output to FILE");
    app.add_option("--workers", cfg.workers,
                   "worker threads for parallel sections (0 = auto)")
        ->capture_default_str();
    app.add_option("--sieve-ceiling", cfg.sieve_ceiling,
                   "refuse prime computations beyond this bound")
        ->capture_default_str();
    app.add_flag("--unsafe-ceiling", cfg.unsafe_ceiling,
                 "allow --sieve-ceiling above 1e10");
    app.add_option("--seed", cfg.seed, "seed for sampled checks")
        ->capture_default_str();
    app.add_option("--cache", cfg.cache_path,
                   "checkpoint cache CSV for long pi evaluations");

    // ---- plain queries ----------------------------------------------------
    std::uint64_t arg_a = 0, arg_b = 0;
    std::int64_t arg_n = 0;

    auto* cmd_frobenius = app.add_subcommand("frobenius", "print a*b-a-b");
    cmd_frobenius->add_option("a", arg_a)->required();
    cmd_frobenius->add_option("b", arg_b)->required();

    auto* cmd_member = app.add_subcommand("member", "is n representable as ax+by?");
    cmd_member->add_option("a", arg_a)->required();
    cmd_member->add_option("b", arg_b)->required();
    cmd_member->add_option("n", arg_n)->required();

    bool count_oracle_flag = false, count_json_flag = false;
    auto* cmd_count = app.add_subcommand(
        "count", "primes <= S inside the semigroup, with pi(S) and the ratio");
    cmd_count->add_option("a", arg_a)->required();
    cmd_count->add_option("b", arg_b)->required();
    cmd_count->add_flag("--oracle", count_oracle_flag,
                        "recompute via the brute-force oracle (S <= 1e7)");
    cmd_count->add_flag("--json", count_json_flag, "shorthand for --format json");

    auto* cmd_ratio = app.add_subcommand("ratio", "print pi(a,b)/pi(S)");
    cmd_ratio->add_option("a", arg_a)->required();
    cmd_ratio->add_option("b", arg_b)->required();

    // ---- verify -----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "machine-check the proof "
                                                    "constants and bounds");
    cmd_verify->require_subcommand(1);

    std::vector<int> u_values{2, 3, 4};
    auto* v_lemma3 = cmd_verify->add_subcommand(
        "lemma3", "prime-window bounds on the small range and the 10^u grid");
    v_lemma3->add_option("--u", u_values, "grid exponents (subset of 2..6)")
        ->delimiter(',')
        ->capture_default_str();

    std::uint64_t trials_lemma6 = 10000, trials_lemma8 = 1000000;
    std::uint64_t trials_lemma9 = 200, trials_bt = 1000, trials_mv = 500;
    auto* v_lemma6 = cmd_verify->add_subcommand(
        "lemma6", "congruence-count error bound (exact identity)");
    v_lemma6->add_option("--trials", trials_lemma6)->capture_default_str();
    auto* v_lemma8 = cmd_verify->add_subcommand(
        "lemma8", "primorial extremality of 2^omega/phi");
    v_lemma8
        ->add_option("--trials", trials_lemma8,
                     "exhaustive upper limit for n (this check is not sampled)")
        ->capture_default_str();
    auto* v_lemma9 = cmd_verify->add_subcommand(
        "lemma9", "gap primes in the top window vs explicit bounds");
    v_lemma9->add_option("--trials", trials_lemma9)->capture_default_str();
    auto* v_bt = cmd_verify->add_subcommand("brun-titchmarsh",
                                            "progression increment bound");
    v_bt->add_option("--trials", trials_bt)->capture_default_str();
    auto* v_mv = cmd_verify->add_subcommand(
        "mv-small", "two-sided progression counts for small moduli");
    v_mv->add_option("--trials", trials_mv)->capture_default_str();

    std::vector<std::uint64_t> pi_li_points{1474279333ull, 2'000'000'000ull};
    auto* v_pili = cmd_verify->add_subcommand(
        "pi-li", "pi vs logarithmic integral at large points");
    v_pili->add_option("--points", pi_li_points, "evaluation points")
        ->delimiter(',')
        ->capture_default_str();

    int case_number = 0;
    auto* v_case = cmd_verify->add_subcommand("case", "one counting endpoint");
    v_case->add_option("n", case_number, "case number")->required()
        ->check(CLI::Range(1, 6));
    auto* v_cases = cmd_verify->add_subcommand("cases", "all six endpoints");

    std::uint64_t t2_sample = 500, t2_s_max = 10'000'000ull;
    std::string t2_pairs_file;
    auto* v_t2 = cmd_verify->add_subcommand("theorem2",
                                            "count > 0.005 S/log S per pair");
    v_t2->add_option("--sample", t2_sample, "number of seeded random pairs")
        ->capture_default_str();
    v_t2->add_option("--s-max", t2_s_max, "Frobenius bound for sampled pairs")
        ->capture_default_str();
    v_t2->add_option("--pairs", t2_pairs_file, "CSV file of a,b rows");

    bool long_mode = false;
    auto* v_all = cmd_verify->add_subcommand("all", "the whole battery");
    v_all->add_flag("--long", long_mode,
                    "add the 10^10 grid rows and the pi-li check");

    // ---- scan / trend -----------------------------------------------------
    std::uint64_t scan_a_min = 3, scan_a_max = 100, scan_b_max = 2000;
    auto* cmd_scan = app.add_subcommand("scan", "sweep a rectangle of pairs");
    cmd_scan->add_option("--a-min", scan_a_min)->capture_default_str();
    cmd_scan->add_option("--a-max", scan_a_max)->capture_default_str();
    cmd_scan->add_option("--b-max", scan_b_max)->capture_default_str();

    std::uint64_t trend_a = 3;
    std::vector<std::uint64_t> trend_bs;
    auto* cmd_trend = app.add_subcommand("trend", "ratios against the limit "
                                                  "constant for fixed a");
    cmd_trend->add_option("--a", trend_a)->capture_default_str();
    cmd_trend->add_option("--b-list", trend_bs, "comma-separated b values")
        ->delimiter(',')
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    if (cfg.sieve_ceiling > kCeilingHardCap && !cfg.unsafe_ceiling) {
        std::cerr << "--sieve-ceiling above 1e10 requires --unsafe-ceiling\n";
        return 2;
    }
    if (count_json_flag)
        cfg.format = "json";

    try {
        if (*cmd_frobenius) {
            std::cout << frobenius(make_pair(arg_a, arg_b)) << '\n';
            return 0;
        }
        if (*cmd_member) {
            SemigroupView view(make_pair(arg_a, arg_b));
            std::cout << (view.contains(arg_n) ? "true" : "false") << '\n';
            return 0;
        }
        if (*cmd_count) {
            CoprimePair pair = make_pair(arg_a, arg_b);
            CountResult r = ratio_result(pair, cfg.sieve());
            if (count_oracle_flag) {
                r.pi_ab = count_oracle(pair);
                r.ratio = static_cast<double>(r.pi_ab) /
                          static_cast<double>(r.pi_s);
            }
            OutputTarget out(cfg.out_path);
            if (cfg.format == "json")
                out.stream() << count_result_json(r) << '\n';
            else
                out.stream() << "a=" << r.a << " b=" << r.b << " s=" << r.s
                             << " pi_ab=" << r.pi_ab << " pi_s=" << r.pi_s
                             << " ratio=" << format_real(r.ratio) << '\n';
            return 0;
        }
        if (*cmd_ratio) {
            CountResult r = ratio_result(make_pair(arg_a, arg_b), cfg.sieve());
            std::cout << format_real(r.ratio) << '\n';
            return 0;
        }
        if (*cmd_scan)
            return run_scan(cfg, scan_a_min, scan_a_max, scan_b_max);
        if (*cmd_trend)
            return run_trend(cfg, trend_a, trend_bs);

        if (*cmd_verify) {
            VerifyOptions opts = cfg.verify_options();
            std::vector<CheckReport> reports;

            if (*v_lemma3) {
                reports.push_back(verify_lemma3_small(0.121243, opts));
                reports.push_back(verify_lemma3_grid(u_values, opts));
            } else if (*v_lemma6) {
                reports.push_back(verify_lemma6(trials_lemma6, cfg.seed, opts));
            } else if (*v_lemma8) {
                reports.push_back(verify_lemma8(trials_lemma8, opts));
            } else if (*v_lemma9) {
                auto pairs = sample_coprime_pairs(trials_lemma9, cfg.seed, 10,
                                                  10'000'000ull);
                reports.push_back(verify_lemma9(pairs, opts));
            } else if (*v_bt) {
                reports.push_back(verify_brun_titchmarsh(trials_bt, cfg.seed, opts));
            } else if (*v_mv) {
                reports.push_back(verify_mv_small_moduli(trials_mv, cfg.seed, opts));
            } else if (*v_pili) {
                std::sort(pi_li_points.begin(), pi_li_points.end());
                if (opts.sieve.ceiling < pi_li_points.back())
                    opts.sieve.ceiling = pi_li_points.back();
                reports.push_back(verify_pi_li(pi_li_points, opts));
            } else if (*v_case) {
                switch (case_number) {
                case 1: reports.push_back(verify_case1(opts)); break;
                case 2: reports.push_back(verify_case2(opts)); break;
                case 3: reports.push_back(verify_case3(opts)); break;
                case 4: reports.push_back(verify_case4(opts)); break;
                case 5: reports.push_back(verify_case5(opts)); break;
                default: reports.push_back(verify_case6(opts)); break;
                }
            } else if (*v_cases) {
                reports.push_back(verify_case1(opts));
                reports.push_back(verify_case2(opts));
                reports.push_back(verify_case3(opts));
                reports.push_back(verify_case4(opts));
                reports.push_back(verify_case5(opts));
                reports.push_back(verify_case6(opts));
            } else if (*v_t2) {
                std::vector<CoprimePair> pairs =
                    t2_pairs_file.empty()
                        ? sample_coprime_pairs(t2_sample, cfg.seed, 3, t2_s_max)
                        : load_pairs_csv(t2_pairs_file);
                reports.push_back(verify_theorem2(pairs, opts));
            } else if (*v_all) {
                reports.push_back(verify_lemma3_small(0.121243, opts));
                std::vector<int> us{2, 3, 4};
                reports.push_back(verify_lemma3_grid(us, opts));
                reports.push_back(verify_lemma6(10000, cfg.seed, opts));
                reports.push_back(verify_lemma8(1000000, opts));
                reports.push_back(verify_lemma9(
                    sample_coprime_pairs(200, cfg.seed, 10, 10'000'000ull), opts));
                reports.push_back(verify_brun_titchmarsh(1000, cfg.seed, opts));
                reports.push_back(verify_mv_small_moduli(500, cfg.seed, opts));
                reports.push_back(verify_case1(opts));
                reports.push_back(verify_case2(opts));
                reports.push_back(verify_case3(opts));
                reports.push_back(verify_case4(opts));
                reports.push_back(verify_case5(opts));
                reports.push_back(verify_case6(opts));
                reports.push_back(verify_theorem2(
                    sample_coprime_pairs(500, cfg.seed, 3, 10'000'000ull), opts));
                if (long_mode) {
                    VerifyOptions long_opts = opts;
                    if (long_opts.sieve.ceiling < kCeilingHardCap)
                        long_opts.sieve.ceiling = kCeilingHardCap;
                    std::vector<int> grid_long{5, 6};
                    reports.push_back(verify_lemma3_grid(grid_long, long_opts));
                    std::vector<std::uint64_t> points{1474279333ull,
                                                      2'000'000'000ull};
                    reports.push_back(verify_pi_li(points, long_opts));
                }
            }

            OutputTarget out(cfg.out_path);
            print_reports(reports, cfg, out);
            return reports_exit_code(reports);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 2;
}
