#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isc/closed_form.hpp"
#include "isc/cuts.hpp"
#include "isc/distance.hpp"
#include "isc/errors.hpp"
#include "isc/exact.hpp"
#include "isc/graph.hpp"
#include "isc/params.hpp"
#include "isc/theta.hpp"

namespace {

using isc::CutRecord;
using isc::ExactInt;
using isc::ExactRational;
using isc::ISCParams;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct MethodRun {
    std::string name;
    ExactInt wiener;
    double ms = 0.0;
};

struct ParamFlags {
    long long p = 0, q = 0, m = 0, n = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "base edge-length of the lower wedge")
            ->required();
        cmd->add_option("--q", q, "top edge-length of the upper wedge")
            ->required();
        cmd->add_option("--m", m, "band height in rows")->required();
        cmd->add_option("--n", n, "band length")->required();
    }
    ISCParams validate() const { return isc::validate_params(p, q, m, n); }
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw isc::Error("cannot open output file " + out_path);
    }
    file << content;
}

MethodRun run_method(const std::string& name, const ISCParams& params) {
    MethodRun run{name, ExactInt(0), 0.0};
    const double start = now_ms();
    if (name == "bfs") {
        run.wiener = isc::wiener_bfs(isc::build_isc(params)).wiener;
    } else if (name == "cuts") {
        run.wiener = isc::wiener_from_cuts(isc::geometric_cuts(isc::build_isc(params)));
    } else if (name == "tables") {
        run.wiener = isc::wiener_from_cuts(isc::table_cuts(params));
    } else if (name == "closed") {
        run.wiener = isc::wiener_closed(params);
    } else {
        throw isc::Error("unknown method " + name);
    }
    run.ms = now_ms() - start;
    return run;
}

// First record where the two cut lists differ, if any.
std::optional<size_t> first_cut_difference(const std::vector<CutRecord>& a,
                                           const std::vector<CutRecord>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (!(a[i] == b[i])) {
            return i;
        }
    }
    if (a.size() != b.size()) {
        return std::min(a.size(), b.size());
    }
    return std::nullopt;
}

std::string describe_record(const std::vector<CutRecord>& cuts, size_t index,
                            const char* label) {
    if (index >= cuts.size()) {
        return std::string(label) + ": <no record>";
    }
    const CutRecord& cut = cuts[index];
    std::ostringstream out;
    out << label << ": " << isc::to_string(cut.family) << " k=" << cut.k
        << " edges=" << cut.edge_count << " f=" << cut.f_small.get_str() << "|"
        << cut.f_comp.get_str();
    return out.str();
}

std::string format_report(const std::string& format, const ISCParams& params,
                          const ExactInt& order, const ExactInt& size,
                          const ExactInt& wiener, const ExactRational& mu,
                          int digits, const std::vector<MethodRun>& runs) {
    const int kind = static_cast<int>(isc::classify_case(params));
    if (format == "json") {
        ordered_json report;
        report["p"] = params.p;
        report["q"] = params.q;
        report["m"] = params.m;
        report["n"] = params.n;
        report["case"] = kind;
        report["N"] = order.get_str();
        report["E"] = size.get_str();
        report["W"] = wiener.get_str();
        report["mu_exact"] = isc::rational_string(mu);
        report["mu_decimal"] = isc::to_decimal(mu, digits);
        ordered_json methods;
        for (const MethodRun& run : runs) {
            methods[run.name] = {{"W", run.wiener.get_str()},
                                 {"time_ms", run.ms}};
        }
        report["methods"] = methods;
        return report.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "p,q,m,n,case,N,E,W,mu_exact,mu_decimal,methods\n";
        out << params.p << "," << params.q << "," << params.m << ","
            << params.n << "," << kind << "," << order.get_str() << ","
            << size.get_str() << "," << wiener.get_str() << ","
            << isc::rational_string(mu) << "," << isc::to_decimal(mu, digits)
            << ",";
        for (size_t i = 0; i < runs.size(); ++i) {
            out << (i ? ";" : "") << runs[i].name << "=" << runs[i].ms << "ms";
        }
        out << "\n";
        return out.str();
    }
    std::ostringstream out;
    out << "ISC(" << params.p << ", " << params.q << ", " << params.m << ", "
        << params.n << ")  case " << kind << "\n";
    out << "N = " << order.get_str() << "  E = " << size.get_str() << "\n";
    out << "W = " << wiener.get_str() << "\n";
    out << "mu = " << isc::rational_string(mu) << " = "
        << isc::to_decimal(mu, digits) << "\n";
    for (const MethodRun& run : runs) {
        out << "  " << run.name << ": W = " << run.wiener.get_str() << "  ("
            << run.ms << " ms)\n";
    }
    return out.str();
}

int run_compute(const ParamFlags& flags, const std::string& method,
                const std::string& format, int digits,
                const std::string& out_path, const std::string& dist_path) {
    const ISCParams params = flags.validate();
    std::vector<std::string> names;
    if (method == "all") {
        names = {"bfs", "cuts", "tables", "closed"};
    } else {
        names = {method};
    }
    if (!dist_path.empty() &&
        std::find(names.begin(), names.end(), "bfs") == names.end()) {
        throw isc::Error("--dist needs the bfs method (use --method bfs or all)");
    }
    std::vector<MethodRun> runs;
    runs.reserve(names.size());
    for (const std::string& name : names) {
        if (name == "bfs" && !dist_path.empty()) {
            MethodRun run{name, ExactInt(0), 0.0};
            const double start = now_ms();
            const isc::WienerBfsResult result =
                isc::wiener_bfs(isc::build_isc(params));
            run.ms = now_ms() - start;
            run.wiener = result.wiener;
            runs.push_back(run);
            write_output(dist_path, result.distribution.csv());
        } else {
            runs.push_back(run_method(name, params));
        }
    }
    for (const MethodRun& run : runs) {
        if (run.wiener != runs.front().wiener) {
            std::cerr << "verification mismatch between methods:\n";
            for (const MethodRun& r : runs) {
                std::cerr << "  " << r.name << ": W = " << r.wiener.get_str()
                          << "\n";
            }
            if (method == "all") {
                const auto geometric = isc::geometric_cuts(isc::build_isc(params));
                const auto tables = isc::table_cuts(params);
                if (auto index = first_cut_difference(geometric, tables)) {
                    std::cerr << describe_record(geometric, *index, "geometric")
                              << "\n"
                              << describe_record(tables, *index, "tables")
                              << "\n";
                }
            }
            return kExitMismatch;
        }
    }
    const ExactInt order = isc::vertex_count(params);
    const ExactRational mu = isc::mu_from_wiener(runs.front().wiener, order);
    write_output(out_path,
                 format_report(format, params, order, isc::edge_count(params),
                               runs.front().wiener, mu, digits, runs));
    return kExitOk;
}

int run_family(const std::vector<long long>& hex,
               const std::vector<long long>& trap,
               const std::vector<long long>& bitrap, const std::string& format,
               int digits, const std::string& out_path) {
    isc::Family family = isc::Hexagonal{1};
    if (!hex.empty()) {
        family = isc::Hexagonal{hex[0]};
    } else if (!trap.empty()) {
        family = isc::Trapezium{trap[0], trap[1]};
    } else {
        family = isc::Bitrapezium{bitrap[0], bitrap[1], bitrap[2]};
    }
    const ISCParams params = isc::special_family_params(family);

    MethodRun reduced{"family", ExactInt(0), 0.0};
    double start = now_ms();
    reduced.wiener = isc::wiener_family(family);
    reduced.ms = now_ms() - start;

    MethodRun closed{"closed", ExactInt(0), 0.0};
    start = now_ms();
    closed.wiener = isc::wiener_closed(params);
    closed.ms = now_ms() - start;

    const ExactRational mu = isc::mu_family(family);
    if (reduced.wiener != closed.wiener ||
        mu != isc::mu_closed(params)) {
        std::cerr << "verification mismatch: family form W = "
                  << reduced.wiener.get_str() << ", general form W = "
                  << closed.wiener.get_str() << "\n";
        return kExitMismatch;
    }
    write_output(out_path,
                 format_report(format, params, isc::vertex_count(params),
                               isc::edge_count(params), reduced.wiener, mu,
                               digits, {reduced, closed}));
    return kExitOk;
}

int run_cuts(const ParamFlags& flags, const std::string& source,
             const std::string& out_path) {
    const ISCParams params = flags.validate();
    const std::vector<CutRecord> records =
        source == "tables" ? isc::table_cuts(params)
                           : isc::geometric_cuts(isc::build_isc(params));
    write_output(out_path, isc::cuts_csv(records));
    return kExitOk;
}

int run_verify(long long max_n, long long max_m) {
    long long tuples = 0;
    long long by_case[3] = {0, 0, 0};
    for (long long n = 1; n <= max_n; ++n) {
        for (long long m = 1; m <= max_m; ++m) {
            for (long long p = 2 - n % 2; p <= n; p += 2) {
                for (long long q = p; q <= n; q += 2) {
                    const ISCParams params = isc::validate_params(p, q, m, n);
                    const isc::SquareCellGraph graph = isc::build_isc(params);
                    const ExactInt w_bfs = isc::wiener_bfs(graph).wiener;
                    const auto geometric = isc::geometric_cuts(graph);
                    const auto tables = isc::table_cuts(params);
                    const ExactInt w_geometric = isc::wiener_from_cuts(geometric);
                    const ExactInt w_tables = isc::wiener_from_cuts(tables);
                    const ExactInt w_closed = isc::wiener_closed(params);
                    const bool wiener_ok = w_bfs == w_geometric &&
                                           w_bfs == w_tables &&
                                           w_bfs == w_closed;
                    const bool mu_ok =
                        isc::mu_closed(params) ==
                        isc::mu_from_wiener(w_bfs, isc::vertex_count(params));
                    const auto difference =
                        first_cut_difference(geometric, tables);
                    if (!wiener_ok || !mu_ok || difference) {
                        std::cerr << "mismatch at ISC(" << p << "," << q << ","
                                  << m << "," << n << "): W bfs/geometric/"
                                  << "tables/closed = " << w_bfs.get_str()
                                  << "/" << w_geometric.get_str() << "/"
                                  << w_tables.get_str() << "/"
                                  << w_closed.get_str() << "\n";
                        if (difference) {
                            std::cerr
                                << describe_record(geometric, *difference,
                                                   "geometric")
                                << "\n"
                                << describe_record(tables, *difference,
                                                   "tables")
                                << "\n";
                        }
                        return kExitMismatch;
                    }
                    tuples += 1;
                    by_case[static_cast<int>(isc::classify_case(params)) - 1] += 1;
                }
            }
        }
    }
    std::cout << "verified " << tuples << " tuples (case 1: " << by_case[0]
              << ", case 2: " << by_case[1] << ", case 3: " << by_case[2]
              << "); all methods agree\n";
    return kExitOk;
}

int run_export(const ParamFlags& flags, const std::string& format,
               const std::string& out_path) {
    const ISCParams params = flags.validate();
    const isc::SquareCellGraph graph = isc::build_isc(params);
    write_output(out_path,
                 format == "dot" ? isc::to_dot(graph) : isc::to_adjlist(graph));
    return kExitOk;
}

int run_bench(const ParamFlags& flags, long long repeat,
              std::vector<std::string> methods) {
    const ISCParams params = flags.validate();
    if (methods.empty()) {
        methods = {"bfs", "cuts", "tables", "closed"};
    }
    std::cout << "method,repeat,min_ms,median_ms,mean_ms,W\n";
    for (const std::string& name : methods) {
        std::vector<double> times;
        times.reserve(static_cast<size_t>(repeat));
        ExactInt wiener = 0;
        for (long long i = 0; i < repeat; ++i) {
            MethodRun run = run_method(name, params);
            times.push_back(run.ms);
            wiener = run.wiener;
        }
        std::sort(times.begin(), times.end());
        double mean = 0;
        for (double t : times) {
            mean += t;
        }
        mean /= static_cast<double>(times.size());
        std::cout << name << "," << repeat << "," << times.front() << ","
                  << times[times.size() / 2] << "," << mean << ","
                  << wiener.get_str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Wiener index and average distance of irregular square-cell "
        "configuration graphs ISC(p,q,m,n), by four cross-checking methods"};
    app.require_subcommand(1);

    // compute
    auto* compute_cmd =
        app.add_subcommand("compute", "compute W and mu for one tuple");
    ParamFlags compute_flags;
    compute_flags.attach(compute_cmd);
    std::string method = "all";
    compute_cmd->add_option("--method", method, "bfs|cuts|tables|closed|all")
        ->check(CLI::IsMember({"bfs", "cuts", "tables", "closed", "all"}));
    std::string compute_format = "json";
    compute_cmd->add_option("--format", compute_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    int digits = 12;
    compute_cmd->add_option("--digits", digits, "significant digits for mu")
        ->check(CLI::PositiveNumber);
    std::string compute_out;
    compute_cmd->add_option("--out", compute_out, "output path (default stdout)");
    std::string dist_path;
    compute_cmd->add_option(
        "--dist", dist_path,
        "also write the BFS distance distribution CSV to this path");

    // family
    auto* family_cmd = app.add_subcommand(
        "family", "compute a special family via its own reduced form");
    std::vector<long long> hex, trap, bitrap;
    auto* hex_opt =
        family_cmd->add_option("--hex", hex, "hexagonal H(p)")->expected(1);
    auto* trap_opt =
        family_cmd->add_option("--trap", trap, "trapezium T(n,p)")->expected(2);
    auto* bitrap_opt =
        family_cmd->add_option("--bitrap", bitrap, "bitrapezium BT(n,p,q)")
            ->expected(3);
    hex_opt->excludes(trap_opt)->excludes(bitrap_opt);
    trap_opt->excludes(bitrap_opt);
    std::string family_format = "json";
    family_cmd->add_option("--format", family_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    int family_digits = 12;
    family_cmd->add_option("--digits", family_digits,
                           "significant digits for mu")
        ->check(CLI::PositiveNumber);
    std::string family_out;
    family_cmd->add_option("--out", family_out, "output path (default stdout)");

    // cuts
    auto* cuts_cmd =
        app.add_subcommand("cuts", "dump the cut records of one tuple as CSV");
    ParamFlags cuts_flags;
    cuts_flags.attach(cuts_cmd);
    std::string source = "geometric";
    cuts_cmd->add_option("--source", source, "geometric|tables")
        ->check(CLI::IsMember({"geometric", "tables"}));
    std::string cuts_out;
    cuts_cmd->add_option("--out", cuts_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep all valid tuples and cross-check every method");
    long long max_n = 14, max_m = 6;
    verify_cmd->add_option("--max-n", max_n, "largest n (default 14)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-m", max_m, "largest m (default 6)")
        ->check(CLI::PositiveNumber);

    // export
    auto* export_cmd =
        app.add_subcommand("export", "write the graph as adjlist or DOT");
    ParamFlags export_flags;
    export_flags.attach(export_cmd);
    std::string export_format;
    export_cmd->add_option("--format", export_format, "adjlist|dot")
        ->required()
        ->check(CLI::IsMember({"adjlist", "dot"}));
    std::string export_out;
    export_cmd->add_option("--out", export_out, "output path (default stdout)");

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "time the methods on one tuple");
    ParamFlags bench_flags;
    bench_flags.attach(bench_cmd);
    long long repeat = 5;
    bench_cmd->add_option("--repeat", repeat, "repetitions per method")
        ->check(CLI::PositiveNumber);
    std::vector<std::string> bench_methods;
    bench_cmd
        ->add_option("--method", bench_methods,
                     "subset of bfs|cuts|tables|closed (default all)")
        ->check(CLI::IsMember({"bfs", "cuts", "tables", "closed"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*compute_cmd) {
            return run_compute(compute_flags, method, compute_format, digits,
                               compute_out, dist_path);
        }
        if (*family_cmd) {
            if (hex.empty() && trap.empty() && bitrap.empty()) {
                std::cerr << "error: one of --hex, --trap, --bitrap is required\n";
                return kExitInvalid;
            }
            return run_family(hex, trap, bitrap, family_format, family_digits,
                              family_out);
        }
        if (*cuts_cmd) {
            return run_cuts(cuts_flags, source, cuts_out);
        }
        if (*verify_cmd) {
            return run_verify(max_n, max_m);
        }
        if (*export_cmd) {
            return run_export(export_flags, export_format, export_out);
        }
        if (*bench_cmd) {
            return run_bench(bench_flags, repeat, bench_methods);
        }
    } catch (const isc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
