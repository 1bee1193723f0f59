#include "CLI11.hpp"
#include "json.hpp"

#include "ppm/csp.hpp"
#include "ppm/error.hpp"
#include "ppm/evenodd.hpp"
#include "ppm/families.hpp"
#include "ppm/hardness.hpp"
#include "ppm/oracle.hpp"
#include "ppm/td_solver.hpp"
#include "ppm/treewidth.hpp"
#include "ppm/verify.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace ppm;

namespace {

enum Exit { contained = 0, usage = 1, limit = 2, absent = 3, disagreement = 4 };

// Raised for file-level problems; carries the path for the message.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename Parse>
auto parse_file(const std::string &path, Parse &&parse) {
    const std::string content = read_file(path);
    try {
        return parse(content);
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

Permutation load_permutation(const std::string &path) {
    return parse_file(path, [](const std::string &s) { return parse_permutation(s); });
}

std::int64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count();
}

void emit(const json &report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    for (const auto &[key, value] : report.items()) {
        if (value.is_object()) {
            for (const auto &[sub, v] : value.items())
                std::cout << key << '.' << sub << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        } else {
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
}

void write_td(const std::string &path, const TreeDecomposition &td) {
    std::ofstream out(path);
    if (!out)
        throw InputError(path + ": cannot write");
    write_decomposition(out, td);
}

const std::vector<std::string> algorithms{"auto", "brute", "evenodd", "treedp", "strips"};

std::string resolve_algo(const std::string &algo, int n, int k) {
    if (algo != "auto")
        return algo;
    if (n <= 10)
        return "brute";
    if (2 * k >= n)
        return "evenodd";
    return "treedp";
}

struct Outcome {
    bool contains = false;
    MatchCount count = 0;
    json stats = json::object();
};

Outcome run_algo(const std::string &algo, const Permutation &text, const Permutation &pattern, bool counting,
                 std::optional<int> strips) {
    Outcome out;
    if (algo == "brute") {
        if (counting)
            out.count = brute_count(text, pattern);
        else
            out.contains = brute_contains(text, pattern);
    } else if (algo == "evenodd") {
        EvenOddStats st;
        if (counting)
            out.count = evenodd_count(text, pattern, {}, &st);
        else
            out.contains = evenodd_contains(text, pattern, {}, &st);
        out.stats["g0_tried"] = st.yielded;
        out.stats["subsequences"] = st.subsequences;
    } else {
        TdStats st;
        if (algo == "treedp")
            counting ? void(out.count = treedp_count(text, pattern, &st))
                     : void(out.contains = treedp_contains(text, pattern, &st));
        else
            counting ? void(out.count = count_strips(text, pattern, strips, &st))
                     : void(out.contains = solve_strips(text, pattern, strips, &st));
        out.stats["width"] = st.width;
        out.stats["bags"] = st.bags;
        if (algo == "strips")
            out.stats["guesses"] = st.guesses;
    }
    if (counting)
        out.contains = out.count > 0;
    return out;
}

struct SolveOptions {
    std::string pattern, text, instance, algo = "auto", dump_td;
    bool json = false, colorful = false;
    int max_n = 0, max_k = 0;
    std::optional<int> strips;
};

void check_limits(const SolveOptions &o, int n, int k) {
    if (o.max_n > 0 && n > o.max_n)
        throw LimitExceeded("text length " + std::to_string(n) + " exceeds --max-n " + std::to_string(o.max_n));
    if (o.max_k > 0 && k > o.max_k)
        throw LimitExceeded("pattern length " + std::to_string(k) + " exceeds --max-k " + std::to_string(o.max_k));
}

int cmd_solve(const SolveOptions &o, bool counting) {
    json report;
    const auto start = std::chrono::steady_clock::now();
    if (counting && o.colorful) {
        const auto inst = parse_file(o.instance, [](const std::string &s) { return parse_pppm_instance(s); });
        check_limits(o, inst.text.size(), inst.pattern.size());
        const std::string algo = o.algo;
        const MatchCount c = count_colorful(inst, [&](const Permutation &t, const Permutation &p) {
            return run_algo(resolve_algo(algo, t.size(), p.size()), t, p, true, o.strips).count;
        });
        report["count"] = to_decimal(c);
        report["algorithm"] = algo;
        report["colorful"] = true;
        report["elapsed_ns"] = elapsed_ns(start);
        emit(report, o.json);
        return c > 0 ? contained : absent;
    }

    const Permutation pattern = load_permutation(o.pattern);
    const Permutation text = load_permutation(o.text);
    check_limits(o, text.size(), pattern.size());
    if (!o.dump_td.empty())
        write_td(o.dump_td, min_fill_decomposition(build_csp(text, pattern).constraint_graph()));
    const std::string algo = resolve_algo(o.algo, text.size(), pattern.size());
    const Outcome out = run_algo(algo, text, pattern, counting, o.strips);
    report["contains"] = out.contains;
    if (counting)
        report["count"] = to_decimal(out.count);
    report["algorithm"] = algo;
    report["elapsed_ns"] = elapsed_ns(start);
    report["stats"] = out.stats;
    emit(report, o.json);
    return out.contains ? contained : absent;
}

json certificate_report(const Graph &host, const MinorCertificate &cert) {
    json j;
    j["branch_sets"] = cert.branch_sets.size();
    j["required_adjacencies"] = cert.required.size();
    j["valid"] = verify_minor_certificate(host, cert);
    return j;
}

int cmd_gen_grid(int k, bool as_json) {
    const GridWitness g = gen_grid_two_track(k);
    if (!as_json) {
        std::cout << g.permutation << '\n';
        return 0;
    }
    json report;
    report["permutation"] = g.permutation.to_string();
    report["length"] = g.permutation.size();
    report["lds"] = lis_lds(g.permutation).second;
    report["certificate"] = certificate_report(IncidenceGraph(g.permutation).graph(), g.certificate);
    emit(report, true);
    return 0;
}

int cmd_gen_three_track(const std::string &perm_path, bool as_json) {
    const ThreeTrackWitness w = gen_three_track(load_permutation(perm_path));
    if (!as_json) {
        std::cout << w.host << '\n';
        return 0;
    }
    json report;
    report["host"] = w.host.to_string();
    report["length"] = w.host.size();
    report["m"] = w.splits.m();
    report["n"] = w.splits.n;
    json splits = json::array();
    for (std::size_t i = 0; i < w.splits.splits.size(); ++i)
        splits.push_back({{"sigma", w.splits.splits[i].to_string()}, {"p", w.splits.split_points[i]}});
    report["splits"] = splits;
    report["lds"] = lis_lds(w.host).second;
    report["certificate"] = certificate_report(IncidenceGraph(w.host).graph(), w.certificate);
    emit(report, true);
    return 0;
}

int cmd_gen_psi(const std::string &g_path, const std::string &h_path, const std::string &classes) {
    const auto sizes = parse_class_sizes(classes);
    int n = 0;
    for (int s : sizes)
        n += s;
    const Graph g = parse_file(g_path, [n](const std::string &s) { return parse_edge_list(s, n); });
    const Graph h =
        parse_file(h_path, [&](const std::string &s) { return parse_edge_list(s, static_cast<int>(sizes.size())); });
    const PppmInstance inst = psi_to_pppm(remove_intra_class_edges(PsiInstance{g, h, sizes}));
    write_pppm_instance(std::cout, inst);
    return 0;
}

int cmd_analyze(const std::string &perm_path, const std::string &dump_td, bool as_json) {
    const Permutation sigma = load_permutation(perm_path);
    const IncidenceGraph ig(sigma);
    const Graph &g = ig.graph();
    const auto [lis, lds] = lis_lds(sigma);
    json report;
    report["n"] = sigma.size();
    report["lis"] = lis;
    report["lds"] = lds;
    report["t_increasing"] = lds;
    report["t_decreasing"] = lis;
    if (auto part = detect_2_monotone(sigma)) {
        report["two_monotone"] = true;
        std::ostringstream inc, dec;
        for (int i : part->increasing)
            inc << (inc.tellp() > 0 ? " " : "") << i;
        for (int i : part->decreasing)
            dec << (dec.tellp() > 0 ? " " : "") << i;
        report["increasing_part"] = inc.str();
        report["decreasing_part"] = dec.str();
    } else {
        report["two_monotone"] = false;
    }
    int max_degree = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    report["incidence_edges"] = g.edge_count();
    report["max_degree"] = max_degree;
    TreeDecomposition td = min_fill_decomposition(g);
    report["minfill_width"] = td.width();
    if (g.vertex_count() <= default_exact_vertex_limit) {
        td = exact_treewidth(g);
        report["exact_treewidth"] = td.width();
    } else {
        report["exact_treewidth"] = nullptr;
    }
    if (!dump_td.empty())
        write_td(dump_td, td);
    emit(report, as_json);
    return 0;
}

struct VerifyOptions {
    int max_n = 7, max_k = 4;
    std::uint64_t seed = 1;
    std::size_t random = 500;
    int random_max_n = 12, random_max_k = 6;
    bool json = false, inject_fault = false;
};

int cmd_verify(const VerifyOptions &o) {
    auto exhaustive_solvers = default_solvers({1, 2});
    auto random_solvers = default_solvers();
    if (o.inject_fault) {
        // Off-by-one in the tree-DP count whenever the pattern has length at least 3.
        for (auto *set : {&exhaustive_solvers, &random_solvers})
            set->front().count = [](const Permutation &t, const Permutation &p) {
                return treedp_count(t, p) + (p.size() >= 3 ? 1 : 0);
            };
    }
    const auto start = std::chrono::steady_clock::now();
    json report;
    int status = 0;
    auto run = [&](const std::string &name, const std::vector<Instance> &instances,
                   const std::vector<NamedSolver> &solvers) {
        const SweepReport r = run_sweep(instances, solvers);
        json j;
        j["instances"] = r.instances;
        j["disagreements"] = r.disagreements.size();
        if (!r.ok()) {
            j["first"] = describe(r.disagreements.front());
            j["reproducer"] = describe(*r.minimal);
            status = disagreement;
        }
        report[name] = j;
    };
    run("exhaustive", exhaustive_instances(o.max_n, o.max_k), exhaustive_solvers);
    if (o.random > 0)
        run("random", random_instances(o.seed, o.random, o.random_max_n, o.random_max_k), random_solvers);
    report["ok"] = status == 0;
    report["elapsed_ns"] = elapsed_ns(start);
    emit(report, o.json);
    return status;
}

struct BenchOptions {
    std::string families = "random,grid,three-track";
    std::uint64_t seed = 1;
    int max_n = 14, max_k = 8;
    std::int64_t budget_ms = 10000;
    bool json = false;
};

int cmd_bench(const BenchOptions &o) {
    struct Row {
        std::string family;
        Permutation text, pattern;
        std::optional<int> width_lower_bound;
    };
    std::mt19937_64 rng(o.seed);
    std::vector<Row> rows;
    std::string families = o.families;
    std::replace(families.begin(), families.end(), ',', ' ');
    std::istringstream fam(families);
    for (std::string f; fam >> f;) {
        if (f == "random") {
            for (int n : {std::max(4, o.max_n / 2), o.max_n})
                for (int k : {3, o.max_k})
                    if (k <= n)
                        rows.push_back({f, random_permutation(rng, n), random_permutation(rng, k), std::nullopt});
        } else if (f == "grid") {
            const GridWitness g = gen_grid_two_track(2);
            if (g.permutation.size() <= o.max_k && g.permutation.size() <= o.max_n)
                rows.push_back({f, random_permutation(rng, o.max_n), g.permutation, g.k});
        } else if (f == "three-track") {
            for (const Permutation &base : {Permutation({2, 1}), Permutation({2, 3, 1})}) {
                const ThreeTrackWitness w = gen_three_track(base);
                if (w.host.size() <= o.max_k && w.host.size() <= o.max_n)
                    rows.push_back({f, random_permutation(rng, o.max_n), w.host, std::nullopt});
            }
        } else {
            throw CLI::ValidationError("--families", "unknown family '" + f + "'");
        }
    }

    json table = json::array();
    for (const auto &row : rows) {
        bool brute_contains_it = false;
        for (const std::string algo : {"brute", "evenodd", "treedp", "strips"}) {
            const auto start = std::chrono::steady_clock::now();
            const Outcome decide = run_algo(algo, row.text, row.pattern, false, std::nullopt);
            const Outcome counted = run_algo(algo, row.text, row.pattern, true, std::nullopt);
            const auto ns = elapsed_ns(start);
            if (std::string(algo) == "brute")
                brute_contains_it = decide.contains;
            json r;
            r["family"] = row.family;
            r["n"] = row.text.size();
            r["k"] = row.pattern.size();
            r["algo"] = algo;
            r["contains"] = decide.contains;
            r["count"] = to_decimal(counted.count);
            r["width"] = decide.stats.contains("width") ? decide.stats["width"] : json(nullptr);
            r["width_lower_bound"] = row.width_lower_bound ? json(*row.width_lower_bound) : json(nullptr);
            r["agrees_with_brute"] = decide.contains == brute_contains_it;
            r["elapsed_ns"] = ns;
            r["status"] = ns > o.budget_ms * 1000000 ? "over_budget" : "ok";
            table.push_back(r);
        }
    }
    if (o.json) {
        std::cout << table.dump(2) << '\n';
        return 0;
    }
    std::cout << "family,n,k,algo,contains,count,width,width_lower_bound,agrees_with_brute,elapsed_ns,status\n";
    for (const auto &r : table) {
        bool first = true;
        for (const auto &[key, v] : r.items()) {
            std::cout << (first ? "" : ",") << (v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Permutation pattern matching solvers"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto add_solve_flags = [&](CLI::App *cmd, SolveOptions &o) {
        cmd->add_option("--algo", o.algo, "Algorithm")->check(CLI::IsMember(algorithms));
        cmd->add_option("--pattern", o.pattern, "Pattern permutation file");
        cmd->add_option("--text", o.text, "Text permutation file");
        cmd->add_option("--strips", o.strips, "Strip count for --algo strips")->check(CLI::PositiveNumber);
        cmd->add_option("--dump-td", o.dump_td, "Write the constraint-graph decomposition to FILE");
        cmd->add_option("--max-n", o.max_n, "Reject texts longer than this");
        cmd->add_option("--max-k", o.max_k, "Reject patterns longer than this");
        cmd->add_flag("--json", o.json, "JSON output");
    };
    auto *solve = app.add_subcommand("solve", "Decide whether the text contains the pattern");
    add_solve_flags(solve, solve_opts);
    SolveOptions count_opts;
    auto *count = app.add_subcommand("count", "Count occurrences of the pattern");
    add_solve_flags(count, count_opts);
    count->add_flag("--colorful", count_opts.colorful, "Count color-using embeddings of a colored instance");
    count->add_option("--instance", count_opts.instance, "Colored instance file (text, colors, pattern)");

    auto *gen = app.add_subcommand("gen", "Generate constructions");
    gen->require_subcommand(1);
    int grid_k = 0;
    bool gen_json = false;
    auto *grid = gen->add_subcommand("grid", "2-track permutation containing a k x 2k grid");
    grid->add_option("--k", grid_k, "Even grid parameter")->required();
    grid->add_flag("--json", gen_json, "JSON output with certificate check");
    std::string three_perm;
    auto *three = gen->add_subcommand("three-track", "3-track host embedding the split-sequence paths");
    three->add_option("--perm", three_perm, "Permutation file")->required();
    three->add_flag("--json", gen_json, "JSON output with certificate check");
    std::string psi_g, psi_h, psi_classes;
    auto *psi = gen->add_subcommand("psi", "Colored instance from a partitioned subgraph isomorphism instance");
    psi->set_help_flag("--help", "Print this help message and exit");
    psi->add_option("--g", psi_g, "Edge list of G")->required();
    psi->add_option("--h", psi_h, "Edge list of H")->required();
    psi->add_option("--classes", psi_classes, "Class sizes, e.g. 2,3,2")->required();

    std::string analyze_perm, analyze_td;
    bool analyze_json = false;
    auto *analyze = app.add_subcommand("analyze", "Structural report for a permutation");
    analyze->add_option("--perm", analyze_perm, "Permutation file")->required();
    analyze->add_option("--dump-td", analyze_td, "Write the incidence-graph decomposition to FILE");
    analyze->add_flag("--json", analyze_json, "JSON output");

    VerifyOptions verify_opts;
    auto *verify = app.add_subcommand("verify", "Cross-check every solver against the brute-force oracle");
    verify->add_option("--max-n", verify_opts.max_n, "Exhaustive text length bound");
    verify->add_option("--max-k", verify_opts.max_k, "Exhaustive pattern length bound");
    verify->add_option("--seed", verify_opts.seed, "Random sweep seed");
    verify->add_option("--random", verify_opts.random, "Random instances (0 disables)");
    verify->add_option("--random-max-n", verify_opts.random_max_n, "Random text length bound");
    verify->add_option("--random-max-k", verify_opts.random_max_k, "Random pattern length bound");
    verify->add_flag("--inject-fault", verify_opts.inject_fault, "Corrupt the tree-DP count (tests the harness)");
    verify->add_flag("--json", verify_opts.json, "JSON output");

    BenchOptions bench_opts;
    auto *bench = app.add_subcommand("bench", "Time every algorithm on generated instances");
    bench->add_option("--families", bench_opts.families, "Comma-separated: random, grid, three-track");
    bench->add_option("--seed", bench_opts.seed, "Instance seed");
    bench->add_option("--max-n", bench_opts.max_n, "Text length");
    bench->add_option("--max-k", bench_opts.max_k, "Largest pattern length");
    bench->add_option("--budget-ms", bench_opts.budget_ms, "Rows slower than this are marked over_budget");
    bench->add_flag("--json", bench_opts.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : usage;
    }

    try {
        if (*solve || *count) {
            const bool counting = static_cast<bool>(*count);
            const SolveOptions &o = counting ? count_opts : solve_opts;
            if (counting && o.colorful) {
                if (o.instance.empty())
                    throw CLI::RequiredError("--instance");
            } else if (o.pattern.empty() || o.text.empty()) {
                throw CLI::RequiredError("--pattern and --text");
            }
            return cmd_solve(o, counting);
        }
        if (*grid)
            return cmd_gen_grid(grid_k, gen_json);
        if (*three)
            return cmd_gen_three_track(three_perm, gen_json);
        if (*psi)
            return cmd_gen_psi(psi_g, psi_h, psi_classes);
        if (*analyze)
            return cmd_analyze(analyze_perm, analyze_td, analyze_json);
        if (*verify)
            return cmd_verify(verify_opts);
        if (*bench)
            return cmd_bench(bench_opts);
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const LimitExceeded &e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return limit;
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
