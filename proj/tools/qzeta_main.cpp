#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qzeta/euler.hpp"
#include "qzeta/oracle.hpp"
#include "qzeta/random.hpp"
#include "qzeta/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace qzeta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json quaternion_to_json(const Quaternion& q) {
    return json::array({q.x0, q.x1, q.x2, q.x3});
}

WeightAssignment load_weights(const Graph& g, const std::string& path) {
    if (path.empty()) return WeightAssignment::ones(g);
    return WeightAssignment::parse_file(g, path);
}

struct CommonOpts {
    std::string graph_path;
    std::string weights_path;
    std::string t_text = "0,0,0,0";
    bool as_json = false;
};

int cmd_info(const std::string& graph_path, bool as_json) {
    const Graph g = parse_graph_file(graph_path);
    const ArcTable& arcs = g.arc_table();
    if (as_json) {
        json j;
        j["command"] = "info";
        j["inputs"] = {{"graph", graph_path}};
        json degrees = json::array();
        for (int v = 0; v < g.vertex_count(); ++v) degrees.push_back(g.degree(v));
        json arc_list = json::array();
        for (int e = 0; e < arcs.size(); ++e)
            arc_list.push_back(json::array({arcs.origin(e), arcs.terminal(e)}));
        j["values"] = {{"n", g.vertex_count()},
                       {"m", g.edge_count()},
                       {"r", g.betti_number()},
                       {"tree", g.is_tree()},
                       {"degrees", degrees},
                       {"arcs", arc_list}};
        j["discrepancies"] = json::object();
        j["warnings"] = json::array();
        j["seed"] = 0;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
              << " r=" << g.betti_number() << (g.is_tree() ? " (tree)" : "")
              << "\n";
    std::cout << "degrees:";
    for (int v = 0; v < g.vertex_count(); ++v) std::cout << " " << g.degree(v);
    std::cout << "\narcs (canonical order):\n";
    for (int e = 0; e < arcs.size(); ++e) {
        std::cout << "  " << e << ": (" << arcs.origin(e) << ","
                  << arcs.terminal(e) << ")  inverse " << arcs.inverse(e) << "\n";
    }
    return kExitOk;
}

int cmd_zeta(const CommonOpts& opts, const std::string& method, double tol) {
    const Graph g = parse_graph_file(opts.graph_path);
    const WeightAssignment w = load_weights(g, opts.weights_path);
    const Quaternion t = parse_quaternion(opts.t_text);

    std::optional<double> hashimoto, bass, discrepancy;
    bool pass = true;
    std::vector<std::string> warnings;
    if (method == "hashimoto" || method == "both")
        hashimoto = reciprocal_hashimoto(g, w, t);
    if (method == "bass" || method == "both") bass = reciprocal_bass(g, w, t);
    if (method == "both") {
        const ZetaReport report = check_identity(g, w, t, tol);
        discrepancy = report.discrepancy;
        pass = report.pass;
        if (report.radius_warning)
            warnings.push_back("t outside the convergence guard radius");
        if (report.near_pole) warnings.push_back("|1 - t^2| is nearly singular");
    }

    if (opts.as_json) {
        json j;
        j["command"] = "zeta";
        j["inputs"] = {{"graph", opts.graph_path},
                       {"weights", opts.weights_path.empty()
                                       ? json(nullptr)
                                       : json(opts.weights_path)},
                       {"t", quaternion_to_json(t)},
                       {"method", method},
                       {"tol", tol}};
        j["values"] = json::object();
        if (hashimoto) j["values"]["hashimoto"] = *hashimoto;
        if (bass) j["values"]["bass"] = *bass;
        j["discrepancies"] = json::object();
        if (discrepancy) j["discrepancies"]["hashimoto_vs_bass"] = *discrepancy;
        j["warnings"] = warnings;
        j["seed"] = 0;
        std::cout << j.dump(2) << "\n";
    } else {
        if (hashimoto)
            std::cout << "hashimoto reciprocal = " << fmt12(*hashimoto) << "\n";
        if (bass) std::cout << "bass reciprocal      = " << fmt12(*bass) << "\n";
        if (discrepancy) {
            std::cout << "relative discrepancy = " << fmt12(*discrepancy)
                      << " (tol " << fmt12(tol) << ") -> "
                      << (pass ? "PASS" : "FAIL") << "\n";
        }
        for (const std::string& wmsg : warnings)
            std::cout << "warning: " << wmsg << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_check(const std::string& graph_path, int trials, int n_max,
              double radius, double tol, std::uint64_t seed, bool as_json) {
    std::optional<Graph> fixed_graph;
    if (!graph_path.empty()) fixed_graph = parse_graph_file(graph_path);

    int passes = 0;
    double worst = 0.0;
    std::vector<std::string> warnings;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const Graph g = fixed_graph
                            ? *fixed_graph
                            : random_connected_graph(rng, 3, n_max,
                                                     /*force_tree=*/trial % 10 == 9);
        const WeightAssignment w = random_weights(rng, g, 1.0);
        const Quaternion t = random_quaternion_in_ball(rng, radius);
        const ZetaReport report = check_identity(g, w, t, tol);
        if (report.pass) ++passes;
        if (report.discrepancy) worst = std::max(worst, *report.discrepancy);
        for (const std::string& err : report.errors)
            warnings.push_back("trial " + std::to_string(trial) + ": " + err);
    }
    const int failures = trials - passes;

    if (as_json) {
        json j;
        j["command"] = "check";
        j["inputs"] = {{"graph", graph_path.empty() ? json(nullptr)
                                                    : json(graph_path)},
                       {"trials", trials},
                       {"n_max", n_max},
                       {"radius", radius},
                       {"tol", tol}};
        j["values"] = {{"passes", passes},
                       {"failures", failures},
                       {"worst_discrepancy", worst}};
        j["discrepancies"] = {{"worst", worst}};
        j["warnings"] = warnings;
        j["seed"] = seed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trials: " << trials << "  passes: " << passes
                  << "  failures: " << failures << "\n";
        std::cout << "worst relative discrepancy: " << fmt12(worst) << " (tol "
                  << fmt12(tol) << ")\n";
        for (const std::string& wmsg : warnings)
            std::cout << "warning: " << wmsg << "\n";
    }
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_euler(const CommonOpts& opts, int max_len, bool compare, double tol) {
    const Graph g = parse_graph_file(opts.graph_path);
    const WeightAssignment w = load_weights(g, opts.weights_path);
    const Quaternion t = parse_quaternion(opts.t_text);

    const ConvergenceReport rep =
        euler_convergence_report(g, w, t, max_len, compare);
    std::vector<std::string> warnings;
    if (!rep.guard_ok) {
        warnings.push_back(
            "convergence not guaranteed (|t|*max|w~| >= 1/(8m^2))");
    }

    if (opts.as_json) {
        json j;
        j["command"] = "euler";
        j["inputs"] = {{"graph", opts.graph_path},
                       {"weights", opts.weights_path.empty()
                                       ? json(nullptr)
                                       : json(opts.weights_path)},
                       {"t", quaternion_to_json(t)},
                       {"max_len", max_len},
                       {"compare", compare},
                       {"tol", tol}};
        json lengths = json::array();
        for (const ConvergenceRow& row : rep.rows) {
            lengths.push_back({{"length", row.length},
                               {"cycles", row.cycles},
                               {"partial", row.partial},
                               {"delta", row.delta}});
        }
        j["values"] = {{"final", rep.final_value}, {"lengths", lengths}};
        if (rep.bass_value) j["values"]["bass"] = *rep.bass_value;
        j["discrepancies"] = json::object();
        if (rep.bass_gap) j["discrepancies"]["euler_vs_bass"] = *rep.bass_gap;
        j["warnings"] = warnings;
        j["seed"] = 0;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%4s %10s %-22s %s\n", "len", "cycles", "partial product",
                    "delta");
        for (const ConvergenceRow& row : rep.rows) {
            std::printf("%4d %10" PRIu64 " %-22s %s\n", row.length, row.cycles,
                        fmt12(row.partial).c_str(), fmt12(row.delta).c_str());
        }
        std::cout << "truncated reciprocal = " << fmt12(rep.final_value) << "\n";
        if (rep.bass_value) {
            std::cout << "bass reciprocal      = " << fmt12(*rep.bass_value)
                      << "\n";
            std::cout << "relative gap         = " << fmt12(*rep.bass_gap) << "\n";
        }
        for (const std::string& wmsg : warnings)
            std::cout << "warning: " << wmsg << "\n";
    }
    return kExitOk;
}

int cmd_selftest() {
    struct Row {
        std::string name;
        bool ok;
    };
    std::vector<Row> rows;
    auto record = [&rows](const std::string& name, bool ok) {
        rows.push_back({name, ok});
    };

    // LU determinant vs cofactor oracle
    {
        std::mt19937_64 rng(derive_seed(424242, 0));
        bool ok = true;
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
            CMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(r, c) = {d(rng), d(rng)};
            const cplx a = det(m);
            const cplx b = oracle::naive_det(m);
            if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(b))) ok = false;
        }
        record("lu determinant vs cofactor oracle", ok);
    }

    // Lyndon generator vs brute force
    {
        bool ok = true;
        for (int n = 1; n <= 3 && ok; ++n)
            for (int len = 1; len <= 5 && ok; ++len)
                ok = (lyndon_words(n, len) == oracle::lyndon_bruteforce(n, len));
        record("lyndon generator vs brute force", ok);
    }

    // cycle census fixtures
    {
        bool ok = true;
        const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
        ok = ok && oracle::enumerate_prime_cycles(tri, 3, true).size() == 2;
        const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        ok = ok && oracle::enumerate_prime_cycles(k4, 3, true).size() == 8;
        const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
        ok = ok && oracle::enumerate_prime_cycles(p4, 10, true).empty();
        record("prime reduced cycle census fixtures", ok);
    }

    // Study determinant axioms
    {
        std::mt19937_64 rng(derive_seed(424242, 1));
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        auto rand_q = [&]() { return Quaternion(d(rng), d(rng), d(rng), d(rng)); };
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            QMatrix a(3, 3), b(3, 3);
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c) {
                    a(r, c) = rand_q();
                    b(r, c) = rand_q();
                }
            const double sa = study_det(a);
            const double sb = study_det(b);
            const double sab = study_det(a * b);
            if (sa < 0 || sb < 0) ok = false;
            if (std::abs(sab - sa * sb) > 1e-9 * std::max({1.0, sab, sa * sb}))
                ok = false;
        }
        record("study determinant axioms", ok);
    }

    // Hashimoto vs Bass identity
    {
        bool ok = true;
        for (int trial = 0; trial < 10 && ok; ++trial) {
            std::mt19937_64 rng(derive_seed(424242, 2 + static_cast<std::uint64_t>(trial)));
            const Graph g = random_connected_graph(rng, 3, 6, trial % 3 == 0);
            const WeightAssignment w = random_weights(rng, g, 1.0);
            const Quaternion t = random_quaternion_in_ball(rng, 0.05);
            ok = check_identity(g, w, t, 1e-8).pass;
        }
        record("hashimoto vs bass identity", ok);
    }

    bool all_ok = true;
    for (const Row& row : rows) {
        std::cout << (row.ok ? "PASS" : "FAIL") << "  " << row.name << "\n";
        all_ok = all_ok && row.ok;
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic second weighted zeta function of a graph"};
    app.require_subcommand(1);

    CommonOpts zeta_opts, euler_opts;
    std::string info_graph;
    bool info_json = false;
    std::string method = "both";
    double zeta_tol = 1e-8;

    std::string check_graph;
    int trials = 50;
    int n_max = 8;
    double radius = 0.05;
    double check_tol = 1e-8;
    std::uint64_t seed = 1;
    bool check_json = false;

    int max_len = 10;
    bool compare = false;
    double euler_tol = 1e-8;

    CLI::App* info = app.add_subcommand("info", "describe a graph file");
    info->add_option("graph", info_graph, "graph file")->required();
    info->add_flag("--json", info_json, "machine-readable output");

    CLI::App* zeta = app.add_subcommand(
        "zeta", "evaluate the reciprocal of the zeta function");
    zeta->add_option("graph", zeta_opts.graph_path, "graph file")->required();
    zeta->add_option("--weights", zeta_opts.weights_path, "weight file");
    zeta->add_option("--t", zeta_opts.t_text, "quaternion t as x0,x1,x2,x3")
        ->required();
    zeta->add_option("--method", method, "hashimoto | bass | both")
        ->check(CLI::IsMember({"hashimoto", "bass", "both"}));
    zeta->add_option("--tol", zeta_tol, "relative tolerance")
        ->check(CLI::PositiveNumber);
    zeta->add_flag("--json", zeta_opts.as_json, "machine-readable output");

    CLI::App* check = app.add_subcommand(
        "check", "randomized cross-validation of the two determinant forms");
    check->add_option("graph", check_graph, "optional fixed graph file");
    check->add_option("--trials", trials, "number of random trials");
    check->add_option("--n-max", n_max, "largest random graph order")
        ->check(CLI::Range(3, 10));
    check->add_option("--radius", radius, "|t| bound")->check(CLI::PositiveNumber);
    check->add_option("--tol", check_tol, "relative tolerance")
        ->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "master seed");
    check->add_flag("--json", check_json, "machine-readable output");

    CLI::App* euler = app.add_subcommand(
        "euler", "truncated Euler product over Lyndon words");
    euler->add_option("graph", euler_opts.graph_path, "graph file")->required();
    euler->add_option("--weights", euler_opts.weights_path, "weight file");
    euler->add_option("--t", euler_opts.t_text, "quaternion t as x0,x1,x2,x3")
        ->required();
    euler->add_option("--max-len", max_len, "Lyndon word length cap")
        ->check(CLI::Range(1, 24));
    euler->add_flag("--compare", compare, "also evaluate the closed form");
    euler->add_option("--tol", euler_tol, "relative tolerance")
        ->check(CLI::PositiveNumber);
    euler->add_flag("--json", euler_opts.as_json, "machine-readable output");

    app.add_subcommand("selftest", "run the built-in oracle cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("info")) return cmd_info(info_graph, info_json);
        if (app.got_subcommand("zeta")) return cmd_zeta(zeta_opts, method, zeta_tol);
        if (app.got_subcommand("check")) {
            if (trials < 1) {
                std::cerr << "error: --trials must be >= 1\n";
                return kExitUsage;
            }
            return cmd_check(check_graph, trials, n_max, radius, check_tol, seed,
                             check_json);
        }
        if (app.got_subcommand("euler"))
            return cmd_euler(euler_opts, max_len, compare, euler_tol);
        if (app.got_subcommand("selftest")) return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
