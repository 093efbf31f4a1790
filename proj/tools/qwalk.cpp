// qwalk: continuous-time quantum walk analyzer.
//
// Subcommands: generate, spectrum, support, ppst, pgst, revival, sedentary,
// mstate, branch-verify, reproduce. Reports are deterministic JSON; timing
// sits in a trailing field that hashing should skip. QWALK_TOL overrides the
// default support tolerance.

#include "qwalk/commands.hpp"
#include "qwalk/qwalk.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace qwalk;

namespace {

void emit(const Json& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload.dump(2) << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::vector<GroupElem> parse_connection_set(const std::string& spec, size_t arity) {
    std::vector<GroupElem> out;
    for (const auto& part : cli::split_top_level(spec, ';')) {
        GroupElem e;
        for (const auto& tok : cli::split_top_level(part)) e.push_back(std::stoll(tok));
        if (e.size() != arity)
            throw std::invalid_argument("connection element '" + part + "' needs " +
                                        std::to_string(arity) + " entries");
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Complex> parse_coefficients(const std::string& spec) {
    std::vector<Complex> out;
    for (const auto& tok : cli::split_top_level(spec)) {
        auto slash = tok.find('i');
        if (slash != std::string::npos)
            throw std::invalid_argument("complex coefficients are not supported on the command "
                                        "line; use real values");
        out.emplace_back(std::stod(tok), 0.0);
    }
    return out;
}

std::vector<int> parse_permutation(const std::string& spec, int n) {
    std::vector<int> perm;
    for (const auto& tok : cli::split_top_level(spec)) perm.push_back(std::stoi(tok));
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation must list all " + std::to_string(n) +
                                    " vertex images");
    return perm;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walk analyzer"};
    app.require_subcommand(1);

    std::string out_path;
    auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the JSON output here instead of stdout");
    };

    // ---- generate ----------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "emit a family graph as JSON");
    std::string gen_family;
    std::vector<long long> gen_params;
    std::string gen_orders, gen_connset, gen_remove;
    bool gen_symmetrize = false;
    std::string gen_product, gen_join, gen_corona;
    gen->add_option("family", gen_family,
                    "path|cycle|complete|star|book|cayley|complete-minus-c4s")
        ->required();
    gen->add_option("params", gen_params, "numeric family parameters (e.g. the order)");
    gen->add_option("--orders", gen_orders, "cayley: comma-separated group moduli");
    gen->add_option("--connset", gen_connset,
                    "cayley: semicolon-separated tuples, e.g. \"0,1;1,0;1,2;2,0\"");
    gen->add_flag("--symmetrize", gen_symmetrize, "cayley: close the connection set under negation");
    gen->add_option("--remove", gen_remove,
                    "complete-minus-c4s: semicolon-separated 4-cycles, e.g. \"0,1,2,3;4,5,6,7\"");
    gen->add_option("--product", gen_product, "Cartesian product with the graph in this file");
    gen->add_option("--join", gen_join, "join with the graph in this file");
    gen->add_option("--corona", gen_corona, "corona with the graph in this file");

    // ---- graph-consuming commands ------------------------------------------
    std::string graph_path, branch_path, pairs_spec, pair2_spec, times_spec, coeffs_spec;
    std::vector<std::string> automorphism_specs, branch_paths;
    bool sweep_flag = false;
    int jobs = 1;
    double horizon = 1e4, threshold = 0.999, time_arg = 0.0;
    std::string vertex_spec, source_spec, target_spec;
    bool use_vertex_states = false;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, multiplicities, exact classes");
    spectrum->add_option("graph", graph_path, "graph JSON file")->required();

    auto* support = app.add_subcommand("support", "eigenvalue support of a pair state");
    support->add_option("graph", graph_path, "graph JSON file")->required();
    support->add_option("--pair", pairs_spec, "pair a,b (labels or internal ids)")->required();

    auto* ppst = app.add_subcommand("ppst", "certify perfect pair state transfer");
    ppst->add_option("graph", graph_path, "graph JSON file")->required();
    ppst->add_option("--pairs", pairs_spec, "two pairs a,b,c,d");
    ppst->add_flag("--sweep", sweep_flag, "search all pairs of pair states");
    ppst->add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();

    auto* pgst = app.add_subcommand("pgst", "pair-PGST evidence, obstructions, family verdicts");
    pgst->add_option("graph", graph_path, "graph JSON file")->required();
    pgst->add_option("--pairs", pairs_spec, "source pair a,b or two pairs a,b,c,d")->required();
    pgst->add_option("--horizon", horizon, "evidence search horizon")->capture_default_str();
    pgst->add_option("--threshold", threshold, "evidence threshold")->capture_default_str();
    pgst->add_option("--automorphism", automorphism_specs,
                     "vertex image list, e.g. \"0,5,4,3,2,1\"; repeatable");

    auto* revival = app.add_subcommand("revival", "fractional revival between two states");
    revival->add_option("graph", graph_path, "graph JSON file")->required();
    revival->add_option("--time", time_arg, "evolution time")->required();
    revival->add_option("--pair", pairs_spec, "first pair a,b");
    revival->add_option("--pair2", pair2_spec, "second pair c,d");
    revival->add_flag("--vertices", use_vertex_states, "treat --pair/--pair2 entries as two vertex states a,b");

    auto* sedentary = app.add_subcommand("sedentary", "inf |U(t)_aa| estimate over (0, horizon]");
    sedentary->add_option("graph", graph_path, "graph JSON file")->required();
    sedentary->add_option("--vertex", vertex_spec, "vertex label or id")->required();
    sedentary->add_option("--horizon", horizon, "scan horizon")->capture_default_str();

    auto* mstate = app.add_subcommand("mstate", "(m,L)-state transfer across isomorphic branches");
    mstate->add_option("graph", graph_path, "graph JSON file")->required();
    mstate->add_option("--branches", branch_paths, "branch-pair JSON files (one per extra copy)")
        ->required();
    mstate->add_option("--source", source_spec, "anchor vertex a in X1")->required();
    mstate->add_option("--target", target_spec, "anchor vertex b in X1")->required();
    mstate->add_option("--coeffs", coeffs_spec, "comma-separated coefficients, must sum to 0")
        ->required();

    auto* branch_verify = app.add_subcommand("branch-verify",
                                             "verify an isomorphic branch pair and the block identity");
    branch_verify->add_option("graph", graph_path, "graph JSON file")->required();
    branch_verify->add_option("branches", branch_path, "branch-pair JSON file")->required();
    branch_verify->add_option("--times", times_spec, "comma-separated check times")
        ->capture_default_str();

    auto* reproduce = app.add_subcommand("reproduce", "re-derive the published transfer tables");
    std::string reproduce_id;
    int max_n = 13;
    reproduce->add_option("id", reproduce_id,
                          "paths|cycles|ppst-pgst-demo|path6-edges|cycle10-edges|book")
        ->required();
    reproduce->add_option("--max", max_n, "largest order for family sweeps")->capture_default_str();
    reproduce->add_option("--horizon", horizon, "evidence horizon for demo targets")
        ->capture_default_str();
    reproduce->add_option("--jobs", jobs, "worker threads")->capture_default_str();

    for (CLI::App* cmd : {gen, spectrum, support, ppst, pgst, revival, sedentary, mstate,
                          branch_verify, reproduce})
        add_out(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        Timer timer;
        if (gen->parsed()) {
            Graph g(0);
            if (gen_family == "path") {
                if (gen_params.size() != 1) throw std::invalid_argument("generate path <n>");
                g = path_graph(static_cast<int>(gen_params[0]));
            } else if (gen_family == "cycle") {
                if (gen_params.size() != 1) throw std::invalid_argument("generate cycle <n>");
                g = cycle_graph(static_cast<int>(gen_params[0]));
            } else if (gen_family == "complete") {
                if (gen_params.size() != 1) throw std::invalid_argument("generate complete <n>");
                g = complete_graph(static_cast<int>(gen_params[0]));
            } else if (gen_family == "star") {
                if (gen_params.size() != 1) throw std::invalid_argument("generate star <l>");
                g = star_graph(static_cast<int>(gen_params[0]));
            } else if (gen_family == "book") {
                if (gen_params.size() != 1) throw std::invalid_argument("generate book <l>");
                g = book_graph(static_cast<int>(gen_params[0]));
            } else if (gen_family == "cayley") {
                std::vector<long long> orders;
                for (const auto& tok : cli::split_top_level(gen_orders))
                    orders.push_back(std::stoll(tok));
                if (orders.empty()) throw std::invalid_argument("cayley needs --orders");
                auto conn = parse_connection_set(gen_connset, orders.size());
                if (gen_symmetrize) {
                    std::vector<GroupElem> closed = conn;
                    for (const auto& e : conn) closed.push_back(group_negate(e, orders));
                    conn = std::move(closed);
                }
                g = cayley_abelian(orders, conn);
            } else if (gen_family == "complete-minus-c4s") {
                if (gen_params.size() != 1)
                    throw std::invalid_argument("generate complete-minus-c4s <n> --remove ...");
                std::vector<std::vector<int>> cycles;
                if (!gen_remove.empty())
                    for (const auto& part : cli::split_top_level(gen_remove, ';')) {
                        std::vector<int> c;
                        for (const auto& tok : cli::split_top_level(part)) c.push_back(std::stoi(tok));
                        cycles.push_back(std::move(c));
                    }
                g = complete_minus_c4s(static_cast<int>(gen_params[0]), cycles);
            } else {
                throw std::invalid_argument("unknown family: " + gen_family);
            }
            if (!gen_product.empty()) g = cartesian_product(g, read_graph(gen_product));
            if (!gen_join.empty()) g = join(g, read_graph(gen_join));
            if (!gen_corona.empty()) g = corona(g, read_graph(gen_corona));
            emit(graph_to_json(g), out_path);
            return 0;
        }

        std::vector<std::string> warnings;
        Json results;
        std::string command;
        std::optional<Graph> graph;
        if (!graph_path.empty()) graph = read_graph(graph_path);

        if (spectrum->parsed()) {
            command = "spectrum " + graph_path;
            results = cli::spectrum_results(*graph, warnings);
        } else if (support->parsed()) {
            command = "support " + graph_path + " --pair " + pairs_spec;
            results = cli::support_results(*graph, cli::parse_pair(*graph, pairs_spec), warnings);
        } else if (ppst->parsed()) {
            command = "ppst " + graph_path + (sweep_flag ? " --sweep" : " --pairs " + pairs_spec);
            std::vector<VertexPair> pairs;
            if (!pairs_spec.empty()) {
                auto toks = cli::split_top_level(pairs_spec);
                if (toks.size() != 4)
                    throw std::invalid_argument("--pairs needs four vertices a,b,c,d");
                pairs.push_back(cli::parse_pair(*graph, toks[0] + "," + toks[1]));
                pairs.push_back(cli::parse_pair(*graph, toks[2] + "," + toks[3]));
            }
            results = cli::ppst_results(*graph, pairs, sweep_flag, jobs, warnings);
        } else if (pgst->parsed()) {
            command = "pgst " + graph_path + " --pairs " + pairs_spec;
            auto toks = cli::split_top_level(pairs_spec);
            VertexPair source;
            std::optional<VertexPair> target;
            if (toks.size() == 2) {
                source = cli::parse_pair(*graph, pairs_spec);
            } else if (toks.size() == 4) {
                source = cli::parse_pair(*graph, toks[0] + "," + toks[1]);
                target = cli::parse_pair(*graph, toks[2] + "," + toks[3]);
            } else {
                throw std::invalid_argument("--pairs needs a,b or a,b,c,d");
            }
            std::vector<std::vector<int>> autos;
            for (const auto& spec : automorphism_specs)
                autos.push_back(parse_permutation(spec, graph->vertex_count()));
            results = cli::pgst_results(*graph, source, target, horizon, threshold, autos, warnings);
        } else if (revival->parsed()) {
            command = "revival " + graph_path;
            const int n = graph->vertex_count();
            QuantumState s1 = QuantumState::vertex(0, n), s2 = QuantumState::vertex(0, n);
            Json echo;
            if (use_vertex_states) {
                auto toks = cli::split_top_level(pairs_spec);
                if (toks.size() != 2)
                    throw std::invalid_argument("--vertices mode wants --pair a,b");
                s1 = QuantumState::vertex(cli::resolve_vertex(*graph, toks[0]), n);
                s2 = QuantumState::vertex(cli::resolve_vertex(*graph, toks[1]), n);
                echo["kind"] = "vertex";
                echo["vertices"] = Json::array({toks[0], toks[1]});
            } else {
                VertexPair p1 = cli::parse_pair(*graph, pairs_spec);
                VertexPair p2 = cli::parse_pair(*graph, pair2_spec);
                s1 = QuantumState::pair(p1.a, p1.b, n);
                s2 = QuantumState::pair(p2.a, p2.b, n);
                echo["kind"] = "pair";
                echo["pair"] = jpair(*graph, p1);
                echo["pair2"] = jpair(*graph, p2);
            }
            results = cli::revival_results(*graph, s1, s2, time_arg, std::move(echo));
        } else if (sedentary->parsed()) {
            command = "sedentary " + graph_path + " --vertex " + vertex_spec;
            results = cli::sedentary_results(*graph, cli::resolve_vertex(*graph, vertex_spec),
                                             horizon);
        } else if (mstate->parsed()) {
            command = "mstate " + graph_path;
            std::vector<BranchPair> branches;
            for (const auto& path : branch_paths) branches.push_back(read_branch_pair(path));
            results = cli::mstate_results(*graph, branches,
                                          cli::resolve_vertex(*graph, source_spec),
                                          cli::resolve_vertex(*graph, target_spec),
                                          parse_coefficients(coeffs_spec), warnings);
        } else if (branch_verify->parsed()) {
            command = "branch-verify " + graph_path + " " + branch_path;
            BranchPair bp = read_branch_pair(branch_path);
            std::vector<double> times =
                times_spec.empty() ? std::vector<double>{0.3, 1.0, kPi / 2}
                                   : cli::parse_times(times_spec);
            results = cli::branch_verify_results(*graph, bp, times, warnings);
        } else if (reproduce->parsed()) {
            command = "reproduce " + reproduce_id + " --max " + std::to_string(max_n);
            results = cli::reproduce_results(reproduce_id, max_n, horizon, jobs, warnings);
        }

        emit(make_report(command, graph ? &*graph : nullptr, std::move(results), warnings,
                         timer.ms()),
             out_path);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
