// eisenspec command-line tool. Every command prints one JSON document on stdout
// (except `named` and `expand`, which print .sdg text); logs go to stderr.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eisenspec/eisenspec.hpp"
#include "json_output.hpp"
#include "reproduce.hpp"

namespace {

using eisenspec::cli::json;
using namespace eisenspec;

struct Options {
    bool pretty = false;
};

void emit(const Options& opts, const std::string& command, json payload) {
    payload["status"] = "ok";
    payload["command"] = command;
    if (opts.pretty) std::cout << eisenspec::cli::render_pretty(payload);
    else std::cout << payload.dump() << "\n";
}

SpanningForest parse_tree(const std::string& text) {
    SpanningForest tree;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("tree edge '" + item + "' is not of the form u-v");
        tree.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return tree;
}

ClassificationVerdict run_theorem(const std::string& theorem, const SignedDigraph& phi) {
    if (theorem == "rank2") return classify_rank2(phi);
    if (theorem == "rank3") return classify_rank3(phi);
    if (theorem == "lambda2neg") return classify_lambda2_negative(phi);
    if (theorem == "c5type") return c5_signature_type(phi);
    if (theorem == "semicomplete") return semicomplete_bridge_classify(phi);
    throw std::invalid_argument("unknown theorem: " + theorem);
}

int thread_flag_or_env(int flag) {
    // the flag wins; 0 lets the library read EISENSPEC_THREADS
    return flag > 0 ? flag : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra, switching and census tools for signed digraphs"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--pretty", opts.pretty, "Render the JSON payload as an indented key/value table");

    std::string file_a;
    std::string file_b;

    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial and numeric eigenvalues");
    std::string method = "exact";
    charpoly->add_option("file", file_a, ".sdg file")->required();
    charpoly->add_option("--method", method, "exact | sachs | multimodular")
        ->check(CLI::IsMember({"exact", "sachs", "multimodular"}));

    auto* inertia_cmd = app.add_subcommand("inertia", "Exact inertia and rank");
    inertia_cmd->add_option("file", file_a, ".sdg file")->required();

    auto* iso = app.add_subcommand("iso", "Switching isomorphism test with witness");
    bool no_converse = false;
    iso->add_option("a", file_a, "first .sdg file")->required();
    iso->add_option("b", file_b, "second .sdg file")->required();
    iso->add_flag("--no-converse", no_converse, "Do not allow taking the converse");

    auto* normalize = app.add_subcommand("normalize", "Spanning-tree normal form");
    std::string tree_text;
    normalize->add_option("file", file_a, ".sdg file")->required();
    normalize->add_option("--tree", tree_text, "Spanning forest as u-v,u-v,...");

    auto* expand = app.add_subcommand("expand", "Twin or clique expansion");
    std::string mode;
    std::string tau_text;
    expand->add_option("--mode", mode, "twin | clique")->required()->check(CLI::IsMember({"twin", "clique"}));
    expand->add_option("--tau", tau_text, "Block sizes, e.g. 3,5,16")->required();
    expand->add_option("file", file_a, ".sdg file")->required();

    auto* classify = app.add_subcommand("classify", "Run a classification theorem");
    std::string theorem;
    std::string c5_type_text = "A";
    classify->add_option("file", file_a, ".sdg file (not needed for c5table)");
    classify->add_option("--theorem", theorem, "rank2|rank3|lambda2neg|c5type|kite|semicomplete|necessary|c5table")
        ->required();
    classify->add_option("--tau", tau_text, "Expansion vector for c5table");
    classify->add_option("--type", c5_type_text, "C5 type for c5table (A, B, C or D)");

    auto* census = app.add_subcommand("census", "Cospectral-mate census around a target");
    std::string graphs_file;
    int threads = 0;
    bool connected_only = false;
    bool no_prune = false;
    census->add_option("--target", file_a, "target .sdg file")->required();
    census->add_option("--graphs", graphs_file, "graph6 list of candidate underlying graphs");
    census->add_option("--threads", threads, "Worker threads (overrides EISENSPEC_THREADS)");
    census->add_flag("--connected-only", connected_only, "Skip disconnected candidate graphs");
    census->add_flag("--no-prune", no_prune, "Disable all filters (reference run)");

    auto* named_cmd = app.add_subcommand("named", "Print a named signed digraph as .sdg");
    std::string constructor;
    std::vector<std::string> params;
    bool list = false;
    named_cmd->add_option("constructor", constructor, "Constructor or exhibit name");
    named_cmd->add_option("params", params, "Constructor parameters");
    named_cmd->add_flag("--list", list, "List constructors and exhibits");

    auto* family = app.add_subcommand("family", "Known cospectral pair");
    std::string family_id;
    int family_param = 1;
    family->add_option("id", family_id, "SMALL_K3_K3STAR|SMALL_K3STAR_T4|SMALL_K3_T4|FAMILY_65|FAMILY_66")->required();
    family->add_option("param", family_param, "Family parameter i");

    auto* mates = app.add_subcommand("mates", "Rank-2 mate inventory for K_{f,g}");
    int mate_f = 0;
    int mate_g = 0;
    mates->add_option("f", mate_f)->required();
    mates->add_option("g", mate_g)->required();

    auto* partner = app.add_subcommand("partner", "Non-isomorphic digraph in the same switching class");
    partner->add_option("file", file_a, ".sdg file")->required();

    auto* reproduce = app.add_subcommand("reproduce", "Re-check a published table or theorem");
    std::string target;
    reproduce->add_option("target", target, "table2|example31|lemma52|thm53|table3|thm610|saltire|families")
        ->required()
        ->check(CLI::IsMember(eisenspec::cli::reproduce_targets()));
    reproduce->add_option("--threads", threads, "Worker threads for census-backed claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*charpoly) {
            const SignedDigraph phi = read_sdg_file(file_a);
            IntPolynomial p;
            if (method == "sachs") p = char_poly_sachs(phi, true);
            else if (method == "multimodular") p = char_poly_multimodular(phi);
            else p = char_poly_exact(phi);
            emit(opts, "charpoly",
                 {{"order", phi.order()},
                  {"method", method},
                  {"coefficients", eisenspec::cli::to_json(p)},
                  {"polynomial", p.to_string()},
                  {"eigenvalues", eigenvalues_numeric(phi)}});
        } else if (*inertia_cmd) {
            const SignedDigraph phi = read_sdg_file(file_a);
            const Inertia in = inertia(phi);
            emit(opts, "inertia", {{"inertia", eisenspec::cli::to_json(in)}, {"rank", phi.order() - in.zero}});
        } else if (*iso) {
            const SignedDigraph a = read_sdg_file(file_a);
            const SignedDigraph b = read_sdg_file(file_b);
            const auto w = switching_isomorphic(a, b, !no_converse);
            json payload{{"result", w ? "switching_isomorphic" : "distinct"}};
            if (w) payload["witness"] = eisenspec::cli::to_json(*w);
            emit(opts, "iso", std::move(payload));
        } else if (*normalize) {
            const SignedDigraph phi = read_sdg_file(file_a);
            std::optional<SpanningForest> tree;
            if (!tree_text.empty()) tree = parse_tree(tree_text);
            const TreeNormalForm nf = normalize_tree(phi, tree);
            json cycles = json::array();
            for (const auto& [edge, gain] : fundamental_cycle_gains(phi, nf.tree)) {
                cycles.push_back({{"edge", {edge.first, edge.second}},
                                  {"gain", gain.exponent()},
                                  {"twice_real_part", gain.twice_real_part()}});
            }
            emit(opts, "normalize",
                 {{"tree", eisenspec::cli::edges_to_json(nf.tree)},
                  {"switch", eisenspec::cli::to_json(nf.applied)},
                  {"normal_form", to_sdg(nf.base)},
                  {"fundamental_cycles", std::move(cycles)}});
        } else if (*expand) {
            const SignedDigraph phi = read_sdg_file(file_a);
            const ExpansionVector tau = parse_expansion_vector(tau_text);
            std::cout << to_sdg(mode == "twin" ? twin_expand(phi, tau) : clique_expand(phi, tau));
        } else if (*classify) {
            if (theorem == "c5table") {
                if (c5_type_text.size() != 1) throw std::invalid_argument("--type must be one letter");
                const C5Type type = c5_type_from_char(c5_type_text[0]);
                const ExpansionVector tau = parse_expansion_vector(tau_text);
                emit(opts, "classify",
                     {{"theorem", theorem}, {"type", c5_type_text}, {"tau", tau}, {"dominated", check_c5_table(tau, type)}});
            } else {
                if (file_a.empty()) throw std::invalid_argument("classify: an .sdg file is required");
                const SignedDigraph phi = read_sdg_file(file_a);
                if (theorem == "kite") {
                    emit(opts, "classify", {{"theorem", theorem}, {"holds", kite_condition(phi)}});
                } else if (theorem == "necessary") {
                    json violations = json::array();
                    for (const auto& v : check_two_nonneg_necessary(phi))
                        violations.push_back({{"condition", v.condition}, {"vertices", v.vertices}});
                    emit(opts, "classify", {{"theorem", theorem}, {"violations", std::move(violations)}});
                } else {
                    json payload = eisenspec::cli::to_json(run_theorem(theorem, phi));
                    payload["theorem"] = theorem;
                    emit(opts, "classify", std::move(payload));
                }
            }
        } else if (*census) {
            CensusTask task = CensusTask::for_target(read_sdg_file(file_a));
            if (!graphs_file.empty()) task.graphs = read_graph6_file(graphs_file);
            task.allow_disconnected = !connected_only;
            task.prune = !no_prune;
            task.threads = thread_flag_or_env(threads);
            std::clog << "census: n=" << task.n << " m=" << task.edge_count() << "\n";
            emit(opts, "census", eisenspec::cli::to_json(cospectral_mates(task)));
        } else if (*named_cmd) {
            if (list || constructor.empty()) {
                emit(opts, "named", {{"constructors", named::constructor_names()}, {"exhibits", named::exhibit_names()}});
            } else {
                std::cout << to_sdg(named::by_name(constructor, params));
            }
        } else if (*family) {
            const auto [a, b] = known_family(known_family_from_string(family_id), family_param);
            emit(opts, "family",
                 {{"id", family_id}, {"param", family_param}, {"first", to_sdg(a)}, {"second", to_sdg(b)}});
        } else if (*mates) {
            json triples = json::array();
            for (const MateTriple& t : rank2_mate_solver(mate_f, mate_g))
                triples.push_back({{"p", t.p}, {"q", t.q}, {"r", t.r}});
            emit(opts, "mates", {{"f", mate_f}, {"g", mate_g}, {"triples", std::move(triples)}});
        } else if (*partner) {
            const SignedDigraph phi = read_sdg_file(file_a);
            const auto p = find_nonisomorphic_switch_partner(phi);
            json payload{{"found", p.has_value()}};
            if (p) payload["partner"] = to_sdg(*p);
            emit(opts, "partner", std::move(payload));
        } else if (*reproduce) {
            const auto results = eisenspec::cli::reproduce(target, thread_flag_or_env(threads));
            json claims = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                const std::string status = r.skipped ? "skipped" : (r.pass ? "pass" : "fail");
                if (!r.skipped && !r.pass) all_pass = false;
                claims.push_back({{"claim", r.claim}, {"status", status}, {"detail", r.detail}});
            }
            emit(opts, "reproduce", {{"target", target}, {"pass", all_pass}, {"claims", std::move(claims)}});
            return all_pass ? EXIT_SUCCESS : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"status", "error"}, {"error", {{"kind", "invalid_argument"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"status", "error"}, {"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 3;
    }
    return EXIT_SUCCESS;
}
