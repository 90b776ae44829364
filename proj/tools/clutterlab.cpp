#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clutterlab/io.hpp"
#include "clutterlab/resolution.hpp"
#include "clutterlab/verifier.hpp"

using namespace clutterlab;

namespace {

// data on stdout, diagnostics on stderr; "-" means the standard streams
std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_file(path);
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

uint64_t parse_budget(const std::string& text) {
    if (text.empty()) return 10'000'000;
    char suffix = text.back();
    uint64_t scale = 1;
    std::string digits = text;
    if (suffix == 'k' || suffix == 'K') scale = 1000;
    if (suffix == 'm' || suffix == 'M') scale = 1'000'000;
    if (suffix == 'g' || suffix == 'G') scale = 1'000'000'000;
    if (scale > 1) digits.pop_back();
    return std::stoull(digits) * scale;
}

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Clutter target_clutter(const Graph& g, int r, const std::string& target) {
    Clutter base = connected_clutter(g, r);
    if (target == "direct") return base;
    if (target == "complement") return complement_clutter(base);
    throw CLI::ValidationError("--target must be direct or complement");
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args, uint64_t seed,
            bool with_c5, const std::string& out_path, const std::string& decomposition_path) {
    auto arg = [&](size_t i) {
        if (i >= args.size()) throw CLI::ValidationError("missing argument for " + family);
        return std::stoi(args[i]);
    };
    Graph g;
    if (family == "grid")
        g = grid(arg(0), arg(1));
    else if (family == "cycle")
        g = cycle(arg(0));
    else if (family == "path")
        g = path(arg(0));
    else if (family == "complete")
        g = complete(arg(0));
    else if (family == "co-cycle")
        g = complement(cycle(arg(0)));
    else if (family == "co-grid")
        g = complement(grid(arg(0), arg(1)));
    else if (family == "multipartite")
        g = complete_multipartite(parse_int_csv(args.at(0)));
    else if (family == "gamma")
        g = gamma_graph(arg(0), parse_int_csv(args.at(1)));
    else if (family == "partially-split")
        g = partially_split(arg(0), arg(1), arg(2));
    else if (family == "tree")
        g = random_tree_max_degree(arg(0), arg(1), seed);
    else if (family == "block")
        g = random_block_graph(arg(0), seed);
    else if (family == "2k2c4")
        g = generate_2k2c4_free(arg(0), arg(1), with_c5, seed);
    else if (family == "cactus") {
        CoChordalCactusInstance inst = cactus_instance(args.at(0), seed);
        if (!decomposition_path.empty())
            emit(decomposition_path, decomposition_to_json(inst.decomposition));
        emit(out_path, graph_to_json(inst.host));
        return 0;
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }
    emit(out_path, graph_to_json(g));
    return 0;
}

int outcome_exit(SearchOutcome outcome, bool strict) {
    switch (outcome) {
        case SearchOutcome::found: return 0;
        case SearchOutcome::refuted: return 1;
        case SearchOutcome::exhausted: return strict ? 3 : 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clutterlab: connected clutters, chordality certificates, and Betti tables"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    std::string family, out_path = "-", decomposition_path;
    std::vector<std::string> gen_args;
    uint64_t seed = 1;
    bool with_c5 = false;
    gen->add_option("family", family,
                    "grid|cycle|path|complete|co-cycle|co-grid|multipartite|gamma|"
                    "partially-split|tree|block|2k2c4|cactus")
        ->required();
    gen->add_option("args", gen_args, "family parameters");
    gen->add_option("-o,--output", out_path, "output path (- for stdout)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--with-c5", with_c5, "include the C5 block (2k2c4 family)");
    gen->add_option("--emit-decomposition", decomposition_path,
                    "also write the cactus decomposition JSON");

    // certify
    auto* certify = app.add_subcommand("certify", "search for an elimination certificate");
    std::string in_path, target = "complement", strategy = "backtracking", budget_text = "10M";
    std::string cert_path;
    int r = 2;
    bool strict = false;
    certify->add_option("-i,--input", in_path, "graph JSON (- for stdin)")->required();
    certify->add_option("-r", r, "clutter order r")->check(CLI::PositiveNumber);
    certify->add_option("--target", target, "direct|complement");
    certify->add_option("--strategy", strategy, "greedy|backtracking");
    certify->add_option("--budget", budget_text, "node-expansion budget (suffixes K/M/G)");
    certify->add_option("--emit", cert_path, "write certificate JSON here");
    certify->add_flag("--strict", strict, "exit 3 when the budget runs out");

    // verify-cert
    auto* verify_cert = app.add_subcommand("verify-cert", "replay a certificate");
    std::string vc_in, vc_cert, vc_target = "complement";
    int vc_r = 2;
    verify_cert->add_option("-i,--input", vc_in, "graph JSON (- for stdin)")->required();
    verify_cert->add_option("-r", vc_r, "clutter order r")->check(CLI::PositiveNumber);
    verify_cert->add_option("--target", vc_target, "direct|complement");
    verify_cert->add_option("--cert", vc_cert, "certificate JSON (- for stdin)")->required();

    // ideal
    auto* ideal_cmd = app.add_subcommand("ideal", "construct I_r(G)^q and run exchange checks");
    std::string ideal_graph, ideal_out, ideal_check, order_csv;
    int ideal_r = 2, ideal_q = 1;
    ideal_cmd->add_option("--graph", ideal_graph, "graph JSON")->required();
    ideal_cmd->add_option("-r", ideal_r, "clutter order r")->check(CLI::PositiveNumber);
    ideal_cmd->add_option("--power", ideal_q, "power q")->check(CLI::PositiveNumber);
    ideal_cmd->add_option("--check", ideal_check,
                          "polymatroidal|weakly-polymatroidal|linear-quotients");
    ideal_cmd->add_option("--order", order_csv, "variable order for the weak exchange check");
    ideal_cmd->add_option("-o,--output", ideal_out, "write ideal JSON here");

    // betti
    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table as CSV");
    std::string betti_ideal, betti_graph, betti_field = "gf2", betti_method = "auto";
    int betti_r = 2, betti_q = 1;
    auto* betti_ideal_opt = betti_cmd->add_option("--ideal", betti_ideal, "ideal JSON");
    betti_cmd->add_option("--graph", betti_graph, "graph JSON (builds I_r(G)^q)")
        ->excludes(betti_ideal_opt);
    betti_cmd->add_option("-r", betti_r, "clutter order r");
    betti_cmd->add_option("--power", betti_q, "power q");
    betti_cmd->add_option("--field", betti_field, "gf2|gf<p>|rationals");
    betti_cmd->add_option("--method", betti_method, "auto|hochster|koszul");

    // reg
    auto* reg_cmd = app.add_subcommand("reg", "regularity and linearity of I_r(G)^q");
    std::string reg_graph, reg_field = "gf2";
    int reg_r = 2, reg_q = 1;
    reg_cmd->add_option("--graph", reg_graph, "graph JSON")->required();
    reg_cmd->add_option("-r", reg_r, "clutter order r")->check(CLI::PositiveNumber);
    reg_cmd->add_option("--power", reg_q, "power q")->check(CLI::PositiveNumber);
    reg_cmd->add_option("--field", reg_field, "gf2|gf<p>|rationals");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
    std::vector<std::string> check_names;
    std::string verdict_path;
    bool run_everything = false;
    int vmax_n = -1, vmax_m = -1, vmax_r = -1, vmax_q = -1, vinstances = -1;
    std::string vbudget = "10M";
    verify_cmd->add_option("--check", check_names, "theorem ids, e.g. T4.13");
    verify_cmd->add_flag("--all", run_everything, "run every check");
    verify_cmd->add_option("--max-n", vmax_n, "size cap");
    verify_cmd->add_option("--max-m", vmax_m, "second size cap (grids)");
    verify_cmd->add_option("--max-r", vmax_r, "clutter order cap");
    verify_cmd->add_option("--max-q", vmax_q, "power cap");
    verify_cmd->add_option("--instances", vinstances, "instance count for random families");
    verify_cmd->add_option("--budget", vbudget, "search budget (suffixes K/M/G)");
    verify_cmd->add_option("--json", verdict_path, "write verdicts JSON here");
    bool verify_strict = false;
    verify_cmd->add_flag("--strict", verify_strict, "exit 3 when any check is inconclusive");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, gen_args, seed, with_c5, out_path, decomposition_path);

        if (certify->parsed()) {
            Graph g = graph_from_json(slurp(in_path));
            Clutter c = target_clutter(g, r, target);
            SearchStrategy strat = strategy == "greedy" ? SearchStrategy::greedy
                                                        : SearchStrategy::backtracking;
            SearchResult res = find_elimination_order(c, strat, parse_budget(budget_text));
            if (res.outcome == SearchOutcome::found) {
                if (auto violation = verify_certificate(c, *res.certificate)) {
                    std::cerr << "internal error: certificate failed replay: "
                              << violation->reason << "\n";
                    return 1;
                }
                emit(cert_path.empty() ? "-" : cert_path,
                     certificate_to_json(c, *res.certificate));
                std::cerr << "chordal: certificate with " << res.certificate->steps.size()
                          << " steps after " << res.expansions << " expansions\n";
            } else if (res.outcome == SearchOutcome::refuted) {
                std::cerr << "refuted: no simplicial elimination order exists ("
                          << res.expansions << " expansions)\n";
            } else {
                std::cerr << "exhausted: budget ran out after " << res.expansions
                          << " expansions\n";
            }
            return outcome_exit(res.outcome, strict);
        }

        if (verify_cert->parsed()) {
            Graph g = graph_from_json(slurp(vc_in));
            Clutter c = target_clutter(g, vc_r, vc_target);
            EliminationCertificate cert = certificate_from_json(c, slurp(vc_cert));
            if (auto violation = verify_certificate(c, cert)) {
                std::cerr << "invalid certificate at step " << violation->step << ": "
                          << violation->reason << "\n";
                return 1;
            }
            std::cerr << "certificate ok (" << cert.steps.size() << " steps)\n";
            return 0;
        }

        if (ideal_cmd->parsed()) {
            Graph g = graph_from_json(slurp(ideal_graph));
            MonomialIdeal ideal = power(connected_ideal(g, ideal_r), ideal_q);
            if (!ideal_out.empty() || ideal_check.empty()) emit(ideal_out, ideal_to_json(ideal));
            if (ideal_check.empty()) return 0;
            if (ideal_check == "polymatroidal") {
                auto witness = polymatroidal_witness(ideal);
                std::cout << "polymatroidal=" << (witness ? "false" : "true") << "\n";
                if (witness)
                    std::cout << "witness: u=" << ideal.gens[witness->u].to_string()
                              << " v=" << ideal.gens[witness->v].to_string()
                              << " var=x" << witness->var << "\n";
                return witness ? 1 : 0;
            }
            if (ideal_check == "weakly-polymatroidal") {
                std::vector<int> order = order_csv.empty() ? identity_order(ideal.n)
                                                           : parse_int_csv(order_csv);
                auto witness = weakly_polymatroidal_witness(ideal, order);
                std::cout << "weakly_polymatroidal=" << (witness ? "false" : "true") << "\n";
                return witness ? 1 : 0;
            }
            if (ideal_check == "linear-quotients") {
                auto res = has_linear_quotients(ideal);
                if (auto* failure = std::get_if<LinearQuotientFailure>(&res)) {
                    std::cout << "linear_quotients="
                              << (failure->refuted ? "refuted" : "exhausted") << "\n";
                    return failure->refuted ? 1 : 3;
                }
                std::cout << "linear_quotients=true\n";
                return 0;
            }
            throw CLI::ValidationError("unknown --check " + ideal_check);
        }

        if (betti_cmd->parsed()) {
            MonomialIdeal ideal;
            if (!betti_ideal.empty())
                ideal = ideal_from_json(slurp(betti_ideal));
            else if (!betti_graph.empty())
                ideal = power(connected_ideal(graph_from_json(slurp(betti_graph)), betti_r),
                              betti_q);
            else
                throw CLI::ValidationError("betti needs --ideal or --graph");
            FieldSpec field = FieldSpec::parse(betti_field);
            BettiTable table;
            if (betti_method == "hochster" || (betti_method == "auto" && ideal.all_squarefree()))
                table = betti_squarefree(ideal, field);
            else
                table = betti_general(ideal, field);
            std::cout << table.to_csv();
            auto reg = table.regularity();
            auto degree = ideal.degree_pure();
            bool linear = ideal.zero() || (reg && degree && *reg == *degree);
            std::cout << "reg=" << (reg ? std::to_string(*reg) : "undefined")
                      << " linear=" << (linear ? "true" : "false") << " field="
                      << field.to_string() << "\n";
            return 0;
        }

        if (reg_cmd->parsed()) {
            Graph g = graph_from_json(slurp(reg_graph));
            MonomialIdeal ideal = power(connected_ideal(g, reg_r), reg_q);
            FieldSpec field = FieldSpec::parse(reg_field);
            auto reg = regularity(ideal, field);
            bool linear = has_linear_resolution(ideal, field);
            std::cout << "reg=" << (reg ? std::to_string(*reg) : "undefined")
                      << " linear=" << (linear ? "true" : "false") << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::vector<Verdict> verdicts;
            bool all_pass = true, covered = true, any_inconclusive = false;
            if (run_everything) {
                SuiteReport report = run_all(parse_budget(vbudget));
                verdicts = std::move(report.verdicts);
                all_pass = report.all_pass;
                covered = report.covered;
            } else {
                if (check_names.empty())
                    throw CLI::ValidationError("verify needs --check or --all");
                for (const auto& name : check_names) {
                    auto id = theorem_from_name(name);
                    if (!id) throw CLI::ValidationError("unknown theorem id " + name);
                    CheckSpec spec;
                    spec.id = *id;
                    spec.max_n = vmax_n;
                    spec.max_m = vmax_m;
                    spec.max_r = vmax_r;
                    spec.max_q = vmax_q;
                    spec.instances = vinstances;
                    spec.budget = parse_budget(vbudget);
                    for (const auto& v : run_check(spec)) verdicts.push_back(v);
                }
                for (const auto& v : verdicts) all_pass &= v.outcome != Outcome::fail;
            }
            for (const auto& v : verdicts)
                any_inconclusive |= v.outcome == Outcome::inconclusive;
            std::string json = verdicts_to_json(verdicts);
            if (!verdict_path.empty()) write_file(verdict_path, json);
            int passes = 0, fails = 0;
            for (const auto& v : verdicts) {
                if (v.outcome == Outcome::pass) ++passes;
                if (v.outcome == Outcome::fail) {
                    ++fails;
                    std::cerr << "FAIL " << theorem_name(v.id) << " [" << v.instance
                              << "]: " << v.witness << "\n";
                }
            }
            std::cout << "verdicts=" << verdicts.size() << " pass=" << passes
                      << " fail=" << fails << (covered ? "" : " (coverage incomplete)") << "\n";
            if (fails || !all_pass) {
                if (verdict_path.empty()) write_file("witness.json", json);
                return 1;
            }
            return any_inconclusive && verify_strict ? 3 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
