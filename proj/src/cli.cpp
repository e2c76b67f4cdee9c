#include "rgc/cli.hpp"
#include "rgc/closure.hpp"
#include "rgc/emsol.hpp"
#include "rgc/errors.hpp"
#include "rgc/families.hpp"
#include "rgc/graph.hpp"
#include "rgc/heap_sat.hpp"
#include "rgc/hom.hpp"
#include "rgc/implication.hpp"
#include "rgc/parallel.hpp"
#include "rgc/paths.hpp"
#include "rgc/pcp.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rgc {

namespace {

    using nlohmann::json;

    constexpr int exit_ok = 0;
    constexpr int exit_negative = 1;
    constexpr int exit_usage = 2;
    constexpr int exit_unknown = 3;

    int eval_node_cap()
    {
        if (const char * env = std::getenv("RGC_MAX_EVAL_NODES"))
            return std::max(0, std::atoi(env));
        return 6;
    }

    void put_graph(std::ostream & out, const Graph & g, const std::string & path)
    {
        if (path.empty())
            out << serialize(g);
        else
            save_graph(g, path);
    }

    json hom_to_json(const Graph & src, const Graph & dst, const Homomorphism & h)
    {
        json map = json::object();
        for (int v = 0; v < src.node_count(); ++v)
            map[src.id(v)] = dst.id(h.mapping[v]);
        return map;
    }

    std::string params_to_string(const CorresponderParams & p)
    {
        auto list = [](const std::vector<int> & xs) {
            std::string s;
            for (std::size_t i = 0; i < xs.size(); ++i)
                s += (i ? "," : "") + std::to_string(xs[i]);
            return s;
        };
        return "CG(n=" + std::to_string(p.n) + ",k=" + std::to_string(p.k) +
            ",u=[" + list(p.u) + "],l=[" + list(p.l) + "])";
    }

    struct CliState {
        bool json_out = false;
        int threads = 1;
        std::string out_path;
    };

}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"regular graph constraints toolkit"};
    app.require_subcommand(1);

    CliState state;
    app.add_flag("--json", state.json_out, "machine-readable output");
    app.add_option("--threads", state.threads, "worker threads for the partitioned searches")
        ->default_val(1);

    // classify
    std::string classify_file;
    auto * cmd_classify = app.add_subcommand("classify", "classify a graph");
    cmd_classify->add_option("file", classify_file)->required();

    // hom
    std::string hom_a, hom_b;
    auto * cmd_hom = app.add_subcommand("hom", "find a homomorphism A -> B");
    cmd_hom->add_option("A", hom_a)->required();
    cmd_hom->add_option("B", hom_b)->required();

    // sat
    std::string sat_file;
    auto * cmd_sat = app.add_subcommand("sat", "satisfiability over heaps");
    cmd_sat->add_option("file", sat_file)->required();

    // product / sum
    std::string bin_a, bin_b;
    auto * cmd_product = app.add_subcommand("product", "conjunction via product");
    cmd_product->add_option("A", bin_a)->required();
    cmd_product->add_option("B", bin_b)->required();
    cmd_product->add_option("-o,--output", state.out_path);
    auto * cmd_sum = app.add_subcommand("sum", "disjunction via sum of orable graphs");
    cmd_sum->add_option("A", bin_a)->required();
    cmd_sum->add_option("B", bin_b)->required();
    cmd_sum->add_option("-o,--output", state.out_path);

    // gen
    auto * cmd_gen = app.add_subcommand("gen", "generate a family member");
    cmd_gen->require_subcommand(1);
    int grid_m = 1, grid_n = 1;
    auto * gen_grid_cmd = cmd_gen->add_subcommand("grid");
    gen_grid_cmd->add_option("--m", grid_m)->required();
    gen_grid_cmd->add_option("--n", grid_n)->required();
    gen_grid_cmd->add_option("-o,--output", state.out_path);
    CorresponderParams cg_params;
    auto * gen_cg_cmd = cmd_gen->add_subcommand("cg");
    gen_cg_cmd->add_option("--n", cg_params.n)->required();
    gen_cg_cmd->add_option("--k", cg_params.k)->required();
    gen_cg_cmd->add_option("--u", cg_params.u, "split points u_1..u_{k-1}");
    gen_cg_cmd->add_option("--l", cg_params.l, "split points l_1..l_{k-1}");
    gen_cg_cmd->add_option("-o,--output", state.out_path);
    std::string list_word;
    auto * gen_list_cmd = cmd_gen->add_subcommand("list");
    gen_list_cmd->add_option("--word", list_word);
    gen_list_cmd->add_option("-o,--output", state.out_path);

    // enum-heaps
    int enum_max = 0;
    bool enum_labeled = false;
    std::size_t enum_limit = std::numeric_limits<std::size_t>::max();
    auto * cmd_enum = app.add_subcommand("enum-heaps", "stream heaps up to a size bound");
    cmd_enum->add_option("--max", enum_max)->required();
    cmd_enum->add_flag("--labeled", enum_labeled, "labeled enumeration (no dedupe)");
    cmd_enum->add_option("--limit", enum_limit);

    // slices
    std::string slices_file, slices_regex;
    auto * cmd_slices = app.add_subcommand("slices", "slice-language membership test");
    cmd_slices->add_option("file", slices_file)->required();
    cmd_slices->add_option("--regex", slices_regex)->required();

    // pcp
    auto * cmd_pcp = app.add_subcommand("pcp", "correspondence-problem toolkit");
    cmd_pcp->require_subcommand(1);
    std::string pcp_file;
    int pcp_max_len = 1, pcp_n_max = 2, pcp_k_max = 2;
    auto * pcp_solve = cmd_pcp->add_subcommand("solve");
    pcp_solve->add_option("file", pcp_file)->required();
    pcp_solve->add_option("--max-len", pcp_max_len)->required();
    auto * pcp_reduce = cmd_pcp->add_subcommand("reduce");
    pcp_reduce->add_option("file", pcp_file)->required();
    pcp_reduce->add_option("-o,--output", state.out_path);
    auto * pcp_search = cmd_pcp->add_subcommand("search");
    pcp_search->add_option("file", pcp_file)->required();
    pcp_search->add_option("--n-max", pcp_n_max)->required();
    pcp_search->add_option("--k-max", pcp_k_max)->required();

    // emsol
    auto * cmd_emsol = app.add_subcommand("emsol", "logic encodings");
    cmd_emsol->require_subcommand(1);
    std::string emsol_graph, emsol_formula;
    auto * emsol_emit = cmd_emsol->add_subcommand("emit");
    emsol_emit->add_option("graph", emsol_graph)->required();
    auto * emsol_eval = cmd_emsol->add_subcommand("eval");
    emsol_eval->add_option("graph", emsol_graph)->required();
    emsol_eval->add_option("formula", emsol_formula)->required();

    // implies / equiv / gadget
    std::string impl_a, impl_b;
    int impl_max = 4;
    auto * cmd_implies = app.add_subcommand("implies", "implication over heaps");
    cmd_implies->add_option("G1", impl_a)->required();
    cmd_implies->add_option("G2", impl_b)->required();
    cmd_implies->add_option("--max", impl_max)->required();
    auto * cmd_equiv = app.add_subcommand("equiv", "equivalence over heaps, bounded");
    cmd_equiv->add_option("G1", impl_a)->required();
    cmd_equiv->add_option("G2", impl_b)->required();
    cmd_equiv->add_option("--max", impl_max)->required();
    auto * cmd_gadget = app.add_subcommand("gadget", "program-checking gadget");
    cmd_gadget->add_option("G1", impl_a)->required();
    cmd_gadget->add_option("G2", impl_b)->required();
    cmd_gadget->add_option("-o,--output", state.out_path);

    std::vector<const char *> argv;
    argv.push_back("rgc");
    for (auto & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp & e) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (cmd_classify->parsed()) {
            auto c = classify(load_graph(classify_file));
            if (state.json_out)
                out << json{{"heap", c.is_heap}, {"tree", c.is_tree},
                           {"list", c.is_list}, {"orable", c.is_orable}}
                           .dump() << "\n";
            else
                out << "heap " << (c.is_heap ? "true" : "false") << "\n"
                    << "tree " << (c.is_tree ? "true" : "false") << "\n"
                    << "list " << (c.is_list ? "true" : "false") << "\n"
                    << "orable " << (c.is_orable ? "true" : "false") << "\n";
            return exit_ok;
        }

        if (cmd_hom->parsed()) {
            Graph a = load_graph(hom_a), b = load_graph(hom_b);
            auto h = state.threads > 1
                ? [&]() -> std::optional<Homomorphism> {
                      auto found = enumerate_homs_parallel(a, b, state.threads, 1);
                      if (found.empty())
                          return std::nullopt;
                      return found.front();
                  }()
                : find_hom(a, b);
            if (h) {
                if (state.json_out)
                    out << json{{"verdict", "hom"}, {"witness", hom_to_json(a, b, *h)}}.dump()
                        << "\n";
                else
                    out << "HOM\n" << render_hom(a, b, *h);
                return exit_ok;
            }
            if (state.json_out)
                out << json{{"verdict", "no-hom"}}.dump() << "\n";
            else
                out << "NO-HOM\n";
            return exit_negative;
        }

        if (cmd_sat->parsed()) {
            auto result = sat_over_heaps(load_graph(sat_file));
            if (state.json_out) {
                json trace = json::array();
                for (auto & step : result.trace)
                    trace.push_back({{"node", step.node}, {"reason", to_string(step.reason)}});
                json j{{"verdict", result.satisfiable ? "sat" : "unsat"}, {"trace", trace}};
                if (result.witness)
                    j["witness"] = serialize(*result.witness);
                out << j.dump() << "\n";
            }
            else if (result.satisfiable) {
                out << "SAT\n" << serialize(*result.witness);
            }
            else {
                out << "UNSAT\n";
                for (auto & step : result.trace)
                    out << "removed " << step.node << " " << to_string(step.reason) << "\n";
            }
            return result.satisfiable ? exit_ok : exit_negative;
        }

        if (cmd_product->parsed() || cmd_sum->parsed()) {
            Graph a = load_graph(bin_a), b = load_graph(bin_b);
            Graph c = cmd_product->parsed() ? product(a, b) : sum(a, b);
            put_graph(out, c, state.out_path);
            return exit_ok;
        }

        if (gen_grid_cmd->parsed()) {
            put_graph(out, gen_grid(grid_m, grid_n), state.out_path);
            return exit_ok;
        }
        if (gen_cg_cmd->parsed()) {
            put_graph(out, gen_cg(cg_params), state.out_path);
            return exit_ok;
        }
        if (gen_list_cmd->parsed()) {
            put_graph(out, gen_list(list_word), state.out_path);
            return exit_ok;
        }

        if (cmd_enum->parsed()) {
            std::size_t emitted = 0;
            for_each_heap({enum_max, ! enum_labeled}, [&](const Graph & h) {
                out << serialize(h) << "--\n";
                return ++emitted < enum_limit;
            });
            return exit_ok;
        }

        if (cmd_slices->parsed()) {
            Graph g = load_graph(slices_file);
            Regex e = parse_regex(slices_regex);
            auto witness = find_slice_matching(g, e);
            if (state.json_out) {
                json j{{"verdict", witness ? "yes" : "no"}};
                if (witness)
                    j["slice"] = render_path(g, *witness);
                out << j.dump() << "\n";
            }
            else if (witness)
                out << "YES\n" << render_path(g, *witness) << "\n";
            else
                out << "NO\n";
            return witness ? exit_ok : exit_negative;
        }

        if (pcp_solve->parsed()) {
            auto inst = PcpInstance::load(pcp_file);
            auto sol = brute_solve_pcp(inst, pcp_max_len);
            if (sol) {
                if (state.json_out)
                    out << json{{"verdict", "solution"}, {"indices", sol->indices}}.dump() << "\n";
                else {
                    out << "SOLUTION";
                    for (int t : sol->indices)
                        out << " " << t;
                    out << "\n";
                }
                return exit_ok;
            }
            if (state.json_out)
                out << json{{"verdict", "no-solution"}, {"max_len", pcp_max_len}}.dump() << "\n";
            else
                out << "NO-SOLUTION (max-len " << pcp_max_len << ")\n";
            return exit_unknown;
        }

        if (pcp_reduce->parsed()) {
            put_graph(out, build_reduction(PcpInstance::load(pcp_file)), state.out_path);
            return exit_ok;
        }

        if (pcp_search->parsed()) {
            auto inst = PcpInstance::load(pcp_file);
            auto witness = state.threads > 1
                ? bounded_cg_search_parallel(inst, pcp_n_max, pcp_k_max, state.threads)
                : bounded_cg_search(inst, pcp_n_max, pcp_k_max);
            if (witness) {
                Graph reduction = build_reduction(inst);
                if (state.json_out)
                    out << json{{"verdict", "found"},
                               {"params", params_to_string(witness->params)},
                               {"witness", hom_to_json(witness->cg, reduction, witness->hom)}}
                               .dump() << "\n";
                else
                    out << "FOUND " << params_to_string(witness->params) << "\n"
                        << render_hom(witness->cg, reduction, witness->hom);
                return exit_ok;
            }
            if (state.json_out)
                out << json{{"verdict", "not-found"}, {"n_max", pcp_n_max},
                           {"k_max", pcp_k_max}}.dump() << "\n";
            else
                out << "NOT-FOUND (n<=" << pcp_n_max << ",k<=" << pcp_k_max << ")\n";
            return exit_unknown;
        }

        if (emsol_emit->parsed()) {
            out << render_formula(emit_formula(load_graph(emsol_graph)));
            return exit_ok;
        }

        if (emsol_eval->parsed()) {
            Graph g = load_graph(emsol_graph);
            std::ifstream in(emsol_formula);
            if (! in)
                throw std::runtime_error("cannot open formula file: " + emsol_formula);
            std::ostringstream buf;
            buf << in.rdbuf();
            bool sat = eval_formula(g, parse_formula(buf.str()), eval_node_cap());
            if (state.json_out)
                out << json{{"verdict", sat ? "yes" : "no"}}.dump() << "\n";
            else
                out << (sat ? "YES" : "NO") << "\n";
            return sat ? exit_ok : exit_negative;
        }

        if (cmd_implies->parsed()) {
            Graph a = load_graph(impl_a), b = load_graph(impl_b);
            ImpliesOptions opts;
            opts.max_plain_nodes = impl_max;
            opts.threads = state.threads;
            auto verdict = check_implies(a, b, opts);
            switch (verdict.kind) {
            case ImpliesVerdict::Kind::valid_sufficient:
                if (state.json_out)
                    out << json{{"verdict", "valid"}, {"reason", "sufficient"}}.dump() << "\n";
                else
                    out << "VALID(sufficient)\n";
                return exit_ok;
            case ImpliesVerdict::Kind::counterexample:
                if (state.json_out) {
                    json j{{"verdict", "counterexample"},
                        {"heap", serialize(*verdict.counterexample)}};
                    if (verdict.certificate_regex)
                        j["certificate_regex"] = *verdict.certificate_regex;
                    out << j.dump() << "\n";
                }
                else
                    out << "COUNTEREXAMPLE\n" << serialize(*verdict.counterexample);
                return exit_negative;
            case ImpliesVerdict::Kind::unknown:
                if (state.json_out)
                    out << json{{"verdict", "unknown"}, {"bound", verdict.bound}}.dump() << "\n";
                else
                    out << "UNKNOWN(bound " << verdict.bound << ")\n";
                return exit_unknown;
            }
        }

        if (cmd_equiv->parsed()) {
            Graph a = load_graph(impl_a), b = load_graph(impl_b);
            if (implies_sufficient(a, b) && implies_sufficient(b, a)) {
                if (state.json_out)
                    out << json{{"verdict", "equivalent"}, {"reason", "sufficient"}}.dump() << "\n";
                else
                    out << "EQUIVALENT(sufficient)\n";
                return exit_ok;
            }
            auto verdict = equiv_bounded(a, b, impl_max);
            if (! verdict.equivalent) {
                if (state.json_out)
                    out << json{{"verdict", "counterexample"},
                               {"direction", verdict.direction == 1 ? "1->2" : "2->1"},
                               {"heap", serialize(*verdict.counterexample)}}
                               .dump() << "\n";
                else
                    out << "COUNTEREXAMPLE (direction "
                        << (verdict.direction == 1 ? "1->2" : "2->1") << ")\n"
                        << serialize(*verdict.counterexample);
                return exit_negative;
            }
            if (state.json_out)
                out << json{{"verdict", "equivalent-up-to"}, {"bound", impl_max}}.dump() << "\n";
            else
                out << "EQUIVALENT-UP-TO(bound " << impl_max << ")\n";
            return exit_unknown;
        }

        if (cmd_gadget->parsed()) {
            put_graph(out, invariant_gadget(load_graph(impl_a), load_graph(impl_b)),
                state.out_path);
            return exit_ok;
        }
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    err << "error: no subcommand\n";
    return exit_usage;
}

}
