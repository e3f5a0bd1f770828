#include "untangle/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>

#include "untangle/almost_planar.hpp"
#include "untangle/blocks.hpp"
#include "untangle/error.hpp"
#include "untangle/general.hpp"
#include "untangle/generators.hpp"
#include "untangle/io.hpp"
#include "untangle/oracle.hpp"
#include "untangle/reductions.hpp"
#include "untangle/sequence.hpp"
#include "untangle/svg.hpp"

namespace untangle {

namespace {

std::string edge_name(const Graph& g, Edge e) { return g.name(e.a) + "-" + g.name(e.b); }

int cmd_check(const std::string& file, std::ostream& out) {
    const auto d = parse_drawing(read_file(file));
    const auto cl = classify(d);
    out << "vertices " << d.size() << '\n';
    out << "edges " << d.graph().edge_count() << '\n';
    out << "crossings " << cl.crossing_pairs.size() << '\n';
    out << "outerplanar " << (is_outerplanar(d.graph()) ? "yes" : "no") << '\n';
    out << "kind " << to_string(cl.kind) << '\n';
    if (cl.kind == DrawingKind::AlmostPlanar) {
        out << "candidates";
        for (const auto& sp : cl.candidates) out << ' ' << edge_name(d.graph(), sp.edge);
        out << '\n';
    }
    return kExitOk;
}

Untangling run_algorithm(const CircularDrawing& d, const std::string& algorithm, int oracle_max_n) {
    if (algorithm == "general") return untangle_general(d);
    if (algorithm == "one-side") return one_side_untangle(d);
    if (algorithm == "edge-fixed") return edge_fixed_untangle(d);
    if (algorithm == "min") return min_untangle(d);
    const auto ex = exact_min_untangle(d, oracle_max_n);
    std::vector<bool> fixed(d.size(), false);
    for (VertexId v : ex.fixed) fixed[v] = true;
    return untangling_to(d, ex.target, fixed);
}

int cmd_untangle(const std::string& file, const std::string& algorithm, int oracle_max_n, std::ostream& out,
                 std::ostream& err) {
    const auto d = parse_drawing(read_file(file));
    const auto u = run_algorithm(d, algorithm, oracle_max_n);
    out << serialize_moves(d, u);
    const auto rep = verify_untangling(d, u);
    err << "algorithm=" << algorithm << " moved=" << rep.moved_count << " planar=" << (rep.planar_ok ? "true" : "false")
        << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& drawing, const std::string& moves, std::ostream& out) {
    const auto d = parse_drawing(read_file(drawing));
    const auto u = parse_moves(read_file(moves), d.graph());
    const auto rep = verify_untangling(d, u);
    out << "movedCount=" << rep.moved_count << '\n';
    out << "fixedSetOk=" << (rep.fixed_set_ok ? "true" : "false") << '\n';
    out << "planarOk=" << (rep.planar_ok ? "true" : "false") << '\n';
    return rep.planar_ok ? kExitOk : kExitNotPlanar;
}

CircularDrawing es_tight_drawing(int s, int r) {
    const auto perm = es_tight_cyclic(s, r);
    const int n = static_cast<int>(perm.size());
    Graph g = Graph::numbered(n);
    for (int i = 0; i < n && n >= 2; ++i) {
        if (n == 2 && i == 1) break;
        g.add_edge(i, (i + 1) % n);
    }
    return CircularDrawing(std::move(g), std::vector<VertexId>(perm.begin(), perm.end()));
}

int cmd_render(const std::string& file, const std::string& moves, bool after, const std::string& output,
               std::ostream& out) {
    auto d = parse_drawing(read_file(file));
    SvgOptions opt;
    if (!moves.empty()) {
        const auto u = parse_moves(read_file(moves), d.graph());
        opt.moved = u.moved_vertices();
        if (after) d = apply(d, u);
    }
    const auto svg = render_svg(d, opt);
    if (output.empty() || output == "-") {
        out << svg;
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw ParseError("cannot write '" + output + "'");
        f << svg;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Untangle circular drawings of outerplanar graphs"};
    app.require_subcommand(1);
    std::function<int()> action;

    int oracle_max_n = kDefaultOracleMaxN;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "Print crossing count and classification");
    std::string check_file;
    check->add_option("file", check_file, "Drawing file")->required();
    check->callback([&] { action = [&] { return cmd_check(check_file, out); }; });

    auto* untangle = app.add_subcommand("untangle", "Print a moves file that untangles the drawing");
    std::string untangle_file, algorithm = "min";
    untangle->add_option("file", untangle_file, "Drawing file")->required();
    untangle->add_option("--algorithm,-a", algorithm, "Algorithm")
        ->check(CLI::IsMember({"general", "one-side", "edge-fixed", "min", "exact"}));
    untangle->add_option("--oracle-max-n", oracle_max_n, "Largest n the exact oracle accepts");
    untangle->callback(
        [&] { action = [&] { return cmd_untangle(untangle_file, algorithm, oracle_max_n, out, err); }; });

    auto* verify = app.add_subcommand("verify", "Apply a moves file and report the result");
    std::string verify_drawing, verify_moves;
    verify->add_option("drawing", verify_drawing, "Drawing file")->required();
    verify->add_option("moves", verify_moves, "Moves file")->required();
    verify->callback([&] { action = [&] { return cmd_verify(verify_drawing, verify_moves, out); }; });

    auto* generate = app.add_subcommand("generate", "Print a generated drawing or instance");
    generate->require_subcommand(1);
    generate->add_option("--seed", seed, "Random seed");

    auto* fig5 = generate->add_subcommand("fig5", "Even cycle with shift n/2-1");
    int fig5_n = 6;
    fig5->add_option("--n,-n", fig5_n, "Number of vertices")->required();
    fig5->callback([&] { action = [&] { return out << serialize_drawing(gen_fig5(fig5_n)), kExitOk; }; });

    auto* es = generate->add_subcommand("es-tight", "Cycle drawn by a cyclic permutation without long monotone runs");
    int es_s = 2, es_r = 2;
    es->add_option("--s", es_s, "Increasing bound")->required();
    es->add_option("--r", es_r, "Decreasing bound")->required();
    es->callback([&] { action = [&] { return out << serialize_drawing(es_tight_drawing(es_s, es_r)), kExitOk; }; });

    auto* tight = generate->add_subcommand("tight-general", "Cycle drawing meeting the general bound");
    int tight_n = 6;
    tight->add_option("--n,-n", tight_n, "Number of vertices")->required();
    tight->callback([&] { action = [&] { return out << serialize_drawing(gen_tight_general(tight_n)), kExitOk; }; });

    auto* random = generate->add_subcommand("random", "Seeded random drawing");
    RandomOptions ropt;
    std::string profile = "almost-planar";
    random->add_option("--n,-n", ropt.n, "Number of vertices")->required();
    random->add_option("--profile", profile, "Profile")
        ->check(CLI::IsMember({"outerplanar-order-perturbed", "almost-planar", "case-2-2", "disconnected"}));
    random->add_option("--perturb,-k", ropt.perturb, "Relocations for outerplanar-order-perturbed");
    random->add_option("--extra", ropt.extra, "Probability of keeping a non-tree edge");
    random->add_option("--seed", seed, "Random seed");
    random->callback([&] {
        action = [&] {
            ropt.seed = seed;
            ropt.profile = *parse_profile(profile);
            return out << serialize_drawing(gen_random(ropt)), kExitOk;
        };
    });

    auto* r3p = generate->add_subcommand("reduce-3p", "3-Partition instance file to Dist-ICOR instance file");
    std::string r3p_file;
    r3p->add_option("file", r3p_file, "3p instance file")->required();
    r3p->callback([&] {
        action = [&] {
            const auto red = reduce_3p_to_disticor(parse_3p(read_file(r3p_file)));
            return out << serialize_icor(red.instance), kExitOk;
        };
    });

    auto* ricor = generate->add_subcommand("reduce-icor", "Dist-ICOR instance file to drawing with budget K");
    std::string ricor_file;
    ricor->add_option("file", ricor_file, "icor instance file")->required();
    ricor->callback([&] {
        action = [&] {
            const auto cu = reduce_disticor_to_cu(parse_icor(read_file(ricor_file)));
            return out << serialize_drawing(cu.drawing, "K=" + std::to_string(cu.K)), kExitOk;
        };
    });

    auto* render = app.add_subcommand("render", "Write an SVG chord diagram");
    std::string render_file, render_moves, render_out;
    bool render_after = false;
    render->add_option("file", render_file, "Drawing file")->required();
    render->add_option("--moves", render_moves, "Moves file whose vertices are highlighted");
    render->add_flag("--after", render_after, "Draw the drawing after applying the moves");
    render->add_option("-o,--output", render_out, "Output path (- for stdout)")->required();
    render->callback(
        [&] { action = [&] { return cmd_render(render_file, render_moves, render_after, render_out, out); }; });

    std::vector<std::string> argv_store{"untangle"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }
    try {
        return action ? action() : kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const TooLarge& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace untangle
