#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "untangle/cli.hpp"
#include "untangle/error.hpp"
#include "untangle/generators.hpp"
#include "untangle/io.hpp"
#include "untangle/svg.hpp"

using namespace untangle;
using namespace testing;

namespace {

const char* kFig5 =
    "vertices 6\n"
    "order v2 v4 v6 v5 v3 v1\n"
    "edge v2 v3\n"
    "edge v2 v1\n"
    "edge v4 v5\n"
    "edge v4 v3\n"
    "edge v6 v5\n"
    "edge v6 v1\n";

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("untangle-test-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = (path / name).string();
        std::ofstream(p) << text;
        return p;
    }
};

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("drawing round trip") {
    const auto d = parse_drawing(kFig5);
    CHECK(d == gen_fig5(6));
    CHECK(serialize_drawing(d) == kFig5);
    CHECK(serialize_drawing(gen_fig5(6)) == kFig5);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto r = gen_random({20, seed, RandomProfile::AlmostPlanar});
        const auto text = serialize_drawing(r);
        CHECK(parse_drawing(text) == r);
        CHECK(serialize_drawing(parse_drawing(text)) == text);
    }
}

TEST_CASE("parser tolerates whitespace and comments") {
    const auto d = parse_drawing("# a comment\n\n  vertices   3 \norder\ta b c\n  # another\nedge a b\nedge b c\r\n");
    CHECK(d.size() == 3);
    CHECK(d.graph().edge_count() == 2);
    CHECK(d.graph().name(0) == "a");
    CHECK(serialize_drawing(d, "hello") == "# hello\nvertices 3\norder a b c\nedge a b\nedge b c\n");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_drawing("order a b\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 3\norder a b\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a a\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a b\nedge a c\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a b\nedge a b\nedge b a\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a b\nedge a a\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices x\norder a b\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a b\narc a b\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\nvertices 2\norder a b\n"), ParseError);
    CHECK_THROWS_AS(parse_drawing("vertices 2\norder a b\nedge a\n"), ParseError);
}

TEST_CASE("moves round trip") {
    const auto d = parse_drawing(kFig5);
    const Untangling u{{{d.graph().id("v1"), d.graph().id("v2")}, {d.graph().id("v4"), d.graph().id("v5")}}};
    const auto text = serialize_moves(d, u);
    CHECK(text == "move v1 after v2\nmove v4 after v5\n# moved=2 fixed=v2,v6,v5,v3\n");
    CHECK(parse_moves(text, d.graph()).moves == u.moves);
    CHECK_THROWS_AS(parse_moves("move v1 before v2\n", d.graph()), ParseError);
    CHECK_THROWS_AS(parse_moves("move v9 after v2\n", d.graph()), ParseError);
    CHECK_THROWS_AS(parse_moves("move v2 after v2\n", d.graph()), ParseError);
}

TEST_CASE("instance files") {
    const auto p = parse_3p("# yes\n3p 2 20\n 6 7 7 6 6 8\n");
    CHECK(p.m == 2);
    CHECK(p.K == 20);
    CHECK(p.a == std::vector<long long>{6, 7, 7, 6, 6, 8});
    CHECK(serialize_3p(p) == "3p 2 20 6 7 7 6 6 8\n");
    CHECK_THROWS_AS(parse_3p("3p 1 7 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_3p("4p 1 7 2 2 3\n"), ParseError);
    const auto i = parse_icor("icor 5\nchunk 2 5\nchunk 1 8 4\nchunk 6 7 9 3\n");
    CHECK(i.M == 5);
    CHECK(i.chunks.size() == 3);
    CHECK(serialize_icor(i) == "icor 5\nchunk 2 5\nchunk 1 8 4\nchunk 6 7 9 3\n");
    CHECK_THROWS_AS(parse_icor("icor 5\nblock 1\n"), ParseError);
    CHECK_THROWS_AS(parse_icor("icor\n"), ParseError);
}

TEST_CASE("svg") {
    const auto empty = render_svg(CircularDrawing{});
    CHECK(empty.find("<svg") == 0);
    CHECK(empty.find("</svg>") != std::string::npos);
    const auto c4 = render_svg(crossed_c4());
    std::size_t red = 0;
    for (std::size_t at = 0; (at = c4.find("edge crossing", at)) != std::string::npos; ++at) ++red;
    CHECK(red == 2);
    CHECK(c4 == render_svg(crossed_c4()));
    SvgOptions opt;
    opt.moved = {2};
    CHECK(render_svg(crossed_c4(), opt).find("vertex moved") != std::string::npos);
    CHECK(render_svg(gen_fig5(6)).find("edge crossing") != std::string::npos);
    // Vertex 0 of the order sits at the top of the circle.
    CHECK(c4.find("cx=\"240.000\" cy=\"48.000\"") != std::string::npos);
}

TEST_CASE("generators") {
    const RandomOptions opt{14, 42, RandomProfile::AlmostPlanar};
    CHECK(gen_random(opt) == gen_random(opt));
    CHECK(serialize_drawing(gen_random(opt)) == serialize_drawing(gen_random(opt)));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CHECK(classify(gen_random({12, seed, RandomProfile::AlmostPlanar})).kind == DrawingKind::AlmostPlanar);
        CHECK(classify(gen_random({12, seed, RandomProfile::Case22})).kind == DrawingKind::AlmostPlanar);
        CHECK(classify(gen_random({12, seed, RandomProfile::Disconnected})).kind == DrawingKind::AlmostPlanar);
        CHECK(is_planar(gen_random({12, seed, RandomProfile::OuterplanarOrderPerturbed, 0})));
    }
    CHECK_THROWS_AS(gen_random({3, 1, RandomProfile::AlmostPlanar}), GenerationFailed);
    CHECK(gen_fig5(4).order() == std::vector<VertexId>{1, 3, 2, 0});
}

TEST_CASE("command line") {
    TempDir tmp;
    const auto fig5 = tmp.write("fig5-n6.cdr", kFig5);

    auto gen = cli({"generate", "fig5", "--n", "6"});
    CHECK(gen.code == 0);
    CHECK(gen.out == kFig5);

    auto check = cli({"check", fig5});
    CHECK(check.code == 0);
    CHECK(check.out.find("crossings 3") != std::string::npos);
    CHECK(check.out.find("kind almost-planar") != std::string::npos);

    for (const char* alg : {"min", "one-side", "edge-fixed", "general", "exact"}) {
        auto un = cli({"untangle", fig5, "--algorithm", alg});
        CHECK(un.code == 0);
        CHECK(un.err.find("planar=true") != std::string::npos);
        if (std::string(alg) == "min") CHECK(un.out.find("# moved=2 ") != std::string::npos);
        const auto mv = tmp.write(std::string(alg) + ".mv", un.out);
        auto ver = cli({"verify", fig5, mv});
        CHECK(ver.code == 0);
        CHECK(ver.out.find("planarOk=true") != std::string::npos);
    }

    const auto planar = tmp.write("planar.cdr", "vertices 3\norder a b c\nedge a b\nedge b c\nedge a c\n");
    auto zero = cli({"untangle", planar, "--algorithm", "min"});
    CHECK(zero.code == 0);
    CHECK(zero.out == "# moved=0 fixed=a,b,c\n");

    const auto none = tmp.write("none.mv", "");
    CHECK(cli({"verify", fig5, none}).code == kExitNotPlanar);

    const auto broken = tmp.write("broken.cdr", "vertices 3\norder a b\n");
    CHECK(cli({"check", broken}).code == kExitParse);
    CHECK(cli({"check", (tmp.path / "missing.cdr").string()}).code == kExitParse);
    CHECK(cli({"frobnicate"}).code == kExitParse);

    const auto two = tmp.write("two.cdr", "vertices 8\norder a c b d e g f h\nedge a b\nedge c d\nedge e f\nedge g h\n");
    CHECK(cli({"untangle", two, "--algorithm", "min"}).code == kExitPrecondition);

    CHECK(cli({"untangle", fig5, "--algorithm", "exact", "--oracle-max-n", "5"}).code == kExitTooLarge);

    const auto svg = (tmp.path / "out.svg").string();
    const auto moves = tmp.write("m.mv", cli({"untangle", fig5}).out);
    CHECK(cli({"render", fig5, "--moves", moves, "-o", svg}).code == 0);
    CHECK(std::filesystem::file_size(svg) > 0);

    CHECK(cli({"generate", "random", "--n", "10", "--seed", "3"}).out ==
          cli({"generate", "random", "--n", "10", "--seed", "3"}).out);
    CHECK(cli({"generate", "es-tight", "--s", "2", "--r", "2"}).code == 0);
    const auto p3 = tmp.write("a.3p", "3p 1 7 2 2 3\n");
    auto red = cli({"generate", "reduce-3p", p3});
    CHECK(red.code == 0);
    CHECK(red.out.rfind("icor ", 0) == 0);
    const auto ic = tmp.write("a.icor", "icor 5\nchunk 2 5\nchunk 1 8 4\nchunk 6 7 9 3\n");
    auto cu = cli({"generate", "reduce-icor", ic});
    CHECK(cu.code == 0);
    CHECK(cu.out.rfind("# K=4\nvertices 10\n", 0) == 0);
}

}  // TEST_SUITE
