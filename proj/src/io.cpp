#include "untangle/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "untangle/error.hpp"

namespace untangle {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> words;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t end = text.find('\n', at);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::istringstream in{std::string(text.substr(at, end - at))};
        Line line{number, {}};
        std::string w;
        while (in >> w) line.words.push_back(w);
        if (!line.words.empty() && line.words[0][0] != '#') out.push_back(std::move(line));
        at = end + 1;
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

template <typename T>
T number_of(const std::string& w, int line) {
    T v{};
    const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size()) fail(line, "expected an integer, got '" + w + "'");
    return v;
}

}  // namespace

CircularDrawing parse_drawing(std::string_view text) {
    std::optional<int> n;
    std::optional<Line> order_line;
    std::vector<Line> edge_lines;
    for (auto& line : tokenize(text)) {
        const auto& key = line.words[0];
        if (key == "vertices") {
            if (n) fail(line.number, "duplicate 'vertices' line");
            if (line.words.size() != 2) fail(line.number, "expected 'vertices <n>'");
            n = number_of<int>(line.words[1], line.number);
            if (*n < 0) fail(line.number, "negative vertex count");
        } else if (key == "order") {
            if (order_line) fail(line.number, "duplicate 'order' line");
            order_line = std::move(line);
        } else if (key == "edge") {
            if (line.words.size() != 3) fail(line.number, "expected 'edge <a> <b>'");
            edge_lines.push_back(std::move(line));
        } else {
            fail(line.number, "unknown keyword '" + key + "'");
        }
    }
    if (!n) throw ParseError("missing 'vertices' line");
    if (!order_line) throw ParseError("missing 'order' line");
    std::vector<std::string> names(order_line->words.begin() + 1, order_line->words.end());
    if (static_cast<int>(names.size()) != *n)
        fail(order_line->number, "order lists " + std::to_string(names.size()) + " vertices, expected " +
                                     std::to_string(*n));
    std::unordered_set<std::string> seen;
    for (const auto& s : names) {
        if (!seen.insert(s).second) fail(order_line->number, "vertex '" + s + "' listed twice");
    }
    Graph g = Graph::with_vertices(names);
    for (const auto& line : edge_lines) {
        const auto a = g.find(line.words[1]), b = g.find(line.words[2]);
        if (!a) fail(line.number, "unknown vertex '" + line.words[1] + "'");
        if (!b) fail(line.number, "unknown vertex '" + line.words[2] + "'");
        if (*a == *b) fail(line.number, "self-loop at '" + line.words[1] + "'");
        if (g.has_edge(*a, *b)) fail(line.number, "duplicate edge");
        g.add_edge(*a, *b);
    }
    return CircularDrawing::identity(std::move(g));
}

std::string serialize_drawing(const CircularDrawing& d, std::string_view comment) {
    const Graph& g = d.graph();
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream in{std::string(comment)};
        std::string line;
        while (std::getline(in, line)) out << "# " << line << '\n';
    }
    out << "vertices " << d.size() << '\n';
    out << "order";
    for (VertexId v : d.order()) out << ' ' << g.name(v);
    out << '\n';
    std::vector<std::pair<int, int>> chords;
    for (const Edge& e : g.edges()) {
        const int p = d.position(e.a), q = d.position(e.b);
        chords.emplace_back(std::min(p, q), std::max(p, q));
    }
    std::sort(chords.begin(), chords.end());
    for (const auto& [p, q] : chords) out << "edge " << g.name(d.order()[p]) << ' ' << g.name(d.order()[q]) << '\n';
    return out.str();
}

Untangling parse_moves(std::string_view text, const Graph& g) {
    Untangling u;
    for (const auto& line : tokenize(text)) {
        const auto& w = line.words;
        if (w.size() != 4 || w[0] != "move" || w[2] != "after") fail(line.number, "expected 'move <v> after <u>'");
        const auto v = g.find(w[1]), a = g.find(w[3]);
        if (!v) fail(line.number, "unknown vertex '" + w[1] + "'");
        if (!a) fail(line.number, "unknown vertex '" + w[3] + "'");
        if (*v == *a) fail(line.number, "vertex moved after itself");
        u.moves.push_back({*v, *a});
    }
    return u;
}

std::string serialize_moves(const CircularDrawing& d, const Untangling& u) {
    const Graph& g = d.graph();
    std::ostringstream out;
    for (const auto& m : u.moves) out << "move " << g.name(m.vertex) << " after " << g.name(m.anchor) << '\n';
    const auto moved = u.moved_vertices();
    out << "# moved=" << moved.size() << " fixed=";
    bool first = true;
    for (VertexId v : d.order()) {
        if (std::binary_search(moved.begin(), moved.end(), v)) continue;
        out << (first ? "" : ",") << g.name(v);
        first = false;
    }
    out << '\n';
    return out.str();
}

ThreePartitionInstance parse_3p(std::string_view text) {
    std::vector<std::string> words;
    int first_line = 1;
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty 3-Partition instance");
    first_line = lines[0].number;
    for (const auto& l : lines) words.insert(words.end(), l.words.begin(), l.words.end());
    if (words.size() < 3 || words[0] != "3p") fail(first_line, "expected '3p <m> <K> <a_1> ...'");
    ThreePartitionInstance inst;
    inst.m = number_of<int>(words[1], first_line);
    inst.K = number_of<long long>(words[2], first_line);
    for (std::size_t i = 3; i < words.size(); ++i) inst.a.push_back(number_of<long long>(words[i], first_line));
    if (inst.m < 0 || inst.a.size() != static_cast<std::size_t>(3 * inst.m))
        fail(first_line, "expected exactly 3m = " + std::to_string(3 * inst.m) + " elements");
    return inst;
}

std::string serialize_3p(const ThreePartitionInstance& inst) {
    std::ostringstream out;
    out << "3p " << inst.m << ' ' << inst.K;
    for (long long x : inst.a) out << ' ' << x;
    out << '\n';
    return out.str();
}

DistIcorInstance parse_icor(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty Dist-ICOR instance");
    const auto& head = lines[0];
    if (head.words.size() != 2 || head.words[0] != "icor") fail(head.number, "expected 'icor <M>'");
    DistIcorInstance inst;
    inst.M = number_of<int>(head.words[1], head.number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.words[0] != "chunk") fail(l.number, "expected 'chunk <ranks...>'");
        std::vector<int> chunk;
        for (std::size_t j = 1; j < l.words.size(); ++j) chunk.push_back(number_of<int>(l.words[j], l.number));
        if (chunk.empty()) fail(l.number, "empty chunk");
        inst.chunks.push_back(std::move(chunk));
    }
    return inst;
}

std::string serialize_icor(const DistIcorInstance& inst) {
    std::ostringstream out;
    out << "icor " << inst.M << '\n';
    for (const auto& c : inst.chunks) {
        out << "chunk";
        for (int x : c) out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace untangle
