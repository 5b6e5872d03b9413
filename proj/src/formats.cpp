#include "gridlab/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gridlab/errors.hpp"

namespace gridlab {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        start = end + 1;
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) l.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (l.tokens.empty() || l.tokens.front().front() == 'c') continue;
        out.push_back(std::move(l));
        if (end == text.size()) break;
    }
    return out;
}

int to_int(std::string_view tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, found '" + std::string(tok) + "'", line);
    return value;
}

void expect_count(const Line& l, std::size_t n, const char* what) {
    if (l.tokens.size() != n)
        throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " fields, found " +
                             std::to_string(l.tokens.size()),
                         l.number);
}

}  // namespace

std::string write_gr(const SimpleGraph& g) {
    std::ostringstream os;
    os << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

SimpleGraph read_gr(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("missing 'p tw' header");
    const Line& h = lines.front();
    if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != "tw")
        throw ParseError("expected header 'p tw <n> <m>'", h.number);
    int n = to_int(h.tokens[2], h.number), m = to_int(h.tokens[3], h.number);
    if (n < 0 || m < 0) throw ParseError("negative count in header", h.number);
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, file has " +
                             std::to_string(lines.size() - 1),
                         h.number);
    SimpleGraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_count(l, 2, "edge");
        int u = to_int(l.tokens[0], l.number), v = to_int(l.tokens[1], l.number);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint out of range", l.number);
        if (u == v) throw ParseError("self-loop", l.number);
        if (!g.add_edge(u - 1, v - 1)) throw ParseError("duplicate edge", l.number);
    }
    return g;
}

std::string write_td(const TreeDecomposition& td, int num_vertices) {
    std::ostringstream os;
    os << "s td " << td.num_bags() << ' ' << td.max_bag_size() << ' ' << num_vertices << '\n';
    for (int i = 0; i < td.num_bags(); ++i) {
        os << "b " << i + 1;
        for (Vertex v : td.bags[i]) os << ' ' << v + 1;
        os << '\n';
    }
    for (auto [x, y] : td.tree_edges) os << x + 1 << ' ' << y + 1 << '\n';
    return os.str();
}

TdFile read_td(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("missing 's td' header");
    const Line& h = lines.front();
    if (h.tokens.size() != 5 || h.tokens[0] != "s" || h.tokens[1] != "td")
        throw ParseError("expected header 's td <bags> <max bag size> <n>'", h.number);
    int b = to_int(h.tokens[2], h.number), maxbag = to_int(h.tokens[3], h.number);
    TdFile out;
    out.num_vertices = to_int(h.tokens[4], h.number);
    if (b < 0 || maxbag < 0 || out.num_vertices < 0) throw ParseError("negative count in header", h.number);
    out.td.bags.resize(b);
    std::vector<char> seen(b, 0);
    std::size_t i = 1;
    for (; i < lines.size() && lines[i].tokens.front() == "b"; ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() < 2) throw ParseError("bag line without id", l.number);
        int id = to_int(l.tokens[1], l.number);
        if (id < 1 || id > b) throw ParseError("bag id out of range", l.number);
        if (seen[id - 1]) throw ParseError("bag " + std::to_string(id) + " listed twice", l.number);
        seen[id - 1] = 1;
        VertexSet bag;
        for (std::size_t t = 2; t < l.tokens.size(); ++t) {
            int v = to_int(l.tokens[t], l.number);
            if (v < 1 || v > out.num_vertices) throw ParseError("bag vertex out of range", l.number);
            bag.push_back(v - 1);
        }
        std::sort(bag.begin(), bag.end());
        if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw ParseError("vertex repeated within a bag", l.number);
        out.td.bags[id - 1] = std::move(bag);
    }
    for (int id = 0; id < b; ++id)
        if (!seen[id]) throw ParseError("bag " + std::to_string(id + 1) + " missing", h.number);
    if (out.td.max_bag_size() != maxbag)
        throw ParseError("header max bag size " + std::to_string(maxbag) + " does not match bags", h.number);
    for (; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_count(l, 2, "tree edge");
        int x = to_int(l.tokens[0], l.number), y = to_int(l.tokens[1], l.number);
        if (x < 1 || y < 1 || x > b || y > b) throw ParseError("tree edge endpoint out of range", l.number);
        out.td.tree_edges.emplace_back(x - 1, y - 1);
    }
    return out;
}

std::string write_emb(const EmbeddedGraph& e, const FaceLabeling* labels) {
    std::ostringstream os;
    os << "emb " << e.num_darts() << '\n';
    auto row = [&](const char* key, const std::vector<int>& values) {
        os << key;
        for (int v : values) os << ' ' << v;
        os << '\n';
    };
    row("twin", e.twins());
    row("next", e.nexts());
    row("vertex_of", e.vertex_ofs());
    if (labels) row("nations", labels->nations());
    return os.str();
}

EmbFile read_emb(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("missing 'emb' header");
    const Line& h = lines.front();
    if (h.tokens.size() != 2 || h.tokens[0] != "emb") throw ParseError("expected header 'emb <darts>'", h.number);
    const int darts = to_int(h.tokens[1], h.number);
    if (darts < 0 || darts % 2 != 0) throw ParseError("dart count must be even and nonnegative", h.number);
    if (lines.size() < 4 || lines.size() > 5) throw ParseError("expected twin, next, vertex_of and optional nations lines");
    auto row = [&](const Line& l, const char* key) {
        if (l.tokens.front() != key) throw ParseError(std::string("expected '") + key + "' line", l.number);
        expect_count(l, static_cast<std::size_t>(darts) + 1, key);
        std::vector<int> out;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) out.push_back(to_int(l.tokens[t], l.number));
        return out;
    };
    auto twin = row(lines[1], "twin");
    auto next = row(lines[2], "next");
    auto vertex_of = row(lines[3], "vertex_of");
    for (int i = 1; i <= 3; ++i)
        for (std::size_t t = 1; t < lines[i].tokens.size(); ++t)
            if (to_int(lines[i].tokens[t], lines[i].number) < 0 ||
                (i < 3 && to_int(lines[i].tokens[t], lines[i].number) >= darts))
                throw ParseError("entry out of range", lines[i].number);
    EmbFile out;
    try {
        out.graph = EmbeddedGraph(std::move(twin), std::move(next), std::move(vertex_of));
    } catch (const StructuralError& err) {
        throw ParseError(std::string("invalid map: ") + err.what(), lines[1].number);
    }
    if (lines.size() == 5) {
        const Line& l = lines[4];
        if (l.tokens.front() != "nations") throw ParseError("expected 'nations' line", l.number);
        std::vector<FaceId> nations;
        for (std::size_t t = 1; t < l.tokens.size(); ++t) nations.push_back(to_int(l.tokens[t], l.number));
        try {
            out.labels = FaceLabeling(out.graph.num_faces(), nations);
        } catch (const StructuralError& err) {
            throw ParseError(std::string("invalid nations: ") + err.what(), l.number);
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace gridlab
