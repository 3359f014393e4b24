#include "gms/source_io.hpp"

#include <charconv>
#include <sstream>

#include "gms/error.hpp"

namespace gms {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t number(std::string_view word, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        auto words = split_words(text.substr(pos, end - pos));
        if (!words.empty() && words[0] != "c" && words[0][0] != '#')
            f(words, lineno);
        pos = end + 1;
    }
}

std::size_t one_based(std::string_view word, std::size_t bound, std::size_t line, const char* what) {
    std::size_t v = number(word, line);
    if (v < 1 || v > bound)
        throw ParseError(line, std::string(what) + " " + std::string(word) + " out of range 1.." + std::to_string(bound));
    return v - 1;
}

} // namespace

SourceGraph parse_source_graph(std::string_view text) {
    bool header = false;
    std::size_t n = 0, declared_m = 0;
    std::vector<Edge> edges;
    std::vector<int> colors;
    std::size_t colored = 0;
    for_each_line(text, [&](const std::vector<std::string_view>& w, std::size_t line) {
        if (w[0] == "p") {
            if (header)
                throw ParseError(line, "duplicate header");
            if (w.size() != 4 || w[1] != "edge")
                throw ParseError(line, "expected 'p edge <n> <m>'");
            n = number(w[2], line);
            declared_m = number(w[3], line);
            colors.assign(n, -1);
            header = true;
            return;
        }
        if (!header)
            throw ParseError(line, "missing 'p edge' header");
        if (w[0] == "e") {
            if (w.size() != 3)
                throw ParseError(line, "expected 'e <u> <v>'");
            auto u = one_based(w[1], n, line, "vertex"), v = one_based(w[2], n, line, "vertex");
            if (u == v)
                throw ParseError(line, "self-loop on vertex " + std::string(w[1]));
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } else if (w[0] == "n") {
            if (w.size() != 3)
                throw ParseError(line, "expected 'n <v> <color>'");
            auto v = one_based(w[1], n, line, "vertex");
            auto c = number(w[2], line);
            if (c < 1)
                throw ParseError(line, "colors start at 1");
            if (colors[v] < 0)
                ++colored;
            colors[v] = static_cast<int>(c - 1);
        } else {
            throw ParseError(line, "unknown line type '" + std::string(w[0]) + "'");
        }
    });
    if (!header)
        throw ParseError(0, "missing 'p edge' header");
    normalize_edges(edges);
    if (edges.size() != declared_m)
        throw ParseError(0, "header declares " + std::to_string(declared_m) + " edges, found " +
                                std::to_string(edges.size()) + " distinct");
    if (colored != 0 && colored != n)
        throw ParseError(0, "colors given for " + std::to_string(colored) + " of " + std::to_string(n) + " vertices");
    SourceGraph out{StaticGraph(n, std::move(edges)), {}};
    if (colored == n && n > 0)
        out.colors = std::move(colors);
    return out;
}

std::string serialize_source_graph(const SourceGraph& g) {
    std::ostringstream os;
    os << "p edge " << g.graph.vertex_count() << ' ' << g.graph.edge_count() << '\n';
    for (const Edge& e : g.graph.edges())
        os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (std::size_t v = 0; v < g.colors.size(); ++v)
        os << "n " << v + 1 << ' ' << g.colors[v] + 1 << '\n';
    return os.str();
}

SetFamily parse_set_family(std::string_view text) {
    bool header = false;
    std::size_t declared = 0;
    SetFamily fam;
    for_each_line(text, [&](const std::vector<std::string_view>& w, std::size_t line) {
        if (w[0] == "p") {
            if (header)
                throw ParseError(line, "duplicate header");
            if (w.size() != 4 || w[1] != "sets")
                throw ParseError(line, "expected 'p sets <universe> <count>'");
            fam.universe = number(w[2], line);
            declared = number(w[3], line);
            header = true;
            return;
        }
        if (!header)
            throw ParseError(line, "missing 'p sets' header");
        if (w[0] != "s")
            throw ParseError(line, "unknown line type '" + std::string(w[0]) + "'");
        std::vector<std::size_t> members;
        for (std::size_t i = 1; i < w.size(); ++i)
            members.push_back(one_based(w[i], fam.universe, line, "element"));
        fam.sets.push_back(std::move(members));
    });
    if (!header)
        throw ParseError(0, "missing 'p sets' header");
    if (fam.sets.size() != declared)
        throw ParseError(0, "header declares " + std::to_string(declared) + " sets, found " +
                                std::to_string(fam.sets.size()));
    return fam;
}

std::string serialize_set_family(const SetFamily& f) {
    std::ostringstream os;
    os << "p sets " << f.universe << ' ' << f.sets.size() << '\n';
    for (const auto& s : f.sets) {
        os << 's';
        for (auto x : s)
            os << ' ' << x + 1;
        os << '\n';
    }
    return os.str();
}

std::vector<std::size_t> parse_certificate(std::string_view text) {
    std::vector<std::size_t> out;
    for_each_line(text, [&](const std::vector<std::string_view>& w, std::size_t line) {
        for (auto word : w) {
            auto v = number(word, line);
            if (v == 0)
                throw ParseError(line, "certificate ids are 1-based");
            out.push_back(v - 1);
        }
    });
    return out;
}

} // namespace gms
