#include "gms/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gms/error.hpp"

namespace gms {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected integer for ") + what + ", got '" + std::string(tok) + "'");
    return value;
}

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t number = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size())
            return false;
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        return true;
    }
};

} // namespace

ProblemInstance parse_instance(std::string_view text) {
    LineCursor cursor{text};
    std::string_view raw;

    bool have_header = false;
    ProblemKind kind{};
    std::size_t n = 0, tau = 0;
    int k = 0, ell = 0;
    std::optional<int> q;
    Attributes attrs;
    std::vector<std::string> legend;
    std::vector<std::vector<Edge>> layers;
    std::size_t current = 0; // 1-based, 0 = none yet

    while (cursor.next(raw)) {
        const std::size_t ln = cursor.number;
        if (raw.starts_with("#@")) {
            std::string_view rest = raw.substr(2);
            if (rest.starts_with(' '))
                rest.remove_prefix(1);
            if (!rest.empty() && rest.back() == '\r')
                rest.remove_suffix(1);
            legend.emplace_back(rest);
            continue;
        }
        std::string_view line = raw.substr(0, raw.find('#'));
        auto tok = split_ws(line);
        if (tok.empty())
            continue;

        if (!have_header) {
            if (tok[0] != "p" || tok.size() != 7 || tok[1] != "gms")
                throw ParseError(ln, "malformed header, expected 'p gms <problem> <n> <tau> <k> <ell>'");
            try {
                kind = problem_kind_from_name(tok[2]);
            } catch (const ParseError& e) {
                throw ParseError(ln, e.what());
            }
            n = parse_number<std::size_t>(tok[3], ln, "n");
            tau = parse_number<std::size_t>(tok[4], ln, "tau");
            k = parse_number<int>(tok[5], ln, "k");
            ell = parse_number<int>(tok[6], ln, "ell");
            if (tau < 1)
                throw ParseError(ln, "malformed header: tau must be at least 1");
            if (k < 0 || ell < 0)
                throw ParseError(ln, "malformed header: k and ell must be non-negative");
            layers.assign(tau, {});
            have_header = true;
            continue;
        }

        if (tok[0] == "p") {
            throw ParseError(ln, "duplicate header");
        } else if (tok[0] == "a") {
            if (tok.size() < 2)
                throw ParseError(ln, "attribute line needs a key");
            std::string_view key = tok[1];
            if (key == "s" || key == "t") {
                if (tok.size() != 3)
                    throw ParseError(ln, "attribute " + std::string(key) + " takes one vertex");
                auto v = parse_number<Vertex>(tok[2], ln, "vertex");
                if (v >= n)
                    throw ParseError(ln, "vertex id out of range");
                (key == "s" ? attrs.s : attrs.t) = v;
            } else if (key == "q") {
                if (tok.size() != 3)
                    throw ParseError(ln, "attribute q takes one integer");
                q = parse_number<int>(tok[2], ln, "q");
                if (*q < 1)
                    throw ParseError(ln, "q must be at least 1");
            } else if (key == "colors") {
                attrs.colors.clear();
                for (std::size_t i = 2; i < tok.size(); ++i)
                    attrs.colors.push_back(parse_number<int>(tok[i], ln, "color"));
            } else {
                throw ParseError(ln, "unknown attribute '" + std::string(key) + "'");
            }
        } else if (tok[0] == "l") {
            if (tok.size() != 2)
                throw ParseError(ln, "layer line takes one index");
            auto idx = parse_number<std::size_t>(tok[1], ln, "layer index");
            if (idx < 1 || idx > tau)
                throw ParseError(ln, "layer index out of range");
            if (idx == current)
                throw ParseError(ln, "duplicate layer index " + std::to_string(idx));
            if (idx < current)
                throw ParseError(ln, "layer indices must be ascending");
            current = idx;
        } else if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError(ln, "edge line takes two vertices");
            if (current == 0)
                throw ParseError(ln, "edge before first layer");
            auto u = parse_number<Vertex>(tok[1], ln, "vertex");
            auto v = parse_number<Vertex>(tok[2], ln, "vertex");
            if (u >= n || v >= n)
                throw ParseError(ln, "vertex id out of range");
            if (u == v)
                throw ParseError(ln, "self-loop at vertex " + std::to_string(u));
            layers[current - 1].emplace_back(u, v);
        } else {
            throw ParseError(ln, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw ParseError(cursor.number, "malformed header: missing 'p gms' line");

    ProblemInstance inst;
    inst.graph = TemporalGraph(n, std::move(layers));
    inst.kind = kind;
    inst.k = k;
    inst.ell = ell;
    inst.q = q;
    inst.attrs = std::move(attrs);
    inst.legend = std::move(legend);
    try {
        inst.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(0, e.what());
    }
    return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
    std::ostringstream out;
    out << "p gms " << name_of(inst.kind) << ' ' << inst.n() << ' ' << inst.tau() << ' ' << inst.k << ' '
        << inst.ell << '\n';
    if (inst.attrs.s)
        out << "a s " << *inst.attrs.s << '\n';
    if (inst.attrs.t)
        out << "a t " << *inst.attrs.t << '\n';
    if (inst.q)
        out << "a q " << *inst.q << '\n';
    if (!inst.attrs.colors.empty()) {
        out << "a colors";
        for (int c : inst.attrs.colors)
            out << ' ' << c;
        out << '\n';
    }
    for (const auto& line : inst.legend)
        out << "#@ " << line << '\n';
    for (std::size_t i = 0; i < inst.tau(); ++i) {
        out << "l " << i + 1 << '\n';
        for (const Edge& e : inst.graph.layer(i).edges())
            out << "e " << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

SolutionSequence parse_solution(std::string_view text, std::size_t tau) {
    LineCursor cursor{text};
    std::string_view raw;
    SolutionSequence sol;
    sol.sets.resize(tau);
    std::vector<bool> seen(tau, false);
    while (cursor.next(raw)) {
        const std::size_t ln = cursor.number;
        auto tok = split_ws(raw.substr(0, raw.find('#')));
        if (tok.empty())
            continue;
        if (tok[0] != "S" || tok.size() < 2)
            throw ParseError(ln, "expected 'S <layer> <elements...>'");
        auto idx = parse_number<std::size_t>(tok[1], ln, "layer index");
        if (idx < 1 || idx > tau)
            throw ParseError(ln, "layer index out of range");
        if (seen[idx - 1])
            throw ParseError(ln, "duplicate layer index " + std::to_string(idx));
        seen[idx - 1] = true;
        ElementSet set;
        for (std::size_t i = 2; i < tok.size(); ++i) {
            try {
                set.push_back(parse_element(tok[i]));
            } catch (const ParseError& e) {
                throw ParseError(ln, e.what());
            }
        }
        normalize(set);
        sol.sets[idx - 1] = std::move(set);
    }
    for (std::size_t i = 0; i < tau; ++i)
        if (!seen[i])
            throw ParseError(0, "solution is missing layer " + std::to_string(i + 1));
    return sol;
}

std::string serialize_solution(const SolutionSequence& sol) {
    std::string out;
    for (std::size_t i = 0; i < sol.sets.size(); ++i) {
        out += "S " + std::to_string(i + 1);
        for (const Element& e : sol.sets[i])
            out += ' ' + to_string(e);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write file '" + path.string() + "'");
    out << text;
}

} // namespace gms
