#include "gms/element.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

#include "gms/error.hpp"

namespace gms {

std::string to_string(const Element& e) {
    switch (e.kind) {
    case ElementKind::Vertex:
        return std::to_string(e.u);
    case ElementKind::Edge:
        return std::to_string(e.u) + "-" + std::to_string(e.v);
    case ElementKind::Modification:
        return std::to_string(e.u) + "-" + std::to_string(e.v) + (e.op == ModOp::Add ? ":add" : ":del");
    }
    return {};
}

namespace {

Vertex parse_id(std::string_view text, std::string_view whole) {
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(0, "bad element '" + std::string(whole) + "'");
    return value;
}

} // namespace

Element parse_element(std::string_view text) {
    auto colon = text.find(':');
    std::string_view pair = text.substr(0, colon);
    auto dash = pair.find('-');
    if (dash == std::string_view::npos) {
        if (colon != std::string_view::npos)
            throw ParseError(0, "bad element '" + std::string(text) + "'");
        return Element::vertex(parse_id(pair, text));
    }
    Vertex a = parse_id(pair.substr(0, dash), text);
    Vertex b = parse_id(pair.substr(dash + 1), text);
    if (a == b)
        throw ParseError(0, "self-loop element '" + std::string(text) + "'");
    if (colon == std::string_view::npos)
        return Element::edge(a, b);
    std::string_view tag = text.substr(colon + 1);
    if (tag == "add")
        return Element::add(Edge(a, b));
    if (tag == "del")
        return Element::del(Edge(a, b));
    throw ParseError(0, "bad modification tag in '" + std::string(text) + "'");
}

void normalize(ElementSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

ElementSet make_set(std::vector<Element> elems) {
    normalize(elems);
    return elems;
}

bool contains(const ElementSet& s, const Element& e) {
    return std::binary_search(s.begin(), s.end(), e);
}

bool is_subset(const ElementSet& sub, const ElementSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::size_t difference_size(const ElementSet& a, const ElementSet& b) {
    std::size_t count = 0;
    auto ib = b.begin();
    for (const Element& x : a) {
        while (ib != b.end() && *ib < x)
            ++ib;
        if (ib == b.end() || *ib != x)
            ++count;
    }
    return count;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string to_string(const ElementSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(s[i]);
    }
    return out + "}";
}

} // namespace gms
