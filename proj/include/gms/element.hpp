#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gms/graph.hpp"

namespace gms {

enum class ElementKind : std::uint8_t { Vertex, Edge, Modification };

/// Del sorts before Add.
enum class ModOp : std::uint8_t { Del = 0, Add = 1 };

/// Atom of a per-layer solution set: a vertex, an edge, or an edge modification.
///
/// The canonical order compares (kind, u, v, op): vertices by id, edges and
/// modifications lexicographically by their normalized pair, with del < add.
/// A single problem only ever mixes elements of one kind.
struct Element {
    ElementKind kind = ElementKind::Vertex;
    Vertex u = 0;
    Vertex v = 0;
    ModOp op = ModOp::Del;

    static Element vertex(Vertex x) { return {ElementKind::Vertex, x, 0, ModOp::Del}; }
    static Element edge(Edge e) { return {ElementKind::Edge, e.u, e.v, ModOp::Del}; }
    static Element edge(Vertex a, Vertex b) { return edge(Edge(a, b)); }
    static Element del(Edge e) { return {ElementKind::Modification, e.u, e.v, ModOp::Del}; }
    static Element add(Edge e) { return {ElementKind::Modification, e.u, e.v, ModOp::Add}; }

    Edge pair() const { return Edge(u, v); }

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;
};

std::string to_string(const Element& e);

/// Parses `<v>`, `<u>-<v>`, or `<u>-<v>:add|del`. Throws ParseError (line 0) on bad syntax.
Element parse_element(std::string_view text);

/// Sorted, duplicate-free vector of elements.
using ElementSet = std::vector<Element>;

void normalize(ElementSet& s);
ElementSet make_set(std::vector<Element> elems);

bool contains(const ElementSet& s, const Element& e);
bool is_subset(const ElementSet& sub, const ElementSet& super);

/// |a \ b| for canonical sets.
std::size_t difference_size(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);

std::string to_string(const ElementSet& s);

} // namespace gms
