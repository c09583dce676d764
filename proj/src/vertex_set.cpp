#include "relconv/vertex_set.hpp"

namespace relconv {

VertexSet make_vertex_set(std::size_t universe, std::span<const Vertex> vertices) {
    VertexSet set(universe);
    for (Vertex v : vertices) set.set(v);
    return set;
}

std::vector<Vertex> to_vertex_list(const VertexSet& set) {
    std::vector<Vertex> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) out.push_back(static_cast<Vertex>(i));
    return out;
}

std::vector<std::size_t> to_index_list(const IndexSet& set) {
    std::vector<std::size_t> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) out.push_back(i);
    return out;
}

}  // namespace relconv
