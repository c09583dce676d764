#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace relconv {

using Vertex = std::uint32_t;

/// Bitset over vertex indices of some ambient complex.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Bitset over indices of some indexed collection (simplices, family members).
using IndexSet = boost::dynamic_bitset<std::uint64_t>;

VertexSet make_vertex_set(std::size_t universe, std::span<const Vertex> vertices);

std::vector<Vertex> to_vertex_list(const VertexSet& set);

std::vector<std::size_t> to_index_list(const IndexSet& set);

}  // namespace relconv
