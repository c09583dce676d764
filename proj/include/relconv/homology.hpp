#pragma once

#include <cstddef>
#include <vector>

#include "relconv/complex.hpp"
#include "relconv/gf2_matrix.hpp"

namespace relconv {

/// Z2 boundary operator from i-chains to (i-1)-chains. Rows follow the
/// (i-1)-simplices and columns the i-simplices in complex order; for i = 0
/// the single row is the augmentation (every vertex maps to the empty simplex).
GF2Matrix boundary_matrix(const SimplicialComplex& complex, int i);

struct BettiProfile {
    /// values[i] is the reduced Betti number in dimension i over Z2.
    std::vector<std::size_t> values;
    bool complex_is_empty = false;

    std::size_t max() const;
};

/// Reduced Betti numbers for 0 <= i < up_to. The empty complex reports all
/// zeros with `complex_is_empty` set; dimension -1 is never reported.
BettiProfile reduced_betti(const SimplicialComplex& complex, int up_to);

BettiProfile reduced_betti(const Subcomplex& subcomplex, int up_to);

}  // namespace relconv
