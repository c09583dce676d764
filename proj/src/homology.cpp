#include "relconv/homology.hpp"

#include <algorithm>

#include "relconv/error.hpp"

namespace relconv {

GF2Matrix boundary_matrix(const SimplicialComplex& complex, int i) {
    if (i < 0) throw InvalidInput("boundary_matrix: dimension must be non-negative");
    const std::size_t cols = complex.count(i);
    if (i == 0) {
        GF2Matrix augmentation(1, cols);
        for (std::size_t c = 0; c < cols; ++c) augmentation.set(0, c, true);
        return augmentation;
    }
    const std::size_t row_base = complex.first_index(i - 1);
    const std::size_t col_base = complex.first_index(i);
    GF2Matrix matrix(complex.count(i - 1), cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t face : complex.facet_indices(col_base + c)) matrix.set(face - row_base, c, true);
    return matrix;
}

std::size_t BettiProfile::max() const {
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

BettiProfile reduced_betti(const SimplicialComplex& complex, int up_to) {
    if (up_to < 1) throw InvalidInput("reduced_betti: up_to must be at least 1");
    BettiProfile profile;
    profile.values.assign(static_cast<std::size_t>(up_to), 0);
    if (complex.empty()) {
        profile.complex_is_empty = true;
        return profile;
    }
    // rank[i] = rank of the boundary operator out of dimension i (i = 0 is the augmentation).
    std::vector<std::size_t> rank(static_cast<std::size_t>(up_to) + 1, 0);
    for (int i = 0; i <= up_to; ++i)
        if (complex.count(i) > 0) rank[static_cast<std::size_t>(i)] = gf2_rank(boundary_matrix(complex, i));
    for (int i = 0; i < up_to; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        profile.values[idx] = complex.count(i) - rank[idx] - rank[idx + 1];
    }
    return profile;
}

BettiProfile reduced_betti(const Subcomplex& subcomplex, int up_to) {
    return reduced_betti(subcomplex.to_complex(), up_to);
}

}  // namespace relconv
