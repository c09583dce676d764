#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relconv {

using Subset = std::vector<std::size_t>;  ///< sorted, distinct ground elements

/// Colors of k-subsets of the ground set {0..ground-1}, colors in [0, c).
using GlobalColoring = std::function<int(std::span<const std::size_t> k_subset)>;

/// Lexicographically first n-subset all of whose k-subsets share a color.
std::optional<Subset> find_monochromatic(std::size_t ground, int k, int c, const GlobalColoring& coloring, std::size_t n);

/// Smallest ground size forcing n equal colors among c: c(n-1)+1.
std::uint64_t pigeonhole_bound(std::uint64_t n, std::uint64_t c);

/// A family of colorings rho_V, one for every subset V of the ground set,
/// each coloring the k-subsets of V. Calls must be pure and thread-safe.
class ColoringOracle {
public:
    using Fn = std::function<int(std::span<const std::size_t> v, std::span<const std::size_t> k_subset)>;

    ColoringOracle(std::size_t ground, int k, int c, Fn fn, std::string description = "custom");

    /// rho_V = constant color everywhere.
    static ColoringOracle constant(std::size_t ground, int k, int c, int color = 0);
    /// Color depends only on the k-subset (hashed with the seed), not on V.
    static ColoringOracle subset_only(std::size_t ground, int k, int c, std::uint64_t seed);
    /// Color hashed from (V, k-subset, seed).
    static ColoringOracle random(std::size_t ground, int k, int c, std::uint64_t seed);

    std::size_t ground() const { return ground_; }
    int k() const { return k_; }
    int colors() const { return c_; }
    const std::string& description() const { return description_; }

    /// Color of `k_subset` under rho_V; checks sizes, containment and range.
    int color(std::span<const std::size_t> v, std::span<const std::size_t> k_subset) const;

    /// Same colors, precomputed for every (V, k-subset) pair; ground <= 12.
    ColoringOracle tabulated() const;

private:
    std::size_t ground_;
    int k_;
    int c_;
    Fn fn_;
    std::string description_;
};

struct SelectionEntry {
    Subset z;
    Subset m;       ///< M_Z, disjoint from Y and from every other M
    int color = -1;  ///< common color of the k-subsets of Z, -1 when |Z| < k
};

struct SelectionCertificate {
    Subset y;
    std::vector<SelectionEntry> entries;  ///< one per m-subset of Y, in lexicographic order
};

struct SelectionResult {
    std::optional<SelectionCertificate> certificate;  ///< none = not found within the search
    std::uint64_t nodes = 0;
};

/// Backtracking search for Y and disjoint sets M_Z making each m-subset Z of
/// Y monochromatic in rho_{Z + M_Z}. Y is tried in lexicographic order and
/// each M_Z by (size, lexicographic); the first success is returned for any
/// number of jobs. Throws BudgetExceeded past `budget` nodes.
SelectionResult selection_search(const ColoringOracle& oracle, int m, std::size_t n, std::uint64_t budget = 10'000'000,
                                 unsigned jobs = 1);

struct SelectionCheck {
    bool ok = true;
    /// wrong_size, bad_element, missing_z, m_meets_y, overlap, not_monochromatic, color_mismatch
    std::string violation;
    std::string detail;

    explicit operator bool() const { return ok; }
};

SelectionCheck validate_selection(const SelectionCertificate& cert, const ColoringOracle& oracle, int m, std::size_t n);

/// 1-based ranks of the elements of A inside the sorted set V.
std::vector<std::size_t> relative_position(std::span<const std::size_t> v, std::span<const std::size_t> a);

/// R_k(n;m;c) from the selection theorem's recursive bound, when every
/// Ramsey number it needs is known in closed form; nullopt otherwise.
std::optional<std::uint64_t> selection_bound(int k, int m, std::size_t n, int c);

}  // namespace relconv
