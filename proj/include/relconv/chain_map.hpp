#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relconv/complex.hpp"
#include "relconv/convexity.hpp"

namespace relconv {

/// Z2 chain: strictly increasing simplex indices of one complex, all of the
/// same dimension. The empty vector is the zero chain.
using Chain = std::vector<std::size_t>;

/// Symmetric difference of two sorted chains.
Chain chain_add(const Chain& a, const Chain& b);

Chain chain_boundary(const SimplicialComplex& complex, const Chain& chain);

/// Face closure of the simplices in `chain`.
Subcomplex chain_support(const ComplexPtr& complex, const Chain& chain);

/// A Z2 chain map given by the image of every source simplex; it acts on
/// chains by linearity.
class SimplicialChainMap {
public:
    /// Image chains must use target simplices of the same dimension as the
    /// source simplex; one entry per source simplex, in source order.
    SimplicialChainMap(ComplexPtr source, ComplexPtr target, std::vector<Chain> images);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    const ComplexPtr& source_ptr() const { return source_; }
    const ComplexPtr& target_ptr() const { return target_; }
    const std::vector<Chain>& images() const { return images_; }
    const Chain& image(std::size_t simplex) const { return images_[simplex]; }

    Chain apply(const Chain& source_chain) const;

private:
    ComplexPtr source_;
    ComplexPtr target_;
    std::vector<Chain> images_;
};

SimplicialChainMap identity_chain_map(const ComplexPtr& complex);

/// Sends each l-simplex to the sum of the l-simplices of the barycentric
/// subdivision lying in it. The target is `barycentric_subdivision(*complex)`.
SimplicialChainMap subdivision_chain_map(const ComplexPtr& complex);

/// first, then second; second's source must equal first's target.
SimplicialChainMap compose(const SimplicialChainMap& first, const SimplicialChainMap& second);

/// The map on a subcomplex of the source, re-indexed on its own simplices.
SimplicialChainMap restrict_source(const SimplicialChainMap& map, const Subcomplex& part);

struct MapCheck {
    bool ok = true;
    std::string reason;
    std::optional<std::size_t> simplex;                       ///< first failing source simplex
    std::optional<std::pair<std::size_t, std::size_t>> pair;  ///< first failing pair of source simplices

    explicit operator bool() const { return ok; }
};

/// Boundary commutes with the map on every simplex of dimension >= 1.
MapCheck verify_chain_map(const SimplicialChainMap& map);

/// Every source vertex goes to an odd number of target vertices.
bool verify_nontrivial(const SimplicialChainMap& map);

/// Nontrivial, and vertex-disjoint source simplices get vertex-disjoint supports.
MapCheck verify_hae(const SimplicialChainMap& map);

/// Point labels Phi(sigma), one vertex set of the target per source simplex.
using ConstraintMap = std::vector<VertexSet>;

/// Phi respects meets (disjoint simplices get disjoint labels, otherwise the
/// label of the common face is the intersection of labels) and each image
/// support lies inside the hull of its label.
MapCheck verify_constrained(const SimplicialChainMap& map, const ConvexityFamily& family, const ConstraintMap& phi);

enum class Lemma7Status { hae_confirmed, hypothesis_not_satisfied, precondition_failed, fatal_violation };

std::string lemma7_status_name(Lemma7Status status);

struct Lemma7Report {
    Lemma7Status status = Lemma7Status::precondition_failed;
    std::string detail;
    /// Disjoint point sets with intersecting hulls, when the hypothesis fails.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> overlapping_sets;
    MapCheck hae;
};

/// Checks that hulls of disjoint nonempty subsets of `points` never meet and,
/// if so, that a constrained nontrivial chain map is an almost-embedding.
/// A failure in the second step is reported as fatal_violation.
Lemma7Report lemma7_harness(const SimplicialChainMap& map, const ConvexityFamily& family, const ConstraintMap& phi,
                            const std::vector<Vertex>& points);

/// Some d-chain c made of simplices of `within` with boundary(c) = `boundary`:
/// Gaussian elimination with free variables set to zero. nullopt if none.
std::optional<Chain> fill_boundary(const Subcomplex& within, int d, const Chain& boundary);

struct HaeSearchOptions {
    std::uint64_t budget = 10'000'000;  ///< search nodes and per-simplex candidate chains
    unsigned jobs = 1;
};

struct HaeSearchResult {
    std::optional<SimplicialChainMap> map;
    std::uint64_t nodes = 0;
};

/// Exhaustive search for a homological almost-embedding whose image chains
/// have at most `support_cap` simplices each. Candidates are tried in
/// (size, lexicographic) order and the first success in that order is
/// returned, whatever the number of jobs. Throws BudgetExceeded when the
/// candidate lists or explored nodes exceed the budget.
HaeSearchResult exhaustive_hae_search(const ComplexPtr& source, const ComplexPtr& target, int support_cap,
                                      const HaeSearchOptions& options = {});

}  // namespace relconv
