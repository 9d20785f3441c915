#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coeff/linalg.hpp"

namespace coeff {

/// Finite cochain complex over the rationals. Degree p has an ordered basis
/// labels[p]; d[p] maps degree p to degree p+1 (rows = dim(p+1)). The square
/// d.d = 0 is enforced at construction via validate().
struct GradedComplex {
    std::vector<std::vector<std::string>> labels;
    std::vector<RatMatrix> d;

    int top_degree() const { return static_cast<int>(labels.size()) - 1; }
    int dim(int p) const {
        if (p < 0 || p > top_degree()) return 0;
        return static_cast<int>(labels[p].size());
    }
    std::vector<int> dims() const;

    /// Shape consistency and d²=0; throws std::invalid_argument on failure.
    void validate() const;
};

/// Builds a complex from per-degree labels and differentials and validates it.
GradedComplex make_complex(std::vector<std::vector<std::string>> labels,
                           std::vector<RatMatrix> d);

/// Degreewise linear map commuting with the differentials. A degree-shifting
/// map (the Lefschetz operator has shift +2) records its shift explicitly:
/// f[p] maps source degree p into target degree p+shift.
struct ChainMap {
    GradedComplex source;
    GradedComplex target;
    int shift = 0;
    std::vector<RatMatrix> f;

    /// Shape consistency and f.d = d.f; throws std::invalid_argument on failure.
    void validate() const;
};

struct DegreeCohomology {
    std::vector<RatVector> cocycles;       // basis of ker d_p
    std::vector<RatVector> coboundaries;   // basis of im d_{p-1}
    std::vector<RatVector> representatives;  // cocycles completing the coboundaries
    int betti() const { return static_cast<int>(representatives.size()); }
};

struct CohomologySummary {
    std::vector<DegreeCohomology> deg;  // indexed 0..top_degree
    std::vector<int> betti() const;
    const DegreeCohomology& at(int p) const { return deg.at(static_cast<std::size_t>(p)); }
};

/// betti_p = dim ker d_p - rank d_{p-1}. Representatives extend the
/// coboundary basis inside the cocycle basis by deterministic echelon
/// completion, so repeated runs give identical bases.
CohomologySummary cohomology(const GradedComplex& C);

/// Tensor product complex with the Koszul sign rule
/// d(u (x) v) = du (x) v + (-1)^{|u|} u (x) dv. Basis labels within each total
/// degree run through left degrees ascending, then left index, then right.
GradedComplex tensor(const GradedComplex& a, const GradedComplex& b);

struct Subcomplex {
    GradedComplex complex;
    ChainMap inclusion;
};

/// Restricts C to the span of the given per-degree vectors (deduplicated to a
/// basis in input order). Every subspace must be d-stable; a violation
/// reports the offending degree and vector index.
Subcomplex subcomplex_inclusion(const GradedComplex& C,
                                const std::vector<std::vector<RatVector>>& subspaces,
                                const std::vector<std::vector<std::string>>* labels = nullptr);

/// Matrix of f on cohomology: entry columns are coordinates of f(representative)
/// in the target representatives, modulo coboundaries. Indexed by source degree.
std::vector<RatMatrix> induced_cohomology_map(const ChainMap& f,
                                              const CohomologySummary& source_cohomology,
                                              const CohomologySummary& target_cohomology);
std::vector<RatMatrix> induced_cohomology_map(const ChainMap& f);

/// Degreewise short exact sequence 0 -> K -> C -> Q -> 0.
struct ShortExactSequence {
    GradedComplex kernel;
    GradedComplex total;
    GradedComplex quotient;
    ChainMap inclusion;   // K -> C
    ChainMap projection;  // C -> Q

    /// Chain-map validity plus degreewise exactness (inclusion injective,
    /// projection surjective, im inclusion = ker projection).
    void validate() const;
};

/// Connecting homomorphism H^p(Q) -> H^{p+1}(K) by the zig-zag: lift a
/// quotient cocycle through the projection, apply d, pull back through the
/// inclusion. The class does not depend on the chosen lift.
RatMatrix connecting_homomorphism(const ShortExactSequence& ses, int p,
                                  const CohomologySummary& kernel_cohomology,
                                  const CohomologySummary& quotient_cohomology);

}  // namespace coeff
