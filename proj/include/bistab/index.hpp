#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bistab/hypersurface.hpp"
#include "bistab/spectrum.hpp"
#include "bistab/stability_form.hpp"

namespace bistab {

// Index and nullity of a hypersurface family, obtained by exact enumeration
// of the finitely many eigenvalues where the stability form is negative.
struct IndexReport {
    BigInt index;
    std::vector<EigenLevel> nullity_levels;
    std::vector<std::pair<EigenLevel, Rational>> contributing;  // form value < 0
    Rational cutoff_used;
    std::optional<BigInt> closed_form_index;
    bool agreement = false;  // meaningful only when closed_form_index is set

    bool operator==(const IndexReport&) const = default;
};

// Exact rational L <= 0 with evaluate_form(form, lambda) > 0 for every
// lambda <= L. Quadratic case: one below (a1 - ceil_sqrt(a1^2 - 4 a2 a0))/(2 a2);
// linear case: one below the root -a0/a1. Integer square roots only, no floats.
Rational negative_region_cutoff(const StabilityForm& form);

// Enumerates the spectrum down to negative_region_cutoff, sums multiplicities
// of the strictly negative levels, records zeros as nullity, and attaches the
// closed-form cross-check for the family.
IndexReport compute_index(const HypersurfaceModel& model);

// Index of the proper biharmonic torus S^p(1/sqrt2) x S^q(1/sqrt2):
// 1 for q <= 2p, else p+2.
BigInt closed_form_index(int p, int q);

// A hypersurface family of index k, when one exists; k = 2 has no witness.
// Canonical choices: the smallest small sphere for k = 1, and the torus
// (k-2, 2k-3) for k >= 3.
std::optional<HypersurfaceModel> inverse_index(int k);

enum class ExecutionPolicy { Serial, Parallel };

// All pairs 1 <= p < q with p+q <= max_sum where compute_index disagrees with
// closed_form_index. Parallel path partitions the pair list over OpenMP
// threads; results are identical to the serial reference by construction.
std::vector<std::pair<int, int>> torus_index_disagreements(
    int max_sum, ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace bistab
