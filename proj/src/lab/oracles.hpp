#pragma once

#include <map>

#include "module.hpp"

namespace sw::lab {

// Positive roots / simple roots of so(2m) in local coordinates (type A and C
// come from block_positive_roots).
std::vector<LocalWeight> so_positive_roots(int m);

// Exact weight multiplicities of the simple finite-dimensional module with
// highest weight lam over the reductive root system given by its positive
// roots and Weyl orbit enumeration. Independent oracle for the Weyl
// dimension formula.
std::map<LocalWeight, long> freudenthal_weights(
    const std::vector<LocalWeight>& positive, const LocalWeight& lam,
    const std::vector<std::vector<LocalWeight>>& weyl_orbit_images);

// Convenience: orbit images for type A (permutations), C (signed
// permutations) and D (even sign changes) in rank <= 4.
std::vector<std::vector<LocalWeight>> block_weyl_images(BlockType t,
                                                        const LocalWeight& v);
std::vector<std::vector<LocalWeight>> so_weyl_images(const LocalWeight& v);

long freudenthal_multiplicity(const std::vector<LocalWeight>& positive,
                              const LocalWeight& lam, const LocalWeight& mu,
                              const std::vector<std::vector<LocalWeight>>& weyl);
long freudenthal_dimension(const std::vector<LocalWeight>& positive,
                           const LocalWeight& lam,
                           const std::vector<std::vector<LocalWeight>>& weyl);

// Window of the simple highest weight module L(lam) over the (sub)algebra:
// Verma window modulo its maximal trivial-intersection submodule. Exact on
// the whole window.
WeightModule simple_window(const LabAlgebraPtr& alg,
                           const std::vector<size_t>& active, const Weight& lam,
                           int depth);
WeightModule simple_window(const LabAlgebraPtr& alg, const Weight& lam, int depth);

// Composition multiplicities [M(lam) : L(mu)] for factors with highest
// weight inside the window, by exact character peeling.
std::vector<std::pair<Weight, long>> verma_composition_oracle(
    const LabAlgebraPtr& alg, const Weight& lam, int depth);

}  // namespace sw::lab
