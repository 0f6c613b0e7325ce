#ifndef TORIC_CONES_HPP
#define TORIC_CONES_HPP

#include "toric/linalg.hpp"

#include <vector>

namespace toric {

// Exact rational cone-membership tests, decided by enumeration of linearly
// independent generator subsets (Caratheodory witnesses) plus small linear
// solves. Generators are the ROWS of `gens`.

// target in sum_{i} R_{>=0} gens[i] ?
bool in_cone(const std::vector<VecQ>& gens, const VecQ& target);

// target in sum_{i in subset} R_{>0} gens[i] ?  (relative interior membership)
// Decided via: exists lambda > 0 with target - lambda * sigma in the closed
// cone, sigma = sum of the subset's generators.
bool in_strict_cone(const std::vector<VecQ>& gens, const std::vector<int>& subset,
                    const VecQ& target);

} // namespace toric

#endif
