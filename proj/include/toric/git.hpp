#ifndef TORIC_GIT_HPP
#define TORIC_GIT_HPP

#include "toric/linalg.hpp"

namespace toric {

// GIT charge data: row i of `charges` is the character D_i in the basis
// p_1..p_k, `omega` the stability vector.
struct GitPresentation {
    MatZ charges;
    VecQ omega;

    int m() const { return static_cast<int>(charges.size()); }
    int k() const { return charges.empty() ? 0 : static_cast<int>(charges[0].size()); }
    int n() const { return m() - k(); }

    VecQ charge_row_q(int i) const { return vec_q_from_z(charges[i]); }
};

struct StabilityReport {
    bool cone_membership = false; // (a) omega in sum R_{>=0} D_i
    bool generic = false;         // (b) strict spans use spanning sets
    bool pointed = false;         // (c) cone of the D_i is strictly convex

    bool ok() const { return cone_membership && generic && pointed; }
};

inline constexpr int kMaxCharges = 16; // enumeration guard

// Decides (a),(b),(c) exactly. Throws RankDeficient when the charge matrix
// has rank < k, SchemaError on dimension mismatches or m > kMaxCharges.
StabilityReport check_stability(const GitPresentation& git);

} // namespace toric

#endif
