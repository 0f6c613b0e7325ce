#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include "toric/git.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// Simplicial complete fan: primitive integer rays plus maximal cones as
// sorted 0-based index sets of size n.
struct Fan {
    int n = 0;
    std::vector<VecZ> rays;
    std::vector<std::vector<int>> max_cones;

    int num_rays() const { return static_cast<int>(rays.size()); }
};

// Curve class in the lattice dual to the p-basis of the charge matrix.
struct CurveClass {
    VecZ d;

    bool operator==(const CurveClass& o) const { return d == o.d; }
    bool operator<(const CurveClass& o) const { return d < o.d; }
};

// A GIT presentation and its fan, kept consistent: fan cones satisfy the
// chamber criterion for omega and rays generate the quotient lattice.
struct Model {
    std::string name;
    GitPresentation git;
    Fan fan;

    Rat omega_degree(const CurveClass& c) const { return dot_q(git.omega, vec_q_from_z(c.d)); }
    Int pairing(int ray, const CurveClass& c) const { return dot_z(git.charges[ray], c.d); }
};

// Checks all Fan invariants (unimodular cones, two cones per wall, wall-graph
// connected, every ray used, primitive distinct rays). Throws GeometryError.
void validate_fan(const Fan& fan);

// Builds the fan of the chamber containing omega. Throws GeometryError when
// stability fails, NotSmooth / EmptyDivisor per the construction.
Fan fan_from_git(const GitPresentation& git);

// Inverts the construction: charges = basis of the ray relation lattice.
// Without a hint, omega is an interior point of the nef chamber
// (NoAmpleClass when none is found).
GitPresentation git_from_fan(const Fan& fan, const std::optional<VecQ>& omega_hint = {});

Model make_model(std::string name, const GitPresentation& git);
Model make_model(std::string name, const Fan& fan, const std::optional<VecQ>& omega_hint = {});

// One primitive relation per wall, deduplicated; generates the Mori cone.
std::vector<CurveClass> wall_curve_classes(const Model& model);

struct FanoReport {
    bool weak_fano = false;
    bool fano = false;
};
FanoReport is_weak_fano(const Model& model);

// All Mori-cone lattice points d with 0 <= omega.d <= bound, sorted by
// (omega-degree, lex). Throws UnboundedEnumeration when omega vanishes on a
// nonzero wall class.
std::vector<CurveClass> mori_points(const Model& model, const Rat& bound);

// Normalized volume (n! times Euclidean) of conv{rays}.
Int fan_polytope_volume(const Fan& fan);

} // namespace toric

#endif
