#include "toric/git.hpp"

#include "toric/cones.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace toric {
namespace {

std::string rref_signature(const MatQ& rref) {
    std::ostringstream os;
    for (const auto& row : rref) {
        bool zero = true;
        for (const auto& e : row)
            if (e != 0) zero = false;
        if (zero) continue;
        for (const auto& e : row) os << rat_to_string(e) << ',';
        os << ';';
    }
    return os.str();
}

bool in_span(const MatQ& rref_basis, const VecQ& v) {
    VecQ red = v;
    for (const auto& row : rref_basis) {
        int lead = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) { lead = static_cast<int>(j); break; }
        if (lead < 0) continue;
        if (red[lead] != 0) {
            const Rat f = red[lead] / row[lead];
            for (std::size_t j = 0; j < row.size(); ++j) red[j] -= f * row[j];
        }
    }
    return std::all_of(red.begin(), red.end(), [](const Rat& e) { return e == 0; });
}

} // namespace

StabilityReport check_stability(const GitPresentation& git) {
    const int m = git.m();
    const int k = git.k();
    if (m == 0 || k == 0 || m < k) throw Error("SchemaError", "charge matrix must be m x k with m >= k >= 1");
    if (m > kMaxCharges) throw Error("SchemaError", "more than 16 charge rows");
    for (const auto& row : git.charges)
        if (static_cast<int>(row.size()) != k) throw Error("SchemaError", "ragged charge matrix");
    if (static_cast<int>(git.omega.size()) != k) throw Error("SchemaError", "omega has wrong dimension");
    if (rank_q(mat_q_from_z(git.charges)) < k)
        throw Error("RankDeficient", "charge matrix has rank < k");

    std::vector<VecQ> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = git.charge_row_q(i);

    StabilityReport rep;
    rep.cone_membership = in_cone(rows, git.omega);

    // (c): the cone is pointed iff 0 is not a convex combination of the
    // nonzero D_i; lift to a cone membership test one dimension up.
    {
        std::vector<VecQ> lifted;
        for (int i = 0; i < m; ++i) {
            bool zero = true;
            for (const auto& e : rows[i])
                if (e != 0) zero = false;
            if (zero) continue;
            VecQ l = rows[i];
            l.emplace_back(1);
            lifted.push_back(std::move(l));
        }
        VecQ target(k, Rat(0));
        target.emplace_back(1);
        rep.pointed = lifted.empty() ? true : !in_cone(lifted, target);
    }

    // (b): a violation is a subset I with omega in sum_{i in I} R_{>0} D_i
    // and rank(D_I) < k. Every such I extends to J = {i : D_i in V} for
    // V = span(D_I), a proper subspace spanned by < k rows, and J violates
    // too; so testing the closures of all small-subset spans is complete.
    rep.generic = true;
    std::set<std::string> seen;
    std::vector<int> subset;
    std::function<void(int, int)> enumerate = [&](int from, int remaining) {
        if (!rep.generic) return;
        {
            MatQ rref;
            for (int i : subset) rref.push_back(rows[i]);
            rref_q(rref);
            if (seen.insert(rref_signature(rref)).second && in_span(rref, git.omega)) {
                std::vector<int> closure;
                for (int i = 0; i < m; ++i)
                    if (in_span(rref, rows[i])) closure.push_back(i);
                if (in_strict_cone(rows, closure, git.omega)) rep.generic = false;
            }
        }
        if (remaining == 0) return;
        for (int i = from; i < m; ++i) {
            subset.push_back(i);
            enumerate(i + 1, remaining - 1);
            subset.pop_back();
        }
    };
    enumerate(0, k - 1);
    return rep;
}

} // namespace toric
