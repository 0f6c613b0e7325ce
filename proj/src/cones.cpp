#include "toric/cones.hpp"

#include <algorithm>
#include <functional>

namespace toric {
namespace {

bool is_zero(const VecQ& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& e) { return e == 0; });
}

// Enumerate subsets of `pool` whose generators are linearly independent,
// invoking fn on each (including the empty set). fn returns true to stop.
bool for_independent_subsets(const std::vector<VecQ>& gens, const std::vector<int>& pool,
                             const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> current;
    MatQ rows; // running echelon of the current subset
    std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
        if (fn(current)) return true;
        for (std::size_t p = from; p < pool.size(); ++p) {
            const VecQ& cand = gens[pool[p]];
            // Reduce cand against the running echelon to test independence.
            VecQ red = cand;
            for (const VecQ& r : rows) {
                int lead = -1;
                for (std::size_t j = 0; j < r.size(); ++j)
                    if (r[j] != 0) { lead = static_cast<int>(j); break; }
                if (lead >= 0 && red[lead] != 0) {
                    const Rat f = red[lead] / r[lead];
                    for (std::size_t j = 0; j < r.size(); ++j) red[j] -= f * r[j];
                }
            }
            if (is_zero(red)) continue;
            rows.push_back(red);
            current.push_back(pool[p]);
            if (rec(p + 1)) return true;
            rows.pop_back();
            current.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace

bool in_cone(const std::vector<VecQ>& gens, const VecQ& target) {
    if (is_zero(target)) return true;
    std::vector<int> pool(gens.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    const std::size_t dim = target.size();
    return for_independent_subsets(gens, pool, [&](const std::vector<int>& s) {
        if (s.empty()) return false;
        MatQ a(dim, VecQ(s.size(), Rat(0)));
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) a[i][j] = gens[s[j]][i];
        const auto sol = solve_q(a, target);
        if (!sol) return false;
        // Independent columns: the solution is unique.
        return std::all_of(sol->particular.begin(), sol->particular.end(),
                           [](const Rat& x) { return x >= 0; });
    });
}

bool in_strict_cone(const std::vector<VecQ>& gens, const std::vector<int>& subset,
                    const VecQ& target) {
    const std::size_t dim = target.size();
    VecQ sigma(dim, Rat(0));
    for (int i : subset)
        for (std::size_t a = 0; a < dim; ++a) sigma[a] += gens[i][a];
    // target in relint(cone) iff target - lambda*sigma lies in the closed
    // cone for some lambda > 0.
    return for_independent_subsets(gens, subset, [&](const std::vector<int>& s) {
        if (s.empty()) {
            if (is_zero(sigma)) return is_zero(target);
            // target = lambda*sigma with lambda > 0?
            Rat lambda(0);
            for (std::size_t a = 0; a < dim; ++a) {
                if (sigma[a] != 0) { lambda = target[a] / sigma[a]; break; }
            }
            if (lambda <= 0) return false;
            for (std::size_t a = 0; a < dim; ++a)
                if (target[a] != lambda * sigma[a]) return false;
            return true;
        }
        // Solve [A_s | sigma] * (x, lambda) = target.
        MatQ a(dim, VecQ(s.size() + 1, Rat(0)));
        for (std::size_t j = 0; j < s.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) a[i][j] = gens[s[j]][i];
        for (std::size_t i = 0; i < dim; ++i) a[i][s.size()] = sigma[i];
        const auto sol = solve_q(a, target);
        if (!sol) return false;
        const std::size_t nvars = s.size() + 1;
        if (sol->nullspace.empty()) {
            for (std::size_t j = 0; j < s.size(); ++j)
                if (sol->particular[j] < 0) return false;
            return sol->particular[nvars - 1] > 0;
        }
        // A_s has independent columns, so the kernel is at most a line
        // (sigma dependent on A_s). Feasibility along x = p + t*u becomes
        // a 1-D interval intersection; the lambda component needs > 0.
        const VecQ& u = sol->nullspace.front();
        bool lo_open = false, hi_open = false, has_lo = false, has_hi = false;
        Rat lo(0), hi(0);
        auto add_bound = [&](const Rat& p, const Rat& du, bool strict) -> bool {
            // constraint: p + t*du >= 0 (or > 0 when strict)
            if (du == 0) return strict ? p > 0 : p >= 0;
            const Rat t0 = -p / du;
            if (du > 0) {
                if (!has_lo || t0 > lo || (t0 == lo && strict)) { lo = t0; lo_open = strict; has_lo = true; }
            } else {
                if (!has_hi || t0 < hi || (t0 == hi && strict)) { hi = t0; hi_open = strict; has_hi = true; }
            }
            return true;
        };
        for (std::size_t j = 0; j < s.size(); ++j)
            if (!add_bound(sol->particular[j], u[j], false)) return false;
        if (!add_bound(sol->particular[nvars - 1], u[nvars - 1], true)) return false;
        if (has_lo && has_hi) {
            if (lo > hi) return false;
            if (lo == hi && (lo_open || hi_open)) return false;
        }
        return true;
    });
}

} // namespace toric
