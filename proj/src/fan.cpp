#include "toric/fan.hpp"

#include "toric/cones.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace toric {
namespace {

MatZ cone_matrix(const Fan& fan, const std::vector<int>& cone) {
    MatZ m(fan.n, VecZ(cone.size(), 0));
    for (std::size_t j = 0; j < cone.size(); ++j)
        for (int i = 0; i < fan.n; ++i) m[i][j] = fan.rays[cone[j]][i];
    return m;
}

std::string cone_to_string(const std::vector<int>& cone) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < cone.size(); ++i) os << (i ? "," : "") << cone[i] + 1;
    os << '}';
    return os.str();
}

void for_subsets(int m, int size, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(subset.size()) == size) {
            fn(subset);
            return;
        }
        for (int i = from; i < m; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
    };
    rec(0);
}

} // namespace

void validate_fan(const Fan& fan) {
    const int m = fan.num_rays();
    if (fan.n < 1) throw Error("GeometryError", "fan dimension must be at least 1");
    if (m < fan.n + 1) throw Error("GeometryError", "too few rays for a complete fan");
    std::set<VecZ> distinct;
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(fan.rays[i].size()) != fan.n)
            throw Error("GeometryError", "ray " + std::to_string(i + 1) + " has wrong dimension");
        if (primitive_vector(fan.rays[i]) != fan.rays[i] ||
            std::all_of(fan.rays[i].begin(), fan.rays[i].end(), [](const Int& e) { return e == 0; }))
            throw Error("GeometryError", "ray " + std::to_string(i + 1) + " is not primitive");
        if (!distinct.insert(fan.rays[i]).second)
            throw Error("GeometryError", "ray " + std::to_string(i + 1) + " repeats an earlier ray");
    }
    if (fan.max_cones.empty()) throw Error("GeometryError", "fan has no maximal cones");
    std::set<std::vector<int>> cone_set;
    std::vector<bool> used(m, false);
    for (const auto& cone : fan.max_cones) {
        if (static_cast<int>(cone.size()) != fan.n)
            throw Error("GeometryError", "cone " + cone_to_string(cone) + " is not of size n");
        if (!std::is_sorted(cone.begin(), cone.end()))
            throw Error("GeometryError", "cone index sets must be sorted");
        for (int i : cone) {
            if (i < 0 || i >= m) throw Error("GeometryError", "cone index out of range");
            used[i] = true;
        }
        if (!cone_set.insert(cone).second)
            throw Error("GeometryError", "duplicate maximal cone " + cone_to_string(cone));
        const Int det = det_z(cone_matrix(fan, cone));
        if (det != 1 && det != -1)
            throw Error("NotSmooth", "cone " + cone_to_string(cone) + " is not unimodular");
    }
    for (int i = 0; i < m; ++i)
        if (!used[i]) throw Error("EmptyDivisor", "ray " + std::to_string(i + 1) + " lies in no maximal cone");

    // Completeness certificate: every wall in exactly two cones, wall graph
    // connected.
    std::map<std::vector<int>, std::vector<int>> wall_cones;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (int drop = 0; drop < fan.n; ++drop) {
            std::vector<int> face;
            for (int j = 0; j < fan.n; ++j)
                if (j != drop) face.push_back(cone[j]);
            wall_cones[face].push_back(static_cast<int>(c));
        }
    }
    for (const auto& [face, cones] : wall_cones)
        if (cones.size() != 2)
            throw Error("GeometryError", "wall " + cone_to_string(face) + " lies in " +
                                             std::to_string(cones.size()) + " maximal cones (need 2)");
    std::vector<std::vector<int>> adj(fan.max_cones.size());
    for (const auto& [face, cones] : wall_cones) {
        adj[cones[0]].push_back(cones[1]);
        adj[cones[1]].push_back(cones[0]);
    }
    std::vector<bool> visited(fan.max_cones.size(), false);
    std::vector<int> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int nb : adj[c])
            if (!visited[nb]) {
                visited[nb] = true;
                stack.push_back(nb);
            }
    }
    if (!std::all_of(visited.begin(), visited.end(), [](bool b) { return b; }))
        throw Error("GeometryError", "fan wall graph is disconnected");
}

Fan fan_from_git(const GitPresentation& git) {
    const StabilityReport rep = check_stability(git);
    if (!rep.ok()) {
        std::string which;
        if (!rep.cone_membership) which += " (a)";
        if (!rep.generic) which += " (b)";
        if (!rep.pointed) which += " (c)";
        throw Error("GeometryError", "stability condition" + which + " failed");
    }
    const int m = git.m();
    const int k = git.k();
    const int n = git.n();
    if (n < 1) throw Error("GeometryError", "m = k leaves no fan dimensions");

    // Section of Z^m -> N from the Hermite normal form of the charge matrix:
    // U*charges = [H; 0]; the quotient is free iff H is the identity, and the
    // bottom n rows of U then project Z^m onto N.
    const HnfResult hnf = hnf_rows(git.charges);
    if (hnf.rank != k) throw Error("RankDeficient", "charge matrix has rank < k");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (hnf.h[i][j] != (i == j ? 1 : 0))
                throw Error("NotSmooth", "quotient lattice Z^m / charges has torsion");
    Fan fan;
    fan.n = n;
    fan.rays.resize(m, VecZ(n, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) fan.rays[i][j] = hnf.u[k + j][i];

    std::vector<VecQ> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = git.charge_row_q(i);
    for_subsets(m, n, [&](const std::vector<int>& cone) {
        std::vector<int> complement;
        for (int i = 0; i < m; ++i)
            if (!std::binary_search(cone.begin(), cone.end(), i)) complement.push_back(i);
        if (!in_strict_cone(rows, complement, git.omega)) return;
        const Int det = det_z(cone_matrix(fan, cone));
        if (det != 1 && det != -1)
            throw Error("NotSmooth", "chamber cone " + cone_to_string(cone) + " is not unimodular");
        fan.max_cones.push_back(cone);
    });
    std::vector<bool> used(m, false);
    for (const auto& cone : fan.max_cones)
        for (int i : cone) used[i] = true;
    for (int i = 0; i < m; ++i)
        if (!used[i])
            throw Error("EmptyDivisor",
                        "ray " + std::to_string(i + 1) + " lies in no chamber cone (empty divisor)");
    validate_fan(fan);
    return fan;
}

GitPresentation git_from_fan(const Fan& fan, const std::optional<VecQ>& omega_hint) {
    validate_fan(fan);
    const int m = fan.num_rays();
    MatZ b(fan.n, VecZ(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < fan.n; ++j) b[j][i] = fan.rays[i][j];
    const MatZ relations = kernel_lattice(b); // k x m
    const int k = static_cast<int>(relations.size());
    if (k != m - fan.n) throw Error("GeometryError", "rays do not span the lattice");

    GitPresentation git;
    git.charges.assign(m, VecZ(k, 0));
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < k; ++a) git.charges[i][a] = relations[a][i];

    if (omega_hint) {
        if (static_cast<int>(omega_hint->size()) != k)
            throw Error("SchemaError", "omega hint has wrong dimension");
        git.omega = *omega_hint;
    } else {
        // Interior point of the nef chamber: a functional strictly positive
        // on every wall class. Try independent subsets of the wall classes
        // as normalization equations.
        Model probe{"", git, fan};
        probe.git.omega.assign(k, Rat(0)); // placeholder; walls ignore omega
        const std::vector<CurveClass> walls = wall_curve_classes(probe);
        std::vector<VecQ> wall_q;
        for (const auto& w : walls) wall_q.push_back(vec_q_from_z(w.d));
        std::optional<VecQ> found;
        const int count = static_cast<int>(walls.size());
        for (int size = std::min(count, k); size >= 1 && !found; --size) {
            for_subsets(count, size, [&](const std::vector<int>& s) {
                if (found) return;
                MatQ a;
                for (int idx : s) a.push_back(wall_q[idx]);
                const auto sol = solve_q(a, VecQ(s.size(), Rat(1)));
                if (!sol) return;
                for (const auto& w : wall_q)
                    if (dot_q(w, sol->particular) <= 0) return;
                found = sol->particular;
            });
        }
        if (!found) throw Error("NoAmpleClass", "nef chamber has no rational interior point");
        git.omega = *found;
    }

    const StabilityReport rep = check_stability(git);
    if (!rep.ok()) throw Error("NoAmpleClass", "selected omega fails the stability conditions");
    // The chamber of omega must reproduce the input cones.
    std::vector<VecQ> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = git.charge_row_q(i);
    std::set<std::vector<int>> cones(fan.max_cones.begin(), fan.max_cones.end());
    bool consistent = true;
    for_subsets(m, fan.n, [&](const std::vector<int>& cone) {
        std::vector<int> complement;
        for (int i = 0; i < m; ++i)
            if (!std::binary_search(cone.begin(), cone.end(), i)) complement.push_back(i);
        if (in_strict_cone(rows, complement, git.omega) != (cones.count(cone) > 0)) consistent = false;
    });
    if (!consistent)
        throw Error("NoAmpleClass", "omega does not lie in the chamber of the given fan");
    return git;
}

Model make_model(std::string name, const GitPresentation& git) {
    Model model;
    model.name = std::move(name);
    model.git = git;
    model.fan = fan_from_git(git);
    return model;
}

Model make_model(std::string name, const Fan& fan, const std::optional<VecQ>& omega_hint) {
    Model model;
    model.name = std::move(name);
    model.fan = fan;
    model.git = git_from_fan(fan, omega_hint);
    validate_fan(model.fan);
    return model;
}

std::vector<CurveClass> wall_curve_classes(const Model& model) {
    const Fan& fan = model.fan;
    std::map<std::vector<int>, std::vector<int>> wall_cones;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (int drop = 0; drop < fan.n; ++drop) {
            std::vector<int> face;
            for (int j = 0; j < fan.n; ++j)
                if (j != drop) face.push_back(cone[j]);
            wall_cones[face].push_back(static_cast<int>(c));
        }
    }
    std::set<CurveClass> classes;
    for (const auto& [face, cones] : wall_cones) {
        if (cones.size() != 2) throw Error("GeometryError", "fan is not complete");
        std::set<int> union_set(face.begin(), face.end());
        for (int c : cones)
            for (int i : fan.max_cones[c]) union_set.insert(i);
        const std::vector<int> support(union_set.begin(), union_set.end());
        // The n+1 rays of the two adjacent cones satisfy a unique primitive
        // relation; its sign is fixed by the off-wall rays.
        MatZ rays_mat(fan.n, VecZ(support.size(), 0));
        for (std::size_t j = 0; j < support.size(); ++j)
            for (int i = 0; i < fan.n; ++i) rays_mat[i][j] = fan.rays[support[j]][i];
        const MatZ kernel = kernel_lattice(rays_mat);
        if (kernel.size() != 1) throw Error("GeometryError", "wall relation is not unique");
        VecZ rel = primitive_vector(kernel[0]);
        int off_ray = -1;
        for (std::size_t j = 0; j < support.size(); ++j)
            if (!std::binary_search(face.begin(), face.end(), support[j])) {
                off_ray = static_cast<int>(j);
                break;
            }
        if (rel[off_ray] < 0)
            for (auto& e : rel) e = -e;
        for (std::size_t j = 0; j < support.size(); ++j)
            if (!std::binary_search(face.begin(), face.end(), support[j]) && rel[j] <= 0)
                throw Error("GeometryError", "wall relation has non-positive off-wall coefficient");
        VecZ full(model.git.m(), 0);
        for (std::size_t j = 0; j < support.size(); ++j) full[support[j]] = rel[j];
        const auto d = solve_integer(model.git.charges, full);
        if (!d) throw Error("GeometryError", "wall relation is not a curve class");
        classes.insert(CurveClass{*d});
    }
    return {classes.begin(), classes.end()};
}

FanoReport is_weak_fano(const Model& model) {
    FanoReport rep;
    rep.weak_fano = true;
    rep.fano = true;
    for (const auto& d : wall_curve_classes(model)) {
        Int c1_d = 0;
        for (int i = 0; i < model.git.m(); ++i) c1_d += model.pairing(i, d);
        if (c1_d < 0) rep.weak_fano = false;
        if (c1_d <= 0) rep.fano = false;
    }
    return rep;
}

std::vector<CurveClass> mori_points(const Model& model, const Rat& bound) {
    if (bound < 0) return {};
    const int k = model.git.k();
    const std::vector<CurveClass> walls = wall_curve_classes(model);
    std::vector<VecQ> wall_q;
    for (const auto& w : walls) {
        const Rat deg = model.omega_degree(w);
        if (deg <= 0)
            throw Error("UnboundedEnumeration",
                        "omega is not strictly positive on a wall class");
        wall_q.push_back(vec_q_from_z(w.d));
    }
    // Coordinate box from the vertices of {d in Mori cone : omega.d <= bound}:
    // the origin plus each wall class scaled to omega-degree = bound.
    Int box = 0;
    for (const auto& w : walls) {
        const Rat scale = bound / model.omega_degree(w);
        for (const auto& e : w.d) {
            Rat v = abs(Rat(e) * scale);
            Int ceil_v = v.get_num() / v.get_den() + (v.get_num() % v.get_den() != 0 ? 1 : 0);
            box = std::max(box, ceil_v);
        }
    }
    std::vector<CurveClass> points;
    VecZ d(k, 0);
    std::function<void(int)> sweep = [&](int coord) {
        if (coord == k) {
            const VecQ dq = vec_q_from_z(d);
            const Rat deg = dot_q(model.git.omega, dq);
            if (deg < 0 || deg > bound) return;
            if (!in_cone(wall_q, dq)) return;
            points.push_back(CurveClass{d});
            return;
        }
        for (Int v = -box; v <= box; ++v) {
            d[coord] = v;
            sweep(coord + 1);
        }
        d[coord] = 0;
    };
    sweep(0);
    std::sort(points.begin(), points.end(), [&](const CurveClass& x, const CurveClass& y) {
        const Rat dx = model.omega_degree(x), dy = model.omega_degree(y);
        if (dx != dy) return dx < dy;
        return x.d < y.d;
    });
    return points;
}

namespace {

// Normalized volume of conv(points) in dimension dim, by recursive facet
// decomposition against the first point.
Int normalized_volume_rec(const std::vector<VecZ>& points, int dim) {
    if (points.empty()) return 0;
    if (dim == 1) {
        Int lo = points[0][0], hi = points[0][0];
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }
    std::set<std::pair<VecZ, Int>> facets;
    for_subsets(static_cast<int>(points.size()), dim, [&](const std::vector<int>& s) {
        MatZ diffs(dim - 1, VecZ(dim, 0));
        for (int r = 0; r + 1 < dim; ++r)
            for (int c = 0; c < dim; ++c) diffs[r][c] = points[s[r + 1]][c] - points[s[0]][c];
        const MatZ kernel = kernel_lattice(diffs);
        if (kernel.size() != 1) return; // affinely dependent
        VecZ normal = primitive_vector(kernel[0]);
        Int value = dot_z(normal, points[s[0]]);
        bool all_le = true, all_ge = true;
        for (const auto& p : points) {
            const Int v = dot_z(normal, p);
            if (v > value) all_le = false;
            if (v < value) all_ge = false;
        }
        if (!all_le && !all_ge) return;
        if (!all_le) {
            for (auto& e : normal) e = -e;
            value = -value;
        }
        facets.insert({normal, value});
    });
    Int total = 0;
    for (const auto& [normal, value] : facets) {
        const Int height = value - dot_z(normal, points[0]);
        if (height == 0) continue;
        std::vector<VecZ> on_facet;
        for (const auto& p : points)
            if (dot_z(normal, p) == value) on_facet.push_back(p);
        // Lattice coordinates inside the facet hyperplane.
        const MatZ lattice = kernel_lattice({normal}); // (dim-1) x dim basis rows
        MatZ basis_cols(dim, VecZ(dim - 1, 0));
        for (int r = 0; r + 1 < dim; ++r)
            for (int c = 0; c < dim; ++c) basis_cols[c][r] = lattice[r][c];
        std::vector<VecZ> projected;
        for (const auto& p : on_facet) {
            VecZ rhs(dim);
            for (int c = 0; c < dim; ++c) rhs[c] = p[c] - on_facet[0][c];
            const auto coords = solve_integer(basis_cols, rhs);
            if (!coords) throw Error("GeometryError", "facet point outside its lattice");
            projected.push_back(*coords);
        }
        total += height * normalized_volume_rec(projected, dim - 1);
    }
    return total;
}

} // namespace

Int fan_polytope_volume(const Fan& fan) {
    validate_fan(fan);
    return normalized_volume_rec(fan.rays, fan.n);
}

} // namespace toric
