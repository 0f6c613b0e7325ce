#include "toric/linalg.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <cstddef>

namespace toric {

MatZ mat_z_identity(int n) {
    MatZ id(n, VecZ(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

MatZ mat_z_transpose(const MatZ& a) {
    if (a.empty()) return {};
    MatZ t(a[0].size(), VecZ(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

VecZ mat_z_mul_vec(const MatZ& a, const VecZ& x) {
    VecZ y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

MatZ mat_z_mul(const MatZ& a, const MatZ& b) {
    MatZ c(a.size(), VecZ(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Int dot_z(const VecZ& a, const VecZ& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int det_z(MatZ a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { swap = i; break; }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

MatQ mat_q_from_z(const MatZ& a) {
    MatQ q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        q[i].reserve(a[i].size());
        for (const auto& e : a[i]) q[i].emplace_back(e);
    }
    return q;
}

VecQ vec_q_from_z(const VecZ& a) {
    VecQ q;
    q.reserve(a.size());
    for (const auto& e : a) q.emplace_back(e);
    return q;
}

Rat dot_q(const VecQ& a, const VecQ& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

HnfResult hnf_rows(const MatZ& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    HnfResult res{a, mat_z_identity(rows), 0};
    MatZ& h = res.h;
    MatZ& u = res.u;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction in column c below row r.
        while (true) {
            int piv = -1;
            for (int i = r; i < rows; ++i) {
                if (h[i][c] != 0 && (piv < 0 || abs(h[i][c]) < abs(h[piv][c]))) piv = i;
            }
            if (piv < 0) break;
            std::swap(h[r], h[piv]);
            std::swap(u[r], u[piv]);
            bool cleared = true;
            for (int i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                Int quot = h[i][c] / h[r][c]; // truncated division; loop handles remainders
                if (quot != 0) {
                    for (int j = 0; j < cols; ++j) h[i][j] -= quot * h[r][j];
                    for (int j = 0; j < rows; ++j) u[i][j] -= quot * u[r][j];
                }
                if (h[i][c] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (auto& e : h[r]) e = -e;
            for (auto& e : u[r]) e = -e;
        }
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Int quot;
            mpz_fdiv_q(quot.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
            if (quot != 0) {
                for (int j = 0; j < cols; ++j) h[i][j] -= quot * h[r][j];
                for (int j = 0; j < rows; ++j) u[i][j] -= quot * u[r][j];
            }
        }
        ++r;
    }
    res.rank = r;
    return res;
}

MatZ kernel_lattice(const MatZ& a) {
    // Kernel of x |-> a*x: row-HNF the transpose; the bottom rows of U
    // (beyond the rank) form a basis of the saturated kernel.
    const MatZ at = mat_z_transpose(a);
    const HnfResult res = hnf_rows(at);
    MatZ basis;
    for (std::size_t i = res.rank; i < res.u.size(); ++i) basis.push_back(res.u[i]);
    return basis;
}

std::optional<VecZ> solve_integer(const MatZ& a, const VecZ& b) {
    // Solve a*x = b via HNF of the transpose: y*a^T = ... use U*a^T = H,
    // then x = U^T * t where H^T t = b triangular-solves over Z.
    const MatZ at = mat_z_transpose(a); // cols x rows
    const HnfResult res = hnf_rows(at);
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    // res.h is (cols x rows): x^T * a^T = b^T  =>  (x^T U^{-1}) (U a^T) = b^T.
    // Set z = x^T U^{-1}: solve z * H = b^T with H in row-echelon form, z
    // integral, entries beyond rank forced to 0; then x = z * U.
    VecZ z(at.size(), 0);
    VecZ need(b);
    for (int r = 0; r < res.rank; ++r) {
        int lead = -1;
        for (int j = 0; j < rows; ++j)
            if (res.h[r][j] != 0) { lead = j; break; }
        if (lead < 0) break;
        if (need[lead] % res.h[r][lead] != 0) return std::nullopt;
        z[r] = need[lead] / res.h[r][lead];
        if (z[r] != 0)
            for (int j = 0; j < rows; ++j) need[j] -= z[r] * res.h[r][j];
    }
    for (const auto& e : need)
        if (e != 0) return std::nullopt;
    VecZ x(cols, 0);
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0)
            for (int j = 0; j < cols; ++j) x[j] += z[i] * res.u[i][j];
    return x;
}

VecZ primitive_vector(VecZ v) {
    Int g = 0;
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 0) return v;
    for (auto& e : v) e /= g;
    for (const auto& e : v) {
        if (e != 0) {
            if (e < 0)
                for (auto& f : v) f = -f;
            break;
        }
    }
    return v;
}

std::vector<int> rref_q(MatQ& a) {
    std::vector<int> pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        const Rat inv = a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_q(MatQ a) { return static_cast<int>(rref_q(a).size()); }

std::optional<AffineSolution> solve_q(const MatQ& a, const VecQ& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    MatQ aug(rows);
    for (int i = 0; i < rows; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    const std::vector<int> pivots = rref_q(aug);
    for (int p : pivots)
        if (p == cols) return std::nullopt; // pivot in the RHS column
    AffineSolution sol;
    sol.particular.assign(cols, Rat(0));
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        pivot_of_col[pivots[r]] = static_cast<int>(r);
        sol.particular[pivots[r]] = aug[r][cols];
    }
    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        VecQ null(cols, Rat(0));
        null[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) null[pivots[r]] = -aug[r][c];
        sol.nullspace.push_back(std::move(null));
    }
    return sol;
}

} // namespace toric
