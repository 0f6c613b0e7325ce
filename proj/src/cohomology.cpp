#include "toric/cohomology.hpp"

#include "toric/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toric {
namespace {

// All degree-d exponent vectors over k variables, descending lex. RREF over
// this order eats the lex-largest monomials as relation leads, so the
// surviving basis is the lex-smallest completion.
std::vector<Monomial> monomials_of_degree(int k, int d) {
    std::vector<Monomial> out;
    Monomial cur(k, 0);
    std::function<void(int, int)> rec = [&](int var, int rest) {
        if (var == k - 1) {
            cur[var] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[var] = e;
            rec(var + 1, rest - e);
        }
    };
    rec(0, d);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m(ma.size());
            int deg = 0;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
                deg += m[i];
            }
            if (deg > max_degree) continue;
            out[m] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Poly divisor_poly(const Model& model, int i) {
    Poly p;
    const int k = model.git.k();
    for (int a = 0; a < k; ++a) {
        if (model.git.charges[i][a] == 0) continue;
        Monomial m(k, 0);
        m[a] = 1;
        p[m] = Rat(model.git.charges[i][a]);
    }
    return p;
}

} // namespace

std::vector<Rat> bernoulli_numbers(int max_index) {
    std::vector<Rat> b(max_index + 1);
    b[0] = 1;
    for (int m = 1; m <= max_index; ++m) {
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        Rat c(1);
        Rat sum(0);
        for (int j = 0; j < m; ++j) {
            sum += c * b[j];
            c = c * (m + 1 - j) / (j + 1);
        }
        b[m] = -sum / (m + 1);
    }
    return b;
}

RingPresentation RingPresentation::build(const Model& model) {
    RingPresentation pres;
    pres.model_ = model;
    pres.n_ = model.fan.n;
    pres.k_ = model.git.k();
    const int n = pres.n_;
    const int k = pres.k_;
    const int m = model.git.m();

    // Minimal non-faces of the fan's simplicial complex.
    std::vector<std::vector<int>> nonfaces;
    auto is_face = [&](const std::vector<int>& s) {
        for (const auto& cone : model.fan.max_cones)
            if (std::includes(cone.begin(), cone.end(), s.begin(), s.end())) return true;
        return false;
    };
    for (int size = 2; size <= n + 1; ++size) {
        std::vector<int> subset;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(subset.size()) == size) {
                if (is_face(subset)) return;
                for (int drop = 0; drop < size; ++drop) {
                    std::vector<int> sub;
                    for (int j = 0; j < size; ++j)
                        if (j != drop) sub.push_back(subset[j]);
                    if (!is_face(sub)) return; // not minimal
                }
                nonfaces.push_back(subset);
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
    std::vector<Poly> sr_gens;
    for (const auto& s : nonfaces) {
        Poly g;
        g[Monomial(k, 0)] = 1;
        for (int i : s) g = poly_mul(g, divisor_poly(model, i), 2 * n + 1);
        sr_gens.push_back(std::move(g));
    }

    pres.monomials_.resize(n + 1);
    pres.monomial_idx_.resize(n + 1);
    pres.degree_basis_.resize(n + 1);
    pres.reduce_.resize(n + 1);
    pres.betti_.assign(n + 1, 0);

    auto relation_matrix = [&](int d) {
        const std::vector<Monomial> mons = monomials_of_degree(k, d);
        std::map<Monomial, int> idx;
        for (std::size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = static_cast<int>(i);
        MatQ rel;
        for (std::size_t g = 0; g < sr_gens.size(); ++g) {
            const int gdeg = static_cast<int>(nonfaces[g].size());
            if (gdeg > d) continue;
            for (const Monomial& q : monomials_of_degree(k, d - gdeg)) {
                Poly qp;
                qp[q] = 1;
                const Poly prod = poly_mul(qp, sr_gens[g], d);
                VecQ row(mons.size(), Rat(0));
                for (const auto& [mon, coeff] : prod) row[idx.at(mon)] = coeff;
                rel.push_back(std::move(row));
            }
        }
        return std::pair{mons, rel};
    };

    for (int d = 0; d <= n; ++d) {
        auto [mons, rel] = relation_matrix(d);
        pres.monomials_[d] = mons;
        for (std::size_t i = 0; i < mons.size(); ++i)
            pres.monomial_idx_[d][mons[i]] = static_cast<int>(i);
        std::vector<int> pivots = rref_q(rel);
        std::vector<bool> is_pivot(mons.size(), false);
        std::vector<int> pivot_row(mons.size(), -1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            is_pivot[pivots[r]] = true;
            pivot_row[pivots[r]] = static_cast<int>(r);
        }
        std::vector<int> basis_cols;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (!is_pivot[c]) basis_cols.push_back(static_cast<int>(c));
        pres.degree_basis_[d] = basis_cols;
        pres.betti_[d] = static_cast<int>(basis_cols.size());
        std::map<int, int> basis_pos;
        for (std::size_t j = 0; j < basis_cols.size(); ++j) basis_pos[basis_cols[j]] = static_cast<int>(j);
        MatQ red(mons.size(), VecQ(basis_cols.size(), Rat(0)));
        for (std::size_t c = 0; c < mons.size(); ++c) {
            if (!is_pivot[c]) {
                red[c][basis_pos.at(static_cast<int>(c))] = 1;
            } else {
                const VecQ& row = rel[pivot_row[c]];
                for (std::size_t j = 0; j < basis_cols.size(); ++j) red[c][j] = -row[basis_cols[j]];
            }
        }
        pres.reduce_[d] = std::move(red);
    }

    // Degrees above n must vanish in the quotient.
    for (int d = n + 1; d <= 2 * n; ++d) {
        auto [mons, rel] = relation_matrix(d);
        if (static_cast<int>(rref_q(rel).size()) != static_cast<int>(mons.size()))
            throw Error("PresentationInconsistent",
                        "quotient does not vanish in degree " + std::to_string(d));
    }

    int total = 0;
    for (int d = 0; d <= n; ++d) {
        for (std::size_t j = 0; j < pres.degree_basis_[d].size(); ++j)
            pres.basis_.emplace_back(d, static_cast<int>(j));
        total += pres.betti_[d];
    }
    if (total != static_cast<int>(model.fan.max_cones.size()))
        throw Error("PresentationInconsistent",
                    "sum of Betti numbers " + std::to_string(total) + " differs from the number of maximal cones " +
                        std::to_string(model.fan.max_cones.size()));
    if (pres.betti_[0] != 1 || pres.betti_[n] != 1)
        throw Error("PresentationInconsistent", "H^0 or H^{2n} is not one-dimensional");

    // Normalization of the top functional: integrate(prod_{i in I} D_i) = 1
    // for every maximal cone I.
    Rat top_coeff;
    bool first = true;
    for (const auto& cone : model.fan.max_cones) {
        Poly prod;
        prod[Monomial(k, 0)] = 1;
        for (int i : cone) prod = poly_mul(prod, divisor_poly(model, i), n);
        Rat c(0);
        for (const auto& [mon, coeff] : prod) {
            int deg = 0;
            for (int e : mon) deg += e;
            if (deg != n) continue;
            const int mi = pres.monomial_idx_[n].at(mon);
            c += coeff * pres.reduce_[n][mi][0];
        }
        if (first) {
            top_coeff = c;
            first = false;
        } else if (c != top_coeff) {
            throw Error("NormalizationConflict", "maximal cones disagree on the top functional");
        }
    }
    if (top_coeff == 0) throw Error("NormalizationConflict", "top product of a maximal cone vanishes");
    pres.top_value_ = 1 / top_coeff;

    // Multiplication table: basis monomial x basis monomial, reduced.
    const int N = pres.dim();
    pres.mult_.assign(N, MatQ(N, VecQ(N, Rat(0))));
    for (int i = 0; i < N; ++i) {
        const auto [di, ji] = pres.basis_[i];
        const Monomial& mi = pres.monomials_[di][pres.degree_basis_[di][ji]];
        for (int j = 0; j < N; ++j) {
            const auto [dj, jj] = pres.basis_[j];
            if (di + dj > n) continue;
            const Monomial& mj = pres.monomials_[dj][pres.degree_basis_[dj][jj]];
            Monomial prod(k);
            for (int a = 0; a < k; ++a) prod[a] = mi[a] + mj[a];
            const int d = di + dj;
            const int mon_idx = pres.monomial_idx_[d].at(prod);
            // basis offset of degree d
            int offset = 0;
            for (int dd = 0; dd < d; ++dd) offset += pres.betti_[dd];
            for (std::size_t l = 0; l < pres.degree_basis_[d].size(); ++l)
                pres.mult_[i][j][offset + static_cast<int>(l)] = pres.reduce_[d][mon_idx][l];
        }
    }
    return pres;
}

const Monomial& RingPresentation::basis_monomial(int basis_index) const {
    const auto [d, j] = basis_[basis_index];
    return monomials_[d][degree_basis_[d][j]];
}

std::string RingPresentation::basis_monomial_name(int basis_index) const {
    const Monomial& m = basis_monomial(basis_index);
    std::ostringstream os;
    bool any = false;
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (m[a] == 0) continue;
        if (any) os << '*';
        os << 'p' << a + 1;
        if (m[a] > 1) os << '^' << m[a];
        any = true;
    }
    return any ? os.str() : "1";
}

std::vector<int> RingPresentation::basis_in_degree(int degree) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].first == degree) out.push_back(i);
    return out;
}

VecQ RingPresentation::unit() const {
    VecQ u = zero();
    u[0] = 1;
    return u;
}

VecQ RingPresentation::p_class(int a) const {
    Poly p;
    Monomial m(k_, 0);
    m[a] = 1;
    p[m] = 1;
    return reduce(p);
}

VecQ RingPresentation::divisor_class(int i) const { return reduce(divisor_poly(model_, i)); }

VecQ RingPresentation::c1() const {
    Poly sum;
    for (int i = 0; i < model_.git.m(); ++i)
        for (const auto& [mon, c] : divisor_poly(model_, i)) sum[mon] += c;
    return reduce(sum);
}

VecQ RingPresentation::reduce(const Poly& poly) const {
    VecQ out = zero();
    for (const auto& [mon, coeff] : poly) {
        int deg = 0;
        for (int e : mon) deg += e;
        if (deg > n_) continue;
        const int mi = monomial_idx_[deg].at(mon);
        int offset = 0;
        for (int dd = 0; dd < deg; ++dd) offset += betti_[dd];
        for (std::size_t l = 0; l < degree_basis_[deg].size(); ++l)
            out[offset + static_cast<int>(l)] += coeff * reduce_[deg][mi][l];
    }
    return out;
}

VecQ RingPresentation::multiply(const VecQ& a, const VecQ& b) const {
    if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
        throw Error("FieldMismatch", "classes come from different presentations");
    VecQ out = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            const Rat f = a[i] * b[j];
            const VecQ& row = mult_[i][j];
            for (int l = 0; l < dim(); ++l)
                if (row[l] != 0) out[l] += f * row[l];
        }
    }
    return out;
}

Rat RingPresentation::integrate(const VecQ& a) const {
    if (static_cast<int>(a.size()) != dim())
        throw Error("FieldMismatch", "class comes from a different presentation");
    return a[dim() - 1] * top_value_;
}

VecQ RingPresentation::grading_mu(const VecQ& a) const {
    VecQ out = a;
    for (int i = 0; i < dim(); ++i) out[i] *= Rat(2 * basis_[i].first - n_, 2);
    return out;
}

VecQ RingPresentation::chern_total() const {
    Poly prod;
    prod[Monomial(k_, 0)] = 1;
    for (int i = 0; i < model_.git.m(); ++i) {
        Poly factor = divisor_poly(model_, i);
        factor[Monomial(k_, 0)] += 1;
        prod = poly_mul(prod, factor, n_);
    }
    return reduce(prod);
}

VecQ RingPresentation::todd_class() const {
    // x/(1-e^{-x}) = sum_j (-1)^j B_j x^j / j!
    const std::vector<Rat> bern = bernoulli_numbers(n_);
    std::vector<Rat> td(n_ + 1);
    Rat fact(1);
    for (int j = 0; j <= n_; ++j) {
        if (j > 0) fact *= j;
        td[j] = (j % 2 ? -bern[j] : bern[j]) / fact;
    }
    Poly prod;
    prod[Monomial(k_, 0)] = 1;
    for (int i = 0; i < model_.git.m(); ++i) {
        const Poly d = divisor_poly(model_, i);
        Poly factor;
        factor[Monomial(k_, 0)] = td[0];
        Poly power;
        power[Monomial(k_, 0)] = 1;
        for (int j = 1; j <= n_; ++j) {
            power = poly_mul(power, d, n_);
            if (td[j] == 0) continue;
            for (const auto& [mon, c] : power) factor[mon] += td[j] * c;
        }
        prod = poly_mul(prod, factor, n_);
    }
    return reduce(prod);
}

template <class F>
static F field_from_rat(const Rat& r) {
    return F(to_double(r));
}

template <class F>
NumericTables<F>::NumericTables(const RingPresentation& pres) {
    dim = pres.dim();
    degree.resize(dim);
    for (int i = 0; i < dim; ++i) degree[i] = pres.degree_of(i);
    mult.assign(dim, std::vector<std::vector<F>>(dim, std::vector<F>(dim)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int l = 0; l < dim; ++l) mult[i][j][l] = field_from_rat<F>(pres.mult_table()[i][j][l]);
    VecQ top = pres.zero();
    top[dim - 1] = 1;
    top_value = field_from_rat<F>(pres.integrate(top));
}

template <class F>
std::vector<F> NumericTables<F>::multiply(const std::vector<F>& a, const std::vector<F>& b) const {
    std::vector<F> out(dim, F(0));
    for (int i = 0; i < dim; ++i) {
        if (a[i] == F(0)) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j] == F(0)) continue;
            const F f = a[i] * b[j];
            for (int l = 0; l < dim; ++l) out[l] += f * mult[i][j][l];
        }
    }
    return out;
}

template <class F>
F NumericTables<F>::integrate(const std::vector<F>& a) const {
    return a[dim - 1] * top_value;
}

template <class F>
std::vector<F> NumericTables<F>::exp_nilpotent(const std::vector<F>& log_part) const {
    std::vector<F> out(dim, F(0));
    out[0] = F(1);
    std::vector<F> power(dim, F(0));
    power[0] = F(1);
    double fact = 1.0;
    const int max_deg = degree.empty() ? 0 : degree.back();
    for (int r = 1; r <= max_deg; ++r) {
        power = multiply(power, log_part);
        fact *= r;
        for (int l = 0; l < dim; ++l) out[l] += power[l] / F(fact);
    }
    return out;
}

template <class F>
std::vector<F> NumericTables<F>::degree_scale(const std::vector<F>& a, const F& s) const {
    std::vector<F> out(a);
    std::vector<F> powers(degree.back() + 1, F(1));
    for (std::size_t p = 1; p < powers.size(); ++p) powers[p] = powers[p - 1] * s;
    for (int i = 0; i < dim; ++i) out[i] *= powers[degree[i]];
    return out;
}

template struct NumericTables<double>;
template struct NumericTables<std::complex<double>>;

} // namespace toric
