#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include "toric/fan.hpp"

#include <complex>
#include <map>
#include <vector>

namespace toric {

// Exponent vector in p_1..p_k; entries sum to the (half-)degree.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rat>;

// H*(X;Q) presented as Q[p_1..p_k] modulo the Stanley-Reisner ideal in the
// divisor substitution D_i = sum_a m_{ia} p_a. Classes are coefficient
// vectors over the fixed monomial basis (graded, degree-major order).
class RingPresentation {
public:
    static RingPresentation build(const Model& model);

    int dim() const { return static_cast<int>(basis_.size()); }
    int top_degree() const { return n_; }
    int picard_rank() const { return k_; }
    const Model& model() const { return model_; }

    const std::vector<int>& betti() const { return betti_; }
    int degree_of(int basis_index) const { return basis_[basis_index].first; }
    const Monomial& basis_monomial(int basis_index) const;
    std::string basis_monomial_name(int basis_index) const;

    // Indices of the basis elements of one degree, ascending.
    std::vector<int> basis_in_degree(int degree) const;

    VecQ zero() const { return VecQ(dim(), Rat(0)); }
    VecQ unit() const;
    VecQ p_class(int a) const;        // the generator p_a
    VecQ divisor_class(int i) const;  // D_i = sum_a m_{ia} p_a
    VecQ c1() const;                  // sum_i D_i

    VecQ reduce(const Poly& poly) const; // normal form of an arbitrary polynomial
    VecQ multiply(const VecQ& a, const VecQ& b) const;
    Rat integrate(const VecQ& a) const;
    VecQ grading_mu(const VecQ& a) const; // scales H^{2p} by (p - n/2)
    VecQ chern_total() const;             // prod_i (1 + D_i)
    VecQ todd_class() const;              // prod_i D_i / (1 - e^{-D_i})

    // Structure constants as numeric matrices: (mult_table[i])[j][l] is the
    // coefficient of basis l in basis_i * basis_j.
    const std::vector<MatQ>& mult_table() const { return mult_; }

private:
    Model model_;
    int n_ = 0, k_ = 0;
    std::vector<std::vector<Monomial>> monomials_;      // per degree 0..n, descending lex
    std::vector<std::map<Monomial, int>> monomial_idx_; // inverse lookup
    std::vector<std::vector<int>> degree_basis_;        // monomial indices forming the basis
    std::vector<MatQ> reduce_;                          // per degree: monomial -> basis coords
    std::vector<std::pair<int, int>> basis_;            // (degree, index into degree basis)
    std::vector<int> betti_;
    Rat top_value_;                                     // integrate(top basis monomial)
    std::vector<MatQ> mult_;
};

// Exact Bernoulli numbers B_0..B_max (B_1 = -1/2 convention).
std::vector<Rat> bernoulli_numbers(int max_index);

// Numeric copies of the structure constants for a coefficient field F.
template <class F>
struct NumericTables {
    int dim = 0;
    std::vector<int> degree;
    std::vector<std::vector<std::vector<F>>> mult;
    F top_value{};

    explicit NumericTables(const RingPresentation& pres);

    std::vector<F> multiply(const std::vector<F>& a, const std::vector<F>& b) const;
    F integrate(const std::vector<F>& a) const;
    // exp of a nilpotent class (no degree-0 part required on input's log side)
    std::vector<F> exp_nilpotent(const std::vector<F>& log_part) const;
    // scale H^{2p} slots by pow(s, p)
    std::vector<F> degree_scale(const std::vector<F>& a, const F& s) const;
};

extern template struct NumericTables<double>;
extern template struct NumericTables<std::complex<double>>;

} // namespace toric

#endif
