#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <string>
#include <vector>

#include "gtklr/words.hpp"

namespace gtklr {

using Rational = boost::multiprecision::cpp_rational;

// Flattened coordinates on Omega = {(i,j) : 1 <= i <= n, 1 <= j <= v_i}.
struct OmegaIndex {
    DimensionVector v;
    std::vector<size_t> row_offset;  // row i starts at row_offset[i-1]

    explicit OmegaIndex(DimensionVector dv);
    size_t size() const { return total_; }
    size_t at(int i, int j) const { return row_offset[static_cast<size_t>(i) - 1] + static_cast<size_t>(j) - 1; }

private:
    size_t total_ = 0;
};

using Point = std::vector<Rational>;             // one value per Omega cell
using ShiftVec = std::vector<int>;               // integer shift per cell
using CoeffFn = std::function<Rational(const Point&)>;  // exact; may divide

// Finite sum of terms f * S_s acting by (f*S_s h)(x) = f(x) * h(x + s).
// Coefficients are evaluators, not normal forms; identity checks are
// pointwise and exact.
struct ShiftOperator {
    struct Term {
        CoeffFn coeff;
        ShiftVec shift;
    };
    std::vector<Term> terms;

    static ShiftOperator zero() { return {}; }
    static ShiftOperator identity(size_t omega_size);
    static ShiftOperator multiplication(CoeffFn f, size_t omega_size);

    // exact evaluation of (this h)(x)
    Rational apply(const std::function<Rational(const Point&)>& h, const Point& x) const;
};

ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator add(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator subtract(const ShiftOperator& a, const ShiftOperator& b);
ShiftOperator scale(const ShiftOperator& a, long long c);
inline ShiftOperator commutator(const ShiftOperator& a, const ShiftOperator& b) {
    return subtract(compose(a, b), compose(b, a));
}

// The raising/lowering operators
//   X_i^{+-} = sum_j -+ prod_m(x_{i+-1,m} - x_{ij}) / prod_{m!=j}(x_{im} - x_{ij}) d_{ij}^{+-}
// with d_{ij}^{+-} the shift of x_{ij} by -+1.
ShiftOperator x_plus(int i, const DimensionVector& v);
ShiftOperator x_minus(int i, const DimensionVector& v);

// Multiplication by sum_k x_{ik} - sum_l x_{i-1,l} + (i-1).
ShiftOperator e_diag(int i, const DimensionVector& v);

// Randomized exact equality test on monomials of total degree <= 3 at
// points with distinct within-row coordinates.  A failed trial is a
// definitive counterexample; success is probabilistic.
bool check_identity(const ShiftOperator& a, const ShiftOperator& b, const DimensionVector& v,
                    int trials, unsigned long long seed);

struct RelationResult {
    std::string name;
    bool pass = false;
};

struct RelationReport {
    int n = 0;
    std::vector<RelationResult> relations;
    bool all_pass() const;
};

// Chevalley-Serre presentation checks for E_i = X_i^+, F_i = X_i^-,
// H_i = e_{ii} - e_{i+1,i+1} on v = (1, ..., n).
RelationReport verify_gl_relations(int n, int trials, unsigned long long seed);

}  // namespace gtklr
