#include "gtklr/laurent.hpp"

#include <sstream>

namespace gtklr {

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Coeff c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        int e = it->first;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent exact_div(const Laurent& p, const Laurent& d) {
    if (d.is_zero()) throw domain_error("exact_div: division by zero");
    if (p.is_zero()) return Laurent();

    // Quotient exponents of an exact division lie in
    // [p.min - d.min, p.max - d.max].
    const int floor_exp = p.min_exp() - d.min_exp();
    Laurent r = p;
    Laurent q;
    const Coeff& dlead = d.terms().back().second;
    const int dmax = d.max_exp();
    while (!r.is_zero()) {
        int e = r.max_exp() - dmax;
        if (e < floor_exp) throw domain_error("exact_div: inexact division");
        const Coeff& rlead = r.terms().back().second;
        if (rlead % dlead != 0) throw domain_error("exact_div: inexact division");
        Laurent t = Laurent::monomial(rlead / dlead, e);
        q += t;
        r -= t * d;
    }
    return q;
}

Laurent quantum_integer(int m) {
    Laurent p;
    for (int e = m - 1; e >= 1 - m; e -= 2) p += Laurent::monomial(1, e);
    return p;
}

Laurent quantum_factorial(int m) {
    if (m < 0) throw domain_error("quantum_factorial: negative argument");
    Laurent p = Laurent::one();
    for (int s = 2; s <= m; ++s) p *= quantum_integer(s);
    return p;
}

std::pair<Laurent, Laurent> peel_split(const Laurent& alpha, const Laurent& kappa) {
    if (kappa.is_zero() || !kappa.is_bar_invariant())
        throw domain_error("peel_split: kappa must be nonzero and bar-invariant");
    Laurent diff = alpha - alpha.bar();
    if (diff.is_zero()) return {alpha, Laurent()};
    Laurent quot;
    try {
        quot = exact_div(diff, kappa);
    } catch (const domain_error&) {
        throw structural_error("peel_split: alpha - bar(alpha) not divisible by kappa");
    }
    // quot = gamma - bar(gamma) with gamma in qZ[q], so its positive part is gamma
    // and it can have no constant term.
    if (quot.coeff_at(0) != 0)
        throw structural_error("peel_split: unexpected constant term");
    Laurent gamma = quot.positive_part();
    Laurent rho = alpha - kappa * gamma;
    if (!rho.is_bar_invariant())
        throw structural_error("peel_split: residue is not bar-invariant");
    return {std::move(rho), std::move(gamma)};
}

}  // namespace gtklr
