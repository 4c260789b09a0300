#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gtklr/errors.hpp"

namespace gtklr {

using Coeff = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable q.  Canonical form: terms
// sorted by increasing exponent, no zero coefficients; equality of the
// term lists is equality of polynomials.
class Laurent {
public:
    using Term = std::pair<int, Coeff>;

    Laurent() = default;

    static Laurent constant(long long c) { return monomial(Coeff(c), 0); }

    static Laurent monomial(Coeff c, int exp) {
        Laurent p;
        if (c != 0) p.terms_.emplace_back(exp, std::move(c));
        return p;
    }

    static Laurent one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }

    const std::vector<Term>& terms() const { return terms_; }

    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }

    Coeff coeff_at(int exp) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == exp) return it->second;
        return Coeff(0);
    }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent& operator+=(const Laurent& o) {
        merge(o, 1);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        merge(o, -1);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    Laurent operator-() const {
        Laurent r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        int lo = a.min_exp() + b.min_exp();
        int hi = a.max_exp() + b.max_exp();
        std::vector<Coeff> buf(static_cast<size_t>(hi - lo + 1));
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                buf[static_cast<size_t>(ta.first + tb.first - lo)] += ta.second * tb.second;
        Laurent r;
        for (size_t i = 0; i < buf.size(); ++i)
            if (buf[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i), std::move(buf[i]));
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(const Coeff& c) const {
        if (c == 0) return Laurent();
        Laurent r(*this);
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    // p * q^d
    Laurent shifted(int d) const {
        Laurent r(*this);
        for (auto& t : r.terms_) t.first += d;
        return r;
    }

    // this += p * c * q^d  (the shuffle inner loop)
    void add_scaled_shifted(const Laurent& p, const Coeff& c, int d) {
        Laurent tmp = p.scaled(c);
        for (auto& t : tmp.terms_) t.first += d;
        merge(tmp, 1);
    }

    // bar involution q -> q^{-1}
    Laurent bar() const {
        Laurent r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.emplace_back(-it->first, it->second);
        return r;
    }

    bool is_bar_invariant() const { return *this == bar(); }

    // part with exponents >= 1
    Laurent positive_part() const {
        Laurent r;
        for (const auto& t : terms_)
            if (t.first >= 1) r.terms_.push_back(t);
        return r;
    }

    Coeff eval_at_one() const {
        Coeff s = 0;
        for (const auto& t : terms_) s += t.second;
        return s;
    }

    bool has_nonneg_coeffs() const {
        for (const auto& t : terms_)
            if (t.second < 0) return false;
        return true;
    }

    std::string str() const;  // human-readable, e.g. "q^2 + 2 + q^-2"

private:
    void merge(const Laurent& o, int sign) {
        if (o.terms_.empty()) return;
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                out.push_back(*a++);
            } else if (a == terms_.end() || b->first < a->first) {
                out.emplace_back(b->first, sign > 0 ? b->second : -b->second);
                ++b;
            } else {
                Coeff c = a->second;
                if (sign > 0)
                    c += b->second;
                else
                    c -= b->second;
                if (c != 0) out.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
    }

    std::vector<Term> terms_;
};

// Exact division: returns c with c*d == p, throws on failure.
Laurent exact_div(const Laurent& p, const Laurent& d);

// Balanced quantum integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}.
Laurent quantum_integer(int m);

// Balanced quantum factorial [m]! = prod_{s=1}^{m} [s]; [0]! = [1]! = 1.
Laurent quantum_factorial(int m);

// Split alpha = rho + kappa*gamma with rho bar-invariant and gamma in qZ[q].
// kappa must be nonzero and bar-invariant.  The pair is unique when it
// exists; failure means kappa was wrong for this alpha.
std::pair<Laurent, Laurent> peel_split(const Laurent& alpha, const Laurent& kappa);

}  // namespace gtklr
