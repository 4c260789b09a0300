#include "gtklr/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace gtklr {

OmegaIndex::OmegaIndex(DimensionVector dv) : v(std::move(dv)) {
    v.validate();
    row_offset.resize(static_cast<size_t>(v.n()));
    for (int i = 1; i <= v.n(); ++i) {
        row_offset[static_cast<size_t>(i) - 1] = total_;
        total_ += static_cast<size_t>(v.v[static_cast<size_t>(i) - 1]);
    }
}

ShiftOperator ShiftOperator::identity(size_t omega_size) {
    ShiftOperator op;
    op.terms.push_back({[](const Point&) { return Rational(1); }, ShiftVec(omega_size, 0)});
    return op;
}

ShiftOperator ShiftOperator::multiplication(CoeffFn f, size_t omega_size) {
    ShiftOperator op;
    op.terms.push_back({std::move(f), ShiftVec(omega_size, 0)});
    return op;
}

Rational ShiftOperator::apply(const std::function<Rational(const Point&)>& h,
                              const Point& x) const {
    Rational out = 0;
    Point shifted(x.size());
    for (const auto& t : terms) {
        for (size_t k = 0; k < x.size(); ++k) shifted[k] = x[k] + t.shift[k];
        out += t.coeff(x) * h(shifted);
    }
    return out;
}

ShiftOperator compose(const ShiftOperator& a, const ShiftOperator& b) {
    std::map<ShiftVec, std::vector<std::pair<CoeffFn, ShiftVec>>> grouped;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            ShiftVec total(ta.shift.size());
            for (size_t k = 0; k < total.size(); ++k) total[k] = ta.shift[k] + tb.shift[k];
            grouped[total].emplace_back(
                [f = ta.coeff, g = tb.coeff, s = ta.shift](const Point& x) {
                    Point moved(x.size());
                    for (size_t k = 0; k < x.size(); ++k) moved[k] = x[k] + s[k];
                    return f(x) * g(moved);
                },
                total);
        }
    ShiftOperator out;
    for (auto& [shift, parts] : grouped) {
        if (parts.size() == 1) {
            out.terms.push_back({std::move(parts[0].first), shift});
        } else {
            std::vector<CoeffFn> fns;
            for (auto& p : parts) fns.push_back(std::move(p.first));
            out.terms.push_back({[fns = std::move(fns)](const Point& x) {
                                     Rational s = 0;
                                     for (const auto& f : fns) s += f(x);
                                     return s;
                                 },
                                 shift});
        }
    }
    return out;
}

ShiftOperator add(const ShiftOperator& a, const ShiftOperator& b) {
    ShiftOperator out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

ShiftOperator scale(const ShiftOperator& a, long long c) {
    ShiftOperator out;
    for (const auto& t : a.terms)
        out.terms.push_back({[f = t.coeff, c](const Point& x) { return f(x) * c; }, t.shift});
    return out;
}

ShiftOperator subtract(const ShiftOperator& a, const ShiftOperator& b) {
    return add(a, scale(b, -1));
}

namespace {

void check_row(int i, const DimensionVector& v) {
    if (i < 1 || i > v.n()) throw domain_error("operator row index out of range");
}

}  // namespace

ShiftOperator x_plus(int i, const DimensionVector& v) {
    check_row(i, v);
    if (i > v.n() - 1) throw domain_error("x_plus: requires i <= n-1");
    OmegaIndex om(v);
    ShiftOperator op;
    const int vi = v.v[static_cast<size_t>(i) - 1];
    const int vup = v.v[static_cast<size_t>(i)];
    for (int j = 1; j <= vi; ++j) {
        ShiftVec shift(om.size(), 0);
        shift[om.at(i, j)] = -1;  // delta^+ lowers x_{ij}
        op.terms.push_back(
            {[om, i, j, vi, vup](const Point& x) {
                 Rational num = -1;
                 for (int m = 1; m <= vup; ++m) num *= x[om.at(i + 1, m)] - x[om.at(i, j)];
                 Rational den = 1;
                 for (int m = 1; m <= vi; ++m)
                     if (m != j) den *= x[om.at(i, m)] - x[om.at(i, j)];
                 if (den == 0) throw domain_error("x_plus: zero denominator");
                 return num / den;
             },
             std::move(shift)});
    }
    return op;
}

ShiftOperator x_minus(int i, const DimensionVector& v) {
    check_row(i, v);
    if (i > v.n() - 1) throw domain_error("x_minus: requires i <= n-1");
    OmegaIndex om(v);
    ShiftOperator op;
    const int vi = v.v[static_cast<size_t>(i) - 1];
    const int vdown = i >= 2 ? v.v[static_cast<size_t>(i) - 2] : 0;
    for (int j = 1; j <= vi; ++j) {
        ShiftVec shift(om.size(), 0);
        shift[om.at(i, j)] = 1;  // delta^- raises x_{ij}
        op.terms.push_back(
            {[om, i, j, vi, vdown](const Point& x) {
                 Rational num = 1;
                 for (int m = 1; m <= vdown; ++m) num *= x[om.at(i - 1, m)] - x[om.at(i, j)];
                 Rational den = 1;
                 for (int m = 1; m <= vi; ++m)
                     if (m != j) den *= x[om.at(i, m)] - x[om.at(i, j)];
                 if (den == 0) throw domain_error("x_minus: zero denominator");
                 return num / den;
             },
             std::move(shift)});
    }
    return op;
}

ShiftOperator e_diag(int i, const DimensionVector& v) {
    check_row(i, v);
    OmegaIndex om(v);
    const int vi = v.v[static_cast<size_t>(i) - 1];
    const int vdown = i >= 2 ? v.v[static_cast<size_t>(i) - 2] : 0;
    // The constant -(i-1) is forced by the Capelli normalization: for gl_2
    // the roots of C(t) sum to e_11 + e_22 + 1, and the Serre relation
    // [X_1^+, X_1^-] = e_11 - e_22 fails under the opposite sign.
    return ShiftOperator::multiplication(
        [om, i, vi, vdown](const Point& x) {
            Rational s = 1 - i;
            for (int k = 1; k <= vi; ++k) s += x[om.at(i, k)];
            for (int l = 1; l <= vdown; ++l) s -= x[om.at(i - 1, l)];
            return s;
        },
        om.size());
}

namespace {

constexpr int kRetryCap = 100;

// small primes used as per-row denominators; fractional parts j/prime keep
// within-row coordinates distinct under any integer shift
constexpr int kPrimes[] = {13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};

Point sample_point(const DimensionVector& v, std::mt19937_64& rng) {
    OmegaIndex om(v);
    Point x(om.size());
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int i = 1; i <= v.n(); ++i) {
        int prime = kPrimes[(static_cast<size_t>(i) - 1) % std::size(kPrimes)];
        for (int j = 1; j <= v.v[static_cast<size_t>(i) - 1]; ++j)
            x[om.at(i, j)] = Rational(dist(rng)) + Rational(j, prime);
    }
    return x;
}

std::function<Rational(const Point&)> sample_monomial(size_t omega_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg_dist(0, 3);
    int deg = deg_dist(rng);
    std::vector<int> exps(omega_size, 0);
    if (omega_size > 0) {
        std::uniform_int_distribution<size_t> var_dist(0, omega_size - 1);
        for (int d = 0; d < deg; ++d) ++exps[var_dist(rng)];
    }
    return [exps](const Point& x) {
        Rational m = 1;
        for (size_t k = 0; k < exps.size(); ++k)
            for (int e = 0; e < exps[k]; ++e) m *= x[k];
        return m;
    };
}

}  // namespace

bool check_identity(const ShiftOperator& a, const ShiftOperator& b, const DimensionVector& v,
                    int trials, unsigned long long seed) {
    if (trials < 1) throw domain_error("check_identity: trials must be >= 1");
    std::mt19937_64 rng(seed);
    int retries = 0;
    for (int t = 0; t < trials; ++t) {
        while (true) {
            Point x = sample_point(v, rng);
            auto h = sample_monomial(x.size(), rng);
            try {
                if (a.apply(h, x) != b.apply(h, x)) return false;
                break;
            } catch (const domain_error&) {
                if (++retries > kRetryCap)
                    throw resource_error("check_identity: persistent denominator degeneracy");
            }
        }
    }
    return true;
}

bool RelationReport::all_pass() const {
    for (const auto& r : relations)
        if (!r.pass) return false;
    return true;
}

RelationReport verify_gl_relations(int n, int trials, unsigned long long seed) {
    if (n < 2 || n > 4) throw domain_error("verify_gl_relations: supported for 2 <= n <= 4");
    DimensionVector v = DimensionVector::gl(n);
    OmegaIndex om(v);

    std::vector<ShiftOperator> E, F, H;
    for (int i = 1; i <= n - 1; ++i) {
        E.push_back(x_plus(i, v));
        F.push_back(x_minus(i, v));
        H.push_back(subtract(e_diag(i, v), e_diag(i + 1, v)));
    }
    auto cartan = [](int i, int j) {
        if (i == j) return 2;
        if (i - j == 1 || j - i == 1) return -1;
        return 0;
    };

    RelationReport report;
    report.n = n;
    unsigned long long salt = 0;
    auto run = [&](std::string name, const ShiftOperator& lhs, const ShiftOperator& rhs) {
        bool ok = check_identity(lhs, rhs, v, trials, seed + (salt++));
        report.relations.push_back({std::move(name), ok});
    };
    auto label = [](const char* fmt, int i, int j = 0) {
        std::ostringstream os;
        os << fmt << " i=" << i;
        if (j) os << " j=" << j;
        return os.str();
    };

    ShiftOperator zero = ShiftOperator::zero();
    for (int i = 1; i <= n - 1; ++i) {
        run(label("[E_i,F_i]=H_i", i), commutator(E[i - 1], F[i - 1]), H[i - 1]);
        for (int j = 1; j <= n - 1; ++j) {
            if (i != j)
                run(label("[E_i,F_j]=0", i, j), commutator(E[i - 1], F[j - 1]), zero);
            run(label("[H_i,E_j]=a_ij E_j", i, j), commutator(H[i - 1], E[j - 1]),
                scale(E[j - 1], cartan(i, j)));
            run(label("[H_i,F_j]=-a_ij F_j", i, j), commutator(H[i - 1], F[j - 1]),
                scale(F[j - 1], -cartan(i, j)));
            if (i - j >= 2 || j - i >= 2) {
                run(label("[E_i,E_j]=0", i, j), commutator(E[i - 1], E[j - 1]), zero);
                run(label("[F_i,F_j]=0", i, j), commutator(F[i - 1], F[j - 1]), zero);
            }
            if (i - j == 1 || j - i == 1) {
                run(label("[E_i,[E_i,E_j]]=0", i, j),
                    commutator(E[i - 1], commutator(E[i - 1], E[j - 1])), zero);
                run(label("[F_i,[F_i,F_j]]=0", i, j),
                    commutator(F[i - 1], commutator(F[i - 1], F[j - 1])), zero);
            }
        }
    }
    return report;
}

}  // namespace gtklr
