#include "gtklr/laurent.hpp"

#include <random>

#include "doctest.h"

using namespace gtklr;

namespace {

Laurent q_pow(int e, long long c = 1) { return Laurent::monomial(Coeff(c), e); }

Laurent random_poly(std::mt19937& rng, int max_terms = 5, int max_exp = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    Laurent p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += q_pow(exp(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    Laurent q = q_pow(1), one = Laurent::one();
    CHECK((q + one) * (q - one) == q_pow(2) - one);
    CHECK((q + q_pow(-1)) * q == q_pow(2) + one);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Laurent p = random_poly(rng);
        CHECK((p + (-p)).is_zero());
        Laurent a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("bar involution") {
    CHECK(q_pow(2).bar() == q_pow(-2));
    Laurent sym = q_pow(1) + q_pow(-1);
    CHECK(sym.bar() == sym);
    CHECK(sym.is_bar_invariant());
    CHECK_FALSE(q_pow(2).is_bar_invariant());
    CHECK(Laurent().is_bar_invariant());

    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        Laurent p = random_poly(rng), r = random_poly(rng);
        CHECK(p.bar().bar() == p);
        CHECK((p * r).bar() == p.bar() * r.bar());
        CHECK((p + r).bar() == p.bar() + r.bar());
    }
}

TEST_CASE("quantum factorial") {
    CHECK(quantum_factorial(0) == Laurent::one());
    CHECK(quantum_factorial(1) == Laurent::one());
    CHECK(quantum_factorial(2) == q_pow(1) + q_pow(-1));
    CHECK(quantum_factorial(3) == q_pow(3) + q_pow(1, 2) + q_pow(-1, 2) + q_pow(-3));

    Coeff factorial = 1;
    for (int m = 0; m <= 12; ++m) {
        if (m > 0) factorial *= m;
        Laurent f = quantum_factorial(m);
        CHECK(f.is_bar_invariant());
        CHECK(f.eval_at_one() == factorial);
    }
}

TEST_CASE("exact division") {
    Laurent top = q_pow(2) - q_pow(-2);
    Laurent den = q_pow(1) + q_pow(-1);
    CHECK(exact_div(top, den) == q_pow(1) - q_pow(-1));
    CHECK(exact_div(q_pow(3) + q_pow(1), den) == q_pow(2));
    CHECK_THROWS_AS(exact_div(q_pow(1) + Laurent::one(), den), domain_error);
    CHECK_THROWS_AS(exact_div(den, Laurent()), domain_error);

    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        Laurent p = random_poly(rng), d = random_poly(rng);
        if (d.is_zero()) continue;
        CHECK(exact_div(p * d, d) == p);
    }
}

TEST_CASE("peel split") {
    auto [rho0, gamma0] = peel_split(q_pow(1), Laurent::one());
    CHECK(rho0.is_zero());
    CHECK(gamma0 == q_pow(1));

    Laurent sym = q_pow(2) + q_pow(-2) + Laurent::constant(3);
    auto [rho1, gamma1] = peel_split(sym, quantum_factorial(2));
    CHECK(rho1 == sym);
    CHECK(gamma1.is_zero());

    auto [rho2, gamma2] = peel_split(q_pow(2) + Laurent::one(), q_pow(1) + q_pow(-1));
    CHECK(gamma2 == q_pow(1));
    CHECK(rho2.is_zero());

    CHECK_THROWS_AS(peel_split(q_pow(1), q_pow(2)), domain_error);  // kappa not bar-invariant
}

TEST_CASE("peel split round trip") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> mdist(1, 4);
    std::uniform_int_distribution<int> exp(1, 5);
    std::uniform_int_distribution<long long> coeff(0, 6);
    for (int i = 0; i < 200; ++i) {
        Laurent kappa = quantum_factorial(mdist(rng));
        Laurent rho;
        for (int t = 0; t < 3; ++t) {
            int e = exp(rng);
            long long c = coeff(rng);
            rho += q_pow(e, c) + q_pow(-e, c);
        }
        rho += Laurent::constant(coeff(rng));
        Laurent gamma;
        for (int t = 0; t < 3; ++t) gamma += q_pow(exp(rng), coeff(rng));
        Laurent alpha = rho + kappa * gamma;
        auto [r, g] = peel_split(alpha, kappa);
        CHECK(r == rho);
        CHECK(g == gamma);
        CHECK(r + kappa * g == alpha);
        CHECK((g.is_zero() || g.min_exp() >= 1));
    }
}

TEST_CASE("eval and printing") {
    CHECK((q_pow(1) + q_pow(-1)).eval_at_one() == 2);
    CHECK(quantum_factorial(3).eval_at_one() == 6);
    CHECK(Laurent().eval_at_one() == 0);
    CHECK(Laurent().str() == "0");
    CHECK((q_pow(2) - Laurent::one()).str() == "q^2 - 1");
}
