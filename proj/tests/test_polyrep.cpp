#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gklocal/polyrep.hpp"

#include <random>

using namespace gk;

namespace {

std::mt19937_64 rng(7);

GaussianRational random_rat() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    return GaussianRational(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

Mat2 random_matrix() {
    for (;;) {
        Mat2 g{random_rat(), random_rat(), random_rat(), random_rat()};
        if (!g.det().is_zero()) return g;
    }
}

DualVec random_dual(int deg) {
    DualVec v(deg);
    for (auto& c : v.values) c = random_rat();
    return v;
}

HomPoly random_poly(int deg) {
    HomPoly p(deg);
    for (auto& c : p.coeffs) c = random_rat();
    return p;
}

}  // namespace

TEST_CASE("act_matrix basics") {
    HomPoly p = random_poly(4);
    CHECK(act_matrix(Mat2::identity(), p) == p);

    // diag(t,1) on XY at k=2 keeps XY fixed (central normalization at a = k/2)
    HomPoly xy = HomPoly::monomial(2, 1);
    CHECK(act_matrix(Mat2::diag(GaussianRational(Rat(7, 3)), GaussianRational(1)), xy) == xy);

    // diag(4,1) on X^2, k=2: 4^{-1} * 16 * X^2 = 4 X^2
    HomPoly x2 = HomPoly::monomial(2, 2);
    CHECK(act_matrix(Mat2::diag(GaussianRational(4), GaussianRational(1)), x2) ==
          HomPoly::monomial(2, 2, GaussianRational(4)));

    CHECK_THROWS_AS(act_matrix(Mat2::diag(GaussianRational(0), GaussianRational(1)), p),
                    std::domain_error);
}

TEST_CASE("act_matrix is a group action (exact)") {
    for (int it = 0; it < 20; ++it) {
        Mat2 g = random_matrix(), h = random_matrix();
        HomPoly p = random_poly(6);
        CHECK(act_matrix(g * h, p) == act_matrix(g, act_matrix(h, p)));
        DualVec mu = random_dual(4);
        CHECK(act_matrix_dual(g * h, mu) == act_matrix_dual(g, act_matrix_dual(h, mu)));
    }
}

TEST_CASE("dual_to_poly is the stated expansion and inverts") {
    CHECK(dual_to_poly(DualVec(0)).is_zero());
    DualVec unit(0);
    unit.values[0] = GaussianRational(1);
    CHECK(dual_to_poly(unit) == HomPoly::monomial(0, 0));

    // k=2, mu dual to XY: (Xy-Yx)^2 = X^2 y^2 - 2 XY xy + Y^2 x^2 -> -2 xy
    DualVec mu = DualVec::basis(2, 1);
    CHECK(dual_to_poly(mu) == HomPoly::monomial(2, 1, GaussianRational(-2)));

    for (int deg : {0, 2, 4, 6}) {
        DualVec v = random_dual(deg);
        CHECK(poly_to_dual(dual_to_poly(v)) == v);
        HomPoly p = random_poly(deg);
        CHECK(dual_to_poly(poly_to_dual(p)) == p);
    }
}

TEST_CASE("dual_to_poly intertwines the two actions") {
    for (int it = 0; it < 15; ++it) {
        Mat2 g = random_matrix();
        DualVec mu = random_dual(4);
        CHECK(dual_to_poly(act_matrix_dual(g, mu)) == act_matrix(g, dual_to_poly(mu)));
    }
}

TEST_CASE("make_mu_m torus eigenvector") {
    // diag(t,1) mu_m = t^{-m} mu_m
    for (int k : {2, 4, 6, 8}) {
        for (int m = -(k - 2) / 2; m <= (k - 2) / 2; ++m) {
            DualVec mu = make_mu_m(k, m);
            GaussianRational t(Rat(5, 3));
            DualVec acted = act_matrix_dual(Mat2::diag(t, GaussianRational(1)), mu);
            CHECK(acted == mu.scaled(t.pow(-m)));
            // normalization: dual_to_poly(mu_m) = x^{(k-2)/2-m} y^{(k-2)/2+m}
            CHECK(dual_to_poly(mu) == HomPoly::monomial(k - 2, (k - 2) / 2 - m));
        }
    }
    CHECK(make_mu_m(2, 0) == DualVec::basis(0, 0));
    // k=4, m=1: fixed by matching (Xy-Yx)^2 against y^2
    CHECK(make_mu_m(4, 1) == DualVec::basis(2, 2));
    CHECK_THROWS_AS(make_mu_m(4, 2), std::domain_error);
}

TEST_CASE("pair_prime on torus eigenvectors") {
    for (int k : {2, 4, 6, 8, 10}) {
        int K = k - 2;
        for (int m = -K / 2; m <= K / 2; ++m) {
            for (int mp = -K / 2; mp <= K / 2; ++mp) {
                GaussianRational got = pair_prime(make_mu_m(k, m), make_mu_m(k, mp));
                if (mp == -m) {
                    GaussianRational want(Rat(minus_one_pow(m + K / 2), binomial(K, K / 2 - m)));
                    CHECK(got == want);
                } else {
                    CHECK(got.is_zero());
                }
            }
        }
    }
    // k=2 direct expansion: <mu_0, mu_0>' over V(0) is 1 (the K=0 determinant is 1)
    CHECK(pair_prime(make_mu_m(2, 0), make_mu_m(2, 0)) == GaussianRational(1));
}

TEST_CASE("pair_prime invariance") {
    for (int it = 0; it < 15; ++it) {
        Mat2 g = random_matrix();
        DualVec m1 = random_dual(4), m2 = random_dual(4);
        CHECK(pair_prime(act_matrix_dual(g, m1), act_matrix_dual(g, m2)) == pair_prime(m1, m2));
    }
    CHECK_THROWS_AS(pair_prime(random_dual(2), random_dual(4)), std::invalid_argument);
}

TEST_CASE("pair_P closed form on monomials") {
    // <x^i y^{2n-i}, x^{2n-i} y^i> = (-1)^i / binom(2n,i), zero otherwise
    for (int n : {1, 2, 3}) {
        for (int i = 0; i <= 2 * n; ++i)
            for (int j = 0; j <= 2 * n; ++j) {
                GaussianRational got = pair_P(HomPoly::monomial(2 * n, i), HomPoly::monomial(2 * n, j));
                if (j == 2 * n - i)
                    CHECK(got == GaussianRational(Rat(minus_one_pow(i), binomial(2 * n, i))));
                else
                    CHECK(got.is_zero());
            }
    }
    CHECK(pair_P(HomPoly::monomial(2, 0), HomPoly::monomial(2, 2)) == GaussianRational(1));
    CHECK(pair_P(HomPoly::monomial(2, 2), HomPoly::monomial(2, 2)).is_zero());
    CHECK(pair_P(HomPoly::monomial(2, 1), HomPoly::monomial(2, 1)) ==
          GaussianRational(Rat(-1, 2)));
}

TEST_CASE("pair_P is consistent with pair_prime through the isomorphism") {
    for (int it = 0; it < 10; ++it) {
        DualVec m1 = random_dual(6), m2 = random_dual(6);
        CHECK(pair_P(dual_to_poly(m1), dual_to_poly(m2)) == pair_prime(m2, m1));
    }
}

TEST_CASE("make_upsilon invariance and entries") {
    CHECK(make_upsilon(0).at(0, 0) == GaussianRational(1));

    // invariance under diag(2,1) and a rational rotation, both slots
    for (int K : {0, 2, 4}) {
        TensorDual u = make_upsilon(K);
        Mat2 d = Mat2::diag(GaussianRational(2), GaussianRational(1));
        CHECK(act_matrix_tensor(d, d, u) == u);
        Mat2 rot = Mat2::rotation(GaussianRational(Rat(3, 5)), GaussianRational(Rat(4, 5)));
        CHECK(act_matrix_tensor(rot, rot, u) == u);
    }

    // K=2 entries from expanding (x1 y2 - y1 x2)^2 slotwise through poly_to_dual
    TensorDual u2 = make_upsilon(2);
    TensorDual direct(2, 2);
    // mu_{m} (x) mu_{-m} expansion with k=4: mu1 ox mu-1 - 2 mu0 ox mu0 + mu-1 ox mu1
    direct += TensorDual::tensor(make_mu_m(4, 1), make_mu_m(4, -1));
    direct += TensorDual::tensor(make_mu_m(4, 0), make_mu_m(4, 0)).scaled(GaussianRational(-2));
    direct += TensorDual::tensor(make_mu_m(4, -1), make_mu_m(4, 1));
    CHECK(u2 == direct);
}

TEST_CASE("tensor pair contraction matches slotwise products") {
    DualVec a = random_dual(2), b = random_dual(4), c = random_dual(2), d = random_dual(4);
    GaussianRational lhs = pair_prime_tensor(TensorDual::tensor(a, b), TensorDual::tensor(c, d));
    CHECK(lhs == pair_prime(a, c) * pair_prime(b, d));
}
