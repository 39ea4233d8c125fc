#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gklocal/gk_complex.hpp"

#include <random>

using namespace gk;

namespace {

std::mt19937_64 rng(23);

GaussianRational random_rat() {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return GaussianRational(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

TensorDual random_tensor(const KPair& kp) {
    TensorDual t(kp.k_id - 2, kp.k_c - 2);
    for (auto& c : t.values) c = random_rat();
    return t;
}

// Rational point of SU(2) from the square of an integer quaternion.
Mat2 random_su2() {
    std::uniform_int_distribution<int> d(-4, 4);
    for (;;) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        long N = a * a + b * b + c * c + e * e;
        if (N == 0) continue;
        // h^2 / |h|^2 for h = a + bi + cj + ek
        Rat u0(a * a - b * b - c * c - e * e, N), u1(2 * a * b, N), u2(2 * a * c, N),
            u3(2 * a * e, N);
        GaussianRational alpha(u0, u1), beta(u2, u3);
        if (alpha.is_zero() && beta.is_zero()) continue;
        return Mat2{alpha, beta, -beta.conj(), alpha.conj()};
    }
}

GaussianRational eval_s3poly_exact(const S3Poly& p, const GaussianRational& a,
                                   const GaussianRational& b) {
    GaussianRational s;
    for (auto& [e, c] : p.terms)
        s += c * a.pow(e[0]) * a.conj().pow(e[1]) * b.pow(e[2]) * b.conj().pow(e[3]);
    return s;
}

const std::vector<KPair> kGrid{{2, 2}, {4, 2}, {2, 4}, {4, 4}, {6, 2}, {6, 4}, {2, 6}, {4, 6}, {6, 6}};

}  // namespace

TEST_CASE("su2_moment values") {
    CHECK(su2_moment(0, 0, 0, 0) == GaussianRational(1));
    CHECK(su2_moment(1, 1, 0, 0) == GaussianRational(Rat(1, 2)));
    CHECK(su2_moment(2, 2, 1, 1) == GaussianRational(Rat(1, 12)));
    CHECK(su2_moment(1, 2, 0, 0).is_zero());
    CHECK(su2_moment(1, 1, 2, 0).is_zero());
    CHECK_THROWS_AS(su2_moment(-1, 0, 0, 0), std::domain_error);
}

TEST_CASE("phi evaluation: restriction, matrix form and exactness agree") {
    GaussianRational alpha(Rat(3, 5)), beta(Rat(0), Rat(4, 5));
    Mat2 kappa{alpha, beta, -beta.conj(), alpha.conj()};
    for (const auto& kp : kGrid) {
        int lam = kp.lambda(), M = kp.big_m();
        for (int n = std::abs(lam); n <= M + 1; ++n) {
            DualVec mu(2 * n);
            for (auto& c : mu.values) c = random_rat();
            for (SeriesKind kind : {SeriesKind::weight_k, SeriesKind::weight_two_minus_k}) {
                if (n < std::abs(lambda_eff(kp, kind))) continue;
                GaussianRational via_restrict =
                    eval_s3poly_exact(phi_restrict(kp, kind, n, mu), alpha, beta);
                GaussianRational via_matrix = eval_phi_n_exact(kp, kind, n, mu, kappa);
                CHECK(via_restrict == via_matrix);
                std::array<Cplx, 4> gf{alpha.to_complex(), beta.to_complex(),
                                       (-beta.conj()).to_complex(), alpha.conj().to_complex()};
                CHECK(std::abs(eval_phi_n(kp, kind, n, mu, gf) - via_matrix.to_complex()) <= 1e-12);
            }
        }
        DualVec zero(2 * (M + 1));
        CHECK(eval_phi_n_exact(kp, SeriesKind::weight_k, M + 1, zero, kappa).is_zero());
    }
}

TEST_CASE("rho on single harmonics matches the normalized moment values") {
    for (const auto& kp : kGrid) {
        int lam = kp.lambda(), M = kp.big_m();
        for (int n = std::abs(lam); n <= M + 1; ++n) {
            ComplexSeriesElem f(kp, SeriesKind::weight_k);
            f.add_harmonic(n, DualVec::basis(2 * n, 2 * n));  // (x^{2n})^v
            TensorDual r = rho_complex(f);
            for (int mi = 0; mi <= kp.k_id - 2; ++mi)
                for (int mc = 0; mc <= kp.k_c - 2; ++mc) {
                    GaussianRational want;
                    if (n <= M && mi - mc - lam == n)
                        want = GaussianRational(
                            Rat(minus_one_pow(mi + mc), Int(n + M + 1) * binomial(n + M, mi)));
                    CHECK(r.at(mi, mc) == want);
                }
        }
    }
}

TEST_CASE("rho inverts the section exactly") {
    for (const auto& kp : kGrid) {
        for (int a = 0; a <= kp.k_id - 2; ++a)
            for (int b = 0; b <= kp.k_c - 2; ++b) {
                TensorDual e(kp.k_id - 2, kp.k_c - 2);
                e.at(a, b) = GaussianRational(1);
                CHECK(rho_complex(section_s_complex(kp, e)) == e);
            }
        TensorDual t = random_tensor(kp);
        CHECK(rho_complex(section_s_complex(kp, t)) == t);
    }
}

TEST_CASE("clebsch-gordan maps") {
    // k = (2,2): t_0 is the scalar pairing of the two degree-0 duals
    KPair k22(2, 2);
    TensorDual t(0, 0);
    t.at(0, 0) = GaussianRational(Rat(7, 3));
    CHECK(clebsch_gordan_tn(k22, 0, t) == DualVec::basis(0, 0, GaussianRational(Rat(7, 3))));
    CHECK_THROWS_AS(clebsch_gordan_tn(KPair(4, 2), 0, TensorDual(2, 0)), std::domain_error);

    // top map on torus eigenvectors: a single monomial
    for (const auto& kp : kGrid) {
        int M = kp.big_m();
        for (int mi = -(kp.k_id - 2) / 2; mi <= (kp.k_id - 2) / 2; ++mi)
            for (int mc = -(kp.k_c - 2) / 2; mc <= (kp.k_c - 2) / 2; ++mc) {
                int mbar = mi - mc;
                HomPoly got = dual_to_poly(
                    clebsch_gordan_tn(kp, M, make_mu_m_pair(kp, -mi, -mc)));
                HomPoly want = HomPoly::monomial(
                    2 * M, M + mbar,
                    GaussianRational(Rat(minus_one_pow((kp.k_c - 2) / 2 - mc))));
                CHECK(got == want);
            }
    }
}

TEST_CASE("clebsch-gordan and section are SU(2)-equivariant at rational points") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4), KPair(6, 4)}) {
        Mat2 g = random_su2();
        Mat2 gc = g.conj();
        TensorDual t = random_tensor(kp);
        TensorDual gt = act_matrix_tensor(g, gc, t);
        for (int n = std::abs(kp.lambda()); n <= kp.big_m(); ++n)
            CHECK(clebsch_gordan_tn(kp, n, gt) == act_matrix_dual(g, clebsch_gordan_tn(kp, n, t)));
        ComplexSeriesElem s1 = section_s_complex(kp, gt);
        ComplexSeriesElem s2 = section_s_complex(kp, t);
        for (auto& [n, mu] : s2.harm) CHECK(s1.harm.at(n) == act_matrix_dual(g, mu));
    }
}

TEST_CASE("star operation") {
    DualVec zero(0);
    CHECK(star_op(zero).is_zero());
    DualVec unit = DualVec::basis(0, 0);
    DualVec st = star_op(unit);  // on V(2): only the xy component survives
    CHECK(st.values[0].is_zero());
    CHECK(st.values[1] == GaussianRational(1));
    CHECK(st.values[2].is_zero());

    // iota-image: iota(t_M(mu_0)^*) = (-1)^{k_c/2} (2M+2)(2M+1) x^{M+1} y^{M+1}
    for (const auto& kp : kGrid) {
        int M = kp.big_m();
        HomPoly got = dual_to_poly(star_op(clebsch_gordan_tn(kp, M, make_mu_m_pair(kp, 0, 0))));
        GaussianRational c(Rat(minus_one_pow(kp.k_c / 2) * Int(2 * M + 2) * (2 * M + 1)));
        CHECK(got == HomPoly::monomial(2 * M + 2, M + 1, c));
    }
}

TEST_CASE("lie derivative recursion: raising piece and discreteness") {
    KPair kp(4, 4);
    int M = kp.big_m();
    ComplexSeriesElem z(kp, SeriesKind::weight_k);
    CHECK(lie_delta_complex(z).is_zero());

    TensorDual t = random_tensor(kp);
    DualVec tm = clebsch_gordan_tn(kp, M, t);
    ComplexSeriesElem f(kp, SeriesKind::weight_k);
    f.add_harmonic(M, tm);
    ComplexSeriesElem df = lie_delta_complex(f);
    // the phi_{M+1} component is -(2M+2)/((M+1)(2M+1)) t_M(.)^*
    auto it = df.harm.find(M + 1);
    REQUIRE(it != df.harm.end());
    GaussianRational c(Rat(Int(-(2 * M + 2)), Int(M + 1) * (2 * M + 1)));
    CHECK(it->second == star_op(tm).scaled(c));

    // the derivative of a discrete member stays discrete
    ComplexSeriesElem disc(kp, SeriesKind::weight_k);
    DualVec topv(2 * (M + 1));
    for (auto& cc : topv.values) cc = random_rat();
    disc.add_harmonic(M + 1, topv);
    CHECK(lie_delta_complex(disc).is_discrete_member());
}

TEST_CASE("lie derivative matches central differences at rational SU(2) points") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4)}) {
        for (int it = 0; it < 6; ++it) {
            Mat2 g = random_su2();
            std::array<Cplx, 4> gf{g.a.to_complex(), g.b.to_complex(), g.c.to_complex(),
                                   g.d.to_complex()};
            ComplexSeriesElem f(kp, SeriesKind::weight_k);
            int n = std::abs(kp.lambda()) + (it % 2);
            DualVec mu(2 * n);
            for (auto& c : mu.values) c = random_rat();
            f.add_harmonic(n, mu);
            if (f.is_zero()) continue;
            ComplexSeriesElem df = lie_delta_complex(f);
            Cplx fd = fd_lie_derivative(
                [&](const std::array<Cplx, 4>& h) { return eval_series(f, h); }, gf, 1e-5);
            CHECK(std::abs(fd - eval_series(df, gf)) <= 1e-6);
        }
    }
}

TEST_CASE("delta_s equals the closed form on the full weight grid") {
    for (int kid : {2, 4, 6})
        for (int kc : {2, 4, 6}) {
            KPair kp(kid, kc);
            for (int mi = -(kid - 2) / 2; mi <= (kid - 2) / 2; ++mi)
                for (int mc = -(kc - 2) / 2; mc <= (kc - 2) / 2; ++mc) {
                    TensorDual mu = make_mu_m_pair(kp, mi, mc);
                    ComplexSeriesElem got = delta_s_complex(kp, mu);
                    CHECK(got == delta_s_complex_closed(kp, mu));
                    CHECK(got.is_discrete_member());
                    CHECK(rho_complex(got).is_zero());
                }
            TensorDual t = random_tensor(kp);
            CHECK(delta_s_complex(kp, t) == delta_s_complex_closed(kp, t));
            CHECK(delta_s_complex(kp, TensorDual(kid - 2, kc - 2)).is_zero());
        }
}

TEST_CASE("sphere pairing: orthogonality and the top-harmonic constant") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4), KPair(6, 4)}) {
        int M = kp.big_m(), lam = kp.lambda();
        // distinct K-types pair to zero
        for (int n = std::abs(lam); n <= M + 1; ++n)
            for (int np = std::abs(lam); np <= M + 1; ++np) {
                if (n == np) continue;
                ComplexSeriesElem f(kp, SeriesKind::weight_k);
                DualVec a(2 * n);
                for (auto& c : a.values) c = random_rat();
                f.add_harmonic(n, a);
                ComplexSeriesElem h(kp, SeriesKind::weight_two_minus_k);
                DualVec b(2 * np);
                for (auto& c : b.values) c = random_rat();
                h.add_harmonic(np, b);
                if (f.is_zero() || h.is_zero()) continue;
                CHECK(pair_B_complex(f, h).is_zero());
            }
        // <phi_{M+1}(iota^{-1} x^{2M+2}), phi'_{M+1}(iota^{-1} y^{2M+2})> =
        // -1/((2M+3) binom(2M+2, k_id-1))
        ComplexSeriesElem f(kp, SeriesKind::weight_k);
        f.add_harmonic(M + 1, poly_to_dual(HomPoly::monomial(2 * M + 2, 2 * M + 2)));
        ComplexSeriesElem h(kp, SeriesKind::weight_two_minus_k);
        h.add_harmonic(M + 1, poly_to_dual(HomPoly::monomial(2 * M + 2, 0)));
        GaussianRational want(
            Rat(Int(-1), Int(2 * M + 3) * binomial(2 * M + 2, kp.k_id - 1)));
        CHECK(pair_B_complex(f, h) == want);
    }
}

TEST_CASE("discrete members pair to zero against the dual embedding") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4)}) {
        int M = kp.big_m();
        DualVec top(2 * M + 2);
        for (auto& c : top.values) c = random_rat();
        S3Poly fp = phi_restrict(kp, SeriesKind::weight_k, M + 1, top);
        TensorDual mu = random_tensor(kp);
        CHECK((fp * rho_dual_restrict(kp, mu)).integrate().is_zero());
    }
}

TEST_CASE("pair_V structure and agreement with the polynomial pairing") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4), KPair(6, 4)}) {
        int M = kp.big_m();
        for (int mi = -(kp.k_id - 2) / 2; mi <= (kp.k_id - 2) / 2; ++mi)
            for (int mc = -(kp.k_c - 2) / 2; mc <= (kp.k_c - 2) / 2; ++mc) {
                TensorDual a = make_mu_m_pair(kp, mi, mc);
                TensorDual b = make_mu_m_pair(kp, -mi, -mc);
                GaussianRational want(
                    Rat(minus_one_pow(M + mi + mc),
                        binomial(kp.k_id - 2, (kp.k_id - 2) / 2 - mi) *
                            binomial(kp.k_c - 2, (kp.k_c - 2) / 2 - mc)));
                CHECK(pair_V_complex(kp, a, b) == want);
                if (mi != 0 || mc != 0) CHECK(pair_V_complex(kp, a, a).is_zero());
            }
        for (int it = 0; it < 5; ++it) {
            TensorDual a = random_tensor(kp), b = random_tensor(kp);
            CHECK(pair_V_complex(kp, a, b) == pair_prime_tensor(a, b));
        }
    }
    // diagonal value at k = (4,4), m = (1,1)
    CHECK(pair_V_complex(KPair(4, 4), make_mu_m_pair(KPair(4, 4), 1, 1),
                         make_mu_m_pair(KPair(4, 4), -1, -1)) == GaussianRational(1));
}

TEST_CASE("limit values and the convolution identity") {
    CHECK(f_limits_complex(KPair(2, 2), 0, 0) == PiScaled::from(4));
    for (int kid : {2, 4, 6})
        for (int kc : {2, 4, 6}) {
            KPair kp(kid, kc);
            for (int mi = -(kid - 2) / 2; mi <= (kid - 2) / 2; ++mi)
                for (int mc = -(kc - 2) / 2; mc <= (kc - 2) / 2; ++mc)
                    CHECK(f_limits_complex(kp, mi, mc) == f_limits_complex(kp, -mi, -mc));
        }
    CHECK_THROWS_AS(f_limits_complex(KPair(2, 2), 1, 0), std::domain_error);
}

TEST_CASE("closed local integral") {
    CHECK(integral_complex_closed(KPair(2, 2), ComplexCharacter{0}, 0, 0) == PiScaled::from(16));
    CHECK(integral_complex_closed(KPair(2, 2), ComplexCharacter{1}, 0, 0).is_zero());
    CHECK(integral_complex_closed(KPair(2, 2), ComplexCharacter{2}, 0, 0).is_zero());
    CHECK_THROWS_AS(integral_complex_closed(KPair(2, 2), ComplexCharacter{0}, 1, 0),
                    std::domain_error);
}

TEST_CASE("numeric local integral matches the closed form") {
    QuadConfig cfg;
    cfg.rtol = 1e-6;
    for (auto [kid, kc, mi, mc] : {std::array<int, 4>{2, 2, 0, 0}, {4, 2, 1, 0}, {4, 4, 1, -1}}) {
        KPair kp(kid, kc);
        NumericIntegral ni = integral_complex_numeric(kp, ComplexCharacter{0}, mi, mc, cfg);
        CloseReport cr =
            assert_close(ni.value, integral_complex_closed(kp, ComplexCharacter{0}, mi, mc), cfg);
        INFO("k=(", kid, ",", kc, ") m=(", mi, ",", mc, ") got=", ni.value.real(),
             " want=", integral_complex_closed(kp, ComplexCharacter{0}, mi, mc).to_complex().real(),
             " rel=", cr.rel_err);
        CHECK(ni.converged);
        CHECK(cr.pass);
    }
    QuadConfig zcfg = cfg;
    zcfg.atol = 1e-10;  // vanishing case, judged at absolute 1e-8
    NumericIntegral z = integral_complex_numeric(KPair(2, 2), ComplexCharacter{2}, 0, 0, zcfg);
    CHECK(std::abs(z.value) <= 1e-8);
}

TEST_CASE("pairings of the canonical invariant tensor (complex place)") {
    for (int kid : {2, 4})
        for (int kc : {2, 4}) {
            KPair kp(kid, kc);
            CHECK(PiScaled::from(upsilon_pair_complex_pipeline(kp)) ==
                  upsilon_pair_complex_closed(kp));
        }
    CHECK(upsilon_pair_complex_closed(KPair(2, 2)) == PiScaled::from(Rat(4, 3)));

    // iota(t_M (x) t_M applied to the invariant tensor, starred):
    // (2M+2)^2 (2M+1)^2 x1 y1 x2 y2 |x1 y1; x2 y2|^{2M}
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4)}) {
        int M = kp.big_m();
        int D = 2 * M + 2;
        std::vector<std::vector<GaussianRational>> lhs(D + 1,
                                                       std::vector<GaussianRational>(D + 1));
        for (auto& term : upsilon_complex_terms(kp)) {
            HomPoly p1 = dual_to_poly(star_op(clebsch_gordan_tn(kp, M, term.first)));
            HomPoly p2 = dual_to_poly(star_op(clebsch_gordan_tn(kp, M, term.second)));
            for (int a = 0; a <= D; ++a)
                for (int b = 0; b <= D; ++b) lhs[a][b] += term.coeff * p1.coeffs[a] * p2.coeffs[b];
        }
        std::vector<std::vector<GaussianRational>> rhs(D + 1,
                                                       std::vector<GaussianRational>(D + 1));
        GaussianRational c(Rat(Int(2 * M + 2) * (2 * M + 2) * (2 * M + 1) * (2 * M + 1)));
        for (int j = 0; j <= 2 * M; ++j)
            rhs[j + 1][2 * M - j + 1] =
                c * GaussianRational(Rat(binomial(2 * M, j) * minus_one_pow(j)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mu0 pairing closed values") {
    CHECK(mu0_pair_complex_closed(KPair(2, 2)) == PiScaled::from(Rat(4, 3)));
    CHECK(mu0_pair_complex_closed(KPair(4, 2)) == PiScaled::from(Rat(-24, 5)));
    for (int kid : {2, 4, 6})
        for (int kc : {2, 4, 6}) {
            KPair kp(kid, kc);
            CHECK(PiScaled::from(mu0_pair_complex_pipeline(kp)) == mu0_pair_complex_closed(kp));
        }
}

TEST_CASE("s_prime on the top harmonic") {
    KPair kp(4, 2);
    int M = kp.big_m();
    ComplexSeriesElem h(kp, SeriesKind::weight_k);
    DualVec mu(2 * M + 2);
    mu.values[1] = GaussianRational(3);
    h.add_harmonic(M + 1, mu);
    ComplexSeriesElem sp = s_prime_complex(h);
    CHECK(sp.kind == SeriesKind::weight_two_minus_k);
    CHECK(sp.harm.at(M + 1) == mu);
    CHECK(s_prime_complex(ComplexSeriesElem(kp, SeriesKind::weight_k)).is_zero());
    ComplexSeriesElem bad(kp, SeriesKind::weight_k);
    bad.add_harmonic(M, clebsch_gordan_tn(kp, M, random_tensor(kp)));
    if (!bad.is_zero()) CHECK_THROWS_AS(s_prime_complex(bad), std::domain_error);
}

TEST_CASE("phi intertwines right translation with the dual action") {
    for (const auto& kp : {KPair(2, 2), KPair(4, 2), KPair(4, 4)}) {
        int n = kp.big_m() + 1;
        for (SeriesKind kind : {SeriesKind::weight_k, SeriesKind::weight_two_minus_k}) {
            DualVec nu(2 * n);
            for (auto& c : nu.values) c = random_rat();
            Mat2 k0 = random_su2();
            Mat2 g{random_rat(), random_rat(), random_rat() + GaussianRational(1),
                   random_rat() + GaussianRational(2)};
            if (g.det().is_zero()) continue;
            GaussianRational lhs = eval_phi_n_exact(kp, kind, n, nu, g * k0);
            GaussianRational rhs = eval_phi_n_exact(kp, kind, n, act_matrix_dual(k0, nu), g);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("su2 moments against the quadrature oracle") {
    QuadConfig cfg;
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int m1 = 0; n1 + m1 <= 4; ++m1) {
            S3Poly p;
            p.add({n1, n1, m1, m1}, GaussianRational(1));
            Cplx got = s3_quad([&](Cplx a, Cplx b) { return p.eval(a, b); }, cfg);
            CHECK(std::abs(got - su2_moment(n1, n1, m1, m1).to_complex()) <= 1e-10);
        }
}
