#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gklocal/waldspurger.hpp"

#include <random>

using namespace gk;

namespace {

PlaceSpec random_place(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kindd(0, 2), kd(1, 4);
    int kind = kindd(rng);
    auto weight = [&] { return 2 * kd(rng); };
    auto mrange = [&](int k) {
        std::uniform_int_distribution<int> md(-(k - 2) / 2, (k - 2) / 2);
        return md(rng);
    };
    switch (kind) {
        case 0: {
            int k = weight();
            return PlaceSpec::real_split(k, mrange(k), rng() % 2 ? 1 : -1, true);
        }
        case 1: {
            int k1 = weight(), k2 = weight();
            return PlaceSpec::complex_split(k1, k2, mrange(k1), mrange(k2), true);
        }
        default: {
            int k = weight();
            return PlaceSpec::nonsplit_place(k, mrange(k));
        }
    }
}

}  // namespace

TEST_CASE("archimedean zeta factors") {
    CHECK(zeta_arch(ArchKind::real_place, 2) == PiScaled::with_pi(-2, GaussianRational(1)));
    CHECK(zeta_arch(ArchKind::complex_place, 1) == PiScaled::with_pi(-2, GaussianRational(1)));
    CHECK(zeta_arch(ArchKind::real_place, 1) == PiScaled::from(1));
    CHECK_THROWS_AS(zeta_arch(ArchKind::real_place, 0), std::domain_error);
    CHECK_THROWS_AS(zeta_arch(ArchKind::complex_place, -2), std::domain_error);
}

TEST_CASE("whittaker norms") {
    CHECK(whittaker_norm_real(2) == PiScaled::with_pi(-4, GaussianRational(Rat(1, 8))));
    CHECK(whittaker_norm_complex(2, 2) == PiScaled::with_pi(-6, GaussianRational(Rat(1, 6))));
    // independent route through the duplication formula
    // Gamma(k) = 2^{k-1} Gamma(k/2) Gamma((k+1)/2) / Gamma(1/2)
    for (int k = 2; k <= 12; k += 2) {
        PiScaled gk2 = gamma_exact(k) * gamma_exact(k + 1);
        PiScaled dup = gk2.scaled(GaussianRational(Rat(Int(1) << (k - 1)))) *
                       gamma_exact(1).inverse();
        PiScaled reconstructed =
            PiScaled::with_pi(-2 * k, GaussianRational(Rat(2, Int(1) << (2 * k)))) * dup;
        CHECK(reconstructed == whittaker_norm_real(k));
    }
    // positivity of the rational coefficient
    for (int k1 : {2, 4, 6})
        for (int k2 : {2, 4, 6}) {
            PiScaled w = whittaker_norm_complex(k1, k2);
            REQUIRE(w.terms.size() == 1);
            CHECK(w.terms.begin()->second.re > 0);
            CHECK(w.terms.begin()->second.im == 0);
        }
}

TEST_CASE("per-place constants") {
    CHECK(c_sigma(PlaceSpec::real_split(2, 0)) == PiScaled::with_pi(-4, GaussianRational(1)));
    CHECK(c_sigma(PlaceSpec::real_split(2, 0, 1, false)).is_zero());
    CHECK(c_sigma(PlaceSpec::complex_split(2, 2, 0, 0, false)).is_zero());
    CHECK(c_sigma(PlaceSpec::nonsplit_place(2, 0)) ==
          PiScaled::with_pi(-6, GaussianRational(Rat(1, 4))));
    CHECK_THROWS_AS(PlaceSpec::real_split(3, 0), std::domain_error);
    CHECK_THROWS_AS(PlaceSpec::real_split(4, 2), std::domain_error);
    CHECK_THROWS_AS(PlaceSpec::complex_split(4, 2, 0, 1), std::domain_error);
}

TEST_CASE("global constant on single places") {
    GlobalSpec g1{{PlaceSpec::real_split(2, 0)}};
    CHECK(c_global(g1) == PiScaled::with_pi(-4, GaussianRational(1)));
    // nonsplit k=4, m=1: 2 Gamma(1) Gamma(3) / ((-1)^{1+1} (2 pi)^5) = (1/8) pi^{-5}
    GlobalSpec g2{{PlaceSpec::nonsplit_place(4, 1)}};
    CHECK(c_global(g2) == PiScaled::with_pi(-10, GaussianRational(Rat(1, 8))));
    CHECK(c_global(g2) == c_sigma(g2.places[0]));
    CHECK_THROWS_AS(c_global(GlobalSpec{}), std::domain_error);
}

TEST_CASE("global constant factors as the product of the per-place constants") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> nplaces(1, 6);
    for (int it = 0; it < 50; ++it) {
        GlobalSpec g;
        int n = nplaces(rng);
        for (int i = 0; i < n; ++i) g.places.push_back(random_place(rng));
        PiScaled prod = PiScaled::from(1);
        for (auto& p : g.places) prod *= c_sigma(p);
        CHECK(c_global(g) == prod);
    }
}

TEST_CASE("global constant is symmetric under m -> -m") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> nplaces(1, 5);
    for (int it = 0; it < 30; ++it) {
        GlobalSpec g, gneg;
        int n = nplaces(rng);
        for (int i = 0; i < n; ++i) {
            PlaceSpec p = random_place(rng);
            gneg.places.push_back(p);
            auto& q = gneg.places.back();
            q.m = -q.m;
            q.m_id = -q.m_id;
            q.m_c = -q.m_c;
            g.places.push_back(p);
        }
        CHECK(c_global(g) == c_global(gneg));
    }
}

TEST_CASE("vanishing predicate") {
    GlobalSpec all{{PlaceSpec::real_split(4, 1), PlaceSpec::complex_split(4, 2, 1, 0)}};
    CHECK(vanishing_predicate(all));
    GlobalSpec bad = all;
    bad.places[0].chi_matches = false;
    CHECK_FALSE(vanishing_predicate(bad));
    CHECK(c_global(bad).is_zero());
    GlobalSpec none{{PlaceSpec::nonsplit_place(6, 2)}};
    CHECK(vanishing_predicate(none));
}

TEST_CASE("volume table") {
    CHECK(volume_table(VolumeEntry::ramified_quaternion_archimedean) ==
          PiScaled::with_pi(4, GaussianRational(2)));
    CHECK(volume_table(VolumeEntry::pgl2_integers, Rat(2), Rat(1)) ==
          PiScaled::from(Rat(3, 4)));
    CHECK(volume_table(VolumeEntry::ramified_quaternion_order, Rat(3), Rat(1)) ==
          PiScaled::from(Rat(4, 9)));
    CHECK(volume_table(VolumeEntry::global_unit_index, Rat(1), Rat(5)) ==
          PiScaled::from(Rat(1, 5)));
    CHECK(volume_table(VolumeEntry::pgl2_integers, Rat(2), Rat(2)) ==
          PiScaled::from(Rat(3, 4) * Rat(8)));
    CHECK_THROWS_AS(volume_table(VolumeEntry::pgl2_integers, Rat(1)), std::domain_error);
}
