#include "gklocal/waldspurger.hpp"

#include <cmath>

namespace gk {

namespace {

void check_weight(int k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("weight must be even and >= 2");
}

void check_range(int k, int m) {
    if (2 * std::abs(m) > k - 2) throw std::domain_error("m outside [(2-k)/2, (k-2)/2]");
}

// Gamma(k/2 - m) Gamma(k/2 + m) as an exact rational (both arguments are positive
// integers in the admissible range).
Rat gamma_pair(int k, int m) {
    return Rat(factorial(k / 2 - m - 1) * factorial(k / 2 + m - 1));
}

}  // namespace

PlaceSpec PlaceSpec::real_split(int k, int m, int lambda_sign, bool matches) {
    PlaceSpec p;
    p.kind = PlaceKind::real_split_torus;
    p.k = k;
    p.m = m;
    p.lambda_sign = lambda_sign;
    p.chi_matches = matches;
    p.validate();
    return p;
}

PlaceSpec PlaceSpec::complex_split(int k_id, int k_c, int m_id, int m_c, bool matches) {
    PlaceSpec p;
    p.kind = PlaceKind::complex_split_torus;
    p.k_id = k_id;
    p.k_c = k_c;
    p.m_id = m_id;
    p.m_c = m_c;
    p.chi_matches = matches;
    p.validate();
    return p;
}

PlaceSpec PlaceSpec::nonsplit_place(int k, int m) {
    PlaceSpec p;
    p.kind = PlaceKind::nonsplit;
    p.k = k;
    p.m = m;
    p.chi_matches = true;  // the nonsplit integral has no locally constant twist choice
    p.validate();
    return p;
}

void PlaceSpec::validate() const {
    switch (kind) {
        case PlaceKind::complex_split_torus:
            check_weight(k_id);
            check_weight(k_c);
            check_range(k_id, m_id);
            check_range(k_c, m_c);
            break;
        case PlaceKind::real_split_torus:
            if (lambda_sign != 1 && lambda_sign != -1)
                throw std::domain_error("PlaceSpec: lambda_sign must be +-1");
            [[fallthrough]];
        case PlaceKind::nonsplit:
            check_weight(k);
            check_range(k, m);
            break;
    }
}

PiScaled zeta_arch(ArchKind kind, int s) {
    if (s < 1) throw std::domain_error("zeta_arch: pole of Gamma");
    if (kind == ArchKind::real_place) {
        // pi^{-s/2} Gamma(s/2)
        return PiScaled::with_pi(-s, GaussianRational(1)) * gamma_exact(s);
    }
    // 2 (2 pi)^{-s} Gamma(s)
    Rat c(Int(2), Int(1) << s);
    return PiScaled::with_pi(-2 * s, GaussianRational(c)) * gamma_exact(2 * s);
}

PiScaled whittaker_norm_real(int k) {
    check_weight(k);
    Rat c = Rat(Int(2) * factorial(k - 1), Int(1) << (2 * k));
    return PiScaled::with_pi(-2 * k, GaussianRational(c));
}

PiScaled whittaker_norm_complex(int k1, int k2) {
    check_weight(k1);
    check_weight(k2);
    Rat c = Rat(Int(8), Int(1) << (k1 + k2 - 1));
    c *= Rat(factorial((k1 + k2) / 2 - 1) * factorial((k1 + k2) / 2 - 1) * factorial(k1 - 1) *
                 factorial(k2 - 1),
             factorial(k1 + k2 - 1));
    return PiScaled::with_pi(2 * (1 - k1 - k2), GaussianRational(c));
}

PiScaled c_sigma(const PlaceSpec& p) {
    p.validate();
    switch (p.kind) {
        case PlaceKind::nonsplit: {
            // 2 Gamma(k/2-m) Gamma(k/2+m) / ((-1)^{m+(k-2)/2} (2 pi)^{k+1});
            // L(1,eta) zeta(1)^{-1} = pi^{-1} is already folded in.
            Rat c = Rat(Int(2) * minus_one_pow(p.m + (p.k - 2) / 2), Int(1) << (p.k + 1)) *
                    gamma_pair(p.k, p.m);
            return PiScaled::with_pi(-2 * (p.k + 1), GaussianRational(c));
        }
        case PlaceKind::real_split_torus: {
            if (!p.chi_matches) return PiScaled::zero();
            Rat c = Rat(Int(4) * minus_one_pow(p.m), Int(1) << p.k) * gamma_pair(p.k, p.m);
            return PiScaled::with_pi(-2 * p.k, GaussianRational(c));
        }
        case PlaceKind::complex_split_torus: {
            if (!p.chi_matches) return PiScaled::zero();
            int e = 1 - p.k_id - p.k_c;
            Rat c = Rat(Int(16) * minus_one_pow(p.m_id + p.m_c));
            c *= Rat(Int(1), Int(1) << (p.k_id + p.k_c - 1));
            c *= gamma_pair(p.k_id, p.m_id) * gamma_pair(p.k_c, p.m_c);
            return PiScaled::with_pi(2 * e, GaussianRational(c));
        }
    }
    throw std::logic_error("c_sigma: unreachable");
}

PiScaled c_global(const GlobalSpec& g) {
    if (g.places.empty()) throw std::domain_error("c_global: empty place list");
    if (!vanishing_predicate(g)) return PiScaled::zero();

    long sign_exp = 0;
    int n_real = 0, n_complex = 0, n_nonsplit = 0;
    PiScaled prod = PiScaled::from(1);
    auto embedding_factor = [](int k, int m) {
        Rat c = Rat(minus_one_pow(m), Int(1) << k) * gamma_pair(k, m);
        return PiScaled::with_pi(-2 * k, GaussianRational(c));
    };
    for (const auto& p : g.places) {
        p.validate();
        switch (p.kind) {
            case PlaceKind::real_split_torus:
                ++n_real;
                prod *= embedding_factor(p.k, p.m);
                break;
            case PlaceKind::complex_split_torus:
                ++n_complex;
                prod *= embedding_factor(p.k_id, p.m_id);
                prod *= embedding_factor(p.k_c, p.m_c);
                break;
            case PlaceKind::nonsplit:
                ++n_nonsplit;
                sign_exp += (p.k - 2) / 2;
                prod *= embedding_factor(p.k, p.m);
                break;
        }
    }
    Rat lead = Rat(minus_one_pow(sign_exp) * (Int(1) << (2 * n_real)) *
                   (Int(1) << (5 * n_complex)));
    // 4^{n_real} (32 pi)^{n_complex} pi^{-n_nonsplit}
    PiScaled head = PiScaled::with_pi(2 * (n_complex - n_nonsplit), GaussianRational(lead));
    return head * prod;
}

bool vanishing_predicate(const GlobalSpec& g) {
    for (const auto& p : g.places)
        if (p.kind != PlaceKind::nonsplit && !p.chi_matches) return false;
    return true;
}

PiScaled volume_table(VolumeEntry entry, const Rat& q, const Rat& sqrt_disc) {
    switch (entry) {
        case VolumeEntry::ramified_quaternion_archimedean:
            return PiScaled::with_pi(4, GaussianRational(2));
        case VolumeEntry::pgl2_integers: {
            if (q <= 1) throw std::domain_error("volume_table: q must exceed 1");
            Rat z = 1 - Rat(1) / (q * q);
            return PiScaled::from(z * sqrt_disc * sqrt_disc * sqrt_disc);
        }
        case VolumeEntry::ramified_quaternion_order: {
            if (q <= 1) throw std::domain_error("volume_table: q must exceed 1");
            Rat z = (1 - Rat(1) / (q * q)) / (q - 1);
            return PiScaled::from(z * sqrt_disc * sqrt_disc * sqrt_disc);
        }
        case VolumeEntry::global_unit_index:
            if (sqrt_disc <= 0) throw std::domain_error("volume_table: discriminant must be positive");
            return PiScaled::from(Rat(1) / sqrt_disc);
    }
    throw std::domain_error("volume_table: unknown entry");
}

}  // namespace gk
