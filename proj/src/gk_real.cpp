#include "gklocal/gk_real.hpp"

#include <cmath>

namespace gk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// chi-exponent of the series: k/2 on the weight-k side, 1 - k/2 on the dual side.
int chi_exp(int k, SeriesKind kind) { return kind == SeriesKind::weight_k ? k / 2 : 1 - k / 2; }

// Exact Fourier modes of (-sin theta)^a (cos theta)^b as a Laurent polynomial in
// e^{i theta}: (-sin)^a = (i/2)^a sum_p binom(a,p)(-1)^{a-p} z^{2p-a},
// cos^b = 2^{-b} sum_q binom(b,q) z^{2q-b}.
std::map<int, GaussianRational> neg_sin_cos_modes(int a, int b) {
    std::map<int, GaussianRational> modes;
    GaussianRational pref =
        GaussianRational::i_pow(a) * GaussianRational(Rat(1, Int(1) << (a + b)));
    for (int p = 0; p <= a; ++p) {
        GaussianRational ca(Rat(binomial(a, p) * minus_one_pow(a - p)));
        for (int q = 0; q <= b; ++q) {
            GaussianRational c = pref * ca * GaussianRational(Rat(binomial(b, q)));
            int mode = 2 * p - a + 2 * q - b;
            auto [it, inserted] = modes.emplace(mode, c);
            if (!inserted) it->second += c;
        }
    }
    return modes;
}

GaussianRational mode_at(const std::map<int, GaussianRational>& modes, int m) {
    auto it = modes.find(m);
    return it == modes.end() ? GaussianRational() : it->second;
}

}  // namespace

GaussianRational eval_f_n_exact(int k, SeriesKind kind, int n, const Mat2& g) {
    GaussianRational det = g.det();
    if (!det.is_real() || !(det.re > 0))
        throw std::domain_error("eval_f_n_exact: determinant must be real positive");
    GaussianRational zm = g.d - g.c * GaussianRational::i();  // d - c i
    GaussianRational zp = g.d + g.c * GaussianRational::i();
    int e = chi_exp(k, kind);
    return det.pow(e) * zm.pow(n - e) * zp.pow(-n - e);
}

Cplx eval_f_n(int k, SeriesKind kind, int n, const std::array<double, 4>& g) {
    double det = g[0] * g[3] - g[1] * g[2];
    if (!(det > 0)) throw std::domain_error("eval_f_n: determinant must be positive");
    Cplx zm(g[3], -g[2]), zp(g[3], g[2]);
    int e = chi_exp(k, kind);
    return std::pow(Cplx(det), e) * std::pow(zm, n - e) * std::pow(zp, -n - e);
}

Cplx eval_series(const RealSeriesElem& f, const std::array<double, 4>& g) {
    double det = g[0] * g[3] - g[1] * g[2];
    if (det == 0) throw std::domain_error("eval_series: singular matrix");
    Cplx s = 0.0;
    if (det > 0) {
        for (auto& [n, c] : f.coef) s += c.to_complex() * eval_f_n(f.k, f.kind, n, g);
        return s;
    }
    // g = g' diag(1,-1) with det g' > 0; apply the parity extension to the element.
    std::array<double, 4> gp{g[0], -g[1], g[2], -g[3]};
    double sign = (f.eps == 1 ? 1.0 : -1.0) * ((f.k - 2) / 2 % 2 == 0 ? 1.0 : -1.0);
    for (auto& [n, c] : f.coef) s += sign * c.to_complex() * eval_f_n(f.k, f.kind, -n, gp);
    return s;
}

GaussianRational eval_series_exact(const RealSeriesElem& f, const Mat2& g) {
    GaussianRational det = g.det();
    if (!det.is_real() || det.is_zero())
        throw std::domain_error("eval_series_exact: determinant must be real nonzero");
    GaussianRational s;
    if (det.re > 0) {
        for (auto& [n, c] : f.coef) s += c * eval_f_n_exact(f.k, f.kind, n, g);
        return s;
    }
    Mat2 gp{g.a, -g.b, g.c, -g.d};
    GaussianRational sign(Rat(f.eps * minus_one_pow((f.k - 2) / 2)));
    for (auto& [n, c] : f.coef) s += sign * c * eval_f_n_exact(f.k, f.kind, -n, gp);
    return s;
}

RealSeriesElem w_act(const RealSeriesElem& f) {
    RealSeriesElem r(f.k, f.eps, f.kind);
    GaussianRational sign(Rat(f.eps * minus_one_pow((f.k - 2) / 2)));
    for (auto& [n, c] : f.coef) r.add(-n, sign * c);
    return r;
}

DualVec rho_real(const RealSeriesElem& f) {
    if (f.kind != SeriesKind::weight_k)
        throw std::invalid_argument("rho_real: expects a weight-k series");
    int K = f.k - 2;
    DualVec v(K);
    for (int a = 0; a <= K; ++a) {
        auto modes = neg_sin_cos_modes(a, K - a);
        GaussianRational s;
        for (auto& [n, c] : f.coef) s += c * mode_at(modes, -2 * n);
        v.values[a] = s;
    }
    return v;
}

GaussianRational mu_on_P_basis(const DualVec& mu, int j) {
    int K = mu.degree;
    if (j < 0 || j > K) throw std::invalid_argument("mu_on_P_basis: index out of range");
    // P_j = (Y + iX)^j (Y - iX)^{K-j}
    GaussianRational s;
    for (int p = 0; p <= j; ++p)
        for (int q = 0; q <= K - j; ++q) {
            GaussianRational c(Rat(binomial(j, p) * binomial(K - j, q)));
            s += c * GaussianRational::i_pow(p - q) * mu.values[p + q];
        }
    return s;
}

RealSeriesElem section_s(int k, int eps, const DualVec& mu) {
    if (mu.degree != k - 2) throw std::invalid_argument("section_s: degree must be k-2");
    int K = k - 2;
    RealSeriesElem f(k, eps, SeriesKind::weight_k);
    for (int n = -K / 2; n <= K / 2; ++n) f.add(n, mu_on_P_basis(mu, n + K / 2));
    return f;
}

RealSeriesElem lie_delta_real(const RealSeriesElem& f) {
    if (f.kind != SeriesKind::weight_k)
        throw std::invalid_argument("lie_delta_real: expects a weight-k series");
    RealSeriesElem r(f.k, f.eps, f.kind);
    for (auto& [n, c] : f.coef) {
        r.add(n + 1, c * GaussianRational(Rat(f.k / 2 + n, 2)));
        r.add(n - 1, c * GaussianRational(Rat(f.k / 2 - n, 2)));
    }
    return r;
}

DualVec lie_delta_dual(const DualVec& mu) {
    int K = mu.degree;
    DualVec r(K);
    for (int a = 0; a <= K; ++a) r.values[a] = mu.values[a] * GaussianRational(Rat(K / 2 - a));
    return r;
}

RealSeriesElem delta_s_real(int k, int eps, const DualVec& mu) {
    RealSeriesElem d = lie_delta_real(section_s(k, eps, mu));
    RealSeriesElem sd = section_s(k, eps, lie_delta_dual(mu));
    for (auto& [n, c] : sd.coef) d.add(n, -c);
    for (auto& [n, c] : d.coef)
        if (2 * std::abs(n) != k)
            throw std::logic_error("delta_s_real: support leaked outside the discrete part");
    return d;
}

RealSeriesElem delta_s_real_closed(int k, int eps, int m) {
    if (2 * std::abs(m) > k - 2) throw std::domain_error("delta_s_real_closed: m out of range");
    RealSeriesElem f(k, eps, SeriesKind::weight_k);
    GaussianRational half(Rat(k - 1, 2));
    int e = (k - 2) / 2 + m;
    f.add(k / 2, half * GaussianRational::i_pow(-e));
    f.add(-k / 2, half * GaussianRational::i_pow(e));
    return f;
}

GaussianRational pair_B_real(const RealSeriesElem& f, const RealSeriesElem& h) {
    if (f.k != h.k || f.eps != h.eps || f.kind == h.kind)
        throw std::invalid_argument("pair_B_real: needs matching weight/parity, opposite kinds");
    GaussianRational s;
    for (auto& [n, c] : f.coef) s += c * h.coeff(-n);
    return s;
}

RealSeriesElem s_prime_real(const RealSeriesElem& h) {
    if (h.kind != SeriesKind::weight_k)
        throw std::invalid_argument("s_prime_real: expects a weight-k discrete member");
    RealSeriesElem r(h.k, h.eps, SeriesKind::weight_two_minus_k);
    for (auto& [n, c] : h.coef) {
        if (2 * std::abs(n) != h.k)
            throw std::domain_error("s_prime_real: support outside the minimal K-types");
        r.add(n, c);
    }
    return r;
}

GaussianRational pair_D_real(const RealSeriesElem& f, const RealSeriesElem& h) {
    return pair_B_real(f, s_prime_real(h));
}

RealSeriesElem rho_dual_real(int k, int eps, const DualVec& mu) {
    if (mu.degree != k - 2) throw std::invalid_argument("rho_dual_real: degree must be k-2");
    int K = k - 2;
    std::map<int, GaussianRational> total;
    for (int a = 0; a <= K; ++a) {
        if (mu.values[a].is_zero()) continue;
        // cos^a sin^{K-a} = (-1)^{K-a} (-sin)^{K-a} cos^a
        auto modes = neg_sin_cos_modes(K - a, a);
        GaussianRational c = mu.values[a] * GaussianRational(Rat(binomial(K, a) * minus_one_pow(K - a)));
        for (auto& [mode, v] : modes) {
            auto [it, inserted] = total.emplace(mode, c * v);
            if (!inserted) it->second += c * v;
        }
    }
    RealSeriesElem r(k, eps, SeriesKind::weight_two_minus_k);
    for (auto& [mode, v] : total)
        if (mode % 2 == 0) r.add(mode / 2, v);
    return r;
}

GaussianRational pair_V_real(int k, int eps, const DualVec& mu1, const DualVec& mu2) {
    return pair_B_real(section_s(k, eps, mu1), rho_dual_real(k, eps, mu2));
}

FLimitsReal f_limits_real_routes(int k, int m) {
    int K = k - 2;
    if (2 * std::abs(m) > K) throw std::domain_error("f_limits_real: m out of range");
    Rat binom_inv(Int(1), binomial(K, K / 2 - m));
    Rat closed = Rat(minus_one_pow(m) * (Int(1) << (k - 1)) * (k - 1)) * binom_inv;

    // partial sums from the two one-sided series expansions
    Int s_low = 0, s_high = 0;
    for (int s = 0; K / 2 - m - 2 * s >= 0; ++s) s_low += binomial(k, K / 2 - m - 2 * s);
    for (int s = 0; K / 2 - m + 2 * s + 2 <= k; ++s) s_high += binomial(k, K / 2 - m + 2 * s + 2);
    Rat sums = Rat(minus_one_pow(m) * (k - 1) * (s_low + s_high)) * binom_inv;

    return {PiScaled::from(closed), PiScaled::from(sums)};
}

PiScaled f_limits_real(int k, int m) {
    FLimitsReal r = f_limits_real_routes(k, m);
    if (r.closed != r.from_sums)
        throw std::logic_error("f_limits_real: partial-sum route disagrees with the closed form");
    return r.closed;
}

PiScaled integral_real_closed(int k, int lambda_sign, RealCharacter chi, int m) {
    if (2 * std::abs(m) > k - 2) throw std::domain_error("integral_real_closed: m out of range");
    if (chi.sign_at_minus_one != lambda_sign) return PiScaled::zero();
    Rat v = Rat(minus_one_pow(m) * (Int(1) << k) * (k - 1), binomial(k - 2, (k - 2) / 2 - m));
    return PiScaled::from(v);
}

namespace {

// f_n at a complex matrix with det on the positive real axis; the same closed
// formula, continued holomorphically (all exponents are integers).
Cplx eval_f_n_c(int k, SeriesKind kind, int n, const std::array<Cplx, 4>& g) {
    Cplx det = g[0] * g[3] - g[1] * g[2];
    Cplx zm = g[3] - Cplx(0, 1) * g[2], zp = g[3] + Cplx(0, 1) * g[2];
    int e = chi_exp(k, kind);
    return std::pow(det, e) * std::pow(zm, n - e) * std::pow(zp, -n - e);
}

// integral over the circle (vol 1) of A(kappa(theta) diag(t,1)) * B(kappa(theta)).
// A is supported on the minimal K-types n = +-k/2, where the translated function is
// rational in zeta = e^{i theta} with its poles strictly outside (n = +k/2) or
// strictly inside (n = -k/2) the unit circle for every t > 0. The contour is moved
// to |zeta| = 1/2 resp. 2, a fixed log-distance from the poles, so the trapezoid
// rule is spectrally accurate and every node value stays on the scale of the
// answer (on |zeta| = 1 the poles pinch as t -> 0 or infinity and the quadrature
// would cancel catastrophically).
Cplx circle_pair_translated(const RealSeriesElem& A, const RealSeriesElem& B, double t,
                            int npoints) {
    Cplx total = 0.0;
    for (auto& [na, ca] : A.coef) {
        if (2 * std::abs(na) != A.k)
            throw std::invalid_argument("circle_pair_translated: non-minimal K-type");
        double rho = na > 0 ? 0.5 : 2.0;
        Cplx acc = 0.0;
        for (int j = 0; j < npoints; ++j) {
            double phi = 2.0 * kPi * j / npoints;
            Cplx zeta = rho * std::exp(Cplx(0.0, phi));
            Cplx c = 0.5 * (zeta + 1.0 / zeta);
            Cplx s = Cplx(0, -0.5) * (zeta - 1.0 / zeta);
            Cplx fv = eval_f_n_c(A.k, A.kind, na, {c * t, s, -s * t, c});
            Cplx bv = 0.0;
            for (auto& [nb, cb] : B.coef) bv += cb.to_complex() * std::pow(zeta, 2 * nb);
            acc += fv * bv;
        }
        total += ca.to_complex() * acc / static_cast<double>(npoints);
    }
    return total;
}

}  // namespace

NumericIntegral integral_real_numeric(int k, int eps, RealCharacter chi, int m,
                                      const QuadConfig& cfg) {
    if (2 * std::abs(m) > k - 2) throw std::domain_error("integral_real_numeric: m out of range");
    RealSeriesElem A = delta_s_real(k, eps, make_mu_m(k, m));
    RealSeriesElem B = s_prime_real(delta_s_real(k, eps, make_mu_m(k, -m)));
    RealSeriesElem Aw = w_act(A);
    double neg_sign = chi.sign_at_minus_one * (m % 2 == 0 ? 1.0 : -1.0);
    int npoints = std::max(64, cfg.circle_points);

    auto f = [&](double t) -> Cplx {
        Cplx pos = circle_pair_translated(A, B, t, npoints);
        Cplx neg = circle_pair_translated(Aw, B, t, npoints);
        return std::pow(t, m) * (pos + neg_sign * neg);
    };
    RadialResult rr = radial_quad(f, cfg);
    return {rr.value, rr.est_error, rr.converged};
}

UpsilonPairsReal upsilon_pair_real(int k, int eps) {
    int K = k - 2;
    TensorDual u = make_upsilon(K);
    std::vector<RealSeriesElem> ds;
    for (int a = 0; a <= K; ++a) ds.push_back(delta_s_real(k, eps, DualVec::basis(K, a)));

    GaussianRational dsp, plain;
    for (int a1 = 0; a1 <= K; ++a1)
        for (int a2 = 0; a2 <= K; ++a2) {
            if (u.at(a1, a2).is_zero()) continue;
            dsp += u.at(a1, a2) * pair_D_real(ds[a1], ds[a2]);
            plain += u.at(a1, a2) * pair_prime(DualVec::basis(K, a1), DualVec::basis(K, a2));
        }
    return {dsp, plain, dsp / plain};
}

PiScaled mu0_pair_real(int k) {
    RealSeriesElem d = delta_s_real(k, 1, make_mu_m(k, 0));
    GaussianRational v = pair_D_real(d, d);
    if (v != GaussianRational(Rat(Int(k - 1) * (k - 1), 2)))
        throw std::logic_error("mu0_pair_real: pipeline disagrees with (k-1)^2/2");
    return PiScaled::from(v);
}

}  // namespace gk
