#include "gklocal/gk_complex.hpp"

#include <cmath>

namespace gk {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

GaussianRational su2_moment(int n1, int n2, int m1, int m2) {
    if (n1 < 0 || n2 < 0 || m1 < 0 || m2 < 0)
        throw std::domain_error("su2_moment: exponents must be nonnegative");
    if (n1 != n2 || m1 != m2) return GaussianRational();
    return GaussianRational(Rat(Int(1), Int(n1 + m1 + 1) * binomial(n1 + m1, n1)));
}

GaussianRational S3Poly::integrate() const {
    GaussianRational s;
    for (auto& [e, c] : terms) {
        if (e[0] != e[1] || e[2] != e[3]) continue;  // phase integrals kill the rest
        s += c * su2_moment(e[0], e[1], e[2], e[3]);
    }
    return s;
}

Cplx S3Poly::eval(Cplx alpha, Cplx beta) const {
    Cplx s = 0.0;
    for (auto& [e, c] : terms)
        s += c.to_complex() * std::pow(alpha, e[0]) * std::pow(std::conj(alpha), e[1]) *
             std::pow(beta, e[2]) * std::pow(std::conj(beta), e[3]);
    return s;
}

int lambda_eff(const KPair& kp, SeriesKind kind) {
    return kind == SeriesKind::weight_k ? kp.lambda() : -kp.lambda();
}

ComplexSeriesElem& ComplexSeriesElem::add_harmonic(int n, const DualVec& mu) {
    if (mu.degree != 2 * n) throw std::invalid_argument("add_harmonic: degree must be 2n");
    if (n < std::abs(lambda_eff(kp, kind)))
        throw std::invalid_argument("add_harmonic: harmonic below |lambda|");
    if (mu.is_zero()) return *this;
    auto [it, inserted] = harm.emplace(n, mu);
    if (!inserted) {
        it->second += mu;
        if (it->second.is_zero()) harm.erase(it);
    }
    return *this;
}

S3Poly phi_restrict(const KPair& kp, SeriesKind kind, int n, const DualVec& mu) {
    if (mu.degree != 2 * n) throw std::invalid_argument("phi_restrict: degree must be 2n");
    int lam = lambda_eff(kp, kind);
    int A = n + lam, B = n - lam;
    if (A < 0 || B < 0) throw std::domain_error("phi_restrict: harmonic below |lambda|");
    S3Poly p;
    for (int i = 0; i <= A; ++i)
        for (int j = 0; j <= B; ++j) {
            GaussianRational c = mu.values[(A - i) + (B - j)];
            if (c.is_zero()) continue;
            c *= GaussianRational(Rat(binomial(A, i) * binomial(B, j) * minus_one_pow(i)));
            p.add({i, B - j, A - i, j}, c);  // alpha^i abar^{B-j} beta^{A-i} bbar^j
        }
    return p;
}

namespace {

// chi-exponents and denominator exponent of the matrix form of phi_n for either kind.
struct PhiShape {
    int e_id, e_c;  // powers of det and conj(det)
    int denom;      // power of (|r|^2 + |s|^2)
};

PhiShape phi_shape(const KPair& kp, SeriesKind kind, int n) {
    if (kind == SeriesKind::weight_k)
        return {kp.k_id / 2, kp.k_c / 2, kp.big_m() + n + 2};
    return {(2 - kp.k_id) / 2, (2 - kp.k_c) / 2, n - kp.big_m()};
}

}  // namespace

Cplx eval_phi_n(const KPair& kp, SeriesKind kind, int n, const DualVec& mu,
                const std::array<Cplx, 4>& g) {
    Cplx det = g[0] * g[3] - g[1] * g[2];
    if (det == Cplx(0.0)) throw std::domain_error("eval_phi_n: singular matrix");
    Cplx r = g[2], s = g[3];
    int lam = lambda_eff(kp, kind);
    int A = n + lam, B = n - lam;
    Cplx acc = 0.0;
    for (int i = 0; i <= A; ++i)
        for (int j = 0; j <= B; ++j) {
            GaussianRational c = mu.values[(A - i) + (B - j)];
            if (c.is_zero()) continue;
            double bc = double(binomial(A, i).convert_to<long long>()) *
                        double(binomial(B, j).convert_to<long long>());
            acc += bc * c.to_complex() * std::pow(std::conj(s), i) * std::pow(std::conj(r), A - i) *
                   std::pow(r, j) * std::pow(-s, B - j);
        }
    PhiShape sh = phi_shape(kp, kind, n);
    double nrm = std::norm(r) + std::norm(s);
    return std::pow(det, sh.e_id) * std::pow(std::conj(det), sh.e_c) * acc /
           std::pow(nrm, sh.denom);
}

GaussianRational eval_phi_n_exact(const KPair& kp, SeriesKind kind, int n, const DualVec& mu,
                                  const Mat2& g) {
    GaussianRational det = g.det();
    if (det.is_zero()) throw std::domain_error("eval_phi_n_exact: singular matrix");
    GaussianRational r = g.c, s = g.d;
    int lam = lambda_eff(kp, kind);
    int A = n + lam, B = n - lam;
    GaussianRational acc;
    for (int i = 0; i <= A; ++i)
        for (int j = 0; j <= B; ++j) {
            GaussianRational c = mu.values[(A - i) + (B - j)];
            if (c.is_zero()) continue;
            c *= GaussianRational(Rat(binomial(A, i) * binomial(B, j)));
            acc += c * s.conj().pow(i) * r.conj().pow(A - i) * r.pow(j) * (-s).pow(B - j);
        }
    PhiShape sh = phi_shape(kp, kind, n);
    GaussianRational nrm = r * r.conj() + s * s.conj();
    return det.pow(sh.e_id) * det.conj().pow(sh.e_c) * acc * nrm.pow(-sh.denom);
}

Cplx eval_series(const ComplexSeriesElem& f, const std::array<Cplx, 4>& g) {
    Cplx s = 0.0;
    for (auto& [n, mu] : f.harm) s += eval_phi_n(f.kp, f.kind, n, mu, g);
    return s;
}

TensorDual rho_complex(const ComplexSeriesElem& f) {
    if (f.kind != SeriesKind::weight_k)
        throw std::invalid_argument("rho_complex: expects a weight-k series");
    int K1 = f.kp.k_id - 2, K2 = f.kp.k_c - 2;
    S3Poly fp;
    for (auto& [n, mu] : f.harm) fp += phi_restrict(f.kp, f.kind, n, mu);
    TensorDual out(K1, K2);
    for (int a = 0; a <= K1; ++a)
        for (int b = 0; b <= K2; ++b) {
            // (-bbar)^a abar^{K1-a} (-beta)^b alpha^{K2-b}
            S3Poly mono;
            mono.add({K2 - b, K1 - a, b, a}, GaussianRational(Rat(minus_one_pow(a + b))));
            out.at(a, b) = (fp * mono).integrate();
        }
    return out;
}

DualVec clebsch_gordan_tn(const KPair& kp, int n, const TensorDual& mu) {
    int lam = kp.lambda(), M = kp.big_m();
    if (n < std::abs(lam) || n > M) throw std::domain_error("clebsch_gordan_tn: unbalanced n");
    if (mu.deg1 != kp.k_id - 2 || mu.deg2 != kp.k_c - 2)
        throw std::invalid_argument("clebsch_gordan_tn: shape mismatch");
    int r1 = n + lam, r2 = n - lam, r3 = M - n;
    // (X_id y - Y_id x)^{r1} (-Y_c y - X_c x)^{r2} (X_id X_c + Y_id Y_c)^{r3},
    // contracted against mu over the (id, c) variables; result in P(2n).
    HomPoly poly(2 * n);
    for (int i1 = 0; i1 <= r1; ++i1)
        for (int i2 = 0; i2 <= r2; ++i2)
            for (int i3 = 0; i3 <= r3; ++i3) {
                Int c = binomial(r1, i1) * binomial(r2, i2) * binomial(r3, i3) *
                        minus_one_pow(r1 - i1 + r2);
                GaussianRational v = mu.at(i1 + i3, r2 - i2 + i3);
                if (v.is_zero()) continue;
                poly.coeffs[(r1 - i1) + (r2 - i2)] += v * GaussianRational(Rat(c));
            }
    return poly_to_dual(poly);
}

ComplexSeriesElem section_s_complex(const KPair& kp, const TensorDual& mu) {
    int lam = kp.lambda(), M = kp.big_m();
    ComplexSeriesElem f(kp, SeriesKind::weight_k);
    for (int n = std::abs(lam); n <= M; ++n) {
        GaussianRational c(Rat(Int(2 * n + 1) * binomial(2 * n, n + lam)));
        f.add_harmonic(n, clebsch_gordan_tn(kp, n, mu).scaled(c));
    }
    return f;
}

DualVec star_op(const DualVec& nu) {
    int deg = nu.degree + 2;
    DualVec out(deg);
    for (int a = 1; a <= deg - 1; ++a)
        out.values[a] = nu.values[a - 1] * GaussianRational(Rat(Int(a) * (deg - a)));
    return out;
}

ComplexSeriesElem lie_delta_complex(const ComplexSeriesElem& f) {
    if (f.kind != SeriesKind::weight_k)
        throw std::invalid_argument("lie_delta_complex: expects a weight-k series");
    int lam = f.kp.lambda(), M = f.kp.big_m();
    ComplexSeriesElem out(f.kp, f.kind);
    for (auto& [n, mu] : f.harm) {
        if (lam != 0 && n >= 1) {
            // same-harmonic piece lambda(M+1)/(2n(n+1)) * mu o (y d_y - x d_x)
            GaussianRational c0(Rat(Int(lam) * (M + 1), Int(2) * n * (n + 1)));
            DualVec m0(2 * n);
            for (int a = 0; a <= 2 * n; ++a)
                m0.values[a] = mu.values[a] * c0 * GaussianRational(Rat(2 * n - 2 * a));
            out.add_harmonic(n, m0);
        }
        {
            // raising piece -(M+n+2)/((n+1)(2n+1)) * mu o (d^2/dx dy)
            GaussianRational c1(Rat(Int(-(M + n + 2)), Int(n + 1) * (2 * n + 1)));
            DualVec m1(2 * n + 2);
            for (int a = 1; a <= 2 * n + 1; ++a)
                m1.values[a] = mu.values[a - 1] * c1 * GaussianRational(Rat(Int(a) * (2 * n + 2 - a)));
            out.add_harmonic(n + 1, m1);
        }
        if (n >= 1 && (n + lam) * (n - lam) != 0 && n - M - 1 != 0) {
            // lowering piece (n+lam)(n-lam)(n-M-1)/(n(2n+1)) * mu o (xy *)
            GaussianRational cm(Rat(Int(n + lam) * (n - lam) * (n - M - 1), Int(n) * (2 * n + 1)));
            DualVec mm(2 * n - 2);
            for (int a = 0; a <= 2 * n - 2; ++a) mm.values[a] = mu.values[a + 1] * cm;
            out.add_harmonic(n - 1, mm);
        }
    }
    return out;
}

TensorDual lie_delta_dual_tensor(const TensorDual& mu) {
    TensorDual out(mu.deg1, mu.deg2);
    for (int a = 0; a <= mu.deg1; ++a)
        for (int b = 0; b <= mu.deg2; ++b)
            out.at(a, b) = mu.at(a, b) * GaussianRational(Rat(mu.deg1 / 2 - a + mu.deg2 / 2 - b));
    return out;
}

ComplexSeriesElem delta_s_complex(const KPair& kp, const TensorDual& mu) {
    ComplexSeriesElem d = lie_delta_complex(section_s_complex(kp, mu));
    ComplexSeriesElem sd = section_s_complex(kp, lie_delta_dual_tensor(mu));
    for (auto& [n, v] : sd.harm) d.add_harmonic(n, v.scaled(GaussianRational(-1)));
    for (auto& [n, v] : d.harm)
        if (n != kp.big_m() + 1)
            throw std::logic_error("delta_s_complex: support leaked outside harmonic M+1");
    return d;
}

ComplexSeriesElem delta_s_complex_closed(const KPair& kp, const TensorDual& mu) {
    int M = kp.big_m();
    GaussianRational c(Rat(Int(-2) * binomial(2 * M, kp.k_id - 2)));
    ComplexSeriesElem f(kp, SeriesKind::weight_k);
    f.add_harmonic(M + 1, star_op(clebsch_gordan_tn(kp, M, mu)).scaled(c));
    return f;
}

GaussianRational pair_B_complex(const ComplexSeriesElem& f, const ComplexSeriesElem& h) {
    if (!(f.kp == h.kp) || f.kind == h.kind)
        throw std::invalid_argument("pair_B_complex: needs matching weights, opposite kinds");
    S3Poly fp, hp;
    for (auto& [n, mu] : f.harm) fp += phi_restrict(f.kp, f.kind, n, mu);
    for (auto& [n, mu] : h.harm) hp += phi_restrict(h.kp, h.kind, n, mu);
    return (fp * hp).integrate();
}

ComplexSeriesElem s_prime_complex(const ComplexSeriesElem& h) {
    if (h.kind != SeriesKind::weight_k)
        throw std::invalid_argument("s_prime_complex: expects a weight-k discrete member");
    int M = h.kp.big_m();
    ComplexSeriesElem r(h.kp, SeriesKind::weight_two_minus_k);
    for (auto& [n, mu] : h.harm) {
        if (n != M + 1)
            throw std::domain_error("s_prime_complex: support outside harmonic M+1");
        r.add_harmonic(n, mu);
    }
    return r;
}

GaussianRational pair_D_complex(const ComplexSeriesElem& f, const ComplexSeriesElem& h) {
    return pair_B_complex(f, s_prime_complex(h));
}

S3Poly rho_dual_restrict(const KPair& kp, const TensorDual& mu) {
    int K1 = kp.k_id - 2, K2 = kp.k_c - 2;
    if (mu.deg1 != K1 || mu.deg2 != K2)
        throw std::invalid_argument("rho_dual_restrict: shape mismatch");
    // mu((abar X_id + bbar Y_id)^{K1} (x) (alpha X_c + beta Y_c)^{K2})
    S3Poly p;
    for (int a = 0; a <= K1; ++a)
        for (int b = 0; b <= K2; ++b) {
            GaussianRational c = mu.at(a, b);
            if (c.is_zero()) continue;
            c *= GaussianRational(Rat(binomial(K1, a) * binomial(K2, b)));
            p.add({b, a, K2 - b, K1 - a}, c);  // alpha^b abar^a beta^{K2-b} bbar^{K1-a}
        }
    return p;
}

GaussianRational pair_V_complex(const KPair& kp, const TensorDual& mu1, const TensorDual& mu2) {
    ComplexSeriesElem s = section_s_complex(kp, mu1);
    S3Poly sp;
    for (auto& [n, mu] : s.harm) sp += phi_restrict(kp, SeriesKind::weight_k, n, mu);
    return (sp * rho_dual_restrict(kp, mu2)).integrate();
}

TensorDual make_mu_m_pair(const KPair& kp, int m_id, int m_c) {
    return TensorDual::tensor(make_mu_m(kp.k_id, m_id), make_mu_m(kp.k_c, m_c));
}

std::vector<UpsilonTermC> upsilon_complex_terms(const KPair& kp) {
    int K1 = kp.k_id - 2, K2 = kp.k_c - 2;
    std::vector<UpsilonTermC> out;
    for (int m1 = -K1 / 2; m1 <= K1 / 2; ++m1)
        for (int m2 = -K2 / 2; m2 <= K2 / 2; ++m2) {
            Int c = binomial(K1, K1 / 2 - m1) * minus_one_pow(K1 / 2 + m1) *
                    binomial(K2, K2 / 2 - m2) * minus_one_pow(K2 / 2 + m2);
            out.push_back({make_mu_m_pair(kp, m1, m2), make_mu_m_pair(kp, -m1, -m2),
                           GaussianRational(Rat(c))});
        }
    return out;
}

PiScaled f_limits_complex(const KPair& kp, int m_id, int m_c) {
    int M = kp.big_m(), lam = kp.lambda();
    if (2 * std::abs(m_id) > kp.k_id - 2 || 2 * std::abs(m_c) > kp.k_c - 2)
        throw std::domain_error("f_limits_complex: m out of range");
    int m = m_id + m_c, mbar = m_id - m_c;

    // binomial convolution underlying the limit computation, checked exactly
    Int lhs = 0;
    for (int i = 0; i <= kp.k_c - 1; ++i)
        lhs += binomial(kp.k_c - 1, i) * binomial(kp.k_id - 1, lam - mbar + i);
    if (lhs != binomial(2 * M + 2, M + 1 + mbar))
        throw std::logic_error("f_limits_complex: convolution identity failed");

    Rat v = Rat(minus_one_pow(m + M) * Int(2) * (2 * M + 1) * (2 * M + 2) *
                binomial(2 * M, kp.k_id - 2));
    v /= Rat(binomial(kp.k_id - 2, (kp.k_id - 2) / 2 - m_id) *
             binomial(kp.k_c - 2, (kp.k_c - 2) / 2 - m_c));
    return PiScaled::from(v);
}

PiScaled integral_complex_closed(const KPair& kp, ComplexCharacter chi, int m_id, int m_c) {
    if (2 * std::abs(m_id) > kp.k_id - 2 || 2 * std::abs(m_c) > kp.k_c - 2)
        throw std::domain_error("integral_complex_closed: m out of range");
    if (chi.circle_mode != 0) return PiScaled::zero();
    int M = kp.big_m(), m = m_id + m_c;
    Rat v = Rat(minus_one_pow(M + m) * Int(8) * (2 * M + 1) * (2 * M + 2) *
                binomial(2 * M, kp.k_id - 2));
    v /= Rat(binomial(kp.k_id - 2, (kp.k_id - 2) / 2 - m_id) *
             binomial(kp.k_c - 2, (kp.k_c - 2) / 2 - m_c));
    return PiScaled::from(v);
}

// ---- numeric local integral ----------------------------------------------------

namespace {

double softplus(double x) { return x > 35.0 ? x : std::log1p(std::exp(x)); }

// One matched monomial profile of a translated sphere pairing: coefficient times
// |alpha|^{2n} |beta|^{2m} over the radial denominator, with the translation
// parameter entering as t^p conj(t)^q.
struct RadialTerm {
    int n, m;
    int p, q;
    Cplx coeff;
};

// Colatitude integral of a whole term family at radius r = e^{logr} <= 1:
//   sum over grades g of e^{i g theta} * integral over v in (0,1) of
//   N_g(v, r) / ((1-v) + r^2 v)^Q dv,
// with N_g the sum of the grade-g monomials c r^{p+q+mshift} (1-v)^n v^m. The
// numerator is summed pointwise before dividing, which keeps every node value on
// the scale of the integrand (splitting into per-monomial moment integrals is
// catastrophically cancellative for negative torus exponents). Computed after
// v = e^psi/(1+e^psi) with the window following the transition at psi = -2 log r;
// every exponent is assembled in log space, so nothing overflows.
void family_grades(const std::vector<RadialTerm>& fam, int Q, double logr, int mshift,
                   std::map<int, Cplx>& by_grade) {
    double lo = -48.0;
    double hi = std::max(48.0, -2.0 * logr + 48.0);
    const auto& gl = gauss_legendre(16);
    const double width = 0.5;
    int panels = static_cast<int>((hi - lo) / width) + 1;
    double h = (hi - lo) / panels;
    std::map<int, Cplx> acc;
    for (int p = 0; p < panels; ++p) {
        double mid = lo + (p + 0.5) * h;
        for (auto [x, w] : gl) {
            double psi = mid + 0.5 * h * x;
            double logv = -softplus(-psi), log1mv = -softplus(psi);
            double jac = psi - 2.0 * softplus(psi);  // dv = e^psi/(1+e^psi)^2 dpsi
            // log((1-v) + r^2 v), stably
            double a = log1mv, b = 2.0 * logr + logv;
            double logden = std::max(a, b) + std::log1p(std::exp(-std::abs(a - b)));
            for (auto& t : fam) {
                double le = (t.p + t.q + mshift) * logr + t.n * log1mv + t.m * logv + jac -
                            Q * logden;
                acc[t.p - t.q] += t.coeff * (w * 0.5 * h * std::exp(le));
            }
        }
    }
    for (auto& [g, v] : acc) by_grade[g] += v;
}

// Expansion of [translated slot](kappa(alpha,beta) diag(tau,1)) * [other slot](kappa)
// integrated over the sphere's phase directions (exact). The translated slot is the
// single harmonic M+1 with coefficient vector nu and the given kind; bottom row
// (-conj(beta) tau, conj(alpha)) gives monomials
//   alpha^i abar^{B-j} beta^{A-i} bbar^j tau^{e_id+j} conj(tau)^{e_c+A-i}
// over (|tau|^2 |beta|^2 + |alpha|^2)^denom, with (A, B) = (M+1 +- lambda_eff).
std::vector<RadialTerm> translated_terms(const KPair& kp, SeriesKind kind, const DualVec& nu,
                                         const S3Poly& other) {
    int n = kp.big_m() + 1;
    int L = lambda_eff(kp, kind);
    int A = n + L, B = n - L;
    PhiShape sh = phi_shape(kp, kind, n);
    std::map<std::array<int, 4>, Cplx> merged;
    for (int i = 0; i <= A; ++i)
        for (int j = 0; j <= B; ++j) {
            GaussianRational c = nu.values[(A - i) + (B - j)];
            if (c.is_zero()) continue;
            c *= GaussianRational(Rat(binomial(A, i) * binomial(B, j) * minus_one_pow(i)));
            int p = sh.e_id + j, q = sh.e_c + (A - i);
            for (auto& [oe, oc] : other.terms) {
                int ea = i + oe[0], eab = (B - j) + oe[1];
                int eb = (A - i) + oe[2], ebb = j + oe[3];
                if (ea != eab || eb != ebb) continue;  // exact phase integrals
                merged[{ea, eb, p, q}] += (c * oc).to_complex();
            }
        }
    std::vector<RadialTerm> out;
    for (auto& [key, c] : merged) out.push_back({key[0], key[1], key[2], key[3], c});
    return out;
}

}  // namespace

NumericIntegral integral_complex_numeric(const KPair& kp, ComplexCharacter chi, int m_id,
                                         int m_c, const QuadConfig& cfg) {
    int M = kp.big_m();

    ComplexSeriesElem dsm = delta_s_complex(kp, make_mu_m_pair(kp, m_id, m_c));
    ComplexSeriesElem dsn =
        s_prime_complex(delta_s_complex(kp, make_mu_m_pair(kp, -m_id, -m_c)));
    const DualVec& nu1 = dsm.harm.at(M + 1);
    const DualVec& nu2 = dsn.harm.at(M + 1);

    // |t| <= 1: translate the weight-k slot; the matched profiles stay bounded for
    // small radii but develop catastrophic cancellation for large ones.
    S3Poly bpoly = phi_restrict(kp, SeriesKind::weight_two_minus_k, M + 1, nu2);
    auto fam_small = translated_terms(kp, SeriesKind::weight_k, nu1, bpoly);
    int q_small = phi_shape(kp, SeriesKind::weight_k, M + 1).denom;

    // |t| > 1: by the Weyl flip diag(t,1) = w0^{-1} diag(1/t,1) w0 (mod scalars) with
    // w0 = [[0,1],[-1,0]] in SU(2), and invariance of the sphere pairing,
    // <diag(t,1) f, h> = <diag(1/t,1) (w0 f), (w0 h)>: the same stable expansion
    // applies to the flipped vectors at radius 1/t < 1.
    Mat2 w0{GaussianRational(0), GaussianRational(1), GaussianRational(-1), GaussianRational(0)};
    DualVec nu1w = act_matrix_dual(w0, nu1);
    DualVec nu2w = act_matrix_dual(w0, nu2);
    S3Poly bpolyw = phi_restrict(kp, SeriesKind::weight_two_minus_k, M + 1, nu2w);
    auto fam_large = translated_terms(kp, SeriesKind::weight_k, nu1w, bpolyw);
    int q_large = q_small;

    int ncirc = std::max(8, cfg.circle_points);
    int phase_mode = chi.circle_mode + m_id - m_c;

    auto f = [&](double t) -> Cplx {
        // per grade g, the radial value multiplying e^{i g theta_t}
        std::map<int, Cplx> graded;
        if (t <= 1.0) {
            family_grades(fam_small, q_small, std::log(t), m_id + m_c, graded);
        } else {
            // the flipped side runs in 1/t and with reversed phases
            std::map<int, Cplx> flipped;
            family_grades(fam_large, q_large, -std::log(t), -(m_id + m_c), flipped);
            for (auto& [g, v] : flipped) graded[-g] += v;
        }
        std::map<int, Cplx>& by_grade = graded;
        Cplx s = 0.0;
        for (int jt = 0; jt < ncirc; ++jt) {
            double theta = 2.0 * kPi * jt / ncirc;
            Cplx inner = 0.0;
            for (auto& [g, v] : by_grade) inner += v * std::exp(Cplx(0.0, g * theta));
            s += std::exp(Cplx(0.0, phase_mode * theta)) * inner;
        }
        s *= 2.0 * kPi / ncirc;  // the circle factor of d^x t
        return (2.0 / kPi) * s;
    };

    RadialResult rr = radial_quad(f, cfg);
    return {rr.value, rr.est_error, rr.converged};
}

GaussianRational upsilon_pair_complex_pipeline(const KPair& kp) {
    GaussianRational s;
    for (auto& term : upsilon_complex_terms(kp))
        s += term.coeff *
             pair_D_complex(delta_s_complex(kp, term.first), delta_s_complex(kp, term.second));
    return s;
}

PiScaled upsilon_pair_complex_closed(const KPair& kp) {
    int M = kp.big_m();
    Rat v = Rat(2, 3);
    v *= Rat(binomial(2 * M, kp.k_id - 2) * binomial(2 * M, kp.k_id - 2),
             binomial(2 * M + 2, kp.k_id - 1));
    v *= Rat(Int(2 * M + 2) * (2 * M + 2) * (2 * M + 1) * (2 * M + 1));
    return PiScaled::from(v);
}

GaussianRational mu0_pair_complex_pipeline(const KPair& kp) {
    ComplexSeriesElem d = delta_s_complex(kp, make_mu_m_pair(kp, 0, 0));
    return pair_D_complex(d, d);
}

PiScaled mu0_pair_complex_closed(const KPair& kp) {
    int M = kp.big_m();
    Rat v = Rat(Int(4) * minus_one_pow(M) * Int(2 * M + 2) * (2 * M + 2) * (2 * M + 1) *
                (2 * M + 1));
    v /= Rat(Int(2 * M + 3) * binomial(2 * M + 2, kp.k_id - 1) * binomial(2 * M + 2, M + 1));
    v *= Rat(binomial(2 * M, kp.k_id - 2) * binomial(2 * M, kp.k_id - 2));
    return PiScaled::from(v);
}

}  // namespace gk
