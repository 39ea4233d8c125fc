#pragma once

// The complex-place module machinery: principal series over SU(2) as finite harmonic
// expansions phi_n(mu), exact monomial moments on S^3, the quotient map rho and its
// SU(2)-equivariant section through the Clebsch-Gordan elements, the Lie derivative
// and delta s, the sphere pairing, and the local torus integral (closed form and
// quadrature).

#include "gklocal/gk_real.hpp"  // SeriesKind, NumericIntegral
#include "gklocal/polyrep.hpp"
#include "gklocal/quadrature.hpp"
#include "gklocal/scalar.hpp"

#include <array>
#include <map>

namespace gk {

// Weights at the two embeddings of a complex place.
struct KPair {
    int k_id = 2;
    int k_c = 2;

    KPair() = default;
    KPair(int kid, int kc) : k_id(kid), k_c(kc) {
        if (kid < 2 || kc < 2 || kid % 2 != 0 || kc % 2 != 0)
            throw std::domain_error("KPair: weights must be even and >= 2");
    }
    int lambda() const { return (k_id - k_c) / 2; }
    int big_m() const { return (k_id + k_c - 4) / 2; }

    friend bool operator==(const KPair& a, const KPair& b) {
        return a.k_id == b.k_id && a.k_c == b.k_c;
    }
};

// Locally constant character of C^x: chi(r e^{i theta}) = e^{i l theta}.
struct ComplexCharacter {
    int circle_mode = 0;
};

// integral over S^3 of a^{n1} b^{m1} abar^{n2} bbar^{m2} for the Haar measure of
// total mass 1: 1/((n1+m1+1) binom(n1+m1, n1)) when n1=n2 and m1=m2, else 0.
GaussianRational su2_moment(int n1, int n2, int m1, int m2);

// Polynomial in (alpha, conj alpha, beta, conj beta) restricted to S^3; the exact
// integration substrate for every sphere pairing.
struct S3Poly {
    // key: exponents (e_alpha, e_alphabar, e_beta, e_betabar)
    std::map<std::array<int, 4>, GaussianRational> terms;

    S3Poly& add(const std::array<int, 4>& e, const GaussianRational& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
        return *this;
    }
    bool is_zero() const { return terms.empty(); }

    friend S3Poly operator*(const S3Poly& p, const S3Poly& q) {
        S3Poly r;
        for (auto& [e1, c1] : p.terms)
            for (auto& [e2, c2] : q.terms)
                r.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
        return r;
    }
    S3Poly& operator+=(const S3Poly& o) {
        for (auto& [e, c] : o.terms) add(e, c);
        return *this;
    }

    // exact Haar integral over S^3
    GaussianRational integrate() const;

    Cplx eval(Cplx alpha, Cplx beta) const;
};

// Finite harmonic expansion sum_n phi_n(mu_n), mu_n in V(2n), n >= |lambda|.
struct ComplexSeriesElem {
    KPair kp;
    SeriesKind kind = SeriesKind::weight_k;
    std::map<int, DualVec> harm;  // n -> coefficient dual vector in V(2n)

    ComplexSeriesElem() = default;
    ComplexSeriesElem(KPair kp_, SeriesKind kind_) : kp(kp_), kind(kind_) {}

    ComplexSeriesElem& add_harmonic(int n, const DualVec& mu);
    bool is_zero() const { return harm.empty(); }
    // support contained in n >= M+1
    bool is_discrete_member() const {
        for (auto& [n, mu] : harm)
            if (n <= kp.big_m()) return false;
        return true;
    }

    friend bool operator==(const ComplexSeriesElem& a, const ComplexSeriesElem& b) {
        return a.kp == b.kp && a.kind == b.kind && a.harm == b.harm;
    }
};

// lambda of the series: +lambda on the weight-k side, -lambda on the dual side.
int lambda_eff(const KPair& kp, SeriesKind kind);

// Restriction of phi_n(mu) to kappa(alpha, beta), as an exact sphere polynomial.
S3Poly phi_restrict(const KPair& kp, SeriesKind kind, int n, const DualVec& mu);

// phi_n(mu) at a general invertible matrix.
Cplx eval_phi_n(const KPair& kp, SeriesKind kind, int n, const DualVec& mu,
                const std::array<Cplx, 4>& g);
GaussianRational eval_phi_n_exact(const KPair& kp, SeriesKind kind, int n, const DualVec& mu,
                                  const Mat2& g);
Cplx eval_series(const ComplexSeriesElem& f, const std::array<Cplx, 4>& g);

// rho: exact sphere integration against the dual monomial pairs of V(k_id-2) x V(k_c-2).
TensorDual rho_complex(const ComplexSeriesElem& f);

// Clebsch-Gordan map V(k_id-2) (x) V(k_c-2) -> V(2n) for balanced |lambda| <= n <= M.
DualVec clebsch_gordan_tn(const KPair& kp, int n, const TensorDual& mu);

// s(mu) = sum_n (2n+1) binom(2n, n+lambda) phi_n(t_n(mu)); the unique SU(2)-equivariant
// section of rho.
ComplexSeriesElem section_s_complex(const KPair& kp, const TensorDual& mu);

// nu -> nu o (d^2/dx dy): V(2M) -> V(2M+2).
DualVec star_op(const DualVec& nu);

// The three-term recursion for the Lie derivative of the diagonal torus, applied per
// harmonic; input must be on the weight-k side.
ComplexSeriesElem lie_delta_complex(const ComplexSeriesElem& f);

// Derivative of the diag(e^r,1)-action on V(k_id-2) x V(k_c-2).
TensorDual lie_delta_dual_tensor(const TensorDual& mu);

// delta(s(mu)) - s(delta mu); support must land exactly on the harmonic M+1.
ComplexSeriesElem delta_s_complex(const KPair& kp, const TensorDual& mu);

// -2 binom(2M, k_id-2) phi_{M+1}(t_M(mu)^*).
ComplexSeriesElem delta_s_complex_closed(const KPair& kp, const TensorDual& mu);

// <f, h>_B over S^3; kinds must be opposite. Exact through the moments.
GaussianRational pair_B_complex(const ComplexSeriesElem& f, const ComplexSeriesElem& h);

// s' on the top harmonic: identity coefficients on harmonic M+1, retagged.
ComplexSeriesElem s_prime_complex(const ComplexSeriesElem& h);

// <f, h> = <f, s'(h)>_B on discrete members supported on harmonic M+1.
GaussianRational pair_D_complex(const ComplexSeriesElem& f, const ComplexSeriesElem& h);

// rho^v(mu) restricted to kappa(alpha, beta).
S3Poly rho_dual_restrict(const KPair& kp, const TensorDual& mu);

// <mu1, mu2>_V = <s(mu1), rho^v(mu2)>_B.
GaussianRational pair_V_complex(const KPair& kp, const TensorDual& mu1, const TensorDual& mu2);

// mu_{m_id} (x) mu_{m_c}.
TensorDual make_mu_m_pair(const KPair& kp, int m_id, int m_c);

// Expansion of the canonical invariant element of (V(k_id-2) x V(k_c-2))^{(x) 2} as
// sum coeff * (first (x) second) over torus eigenvector pairs.
struct UpsilonTermC {
    TensorDual first, second;
    GaussianRational coeff;
};
std::vector<UpsilonTermC> upsilon_complex_terms(const KPair& kp);

// F(infinity) - F(0): closed form, with the underlying binomial convolution identity
// re-verified exactly for the given data.
PiScaled f_limits_complex(const KPair& kp, int m_id, int m_c);

// I(chi, m): (-1)^{M+m} 8 (2M+1)(2M+2) binom(2M,k_id-2) / (binom(k_id-2, (k_id-2)/2 -
// m_id) binom(k_c-2, (k_c-2)/2 - m_c)) when chi is trivial, else 0.
PiScaled integral_complex_closed(const KPair& kp, ComplexCharacter chi, int m_id, int m_c);

// Triple (radial x circle x sphere) quadrature of the torus integral of evaluated
// right-translates; the sphere's phase directions are integrated by the exact
// trapezoid rule and the two remaining smooth directions by Gauss-Legendre panels.
NumericIntegral integral_complex_numeric(const KPair& kp, ComplexCharacter chi, int m_id,
                                         int m_c, const QuadConfig& cfg);

// Pipeline values of the two canonical pairings (no closed forms consulted) and the
// matching closed forms.
GaussianRational upsilon_pair_complex_pipeline(const KPair& kp);
PiScaled upsilon_pair_complex_closed(const KPair& kp);
GaussianRational mu0_pair_complex_pipeline(const KPair& kp);
PiScaled mu0_pair_complex_closed(const KPair& kp);

}  // namespace gk
