#pragma once

// The real-place module machinery: weight-k principal series as finite Fourier
// expansions over the circle, the quotient map rho onto V(k-2), its SO(2)-equivariant
// section s, the diagonal-torus Lie derivative delta, the composite delta s landing in
// the discrete series, the circle pairing, and the closed-form local torus integral
// together with its quadrature counterpart.

#include "gklocal/polyrep.hpp"
#include "gklocal/quadrature.hpp"
#include "gklocal/scalar.hpp"

#include <map>

namespace gk {

enum class SeriesKind { weight_k, weight_two_minus_k };

// Locally constant character of R^x, determined by its sign at -1.
struct RealCharacter {
    int sign_at_minus_one = 1;
};

// Finite expansion sum_n c_n f_n, where f_n(u [[y,x],[0,1/y]] kappa(theta)) =
// y^{k or 2-k} e^{2 i n theta}. The parity eps = +-1 selects the extension
// w(f_n) = eps (-1)^{(k-2)/2} f_{-n} to the full orthogonal group.
struct RealSeriesElem {
    int k = 2;
    int eps = 1;
    SeriesKind kind = SeriesKind::weight_k;
    std::map<int, GaussianRational> coef;

    RealSeriesElem() = default;
    RealSeriesElem(int k_, int eps_, SeriesKind kind_) : k(k_), eps(eps_), kind(kind_) {
        if (k_ < 2 || k_ % 2 != 0) throw std::domain_error("RealSeriesElem: weight must be even >= 2");
        if (eps_ != 1 && eps_ != -1) throw std::domain_error("RealSeriesElem: parity must be +-1");
    }

    RealSeriesElem& add(int n, const GaussianRational& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = coef.emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coef.erase(it);
        }
        return *this;
    }
    GaussianRational coeff(int n) const {
        auto it = coef.find(n);
        return it == coef.end() ? GaussianRational() : it->second;
    }
    bool is_zero() const { return coef.empty(); }

    // support contained in |n| >= k/2
    bool is_discrete_member() const {
        for (auto& [n, c] : coef)
            if (2 * std::abs(n) < k) return false;
        return true;
    }

    RealSeriesElem& operator+=(const RealSeriesElem& o) {
        for (auto& [n, c] : o.coef) add(n, c);
        return *this;
    }
    RealSeriesElem scaled(const GaussianRational& c) const {
        RealSeriesElem r(k, eps, kind);
        if (c.is_zero()) return r;
        for (auto& [n, x] : coef) r.coef[n] = x * c;
        return r;
    }

    friend bool operator==(const RealSeriesElem& a, const RealSeriesElem& b) {
        return a.k == b.k && a.eps == b.eps && a.kind == b.kind && a.coef == b.coef;
    }
};

// --- evaluation ---------------------------------------------------------------

// f_n at a real-rational matrix of positive determinant, exactly.
GaussianRational eval_f_n_exact(int k, SeriesKind kind, int n, const Mat2& g);

// f_n at a real 2x2 matrix with positive determinant, in floating point.
Cplx eval_f_n(int k, SeriesKind kind, int n, const std::array<double, 4>& g);

// Whole-series evaluation; negative determinant is handled through the parity
// extension by splitting off diag(1,-1).
Cplx eval_series(const RealSeriesElem& f, const std::array<double, 4>& g);
GaussianRational eval_series_exact(const RealSeriesElem& f, const Mat2& g);

// The reflection action w = diag(1,-1): f_n -> eps (-1)^{(k-2)/2} f_{-n}.
RealSeriesElem w_act(const RealSeriesElem& f);

// --- structure maps -----------------------------------------------------------

// rho(f)(P) = integral over the circle of f(kappa(theta)) P(-sin theta, cos theta),
// with vol(S^1) = 1; returned on the dual-monomial basis of V(k-2).
DualVec rho_real(const RealSeriesElem& f);

// The unique SO(2)-equivariant section of rho: s(mu) = sum mu(P_{n+(k-2)/2}) f_n over
// |n| <= (k-2)/2, where P_j = (Y+iX)^j (Y-iX)^{k-2-j}.
RealSeriesElem section_s(int k, int eps, const DualVec& mu);

// mu(P_j) for the basis above.
GaussianRational mu_on_P_basis(const DualVec& mu, int j);

// delta f_n = 1/2 (k/2+n) f_{n+1} + 1/2 (k/2-n) f_{n-1}, extended linearly.
RealSeriesElem lie_delta_real(const RealSeriesElem& f);

// Derivative of the diag(e^t,1)-action on V(k-2): eigenvalue (k-2)/2 - a on the
// dual-basis index a; in particular mu_m -> -m mu_m.
DualVec lie_delta_dual(const DualVec& mu);

// delta(s(mu)) - s(delta mu); lands in the discrete part (support {+-k/2}), which is
// verified and any leak reported as a logic error.
RealSeriesElem delta_s_real(int k, int eps, const DualVec& mu);

// The two-term closed form (k-1)/2 ((-i)^{(k-2)/2+m} f_{k/2} + i^{(k-2)/2+m} f_{-k/2}).
RealSeriesElem delta_s_real_closed(int k, int eps, int m);

// --- pairings -----------------------------------------------------------------

// <f, h>_B = integral over the circle of f h; Fourier orthogonality <f_n, f_{n'}> =
// [n + n' = 0] with vol(S^1) = 1. Kinds must be opposite.
GaussianRational pair_B_real(const RealSeriesElem& f, const RealSeriesElem& h);

// s' on the minimal K-types: identity coefficients on span{f_{-k/2}, f_{k/2}},
// retagged to the dual series. Support outside the minimal K-types is an error.
RealSeriesElem s_prime_real(const RealSeriesElem& h);

// The inner product on discrete-series members supported on the minimal K-types:
// <f, h> = <f, s'(h)>_B.
GaussianRational pair_D_real(const RealSeriesElem& f, const RealSeriesElem& h);

// rho^v(mu) restricted to the circle: mu((X cos + Y sin)^{k-2}) expanded into modes
// e^{2 i n theta}; an element of the dual series.
RealSeriesElem rho_dual_real(int k, int eps, const DualVec& mu);

// <mu1, mu2>_V = <s(mu1), rho^v(mu2)>_B; coincides with pair_prime.
GaussianRational pair_V_real(int k, int eps, const DualVec& mu1, const DualVec& mu2);

// --- closed forms and integrals -------------------------------------------------

struct FLimitsReal {
    PiScaled closed;     // (-1)^m 2^{k-1} (k-1) binom(k-2,(k-2)/2-m)^{-1}
    PiScaled from_sums;  // the same value assembled from the two partial binomial sums
};
FLimitsReal f_limits_real_routes(int k, int m);

// Returns the closed form after checking the partial-sum identity exactly.
PiScaled f_limits_real(int k, int m);

// I(chi, m): (-1)^m 2^k (k-1) binom(k-2,(k-2)/2-m)^{-1} when chi(-1) = lambda, else 0.
PiScaled integral_real_closed(int k, int lambda_sign, RealCharacter chi, int m);

// Radial-plus-circle quadrature of the torus integral of evaluated right-translates;
// independent of the closed form.
NumericIntegral integral_real_numeric(int k, int eps, RealCharacter chi, int m,
                                      const QuadConfig& cfg);

struct UpsilonPairsReal {
    GaussianRational delta_s_pair;  // <(delta s x delta s) Upsilon>
    GaussianRational plain_pair;    // <Upsilon>'
    GaussianRational ratio;
};

// Both pairings of the canonical invariant tensor, computed by the algebraic pipeline
// (no closed forms are consulted).
UpsilonPairsReal upsilon_pair_real(int k, int eps = 1);

// <delta s(mu_0), delta s(mu_0)> via the pipeline; equals (k-1)^2/2 exactly, which is
// asserted internally.
PiScaled mu0_pair_real(int k);

}  // namespace gk
