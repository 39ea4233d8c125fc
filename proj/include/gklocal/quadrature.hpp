#pragma once

// Floating-point verification rules: trapezoid on circles (spectrally exact for
// trigonometric polynomials), a product rule on S^3, Gauss-Legendre panels on the
// multiplicative half-line after t = e^u, central-difference Lie derivatives, and
// tolerance reports. Everything here is independent of the exact closed forms it
// is used to check.

#include "gklocal/scalar.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace gk {

using Cplx = std::complex<double>;

struct QuadConfig {
    int circle_points = 64;
    std::array<int, 3> s3_grid{32, 32, 32};  // (N_theta, N_alpha, N_beta)
    double radial_halfwidth = 12.0;          // U: integrate u = log t over [-U, U]
    int radial_panels = 64;
    double rtol = 1e-8;
    double atol = 1e-12;
    int max_refinements = 6;
};

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int n);

// (1/N) sum f(2 pi j / N): the vol(S^1)=1 trapezoid rule, exact for trigonometric
// polynomials of degree < N.
Cplx circle_quad(const std::function<Cplx(double)>& f, const QuadConfig& cfg);

// Haar-normalized S^3 rule: trapezoid in the two phases, Gauss-Legendre with weight
// sin(2 theta) in the colatitude. f receives (alpha, beta) with |alpha|^2+|beta|^2=1.
Cplx s3_quad(const std::function<Cplx(Cplx, Cplx)>& f, const QuadConfig& cfg);

struct RadialResult {
    Cplx value{};
    double est_error = 0.0;  // |last - previous| of the refinement pair
    bool converged = false;
    int refinements = 0;
};

// integral of f(t) d^x t over (0, infinity) via u = log t, composite Gauss-Legendre
// panels on [-U, U]; each refinement doubles both the panel count and U until two
// successive estimates agree within rtol/10 (relative) or atol.
RadialResult radial_quad(const std::function<Cplx(double)>& f, const QuadConfig& cfg);

// (eval(g0 diag(e^h,1)) - eval(g0 diag(e^{-h},1))) / (2h) for a 2x2 complex matrix g0
// given in row-major order.
Cplx fd_lie_derivative(const std::function<Cplx(const std::array<Cplx, 4>&)>& eval,
                       const std::array<Cplx, 4>& g0, double h);

struct CloseReport {
    bool pass = false;
    double abs_err = 0.0;
    double rel_err = 0.0;
    Cplx got{};
    Cplx want{};
};

// Outcome of a quadrature evaluation of a local integral.
struct NumericIntegral {
    Cplx value{};
    double est_error = 0.0;
    bool converged = false;
};

// |a - to_float(b)| <= atol + rtol * |to_float(b)|. Failures are data, not errors.
CloseReport assert_close(Cplx a, const PiScaled& b, const QuadConfig& cfg);

namespace detail {

// Composite 8-point Gauss-Legendre over explicit panel boundaries.
Cplx panel_integrate(const std::function<Cplx(double)>& f, const std::vector<double>& bounds);

}  // namespace detail

}  // namespace gk
