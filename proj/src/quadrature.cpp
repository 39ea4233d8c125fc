#include "gklocal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gk {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Newton iteration on P_n, nodes seeded by the Chebyshev approximation.
    std::vector<std::pair<double, double>> nw(n);
    int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        nw[i - 1] = {-z, w};
        nw[n - i] = {z, w};
    }
    return cache.emplace(n, std::move(nw)).first->second;
}

Cplx circle_quad(const std::function<Cplx(double)>& f, const QuadConfig& cfg) {
    int n = std::max(4, cfg.circle_points);
    Cplx s = 0.0;
    for (int j = 0; j < n; ++j) s += f(2.0 * kPi * j / n);
    return s / static_cast<double>(n);
}

Cplx s3_quad(const std::function<Cplx(Cplx, Cplx)>& f, const QuadConfig& cfg) {
    int nt = std::max(4, cfg.s3_grid[0]);
    int na = std::max(4, cfg.s3_grid[1]);
    int nb = std::max(4, cfg.s3_grid[2]);
    const auto& gl = gauss_legendre(nt);
    Cplx total = 0.0;
    for (auto [x, w] : gl) {
        double theta = 0.25 * kPi * (x + 1.0);  // [0, pi/2]
        double ct = std::cos(theta), st = std::sin(theta);
        double wt = w * 0.25 * kPi * std::sin(2.0 * theta);
        Cplx inner = 0.0;
        for (int ia = 0; ia < na; ++ia) {
            double a = 2.0 * kPi * ia / na;
            Cplx alpha = ct * Cplx(std::cos(a), std::sin(a));
            for (int ib = 0; ib < nb; ++ib) {
                double b = 2.0 * kPi * ib / nb;
                Cplx beta = st * Cplx(std::cos(b), std::sin(b));
                inner += f(alpha, beta);
            }
        }
        total += wt * inner / static_cast<double>(na * nb);
    }
    // mass of sin(2 theta) d theta over [0, pi/2] is exactly 1
    return total;
}

namespace detail {

Cplx panel_integrate(const std::function<Cplx(double)>& f, const std::vector<double>& bounds) {
    const auto& gl = gauss_legendre(8);
    Cplx s = 0.0;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        double a = bounds[i], b = bounds[i + 1];
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (auto [x, w] : gl) s += w * half * f(mid + half * x);
    }
    return s;
}

}  // namespace detail

RadialResult radial_quad(const std::function<Cplx(double)>& f, const QuadConfig& cfg) {
    RadialResult res;
    auto integrate = [&](double U, int panels) {
        std::vector<double> bounds(panels + 1);
        for (int i = 0; i <= panels; ++i) bounds[i] = -U + 2.0 * U * i / panels;
        return detail::panel_integrate([&](double u) { return f(std::exp(u)); }, bounds);
    };

    // exp(u) overflows well before u = 700; the integrands here are long dead by then
    const double max_halfwidth = 100.0;
    double U = cfg.radial_halfwidth;
    int panels = cfg.radial_panels;
    Cplx prev = integrate(U, panels);
    for (int r = 1; r <= cfg.max_refinements; ++r) {
        U = std::min(2.0 * U, max_halfwidth);
        panels *= 2;
        Cplx cur = integrate(U, panels);
        res.est_error = std::abs(cur - prev);
        res.refinements = r;
        if (res.est_error <= cfg.atol + 0.1 * cfg.rtol * std::abs(cur)) {
            res.value = cur;
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;  // last estimate, reported with the achieved error
    res.converged = false;
    return res;
}

Cplx fd_lie_derivative(const std::function<Cplx(const std::array<Cplx, 4>&)>& eval,
                       const std::array<Cplx, 4>& g0, double h) {
    auto translate = [&](double s) {
        double e = std::exp(s);
        return std::array<Cplx, 4>{g0[0] * e, g0[1], g0[2] * e, g0[3]};
    };
    return (eval(translate(h)) - eval(translate(-h))) / (2.0 * h);
}

CloseReport assert_close(Cplx a, const PiScaled& b, const QuadConfig& cfg) {
    CloseReport r;
    r.got = a;
    r.want = b.to_complex();
    r.abs_err = std::abs(a - r.want);
    r.rel_err = std::abs(r.want) > 0 ? r.abs_err / std::abs(r.want) : r.abs_err;
    r.pass = r.abs_err <= cfg.atol + cfg.rtol * std::abs(r.want);
    return r;
}

}  // namespace gk
