#pragma once

// Homogeneous polynomials P(k) in two variables, their duals V(k), the canonical
// isomorphism V(k) ~ P(k) given by mu -> mu((Xy-Yx)^k), group actions, torus
// eigenvectors mu_m, the invariant pairings <,>' and <,>_P, and the canonical
// invariant tensor in V(K) (x) V(K).

#include "gklocal/scalar.hpp"

#include <vector>

namespace gk {

// 2x2 matrix over Q(i).
struct Mat2 {
    GaussianRational a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 identity() {
        return {GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(1)};
    }
    static Mat2 diag(GaussianRational x, GaussianRational y) {
        return {std::move(x), GaussianRational(0), GaussianRational(0), std::move(y)};
    }
    // [[c, s], [-s, c]]; a rotation when c^2 + s^2 = 1.
    static Mat2 rotation(const GaussianRational& co, const GaussianRational& si) {
        return {co, si, -si, co};
    }

    GaussianRational det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }

    friend Mat2 operator*(const Mat2& g, const Mat2& h) {
        return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    }
};

// Homogeneous polynomial of the given degree; coeffs[a] multiplies X^a Y^{deg-a}.
struct HomPoly {
    int degree = 0;
    std::vector<GaussianRational> coeffs;

    HomPoly() : coeffs(1) {}
    explicit HomPoly(int deg) : degree(deg), coeffs(deg + 1) {
        if (deg < 0) throw std::domain_error("HomPoly: negative degree");
    }

    static HomPoly monomial(int deg, int a, const GaussianRational& c = GaussianRational(1)) {
        HomPoly p(deg);
        p.coeffs.at(a) = c;
        return p;
    }

    bool is_zero() const {
        for (auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    HomPoly& operator+=(const HomPoly& o) {
        if (degree != o.degree) throw std::invalid_argument("HomPoly: degree mismatch");
        for (int a = 0; a <= degree; ++a) coeffs[a] += o.coeffs[a];
        return *this;
    }
    friend HomPoly operator+(HomPoly p, const HomPoly& q) { return p += q; }
    HomPoly scaled(const GaussianRational& c) const {
        HomPoly r(degree);
        for (int a = 0; a <= degree; ++a) r.coeffs[a] = coeffs[a] * c;
        return r;
    }

    friend bool operator==(const HomPoly& p, const HomPoly& q) {
        return p.degree == q.degree && p.coeffs == q.coeffs;
    }

    std::complex<double> eval(std::complex<double> x, std::complex<double> y) const {
        std::complex<double> s = 0;
        for (int a = 0; a <= degree; ++a)
            s += coeffs[a].to_complex() * std::pow(x, a) * std::pow(y, degree - a);
        return s;
    }
};

// Dual vector in V(deg) = P(deg)^v; values[a] = mu(X^a Y^{deg-a}).
struct DualVec {
    int degree = 0;
    std::vector<GaussianRational> values;

    DualVec() : values(1) {}
    explicit DualVec(int deg) : degree(deg), values(deg + 1) {
        if (deg < 0) throw std::domain_error("DualVec: negative degree");
    }

    static DualVec basis(int deg, int a, const GaussianRational& c = GaussianRational(1)) {
        DualVec v(deg);
        v.values.at(a) = c;
        return v;
    }

    bool is_zero() const {
        for (auto& c : values)
            if (!c.is_zero()) return false;
        return true;
    }

    GaussianRational apply(const HomPoly& p) const {
        if (p.degree != degree) throw std::invalid_argument("DualVec: degree mismatch");
        GaussianRational s;
        for (int a = 0; a <= degree; ++a) s += values[a] * p.coeffs[a];
        return s;
    }

    DualVec& operator+=(const DualVec& o) {
        if (degree != o.degree) throw std::invalid_argument("DualVec: degree mismatch");
        for (int a = 0; a <= degree; ++a) values[a] += o.values[a];
        return *this;
    }
    friend DualVec operator+(DualVec v, const DualVec& w) { return v += w; }
    DualVec scaled(const GaussianRational& c) const {
        DualVec r(degree);
        for (int a = 0; a <= degree; ++a) r.values[a] = values[a] * c;
        return r;
    }

    friend bool operator==(const DualVec& v, const DualVec& w) {
        return v.degree == w.degree && v.values == w.values;
    }
};

// Element of V(deg1) (x) V(deg2) on the dual-monomial-pair basis.
struct TensorDual {
    int deg1 = 0, deg2 = 0;
    std::vector<GaussianRational> values;  // row-major, (deg1+1) x (deg2+1)

    TensorDual() : values(1) {}
    TensorDual(int d1, int d2) : deg1(d1), deg2(d2), values((d1 + 1) * (d2 + 1)) {}

    GaussianRational& at(int a, int b) { return values[a * (deg2 + 1) + b]; }
    const GaussianRational& at(int a, int b) const { return values[a * (deg2 + 1) + b]; }

    static TensorDual tensor(const DualVec& v, const DualVec& w) {
        TensorDual t(v.degree, w.degree);
        for (int a = 0; a <= v.degree; ++a)
            for (int b = 0; b <= w.degree; ++b) t.at(a, b) = v.values[a] * w.values[b];
        return t;
    }

    bool is_zero() const {
        for (auto& c : values)
            if (!c.is_zero()) return false;
        return true;
    }

    TensorDual& operator+=(const TensorDual& o) {
        if (deg1 != o.deg1 || deg2 != o.deg2) throw std::invalid_argument("TensorDual: shape mismatch");
        for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
        return *this;
    }
    friend TensorDual operator+(TensorDual t, const TensorDual& u) { return t += u; }
    TensorDual scaled(const GaussianRational& c) const {
        TensorDual r(deg1, deg2);
        for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * c;
        return r;
    }

    friend bool operator==(const TensorDual& t, const TensorDual& u) {
        return t.deg1 == u.deg1 && t.deg2 == u.deg2 && t.values == u.values;
    }
};

// (g P)(X, Y) = det(g)^{-k/2} P(aX + cY, bX + dY). Requires even degree so the
// determinant power is an integer, hence exact.
inline HomPoly act_matrix(const Mat2& g, const HomPoly& p) {
    if (p.degree % 2 != 0) throw std::domain_error("act_matrix: degree must be even");
    GaussianRational det = g.det();
    if (det.is_zero()) throw std::domain_error("act_matrix: singular matrix");
    int k = p.degree;
    // (aX + cY)^a1 (bX + dY)^{k-a1}, expanded once per basis monomial.
    HomPoly r(k);
    for (int a1 = 0; a1 <= k; ++a1) {
        if (p.coeffs[a1].is_zero()) continue;
        // binomial expansion of the two linear forms
        std::vector<GaussianRational> f1(a1 + 1), f2(k - a1 + 1);
        for (int i = 0; i <= a1; ++i)
            f1[i] = GaussianRational(Rat(binomial(a1, i))) * g.a.pow(i) * g.c.pow(a1 - i);
        for (int j = 0; j <= k - a1; ++j)
            f2[j] = GaussianRational(Rat(binomial(k - a1, j))) * g.b.pow(j) * g.d.pow(k - a1 - j);
        for (int i = 0; i <= a1; ++i)
            for (int j = 0; j <= k - a1; ++j) r.coeffs[i + j] += p.coeffs[a1] * f1[i] * f2[j];
    }
    GaussianRational scale = det.pow(-k / 2);
    for (auto& c : r.coeffs) c *= scale;
    return r;
}

// Dual action (g mu)(P) = mu(g^{-1} P). g^{-1} is replaced by the adjugate, which
// represents the same element modulo scalars and keeps entries in Q(i).
inline DualVec act_matrix_dual(const Mat2& g, const DualVec& mu) {
    Mat2 h = g.adjugate();
    DualVec r(mu.degree);
    for (int a = 0; a <= mu.degree; ++a) {
        HomPoly hp = act_matrix(h, HomPoly::monomial(mu.degree, a));
        r.values[a] = mu.apply(hp);
    }
    return r;
}

// Acts on the two slots by (possibly different) matrices; used for tensor factors
// attached to distinct embeddings.
inline TensorDual act_matrix_tensor(const Mat2& g1, const Mat2& g2, const TensorDual& t) {
    TensorDual r(t.deg1, t.deg2);
    // columns of the two slot actions on the dual basis
    std::vector<DualVec> rows1, rows2;
    for (int a = 0; a <= t.deg1; ++a) rows1.push_back(act_matrix_dual(g1, DualVec::basis(t.deg1, a)));
    for (int b = 0; b <= t.deg2; ++b) rows2.push_back(act_matrix_dual(g2, DualVec::basis(t.deg2, b)));
    for (int a = 0; a <= t.deg1; ++a)
        for (int b = 0; b <= t.deg2; ++b) {
            if (t.at(a, b).is_zero()) continue;
            for (int a2 = 0; a2 <= t.deg1; ++a2)
                for (int b2 = 0; b2 <= t.deg2; ++b2)
                    r.at(a2, b2) += t.at(a, b) * rows1[a].values[a2] * rows2[b].values[b2];
        }
    return r;
}

// mu -> mu((Xy - Yx)^k), a polynomial in (x, y).
inline HomPoly dual_to_poly(const DualVec& mu) {
    int k = mu.degree;
    HomPoly p(k);
    // (Xy - Yx)^k = sum_a binom(k,a) (-1)^{k-a} X^a Y^{k-a} x^{k-a} y^a
    for (int a = 0; a <= k; ++a)
        p.coeffs[k - a] = GaussianRational(Rat(binomial(k, a) * minus_one_pow(k - a))) * mu.values[a];
    return p;
}

inline DualVec poly_to_dual(const HomPoly& p) {
    int k = p.degree;
    DualVec mu(k);
    for (int a = 0; a <= k; ++a)
        mu.values[a] = p.coeffs[k - a] * GaussianRational(Rat(minus_one_pow(k - a), binomial(k, a)));
    return mu;
}

// Torus eigenvector mu_m in V(k-2): diag(t,1) mu_m = t^{-m} mu_m, normalized by
// mu_m((Xy-Yx)^{k-2}) = x^{(k-2)/2-m} y^{(k-2)/2+m}. Supported on the single
// dual-basis index (k-2)/2 + m.
inline DualVec make_mu_m(int k, int m) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("make_mu_m: weight must be even and >= 2");
    int K = k - 2;
    if (2 * std::abs(m) > K) throw std::domain_error("make_mu_m: m out of range");
    int a = K / 2 + m;
    return DualVec::basis(K, a, GaussianRational(Rat(minus_one_pow(K / 2 - m), binomial(K, a))));
}

// <mu1, mu2>' = mu2 mu1 ( |X1 Y1; X2 Y2|^K ).
inline GaussianRational pair_prime(const DualVec& mu1, const DualVec& mu2) {
    if (mu1.degree != mu2.degree) throw std::invalid_argument("pair_prime: degree mismatch");
    int K = mu1.degree;
    GaussianRational s;
    for (int j = 0; j <= K; ++j)
        s += GaussianRational(Rat(binomial(K, j) * minus_one_pow(K - j))) * mu1.values[j] *
             mu2.values[K - j];
    return s;
}

// Double contraction of V(K1) (x) V(K2) pairs, slotwise by <,>'.
inline GaussianRational pair_prime_tensor(const TensorDual& t, const TensorDual& u) {
    if (t.deg1 != u.deg1 || t.deg2 != u.deg2) throw std::invalid_argument("pair_prime_tensor: shape mismatch");
    GaussianRational s;
    for (int a = 0; a <= t.deg1; ++a)
        for (int b = 0; b <= t.deg2; ++b) {
            if (t.at(a, b).is_zero()) continue;
            GaussianRational w1(Rat(binomial(t.deg1, a) * minus_one_pow(t.deg1 - a)));
            GaussianRational w2(Rat(binomial(t.deg2, b) * minus_one_pow(t.deg2 - b)));
            s += w1 * w2 * t.at(a, b) * u.at(t.deg1 - a, t.deg2 - b);
        }
    return s;
}

// <P1, P2>_P = (dual_to_poly^{-1} P1)(P2).
inline GaussianRational pair_P(const HomPoly& p1, const HomPoly& p2) {
    if (p1.degree != p2.degree) throw std::invalid_argument("pair_P: degree mismatch");
    return poly_to_dual(p1).apply(p2);
}

// The canonical invariant element of V(K) (x) V(K), i.e. |x1 y1; x2 y2|^K pulled
// back through dual_to_poly slotwise. Entries: at(K-j, j) = (-1)^j / binom(K, j).
inline TensorDual make_upsilon(int K) {
    if (K < 0 || K % 2 != 0) throw std::domain_error("make_upsilon: degree must be even and >= 0");
    TensorDual t(K, K);
    for (int j = 0; j <= K; ++j)
        t.at(K - j, j) = GaussianRational(Rat(minus_one_pow(j), binomial(K, j)));
    return t;
}

}  // namespace gk
