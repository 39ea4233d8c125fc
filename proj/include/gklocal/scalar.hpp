#pragma once

// Exact scalar arithmetic: Gaussian rationals and finite sums of Gaussian-rational
// multiples of half-integer powers of pi. These are the value types of every
// closed-form constant in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binomial(n, k) with the convention 0 for k < 0 or k > n. n must be nonnegative.
inline Int binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (long j = 1; j <= k; ++j) {
        num *= (n - k + j);
        den *= j;
    }
    return num / den;  // exact: den always divides num
}

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: n must be nonnegative");
    Int r = 1;
    for (long j = 2; j <= n; ++j) r *= j;
    return r;
}

inline Int minus_one_pow(long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Element of Q(i), kept in canonical form by cpp_rational (reduced, positive
// denominator), so operator== is structural equality.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat r) : re(std::move(r)) {}
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }

    // i^e for any integer e (negative allowed).
    static GaussianRational i_pow(long e) {
        switch (((e % 4) + 4) % 4) {
            case 0: return GaussianRational(1);
            case 1: return i();
            case 2: return GaussianRational(-1);
            default: return GaussianRational(Rat(0), Rat(-1));
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    GaussianRational inverse() const {
        if (is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rat n = norm2();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    GaussianRational pow(long e) const {
        GaussianRational base = *this;
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        GaussianRational r = one();
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {rat_to_double(re), rat_to_double(im)}; }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            os << im << "*i";
        } else {
            os << "(" << re << (im > 0 ? "+" : "") << im << "*i)";
        }
        return os.str();
    }
};

// Finite sum  sum_e c_e * pi^{e/2}  with Gaussian-rational coefficients c_e, keyed by
// the integer 2e (twice_pi_exponent). No zero coefficients are stored; the empty map
// is the canonical zero. Closed under + and *, with * adding exponents.
struct PiScaled {
    std::map<int, GaussianRational> terms;

    PiScaled() = default;

    static PiScaled zero() { return {}; }
    static PiScaled from(const GaussianRational& c) { return with_pi(0, c); }
    static PiScaled from(long n) { return from(GaussianRational(n)); }
    static PiScaled from(const Rat& r) { return from(GaussianRational(r)); }

    // c * pi^{twice_exp/2}
    static PiScaled with_pi(int twice_exp, const GaussianRational& c) {
        PiScaled p;
        if (!c.is_zero()) p.terms[twice_exp] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    GaussianRational coeff(int twice_exp) const {
        auto it = terms.find(twice_exp);
        return it == terms.end() ? GaussianRational() : it->second;
    }

    PiScaled& add_term(int twice_exp, const GaussianRational& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms.emplace(twice_exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
        return *this;
    }

    PiScaled operator-() const {
        PiScaled r;
        for (auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }
    PiScaled& operator+=(const PiScaled& o) {
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    PiScaled& operator-=(const PiScaled& o) {
        for (auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }
    friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
    friend PiScaled operator-(PiScaled a, const PiScaled& b) { return a -= b; }
    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        PiScaled r;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
        return r;
    }
    PiScaled& operator*=(const PiScaled& o) { return *this = *this * o; }

    PiScaled scaled(const GaussianRational& c) const {
        PiScaled r;
        if (c.is_zero()) return r;
        for (auto& [e, k] : terms) r.terms[e] = k * c;
        return r;
    }

    // Multiplicative inverse of a single-term value (all closed forms that get divided
    // by are monomials in pi).
    PiScaled inverse() const {
        if (terms.size() != 1) throw std::domain_error("PiScaled: inverse of a non-monomial");
        auto& [e, c] = *terms.begin();
        return with_pi(-e, c.inverse());
    }

    friend bool operator==(const PiScaled& a, const PiScaled& b) { return a.terms == b.terms; }
    friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

    // Evaluate with pi at double precision, summing in ascending exponent order.
    std::complex<double> to_complex() const {
        static const double kPi = 3.14159265358979323846264338327950288;
        std::complex<double> s{0.0, 0.0};
        for (auto& [e, c] : terms) s += c.to_complex() * std::pow(kPi, 0.5 * e);
        return s;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            if (e != 0) {
                os << "*pi^";
                if (e % 2 == 0) {
                    os << e / 2;
                } else {
                    os << "(" << e << "/2)";
                }
            }
        }
        return os.str();
    }
};

// Gamma at s = twice_s/2 > 0: integer s gives (s-1)!, half-integer s uses
// Gamma(n + 1/2) = (2n)!/(4^n n!) * sqrt(pi).
inline PiScaled gamma_exact(long twice_s) {
    if (twice_s < 1) throw std::domain_error("gamma_exact: argument must be positive");
    if (twice_s % 2 == 0) {
        return PiScaled::from(GaussianRational(Rat(factorial(twice_s / 2 - 1))));
    }
    long n = (twice_s - 1) / 2;
    Rat c(factorial(2 * n), Int(1) << (2 * n));
    c /= Rat(factorial(n));
    return PiScaled::with_pi(1, GaussianRational(c));
}

}  // namespace gk
