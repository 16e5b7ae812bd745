#ifndef SYMSQ_SPECIAL_HPP
#define SYMSQ_SPECIAL_HPP

#include <cmath>
#include <map>
#include <vector>

#include "symsq/errors.hpp"
#include "symsq/numeric.hpp"

namespace symsq {

// A complex evaluation with an absolute error estimate honored downstream.
template <class P>
struct Eval {
    typename P::cx value;
    double err = 0.0;
};

namespace detail {

// B_{2n} exactly, by the defining recurrence; grown lazily.
const BigRational& bernoulli_2n(unsigned n);

// Stirling coefficients c_m = B_{2m} / (2m (2m-1)) in the mode's precision.
template <class P>
const std::vector<typename P::real>& stirling_coeffs() {
    static const std::vector<typename P::real> v = [] {
        // enough terms for |z| >= radius below at full working precision
        const unsigned terms = P::digits10 <= 17 ? 22 : 80;
        std::vector<typename P::real> c;
        c.reserve(terms);
        for (unsigned m = 1; m <= terms; ++m) {
            BigRational r = bernoulli_2n(m) / (BigRational(2 * m) * (2 * m - 1));
            c.push_back(real_from_bigint<P>(numerator(r)) / real_from_bigint<P>(denominator(r)));
        }
        return c;
    }();
    return v;
}

// Minimum |z| before the asymptotic series is applied. Optimal-truncation
// error of the Stirling series is ~ e^{-2*pi*|z|}; these radii leave margin
// (e^{-2 pi 16} ~ 2e-44 against the extended targets of ~1e-40).
template <class P>
double stirling_radius() {
    return P::digits10 <= 17 ? 8.0 : 16.0;
}

// Borwein zeta coefficients (d_k - d_n)/d_n for a given n, exact integers
// scaled at the end. Cached per rounded n.
template <class P>
const std::vector<typename P::real>& borwein_coeffs(int n) {
    static std::map<int, std::vector<typename P::real>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // d_k = n * sum_{j<=k} (n+j-1)! 4^j / ((n-j)! (2j)!)
    std::vector<BigInt> d(n + 1);
    BigInt term = n; // j = 0: n * (n-1)!/n! = 1 scaled by n
    // build incrementally: t_j = n*(n+j-1)!4^j/((n-j)!(2j)!)
    // t_0 = n; t_j = t_{j-1} * 4 (n+j-1)(n-j+1) / ((2j)(2j-1))
    BigInt acc = term;
    d[0] = acc;
    for (int j = 1; j <= n; ++j) {
        term *= 4 * BigInt(n + j - 1) * (n - j + 1);
        term /= BigInt(2 * j) * (2 * j - 1);
        acc += term;
        d[j] = acc;
    }
    std::vector<typename P::real> out(n);
    for (int k = 0; k < n; ++k)
        out[k] = real_from_bigint<P>(d[k] - d[n]) / real_from_bigint<P>(d[n]);
    return cache.emplace(n, std::move(out)).first->second;
}

template <class P>
bool near_nonpositive_integer(const typename P::cx& s, double tol = 1e-12) {
    using std::fabs;
    double re = to_double(s.real()), im = to_double(s.imag());
    if (re > 0.5 || fabs(im) > tol) return false;
    return fabs(re - std::round(re)) < tol;
}

} // namespace detail

// Principal-branch log Gamma: upward recursion into |z| >= radius with
// Re(z) > 0, then the Stirling series.
template <class P>
Eval<P> log_gamma(const typename P::cx& s) {
    using C = typename P::cx;
    using R = typename P::real;
    using std::log;
    if (detail::near_nonpositive_integer<P>(s))
        throw PoleError("log_gamma: pole at nonpositive integer");

    const double radius = detail::stirling_radius<P>();
    C z = s;
    C shift{};
    // |z| >= radius with Re(z) >= 1/2 keeps arg(z) safely inside (-pi, pi);
    // at height the modulus is already large and no shifts are needed
    while (to_double(z.real()) < 0.5 || to_double(abs(z)) < radius) {
        shift += log(z);
        z += R(1);
    }
    const C iz2 = R(1) / (z * z);
    C series{};
    C zpow = R(1) / z;
    const auto& c = detail::stirling_coeffs<P>();
    double err = 0;
    for (size_t m = 0; m < c.size(); ++m) {
        C term = c[m] * zpow;
        series += term;
        double at = to_double(abs(term));
        if (at < 0.25 * to_double(P::eps())) {
            err = at;
            break;
        }
        err = at;
        zpow *= iz2;
    }
    C val = (z - R(0.5)) * log(z) - z + consts<P>::half_log_two_pi() + series - shift;
    double scale = to_double(abs(val)) + 1.0;
    return {val, err + 4 * to_double(P::eps()) * scale};
}

template <class P>
Eval<P> gamma(const typename P::cx& s) {
    using std::exp;
    Eval<P> lg = log_gamma<P>(s);
    typename P::cx v = exp(lg.value);
    double av = to_double(abs(v));
    return {v, av * (lg.err + 2 * to_double(P::eps()))};
}

// 1/Gamma(s), entire: returns 0 at the nonpositive integers.
template <class P>
Eval<P> reciprocal_gamma(const typename P::cx& s) {
    using std::exp;
    if (detail::near_nonpositive_integer<P>(s)) return {typename P::cx{}, 0.0};
    Eval<P> lg = log_gamma<P>(s);
    typename P::cx v = exp(-lg.value);
    double av = to_double(abs(v));
    return {v, av * (lg.err + 2 * to_double(P::eps()))};
}

// Riemann zeta. Globally convergent alternating (eta) series with
// Chebyshev-polynomial acceleration [Borwein] for Re(s) > -2; reflection
// through the functional equation otherwise.
template <class P>
Eval<P> zeta(const typename P::cx& s);

namespace detail {

template <class P>
Eval<P> zeta_borwein(const typename P::cx& s, bool derivative) {
    using C = typename P::cx;
    using R = typename P::real;
    using std::exp;
    using std::log;
    using std::pow;
    const double sigma = to_double(s.real());
    const double t = std::fabs(to_double(s.imag()));

    // prefactor 1/(1 - 2^{1-s})
    const C two_pow = exp((R(1) - s) * consts<P>::ln2());
    const C denom = R(1) - two_pow;
    const double ad = std::max(to_double(abs(denom)), 1e-30);

    const double digits = P::digits10 + 2;
    double need = digits * 2.302585 + 1.5707963 * t + std::log(3.0 * (1.0 + 2.0 * t)) +
                  std::max(0.0, 0.5 - sigma) * 1.3862944 + std::max(0.0, -std::log(ad)) + 3.0;
    int n = static_cast<int>(need / 1.7627472) + 8;
    n = ((n + 15) / 16) * 16; // quantize for coefficient-cache reuse

    const auto& coef = detail::borwein_coeffs<P>(n);
    KahanSum<R> sre, sim;
    KahanSum<R> dre, dim; // derivative branch
    for (int k = 0; k < n; ++k) {
        R lk = log(R(k + 1));
        C term = coef[k] * exp(-s * lk); // (-1)^k folded: coef alternates via (d_k-d_n) sign? no:
        // (d_k - d_n) is negative for all k; the (-1)^k alternation is explicit:
        if (k & 1) term = -term;
        sre += term.real();
        sim += term.imag();
        if (derivative) {
            C dt = -term * lk;
            dre += dt.real();
            dim += dt.imag();
        }
    }
    C S{sre.value(), sim.value()};
    C val = -S / denom;
    double trunc = 3.0 * (1.0 + 2.0 * t) * std::exp(1.5707963 * t - 1.7627472 * n +
                                                    std::max(0.0, 0.5 - sigma) * 1.3862944) /
                   ad;
    double round = n * to_double(P::eps()) * (3.0 / ad + to_double(abs(val)));
    if (!derivative) return {val, trunc + round};

    // zeta'(s) = P'(s) S(s) + P(s) S'(s) with P = -1/denom and
    // denom' = +ln2 * 2^{1-s}
    C Sp{dre.value(), dim.value()};
    C Pp = (consts<P>::ln2() * two_pow) / (denom * denom);
    C vp = Pp * S + (-R(1) / denom) * Sp;
    double lt = std::log(2.0 + t) + std::log(static_cast<double>(n) + 2.0);
    return {vp, (trunc + round) * (lt + 2.0)};
}

} // namespace detail

template <class P>
Eval<P> zeta(const typename P::cx& s) {
    using C = typename P::cx;
    using R = typename P::real;
    using std::exp;
    using std::log;
    using std::sin;
    if (to_double(abs(s - C(R(1), R(0)))) < 1e-12) throw PoleError("zeta: pole at s = 1");
    if (to_double(s.real()) > -2.0) return detail::zeta_borwein<P>(s, false);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const C one{R(1), R(0)};
    Eval<P> zr = detail::zeta_borwein<P>(one - s, false);
    Eval<P> lg = log_gamma<P>(one - s);
    C chi = exp(s * consts<P>::ln2() + (s - one) * consts<P>::ln_pi() + lg.value) *
            sin(consts<P>::pi() * s / R(2));
    C val = chi * zr.value;
    double ac = to_double(abs(chi));
    return {val, ac * zr.err + to_double(abs(val)) * (lg.err + 8 * to_double(P::eps()))};
}

// zeta'(s) by (a) the term-wise differentiated accelerated series and
// (b) an order-6 central finite-difference stencil on zeta; returns (a),
// with (b) as a consistency cross-check feeding the error estimate.
template <class P>
Eval<P> zeta_prime(const typename P::cx& s, bool cross_check = true) {
    using C = typename P::cx;
    using R = typename P::real;
    if (to_double(abs(s - C(R(1), R(0)))) < 1e-12) throw PoleError("zeta_prime: pole at s = 1");
    Eval<P> a;
    if (to_double(s.real()) > -2.0) {
        a = detail::zeta_borwein<P>(s, true);
    } else {
        // reflect zeta, then difference the reflected expression numerically;
        // no series path applies this far left (outside this artifact's use)
        cross_check = true;
        a = {C{}, 1.0};
    }
    if (!cross_check && to_double(s.real()) > -2.0) return a;

    // order-6 central stencil, h = eps^{1/7}. At desk heights |zeta| = O(1),
    // so no |s| inflation of h: the truncation term h^6 zeta^(7) dominates
    // and zeta^(7) grows like 7!/r^7 by the Cauchy bound.
    static const double w[3] = {3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};
    R h = pow(P::eps(), R(1) / 7);
    C fd{};
    double ferr = 0;
    double fmax = 0;
    for (int j = 1; j <= 3; ++j) {
        Eval<P> zp = zeta<P>(s + C(h * R(j), R(0)));
        Eval<P> zm = zeta<P>(s - C(h * R(j), R(0)));
        fd += R(w[j - 1]) * (zp.value - zm.value);
        ferr += std::fabs(w[j - 1]) * (zp.err + zm.err);
        fmax = std::max({fmax, to_double(abs(zp.value)), to_double(abs(zm.value))});
    }
    fd /= h;
    double hd = to_double(h);
    // |zeta^(7)| <= 7! max|zeta| / r^7 on a pole-free disc of radius r
    double r = std::min(1.0, 0.8 * to_double(abs(s - C(R(1), R(0)))));
    double trunc7 = std::pow(hd, 6) * 36.0 * (3.0 * fmax + 1.0) / std::pow(r, 7);
    double fd_err = ferr / hd + trunc7 + 8 * to_double(P::eps()) * (fmax + 1.0) / hd;
    if (to_double(s.real()) <= -2.0) return {fd, fd_err};

    double diff = to_double(abs(a.value - fd));
    double tol = a.err + fd_err + 1e-9 * (1.0 + to_double(abs(a.value)));
    if (diff > tol)
        throw ConsistencyError("zeta_prime: series and finite-difference methods disagree");
    return {a.value, std::max(a.err, diff)};
}

// (a)_j = a (a+1) ... (a+j-1); empty product = 1.
template <class P>
typename P::cx pochhammer(const typename P::cx& a, unsigned j) {
    using R = typename P::real;
    typename P::cx r{R(1), R(0)};
    for (unsigned i = 0; i < j; ++i) r *= a + R(i);
    return r;
}

// Generalized hypergeometric 3F2 by direct power-series summation with
// ratio-based adaptive truncation. |z| < 1 required (the formulas here only
// ever need z = -(y/8npi)^2). start_index=1 gives 3F2 - 1 without
// cancellation.
template <class P>
Eval<P> hyp3f2(const typename P::cx& a1, const typename P::cx& a2, const typename P::cx& a3,
               const typename P::cx& b1, const typename P::cx& b2, const typename P::cx& z,
               unsigned start_index = 0) {
    using C = typename P::cx;
    using R = typename P::real;
    if (to_double(abs(z)) >= 1.0)
        throw DomainError("hyp3f2: |z| >= 1 (analytic continuation out of scope)");
    if (detail::near_nonpositive_integer<P>(b1) || detail::near_nonpositive_integer<P>(b2))
        throw PoleError("hyp3f2: lower parameter is a nonpositive integer");

    C term{R(1), R(0)};
    for (unsigned j = 0; j < start_index; ++j)
        term *= (a1 + R(j)) * (a2 + R(j)) * (a3 + R(j)) / ((b1 + R(j)) * (b2 + R(j)) * R(j + 1)) * z;
    KahanSum<R> sre, sim;
    sre += term.real();
    sim += term.imag();
    double lead = to_double(abs(term));
    unsigned j = start_index;
    double omitted = 0;
    for (;; ++j) {
        term *= (a1 + R(j)) * (a2 + R(j)) * (a3 + R(j)) / ((b1 + R(j)) * (b2 + R(j)) * R(j + 1)) * z;
        double at = to_double(abs(term));
        if (at < 0.5 * to_double(P::eps()) * lead || j > start_index + 10000) {
            omitted = at;
            break;
        }
        sre += term.real();
        sim += term.imag();
        lead = std::max(lead, at);
    }
    if (j > start_index + 10000) throw ConvergenceError("hyp3f2: series did not converge");
    C val{sre.value(), sim.value()};
    return {val, omitted * 10.0 + to_double(P::eps()) * lead * (j + 2)};
}

} // namespace symsq

#endif
