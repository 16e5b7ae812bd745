#ifndef SYMSQ_ZEROS_HPP
#define SYMSQ_ZEROS_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symsq/special.hpp"

namespace symsq {

// A non-trivial zero rho = 1/2 + i t on the critical line.
template <class P>
struct ZetaZero {
    int index = 0;                 // 1-based position in the loaded list
    typename P::real t{};          // ordinate
    typename P::cx zeta_prime{};   // zeta'(1/2 + i t)
    double refinement_residual = -1.0; // |zeta(1/2+it)| after refinement; <0 = unrefined
};

template <class P>
struct BracketedZeroList {
    std::vector<std::vector<ZetaZero<P>>> groups; // ordered by least ordinate
    typename P::real bracket_constant{};
    std::size_t zero_count() const {
        std::size_t n = 0;
        for (auto& g : groups) n += g.size();
        return n;
    }
};

// Zeros file: one decimal ordinate per line, strictly ascending.
template <class P>
std::vector<ZetaZero<P>> load_zeros(std::istream& in) {
    std::vector<ZetaZero<P>> out;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(b, e - b + 1);
        typename P::real t;
        try {
            t = real_from_string<P>(tok);
        } catch (...) {
            throw ParseError("zeros file: malformed ordinate '" + tok + "'", lineno);
        }
        if (!(t > 0)) throw ParseError("zeros file: ordinate must be positive", lineno);
        if (!out.empty() && !(t > out.back().t))
            throw ParseError("zeros file: ordinates must be strictly ascending", lineno);
        ZetaZero<P> z;
        z.index = static_cast<int>(out.size()) + 1;
        z.t = t;
        out.push_back(std::move(z));
    }
    return out;
}

template <class P>
std::vector<ZetaZero<P>> load_zeros_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open zeros file: " + path);
    return load_zeros<P>(in);
}

// Newton refinement of an ordinate, restricted to the critical line:
// t <- t - Re[ zeta(1/2+it) / (i zeta'(1/2+it)) ]. Requires t0 within
// ~1e-3 of a true zero. Attaches zeta'(rho) (two-method checked).
template <class P>
ZetaZero<P> refine_zero(const typename P::real& t0, double residual_target = 1e-10,
                        double drift_tol = 0.01) {
    using C = typename P::cx;
    using R = typename P::real;
    R t = t0;
    const R half = R(1) / 2;
    double residual = 0;
    bool converged = false;
    Eval<P> zp{};
    for (int iter = 0; iter < 50; ++iter) {
        C s{half, t};
        Eval<P> zv = zeta<P>(s);
        residual = to_double(abs(zv.value));
        zp = zeta_prime<P>(s);
        if (to_double(abs(zp.value)) < 1e-6)
            throw MultipleZeroError(
                "refine_zero: |zeta'| < 1e-6 near t=" + std::to_string(to_double(t)) +
                "; possible multiple zero (simplicity hypothesis violated)");
        if (residual < residual_target && iter > 0) {
            converged = true;
            break;
        }
        C delta = zv.value / (C{R(0), R(1)} * zp.value);
        t -= delta.real();
        if (to_double(abs(C(t, R(0)) - C(t0, R(0)))) > 0.5)
            throw ConvergenceError("refine_zero: iterate left the seed neighborhood");
    }
    if (!converged)
        throw ConvergenceError("refine_zero: no convergence in 50 iterations from t0=" +
                               std::to_string(to_double(t0)));
    if (to_double(abs(C(t - t0, R(0)))) > drift_tol)
        throw ConvergenceError("refine_zero: drifted from seed t0=" +
                               std::to_string(to_double(t0)) + " to t=" +
                               std::to_string(to_double(t)));
    ZetaZero<P> z;
    z.t = t;
    z.zeta_prime = zp.value;
    z.refinement_residual = residual;
    return z;
}

template <class P>
std::vector<ZetaZero<P>> refine_zeros(std::vector<ZetaZero<P>> zeros,
                                      double residual_target = 1e-10) {
    for (auto& z : zeros) {
        int idx = z.index;
        z = refine_zero<P>(z.t, residual_target);
        z.index = idx;
    }
    return zeros;
}

// Greedy bracketing per the gap inequality
// |t_i - t_j| < exp(-C t_i/log t_i) + exp(-C t_j/log t_j);
// consecutive zeros chain into one group while the inequality holds.
template <class P>
BracketedZeroList<P> bracket_zeros(const std::vector<ZetaZero<P>>& zeros,
                                   const typename P::real& C_const) {
    using std::exp;
    using std::log;
    if (!(C_const > 0)) throw DomainError("bracket_zeros: C must be positive");
    BracketedZeroList<P> out;
    out.bracket_constant = C_const;
    for (const auto& z : zeros) {
        bool chain = false;
        if (!out.groups.empty()) {
            const auto& prev = out.groups.back().back();
            auto width = [&](const typename P::real& t) {
                return exp(-C_const * t / log(t));
            };
            chain = (z.t - prev.t) < width(prev.t) + width(z.t);
        }
        if (chain)
            out.groups.back().push_back(z);
        else
            out.groups.push_back({z});
    }
    return out;
}

// Coarse bootstrap scanner: sign changes of the real-valued completed zeta
// Lambda(1/2+it) = pi^{-s/2} Gamma(s/2) zeta(s) on a step grid, bisected to
// ~1e-6. Double precision; exists to validate and regenerate zero seeds.
std::vector<double> scan_zero_seeds(double t_max, double step = 0.1);

// Re Lambda(1/2+it); the scanner's sign function.
double completed_zeta_line(double t);

} // namespace symsq

#endif
