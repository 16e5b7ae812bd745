#ifndef SYMSQ_SYMSQ_L_HPP
#define SYMSQ_SYMSQ_L_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symsq/coefficients.hpp"
#include "symsq/special.hpp"

namespace symsq {

enum class LMethod { Direct, Afe };

template <class P>
struct LValue {
    typename P::cx s;
    typename P::cx value;
    LMethod method = LMethod::Direct;
    double err_estimate = 0.0;
};

// Vertical-line trapezoid parameters (uniform nodes).
struct QuadratureSpec {
    double abscissa = 0.0;
    double half_height = 40.0;
    int nodes = 512;
};

template <class P>
struct AfeOptions {
    double digits_target = std::is_same_v<typename P::real, double> ? 12.5 : 24.0;
    double t_floor = 30.0;      // regulator width floor for small |Im s|
    std::uint64_t n_cap = 10000;
};

template <class P>
struct DirectOptions {
    double tail_tol = 1e-12;
    std::uint64_t n_min = 4096;
    std::uint64_t n_cap = 1u << 21;
};

// Evaluator for L(s, Sym^2 f) at level 1, trivial character.
template <class P>
class SymSquareL {
    using C = typename P::cx;
    using R = typename P::real;

  public:
    explicit SymSquareL(const HeckeEigenform& f) : f_(&f), k_(f.weight()) {}

    const HeckeEigenform& form() const { return *f_; }
    int weight() const { return k_; }

    // gamma(s) = pi^{-3s/2} Gamma(s/2) Gamma((s+1)/2) Gamma((s-k+2)/2)
    Eval<P> gamma_factor(const C& s) const {
        Eval<P> l1 = log_gamma<P>(s / R(2));
        Eval<P> l2 = log_gamma<P>((s + R(1)) / R(2));
        Eval<P> l3 = log_gamma<P>((s - R(k_ - 2)) / R(2));
        using std::exp;
        C v = exp(l1.value + l2.value + l3.value - R(3) * s / R(2) * consts<P>::ln_pi());
        double av = to_double(abs(v));
        return {v, av * (l1.err + l2.err + l3.err + 4 * to_double(P::eps()))};
    }

    // L*(s) = gamma(s) * L(s)
    C completed(const C& s, const LValue<P>& inner) const {
        return gamma_factor(s).value * inner.value;
    }

    // Dirichlet-series evaluation zeta(2s-2k+2) * sum lambda(n^2) n^{-s},
    // valid for Re(s) >= k + 1/2. N grows (doubling) until the partial sum
    // is stable to tail_tol twice in a row; the self-convergence delta
    // feeds err_estimate.
    LValue<P> direct(const C& s, DirectOptions<P> opt = {}) const {
        using std::exp;
        using std::log;
        if (to_double(s.real()) < k_ + 0.5)
            throw DomainError("l_sym2_direct: Re(s) < k + 1/2; use the AFE evaluation");
        ensure_lam2(opt.n_min);
        KahanSum<R> sre, sim;
        std::uint64_t n = 0, stage_end = opt.n_min;
        C prev_sum{};
        double delta = 0;
        int stable = 0;
        while (true) {
            ensure_lam2(stage_end);
            for (++n; n <= stage_end; ++n) {
                C t = lam2_[n] * exp(-s * log(R(n)));
                sre += t.real();
                sim += t.imag();
            }
            n = stage_end;
            C sum{sre.value(), sim.value()};
            delta = to_double(abs(sum - prev_sum));
            prev_sum = sum;
            double scale = std::max(to_double(abs(sum)), 1e-30);
            if (delta < opt.tail_tol * scale) {
                if (++stable >= 2) break;
            } else {
                stable = 0;
            }
            if (stage_end >= opt.n_cap)
                throw ConvergenceError("l_sym2_direct: series not stable to tail_tol by n_cap");
            stage_end *= 2;
        }
        Eval<P> zf = zeta<P>(R(2) * s - R(2 * k_ - 2));
        C val = zf.value * prev_sum;
        LValue<P> out;
        out.s = s;
        out.value = val;
        out.method = LMethod::Direct;
        out.err_estimate = 4 * delta * to_double(abs(zf.value)) +
                           zf.err * to_double(abs(prev_sum)) +
                           to_double(P::eps()) * to_double(abs(val)) * 8;
        return out;
    }

    // Gaussian-regulated smoothed approximate functional equation at X = 1:
    //   L*(s) = sum_n a(n) n^{-s} V_s(n) + sum_n a(n) n^{-(2k-1-s)} V_{2k-1-s}(n)
    //   V_u(n) = (1/2pi i) int_(c) gamma(u+z) e^{beta z^2} n^{-z} dz/z
    // The even regulator keeps the identity exact and supplies both the
    // damping of the Im(u+z)=0 ridge and super-polynomial decay in n.
    LValue<P> afe(const C& s, AfeOptions<P> opt = {}) const {
        if (to_double(s.real()) <= k_ - 2 || to_double(s.real()) >= k_ + 3)
            throw DomainError("l_sym2_afe: Re(s) outside (k-2, k+3)");
        double err = 0;
        C lstar = lstar_once(s, opt, &err);
        Eval<P> gf = gamma_factor(s);
        double ag = to_double(abs(gf.value));
        LValue<P> out;
        out.s = s;
        out.value = lstar / gf.value;
        out.method = LMethod::Afe;
        double trunc = std::pow(10.0, -opt.digits_target) * to_double(abs(lstar));
        out.err_estimate = (err + trunc) / ag +
                           to_double(abs(out.value)) * (gf.err / ag + 4 * to_double(P::eps()));
        return out;
    }

    // L*(s), the two-sided AFE sum itself.
    C lstar_afe(const C& s, AfeOptions<P> opt = {}) const { return lstar_once(s, opt, nullptr); }

    // K(x) = (1/2pi i) int_(c) gamma(z) x^{-z} dz, trapezoid on the spec's
    // line. Doubling the node count must reproduce the value; otherwise a
    // quadrature error is thrown.
    R smoothing_kernel(const R& x, const QuadratureSpec& spec, double tol = 1e-9) const {
        if (!(x > 0)) throw DomainError("smoothing_kernel: x must be positive");
        if (spec.abscissa <= k_ - 2)
            throw DomainError("smoothing_kernel: abscissa must lie right of the gamma poles");
        if (spec.nodes < 64) throw DomainError("smoothing_kernel: nodes >= 64 required");
        R k1 = kernel_quad(x, spec.abscissa, spec.half_height, spec.nodes);
        R k2 = kernel_quad(x, spec.abscissa, spec.half_height, 2 * spec.nodes);
        using std::fabs;
        if (to_double(fabs(k1 - k2)) > tol * (1.0 + to_double(fabs(k2))))
            throw ConvergenceError("smoothing_kernel: node doubling moved the result");
        return k2;
    }

    void ensure_asym2(std::uint64_t n) const {
        if (a_.size() <= n) {
            std::size_t old = a_.size() < 2 ? 1 : a_.size();
            a_.resize(n + 1);
            for (std::size_t i = old; i <= n; ++i) a_[i] = real_from_bigint<P>(f_->a_sym2(i));
            if (old == 1) a_[0] = R(0);
        }
    }

  private:
    void ensure_lam2(std::uint64_t n) const {
        if (lam2_.size() <= n) {
            std::size_t old = lam2_.size() < 2 ? 1 : lam2_.size();
            lam2_.resize(n + 1);
            for (std::size_t i = old; i <= n; ++i)
                lam2_[i] = real_from_bigint<P>(f_->lambda_square(i));
            if (old == 1) lam2_[0] = R(0);
        }
    }

    R kernel_quad(const R& x, double c, double half_height, int nodes) const {
        using std::exp;
        using std::log;
        R h = R(2 * half_height) / R(nodes);
        R lx = log(x);
        KahanSum<R> acc;
        for (int j = 0; j <= nodes; ++j) {
            C z{R(c), -R(half_height) + R(j) * h};
            C g = gamma_factor(z).value;
            C t = g * exp(-z * lx);
            acc += t.real();
        }
        return acc.value() * h / (R(2) * consts<P>::pi());
    }

    C lstar_once(const C& s, const AfeOptions<P>& opt, double* err_out) const {
        const double B = opt.digits_target * 2.302585 + 8.0;
        const double tim = std::fabs(to_double(s.imag()));
        const double beta_d = (2.3561945 * tim + B) / (std::max(tim, opt.t_floor) *
                                                       std::max(tim, opt.t_floor));
        C total{};
        if (err_out) *err_out = 0;
        for (int side = 0; side < 2; ++side) {
            C u = side == 0 ? s : R(2 * k_ - 1) - s;
            total += side_sum(u, beta_d, B, opt, err_out);
        }
        return total;
    }

    // One side of the AFE. The step-h trapezoid carries an embedded step-2h
    // estimate; their difference (a conservative bound on the step-h
    // aliasing error) accumulates into *err_out.
    C side_sum(const C& u, double beta_d, double B, const AfeOptions<P>& opt,
               double* err_out) const {
        using std::exp;
        using std::log;
        const R beta = R(beta_d);
        const double c_d = std::max(1.0, k_ + 1.5 - to_double(u.real()));
        const R c = R(c_d);
        const double H = std::sqrt((B + beta_d * c_d * c_d) / beta_d) + 4.0;
        const double h_d = 2 * M_PI * std::min(c_d, 2.0) / (B + 10.0);
        int m = static_cast<int>(2 * H / h_d) + 1;
        if (m % 2) ++m; // keep the even-node subgrid a valid trapezoid
        const R h = R(2 * H) / R(m);

        // node weights gamma(u+z) e^{beta z^2} / z * h/(2pi)
        std::vector<C> w(m + 1);
        double wmax = 0;
        for (int j = 0; j <= m; ++j) {
            C z{c, -R(H) + R(j) * h};
            w[j] = exp(log_gamma<P>((u + z) / R(2)).value +
                       log_gamma<P>((u + z + R(1)) / R(2)).value +
                       log_gamma<P>((u + z - R(k_ - 2)) / R(2)).value -
                       R(3) * (u + z) / R(2) * consts<P>::ln_pi() + beta * z * z) /
                   z * h / (R(2) * consts<P>::pi());
            wmax = std::max(wmax, to_double(abs(w[j])));
        }
        // Gaussian-tail nodes below relevance; trim symmetrically in pairs
        // so the even-node subgrid keeps its meaning
        int lo = 0, hi = m;
        const double wcut = wmax * std::exp(-B - 6.0);
        while (lo + 16 < hi && to_double(abs(w[lo])) < wcut && to_double(abs(w[lo + 1])) < wcut &&
               to_double(abs(w[hi])) < wcut && to_double(abs(w[hi - 1])) < wcut) {
            lo += 2;
            hi -= 2;
        }

        KahanSum<R> sre, sim;
        double coarse_abs = 0;
        double lead = 0;
        int quiet = 0;
        // the kernel sum cannot resolve terms below its own rounding floor;
        // a stagnation window catches that floor when it sits above tol
        const double tol = std::max(std::exp(-B - 3.0), 32.0 * to_double(P::eps()));
        double block_max = 0, prev_block_max = -1;
        for (std::uint64_t n = 1;; ++n) {
            ensure_asym2(n);
            R ln_n = log(R(n));
            // V_u(n): rotate e^{-i v ln n} across the uniform grid. Plain
            // accumulation: at 50 digits the rounding floor is irrelevant,
            // and double mode tracks its own floor via the stagnation window.
            C rot = exp(C{R(0), -h * ln_n});
            C ph = exp(C{R(0), (R(H) - R(lo) * h) * ln_n}); // e^{-i v_lo ln n}
            const bool estimate = err_out && n <= 16;
            C V{}, Veven{};
            for (int j = lo; j <= hi; ++j) {
                C t = w[j] * ph;
                V += t;
                if (estimate && (j & 1) == 0) Veven += t;
                ph *= rot;
            }
            R damp = exp(-c * ln_n);
            C nu = a_[n] * exp(-u * ln_n) * damp;
            C term = nu * V;
            sre += term.real();
            sim += term.imag();
            if (estimate) coarse_abs += to_double(abs(nu * (V - R(2) * Veven)));
            double at = to_double(abs(term));
            lead = std::max(lead, at);
            if (n >= 8 && at < tol * lead) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
            block_max = std::max(block_max, at);
            if (n % 16 == 0) {
                if (prev_block_max >= 0 && block_max > 0.5 * prev_block_max &&
                    block_max < 1e-8 * lead)
                    break; // rounding floor reached; terms no longer decay
                prev_block_max = block_max;
                block_max = 0;
            }
            if (n >= opt.n_cap)
                throw ConvergenceError(
                    "l_sym2_afe: slow decay, Dirichlet truncation not reached by n_cap");
        }
        // the 2h-grid error dominates the h-grid error by ~ its square root;
        // a tempered fraction of the observed difference plus the n-tail
        // (terms past n=16 add nothing at this scale)
        C out{sre.value(), sim.value()};
        if (err_out) *err_out += 0.25 * coarse_abs + 3 * tol * lead;
        return out;
    }

    const HeckeEigenform* f_;
    int k_;
    mutable std::vector<R> a_;    // a_Sym2(n) at working precision
    mutable std::vector<R> lam2_; // lambda(n^2) at working precision
};

} // namespace symsq

#endif
