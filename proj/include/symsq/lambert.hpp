#ifndef SYMSQ_LAMBERT_HPP
#define SYMSQ_LAMBERT_HPP

#include <map>
#include <optional>

#include "symsq/symsq_l.hpp"
#include "symsq/zeros.hpp"

namespace symsq {

// One y-value of the Theorem comparison.
template <class P>
struct TheoremEvaluation {
    typename P::real y{}, lhs{}, main_term{}, residual{}, rhs{};
    int n_main = 0;
    int t_zeros = 0;
    BfVariant variant = BfVariant::Mobius;
    double abs_err = 0, rel_err = 0;
    bool extended_recommended = false; // y below the double-mode comfort threshold
};

// Corollary data: polynomial coefficients and the oscillation triple.
template <class P>
struct AsymptoticExpansion {
    std::vector<typename P::real> C;     // C_j, j = 1..order-1 (index 0 unused)
    std::vector<typename P::real> A;     // A_j, same indexing
    std::vector<typename P::real> b;     // b_n >= 0, first zero_count zeros
    std::vector<typename P::real> delta; // delta_n in (-pi, pi]
    std::vector<typename P::real> t;     // ordinates
    int order = 0;
    int zero_count = 0;
};

// I_{k,y}(n) by vertical-line quadrature of F_k(w) on Re(w) = d'' in
// (k/2-1, k/2), minus the residue picked up at w = k/2.
template <class P>
typename P::real integral_I_quadrature(int k, int n, const typename P::real& y,
                                       const QuadratureSpec& spec) {
    using C = typename P::cx;
    using R = typename P::real;
    using std::exp;
    using std::log;
    if (spec.abscissa <= k / 2.0 - 1.0 || spec.abscissa >= k / 2.0)
        throw DomainError("integral_I_quadrature: abscissa must lie in (k/2-1, k/2)");
    if (spec.nodes < 64) throw DomainError("integral_I_quadrature: nodes >= 64 required");
    const R ratio = y / (R(8 * n) * consts<P>::pi());
    const R lr = log(ratio);
    // the denominator gammas sit at w - (2k-1)/4 and w - (2k-3)/4; their
    // poles are zeros of the integrand, so they enter as reciprocals
    auto F = [&](const C& w) {
        C lg = log_gamma<P>(w).value + log_gamma<P>(w + R(0.5)).value +
               log_gamma<P>(w + R(1) - R(k) / 2).value + log_gamma<P>(R(k) / 2 - w).value;
        return exp(lg + R(2) * w * lr) *
               reciprocal_gamma<P>(w + (R(1) - R(2 * k)) / 4).value *
               reciprocal_gamma<P>(w + (R(3) - R(2 * k)) / 4).value;
    };
    auto quad = [&](int m) {
        R h = R(2 * spec.half_height) / R(m);
        KahanSum<R> acc;
        for (int j = 0; j <= m; ++j) {
            C w{R(spec.abscissa), -R(spec.half_height) + R(j) * h};
            acc += F(w).real();
        }
        return acc.value() * h / (R(2) * consts<P>::pi());
    };
    R line = quad(spec.nodes);
    R line2 = quad(2 * spec.nodes);
    using std::fabs;
    if (to_double(fabs(line - line2)) > 1e-8 * (1.0 + to_double(fabs(line2))))
        throw ConvergenceError("integral_I_quadrature: node doubling moved the result");
    const R pref = exp(R(2 * k + 0.5) * consts<P>::ln2());
    const R residue = pref * gamma<P>(C(R(k) / 2, R(0))).value.real() *
                      gamma<P>(C((R(k) + 1) / 2, R(0))).value.real() /
                      (gamma<P>(C(R(0.25), R(0))).value.real() *
                       gamma<P>(C(R(0.75), R(0))).value.real()) *
                      exp(R(k) * lr);
    return pref * line2 - residue;
}

// The same quantity through the closed form: the 3F2 bracket from the
// Meijer-G / Slater reduction. Shares only the gamma primitive with the
// quadrature route.
template <class P>
typename P::real integral_I_closed_form(int k, int n, const typename P::real& y) {
    using C = typename P::cx;
    using R = typename P::real;
    using std::exp;
    using std::log;
    const R ratio = y / (R(8 * n) * consts<P>::pi());
    const R z = ratio * ratio;
    auto m1 = hyp3f2<P>(C(R(k) / 2, R(0)), C((R(k) + 1) / 2, R(0)), C(R(1), R(0)),
                        C(R(0.25), R(0)), C(R(0.75), R(0)), C(-z, R(0)), 1);
    const R pref = exp(R(2 * k + 0.5) * consts<P>::ln2()) *
                   gamma<P>(C(R(k) / 2, R(0))).value.real() *
                   gamma<P>(C((R(k) + 1) / 2, R(0))).value.real() /
                   (gamma<P>(C(R(0.25), R(0))).value.real() *
                    gamma<P>(C(R(0.75), R(0))).value.real());
    return pref * exp(R(k) * log(ratio)) * m1.value.real();
}

template <class P>
struct LhsResult {
    typename P::real value{};
    std::uint64_t n_terms = 0;
    double tail_bound = 0;
};

// Assembles and compares both sides of the Theorem for one eigenform and
// one refined, bracketed zero list. L-values at the residual points are
// cached per zero; they are y-independent.
template <class P>
class TheoremVerifier {
    using C = typename P::cx;
    using R = typename P::real;

  public:
    TheoremVerifier(const HeckeEigenform& f, BracketedZeroList<P> zeros,
                    AfeOptions<P> afe_opts = {})
        : f_(&f), l_(f), k_(f.weight()), zeros_(std::move(zeros)), afe_opts_(afe_opts) {}

    const SymSquareL<P>& l_evaluator() const { return l_; }
    const BracketedZeroList<P>& zeros() const { return zeros_; }
    int weight() const { return k_; }

    // sum_{n} lambda(n^2) e^{-ny}, truncated where the provable tail bound
    // sum_{m>n} 2 m^k e^{-my} drops below tol (absolute).
    LhsResult<P> lhs_direct(const R& y, double tol = 1e-30) const {
        using std::exp;
        using std::log;
        if (!(y > 0)) throw DomainError("lhs_direct: y must be positive");
        const R r1 = exp(-y);
        R epow = R(1); // e^{-ny} by running product
        KahanSum<R> acc;
        std::uint64_t n = 0;
        double bound;
        while (true) {
            ++n;
            epow *= r1;
            acc += real_from_bigint<P>(f_->lambda_square(n)) * epow;
            // geometric majorant from n+1 on: ratio e^{-y} (1+1/n)^k, which
            // drops below e^{-y/2} once n > 2k/y or so
            double ratio = to_double(r1) * std::pow(1.0 + 1.0 / n, k_);
            if (ratio < std::exp(-to_double(y) / 2)) {
                double head =
                    2.0 * std::pow(static_cast<double>(n + 1), k_) * to_double(exp(-R(n + 1) * y));
                bound = head / (1.0 - ratio);
                if (bound < tol) break;
            }
            if (n > (1u << 22))
                throw ConvergenceError("lhs_direct: tail bound not reached (y too small?)");
        }
        return {acc.value(), n, bound};
    }

    // (Gamma(k) y^{1-k} / 2 pi^2) sum_{n<=n_main} B_f(n)/n^k [3F2(..) - 1];
    // the bracket is summed from j=1, never as a difference of near-1 values.
    R main_term(const R& y, int n_main, BfVariant variant) const {
        using std::exp;
        using std::log;
        if (!(y > 0)) throw DomainError("main_term: y must be positive");
        if (to_double(y) >= 8 * M_PI)
            throw DomainError("main_term: y >= 8 pi puts |z| >= 1 at n = 1");
        ensure_bf(variant, n_main);
        const auto& bf = variant == BfVariant::Mobius ? bf_mobius_ : bf_paper_;
        const C a1{R(k_) / 2, R(0)}, a2{(R(k_) + 1) / 2, R(0)}, a3{R(1), R(0)};
        const C b1{R(0.25), R(0)}, b2{R(0.75), R(0)};
        KahanSum<R> acc;
        for (int n = 1; n <= n_main; ++n) {
            R ratio = y / (R(8 * n) * consts<P>::pi());
            C z{-ratio * ratio, R(0)};
            auto br = hyp3f2<P>(a1, a2, a3, b1, b2, z, 1);
            acc += bf[n] * exp(-R(k_) * log(R(n))) * br.value.real();
        }
        return gamma_k() * exp(R(1 - k_) * log(y)) / (R(2) * consts<P>::pi() * consts<P>::pi()) *
               acc.value();
    }

    // Contribution of one zero (conjugate pair folded), including the
    // 1/(2 y^{k-1}) prefactor:
    //   (1/ y^{k-1}) Re[ Gamma(s_rho) L(s_rho) y^{-rho/2} / zeta'(rho) ].
    R residual_term(int zero_index, const R& y) const {
        using std::exp;
        using std::log;
        const auto& e = zero_entry(zero_index);
        C yfac = exp(-(C{R(0.25), e.t / 2}) * log(y));
        C term = e.gamma_value * e.l_value * yfac / e.zeta_prime;
        return term.real() * exp(-R(k_ - 1) * log(y));
    }

    // Same zero evaluated twice through the actual function calls, at rho
    // and at conj(rho); the imaginary part of the sum is a correctness
    // check on conjugate folding, not a rounding identity.
    C residual_term_unfolded(int zero_index, const R& y) const {
        using std::conj;
        using std::exp;
        using std::log;
        const auto& e = zero_entry(zero_index);
        C s_up{R(k_) - R(0.75), e.t / 2};
        C s_dn = conj(s_up);
        C rho_dn{R(0.5), -e.t};
        auto l_dn = l_.afe(s_dn, afe_opts_);
        auto g_dn = gamma<P>(s_dn);
        auto zp_dn = zeta_prime<P>(rho_dn);
        C up = e.gamma_value * e.l_value * exp(-(C{R(0.25), e.t / 2}) * log(y)) / e.zeta_prime;
        C dn = g_dn.value * l_dn.value * exp(-(C{R(0.25), -e.t / 2}) * log(y)) / zp_dn.value;
        return (up + dn) * exp(-R(k_ - 1) * log(y)) / R(2);
    }

    // R_T(y): whole bracket groups, ascending least ordinate, until at
    // least t_zeros zeros are consumed.
    R residual_truncated(const R& y, int t_zeros) const {
        KahanSum<R> acc;
        int consumed = 0;
        for (const auto& g : zeros_.groups) {
            if (consumed >= t_zeros) break;
            KahanSum<R> group;
            for (const auto& z : g) group += residual_term(z.index, y);
            acc += group.value();
            consumed += static_cast<int>(g.size());
        }
        return acc.value();
    }

    TheoremEvaluation<P> rhs_theorem(const R& y, int n_main, int t_zeros,
                                     BfVariant variant) const {
        TheoremEvaluation<P> ev;
        ev.y = y;
        ev.n_main = n_main;
        ev.t_zeros = t_zeros;
        ev.variant = variant;
        ev.lhs = lhs_direct(y, lhs_tol()).value;
        ev.main_term = main_term(y, n_main, variant);
        ev.residual = residual_truncated(y, t_zeros);
        ev.rhs = ev.main_term + ev.residual;
        using std::fabs;
        ev.abs_err = to_double(fabs(ev.lhs - ev.rhs));
        ev.rel_err = ev.abs_err / std::max(to_double(fabs(ev.lhs)), 1e-30);
        ev.extended_recommended =
            std::is_same_v<R, double> && to_double(y) < 0.2;
        return ev;
    }

    // Runs both variants; exactly one must verify below `threshold`.
    BfVariant adjudicate(const R& y, int n_main, int t_zeros, double threshold = 1e-6) const {
        auto mob = rhs_theorem(y, n_main, t_zeros, BfVariant::Mobius);
        auto pap = rhs_theorem(y, n_main, t_zeros, BfVariant::Paper);
        bool mob_ok = mob.rel_err < threshold;
        bool pap_ok = pap.rel_err < threshold;
        if (mob_ok == pap_ok)
            throw ConsistencyError(
                "variant adjudication inconclusive: mobius rel_err=" +
                std::to_string(mob.rel_err) + ", paper rel_err=" + std::to_string(pap.rel_err));
        return mob_ok ? BfVariant::Mobius : BfVariant::Paper;
    }

    // C_j and A_j. The B_f Dirichlet series is resummed through
    // L(k+2j)/zeta(4j+1); `plain_series_partial` exposes the raw partial
    // sums for cross-checks.
    AsymptoticExpansion<P> corollary_coefficients(int order, BfVariant variant,
                                                  double tail_tol = 1e-12) const {
        if (order < 2) throw DomainError("corollary_coefficients: order >= 2 required");
        AsymptoticExpansion<P> ex;
        ex.order = order;
        ex.C.resize(order);
        ex.A.resize(order);
        for (int j = 1; j < order; ++j) {
            ex.C[j] = c_coefficient(j);
            ex.A[j] = gamma_k() / (R(2) * consts<P>::pi() * consts<P>::pi()) * ex.C[j] *
                      b_dirichlet_sum(j, variant, tail_tol);
        }
        return ex;
    }

    // sum_{n<=N} B_f(n) / n^{k+2j}
    R plain_series_partial(int j, BfVariant variant, int N) const {
        using std::exp;
        using std::log;
        ensure_bf(variant, N);
        const auto& bf = variant == BfVariant::Mobius ? bf_mobius_ : bf_paper_;
        KahanSum<R> acc;
        for (int n = 1; n <= N; ++n) acc += bf[n] * exp(-R(k_ + 2 * j) * log(R(n)));
        return acc.value();
    }

    // b_n, delta_n and the cosine sum y^{3/4} sum b_n cos(delta_n - t_n/2 ln y).
    R corollary_oscillation(const R& y, int m) const {
        using std::cos;
        using std::exp;
        using std::log;
        KahanSum<R> acc;
        int used = 0;
        for (const auto& g : zeros_.groups) {
            for (const auto& z : g) {
                if (used >= m) break;
                const auto& e = zero_entry(z.index);
                acc += e.b * cos(e.delta - e.t / 2 * log(y));
                ++used;
            }
            if (used >= m) break;
        }
        return exp(R(0.75) * log(y)) * acc.value();
    }

    AsymptoticExpansion<P> asymptotic_expansion(int order, int m, BfVariant variant) const {
        auto ex = corollary_coefficients(order, variant);
        ex.zero_count = m;
        int used = 0;
        for (const auto& g : zeros_.groups) {
            for (const auto& z : g) {
                if (used >= m) break;
                const auto& e = zero_entry(z.index);
                ex.b.push_back(e.b);
                ex.delta.push_back(e.delta);
                ex.t.push_back(e.t);
                ++used;
            }
            if (used >= m) break;
        }
        return ex;
    }

    const LValue<P>& l_at_zero(int zero_index) const { return zero_entry(zero_index).l; }

  private:
    struct ZeroEntry {
        R t;
        C zeta_prime;
        LValue<P> l;
        C l_value;
        C gamma_value;
        R b;
        R delta;
    };

    double lhs_tol() const { return std::is_same_v<R, double> ? 1e-16 : 1e-30; }

    R gamma_k() const {
        BigInt f = 1;
        for (int i = 2; i < k_; ++i) f *= i;
        return real_from_bigint<P>(f);
    }

    R c_coefficient(int j) const {
        using std::exp;
        using std::log;
        C num = pochhammer<P>(C{R(k_) / 2, R(0)}, j) * pochhammer<P>(C{(R(k_) + 1) / 2, R(0)}, j);
        C den = pochhammer<P>(C{R(0.25), R(0)}, j) * pochhammer<P>(C{R(0.75), R(0)}, j);
        R p8 = exp(R(2 * j) * log(R(8) * consts<P>::pi()));
        R v = (num / den).real() / p8;
        return (j % 2) ? -v : v;
    }

    // sum B_f(n) n^{-(k+2j)} = zeta(2s-2k+2) sum lambda(n^2) n^{-s} / zeta(2s-2k+1)
    // at s = k+2j (Mobius variant); the Paper variant multiplies instead.
    R b_dirichlet_sum(int j, BfVariant variant, double tail_tol) const {
        C s{R(k_ + 2 * j), R(0)};
        DirectOptions<P> opt;
        opt.tail_tol = tail_tol;
        auto lv = l_.direct(s, opt);
        auto zq = zeta<P>(C{R(4 * j + 1), R(0)});
        C out = variant == BfVariant::Mobius ? lv.value / zq.value : lv.value * zq.value;
        return out.real();
    }

    void ensure_bf(BfVariant variant, int n) const {
        auto& v = variant == BfVariant::Mobius ? bf_mobius_ : bf_paper_;
        if (static_cast<int>(v.size()) > n) return;
        std::size_t old = v.size() < 2 ? 1 : v.size();
        v.resize(n + 1);
        for (std::size_t i = old; i <= static_cast<std::size_t>(n); ++i)
            v[i] = real_from_bigint<P>(f_->b_f(i, variant));
        v[0] = R(0);
    }

    const ZeroEntry& zero_entry(int zero_index) const {
        auto it = cache_.find(zero_index);
        if (it != cache_.end()) return it->second;
        const ZetaZero<P>* zz = nullptr;
        for (const auto& g : zeros_.groups)
            for (const auto& z : g)
                if (z.index == zero_index) zz = &z;
        if (!zz) throw DomainError("zero index not in the bracketed list");
        if (zz->refinement_residual < 0 || zz->refinement_residual > 1e-9)
            throw DomainError("zero " + std::to_string(zero_index) +
                              " is unrefined; refine before verification");
        ZeroEntry e;
        e.t = zz->t;
        e.zeta_prime = zz->zeta_prime;
        if (to_double(abs(e.zeta_prime)) < 1e-6)
            throw MultipleZeroError("zero " + std::to_string(zero_index) +
                                    ": |zeta'(rho)| < 1e-6");
        C s_rho{R(k_) - R(0.75), e.t / 2};
        e.l = l_.afe(s_rho, afe_opts_);
        e.l_value = e.l.value;
        e.gamma_value = gamma<P>(s_rho).value;
        C w = e.gamma_value * e.l_value / e.zeta_prime;
        using std::arg;
        e.b = abs(w);
        e.delta = arg(w);
        return cache_.emplace(zero_index, std::move(e)).first->second;
    }

    const HeckeEigenform* f_;
    SymSquareL<P> l_;
    int k_;
    BracketedZeroList<P> zeros_;
    AfeOptions<P> afe_opts_;
    mutable std::map<int, ZeroEntry> cache_;
    mutable std::vector<R> bf_mobius_, bf_paper_;
};

} // namespace symsq

#endif
