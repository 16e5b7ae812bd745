#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symsq/lambert.hpp"

using namespace symsq;
using D = DoubleMode;
using X = ExtendedMode;
using CD = D::cx;

static const char* kZerosPath = SYMSQ_DATA_DIR "/zeta_zeros.txt";

namespace {

const HeckeEigenform& delta_form() {
    static HeckeEigenform f = HeckeEigenform::delta(105000);
    return f;
}

const TheoremVerifier<D>& verifier() {
    static TheoremVerifier<D> v = [] {
        auto zeros = refine_zeros<D>(load_zeros_file<D>(kZerosPath), 1e-12);
        return TheoremVerifier<D>(delta_form(), bracket_zeros<D>(zeros, 1.0));
    }();
    return v;
}

const TheoremVerifier<X>& verifier_x() {
    static TheoremVerifier<X> v = [] {
        auto zeros = refine_zeros<X>(load_zeros_file<X>(kZerosPath), 1e-25);
        return TheoremVerifier<X>(delta_form(), bracket_zeros<X>(zeros, X::real(1)));
    }();
    return v;
}

} // namespace

TEST_CASE("lhs_direct: single-term dominance at y=50, stability, domain") {
    const auto& v = verifier();
    auto r = v.lhs_direct(50.0, 1e-30);
    CHECK(std::abs(r.value - std::exp(-50.0)) < 1e-30);
    CHECK(r.tail_bound < 1e-30);

    // independent brute sum at y = 1
    auto r1 = v.lhs_direct(1.0, 1e-16);
    KahanSum<double> brute;
    for (int n = 1; n <= 400; ++n)
        brute += real_from_bigint<D>(delta_form().lambda_square(n)) * std::exp(-n * 1.0);
    CHECK(std::abs(r1.value - brute.value()) < 1e-10 * std::abs(brute.value()));

    CHECK_THROWS_AS(v.lhs_direct(0.0), DomainError);
    CHECK_THROWS_AS(v.lhs_direct(-1.0), DomainError);
}

TEST_CASE("main_term: single-term instantiation and n_main stability") {
    const auto& v = verifier();
    // n = 1 term at y = 1 equals the direct formula
    double z = 1.0 / (64.0 * M_PI * M_PI);
    auto br = hyp3f2<D>(CD(6, 0), CD(6.5, 0), CD(1, 0), CD(0.25, 0), CD(0.75, 0), CD(-z, 0), 1);
    double gamma12 = 39916800.0;
    double single = gamma12 / (2 * M_PI * M_PI) * br.value.real();
    // b_f(1) = 1, so the n_main=1 sum is exactly the n=1 term
    CHECK(v.main_term(1.0, 1, BfVariant::Mobius) == doctest::Approx(single).epsilon(1e-12));

    // doubling n_main moves the sum at the measured cancellation floor,
    // far below the n^{-3} envelope 1.5e-6
    double m500 = v.main_term(1.0, 500, BfVariant::Mobius);
    double m1000 = v.main_term(1.0, 1000, BfVariant::Mobius);
    CHECK(std::abs(m1000 - m500) / std::abs(m500) < 1e-7);
    CHECK_THROWS_AS(v.main_term(0.0, 10, BfVariant::Mobius), DomainError);
    CHECK_THROWS_AS(v.main_term(8 * M_PI + 0.1, 10, BfVariant::Mobius), DomainError);
}

TEST_CASE("main_term leading order matches A_1 y^3 as y -> 0") {
    const auto& v = verifier();
    auto ex = v.corollary_coefficients(2, BfVariant::Mobius);
    double y = 1e-3;
    double mt = v.main_term(y, 500, BfVariant::Mobius);
    double lead = to_double(ex.A[1]) * std::pow(y, 3.0 - 12.0);
    CHECK(std::abs(mt / lead - 1.0) < 0.01);
}

TEST_CASE("residual terms decay like the Stirling envelope") {
    const auto& v = verifier();
    double t1 = std::abs(v.residual_term(1, 1.0));
    double t20 = std::abs(v.residual_term(20, 1.0));
    CHECK(t20 / t1 < 1e-8);

    // empty list gives zero
    TheoremVerifier<D> empty(delta_form(), BracketedZeroList<D>{});
    CHECK(empty.residual_truncated(1.0, 30) == 0.0);
}

TEST_CASE("residual reordering is immaterial at desk heights") {
    const auto& v = verifier();
    KahanSum<double> fwd, rev;
    for (int i = 1; i <= 30; ++i) fwd += v.residual_term(i, 1.0);
    for (int i = 30; i >= 1; --i) rev += v.residual_term(i, 1.0);
    CHECK(std::abs(fwd.value() - rev.value()) <= 1e-12 * std::abs(fwd.value()));
    CHECK(std::abs(fwd.value() - v.residual_truncated(1.0, 30)) <=
          1e-12 * std::abs(fwd.value()));
}

TEST_CASE("conjugate-pair folding: unfolded sum has negligible imaginary part") {
    const auto& v = verifier();
    for (int i : {1, 2, 5}) {
        CD unfolded = v.residual_term_unfolded(i, 1.25);
        CHECK(std::abs(unfolded.imag()) < 1e-10 * std::abs(unfolded));
        CHECK(unfolded.real() == doctest::Approx(v.residual_term(i, 1.25)).epsilon(1e-8));
    }
}

TEST_CASE("theorem end-to-end at y=1 (double mode)") {
    const auto& v = verifier();
    auto ev = v.rhs_theorem(1.0, 500, 30, BfVariant::Mobius);
    CHECK(ev.rel_err < 1e-6);
    CHECK(ev.rhs == ev.main_term + ev.residual);
    CHECK(!ev.extended_recommended);
    CHECK(v.rhs_theorem(0.05, 50, 10, BfVariant::Mobius).extended_recommended);

    auto pap = v.rhs_theorem(1.0, 500, 30, BfVariant::Paper);
    CHECK(pap.rel_err > 1e-3);
    CHECK(v.adjudicate(1.0, 500, 30) == BfVariant::Mobius);
}

TEST_CASE("rel_err decreases in T until the noise floor") {
    const auto& v = verifier();
    double prev = -1;
    std::map<int, double> rel;
    for (int T : {5, 10, 20, 30}) rel[T] = v.rhs_theorem(2.0, 500, T, BfVariant::Mobius).rel_err;
    CHECK(rel[10] < rel[5]);
    CHECK(rel[20] <= rel[10] + 1e-8);
    CHECK(rel[30] <= rel[20] + 1e-8);
    (void)prev;
}

TEST_CASE("contour integral I_{k,y}(n) matches the 3F2 closed form") {
    QuadratureSpec spec{5.5, 30.0, 512};
    for (int n : {1, 2, 5}) {
        for (double y : {0.5, 1.0, 2.0}) {
            double quad = integral_I_quadrature<D>(12, n, y, spec);
            double closed = integral_I_closed_form<D>(12, n, y);
            CHECK(std::abs(quad - closed) <= 1e-8 * std::abs(closed));
        }
    }
}

TEST_CASE("contour integral is invariant under abscissa shifts in (k/2-1, k/2)") {
    double base = integral_I_quadrature<D>(12, 1, 1.0, {5.5, 30.0, 512});
    for (double d : {5.25, 5.75}) {
        double moved = integral_I_quadrature<D>(12, 1, 1.0, {d, 30.0, 512});
        CHECK(std::abs(moved - base) <= 1e-10 * std::abs(base));
    }
    CHECK_THROWS_AS((integral_I_quadrature<D>(12, 1, 1.0, {6.5, 30.0, 512})), DomainError);
}

TEST_CASE("contour integral scales like y^{k+2} in the small-z limit") {
    double a = integral_I_quadrature<D>(12, 5, 1.0, {5.5, 30.0, 512});
    double b = integral_I_quadrature<D>(12, 5, 0.5, {5.5, 30.0, 512});
    double scaling = b / a;
    double expected = std::pow(0.5, 14.0);
    CHECK(std::abs(scaling / expected - 1.0) < 0.01);
}

TEST_CASE("corollary coefficients: C_1 value, sign alternation, series routes") {
    const auto& v = verifier();
    auto ex = v.corollary_coefficients(5, BfVariant::Mobius);
    double c1_ref = -(6.0 * 6.5) / (0.25 * 0.75 * std::pow(8 * M_PI, 2.0));
    CHECK(to_double(ex.C[1]) == doctest::Approx(c1_ref).epsilon(1e-14));
    for (int j = 1; j <= 4; ++j) {
        CHECK((to_double(ex.C[j]) < 0) == (j % 2 == 1));
        CHECK((to_double(ex.A[j]) < 0) == (j % 2 == 1));
    }
    // resummed route vs raw partial sums of B_f(n) n^{-k-2j}
    for (int j : {1, 2}) {
        double resummed = to_double(ex.A[j]) / (39916800.0 / (2 * M_PI * M_PI)) /
                          to_double(ex.C[j]);
        double plain = v.plain_series_partial(j, BfVariant::Mobius, 4000);
        CHECK(std::abs(resummed - plain) < 1e-7 * std::abs(resummed));
    }
}

TEST_CASE("oscillation form equals y^k R_T(y) and has positive b_n") {
    const auto& v = verifier();
    for (double y : {0.7, 1.0, 2.3}) {
        double lhs = std::pow(y, 12.0) * v.residual_truncated(y, 30);
        double osc = v.corollary_oscillation(y, 30);
        CHECK(std::abs(lhs - osc) <= 1e-10 * std::abs(lhs));
    }
    auto ex = v.asymptotic_expansion(3, 10, BfVariant::Mobius);
    REQUIRE(ex.b.size() == 10);
    for (auto& b : ex.b) CHECK(to_double(b) > 1e-10);
    for (auto& d : ex.delta) {
        CHECK(to_double(d) > -M_PI - 1e-12);
        CHECK(to_double(d) <= M_PI + 1e-12);
    }
}

TEST_CASE("oscillation phase is 2-pi periodic in the stated y-rescaling") {
    const auto& v = verifier();
    double t1 = 14.134725141734695;
    double y = 1.0, y2 = y * std::exp(4 * M_PI / t1);
    double a = v.corollary_oscillation(y, 1) / std::pow(y, 0.75);
    double b = v.corollary_oscillation(y2, 1) / std::pow(y2, 0.75);
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
}

TEST_CASE("Richardson limits of the main term reproduce A_1..A_3") {
    const auto& vx = verifier_x();
    using R = X::real;
    auto ex = vx.corollary_coefficients(5, BfVariant::Mobius);

    // A_1: y = 1e-3, 1e-4
    R g1 = vx.main_term(R(1) / 1000, 500, BfVariant::Mobius) * pow(R(1) / 1000, R(9));
    R g2 = vx.main_term(R(1) / 10000, 500, BfVariant::Mobius) * pow(R(1) / 10000, R(9));
    R rich1 = (R(100) * g2 - g1) / R(99);
    CHECK(to_double(abs(rich1 - ex.A[1]) / abs(ex.A[1])) < 1e-3);

    // A_2: y = 0.02, 0.01
    auto g_a2 = [&](double y) {
        R ry(y);
        return (vx.main_term(ry, 2000, BfVariant::Mobius) * pow(ry, R(12)) -
                ex.A[1] * ry * ry * ry) /
               pow(ry, R(5));
    };
    R h1 = g_a2(0.02), h2 = g_a2(0.01);
    R rich2 = (R(4) * h2 - h1) / R(3);
    CHECK(to_double(abs(rich2 - ex.A[2]) / abs(ex.A[2])) < 1e-3);

    // A_3: y = {0.3, 0.21, 0.147}, ratio 0.7, two Richardson stages
    auto g_a3 = [&](double y) {
        R ry(y);
        return (vx.main_term(ry, 16000, BfVariant::Mobius) * pow(ry, R(12)) -
                ex.A[1] * ry * ry * ry - ex.A[2] * pow(ry, R(5))) /
               pow(ry, R(7));
    };
    R q1 = g_a3(0.3), q2 = g_a3(0.21), q3 = g_a3(0.147);
    R r2 = R(49) / 100;                      // 0.7^2
    R s1 = (q2 - r2 * q1) / (R(1) - r2);
    R s2 = (q3 - r2 * q2) / (R(1) - r2);
    R r4 = r2 * r2;
    R rich3 = (s2 - r4 * s1) / (R(1) - r4);
    CHECK(to_double(abs(rich3 - ex.A[3]) / abs(ex.A[3])) < 1e-3);
}

TEST_CASE("small-y remainder slope certifies the order-N expansion (N=2)") {
    const auto& vx = verifier_x();
    using R = X::real;
    auto ex = vx.corollary_coefficients(2, BfVariant::Mobius);
    std::vector<double> ys{1e-2, 5e-3, 2.5e-3};
    std::vector<R> rem;
    for (double y : ys) {
        R ry(y);
        R lhs = vx.lhs_direct(ry, 1e-26).value;
        R osc = vx.corollary_oscillation(ry, 30);
        R r = pow(ry, R(12)) * lhs - osc - ex.A[1] * ry * ry * ry;
        rem.push_back(r);
    }
    for (std::size_t i = 0; i + 1 < rem.size(); ++i) {
        double slope = to_double(log(abs(rem[i]) / abs(rem[i + 1])) /
                                 log(R(ys[i]) / R(ys[i + 1])));
        CHECK(slope >= 4.5);
        CHECK(slope <= 5.5);
    }
}

TEST_CASE("extended-mode end-to-end tightens the identity") {
    const auto& vx = verifier_x();
    auto ev = vx.rhs_theorem(X::real(1), 500, 30, BfVariant::Mobius);
    CHECK(ev.rel_err < 1e-6);
    auto ev2 = vx.rhs_theorem(X::real(2), 500, 30, BfVariant::Mobius);
    CHECK(ev2.rel_err < 1e-6);
}
