#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symsq/special.hpp"
#include "symsq/zeros.hpp"

using namespace symsq;
using D = DoubleMode;
using X = ExtendedMode;
using CD = D::cx;

namespace {
double rel(const CD& a, const CD& b) {
    return std::abs(a - b) / std::max(std::abs(a), 1e-300);
}
} // namespace

TEST_CASE("log_gamma classical values") {
    CHECK(std::abs(log_gamma<D>(CD(1, 0)).value) < 1e-14);
    CHECK(std::abs(log_gamma<D>(CD(0.5, 0)).value - 0.5 * std::log(M_PI)) < 1e-14);
    CHECK(std::abs(gamma<D>(CD(5, 0)).value - 24.0) < 1e-12);
    CHECK_THROWS_AS(log_gamma<D>(CD(-3, 0)), PoleError);
    CHECK_THROWS_AS(log_gamma<D>(CD(0, 0)), PoleError);
}

TEST_CASE("duplication residual at a sample point and on a random grid") {
    auto dup_residual = [](const CD& s) {
        CD g2 = gamma<D>(2.0 * s).value;
        CD rhs = gamma<D>(s).value * gamma<D>(s + 0.5).value *
                 std::exp(2.0 * s * std::log(2.0)) / (2.0 * std::sqrt(M_PI));
        return std::abs(g2 - rhs) / std::abs(g2);
    };
    CHECK(dup_residual(CD(2.3, 1.7)) < 1e-12);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.1, 20.0), im(-30.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        CD s(re(rng), im(rng));
        CHECK(dup_residual(s) < 1e-12);
    }
}

TEST_CASE("log_gamma conjugate symmetry and extended-mode agreement") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> re(-2.7, 15.0), im(0.1, 60.0);
    for (int i = 0; i < 40; ++i) {
        CD s(re(rng), im(rng));
        auto a = log_gamma<D>(s).value;
        auto b = log_gamma<D>(std::conj(s)).value;
        CHECK(std::abs(a - std::conj(b)) <= 1e-12 * (1 + std::abs(a)));
    }
    for (CD s : {CD(3.25, 7.5), CD(-1.3, 2.2), CD(11.25, 50.66)}) {
        auto d = log_gamma<D>(s).value;
        auto x = log_gamma<X>(X::cx(X::real(s.real()), X::real(s.imag()))).value;
        CD xr(to_double(x.real()), to_double(x.imag()));
        CHECK(rel(d, xr) < 1e-13);
    }
}

TEST_CASE("zeta classical values") {
    CHECK(std::abs(zeta<D>(CD(2, 0)).value - M_PI * M_PI / 6.0) < 1e-12);
    CHECK(std::abs(zeta<D>(CD(0, 0)).value - (-0.5)) < 1e-12);
    CHECK(std::abs(zeta<D>(CD(-1, 0)).value - (-1.0 / 12.0)) < 1e-12);
    CHECK(std::abs(zeta<D>(CD(3, 0)).value - 1.2020569031595942854) < 1e-12);
    CHECK_THROWS_AS(zeta<D>(CD(1, 0)), PoleError);
}

TEST_CASE("zeta vanishes at the first zero located by sign-change scan") {
    // independent oracle: bisect the sign change of Re Lambda(1/2+it)
    double a = 14.0, b = 14.3;
    double fa = completed_zeta_line(a);
    REQUIRE(((fa < 0) != (completed_zeta_line(b) < 0)));
    for (int i = 0; i < 60; ++i) {
        double m = 0.5 * (a + b);
        if ((completed_zeta_line(m) < 0) == (fa < 0)) {
            a = m;
            fa = completed_zeta_line(m);
        } else {
            b = m;
        }
    }
    double t1 = 0.5 * (a + b);
    CHECK(t1 == doctest::Approx(14.134725142).epsilon(1e-9));
    CHECK(std::abs(zeta<D>(CD(0.5, 14.134725142)).value) < 1e-6);
    CHECK(std::abs(zeta<D>(CD(0.5, t1)).value) < 1e-9);
}

TEST_CASE("zeta functional equation residual on the strip grid") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re(-2.95, 3.95), im(-50.0, 50.0);
    int tested = 0;
    while (tested < 120) {
        CD s(re(rng), im(rng));
        if (std::abs(s - CD(1, 0)) < 0.05 || std::abs(s - CD(0, 0)) < 0.05) continue;
        if (std::abs(s.imag()) < 0.05 && s.real() < 0) continue; // trivial-zero line
        auto zs = zeta<D>(s);
        if (std::abs(zs.value) < 1e-3) continue; // keep away from zeros
        CD lhs = std::pow(CD(M_PI, 0), -s / 2.0) * gamma<D>(s / 2.0).value * zs.value;
        CD one_minus = CD(1, 0) - s;
        CD rhs = std::pow(CD(M_PI, 0), -one_minus / 2.0) * gamma<D>(one_minus / 2.0).value *
                 zeta<D>(one_minus).value;
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-10);
        ++tested;
    }
}

TEST_CASE("zeta conjugate symmetry") {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> re(-2.5, 6.0), im(0.2, 60.0);
    for (int i = 0; i < 40; ++i) {
        CD s(re(rng), im(rng));
        auto a = zeta<D>(s).value;
        auto b = zeta<D>(std::conj(s)).value;
        CHECK(std::abs(a - std::conj(b)) <= 1e-11 * (1 + std::abs(a)));
    }
}

TEST_CASE("zeta extended mode reaches well beyond double") {
    using XC = X::cx;
    XC z2 = zeta<X>(XC(X::real(2), X::real(0))).value;
    X::real pi = consts<X>::pi();
    CHECK(to_double(abs(z2 - pi * pi / 6)) < 1e-40);
    // reflection path in extended mode: zeta(-3) = 1/120
    XC zm = zeta<X>(XC(X::real(-3), X::real(0))).value;
    CHECK(to_double(abs(zm - X::real(1) / 120)) < 1e-40);
}

TEST_CASE("zeta_prime classical value and two-method agreement") {
    auto z0 = zeta_prime<D>(CD(0, 0));
    CHECK(std::abs(z0.value - (-0.5 * std::log(2 * M_PI))) < 1e-10);

    auto z2 = zeta_prime<D>(CD(2, 0));
    // independent order-4 stencil oracle
    double h = 1e-3;
    CD fd = (-zeta<D>(CD(2 + 2 * h, 0)).value + 8.0 * zeta<D>(CD(2 + h, 0)).value -
             8.0 * zeta<D>(CD(2 - h, 0)).value + zeta<D>(CD(2 - 2 * h, 0)).value) /
            (12.0 * h);
    CHECK(std::abs(z2.value - fd) < 1e-10);
    CHECK(z2.err < 1e-10);

    auto zr = zeta_prime<D>(CD(0.5, 14.13472514173469));
    CHECK(std::abs(zr.value) > 0.5);
    CHECK(std::abs(zr.value) < 1.5);
    CHECK(zr.err < 1e-8);
    CHECK_THROWS_AS(zeta_prime<D>(CD(1, 0)), PoleError);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer<D>(CD(2.7, 1.1), 0) == CD(1, 0));
    CHECK(std::abs(pochhammer<D>(CD(1, 0), 5) - CD(120, 0)) < 1e-12);
    CHECK(std::abs(pochhammer<D>(CD(6, 0), 2) - CD(42, 0)) < 1e-12);
}

TEST_CASE("hyp3f2 at z=0 and against a 50-term brute sum") {
    CD k2(6, 0), k12(6.5, 0), one(1, 0), q(0.25, 0), t(0.75, 0);
    CHECK(hyp3f2<D>(k2, k12, one, q, t, CD(0, 0)).value == CD(1, 0));

    CD z(-1e-4, 0);
    CD sum(0, 0), term(1, 0);
    for (int j = 0; j < 50; ++j) {
        sum += term;
        term *= (k2 + CD(j, 0)) * (k12 + CD(j, 0)) * (one + CD(j, 0)) /
                ((q + CD(j, 0)) * (t + CD(j, 0)) * CD(j + 1, 0)) * z;
    }
    auto v = hyp3f2<D>(k2, k12, one, q, t, z);
    CHECK(std::abs(v.value - sum) < 1e-14);
}

TEST_CASE("hyp3f2 minus one matches the corollary leading coefficient") {
    double z = 1.0 / (64.0 * M_PI * M_PI); // (y/(8 n pi))^2 at y = n = 1
    auto m1 = hyp3f2<D>(CD(6, 0), CD(6.5, 0), CD(1, 0), CD(0.25, 0), CD(0.75, 0), CD(-z, 0), 1);
    double lead = -(6.0 * 6.5) / (0.25 * 0.75) * z;
    // the next series term is 24 z ~ 3.8e-2 of the leading one
    CHECK(std::abs(m1.value.real() / lead - 1.0) < 0.05);
}

TEST_CASE("hyp3f2 truncation bound covers the theorem parameter family") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> zd(-1e-2, 0.0);
    CD a1(6, 0), a2(6.5, 0), a3(1, 0), b1(0.25, 0), b2(0.75, 0);
    for (int i = 0; i < 50; ++i) {
        CD z(zd(rng), 0);
        auto v = hyp3f2<D>(a1, a2, a3, b1, b2, z);
        CD sum(0, 0), term(1, 0);
        for (int j = 0; j < 12; ++j) {
            sum += term;
            term *= (a1 + CD(j, 0)) * (a2 + CD(j, 0)) * (a3 + CD(j, 0)) /
                    ((b1 + CD(j, 0)) * (b2 + CD(j, 0)) * CD(j + 1, 0)) * z;
        }
        CHECK(std::abs(v.value - sum) <= v.err + std::abs(term) * 12);
    }
}

TEST_CASE("hyp3f2 domain and pole errors") {
    CD a(6, 0);
    CHECK_THROWS_AS(hyp3f2<D>(a, a, a, a, a, CD(1.2, 0)), DomainError);
    CHECK_THROWS_AS(hyp3f2<D>(a, a, a, CD(-2, 0), a, CD(0.5, 0)), PoleError);
}

TEST_CASE("zeta error estimates are honored against extended mode") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> re(-1.5, 8.0), im(-40.0, 40.0);
    for (int i = 0; i < 25; ++i) {
        CD s(re(rng), im(rng));
        if (std::abs(s - CD(1, 0)) < 0.1) continue;
        auto zd = zeta<D>(s);
        auto zx = zeta<X>(X::cx(X::real(s.real()), X::real(s.imag())));
        CD ref(to_double(zx.value.real()), to_double(zx.value.imag()));
        CHECK(std::abs(zd.value - ref) <= zd.err + 1e-13 * std::abs(ref));
    }
}
