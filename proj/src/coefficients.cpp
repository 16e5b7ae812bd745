#include "symsq/coefficients.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "symsq/errors.hpp"

namespace symsq {

const char* table_kind_name(TableKind k) {
    switch (k) {
        case TableKind::Lambda: return "lambda";
        case TableKind::LambdaSquare: return "lambda_square";
        case TableKind::ASym2: return "a_sym2";
        case TableKind::BfPaper: return "b_f_paper";
        case TableKind::BfMobius: return "b_f_mobius";
        case TableKind::RankinSelberg: return "rankin_selberg";
    }
    return "?";
}

const char* variant_name(BfVariant v) {
    return v == BfVariant::Paper ? "paper" : "mobius";
}

namespace {

using i128 = __int128_t;

// sparse terms of prod(1-q^n) = sum (-1)^j q^{j(3j+-1)/2}
std::vector<std::pair<std::uint64_t, int>> pentagonal_terms(std::uint64_t deg) {
    std::vector<std::pair<std::uint64_t, int>> t;
    t.emplace_back(0, 1);
    for (std::uint64_t j = 1;; ++j) {
        std::uint64_t m1 = j * (3 * j - 1) / 2;
        std::uint64_t m2 = j * (3 * j + 1) / 2;
        if (m1 > deg) break;
        int sgn = (j % 2) ? -1 : 1;
        t.emplace_back(m1, sgn);
        if (m2 <= deg) t.emplace_back(m2, sgn);
    }
    std::sort(t.begin(), t.end());
    return t;
}

// One in-place pass P <- P * prod(1-q^n), coefficients in T, truncated at deg.
// Returns false if any partial sum would overflow the guard range.
bool eta_pass_i128(std::vector<i128>& P, const std::vector<std::pair<std::uint64_t, int>>& pent) {
    const std::uint64_t deg = P.size() - 1;
    // |acc| is kept below 2^124 so sums of a few more terms cannot wrap
    const i128 guard = i128(1) << 124;
    for (std::uint64_t i = deg;; --i) {
        i128 acc = 0;
        for (const auto& [m, sgn] : pent) {
            if (m > i) break;
            acc += sgn > 0 ? P[i - m] : -P[i - m];
            if (acc > guard || acc < -guard) return false;
        }
        P[i] = acc;
        if (i == 0) break;
    }
    return true;
}

void eta_pass_big(std::vector<BigInt>& P, const std::vector<std::pair<std::uint64_t, int>>& pent) {
    const std::uint64_t deg = P.size() - 1;
    for (std::uint64_t i = deg;; --i) {
        BigInt acc = 0;
        for (const auto& [m, sgn] : pent) {
            if (m > i) break;
            if (sgn > 0)
                acc += P[i - m];
            else
                acc -= P[i - m];
        }
        P[i] = std::move(acc);
        if (i == 0) break;
    }
}

} // namespace

std::vector<BigInt> build_tau_table(std::uint64_t max_n) {
    if (max_n < 1) throw DomainError("build_tau_table: max_n must be >= 1");
    const std::uint64_t deg = max_n - 1; // tau(n) = coeff of q^{n-1} in prod^24
    auto pent = pentagonal_terms(deg);

    std::vector<BigInt> out(max_n + 1);
    std::vector<i128> P(deg + 1, 0);
    P[0] = 1;
    bool ok = true;
    for (int pass = 0; pass < 24 && ok; ++pass) ok = eta_pass_i128(P, pent);
    if (ok) {
        for (std::uint64_t n = 1; n <= max_n; ++n) out[n] = BigInt(P[n - 1]);
        return out;
    }
    // overflow fallback (not reached at desk scale; tables to 1e6 fit easily)
    std::vector<BigInt> Q(deg + 1);
    Q[0] = 1;
    for (int pass = 0; pass < 24; ++pass) eta_pass_big(Q, pent);
    for (std::uint64_t n = 1; n <= max_n; ++n) out[n] = std::move(Q[n - 1]);
    return out;
}

HeckeEigenform::HeckeEigenform(int weight, std::vector<BigInt> cache)
    : weight_(weight), coeff_cache_(std::move(cache)), max_n_(coeff_cache_.size() - 1) {
    if (weight_ <= 0 || weight_ % 2 != 0)
        throw DomainError("HeckeEigenform: weight must be a positive even integer");
    if (max_n_ < 1 || coeff_cache_[1] != 1)
        throw DomainError("HeckeEigenform: lambda(1) must equal 1 (normalized eigenform)");
    warm_prime_cache(max_n_ * max_n_);
}

HeckeEigenform HeckeEigenform::delta(std::uint64_t max_n) {
    return HeckeEigenform(12, build_tau_table(max_n));
}

HeckeEigenform HeckeEigenform::from_seed_file(const std::string& path, int weight) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open seed file: " + path);
    auto pairs = read_seed_file(in);
    if (pairs.empty()) throw Error("seed file is empty: " + path);
    std::vector<BigInt> cache(pairs.back().first + 1);
    std::uint64_t expect = 1;
    for (auto& [n, v] : pairs) {
        if (n != expect)
            throw Error("seed file must cover every n from 1 upward; gap at n=" +
                        std::to_string(expect));
        cache[n] = std::move(v);
        ++expect;
    }
    return HeckeEigenform(weight, std::move(cache));
}

BigInt HeckeEigenform::lambda_prime_power(std::uint64_t p, unsigned a) const {
    if (p > max_n_) throw SeedError("lambda", p);
    const BigInt& lp = coeff_cache_[p];
    if (a == 0) return 1;
    if (a == 1) return lp;
    // lambda(p^{a+1}) = lambda(p) lambda(p^a) - p^{k-1} lambda(p^{a-1})
    BigInt pk = bigint_pow(BigInt(p), static_cast<unsigned>(weight_ - 1));
    BigInt prev = 1, cur = lp;
    for (unsigned i = 2; i <= a; ++i) {
        BigInt next = lp * cur - pk * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt HeckeEigenform::lambda(std::uint64_t n) const {
    if (n == 0) throw DomainError("lambda: n must be positive");
    if (n <= max_n_ && !coeff_cache_[n].is_zero()) return coeff_cache_[n];
    BigInt r = 1;
    for (const auto& pp : factorize(n)) r *= lambda_prime_power(pp.p, pp.a);
    return r;
}

BigInt HeckeEigenform::lambda_square(std::uint64_t n) const {
    if (n == 0) throw DomainError("lambda_square: n must be positive");
    BigInt r = 1;
    for (const auto& pp : factorize(n)) r *= lambda_prime_power(pp.p, 2 * pp.a);
    return r;
}

BigInt HeckeEigenform::a_sym2(std::uint64_t n) const {
    BigInt r = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) == 0)
            r += bigint_pow(BigInt(d), static_cast<unsigned>(2 * weight_ - 2)) *
                 lambda_square(n / (d * d));
    }
    return r;
}

BigInt HeckeEigenform::b_f(std::uint64_t n, BfVariant variant) const {
    BigInt r = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        int mu = variant == BfVariant::Mobius ? mobius(d) : 1;
        if (mu == 0) continue;
        BigInt term = bigint_pow(BigInt(d), static_cast<unsigned>(2 * weight_ - 1)) *
                      a_sym2(n / (d * d));
        if (mu > 0)
            r += term;
        else
            r -= term;
    }
    return r;
}

BigInt HeckeEigenform::rankin_selberg(std::uint64_t n) const {
    BigInt l = lambda(n);
    return l * l;
}

CoefficientTable build_table(const HeckeEigenform& f, TableKind kind, std::uint64_t max_n,
                             BfVariant variant) {
    CoefficientTable t;
    t.kind = kind;
    t.weight = f.weight();
    t.values.resize(max_n + 1);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        switch (kind) {
            case TableKind::Lambda: t.values[n] = f.lambda(n); break;
            case TableKind::LambdaSquare: t.values[n] = f.lambda_square(n); break;
            case TableKind::ASym2: t.values[n] = f.a_sym2(n); break;
            case TableKind::BfPaper: t.values[n] = f.b_f(n, BfVariant::Paper); break;
            case TableKind::BfMobius: t.values[n] = f.b_f(n, BfVariant::Mobius); break;
            case TableKind::RankinSelberg: t.values[n] = f.rankin_selberg(n); break;
        }
    }
    (void)variant;
    return t;
}

void write_table(std::ostream& os, const CoefficientTable& t) {
    for (std::uint64_t n = 1; n <= t.max_n(); ++n) os << n << "," << t.values[n] << "\n";
}

std::vector<std::pair<std::uint64_t, BigInt>> read_seed_file(std::istream& is) {
    std::vector<std::pair<std::uint64_t, BigInt>> out;
    std::string line;
    long lineno = 0;
    std::uint64_t last_n = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected 'n,value'", lineno);
        std::uint64_t n;
        try {
            size_t used;
            n = std::stoull(line.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument("");
        } catch (...) {
            throw ParseError("bad index field", lineno);
        }
        if (n <= last_n) throw ParseError("indices must be ascending", lineno);
        BigInt v;
        try {
            v = BigInt(line.substr(comma + 1));
        } catch (...) {
            throw ParseError("bad integer value", lineno);
        }
        out.emplace_back(n, std::move(v));
        last_n = n;
    }
    return out;
}

} // namespace symsq
