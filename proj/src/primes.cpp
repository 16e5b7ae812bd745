#include "symsq/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace symsq {

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

namespace {
std::vector<std::uint32_t>& prime_cache() {
    static std::vector<std::uint32_t> cache = sieve_primes(1u << 16);
    return cache;
}
std::uint32_t cache_limit = 1u << 16;
} // namespace

void warm_prime_cache(std::uint64_t max_n) {
    std::uint64_t need = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(max_n))) + 2;
    if (need > cache_limit) {
        std::uint32_t lim = static_cast<std::uint32_t>(need);
        prime_cache() = sieve_primes(lim);
        cache_limit = lim;
    }
}

std::vector<PrimePower> factorize(std::uint64_t n, const std::vector<std::uint32_t>& primes) {
    std::vector<PrimePower> out;
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    for (std::uint32_t p : primes) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) {
            unsigned a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            out.push_back({p, a});
        }
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    warm_prime_cache(n);
    return factorize(n, prime_cache());
}

int mobius(std::uint64_t n) {
    auto f = factorize(n);
    int r = 1;
    for (const auto& pp : f) {
        if (pp.a > 1) return 0;
        r = -r;
    }
    return r;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& pp : factorize(n)) r *= pp.a + 1;
    return r;
}

std::uint64_t divisor_count_square(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& pp : factorize(n)) r *= 2 * pp.a + 1;
    return r;
}

} // namespace symsq
