#ifndef SYMSQ_PRIMES_HPP
#define SYMSQ_PRIMES_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace symsq {

// Primes below `limit`, Eratosthenes.
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

struct PrimePower {
    std::uint64_t p;
    unsigned a;
};

// Trial division against a caller-supplied sieve (must reach sqrt(n)).
// n <= ~4e18 supported; grows nothing.
std::vector<PrimePower> factorize(std::uint64_t n, const std::vector<std::uint32_t>& primes);

// Convenience with an internal sieve cached per-process (grown on demand;
// grow calls are not thread-safe, reads after warm-up are).
std::vector<PrimePower> factorize(std::uint64_t n);
void warm_prime_cache(std::uint64_t max_n);

int mobius(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t divisor_count_square(std::uint64_t n); // d(n^2)

} // namespace symsq

#endif
