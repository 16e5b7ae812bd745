#ifndef SYMSQ_COEFFICIENTS_HPP
#define SYMSQ_COEFFICIENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symsq/numeric.hpp"
#include "symsq/primes.hpp"

namespace symsq {

enum class TableKind { Lambda, LambdaSquare, ASym2, BfPaper, BfMobius, RankinSelberg };
enum class BfVariant { Paper, Mobius };

const char* table_kind_name(TableKind k);
const char* variant_name(BfVariant v);

// tau(1..max_n) from the eta product Delta = q * prod (1-q^n)^24.
// The pentagonal-number expansion of prod(1-q^n) is multiplied in 24 times,
// truncating at degree max_n. Exact integers throughout; a checked 128-bit
// fast path falls back to arbitrary precision if a partial sum would
// overflow (it does not for any max_n this tool reaches).
std::vector<BigInt> build_tau_table(std::uint64_t max_n);

// Normalized Hecke eigenform of even weight k, level 1. Holds lambda(p)
// seeds for all primes p <= max_prime plus the cached table lambda(1..N)
// used to seed it; everything else is assembled on demand by factorization
// and the prime-power recursion. Immutable after construction.
class HeckeEigenform {
  public:
    // k = 12: self-bootstrapping via build_tau_table(max_n).
    static HeckeEigenform delta(std::uint64_t max_n);

    // Other one-dimensional weights: seeds from a "n,value" file. The file
    // must cover lambda(n) for all n up to its last line; primes are taken
    // from it.
    static HeckeEigenform from_seed_file(const std::string& path, int weight);

    int weight() const { return weight_; }
    std::uint64_t max_n() const { return max_n_; }

    // lambda_f(n) via factorization + Hecke recursion at prime powers.
    // Throws SeedError when a needed lambda(p) is unavailable.
    BigInt lambda(std::uint64_t n) const;

    // lambda_f(n^2) without a table of size n^2.
    BigInt lambda_square(std::uint64_t n) const;

    // Dirichlet coefficient of zeta(2s-2k+2) * sum lambda(n^2) n^-s:
    // a_Sym2(n) = sum_{d^2 m = n} d^(2k-2) lambda(m^2).
    BigInt a_sym2(std::uint64_t n) const;

    // B_f(n). Paper: sum_{d^2|n} d^(2k-1) a_Sym2(n/d^2)  (literal convolution).
    // Mobius: sum_{d^2|n} mu(d) d^(2k-1) a_Sym2(n/d^2)   (1/zeta expansion).
    BigInt b_f(std::uint64_t n, BfVariant variant) const;

    // lambda_f(n)^2.
    BigInt rankin_selberg(std::uint64_t n) const;

  private:
    HeckeEigenform(int weight, std::vector<BigInt> cache);
    BigInt lambda_prime_power(std::uint64_t p, unsigned a) const;

    int weight_;
    std::vector<BigInt> coeff_cache_; // [0] unused; [n] = lambda(n), n <= max_n_
    std::uint64_t max_n_;
};

struct CoefficientTable {
    TableKind kind;
    int weight;
    std::vector<BigInt> values; // values[0] unused; 1..max_n
    std::uint64_t max_n() const { return values.empty() ? 0 : values.size() - 1; }
};

CoefficientTable build_table(const HeckeEigenform& f, TableKind kind, std::uint64_t max_n,
                             BfVariant variant = BfVariant::Mobius);

// Seed/cache file format: "n,value" per line, exact decimal integers,
// ascending n, no header.
void write_table(std::ostream& os, const CoefficientTable& t);
std::vector<std::pair<std::uint64_t, BigInt>> read_seed_file(std::istream& is);

} // namespace symsq

#endif
