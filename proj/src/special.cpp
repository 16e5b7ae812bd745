#include "symsq/special.hpp"

namespace symsq::detail {

// Bernoulli numbers by the defining recurrence over exact rationals:
// sum_{j=0}^{m} binom(m+1, j) B_j = 0, B_0 = 1. Only even indices kept.
const BigRational& bernoulli_2n(unsigned n) {
    static std::vector<BigRational> even{BigRational(1)}; // B_0
    static std::vector<BigRational> all{BigRational(1)};  // B_0, B_1, ...
    while (even.size() <= n) {
        unsigned m = static_cast<unsigned>(all.size());
        BigRational acc(0);
        BigInt binom = 1; // binom(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += BigRational(binom) * all[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        BigRational bm = -acc / BigRational(m + 1);
        all.push_back(bm);
        if (m % 2 == 0) even.push_back(bm);
    }
    return even[n];
}

} // namespace symsq::detail
