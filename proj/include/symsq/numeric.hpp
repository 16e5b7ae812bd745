#ifndef SYMSQ_NUMERIC_HPP
#define SYMSQ_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace symsq {

namespace mp = boost::multiprecision;

using BigInt = mp::cpp_int;
using BigRational = mp::cpp_rational;

// Working-precision modes. Every analytic routine is templated on one of
// these; coefficient arithmetic stays exact and only converts at the
// analysis boundary.
struct DoubleMode {
    using real = double;
    using cx = std::complex<double>;
    static constexpr int digits10 = 15;
    static double eps() { return std::numeric_limits<double>::epsilon(); }
    static constexpr const char* name = "double";
};

struct ExtendedMode {
    using real = mp::cpp_bin_float_50;
    using cx = mp::cpp_complex_50;
    static constexpr int digits10 = 48;
    static real eps() { return std::numeric_limits<real>::epsilon(); }
    static constexpr const char* name = "extended";
};

enum class Precision { Double, Extended };

inline const char* precision_name(Precision p) {
    return p == Precision::Double ? DoubleMode::name : ExtendedMode::name;
}

template <class P>
typename P::real real_from_string(const std::string& s) {
    if constexpr (std::is_same_v<typename P::real, double>) {
        return std::stod(s);
    } else {
        return typename P::real(s);
    }
}

template <class P>
typename P::real real_from_bigint(const BigInt& v) {
    if constexpr (std::is_same_v<typename P::real, double>) {
        return v.template convert_to<double>();
    } else {
        return typename P::real(v);
    }
}

template <class T>
double to_double(const T& x) {
    return static_cast<double>(x);
}

template <class P>
struct consts {
    using R = typename P::real;
    static const R& pi() {
        static const R v = atan(R(1)) * 4;
        return v;
    }
    static const R& ln2() {
        static const R v = log(R(2));
        return v;
    }
    static const R& ln_pi() {
        static const R v = log(pi());
        return v;
    }
    // log(2*pi)/2, the Stirling constant
    static const R& half_log_two_pi() {
        static const R v = log(2 * pi()) / 2;
        return v;
    }
};

// Neumaier-compensated accumulator. For the extended mode the compensation
// is redundant but harmless; summation order is always index order.
template <class T>
class KahanSum {
  public:
    KahanSum& operator+=(const T& x) {
        const T t = sum_ + x;
        using std::fabs;
        if (fabs(sum_) >= fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }
    T value() const { return sum_ + comp_; }

  private:
    T sum_{};
    T comp_{};
};

// x^e for machine integers, exact
inline unsigned long long upow(unsigned long long x, unsigned e) {
    unsigned long long r = 1;
    while (e--) r *= x;
    return r;
}

inline BigInt bigint_pow(const BigInt& x, unsigned e) {
    BigInt r = 1, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace symsq

#endif
