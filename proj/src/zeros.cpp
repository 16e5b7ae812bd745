#include "symsq/zeros.hpp"

namespace symsq {

double completed_zeta_line(double t) {
    using P = DoubleMode;
    std::complex<double> s{0.5, t};
    auto lg = log_gamma<P>(s / 2.0);
    auto zv = zeta<P>(s);
    std::complex<double> lam = std::exp(-s / 2.0 * std::log(M_PI) + lg.value) * zv.value;
    // Lambda(1/2+it) is real; Im is roundoff
    return lam.real();
}

std::vector<double> scan_zero_seeds(double t_max, double step) {
    std::vector<double> seeds;
    double t_prev = 0.1;
    double f_prev = completed_zeta_line(t_prev);
    for (double t = t_prev + step; t <= t_max + 1e-12; t += step) {
        double f = completed_zeta_line(t);
        if ((f_prev < 0) != (f < 0)) {
            double a = t_prev, b = t, fa = f_prev;
            for (int i = 0; i < 40; ++i) {
                double m = 0.5 * (a + b);
                double fm = completed_zeta_line(m);
                if ((fa < 0) != (fm < 0))
                    b = m;
                else {
                    a = m;
                    fa = fm;
                }
            }
            seeds.push_back(0.5 * (a + b));
        }
        t_prev = t;
        f_prev = f;
    }
    return seeds;
}

} // namespace symsq
