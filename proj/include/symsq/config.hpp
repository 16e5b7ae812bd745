#ifndef SYMSQ_CONFIG_HPP
#define SYMSQ_CONFIG_HPP

#include <iosfwd>
#include <string>

#include "symsq/coefficients.hpp"
#include "symsq/numeric.hpp"

namespace symsq {

enum class VariantChoice { Auto, Paper, Mobius };

const char* variant_choice_name(VariantChoice v);

// Runtime configuration, loadable from a key=value file ('#' comments).
// Missing keys keep the documented defaults; unknown keys are rejected.
struct Config {
    int weight = 12;
    Precision precision = Precision::Double;
    int t_zeros = 30;
    int n_main = 500;
    int quad_nodes = 512;
    double bracket_c = 1.0;
    std::string zeros_file = SYMSQ_DATA_DIR "/zeta_zeros.txt";
    VariantChoice b_f_variant = VariantChoice::Auto;
    std::string output_dir = ".";
};

Config parse_config(std::istream& in, const std::string& source_name = "config");
Config parse_config_file(const std::string& path);

} // namespace symsq

#endif
