#include "symsq/config.hpp"

#include <fstream>
#include <sstream>

#include "symsq/errors.hpp"

namespace symsq {

const char* variant_choice_name(VariantChoice v) {
    switch (v) {
        case VariantChoice::Auto: return "auto";
        case VariantChoice::Paper: return "paper";
        case VariantChoice::Mobius: return "mobius";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_positive_int(const std::string& key, const std::string& val, long line) {
    long v;
    try {
        size_t used;
        v = std::stol(val, &used);
        if (used != val.size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("config: malformed integer for key '" + key + "'", line);
    }
    if (v <= 0) throw ParseError("config: key '" + key + "' must be positive", line);
    return v;
}

double parse_positive_real(const std::string& key, const std::string& val, long line) {
    double v;
    try {
        size_t used;
        v = std::stod(val, &used);
        if (used != val.size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("config: malformed number for key '" + key + "'", line);
    }
    if (!(v > 0)) throw ParseError("config: key '" + key + "' must be positive", line);
    return v;
}

} // namespace

Config parse_config(std::istream& in, const std::string& source_name) {
    Config cfg;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config: expected key=value in " + source_name, lineno);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "weight") {
            cfg.weight = static_cast<int>(parse_positive_int(key, val, lineno));
            if (cfg.weight % 2 != 0) throw ParseError("config: weight must be even", lineno);
        } else if (key == "precision") {
            if (val == "double")
                cfg.precision = Precision::Double;
            else if (val == "extended")
                cfg.precision = Precision::Extended;
            else
                throw ParseError("config: precision must be double|extended", lineno);
        } else if (key == "t_zeros") {
            cfg.t_zeros = static_cast<int>(parse_positive_int(key, val, lineno));
        } else if (key == "n_main") {
            cfg.n_main = static_cast<int>(parse_positive_int(key, val, lineno));
        } else if (key == "quad_nodes") {
            cfg.quad_nodes = static_cast<int>(parse_positive_int(key, val, lineno));
        } else if (key == "bracket_c") {
            cfg.bracket_c = parse_positive_real(key, val, lineno);
        } else if (key == "zeros_file") {
            if (val.empty()) throw ParseError("config: zeros_file must not be empty", lineno);
            cfg.zeros_file = val;
        } else if (key == "b_f_variant") {
            if (val == "auto")
                cfg.b_f_variant = VariantChoice::Auto;
            else if (val == "paper")
                cfg.b_f_variant = VariantChoice::Paper;
            else if (val == "mobius")
                cfg.b_f_variant = VariantChoice::Mobius;
            else
                throw ParseError("config: b_f_variant must be auto|paper|mobius", lineno);
        } else if (key == "output_dir") {
            if (val.empty()) throw ParseError("config: output_dir must not be empty", lineno);
            cfg.output_dir = val;
        } else {
            throw ParseError("config: unknown key '" + key + "'", lineno);
        }
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file: " + path);
    return parse_config(in, path);
}

} // namespace symsq
