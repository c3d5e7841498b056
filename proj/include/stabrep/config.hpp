#ifndef STABREP_CONFIG_HPP
#define STABREP_CONFIG_HPP

#include <cstdint>

namespace stabrep {

inline constexpr const char* kVersion = "0.1.0";

// Runtime knobs shared by the CLI and the report layer. The seed drives
// every randomized procedure; reports embed the whole struct.
struct Config {
    long group_order_cap = 10000000;
    long cyclotomic_cap = 5040;
    uint64_t seed = 1;
    int samples = 50;
    int window_lo = 3;
    int window_hi = 7;
    long closure_dim_budget = 512;
};

} // namespace stabrep

#endif
