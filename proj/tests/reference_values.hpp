#pragma once

#include <cstdint>

// Frozen high-precision reference values. Computed independently with
// 50-digit arithmetic (mpmath) before the library code existed; tests compare
// against these, never against the library's own output.

namespace refs {

inline constexpr double kBesselArgs[6] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

inline constexpr double kK0[6] = {
    2.4270690247020166125,    // x = 0.1
    0.92441907122766586178,   // x = 0.5
    0.42102443824070833334,   // x = 1
    0.11389387274953343565,   // x = 2
    3.6910983340425942747e-3, // x = 5
    1.7780062316167651811e-5, // x = 10
};

inline constexpr double kK1[6] = {
    9.8538447808706061348,    // x = 0.1
    1.6564411200033008937,    // x = 0.5
    0.60190723019723457474,   // x = 1
    0.13986588181652242728,   // x = 2
    4.0446134454521642084e-3, // x = 5
    1.8648773453825584597e-5, // x = 10
};

inline constexpr double kK2[6] = {
    199.50396464211413931,    // x = 0.1
    7.5501835512408694366,    // x = 0.5
    1.6248388986351774828,    // x = 1
    0.25375975456605586294,   // x = 2
    5.3089437122234599581e-3, // x = 5
    2.1509817006932768731e-5, // x = 10
};

// K2(x) / (sqrt(pi/(2x)) e^{-x}) at large x; the bracket of the asymptotic
// expansion 1 + 15/(8x) + ...
inline constexpr double kK2AsymBracket10 = 1.1954229690844340769;
inline constexpr double kK2AsymBracket30 = 1.0634004369520779415;

// Interaction kernel in natural units (m = c = hbar = 1) at z = 5 Compton
// lengths: -(1/(2 pi^2)) K2(5)/5.
inline constexpr double kKernelAtFiveCompton = -5.3790846081302759614e-5;

// SplitMix64 raw outputs.
inline constexpr std::uint64_t kSplitMixSeed0[4] = {
    0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL,
    0x06c45d188009454fULL, 0xf88bb8a8724c81ecULL};
inline constexpr std::uint64_t kSplitMixSeed42[4] = {
    0xbdd732262feb6e95ULL, 0x28efe333b266f103ULL,
    0x47526757130f9f52ULL, 0x581ce1ff0e4ae394ULL};
inline constexpr std::uint64_t kSplitMixSeed123456789[4] = {
    0x223c74d93deb7679ULL, 0x7a91dd183971ee2eULL,
    0x310e0831409afde5ULL, 0x851e061616a5bee5ULL};

// Doubles produced by uniform() for seed 42: (next() >> 11) * 2^-53.
inline constexpr double kSplitMixUniformSeed42[4] = {
    0.7415648787718233, 0.1599103928769201,
    0.27860113025513866, 0.34419071652363753};

}  // namespace refs
