#pragma once

// Values reported by the two laboratories, kept as comparison targets for the
// simulator and the report. Nothing in the library computes from these except
// the cross-bound and W checks that are defined on measured inputs.

#include <array>
#include <cstddef>
#include <string_view>

namespace exbound::published {

struct Value {
  double value;
  double error;
};

// Bell-CHSH events u0..u7 (polarization-entangled photon pairs).
inline constexpr std::array<Value, 8> kChshProbabilities{{
    {0.4262, 0.0031},
    {0.4239, 0.0057},
    {0.4313, 0.0069},
    {0.4319, 0.0058},
    {0.4259, 0.0031},
    {0.4257, 0.0045},
    {0.4226, 0.0028},
    {0.4260, 0.0031},
}};
inline constexpr double kChshExpectedEvent = 0.4267;
inline constexpr Value kS{3.413, 0.013};
inline constexpr double kSExpected = 3.4142;

// NC events v0..v7 (single-photon orbital angular momentum, d = 5).
inline constexpr std::array<Value, 8> kNcProbabilities{{
    {0.2809, 0.0038},
    {0.2854, 0.0038},
    {0.2857, 0.0038},
    {0.3110, 0.0039},
    {0.2983, 0.0038},
    {0.2833, 0.0036},
    {0.2810, 0.0036},
    {0.3095, 0.0038},
}};
inline constexpr double kNcExpectedEvent = 0.2929;
inline constexpr Value kR{2.335, 0.011};
inline constexpr double kRExpected = 2.3431;

// Bounds derived from the measured S and R.
inline constexpr Value kRBound{2.344, 0.009};
inline constexpr Value kSBound{3.426, 0.016};

// W1..W16 as reported.
inline constexpr std::array<Value, 16> kW{{
    {0.997, 0.016}, {0.997, 0.016}, {0.996, 0.016}, {0.996, 0.016},
    {0.996, 0.016}, {0.996, 0.016}, {0.996, 0.016}, {0.996, 0.016},
    {0.996, 0.016}, {0.996, 0.016}, {0.996, 0.016}, {0.997, 0.016},
    {0.996, 0.016}, {0.996, 0.016}, {0.996, 0.016}, {0.996, 0.016},
}};

// p(1 | mu_j ; e_i) exclusivity checks.
struct Check {
  std::size_t measured;  // j
  std::size_t prepared;  // i
  double value;
  double error;
};

inline constexpr std::array<Check, 32> kChshChecks{{
    {0, 0, 0.997916, 0.000076}, {4, 0, 1.8e-6, 1.9e-6},     {3, 0, 0.000635, 0.000030}, {5, 0, 0.000373, 0.000024},
    {3, 3, 0.997823, 0.000059}, {7, 3, 2.2e-6, 1.9e-6},     {6, 3, 0.000639, 0.000040}, {0, 3, 0.000437, 0.000017},
    {6, 6, 0.997484, 0.000062}, {2, 6, 3.3e-6, 2.5e-6},     {3, 6, 0.000651, 0.000037}, {1, 6, 0.000606, 0.000032},
    {1, 1, 0.996928, 0.000096}, {5, 1, 1.1e-6, 1.2e-6},     {6, 1, 0.000666, 0.000045}, {4, 1, 0.000937, 0.000040},
    {4, 4, 0.995531, 0.000075}, {0, 4, 6.4e-6, 2.7e-6},     {1, 4, 0.001419, 0.000040}, {7, 4, 0.000864, 0.000027},
    {7, 7, 0.992080, 0.000120}, {3, 7, 1.49e-5, 5.8e-6},    {4, 7, 0.001816, 0.000047}, {2, 7, 0.000637, 0.000027},
    {2, 2, 0.995735, 0.000098}, {6, 2, 3.3e-6, 2.1e-6},     {7, 2, 0.000477, 0.000022}, {5, 2, 0.001469, 0.000026},
    {5, 5, 0.996841, 0.000066}, {1, 5, 2.9e-6, 2.1e-6},     {2, 5, 0.000893, 0.000041}, {0, 5, 0.001314, 0.000051},
}};

inline constexpr std::array<Check, 40> kNcChecks{{
    {0, 0, 0.9920, 0.0010}, {1, 0, 0.0026, 0.0007}, {2, 0, 0.0026, 0.0007}, {6, 0, 0.0014, 0.0005}, {7, 0, 0.0012, 0.0005},
    {1, 1, 0.9930, 0.0010}, {0, 1, 0.0022, 0.0007}, {2, 1, 0.0040, 0.0009}, {3, 1, 0.0007, 0.0004}, {7, 1, 0.0029, 0.0008},
    {2, 2, 0.9840, 0.0010}, {0, 2, 0.0018, 0.0006}, {1, 2, 0.0019, 0.0006}, {3, 2, 0.0033, 0.0008}, {4, 2, 0.007, 0.001},
    {3, 3, 0.9890, 0.0010}, {1, 3, 0.0040, 0.0009}, {2, 3, 0.0026, 0.0007}, {4, 3, 0.006, 0.001},   {5, 3, 0.0015, 0.0005},
    {4, 4, 0.9910, 0.0010}, {2, 4, 0.0008, 0.0004}, {3, 4, 0.0019, 0.0006}, {5, 4, 0.0009, 0.0005}, {6, 4, 0.008, 0.001},
    {5, 5, 0.9860, 0.0010}, {3, 5, 0.0030, 0.0008}, {4, 5, 0.0018, 0.0006}, {6, 5, 0.007, 0.001},   {7, 5, 0.0007, 0.0004},
    {6, 6, 0.9870, 0.0010}, {0, 6, 0.0028, 0.0008}, {4, 6, 0.0007, 0.0009}, {5, 6, 0.0041, 0.0009}, {7, 6, 0.0014, 0.0005},
    {7, 7, 0.9960, 0.0010}, {0, 7, 0.006, 0.001},   {1, 7, 0.0029, 0.0008}, {5, 7, 0.0009, 0.0005}, {6, 7, 0.0043, 0.0009},
}};

// Complete NC measurement bases as printed (components rounded to 3 places).
struct BasisRow {
  std::string_view state;  // "v0" ... or "w1" ...
  std::array<double, 5> components;
};

struct PrintedBasis {
  std::string_view name;  // roman numeral
  std::array<BasisRow, 5> rows;
};

inline constexpr std::array<double, 5> kW_a{0.202, -0.787, 0.213, 0.202, 0.503};
inline constexpr std::array<double, 5> kW_b{0.494, -0.0855, -0.782, -0.345, 0.137};
inline constexpr std::array<double, 5> kV0{1, 0, 0, 0, 0};
inline constexpr std::array<double, 5> kV1{0, 1, 0, 0, 0};
inline constexpr std::array<double, 5> kV2{0, 0, 1, 0, 0};
inline constexpr std::array<double, 5> kV3{0.586, 0, 0, 0.644, -0.493};
inline constexpr std::array<double, 5> kV4{0.172, 0.586, 0, 0.377, 0.697};
inline constexpr std::array<double, 5> kV5{0.586, 0.172, 0.586, -0.533, 0};
inline constexpr std::array<double, 5> kV6{0, -0.586, -0.172, -0.377, 0.697};
inline constexpr std::array<double, 5> kV7{0, 0, -0.586, -0.644, -0.493};

inline constexpr std::array<PrintedBasis, 8> kBases{{
    {"I", {{{"v0", kV0}, {"v6", kV6}, {"v7", kV7}, {"w1", {0, -0.806, 0.206, 0.206, -0.515}},
            {"w2", {0, 0.086, 0.76, -0.63, -0.082}}}}},
    {"II", {{{"v0", kV0}, {"v1", kV1}, {"v2", kV2}, {"w3", {0, 0, 0, 0.707, 0.707}},
             {"w4", {0, 0, 0, 0.707, -0.707}}}}},
    {"III", {{{"v3", kV3}, {"v4", kV4}, {"v5", kV5}, {"w5", kW_a}, {"w6", kW_b}}}},
    {"IV", {{{"v0", kV0}, {"v1", kV1}, {"v7", kV7}, {"w7", kW_a}, {"w8", kW_b}}}},
    {"V", {{{"v1", kV1}, {"v2", kV2}, {"v3", kV3}, {"w9", kW_a}, {"w10", kW_b}}}},
    {"VI", {{{"v2", kV2}, {"v3", kV3}, {"v4", kV4}, {"w11", kW_a}, {"w12", kW_b}}}},
    {"VII", {{{"v4", kV4}, {"v5", kV5}, {"v6", kV6}, {"w13", kW_a}, {"w14", kW_b}}}},
    {"VIII", {{{"v5", kV5}, {"v6", kV6}, {"v7", kV7}, {"w15", kW_a}, {"w16", kW_b}}}},
}};

}  // namespace exbound::published
