#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sqz/core.hpp"
#include "sqz/params.hpp"

namespace sqz {

// Stored moment slots. First-order means, then photon and atom-photon second
// moments, then the 21 distinct-atom pair moments. Conjugate-only quantities
// (<a^dag>, <sigma^21>, <a sigma^22>, ...) are reached through lookup().
enum MomentIndex : std::size_t {
    kA,      // <a>
    kS12,    // <sigma^12>
    kS13,    // <sigma^13>
    kS23,    // <sigma^23>
    kS22,    // <sigma^22>
    kS33,    // <sigma^33>
    kAdA,    // <a^dag a>
    kAA,     // <a a>
    kAdS12,  // <a^dag sigma^12>
    kAdS13,
    kAdS23,
    kAdS22,
    kAdS33,
    kAS12,   // <a sigma^12>
    kAS13,
    kAS23,
    kP1212,  // <sigma_1^12 sigma_2^12>
    kP2222,
    kP2323,
    kP3333,
    kP1313,
    kP1221,
    kP1213,
    kP2113,
    kP3223,
    kP3213,
    kP1232,
    kP1223,
    kP3113,
    kP2313,
    kP2213,
    kP3313,
    kP3332,
    kP2233,
    kP2223,
    kP2212,
    kP3312,
    kNumMoments
};

inline constexpr std::array<const char*, kNumMoments> kMomentNames = {
    "a", "s12", "s13", "s23", "s22", "s33", "ada", "aa",
    "ad_s12", "ad_s13", "ad_s23", "ad_s22", "ad_s33", "a_s12", "a_s13", "a_s23",
    "s12_s12", "s22_s22", "s23_s23", "s33_s33", "s13_s13", "s12_s21", "s12_s13",
    "s21_s13", "s32_s23", "s32_s13", "s12_s32", "s12_s23", "s31_s13", "s23_s13",
    "s22_s13", "s33_s13", "s33_s32", "s22_s33", "s22_s23", "s22_s12", "s33_s12"};

// Slots whose operators are self-adjoint; their values are real on any state
// satisfying the conjugation constraints.
inline constexpr std::array<MomentIndex, 9> kSelfAdjoint = {
    kS22, kS33, kAdA, kP1221, kP3113, kP3223, kP2222, kP3333, kP2233};

struct FrameWeight {
    int n_p;  // multiples of omega_p
    int n_m;  // multiples of omega_m
};

// Rotating-frame weights: the stored (slow) variable equals the lab-frame
// moment times exp(i (n_p w_p + n_m w_m) t). Products add weights, adjoints
// negate them.
inline constexpr std::array<FrameWeight, kNumMoments> kFrameWeights = {{
    {1, 0},  {0, 1},  {1, 1},  {1, 0},  {0, 0},  {0, 0},  {0, 0},  {2, 0},
    {-1, 1}, {0, 1},  {0, 0},  {-1, 0}, {-1, 0}, {1, 1},  {2, 1},  {2, 0},
    {0, 2},  {0, 0},  {2, 0},  {0, 0},  {2, 2},  {0, 0},  {1, 2},  {1, 0},
    {0, 0},  {0, 1},  {-1, 1}, {1, 1},  {0, 0},  {2, 1},  {1, 1},  {1, 1},
    {-1, 0}, {0, 0},  {1, 0},  {0, 1},  {0, 1},
}};

struct MomentState {
    std::array<cx, kNumMoments> v{};

    cx& operator[](std::size_t i) { return v[i]; }
    const cx& operator[](std::size_t i) const { return v[i]; }
    cx* data() { return v.data(); }
    const cx* data() const { return v.data(); }
    static constexpr std::size_t size() { return kNumMoments; }

    bool is_finite() const;
    // Zeroes the imaginary parts of self-adjoint slots; returns the largest
    // magnitude removed.
    double repair_self_adjoint();
};

// Retrieves a moment by symbol, closing the stored set under conjugation and
// atom exchange. Symbols: "a", "ad", "ada", "aa", "adad", "s21", "ad_s32",
// "a_s22", "s21_s12", "s11", ... Unknown symbols throw LookupError.
cx lookup(const MomentState& state, std::string_view symbol);

// Symbol of the conjugate moment ("s12_s23" -> "s21_s32").
std::string conjugate_symbol(std::string_view symbol);

// All symbols lookup() accepts (for exhaustive catalog tests).
const std::vector<std::string>& moment_catalog();

// --- initial states (factorized second moments, cavity vacuum) ---

// Product state cos(theta/2)|1> + sin(theta/2) e^{-i azimuth}|2> per atom, so
// the collective spin points along (sin theta cos az, sin theta sin az, -cos theta).
MomentState init_product_state(const PhysicalParams& p, double polar, double azimuth);

// Equatorial spin coherent state with the collective spin along `azimuth`.
MomentState init_spin_coherent(const PhysicalParams& p, double azimuth);

// Every atom in |1>: J_z = -N/2.
MomentState init_all_down(const PhysicalParams& p);

}  // namespace sqz
