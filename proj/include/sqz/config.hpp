#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "sqz/params.hpp"

namespace sqz {

// Line-oriented `key = value` configuration. Keys mirror the parameter table
// in ordinary frequencies (Hz); missing keys take the defaults, unknown keys
// are errors. '#' starts a comment.
//
//   n_atoms, eta, g_hz, kappa_hz, kappa1_hz, kappa2_hz, gamma_hz, chi_hz,
//   omega21_hz, omega_p_offset_hz (probe offset from the cavity),
//   omega_prob_amp_sqrthz, omega_mw_amp_hz
PhysicalParams load_config(const std::filesystem::path& path);

// Same parser over in-memory text (used by the loader and the tests).
PhysicalParams parse_config_text(const std::string& text, const std::string& origin = "<config>");

// Resolved parameters as config text (Hz units), suitable for reloading.
std::string config_text(const PhysicalParams& p);

}  // namespace sqz
