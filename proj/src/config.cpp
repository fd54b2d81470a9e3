#include "sqz/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace sqz {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawConfig {
    std::optional<double> n_atoms, eta, g_hz, kappa_hz, kappa1_hz, kappa2_hz, gamma_hz, chi_hz,
        omega21_hz, omega_p_offset_hz, omega_prob_amp_sqrthz, omega_mw_amp_hz;
};

void range_check(const char* key, double v, double lo, double hi) {
    if (!(v >= lo) || !(v <= hi)) {
        throw ConfigError(std::string("config value out of range for key '") + key + "'");
    }
}

}  // namespace

PhysicalParams parse_config_text(const std::string& text, const std::string& origin) {
    RawConfig raw;
    std::map<std::string, std::optional<double>*> keys = {
        {"n_atoms", &raw.n_atoms},
        {"eta", &raw.eta},
        {"g_hz", &raw.g_hz},
        {"kappa_hz", &raw.kappa_hz},
        {"kappa1_hz", &raw.kappa1_hz},
        {"kappa2_hz", &raw.kappa2_hz},
        {"gamma_hz", &raw.gamma_hz},
        {"chi_hz", &raw.chi_hz},
        {"omega21_hz", &raw.omega21_hz},
        {"omega_p_offset_hz", &raw.omega_p_offset_hz},
        {"omega_prob_amp_sqrthz", &raw.omega_prob_amp_sqrthz},
        {"omega_mw_amp_hz", &raw.omega_mw_amp_hz},
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = keys.find(key);
        if (it == keys.end()) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            *it->second = v;
        } catch (const std::exception&) {
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": bad numeric value for '" + key + "'");
        }
    }

    PhysicalParams p = default_params();
    if (raw.n_atoms) {
        range_check("n_atoms", *raw.n_atoms, 1.0, 1e12);
        if (*raw.n_atoms != std::floor(*raw.n_atoms)) throw ConfigError("config key 'n_atoms' must be an integer");
        p.n_atoms = static_cast<std::int64_t>(*raw.n_atoms);
    }
    if (raw.eta) {
        range_check("eta", *raw.eta, 0.0, 1.0);
        p.eta = *raw.eta;
    }
    if (raw.g_hz) {
        range_check("g_hz", *raw.g_hz, 1e-3, 1e12);
        p.g = hz_to_rad(*raw.g_hz);
    }
    if (raw.gamma_hz) {
        range_check("gamma_hz", *raw.gamma_hz, 0.0, 1e12);
        p.gamma = hz_to_rad(*raw.gamma_hz);
    }
    if (raw.chi_hz) {
        range_check("chi_hz", *raw.chi_hz, 0.0, 1e12);
        p.chi = hz_to_rad(*raw.chi_hz);
    }
    if (raw.omega21_hz) {
        range_check("omega21_hz", *raw.omega21_hz, 1e3, 1e15);
        p.omega_21 = hz_to_rad(*raw.omega21_hz);
        p.omega_m = p.omega_21;  // resonant microwave by default
    }
    // mirror rates: either the total or the split, consistently
    if (raw.kappa1_hz || raw.kappa2_hz) {
        if (!(raw.kappa1_hz && raw.kappa2_hz)) {
            throw ConfigError("config keys 'kappa1_hz' and 'kappa2_hz' must be given together");
        }
        range_check("kappa1_hz", *raw.kappa1_hz, 0.0, 1e12);
        range_check("kappa2_hz", *raw.kappa2_hz, 0.0, 1e12);
        p.kappa_1 = hz_to_rad(*raw.kappa1_hz);
        p.kappa_2 = hz_to_rad(*raw.kappa2_hz);
        p.kappa = p.kappa_1 + p.kappa_2;
        if (raw.kappa_hz && std::abs(hz_to_rad(*raw.kappa_hz) - p.kappa) > 1e-9 * p.kappa) {
            throw ConfigError("config key 'kappa_hz' contradicts kappa1_hz + kappa2_hz");
        }
    } else if (raw.kappa_hz) {
        range_check("kappa_hz", *raw.kappa_hz, 1e-3, 1e12);
        p.kappa = hz_to_rad(*raw.kappa_hz);
        p.kappa_1 = 0.5 * p.kappa;
        p.kappa_2 = 0.5 * p.kappa;
    }
    if (raw.omega_prob_amp_sqrthz) {
        range_check("omega_prob_amp_sqrthz", *raw.omega_prob_amp_sqrthz, 0.0, 1e12);
        p.probe_amp = hz_to_rad(*raw.omega_prob_amp_sqrthz);
    }
    if (raw.omega_mw_amp_hz) {
        range_check("omega_mw_amp_hz", *raw.omega_mw_amp_hz, 0.0, 1e12);
        p.mw_amp = hz_to_rad(*raw.omega_mw_amp_hz);
    }
    // probe frequency: offset from the cavity; defaults to the upper dressed state
    p.omega_p = p.omega_c + (raw.omega_p_offset_hz ? hz_to_rad(*raw.omega_p_offset_hz) : p.collective_g());
    p.validate();
    return p;
}

PhysicalParams load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

std::string config_text(const PhysicalParams& p) {
    std::ostringstream out;
    out.precision(17);
    out << "n_atoms = " << p.n_atoms << "\n";
    out << "eta = " << p.eta << "\n";
    out << "g_hz = " << p.g / two_pi << "\n";
    out << "kappa1_hz = " << p.kappa_1 / two_pi << "\n";
    out << "kappa2_hz = " << p.kappa_2 / two_pi << "\n";
    out << "gamma_hz = " << p.gamma / two_pi << "\n";
    out << "chi_hz = " << p.chi / two_pi << "\n";
    out << "omega21_hz = " << p.omega_21 / two_pi << "\n";
    out << "omega_p_offset_hz = " << (p.omega_p - p.omega_c) / two_pi << "\n";
    out << "omega_prob_amp_sqrthz = " << p.probe_amp / two_pi << "\n";
    out << "omega_mw_amp_hz = " << p.mw_amp / two_pi << "\n";
    return out.str();
}

}  // namespace sqz
