#include "sqz/moments.hpp"

#include <cmath>
#include <unordered_map>

namespace sqz {

namespace {

struct PairDef {
    MomentIndex slot;
    int ab;  // two-digit atom operator, e.g. 12 for sigma^12
    int cd;
};

// The 21 stored distinct-atom pair moments (operators on different atoms
// commute, so the order inside a symbol is free up to atom exchange).
constexpr std::array<PairDef, 21> kPairDefs = {{
    {kP1212, 12, 12}, {kP2222, 22, 22}, {kP2323, 23, 23}, {kP3333, 33, 33},
    {kP1313, 13, 13}, {kP1221, 12, 21}, {kP1213, 12, 13}, {kP2113, 21, 13},
    {kP3223, 32, 23}, {kP3213, 32, 13}, {kP1232, 12, 32}, {kP1223, 12, 23},
    {kP3113, 31, 13}, {kP2313, 23, 13}, {kP2213, 22, 13}, {kP3313, 33, 13},
    {kP3332, 33, 32}, {kP2233, 22, 33}, {kP2223, 22, 23}, {kP2212, 22, 12},
    {kP3312, 33, 12},
}};

int reversed(int lm) { return (lm % 10) * 10 + lm / 10; }

struct Resolved {
    MomentIndex slot;
    bool conjugated;
};

Resolved resolve_pair(int ab, int cd, std::string_view symbol) {
    for (const auto& d : kPairDefs) {
        if ((ab == d.ab && cd == d.cd) || (ab == d.cd && cd == d.ab)) return {d.slot, false};
    }
    const int ba = reversed(ab), dc = reversed(cd);
    for (const auto& d : kPairDefs) {
        if ((ba == d.ab && dc == d.cd) || (ba == d.cd && dc == d.ab)) return {d.slot, true};
    }
    throw LookupError("unknown moment symbol: " + std::string(symbol));
}

Resolved resolve_photon_atom(bool dagger, int lm, std::string_view symbol) {
    if (dagger) {
        switch (lm) {
            case 12: return {kAdS12, false};
            case 13: return {kAdS13, false};
            case 23: return {kAdS23, false};
            case 22: return {kAdS22, false};
            case 33: return {kAdS33, false};
            case 21: return {kAS12, true};   // <a^dag s21> = conj <a s12>
            case 31: return {kAS13, true};
            case 32: return {kAS23, true};
        }
    } else {
        switch (lm) {
            case 12: return {kAS12, false};
            case 13: return {kAS13, false};
            case 23: return {kAS23, false};
            case 22: return {kAdS22, true};  // <a s22> = conj <a^dag s22>
            case 33: return {kAdS33, true};
            case 21: return {kAdS12, true};
            case 31: return {kAdS13, true};
            case 32: return {kAdS23, true};
        }
    }
    throw LookupError("unknown moment symbol: " + std::string(symbol));
}

Resolved resolve_single_atom(int lm, std::string_view symbol) {
    switch (lm) {
        case 12: return {kS12, false};
        case 13: return {kS13, false};
        case 23: return {kS23, false};
        case 22: return {kS22, false};
        case 33: return {kS33, false};
        case 21: return {kS12, true};
        case 31: return {kS13, true};
        case 32: return {kS23, true};
    }
    throw LookupError("unknown moment symbol: " + std::string(symbol));
}

struct ParsedSymbol {
    int nc = 0;                // a^dag factors
    int na = 0;                // a factors
    std::vector<int> atoms;    // two-digit sigma codes, in symbol order
};

ParsedSymbol parse_symbol(std::string_view symbol) {
    ParsedSymbol out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < symbol.size()) {
        std::size_t end = symbol.find('_', pos);
        if (end == std::string_view::npos) end = symbol.size();
        std::string_view tok = symbol.substr(pos, end - pos);
        if (first && (tok == "a" || tok == "ad" || tok == "ada" || tok == "aa" || tok == "adad")) {
            if (tok == "a") out.na = 1;
            else if (tok == "ad") out.nc = 1;
            else if (tok == "ada") out.nc = out.na = 1;
            else if (tok == "aa") out.na = 2;
            else out.nc = 2;
        } else if (tok.size() == 3 && tok[0] == 's' && tok[1] >= '1' && tok[1] <= '3' &&
                   tok[2] >= '1' && tok[2] <= '3') {
            out.atoms.push_back((tok[1] - '0') * 10 + (tok[2] - '0'));
        } else {
            throw LookupError("unknown moment symbol: " + std::string(symbol));
        }
        first = false;
        pos = end + 1;
    }
    return out;
}

}  // namespace

bool MomentState::is_finite() const {
    for (const cx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double MomentState::repair_self_adjoint() {
    double worst = 0.0;
    for (MomentIndex i : kSelfAdjoint) {
        worst = std::max(worst, std::abs(v[i].imag()));
        v[i] = cx(v[i].real(), 0.0);
    }
    return worst;
}

cx lookup(const MomentState& state, std::string_view symbol) {
    const ParsedSymbol ps = parse_symbol(symbol);
    const std::size_t order = ps.nc + ps.na + ps.atoms.size();
    if (ps.atoms.size() == 1 && ps.atoms[0] == 11 && ps.nc == 0 && ps.na == 0) {
        return cx(1.0, 0.0) - state[kS22] - state[kS33];  // population closure
    }
    Resolved r;
    if (order == 1 && ps.atoms.empty()) {
        r = {kA, ps.nc == 1};
    } else if (order == 1) {
        r = resolve_single_atom(ps.atoms[0], symbol);
    } else if (order == 2 && ps.atoms.empty()) {
        if (ps.nc == 1 && ps.na == 1) r = {kAdA, false};
        else if (ps.na == 2) r = {kAA, false};
        else r = {kAA, true};
    } else if (order == 2 && ps.atoms.size() == 1) {
        r = resolve_photon_atom(ps.nc == 1, ps.atoms[0], symbol);
    } else if (order == 2) {
        r = resolve_pair(ps.atoms[0], ps.atoms[1], symbol);
    } else {
        throw LookupError("unknown moment symbol: " + std::string(symbol));
    }
    const cx value = state[r.slot];
    return r.conjugated ? std::conj(value) : value;
}

std::string conjugate_symbol(std::string_view symbol) {
    const ParsedSymbol ps = parse_symbol(symbol);
    std::string out;
    const int nc = ps.na, na = ps.nc;  // dagger swaps creation and annihilation
    if (nc == 1 && na == 0) out = "ad";
    else if (nc == 0 && na == 1) out = "a";
    else if (nc == 1 && na == 1) out = "ada";
    else if (nc == 2) out = "adad";
    else if (na == 2) out = "aa";
    for (int lm : ps.atoms) {
        if (!out.empty()) out += '_';
        out += 's';
        out += static_cast<char>('0' + lm % 10);
        out += static_cast<char>('0' + lm / 10);
    }
    return out;
}

const std::vector<std::string>& moment_catalog() {
    static const std::vector<std::string> catalog = [] {
        std::vector<std::string> c = {"a", "ad", "ada", "aa", "adad"};
        const std::array<const char*, 8> at = {"s12", "s13", "s23", "s22", "s33", "s21", "s31", "s32"};
        c.emplace_back("s11");
        for (const char* t : at) c.emplace_back(t);
        for (const char* t : at) c.emplace_back(std::string("ad_") + t);
        for (const char* t : at) c.emplace_back(std::string("a_") + t);
        for (const char* t1 : at)
            for (const char* t2 : at) c.emplace_back(std::string(t1) + "_" + t2);
        return c;
    }();
    return catalog;
}

MomentState init_product_state(const PhysicalParams& p, double polar, double azimuth) {
    p.validate();
    MomentState st;
    const double c1 = std::cos(0.5 * polar);
    const cx c2 = std::sin(0.5 * polar) * std::exp(-im * azimuth);
    // single-atom moments of c1|1> + c2|2>
    const cx s12 = c1 * c2;
    const double s22 = std::norm(c2);
    st[kS12] = s12;
    st[kS22] = s22;
    auto m1 = [&](int lm) -> cx {
        switch (lm) {
            case 12: return s12;
            case 21: return std::conj(s12);
            case 22: return s22;
            default: return 0.0;  // anything touching |3>
        }
    };
    for (const auto& d : kPairDefs) st[d.slot] = m1(d.ab) * m1(d.cd);
    return st;
}

MomentState init_spin_coherent(const PhysicalParams& p, double azimuth) {
    return init_product_state(p, 0.5 * std::numbers::pi, azimuth);
}

MomentState init_all_down(const PhysicalParams& p) {
    return init_product_state(p, 0.0, 0.0);
}

}  // namespace sqz
