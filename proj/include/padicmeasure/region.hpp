#pragma once

namespace padicmeasure {

/// Domain of integration inside Z_p.
enum class Region {
    zp,              // all of Z_p
    units,           // Z_p^x, residues prime to p
    multiples_of_p,  // p Z_p
};

inline const char* to_string(Region r) noexcept {
    switch (r) {
        case Region::zp: return "zp";
        case Region::units: return "units";
        case Region::multiples_of_p: return "pzp";
    }
    return "?";
}

}  // namespace padicmeasure
