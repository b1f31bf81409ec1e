#pragma once

#include <string>

#include "dopt/errors.hpp"

namespace dopt {

// Saturated design classes: mean + k main effects + all pivot interactions,
// with 0, 1, n, or 2k extra main effects.
enum class DesignClass { g, g1, gn, g2k };

inline std::string class_label(DesignClass c) {
    switch (c) {
        case DesignClass::g: return "g";
        case DesignClass::g1: return "g1";
        case DesignClass::gn: return "gn";
        case DesignClass::g2k: return "g2k";
    }
    return "?";
}

inline DesignClass class_from_label(const std::string& s) {
    if (s == "g") return DesignClass::g;
    if (s == "g1") return DesignClass::g1;
    if (s == "gn") return DesignClass::gn;
    if (s == "g2k") return DesignClass::g2k;
    throw ParseError("unknown design class '" + s + "'");
}

} // namespace dopt
