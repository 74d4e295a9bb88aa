#pragma once

#include <string>

#include "brauer/errors.hpp"

namespace brauer {

/// Non-negative dimension value that may be infinite; infinity prints as
/// "infinity".
struct Dim {
    bool finite = true;
    long value = 0;

    static Dim of(long v) { return {true, v}; }
    static Dim infinity() { return {false, 0}; }

    bool operator==(const Dim&) const = default;
    bool operator<=(const Dim& o) const {
        if (!o.finite) return true;
        return finite && value <= o.value;
    }

    std::string str() const { return finite ? std::to_string(value) : "infinity"; }
};

struct DimensionReport {
    Dim domdim;
    Dim gorenstein;
    Dim gldim;
    bool higher_auslander = false;

    bool operator==(const DimensionReport&) const = default;
};

} // namespace brauer
