#pragma once

#include <gmpxx.h>

#include <string>

#include "siltlab/errors.hpp"

namespace siltlab {

// Exact rational scalar. mpq_class keeps values in canonical reduced form.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DimensionMismatch("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace siltlab
