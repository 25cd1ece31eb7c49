#pragma once

#include <gmpxx.h>

#include <string>

#include "maninalg/errors.hpp"

namespace manin {

// Exact rational scalar. GMP keeps values canonical under arithmetic as long
// as every value starts out canonical, so construction goes through rat().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: '" + s + "'");
    }
}

} // namespace manin
